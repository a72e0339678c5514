"""Closed formulae for weak Roman domination of lexicographic products.

Run:  python demos/product_formulas.py

The second factor H only enters these formulae through its domination
number, so the demo uses the smallest graph with domination number four,
the empty graph on four vertices, to keep every product at desk scale.
"""

from weakroman import closed_formula, corona, lexicographic, reduce_P4, solve
from weakroman import generators as gen

H = gen.empty(4)  # gamma(H) = 4


def show(label, got, want):
    mark = "ok" if got == want else "MISMATCH"
    print(f"  {label:28s} solver={got:<3d} formula={want:<3d} {mark}")


def main():
    print(f"H = empty graph on 4 vertices, gamma(H) = {solve('gamma', H).value}\n")

    print("paths: gamma_r(P_n o H) follows n mod 4")
    for n in range(2, 7):
        show(f"P_{n} o H", solve("gamma_r", lexicographic(gen.path(n), H)).value,
             closed_formula("gamma_r_lex_path", n))

    print("\ncycles: gamma_r(C_n o H) = n")
    for n in range(3, 8):
        show(f"C_{n} o H", solve("gamma_r", lexicographic(gen.cycle(n), H)).value, n)

    print("\ncombs: gamma_r(T_n o H) = 2*floor(2n/3), the two-thirds bound is tight")
    for n in (4, 5, 6, 7):
        show(f"T_{n} o H", solve("gamma_r", lexicographic(gen.comb(n), H)).value,
             closed_formula("gamma_r_lex_comb", n))

    print("\nstars: gamma_r(K_{1,n} o H) = 4 once gamma(H) >= 4")
    for n in (3, 4, 5):
        show(f"K_1,{n} o H", solve("gamma_r", lexicographic(gen.star(n), H)).value, 4)

    print("\nthe weight-4 contraction: removing a degree-2 induced 4-path")
    print("drops the product value by exactly 4")
    g = gen.path(7)
    red = reduce_P4(g, (1, 2, 3, 4))
    lhs = solve("gamma_r", lexicographic(g, H)).value
    rhs = solve("gamma_r", lexicographic(red.graph, H)).value
    print(f"  gamma_r(P_7 o H) = {lhs}; reduced graph on {red.graph.n} vertices "
          f"gives {rhs} + 4 = {rhs + 4}")

    print("\ncorona products: gamma_r = 2*gamma_t = 2*rho = 2|V(G1)|")
    for g1, g2, tag in ((gen.path(2), gen.empty(2), "P_2 (.) N_2"),
                        (gen.path(3), gen.empty(2), "P_3 (.) N_2")):
        p = corona(g1, g2)
        print(f"  {tag:12s} gamma_r={solve('gamma_r', p).value} "
              f"gamma_t={solve('gamma_t', p).value} rho={solve('rho', p).value}")


if __name__ == "__main__":
    main()
