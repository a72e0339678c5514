"""Solvers: legion-function predicates, exact values, certificates, oracle
agreement, enumeration of optima, determinism across shard counts."""

import pytest

from weakroman import (
    GraphError,
    LegionFunction,
    SolverConfig,
    UndefinedInvariantError,
    enumerate_optimal_wrdf,
    is_dominating,
    is_rdf,
    is_roman_graph,
    is_secure_dominating,
    is_undefended,
    is_weak_roman_graph,
    is_wrdf,
    lexicographic,
    oracle,
    random_connected,
    satisfies_property_p,
    solve,
)
from weakroman import generators as gen
from weakroman.graph import Graph, is_2packing, is_double_total_dominating, is_total_dominating


# -- legion functions and raw predicates -------------------------------------


def test_legion_function_basics():
    f = LegionFunction.from_values((0, 2, 1, 0))
    assert f.weight == 3
    assert sorted(f.v0) == [0, 3] and sorted(f.v1) == [2] and sorted(f.v2) == [1]
    assert f.values() == (0, 2, 1, 0)
    assert f == LegionFunction.from_sets(4, [2], [1])
    with pytest.raises(GraphError):
        LegionFunction.from_sets(4, [1], [1])
    with pytest.raises(GraphError):
        LegionFunction.from_values((0, 3))


def test_is_undefended():
    g = gen.path(3)
    zero = LegionFunction.from_values((0, 0, 0))
    assert all(is_undefended(g, zero, v) for v in range(3))
    f = LegionFunction.from_values((0, 1, 0))
    assert not any(is_undefended(g, f, v) for v in range(3))
    far = LegionFunction.from_values((1, 0, 0))
    assert is_undefended(g, far, 2)
    tree = gen.fig1_tree()
    placed = LegionFunction.from_sets(6, [2], [0])
    assert not is_undefended(tree, placed, 3)


def test_is_wrdf_fig1_placements():
    tree = gen.fig1_tree()
    # the two drawn optimal placements: 2 on the degree-3 vertex plus 1 on
    # either vertex of the long leg's far edge
    assert is_wrdf(tree, LegionFunction.from_sets(6, [2], [0]))
    assert is_wrdf(tree, LegionFunction.from_sets(6, [3], [0]))
    assert not is_wrdf(tree, LegionFunction.from_sets(6, [1], [0]))  # leaf 3 breaks


def test_is_wrdf_edge_cases():
    assert not is_wrdf(gen.complete(1), LegionFunction.from_values((0,)))
    assert is_wrdf(gen.complete(1), LegionFunction.from_values((1,)))
    for g in (gen.path(4), gen.cycle(5), gen.fig1_tree()):
        assert not is_wrdf(g, LegionFunction.from_sets(g.n, (), ()))
        assert is_wrdf(g, LegionFunction.from_sets(g.n, range(g.n), ()))
    # no weight-2 function secures a path on seven vertices
    p7 = gen.path(7)
    for a in range(7):
        assert not is_wrdf(p7, LegionFunction.from_sets(7, (), (a,)))
        for b in range(a + 1, 7):
            assert not is_wrdf(p7, LegionFunction.from_sets(7, (a, b), ()))


def test_is_rdf_examples():
    tree = gen.fig1_tree()
    assert is_rdf(tree, LegionFunction.from_sets(6, (), (0, 2)))
    assert is_rdf(tree, LegionFunction.from_values((1,) * 6))
    assert not is_rdf(tree, LegionFunction.from_sets(6, [2], [0]))  # optimal WRDF is not an RDF


def test_property_p():
    star = gen.star(4)
    assert satisfies_property_p(star, 0)
    p4 = gen.path(4)
    assert satisfies_property_p(p4, 0)
    c7 = gen.cycle(7)
    assert not any(satisfies_property_p(c7, v) for v in range(7))


# -- solve: fixed values ------------------------------------------------------


@pytest.mark.parametrize("invariant,builder,value", [
    ("gamma_r", lambda: gen.path(7), 3),
    ("gamma_r", lambda: gen.complete(6), 1),
    ("gamma_t", lambda: gen.path(7), 4),
    ("rho", lambda: gen.path(7), 3),
    ("gamma_r", lambda: gen.fig4_twocycles(), 4),
    ("gamma_t", lambda: gen.fig4_twocycles(), 5),
    ("gamma_2t", lambda: gen.grs(4, 4), 5),
    ("gamma_r", lambda: gen.complete_bipartite(3, 3), 3),
    ("gamma_t", lambda: gen.complete_bipartite(3, 3), 2),
    ("gamma_s", lambda: gen.cycle(5), 3),
    ("gamma_R", lambda: gen.path(7), 5),
    ("gamma", lambda: gen.fig1_tree(), 2),
    ("gamma_r", lambda: gen.fig1_tree(), 3),
    ("gamma_R", lambda: gen.fig1_tree(), 4),
])
def test_fixed_values(invariant, builder, value):
    assert solve(invariant, builder()).value == value


def test_certificates_validate_under_raw_predicates():
    checks = {
        "gamma": is_dominating,
        "gamma_t": is_total_dominating,
        "gamma_2t": is_double_total_dominating,
        "gamma_s": is_secure_dominating,
        "rho": is_2packing,
    }
    for seed in range(12):
        g = random_connected(4 + seed % 5, 0.5, seed)
        for invariant, predicate in checks.items():
            if invariant == "gamma_2t" and g.min_degree() < 2:
                continue
            res = solve(invariant, g)
            assert predicate(g, res.certificate)
            assert len(res.certificate) == res.value
        for invariant, predicate in (("gamma_r", is_wrdf), ("gamma_R", is_rdf)):
            res = solve(invariant, g)
            assert predicate(g, res.certificate)
            assert res.certificate.weight == res.value


def test_undefined_invariant_errors():
    lonely = Graph.from_edges(3, [(0, 1)])
    with pytest.raises(UndefinedInvariantError):
        solve("gamma_t", lonely)
    with pytest.raises(UndefinedInvariantError):
        solve("gamma_2t", gen.path(4))
    empty = gen.path(1).induced([])
    with pytest.raises(UndefinedInvariantError):
        solve("gamma_r", empty)
    with pytest.raises(GraphError):
        solve("nosuch", gen.path(3))


def test_component_additivity():
    p3 = gen.path(3)
    double = Graph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)])  # P3 + P3
    for invariant in ("gamma", "gamma_r", "gamma_R", "gamma_s", "rho"):
        assert solve(invariant, double).value == 2 * solve(invariant, p3).value


def test_domination_chain_random():
    for seed in range(40):
        g = random_connected(4 + seed % 6, 0.4, seed)
        gamma = solve("gamma", g).value
        gr = solve("gamma_r", g).value
        gR = solve("gamma_R", g).value
        assert gamma <= gr <= gR <= 2 * gamma
        assert solve("gamma_s", g).value >= gr


def test_weak_roman_iff_one_and_two():
    # value 1 exactly on complete graphs
    assert solve("gamma_r", gen.complete(4)).value == 1
    for seed in range(20):
        g = random_connected(3 + seed % 5, 0.45, seed)
        gr = solve("gamma_r", g).value
        assert (gr == 1) == g.is_complete()
        if not g.is_complete():
            gamma = solve("gamma", g).value
            gs = solve("gamma_s", g).value
            assert (gr == 2) == (gamma == 1 or gs == 2)


def test_edge_removal_monotone():
    for seed in range(10):
        g = random_connected(6 + seed % 3, 0.45, seed)
        gr = solve("gamma_r", g).value
        for u, v in list(g.edges()):
            assert solve("gamma_r", g.remove_edge(u, v)).value >= gr


def test_weak_roman_and_roman_graph_flags():
    tree = gen.fig1_tree()
    assert is_roman_graph(tree)
    assert not is_weak_roman_graph(tree)
    k1 = gen.complete(1)
    assert not is_weak_roman_graph(k1)
    assert not is_roman_graph(k1)
    assert is_weak_roman_graph(gen.fig6_spider())


# -- oracle -------------------------------------------------------------------


def test_oracle_examples():
    assert oracle("gamma_r", gen.cycle(4)) == 2
    assert oracle("gamma", gen.complete(1)) == 1
    assert oracle("gamma_R", gen.path(7)) == 5


def test_oracle_limits():
    with pytest.raises(GraphError):
        oracle("gamma_r", gen.path(13))
    with pytest.raises(GraphError):
        oracle("gamma", gen.path(21))


def test_oracle_agreement_small_sweep():
    # the full 200-seed sweep is acceptance criterion 3; this is a quick gate
    for seed in range(30):
        g = random_connected(4 + seed % 4, 0.45, seed)
        for invariant in ("gamma", "gamma_t", "rho", "gamma_s", "gamma_r", "gamma_R"):
            assert solve(invariant, g).value == oracle(invariant, g), (invariant, seed)


# -- enumeration of optima ----------------------------------------------------


def test_enumerate_k3():
    opts = list(enumerate_optimal_wrdf(gen.complete(3)))
    assert [(sorted(f.v2), sorted(f.v1)) for f in opts] == [([], [0]), ([], [1]), ([], [2])]


def test_enumerate_p4_all_weight_two():
    opts = list(enumerate_optimal_wrdf(gen.path(4)))
    assert all(f.weight == 2 and not f.v2_mask for f in opts)
    assert [sorted(f.v1) for f in opts] == [[0, 2], [0, 3], [1, 2], [1, 3]]


def test_enumerate_fig1_contains_drawn_placements():
    opts = set(enumerate_optimal_wrdf(gen.fig1_tree()))
    assert LegionFunction.from_sets(6, [2], [0]) in opts
    assert LegionFunction.from_sets(6, [3], [0]) in opts
    assert all(f.weight == 3 for f in opts)


def test_enumerate_matches_bruteforce():
    import itertools

    for seed in range(8):
        g = random_connected(5 + seed % 3, 0.4, seed)
        best = oracle("gamma_r", g)
        brute = set()
        for values in itertools.product((0, 1, 2), repeat=g.n):
            if sum(values) == best:
                f = LegionFunction.from_values(values)
                if is_wrdf(g, f):
                    brute.add(f)
        got = list(enumerate_optimal_wrdf(g))
        assert set(got) == brute
        assert got == sorted(got, key=lambda f: f.key())


def test_enumerate_disconnected_cross_product():
    double = Graph.from_edges(4, [(0, 1), (2, 3)])  # K2 + K2
    opts = list(enumerate_optimal_wrdf(double))
    assert len(opts) == 4  # one legion per component, two spots each
    assert all(f.weight == 2 for f in opts)


# -- determinism and configuration -------------------------------------------


def test_shard_determinism():
    for g in (gen.fig4_twocycles(), gen.comb(7), lexicographic(gen.cycle(4), gen.path(7))):
        results = [solve("gamma_r", g, SolverConfig(shards=k)) for k in (1, 2, 8)]
        assert len({r.value for r in results}) == 1
        assert len({r.certificate for r in results}) == 1


def test_budget_exceeded_reports_interval():
    from weakroman import BudgetExceededError

    with pytest.raises(BudgetExceededError) as exc:
        solve("gamma_r", lexicographic(gen.path(5), gen.path(10)), SolverConfig(node_budget=100))
    assert exc.value.lower >= 1


def test_max_weight_cap():
    from weakroman import BudgetExceededError

    with pytest.raises(BudgetExceededError):
        solve("gamma_r", gen.path(7), SolverConfig(max_weight=2))


def test_product_route_agrees_with_blind_route():
    cases = [
        (gen.path(4), gen.path(4)),
        (gen.cycle(4), gen.empty(3)),
        (gen.star(3), gen.path(4)),
        (gen.complete(3), gen.cycle(5)),
    ]
    blind = SolverConfig(bounds=frozenset({"chain"}))
    for g, h in cases:
        p = lexicographic(g, h)
        assert solve("gamma_r", p).value == solve("gamma_r", p, blind).value
