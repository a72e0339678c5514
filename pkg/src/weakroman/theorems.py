"""A machine-checkable registry of identities and bounds for the invariants.

Each registered claim couples a formal statement over the seven invariants
with a decidable applicability predicate (its hypotheses) and an executable
check over solver outputs.  Running a claim on an instance produces a
:class:`ClaimReport` with one of four verdicts:

* ``holds`` - hypotheses satisfied, check passed;
* ``violated`` - hypotheses satisfied, check failed: the report carries a
  counterexample witness that re-validates against the raw predicates;
* ``inapplicable`` - hypotheses not satisfied (never counted as a failure);
* ``budget-exceeded`` - a search ran out of its node budget.

Claims quantified over *every* optimal function enumerate all optima, so
they carry small default instances; claims about values only scale further.
Checks whose statements justify the solver's product-structure pruning are
run with that pruning disabled, so the verified route stays independent of
the claim under test.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Callable

from .graph import Graph, GraphError, _bits
from .generators import FamilySpec, comb, complete, cycle, generate, grs, hk, path, random_connected, star
from .products import ProductGraph, closed_copy_weight, copy_weight, corona, lexicographic
from .solvers import (
    BudgetExceededError,
    SolverConfig,
    enumerate_optimal_wrdf,
    minimum_dominating_sets,
    satisfies_property_p,
    solve,
)

# ---------------------------------------------------------------------------
# Closed formulae
# ---------------------------------------------------------------------------

_FORMULAS = {
    "gamma_r_path_cycle": (4, lambda n: -(-3 * n // 7)),
    "gamma_t_path": (3, lambda n: n // 2 + (-(-n // 4)) - n // 4),
    "gamma_r_lex_path": (2, lambda n: n if n % 4 == 0 else (n + 2 if n % 4 == 2 else n + 1)),
    "gamma_r_lex_comb": (4, lambda n: 2 * (2 * n // 3)),
    "two_thirds_bound": (3, lambda n: 2 * (2 * n // 3)),
}


def closed_formula(name: str, n: int) -> int:
    """Evaluate one of the named closed formulae; out-of-range n raises."""
    if name not in _FORMULAS:
        raise GraphError(f"unknown formula {name!r} (expected one of {', '.join(_FORMULAS)})")
    low, fn = _FORMULAS[name]
    if n < low:
        raise GraphError(f"{name} requires n >= {low}")
    return fn(n)


# ---------------------------------------------------------------------------
# Degree-constrained induced paths and the weight-4 reduction
# ---------------------------------------------------------------------------


def find_P3_sets(g: Graph) -> list[tuple[int, int, int]]:
    """Ordered triples (x1, x2, x3) inducing a path with deg(x1) >= 2,
    deg(x2) = 2 and deg(x3) = 1."""
    out = []
    for x3 in range(g.n):
        if g.degree(x3) != 1:
            continue
        x2 = next(_bits(g.adj[x3]))
        if g.degree(x2) != 2:
            continue
        x1 = next(_bits(g.adj[x2] & ~(1 << x3)))
        if g.degree(x1) >= 2:
            out.append((x1, x2, x3))
    out.sort()
    return out


def find_P4_sets(g: Graph) -> list[tuple[int, int, int, int]]:
    """Ordered quadruples (x1, x2, x3, x4) inducing a path with the two
    middle vertices of degree exactly 2 and both ends of degree >= 2; every
    undirected instance appears in both orientations."""
    out = []
    for x2 in range(g.n):
        if g.degree(x2) != 2:
            continue
        for x3 in _bits(g.adj[x2]):
            if g.degree(x3) != 2:
                continue
            x1 = next(_bits(g.adj[x2] & ~(1 << x3)))
            x4 = next(_bits(g.adj[x3] & ~(1 << x2)))
            if x1 == x4 or x1 == x3 or x4 == x2:
                continue
            if g.adjacent(x1, x4):
                continue
            if g.degree(x1) >= 2 and g.degree(x4) >= 2:
                out.append((x1, x2, x3, x4))
    out.sort()
    return out


@dataclass(frozen=True)
class ReducedGraph:
    """Result of the degree-2 path contraction.

    ``vertex_map[i]`` is the original index of the reduced graph's vertex i.
    Proposed self-loops and duplicate edges are dropped and counted; either
    makes the reduction degenerate.
    """

    graph: Graph
    vertex_map: tuple[int, ...]
    dropped_loops: int
    dropped_duplicates: int

    @property
    def degenerate(self) -> bool:
        return self.dropped_loops > 0 or self.dropped_duplicates > 0


def reduce_P4(g: Graph, s: tuple[int, int, int, int]) -> ReducedGraph:
    """Remove an induced degree-2 path (x1, x2, x3, x4) and join every
    remaining neighbour of x1 to every remaining neighbour of x4."""
    s = tuple(s)
    if s not in set(find_P4_sets(g)):
        raise GraphError(f"{s} is not a degree-constrained induced 4-path of this graph")
    x1, x2, x3, x4 = s
    smask = (1 << x1) | (1 << x2) | (1 << x3) | (1 << x4)
    keep = [v for v in range(g.n) if not smask >> v & 1]
    index = {v: i for i, v in enumerate(keep)}
    edges = set()
    for v in keep:
        for u in _bits(g.adj[v] & ~smask):
            if u > v:
                edges.add((index[v], index[u]))
    loops = 0
    dups = 0
    for a in _bits(g.adj[x1] & ~(1 << x2)):
        for b in _bits(g.adj[x4] & ~(1 << x3)):
            if a == b:
                loops += 1
                continue
            e = (min(index[a], index[b]), max(index[a], index[b]))
            if e in edges:
                dups += 1
            else:
                edges.add(e)
    return ReducedGraph(Graph.from_edges(len(keep), sorted(edges)), tuple(keep), loops, dups)


# ---------------------------------------------------------------------------
# Claim registry infrastructure
# ---------------------------------------------------------------------------


@dataclass
class ClaimReport:
    claim_id: str
    instance: str
    verdict: str  # holds | violated | inapplicable | budget-exceeded
    details: dict = field(default_factory=dict)
    witness: dict | None = None
    elapsed_ms: float = 0.0

    def to_json_dict(self) -> dict:
        out = {
            "schema": "1",
            "claim": self.claim_id,
            "instance": self.instance,
            "verdict": self.verdict,
            "details": self.details,
        }
        if self.witness is not None:
            out["witness"] = self.witness
        out["millis"] = round(self.elapsed_ms, 3)
        return out


@dataclass(frozen=True)
class Claim:
    id: str
    kind: str  # formula | inequality | equivalence | existence | reduction
    statement: str
    params: str
    runner: Callable[[dict, SolverConfig], tuple[str, dict, dict | None]]
    defaults: tuple[dict, ...] = ()


def resolve_graph(value) -> Graph:
    """Build a graph from a family spec string, e.g. ``path:7``, ``grs:4,4``,
    ``hk:4,1,1,1,1``, ``random:8,0.3,7``, ``edges:5:0-1,1-2``, or the nested
    products ``lex(path:2,path:10)`` and ``corona(path:2,empty:2)``."""
    if isinstance(value, Graph):
        return value
    if isinstance(value, ProductGraph):
        return value.graph
    if not isinstance(value, str):
        raise GraphError(f"cannot interpret {value!r} as a graph")
    text = value.strip()
    for prefix, builder in (("lex(", lexicographic), ("corona(", corona)):
        if text.startswith(prefix) and text.endswith(")"):
            inner = text[len(prefix):-1]
            depth = 0
            for i, ch in enumerate(inner):
                if ch == "(":
                    depth += 1
                elif ch == ")":
                    depth -= 1
                elif ch == "," and depth == 0:
                    return builder(resolve_graph(inner[:i]), resolve_graph(inner[i + 1:])).graph
            raise GraphError(f"malformed product spec {value!r}")
    if text.startswith("edges:"):
        parts = text.split(":")
        if len(parts) != 3:
            raise GraphError(f"malformed edge spec {value!r} (want edges:n:u-v,u-v)")
        n = int(parts[1])
        edges = []
        if parts[2]:
            for chunk in parts[2].split(","):
                a, b = chunk.split("-")
                edges.append((int(a), int(b)))
        return Graph.from_edges(n, edges)
    name, _, args = text.partition(":")
    params = tuple(float(p) if "." in p else int(p) for p in args.split(",")) if args else ()
    if name == "random":
        if len(params) != 3:
            raise GraphError("random spec needs n,p,seed")
        return random_connected(int(params[0]), float(params[1]), int(params[2]))
    return generate(FamilySpec(name, params))


def _describe(instance: dict) -> str:
    parts = []
    for key in sorted(instance):
        if key.startswith("_"):
            continue
        value = instance[key]
        if isinstance(value, Graph):
            value = f"graph(n={value.n},m={value.edge_count})"
        elif isinstance(value, ProductGraph):
            value = f"product(n={value.graph.n})"
        parts.append(f"{key}={value}")
    return " ".join(parts)


def _val(invariant: str, g, cfg: SolverConfig) -> int:
    return solve(invariant, g, cfg).value


_BLIND = frozenset({"chain"})  # disables the product-structure shortcuts


def _blind(cfg: SolverConfig) -> SolverConfig:
    return SolverConfig(cfg.shards, cfg.node_budget, cfg.max_weight, _BLIND)


def _is_tree(g: Graph) -> bool:
    return g.n >= 1 and g.is_connected() and g.edge_count == g.n - 1


def _leaves(g: Graph) -> int:
    mask = 0
    for v in range(g.n):
        if g.degree(v) == 1:
            mask |= 1 << v
    return mask


def _support_vertices(g: Graph) -> list[int]:
    leaves = _leaves(g)
    return [v for v in range(g.n) if g.adj[v] & leaves]


def _strong_support(g: Graph, v: int) -> bool:
    return (g.adj[v] & _leaves(g)).bit_count() >= 2


def _is_planar(g: Graph) -> bool:
    import networkx as nx

    ng = nx.Graph()
    ng.add_nodes_from(range(g.n))
    ng.add_edges_from(g.edges())
    return nx.check_planarity(ng)[0]


# ---------------------------------------------------------------------------
# Claim runners.  Each returns (verdict, details, witness).
# ---------------------------------------------------------------------------


def _run_chain(inst, cfg):
    g = resolve_graph(inst["g"])
    gamma = _val("gamma", g, cfg)
    gr = _val("gamma_r", g, cfg)
    gR = _val("gamma_R", g, cfg)
    details = {"gamma": gamma, "gamma_r": gr, "gamma_R": gR}
    ok = gamma <= gr <= gR <= 2 * gamma
    if ok and g.n > 0 and g.min_degree() >= 1:
        gt = _val("gamma_t", g, cfg)
        details["gamma_t"] = gt
        ok = 2 * gamma <= 2 * gt
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_complete_iff(inst, cfg):
    g = resolve_graph(inst["g"])
    gr = _val("gamma_r", g, cfg)
    ok = (gr == 1) == g.is_complete()
    details = {"gamma_r": gr, "complete": g.is_complete()}
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_wrdn2_iff(inst, cfg):
    g = resolve_graph(inst["g"])
    if g.is_complete():
        return "inapplicable", {"reason": "graph is complete"}, None
    gr = _val("gamma_r", g, cfg)
    gamma = _val("gamma", g, cfg)
    gs = _val("gamma_s", g, cfg)
    ok = (gr == 2) == (gamma == 1 or gs == 2)
    details = {"gamma_r": gr, "gamma": gamma, "gamma_s": gs}
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_path_cycle_formula(inst, cfg):
    n = int(inst["n"])
    if n < 4:
        return "inapplicable", {"reason": "needs n >= 4"}, None
    want = closed_formula("gamma_r_path_cycle", n)
    got_p = _val("gamma_r", path(n), cfg)
    got_c = _val("gamma_r", cycle(n), cfg)
    ok = got_p == want == got_c
    details = {"n": n, "expected": want, "path": got_p, "cycle": got_c}
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_hamiltonian_bound(inst, cfg):
    g = resolve_graph(inst["g"])
    order = tuple(int(v) for v in inst["cycle"])
    n = g.n
    valid = (
        n >= 4
        and len(order) == n
        and sorted(order) == list(range(n))
        and all(g.adjacent(order[i], order[(i + 1) % n]) for i in range(n))
    )
    if not valid:
        return "inapplicable", {"reason": "witness is not a Hamiltonian cycle"}, None
    bound = -(-3 * n // 7)
    gr = _val("gamma_r", g, cfg)
    ok = gr <= bound
    details = {"gamma_r": gr, "bound": bound}
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _product_value(g: Graph, h: Graph, cfg: SolverConfig) -> int:
    return _val("gamma_r", lexicographic(g, h), cfg)


def _run_lex_upper_2gt(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if g.n == 0 or g.min_degree() == 0:
        return "inapplicable", {"reason": "needs no isolated vertex"}, None
    gt = _val("gamma_t", g, cfg)
    val = _product_value(g, h, cfg)
    ok = val <= 2 * gt
    details = {"gamma_r_product": val, "gamma_t": gt}
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_lex_upper_maxdeg4(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if g.n == 0 or g.min_degree() == 0 or g.max_degree() < g.n - 2:
        return "inapplicable", {"reason": "needs no isolated vertex and max degree >= n-2"}, None
    val = _product_value(g, h, cfg)
    details = {"gamma_r_product": val}
    ok = val <= 4
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_lex_upper_diam2(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if not g.is_connected() or g.n < 2 or g.diameter() != 2:
        return "inapplicable", {"reason": "needs diameter two"}, None
    bound = 2 * (g.min_degree() + 1)
    val = _product_value(g, h, cfg)
    details = {"gamma_r_product": val, "bound": bound}
    ok = val <= bound
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_lex_upper_two_thirds(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if g.n < 3 or not g.is_connected():
        return "inapplicable", {"reason": "needs a connected graph on n >= 3"}, None
    bound = 2 * (2 * g.n // 3)
    val = _product_value(g, h, cfg)
    details = {"gamma_r_product": val, "bound": bound}
    ok = val <= bound
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_lex_upper_tree_ns(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if not _is_tree(g) or g.n < 3:
        return "inapplicable", {"reason": "needs a tree on n >= 3"}, None
    s = len(_support_vertices(g))
    val = _product_value(g, h, cfg)
    details = {"gamma_r_product": val, "bound": g.n + s, "supports": s}
    ok = val <= g.n + s
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_lex_upper_planar6(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if not g.is_connected() or g.n < 2 or g.diameter() != 2 or not _is_planar(g):
        return "inapplicable", {"reason": "needs a planar graph of diameter two"}, None
    val = _product_value(g, h, cfg)
    details = {"gamma_r_product": val}
    ok = val <= 6
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_lex_upper_4gamma(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if g.n == 0 or g.min_degree() == 0 or h.is_complete():
        return "inapplicable", {"reason": "needs no isolated vertex and noncomplete second factor"}, None
    gamma = _val("gamma", g, cfg)
    val = _product_value(g, h, cfg)
    details = {"gamma_r_product": val, "gamma": gamma}
    ok = val <= 4 * gamma
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_lex_upper_gamma_gammar(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if h.is_complete():
        return "inapplicable", {"reason": "needs a noncomplete second factor"}, None
    gamma = _val("gamma", g, cfg)
    grh = _val("gamma_r", h, cfg)
    val = _product_value(g, h, cfg)
    details = {"gamma_r_product": val, "gamma": gamma, "gamma_r_h": grh}
    ok = val <= gamma * grh
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_lex_upper_g2t(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if g.n == 0 or g.min_degree() < 2:
        return "inapplicable", {"reason": "needs minimum degree two"}, None
    g2t = _val("gamma_2t", g, cfg)
    gr_g = _val("gamma_r", g, cfg)
    p = lexicographic(g, h)
    g2t_p = _val("gamma_2t", p, cfg)
    gr_p = _val("gamma_r", p, cfg)
    details = {"gamma_2t": g2t, "gamma_r": gr_g, "gamma_2t_product": g2t_p, "gamma_r_product": gr_p}
    ok = gr_g <= g2t and g2t_p <= g2t and gr_p <= g2t
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_copy_lemma(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if h.is_complete():
        return "inapplicable", {"reason": "needs a noncomplete second factor"}, None
    p = lexicographic(g, h)
    blind = _blind(cfg)
    count = 0
    for f in enumerate_optimal_wrdf(p, blind):
        count += 1
        for u in range(g.n):
            if closed_copy_weight(p, f, u) < 2:
                witness = {
                    "V1": sorted(f.v1), "V2": sorted(f.v2), "copy": u,
                    "closed_copy_weight": closed_copy_weight(p, f, u),
                }
                return "violated", {"optima_checked": count}, witness
    return "holds", {"optima_checked": count}, None


def _run_lex_lower_max(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if g.n == 0 or g.min_degree() < 1 or h.is_complete():
        return "inapplicable", {"reason": "needs minimum degree one and noncomplete second factor"}, None
    gr = _val("gamma_r", g, cfg)
    gt = _val("gamma_t", g, cfg)
    rho = _val("rho", g, cfg)
    bound = max(gr, gt, 2 * rho)
    val = _val("gamma_r", lexicographic(g, h), _blind(cfg))
    details = {"gamma_r_product": val, "gamma_r": gr, "gamma_t": gt, "rho": rho, "bound": bound}
    ok = val >= bound
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_tree_lower_2gamma(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if not _is_tree(g) or h.is_complete():
        return "inapplicable", {"reason": "needs a tree and a noncomplete second factor"}, None
    gamma = _val("gamma", g, cfg)
    val = _val("gamma_r", lexicographic(g, h), _blind(cfg))
    details = {"gamma_r_product": val, "gamma": gamma}
    ok = val >= 2 * gamma
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_lex_complete_second(inst, cfg):
    g = resolve_graph(inst["g"])
    m = int(inst["m"])
    if m < 1:
        return "inapplicable", {"reason": "needs m >= 1"}, None
    gr = _val("gamma_r", g, cfg)
    val = _val("gamma_r", lexicographic(g, complete(m)), cfg)
    details = {"gamma_r": gr, "gamma_r_product": val}
    ok = val == gr
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_eq_2gt(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if g.n == 0 or g.min_degree() == 0 or h.is_complete():
        return "inapplicable", {"reason": "needs no isolated vertex and noncomplete second factor"}, None
    gt = _val("gamma_t", g, cfg)
    gr = _val("gamma_r", g, cfg)
    rho = _val("rho", g, cfg)
    if 2 * gt != max(gr, 2 * rho):
        return "inapplicable", {"reason": "hypothesis 2*gamma_t == max(gamma_r, 2*rho) fails",
                                "gamma_t": gt, "gamma_r": gr, "rho": rho}, None
    val = _product_value(g, h, cfg)
    details = {"gamma_r_product": val, "gamma_t": gt}
    ok = val == 2 * gt
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_corona_eq(inst, cfg):
    g1, g2 = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if g1.n == 0 or g1.min_degree() == 0 or g2.is_complete():
        return "inapplicable", {"reason": "needs no isolated vertex in g1 and noncomplete g2"}, None
    p = corona(g1, g2)
    gr = _val("gamma_r", p, cfg)
    gt = _val("gamma_t", p, cfg)
    rho = _val("rho", p, cfg)
    details = {"gamma_r": gr, "gamma_t": gt, "rho": rho, "n1": g1.n}
    ok = gr == 2 * gt == 2 * rho
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_weakroman_eq_2gamma(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    gamma = _val("gamma", g, cfg)
    gr = _val("gamma_r", g, cfg)
    if gr != 2 * gamma:
        return "inapplicable", {"reason": "first factor is not a weak Roman graph",
                                "gamma": gamma, "gamma_r": gr}, None
    if _val("gamma_r", h, cfg) != 2:
        return "inapplicable", {"reason": "needs gamma_r(H) == 2"}, None
    val = _product_value(g, h, cfg)
    details = {"gamma_r_product": val, "gamma": gamma}
    ok = val == 2 * gamma
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_strongsupport_tree(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if not _is_tree(g):
        return "inapplicable", {"reason": "needs a tree"}, None
    sets = minimum_dominating_sets(g, cfg)
    if len(sets) != 1:
        return "inapplicable", {"reason": "minimum dominating set is not unique",
                                "count": len(sets)}, None
    if not all(_strong_support(g, v) for v in sets[0]):
        return "inapplicable", {"reason": "dominating set has a non strong-support member"}, None
    if _val("gamma_r", h, cfg) != 2:
        return "inapplicable", {"reason": "needs gamma_r(H) == 2"}, None
    gamma = len(sets[0])
    val = _product_value(g, h, cfg)
    details = {"gamma_r_product": val, "gamma": gamma, "dominating_set": sorted(sets[0])}
    ok = val == 2 * gamma
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_star_leaf_4gamma(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if g.n == 0 or g.min_degree() == 0:
        return "inapplicable", {"reason": "needs no isolated vertex"}, None
    if _val("gamma", h, cfg) < 4:
        return "inapplicable", {"reason": "needs gamma(H) >= 4"}, None
    gamma = _val("gamma", g, cfg)
    gt = _val("gamma_t", g, cfg)
    if gt != 2 * gamma:
        return "inapplicable", {"reason": "needs gamma_t == 2*gamma", "gamma": gamma, "gamma_t": gt}, None
    leaves = _leaves(g)
    witness_set = None
    for ds in minimum_dominating_sets(g, cfg):
        if all(g.adj[v] & leaves for v in ds):
            witness_set = ds
            break
    if witness_set is None:
        return "inapplicable", {"reason": "no minimum dominating set of leaf-adjacent vertices"}, None
    val = _product_value(g, h, cfg)
    details = {"gamma_r_product": val, "gamma": gamma, "dominating_set": sorted(witness_set)}
    ok = val == 4 * gamma
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_eq_g2t(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if g.n == 0 or g.min_degree() < 2 or h.is_complete():
        return "inapplicable", {"reason": "needs minimum degree two and noncomplete second factor"}, None
    g2t = _val("gamma_2t", g, cfg)
    gr = _val("gamma_r", g, cfg)
    rho = _val("rho", g, cfg)
    if g2t != max(gr, 2 * rho):
        return "inapplicable", {"reason": "hypothesis gamma_2t == max(gamma_r, 2*rho) fails",
                                "gamma_2t": g2t, "gamma_r": gr, "rho": rho}, None
    val = _product_value(g, h, cfg)
    details = {"gamma_r_product": val, "gamma_2t": g2t}
    ok = val == g2t
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_kn_lex(inst, cfg):
    n = int(inst["n"])
    h = resolve_graph(inst["h"])
    if n < 3 or h.is_complete():
        return "inapplicable", {"reason": "needs n >= 3 and a noncomplete second factor"}, None
    val = _val("gamma_r", lexicographic(complete(n), h), cfg)
    grh = _val("gamma_r", h, cfg)
    has_p = any(satisfies_property_p(h, a) for a in range(h.n))
    ok = 2 <= val <= 3 and (val == 2) == (grh == 2 or has_p)
    details = {"gamma_r_product": val, "gamma_r_h": grh, "property_p_vertex": has_p}
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_star_lex(inst, cfg):
    n = int(inst["n"])
    h = resolve_graph(inst["h"])
    if n < 3:
        return "inapplicable", {"reason": "needs n >= 3"}, None
    grh = _val("gamma_r", h, cfg)
    if grh < 2:
        return "inapplicable", {"reason": "second factor is complete"}, None
    gh = _val("gamma", h, cfg)
    val = _val("gamma_r", lexicographic(star(n), h), cfg)
    details = {"gamma_r_product": val, "gamma_r_h": grh, "gamma_h": gh}
    if gh >= 4:
        ok = val == 4
        details["case"] = "gamma(H) >= 4"
    elif grh in (2, 3):
        ok = val == grh
        details["case"] = "gamma_r(H) in {2, 3}"
    else:
        ok = 3 <= val <= 4
        details["case"] = "gamma_r(H) >= 4"
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_p3_lemma(inst, cfg):
    g = resolve_graph(inst["g"])
    h = resolve_graph(inst["h"])
    triple = tuple(int(v) for v in inst["triple"])
    if triple not in set(find_P3_sets(g)):
        return "inapplicable", {"reason": "triple is not a degree-constrained induced 3-path"}, None
    if _val("gamma", h, cfg) < 4:
        return "inapplicable", {"reason": "needs gamma(H) >= 4"}, None
    p = lexicographic(g, h)
    blind = _blind(cfg)
    x1, x2, x3 = triple
    count = 0
    exists_shape = False
    for f in enumerate_optimal_wrdf(p, blind):
        count += 1
        total = copy_weight(p, f, x1) + copy_weight(p, f, x2) + copy_weight(p, f, x3)
        if total != 4:
            witness = {"V1": sorted(f.v1), "V2": sorted(f.v2), "sum": total}
            return "violated", {"optima_checked": count}, witness
        if copy_weight(p, f, x2) == 2 and copy_weight(p, f, x3) == 0:
            exists_shape = True
    details = {"optima_checked": count, "shape_witness_found": exists_shape}
    ok = count > 0 and exists_shape
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_comb_formula(inst, cfg):
    n = int(inst["n"])
    h = resolve_graph(inst["h"])
    if n < 4 or _val("gamma", h, cfg) < 4:
        return "inapplicable", {"reason": "needs n >= 4 and gamma(H) >= 4"}, None
    want = closed_formula("gamma_r_lex_comb", n)
    val = _val("gamma_r", lexicographic(comb(n), h), cfg)
    details = {"gamma_r_product": val, "expected": want}
    ok = val == want
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_p4_reduction(inst, cfg):
    g = resolve_graph(inst["g"])
    h = resolve_graph(inst["h"])
    quad = tuple(int(v) for v in inst["quad"])
    if quad not in set(find_P4_sets(g)):
        return "inapplicable", {"reason": "quad is not a degree-constrained induced 4-path"}, None
    if _val("gamma", h, cfg) < 4:
        return "inapplicable", {"reason": "needs gamma(H) >= 4"}, None
    red = reduce_P4(g, quad)
    lhs = _val("gamma_r", lexicographic(g, h), cfg)
    rhs = _val("gamma_r", lexicographic(red.graph, h), cfg) + 4
    details = {
        "gamma_r_product": lhs,
        "gamma_r_reduced_plus_4": rhs,
        "reduced_n": red.graph.n,
        "degenerate": red.degenerate,
        "dropped_loops": red.dropped_loops,
        "dropped_duplicates": red.dropped_duplicates,
    }
    ok = lhs == rhs
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_cycle_lex(inst, cfg):
    n = int(inst["n"])
    h = resolve_graph(inst["h"])
    if n < 3 or _val("gamma", h, cfg) < 4:
        return "inapplicable", {"reason": "needs n >= 3 and gamma(H) >= 4"}, None
    val = _val("gamma_r", lexicographic(cycle(n), h), cfg)
    details = {"gamma_r_product": val, "expected": n}
    ok = val == n
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_path_lex(inst, cfg):
    n = int(inst["n"])
    h = resolve_graph(inst["h"])
    if n < 2 or _val("gamma", h, cfg) < 4:
        return "inapplicable", {"reason": "needs n >= 2 and gamma(H) >= 4"}, None
    want = closed_formula("gamma_r_lex_path", n)
    val = _val("gamma_r", lexicographic(path(n), h), cfg)
    details = {"gamma_r_product": val, "expected": want}
    ok = val == want
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_twoouterweights(inst, cfg):
    g, h = resolve_graph(inst["g"]), resolve_graph(inst["h"])
    if g.n < 2 or h.n < 2 or not g.is_connected() or not h.is_connected():
        return "inapplicable", {"reason": "needs nontrivial connected factors"}, None
    if _val("gamma", h, cfg) < 4:
        return "inapplicable", {"reason": "needs gamma(H) >= 4"}, None
    p = lexicographic(g, h)
    blind = _blind(cfg)
    count = 0
    for f in enumerate_optimal_wrdf(p, blind):
        count += 1
        if all(
            sum(copy_weight(p, f, u2) for u2 in _bits(g.adj[u])) >= 2
            for u in range(g.n)
        ):
            return "holds", {"optima_checked": count,
                             "witness": {"V1": sorted(f.v1), "V2": sorted(f.v2)}}, None
    return "violated", {"optima_checked": count}, {"reason": "no optimal function has all open copy neighbourhoods of weight >= 2"}


def _run_grs_value(inst, cfg):
    r, s = int(inst["r"]), int(inst["s"])
    h = resolve_graph(inst["h"])
    if r < 1 or s < 1 or _val("gamma", h, cfg) < 3:
        return "inapplicable", {"reason": "needs r, s >= 1 and gamma(H) >= 3"}, None
    g = grs(r, s)
    g2t = _val("gamma_2t", g, cfg)
    val = _val("gamma_r", lexicographic(g, h), cfg)
    details = {"gamma_r_product": val, "gamma_2t": g2t}
    ok = val == 5 == g2t
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


def _run_hk_value(inst, cfg):
    k = int(inst["k"])
    sizes = tuple(int(x) for x in inst["sizes"])
    h = resolve_graph(inst["h"])
    g = hk(k, sizes)
    gr = _val("gamma_r", g, cfg)
    g2t = _val("gamma_2t", g, cfg)
    val = _val("gamma_r", lexicographic(g, h), cfg)
    details = {"gamma_r": gr, "gamma_2t": g2t, "gamma_r_product": val, "k": k}
    ok = gr == g2t == k and val == k
    return ("holds" if ok else "violated"), details, (None if ok else details.copy())


# ---------------------------------------------------------------------------
# The registry
# ---------------------------------------------------------------------------

_N4 = "empty:4"  # smallest graph with domination number 4

REGISTRY: tuple[Claim, ...] = (
    Claim("chain", "inequality",
          "gamma <= gamma_r <= gamma_R <= 2*gamma (<= 2*gamma_t without isolated vertices)",
          "g", _run_chain,
          ({"g": "path:7", "_size": 7}, {"g": "fig1_tree", "_size": 6},
           {"g": "random:8,0.3,7", "_size": 8}, {"g": "grs:2,2", "_size": 7})),
    Claim("complete_iff", "equivalence", "gamma_r == 1 iff the graph is complete", "g",
          _run_complete_iff,
          ({"g": "complete:5", "_size": 5}, {"g": "path:5", "_size": 5},
           {"g": "star:4", "_size": 5})),
    Claim("wrdn2_iff", "equivalence",
          "for noncomplete graphs: gamma_r == 2 iff gamma == 1 or gamma_s == 2", "g",
          _run_wrdn2_iff,
          ({"g": "star:4", "_size": 5}, {"g": "cycle:4", "_size": 4},
           {"g": "path:6", "_size": 6}, {"g": "cocktail_party:3", "_size": 6})),
    Claim("path_cycle_formula", "formula",
          "gamma_r(P_n) == gamma_r(C_n) == ceil(3n/7) for n >= 4", "n",
          _run_path_cycle_formula,
          tuple({"n": n, "_size": n} for n in range(4, 11))),
    Claim("hamiltonian_bound", "inequality",
          "gamma_r <= ceil(3n/7) for Hamiltonian graphs, given a witness cycle", "g, cycle",
          _run_hamiltonian_bound,
          ({"g": "cycle:7", "cycle": (0, 1, 2, 3, 4, 5, 6), "_size": 7},
           {"g": "cocktail_party:3", "cycle": (0, 2, 4, 1, 3, 5), "_size": 6},
           {"g": "complete:6", "cycle": (0, 1, 2, 3, 4, 5), "_size": 6})),
    Claim("lex_upper_2gt", "inequality", "gamma_r(G o H) <= 2*gamma_t(G)", "g, h",
          _run_lex_upper_2gt,
          ({"g": "path:4", "h": _N4, "_size": 16}, {"g": "cycle:5", "h": "path:4", "_size": 20})),
    Claim("lex_upper_maxdeg4", "inequality",
          "gamma_r(G o H) <= 4 when max degree >= n-2 and no isolated vertex", "g, h",
          _run_lex_upper_maxdeg4,
          ({"g": "star:3", "h": _N4, "_size": 16}, {"g": "complete:4", "h": "path:4", "_size": 16})),
    Claim("lex_upper_diam2", "inequality",
          "gamma_r(G o H) <= 2*(min degree + 1) for diameter-2 G", "g, h",
          _run_lex_upper_diam2,
          ({"g": "cycle:5", "h": _N4, "_size": 20},
           {"g": "complete_bipartite:2,3", "h": "path:3", "_size": 15})),
    Claim("lex_upper_two_thirds", "inequality",
          "gamma_r(G o H) <= 2*floor(2n/3) for connected G, n >= 3", "g, h",
          _run_lex_upper_two_thirds,
          ({"g": "path:6", "h": _N4, "_size": 24}, {"g": "comb:6", "h": _N4, "_size": 24})),
    Claim("lex_upper_tree_ns", "inequality",
          "gamma_r(T o H) <= n + (number of support vertices) for trees", "g, h",
          _run_lex_upper_tree_ns,
          ({"g": "comb:7", "h": _N4, "_size": 28}, {"g": "star:4", "h": "path:5", "_size": 25})),
    Claim("lex_upper_planar6", "inequality",
          "gamma_r(G o H) <= 6 for planar diameter-2 G", "g, h",
          _run_lex_upper_planar6,
          ({"g": "fig2_planar", "h": _N4, "_size": 36},)),
    Claim("lex_upper_4gamma", "inequality",
          "gamma_r(G o H) <= 4*gamma(G) for noncomplete H", "g, h",
          _run_lex_upper_4gamma,
          ({"g": "path:5", "h": "empty:2", "_size": 10}, {"g": "comb:6", "h": _N4, "_size": 24})),
    Claim("lex_upper_gamma_gammar", "inequality",
          "gamma_r(G o H) <= gamma(G)*gamma_r(H) for noncomplete H", "g, h",
          _run_lex_upper_gamma_gammar,
          ({"g": "path:4", "h": "path:4", "_size": 16}, {"g": "complete:3", "h": "cycle:5", "_size": 15})),
    Claim("lex_upper_g2t", "inequality",
          "for min degree 2: gamma_r(G) <= gamma_2t(G), gamma_2t(G o H) <= gamma_2t(G), gamma_r(G o H) <= gamma_2t(G)",
          "g, h", _run_lex_upper_g2t,
          ({"g": "cycle:4", "h": "path:3", "_size": 12},
           {"g": "hk:3,1,1,1", "h": "empty:2", "_size": 12})),
    Claim("copy_lemma", "inequality",
          "every optimal function puts closed copy weight >= 2 on every copy", "g, h",
          _run_copy_lemma,
          ({"g": "path:2", "h": "path:4", "_size": 8}, {"g": "cycle:4", "h": "empty:3", "_size": 12})),
    Claim("lex_lower_max", "inequality",
          "gamma_r(G o H) >= max(gamma_r(G), gamma_t(G), 2*rho(G))", "g, h",
          _run_lex_lower_max,
          ({"g": "path:4", "h": _N4, "_size": 16},
           {"g": "complete_bipartite:3,3", "h": "path:4", "_size": 24},
           {"g": "path:5", "h": "empty:2", "_size": 10})),
    Claim("tree_lower_2gamma", "inequality",
          "gamma_r(T o H) >= 2*gamma(T) for trees and noncomplete H", "g, h",
          _run_tree_lower_2gamma,
          ({"g": "path:4", "h": "empty:2", "_size": 8},
           {"g": "star:3", "h": _N4, "_size": 16},
           {"g": "fig1_tree", "h": "empty:2", "_size": 12})),
    Claim("lex_complete_second", "formula", "gamma_r(G o K_m) == gamma_r(G)", "g, m",
          _run_lex_complete_second,
          ({"g": "path:5", "m": 2, "_size": 10}, {"g": "cycle:5", "m": 3, "_size": 15},
           {"g": "fig1_tree", "m": 2, "_size": 12})),
    Claim("eq_2gt", "formula",
          "gamma_r(G o H) == 2*gamma_t(G) when 2*gamma_t(G) == max(gamma_r(G), 2*rho(G))", "g, h",
          _run_eq_2gt,
          ({"g": "path:4", "h": _N4, "_size": 16},
           {"g": "corona(path:2,empty:2)", "h": "empty:2", "_size": 12})),
    Claim("corona_eq", "formula",
          "gamma_r == 2*gamma_t == 2*rho on corona products with noncomplete second factor",
          "g (first factor), h (second factor)", _run_corona_eq,
          ({"g": "path:2", "h": "empty:2", "_size": 6}, {"g": "path:3", "h": "empty:2", "_size": 9},
           {"g": "cycle:3", "h": "empty:3", "_size": 12})),
    Claim("weakroman_eq_2gamma", "formula",
          "gamma_r(G o H) == 2*gamma(G) for weak Roman G and gamma_r(H) == 2", "g, h",
          _run_weakroman_eq_2gamma,
          ({"g": "corona(path:2,empty:2)", "h": "empty:2", "_size": 12},
           {"g": "fig6_spider", "h": "empty:2", "_size": 30})),
    Claim("strongsupport_tree", "formula",
          "gamma_r(T o H) == 2*gamma(T) for trees with a unique all-strong-support minimum dominating set and gamma_r(H) == 2",
          "g, h", _run_strongsupport_tree,
          ({"g": "path:3", "h": "empty:2", "_size": 6},
           {"g": "fig6_spider", "h": "empty:2", "_size": 30})),
    Claim("star_leaf_4gamma", "formula",
          "gamma_r(G o H) == 4*gamma(G) when gamma_t(G) == 2*gamma(G), some minimum dominating set is all leaf-adjacent, and gamma(H) >= 4",
          "g, h", _run_star_leaf_4gamma,
          ({"g": "star:3", "h": _N4, "_size": 16},
           {"g": "fig6_spider", "h": _N4, "_size": 60})),
    Claim("eq_g2t", "formula",
          "gamma_r(G o H) == gamma_2t(G) when gamma_2t(G) == max(gamma_r(G), 2*rho(G))", "g, h",
          _run_eq_g2t,
          ({"g": "hk:3,1,1,1", "h": "empty:2", "_size": 12},
           {"g": "hk:4,2,1,2,1", "h": "empty:2", "_size": 20})),
    Claim("kn_lex", "equivalence",
          "2 <= gamma_r(K_n o H) <= 3, with value 2 iff gamma_r(H) == 2 or H has a vertex whose closed-neighbourhood complement is a clique",
          "n, h", _run_kn_lex,
          ({"n": 3, "h": "path:4", "_size": 12}, {"n": 3, "h": "cycle:7", "_size": 21},
           {"n": 3, "h": _N4, "_size": 12}, {"n": 4, "h": "star:3", "_size": 16})),
    Claim("star_lex", "formula",
          "gamma_r(K_{1,n} o H): equals gamma_r(H) when that is 2 or 3; in [3,4] when gamma_r(H) >= 4; equals 4 when gamma(H) >= 4",
          "n, h", _run_star_lex,
          ({"n": 3, "h": _N4, "_size": 16}, {"n": 3, "h": "cycle:7", "_size": 28},
           {"n": 4, "h": "path:4", "_size": 20}, {"n": 3, "h": "path:9", "_size": 36})),
    Claim("p3_lemma", "formula",
          "every optimal function puts total weight exactly 4 on a degree-constrained induced 3-path of copies, and some optimal function realises (2 on the middle, 0 on the leaf)",
          "g, triple, h", _run_p3_lemma,
          ({"g": "edges:5:0-1,0-2,1-2,2-3,3-4", "triple": (2, 3, 4), "h": _N4, "_size": 20},)),
    Claim("comb_formula", "formula",
          "gamma_r(T_n o H) == 2*floor(2n/3) for combs, gamma(H) >= 4", "n, h",
          _run_comb_formula,
          ({"n": 6, "h": _N4, "_size": 24}, {"n": 7, "h": _N4, "_size": 28})),
    Claim("p4_reduction", "reduction",
          "gamma_r(G o H) == gamma_r(G* o H) + 4 for the degree-2 path contraction G*, gamma(H) >= 4",
          "g, quad, h", _run_p4_reduction,
          ({"g": "path:7", "quad": (1, 2, 3, 4), "h": _N4, "_size": 28},
           {"g": "cycle:8", "quad": (0, 1, 2, 3), "h": _N4, "_size": 32},
           {"g": "cycle:6", "quad": (0, 1, 2, 3), "h": _N4, "_size": 24})),
    Claim("cycle_lex", "formula", "gamma_r(C_n o H) == n for gamma(H) >= 4", "n, h",
          _run_cycle_lex,
          tuple({"n": n, "h": _N4, "_size": 4 * n} for n in (3, 4, 5, 6, 7))),
    Claim("path_lex", "formula",
          "gamma_r(P_n o H) == n, n+2, n+1 as n mod 4 is 0, 2, odd, for gamma(H) >= 4", "n, h",
          _run_path_lex,
          tuple({"n": n, "h": _N4, "_size": 4 * n} for n in (2, 3, 4, 5, 6))),
    Claim("twoouterweights", "existence",
          "some optimal function has open copy-neighbourhood weight >= 2 at every copy", "g, h",
          _run_twoouterweights,
          # needs a *connected* second factor with domination number >= 4;
          # the corona of P_4 with K_1 is the smallest such graph
          ({"g": "path:3", "h": "corona(path:4,empty:1)", "_size": 24},
           {"g": "cycle:4", "h": "corona(path:4,empty:1)", "_size": 32})),
    Claim("grs_value", "formula",
          "gamma_r(G_{r,s} o H) == 5 == gamma_2t(G_{r,s}) for gamma(H) >= 3", "r, s, h",
          _run_grs_value,
          ({"r": 1, "s": 1, "h": "path:7", "_size": 35},)),
    Claim("hk_value", "formula",
          "gamma_r == gamma_2t == k on the cycle-with-blocks family, and gamma_r(G o H) == k",
          "k, sizes, h", _run_hk_value,
          ({"k": 3, "sizes": (1, 1, 1), "h": "path:3", "_size": 18},
           {"k": 4, "sizes": (2, 1, 2, 1), "h": "empty:2", "_size": 20},
           {"k": 4, "sizes": (1, 1, 1, 1), "h": "empty:2", "_size": 16})),
)

_REGISTRY_BY_ID = {c.id: c for c in REGISTRY}


def get_claim(claim_id: str) -> Claim:
    claim = _REGISTRY_BY_ID.get(claim_id)
    if claim is None:
        raise GraphError(f"unknown claim {claim_id!r} (see REGISTRY)")
    return claim


def verify_claim(claim_id: str, instance: dict, config: SolverConfig | None = None) -> ClaimReport:
    """Run one registered claim on one instance."""
    claim = get_claim(claim_id)
    cfg = config or SolverConfig()
    started = time.perf_counter()
    try:
        verdict, details, witness = claim.runner(instance, cfg)
    except BudgetExceededError as exc:
        verdict = "budget-exceeded"
        details = {"lower": exc.lower, "upper": exc.upper, "invariant": exc.invariant}
        witness = None
    elapsed = (time.perf_counter() - started) * 1000.0
    return ClaimReport(claim_id, _describe(instance), verdict, details, witness, elapsed)


def verify_all(max_n: int | None = None, config: SolverConfig | None = None) -> list[ClaimReport]:
    """Run every claim on its default desk-scale instances, skipping those
    whose flat size exceeds ``max_n``."""
    reports = []
    for claim in REGISTRY:
        for instance in claim.defaults:
            if max_n is not None and instance.get("_size", 0) > max_n:
                continue
            reports.append(verify_claim(claim.id, instance, config))
    return reports


def summary_table(reports: list[ClaimReport]) -> str:
    """A Markdown summary of claim verdicts."""
    rows: dict[str, dict[str, int]] = {}
    for rep in reports:
        row = rows.setdefault(rep.claim_id, {"instances": 0, "holds": 0, "violated": 0,
                                              "inapplicable": 0, "budget-exceeded": 0})
        row["instances"] += 1
        row[rep.verdict] += 1
    lines = [
        "| claim | instances | holds | violated | inapplicable | budget-exceeded |",
        "|---|---|---|---|---|---|",
    ]
    for claim in REGISTRY:
        if claim.id in rows:
            r = rows[claim.id]
            lines.append(
                f"| {claim.id} | {r['instances']} | {r['holds']} | {r['violated']} "
                f"| {r['inapplicable']} | {r['budget-exceeded']} |"
            )
    return "\n".join(lines)
