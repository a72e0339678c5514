"""Family generators: counts, degrees and the pinned figure encodings."""

import pytest

from weakroman import FamilySpec, GraphError, generate, random_connected, solve
from weakroman import generators as gen
from weakroman.solvers import minimum_dominating_sets


def is_path_graph(g):
    if g.n == 1:
        return g.edge_count == 0
    if not g.is_connected() or g.edge_count != g.n - 1:
        return False
    degs = sorted(g.degree(v) for v in range(g.n))
    return degs[:2] == [1, 1] and all(d == 2 for d in degs[2:])


def test_path_cycle_counts():
    for n in (1, 2, 5, 9):
        assert gen.path(n).edge_count == n - 1
    for n in (3, 4, 8):
        g = gen.cycle(n)
        assert g.edge_count == n and all(g.degree(v) == 2 for v in range(n))
    with pytest.raises(GraphError):
        gen.cycle(2)


def test_star_and_bipartite():
    s = gen.star(4)
    assert s.n == 5 and s.degree(0) == 4
    k33 = gen.complete_bipartite(3, 3)
    assert k33.edge_count == 9 and all(k33.degree(v) == 3 for v in range(6))


def test_cocktail_party():
    c = gen.cocktail_party(2)
    assert c.n == 4 and c.edge_count == 4 and all(c.degree(v) == 2 for v in range(4))  # C_4
    c3 = gen.cocktail_party(3)
    assert all(c3.degree(v) == 4 for v in range(6))
    assert not c3.adjacent(0, 1) and not c3.adjacent(4, 5)


def test_comb_structure():
    for n in range(4, 16):
        t = gen.comb(n)
        assert t.n == n and t.edge_count == n - 1
        assert t.is_connected()
    assert is_path_graph(gen.comb(6))  # the order-six comb is a plain path
    with pytest.raises(GraphError):
        gen.comb(3)


def test_grs_degrees():
    for r, s in ((1, 1), (4, 4), (2, 5)):
        g = gen.grs(r, s)
        assert g.n == 3 + r + s
        assert g.degree(0) == r + s  # x1
        assert g.degree(1) == r + 1  # x2
        assert g.degree(2) == s + 1  # x3
        assert all(g.degree(v) == 2 for v in range(3, g.n))
    assert gen.grs(4, 4).degree(0) == 8


def test_hk_structure():
    g = gen.hk(4, (3, 2, 3, 2))
    assert g.n == 14
    assert g.min_degree() == 2
    g = gen.hk(3, (1, 1, 1))
    assert g.n == 6 and g.min_degree() == 2
    with pytest.raises(GraphError):
        gen.hk(2, (1, 1))
    with pytest.raises(GraphError):
        gen.hk(3, (1, 1))


def test_fig1_tree_shape():
    g = gen.fig1_tree()
    assert g.n == 6 and g.edge_count == 5
    assert sorted(g.degree(v) for v in range(6)) == [1, 1, 1, 2, 2, 3]


def test_fig2_planar_shape():
    import networkx as nx

    g = gen.fig2_planar()
    assert g.n == 9 and g.diameter() == 2
    ng = nx.Graph(list(g.edges()))
    assert nx.check_planarity(ng)[0]


def test_fig4_twocycles_shape():
    g = gen.fig4_twocycles()
    assert g.n == 9 and g.edge_count == 10
    assert sorted(g.degree(v) for v in range(9)).count(4) == 1


def test_fig6_spider_properties():
    # pinned encoding checks: the figure is defined by its drawing, so the
    # stated properties are asserted rather than trusted
    g = gen.fig6_spider()
    assert g.n == 15 and g.edge_count == 14 and g.is_connected()
    assert solve("gamma", g).value == 3
    assert solve("rho", g).value == 3
    assert solve("gamma_t", g).value == 6
    sets = minimum_dominating_sets(g)
    assert len(sets) == 1 and sorted(sets[0]) == [1, 4, 7]
    leaves = [v for v in range(g.n) if g.degree(v) == 1]
    for v in sets[0]:
        assert sum(1 for u in leaves if g.adjacent(u, v)) >= 2


def test_generate_dispatch_and_validation():
    assert generate(FamilySpec("path", (5,))).n == 5
    assert generate(FamilySpec("hk", (3, 1, 1, 1))).n == 6
    with pytest.raises(GraphError):
        generate(FamilySpec("nosuch", ()))
    with pytest.raises(GraphError):
        generate(FamilySpec("path", (0,)))


def test_random_connected():
    assert random_connected(1, 0.5, 3).n == 1
    k5 = random_connected(5, 1.0, 9)
    assert k5.edge_count == 10
    for seed in range(20):
        g = random_connected(8, 0.3, seed)
        assert g.is_connected()
    assert random_connected(8, 0.3, 7) == random_connected(8, 0.3, 7)
    assert random_connected(8, 0.3, 7) != random_connected(8, 0.3, 8)
