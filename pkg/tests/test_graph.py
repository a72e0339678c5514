"""Graph core: construction, set operations, domination predicates."""

import itertools

import pytest

from weakroman import (
    EdgeListFormatError,
    Graph,
    GraphError,
    UndefinedInvariantError,
    VertexSet,
    format_edge_list,
    is_2packing,
    is_dominating,
    is_double_total_dominating,
    is_secure_dominating,
    is_total_dominating,
    parse_edge_list,
    random_connected,
)
from weakroman import generators as gen


def test_construction_rejects_loops_and_duplicates():
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 1), (1, 0)])
    with pytest.raises(GraphError):
        Graph.from_edges(3, [(0, 3)])


def test_adjacency_symmetric_and_degree_sum():
    g = gen.fig2_planar()
    assert sum(g.degree(v) for v in range(g.n)) == 2 * g.edge_count
    for u, v in g.edges():
        assert g.adjacent(u, v) and g.adjacent(v, u)


def test_neighbors_closed_examples():
    p3 = gen.path(3)
    assert sorted(p3.neighbors_closed(1)) == [0, 1, 2]
    k4 = gen.complete(4)
    for v in range(4):
        assert sorted(k4.neighbors_closed(v)) == [0, 1, 2, 3]
    c5 = gen.cycle(5)
    assert sorted(c5.neighbors_closed(0)) == [0, 1, 4]
    with pytest.raises(GraphError):
        p3.neighbors_closed(3)


def test_every_vertex_in_own_closed_neighborhood():
    for seed in range(10):
        g = random_connected(7, 0.3, seed)
        for v in range(g.n):
            assert v in g.neighbors_closed(v)


def test_components_examples():
    g = Graph.from_edges(5, [(0, 1), (1, 2), (3, 4)])  # P3 + P2
    comps = g.components()
    assert [sorted(c) for c in comps] == [[0, 1, 2], [3, 4]]
    assert [sorted(c) for c in gen.complete(5).components()] == [[0, 1, 2, 3, 4]]
    assert [sorted(c) for c in gen.empty(3).components()] == [[0], [1], [2]]


def test_components_partition_and_connected_pieces():
    for seed in range(8):
        g = Graph.from_edges(8, list(random_connected(4, 0.5, seed).edges())
                             + [(u + 4, v + 4) for u, v in random_connected(4, 0.5, seed + 50).edges()])
        comps = g.components()
        union = 0
        for c in comps:
            assert c.mask & union == 0
            union |= c.mask
            assert g.induced(c).is_connected()
        assert union == (1 << g.n) - 1


def test_induced_examples():
    c5 = gen.cycle(5)
    p4 = c5.induced([0, 1, 2, 3])
    assert p4.n == 4 and p4.edge_count == 3
    assert sorted(p4.degree(v) for v in range(4)) == [1, 1, 2, 2]
    k2 = gen.complete(4).induced([1, 3])
    assert k2.n == 2 and k2.edge_count == 1
    # one comb tooth induces a path on three vertices
    t7 = gen.comb(7)
    tooth = t7.induced([0, 3, 4])
    assert tooth.edge_count == 2 and sorted(tooth.degree(v) for v in range(3)) == [1, 1, 2]


def test_remove_edge_roundtrip():
    g = gen.complete(3)
    p3 = g.remove_edge(0, 2)
    assert p3.edge_count == 2 and not p3.adjacent(0, 2)
    assert p3.add_edge(0, 2) == g
    with pytest.raises(GraphError):
        p3.remove_edge(0, 2)
    c4 = gen.cycle(4)
    assert sorted(c4.remove_edge(0, 3).degree(v) for v in range(4)) == [1, 1, 2, 2]
    n2 = gen.path(2).remove_edge(0, 1)
    assert n2.edge_count == 0


def test_is_dominating_examples():
    p3 = gen.path(3)
    assert is_dominating(p3, [1])
    assert not is_dominating(p3, [0])
    assert is_dominating(gen.fig1_tree(), [0, 2])
    for seed in range(5):
        g = random_connected(6, 0.4, seed)
        assert is_dominating(g, VertexSet.full(6))


def test_is_total_dominating_examples():
    p4 = gen.path(4)
    assert is_total_dominating(p4, [1, 2])
    assert not is_total_dominating(p4, [0, 3])
    with pytest.raises(UndefinedInvariantError):
        is_total_dominating(gen.empty(3), [0, 1, 2])
    # the three support pairs of the spider tree totally dominate
    spider = gen.fig6_spider()
    assert is_total_dominating(spider, [0, 1, 3, 4, 6, 7])


def test_is_double_total_dominating_examples():
    g44 = gen.grs(4, 4)
    assert is_double_total_dominating(g44, [0, 1, 2, 3, 7])  # x1, x2, x3, one y, one z
    c4 = gen.cycle(4)
    assert is_double_total_dominating(c4, [0, 1, 2, 3])
    for triple in itertools.combinations(range(4), 3):
        assert not is_double_total_dominating(c4, triple)
    with pytest.raises(UndefinedInvariantError):
        is_double_total_dominating(gen.path(4), [0, 1, 2, 3])


def test_is_2packing_examples():
    p7 = gen.path(7)
    assert is_2packing(p7, [0, 3, 6])
    assert is_2packing(p7, [4])
    assert is_2packing(p7, [])
    k3 = gen.complete(3)
    for pair in itertools.combinations(range(3), 2):
        assert not is_2packing(k3, pair)


def test_is_secure_dominating_examples():
    for n in (2, 3, 5):
        kn = gen.complete(n)
        for v in range(n):
            assert is_secure_dominating(kn, [v])
    assert is_secure_dominating(gen.path(4), [1, 2])
    c5 = gen.cycle(5)
    for pair in itertools.combinations(range(5), 2):
        assert not is_secure_dominating(c5, pair)


def test_secure_implies_dominating_all_subsets():
    for seed in range(6):
        n = 5 + seed % 4
        g = random_connected(n, 0.35, seed)
        for mask in range(1 << n):
            if is_secure_dominating(g, mask):
                assert is_dominating(g, mask)


def test_vertexset_algebra():
    a = VertexSet.from_iterable(6, [0, 2, 4])
    b = VertexSet.from_iterable(6, [2, 3])
    assert sorted(a & b) == [2]
    assert sorted(a | b) == [0, 2, 3, 4]
    assert sorted(a - b) == [0, 4]
    assert sorted(~a) == [1, 3, 5]
    assert len(a) == 3 and 4 in a and 5 not in a
    with pytest.raises(GraphError):
        VertexSet(3, 0b1000)


def test_edge_list_roundtrip_and_errors():
    g = gen.grs(2, 3)
    assert parse_edge_list(format_edge_list(g)) == g
    with pytest.raises(EdgeListFormatError) as exc:
        parse_edge_list("2 1\n0 0\n")
    assert exc.value.line == 2
    with pytest.raises(EdgeListFormatError):
        parse_edge_list("2 2\n0 1\n0 1\n")
    with pytest.raises(EdgeListFormatError):
        parse_edge_list("2 1\n1 0\n")  # wants u < v
    with pytest.raises(EdgeListFormatError):
        parse_edge_list("not a header\n")
    with pytest.raises(EdgeListFormatError):
        parse_edge_list("3 1\n0 7\n")


def test_diameter():
    assert gen.fig2_planar().diameter() == 2
    assert gen.path(5).diameter() == 4
    with pytest.raises(GraphError):
        gen.empty(2).diameter()
