"""Immutable simple graphs over dense integer vertices, with bit-set vertex sets.

Vertices are the indices ``0..n-1``.  Every per-vertex neighbourhood is kept
as a Python int used as a bitmask, which makes the set algebra the solvers
need (unions of closed neighbourhoods, coverage tests, subset checks) single
machine operations for graphs up to a hundred or so vertices and still exact
beyond that.

The module also houses the raw predicates for the set-based domination
concepts (dominating, total dominating, double total dominating, 2-packing,
secure dominating).  They are written directly from the definitions, without
any of the incremental tricks the exact solvers use, so they can double as an
independent route when certifying solver output.
"""

from __future__ import annotations

from typing import Iterable, Iterator


class GraphError(ValueError):
    """Invalid graph construction or operation."""


class EdgeListFormatError(GraphError):
    """Malformed canonical edge-list input; carries a 1-based line number."""

    def __init__(self, line: int, message: str):
        super().__init__(f"line {line}: {message}")
        self.line = line


class UndefinedInvariantError(GraphError):
    """The requested concept is undefined for this graph (e.g. total
    domination on a graph with an isolated vertex)."""


def _bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class VertexSet:
    """An immutable subset of ``0..n-1`` backed by a bitmask.

    Set algebra (``&``, ``|``, ``-``, ``^``) is closed over the ground set;
    ``~`` is complementation within ``0..n-1``.
    """

    __slots__ = ("n", "mask")

    def __init__(self, n: int, mask: int = 0):
        if mask < 0 or mask >> n:
            raise GraphError(f"mask has bits outside 0..{n - 1}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "mask", mask)

    def __setattr__(self, name, value):
        raise AttributeError("VertexSet is immutable")

    @classmethod
    def from_iterable(cls, n: int, vertices: Iterable[int]) -> "VertexSet":
        mask = 0
        for v in vertices:
            if not 0 <= v < n:
                raise GraphError(f"vertex {v} out of range 0..{n - 1}")
            mask |= 1 << v
        return cls(n, mask)

    @classmethod
    def full(cls, n: int) -> "VertexSet":
        return cls(n, (1 << n) - 1)

    def members(self) -> tuple[int, ...]:
        return tuple(_bits(self.mask))

    def __contains__(self, v: int) -> bool:
        return 0 <= v < self.n and self.mask >> v & 1 == 1

    def __iter__(self) -> Iterator[int]:
        return _bits(self.mask)

    def __len__(self) -> int:
        return self.mask.bit_count()

    def __bool__(self) -> bool:
        return self.mask != 0

    def _coerce(self, other) -> int:
        if isinstance(other, VertexSet):
            if other.n != self.n:
                raise GraphError("vertex sets over different ground sets")
            return other.mask
        return VertexSet.from_iterable(self.n, other).mask

    def __and__(self, other) -> "VertexSet":
        return VertexSet(self.n, self.mask & self._coerce(other))

    def __or__(self, other) -> "VertexSet":
        return VertexSet(self.n, self.mask | self._coerce(other))

    def __sub__(self, other) -> "VertexSet":
        return VertexSet(self.n, self.mask & ~self._coerce(other))

    def __xor__(self, other) -> "VertexSet":
        return VertexSet(self.n, self.mask ^ self._coerce(other))

    def __invert__(self) -> "VertexSet":
        return VertexSet(self.n, ~self.mask & ((1 << self.n) - 1))

    complement = __invert__

    def issubset(self, other) -> bool:
        return self.mask & ~self._coerce(other) == 0

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, VertexSet)
            and self.n == other.n
            and self.mask == other.mask
        )

    def __hash__(self) -> int:
        return hash((self.n, self.mask))

    def __repr__(self) -> str:
        return f"VertexSet({self.n}, {{{', '.join(map(str, self))}}})"


def _as_mask(n: int, s) -> int:
    """Accept a VertexSet, an int bitmask, or an iterable of vertices."""
    if isinstance(s, VertexSet):
        if s.n != n:
            raise GraphError("vertex set over a different ground set")
        return s.mask
    if isinstance(s, int):
        if s < 0 or s >> n:
            raise GraphError(f"mask has bits outside 0..{n - 1}")
        return s
    return VertexSet.from_iterable(n, s).mask


class Graph:
    """An immutable simple undirected graph.

    ``adj[v]`` is the open neighbourhood N(v) as a bitmask; ``closed[v]``
    is N[v] = N(v) | {v}.  All mutating operations return new graphs.
    """

    __slots__ = ("n", "edge_count", "adj", "closed")

    def __init__(self, n: int, adj: tuple[int, ...], edge_count: int):
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)
        object.__setattr__(self, "closed", tuple(a | (1 << v) for v, a in enumerate(adj)))
        object.__setattr__(self, "edge_count", edge_count)

    def __setattr__(self, name, value):
        raise AttributeError("Graph is immutable")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        if n < 0:
            raise GraphError("vertex count must be nonnegative")
        adj = [0] * n
        m = 0
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u},{v}) out of range 0..{n - 1}")
            if u == v:
                raise GraphError(f"loop at vertex {u} not allowed")
            if adj[u] >> v & 1:
                raise GraphError(f"duplicate edge ({u},{v})")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
            m += 1
        return cls(n, tuple(adj), m)

    # -- basic accessors ---------------------------------------------------

    def _check_vertex(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")

    def degree(self, v: int) -> int:
        self._check_vertex(v)
        return self.adj[v].bit_count()

    def min_degree(self) -> int:
        return min((a.bit_count() for a in self.adj), default=0)

    def max_degree(self) -> int:
        return max((a.bit_count() for a in self.adj), default=0)

    def adjacent(self, u: int, v: int) -> bool:
        self._check_vertex(u)
        self._check_vertex(v)
        return self.adj[u] >> v & 1 == 1

    def neighbors(self, v: int) -> VertexSet:
        self._check_vertex(v)
        return VertexSet(self.n, self.adj[v])

    def neighbors_closed(self, v: int) -> VertexSet:
        """The closed neighbourhood N[v] = N(v) | {v}."""
        self._check_vertex(v)
        return VertexSet(self.n, self.closed[v])

    def vertices(self) -> VertexSet:
        return VertexSet.full(self.n)

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as pairs (u, v) with u < v, ascending."""
        for u in range(self.n):
            for v in _bits(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def __eq__(self, other) -> bool:
        return isinstance(other, Graph) and self.n == other.n and self.adj == other.adj

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"

    # -- structural operations ---------------------------------------------

    def components(self) -> list[VertexSet]:
        """Partition of the vertices into maximal connected sets, ordered by
        their smallest contained vertex."""
        out = []
        seen = 0
        full = (1 << self.n) - 1
        while seen != full:
            start = (~seen & full) & -(~seen & full)
            comp = start
            frontier = start
            while frontier:
                grow = 0
                for v in _bits(frontier):
                    grow |= self.adj[v]
                frontier = grow & ~comp
                comp |= grow
            out.append(VertexSet(self.n, comp))
            seen |= comp
        return out

    def is_connected(self) -> bool:
        return len(self.components()) <= 1

    def induced(self, s) -> "Graph":
        """Subgraph induced by ``s``, relabelled so the smallest original
        vertex becomes 0, ascending (the map is ``sorted(s)``)."""
        mask = _as_mask(self.n, s)
        keep = list(_bits(mask))
        index = {v: i for i, v in enumerate(keep)}
        edges = []
        for v in keep:
            for w in _bits(self.adj[v] & mask):
                if w > v:
                    edges.append((index[v], index[w]))
        return Graph.from_edges(len(keep), edges)

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.adjacent(u, v):
            raise GraphError(f"edge ({u},{v}) not present")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, tuple(adj), self.edge_count - 1)

    def add_edge(self, u: int, v: int) -> "Graph":
        self._check_vertex(u)
        self._check_vertex(v)
        if u == v:
            raise GraphError(f"loop at vertex {u} not allowed")
        if self.adjacent(u, v):
            raise GraphError(f"edge ({u},{v}) already present")
        adj = list(self.adj)
        adj[u] |= 1 << v
        adj[v] |= 1 << u
        return Graph(self.n, tuple(adj), self.edge_count + 1)

    def is_complete(self) -> bool:
        return self.edge_count == self.n * (self.n - 1) // 2

    def diameter(self) -> int:
        """Eccentricity maximum via BFS from every vertex; raises on
        disconnected graphs."""
        if self.n == 0:
            raise GraphError("diameter of the empty graph is undefined")
        best = 0
        full = (1 << self.n) - 1
        for v in range(self.n):
            seen = 1 << v
            frontier = seen
            dist = 0
            while seen != full:
                grow = 0
                for w in _bits(frontier):
                    grow |= self.adj[w]
                frontier = grow & ~seen
                if not frontier:
                    raise GraphError("diameter undefined: graph is disconnected")
                seen |= frontier
                dist += 1
            best = max(best, dist)
        return best


# -- set-based domination predicates ----------------------------------------


def is_dominating(g: Graph, s) -> bool:
    """Every vertex outside ``s`` has at least one neighbour in ``s``."""
    mask = _as_mask(g.n, s)
    cover = mask
    for v in _bits(mask):
        cover |= g.adj[v]
    return cover == (1 << g.n) - 1


def is_total_dominating(g: Graph, s) -> bool:
    """Every vertex of the graph (members of ``s`` included) has a neighbour
    in ``s``.  Undefined on graphs with an isolated vertex."""
    if g.n > 0 and g.min_degree() == 0:
        raise UndefinedInvariantError("total domination undefined: isolated vertex")
    mask = _as_mask(g.n, s)
    cover = 0
    for v in _bits(mask):
        cover |= g.adj[v]
    return cover == (1 << g.n) - 1


def is_double_total_dominating(g: Graph, s) -> bool:
    """Every vertex has at least two neighbours in ``s``.  Undefined below
    minimum degree two."""
    if g.n > 0 and g.min_degree() < 2:
        raise UndefinedInvariantError("double total domination undefined: minimum degree below two")
    mask = _as_mask(g.n, s)
    once = 0
    twice = 0
    for v in _bits(mask):
        a = g.adj[v]
        twice |= once & a
        once |= a
    return twice == (1 << g.n) - 1


def is_2packing(g: Graph, s) -> bool:
    """The closed neighbourhoods of distinct members are pairwise disjoint."""
    mask = _as_mask(g.n, s)
    union = 0
    for v in _bits(mask):
        if union & g.closed[v]:
            return False
        union |= g.closed[v]
    return True


def is_secure_dominating(g: Graph, s) -> bool:
    """``s`` dominates, and every outside vertex v has a neighbour u in ``s``
    such that the swap (s - {u}) | {v} still dominates."""
    mask = _as_mask(g.n, s)
    if not is_dominating(g, mask):
        return False
    full = (1 << g.n) - 1
    for v in _bits(full & ~mask):
        defended = False
        for u in _bits(g.adj[v] & mask):
            if is_dominating(g, (mask & ~(1 << u)) | (1 << v)):
                defended = True
                break
        if not defended:
            return False
    return True


# -- canonical edge-list text format -----------------------------------------
#
# First line "n m", then m lines "u v" with 0 <= u < v < n, whitespace
# separated.  Loops, duplicates and out-of-range indices are rejected with a
# line-numbered diagnostic.


def parse_edge_list(text: str) -> Graph:
    lines = text.splitlines()
    idx = 0
    header = None
    for idx, raw in enumerate(lines):
        stripped = raw.strip()
        if stripped and not stripped.startswith("#"):
            header = stripped
            break
    if header is None:
        raise EdgeListFormatError(1, "missing header line 'n m'")
    parts = header.split()
    if len(parts) != 2:
        raise EdgeListFormatError(idx + 1, "header must be 'n m'")
    try:
        n, m = int(parts[0]), int(parts[1])
    except ValueError:
        raise EdgeListFormatError(idx + 1, "header must contain two integers") from None
    if n < 0 or m < 0:
        raise EdgeListFormatError(idx + 1, "counts must be nonnegative")
    edges = []
    seen = set()
    for off, raw in enumerate(lines[idx + 1:], start=idx + 2):
        stripped = raw.strip()
        if not stripped or stripped.startswith("#"):
            continue
        parts = stripped.split()
        if len(parts) != 2:
            raise EdgeListFormatError(off, "edge line must be 'u v'")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise EdgeListFormatError(off, "edge endpoints must be integers") from None
        if not (0 <= u < n and 0 <= v < n):
            raise EdgeListFormatError(off, f"endpoint out of range 0..{n - 1}")
        if u == v:
            raise EdgeListFormatError(off, "loops are not allowed")
        if u > v:
            raise EdgeListFormatError(off, "edges must satisfy u < v")
        if (u, v) in seen:
            raise EdgeListFormatError(off, f"duplicate edge ({u},{v})")
        seen.add((u, v))
        edges.append((u, v))
    if len(edges) != m:
        raise EdgeListFormatError(len(lines), f"expected {m} edges, found {len(edges)}")
    return Graph.from_edges(n, edges)


def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.edge_count}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
