"""Exact solvers for seven domination invariants, with certificates.

Invariants: ``gamma`` (domination), ``gamma_t`` (total domination),
``gamma_2t`` (double total domination), ``rho`` (2-packing, a maximum),
``gamma_R`` (Roman domination), ``gamma_r`` (weak Roman domination) and
``gamma_s`` (secure domination).

Strategy.  Set-valued invariants use cardinality-iterative subset
enumeration in ascending lexicographic order with branch-and-bound pruning
on vertices that can no longer be covered.  The function-valued invariants
iterate a target weight t upward from a computed lower bound and enumerate
candidate (V2, V1) placements of that weight, rejecting candidates whose
positive set cannot dominate before running the defence check.  When the
input is a lexicographic product with a noncomplete second factor, two
product-level facts tighten the search: every optimal function puts weight
at least 2 on each closed copy neighbourhood, and a copy with no positive
weight in its neighbouring copies must dominate its own copy internally.

All searches enumerate candidates in one fixed global order - the
lexicographic order of (sorted V2, sorted V1) index sequences (or of the
sorted set, for set invariants) - so the first feasible candidate is the
canonical certificate and results are identical for any shard count.

The :func:`oracle` function recomputes every invariant by an exhaustive
scan (2^n subsets or 3^n functions) using only the raw definitional
predicates; it shares no search code with :func:`solve` and exists to
cross-validate it.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field

from .graph import (
    Graph,
    GraphError,
    UndefinedInvariantError,
    VertexSet,
    _as_mask,
    _bits,
    is_2packing,
    is_dominating,
    is_double_total_dominating,
    is_secure_dominating,
    is_total_dominating,
)
from .products import ProductGraph, lexicographic

INVARIANTS = ("gamma", "gamma_t", "gamma_2t", "rho", "gamma_R", "gamma_r", "gamma_s")
SET_INVARIANTS = ("gamma", "gamma_t", "gamma_2t", "rho", "gamma_s")
FUNCTION_INVARIANTS = ("gamma_R", "gamma_r")


class BudgetExceededError(RuntimeError):
    """Search stopped by a resource cap; carries the proven interval."""

    def __init__(self, invariant: str, lower: int, upper: int | None):
        self.invariant = invariant
        self.lower = lower
        self.upper = upper
        hi = "?" if upper is None else str(upper)
        super().__init__(f"budget exceeded solving {invariant}: value in [{lower}, {hi}]")


# ---------------------------------------------------------------------------
# Legion functions and their raw predicates
# ---------------------------------------------------------------------------


class LegionFunction:
    """An assignment V -> {0, 1, 2}, stored as the pair of bitmasks (V1, V2).

    Equivalently the ordered partition (V0, V1, V2); the weight is
    |V1| + 2 |V2|.
    """

    __slots__ = ("n", "v1_mask", "v2_mask")

    def __init__(self, n: int, v1_mask: int, v2_mask: int):
        if v1_mask & v2_mask:
            raise GraphError("V1 and V2 must be disjoint")
        if (v1_mask | v2_mask) >> n:
            raise GraphError(f"assignment has bits outside 0..{n - 1}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "v1_mask", v1_mask)
        object.__setattr__(self, "v2_mask", v2_mask)

    def __setattr__(self, name, value):
        raise AttributeError("LegionFunction is immutable")

    @classmethod
    def from_sets(cls, n: int, v1, v2) -> "LegionFunction":
        return cls(n, _as_mask(n, v1), _as_mask(n, v2))

    @classmethod
    def from_values(cls, values) -> "LegionFunction":
        vals = list(values)
        m1 = m2 = 0
        for v, x in enumerate(vals):
            if x == 1:
                m1 |= 1 << v
            elif x == 2:
                m2 |= 1 << v
            elif x != 0:
                raise GraphError(f"legion count {x} at vertex {v} not in {{0,1,2}}")
        return cls(len(vals), m1, m2)

    def value(self, v: int) -> int:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range 0..{self.n - 1}")
        if self.v2_mask >> v & 1:
            return 2
        return self.v1_mask >> v & 1

    __getitem__ = value

    def values(self) -> tuple[int, ...]:
        return tuple(self.value(v) for v in range(self.n))

    @property
    def v0(self) -> VertexSet:
        return VertexSet(self.n, ~(self.v1_mask | self.v2_mask) & ((1 << self.n) - 1))

    @property
    def v1(self) -> VertexSet:
        return VertexSet(self.n, self.v1_mask)

    @property
    def v2(self) -> VertexSet:
        return VertexSet(self.n, self.v2_mask)

    @property
    def weight(self) -> int:
        return self.v1_mask.bit_count() + 2 * self.v2_mask.bit_count()

    def key(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """The canonical comparison key: (sorted V2, sorted V1)."""
        return (tuple(_bits(self.v2_mask)), tuple(_bits(self.v1_mask)))

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, LegionFunction)
            and (self.n, self.v1_mask, self.v2_mask)
            == (other.n, other.v1_mask, other.v2_mask)
        )

    def __hash__(self) -> int:
        return hash((self.n, self.v1_mask, self.v2_mask))

    def __repr__(self) -> str:
        return f"LegionFunction(V1={sorted(self.v1)}, V2={sorted(self.v2)})"


def _positive_dominates(g: Graph, positive: int) -> bool:
    cover = positive
    for v in _bits(positive):
        cover |= g.adj[v]
    return cover == (1 << g.n) - 1


def is_undefended(g: Graph, f: LegionFunction, v: int) -> bool:
    """No legion anywhere in the closed neighbourhood of v."""
    g._check_vertex(v)
    return g.closed[v] & (f.v1_mask | f.v2_mask) == 0


def is_wrdf(g: Graph, f: LegionFunction) -> bool:
    """Weak Roman dominating function test, straight from the definition.

    Every vertex with no legions must have a neighbour that can send it a
    legion without leaving any vertex undefended; after the move the
    positive set is (V1 | V2 | {v}), minus u when f(u) = 1, and validity is
    that this set dominates.
    """
    pos = f.v1_mask | f.v2_mask
    full = (1 << g.n) - 1
    for v in _bits(full & ~pos):
        bv = 1 << v
        defended = False
        for u in _bits(g.adj[v] & pos):
            moved = pos | bv
            if f.v1_mask >> u & 1:
                moved &= ~(1 << u)
            if _positive_dominates(g, moved):
                defended = True
                break
        if not defended:
            return False
    return True


def is_rdf(g: Graph, f: LegionFunction) -> bool:
    """Roman dominating function test: every 0-vertex has a 2-neighbour."""
    zero = ~(f.v1_mask | f.v2_mask) & ((1 << g.n) - 1)
    cover2 = 0
    for u in _bits(f.v2_mask):
        cover2 |= g.adj[u]
    return zero & ~cover2 == 0


def satisfies_property_p(h: Graph, a: int) -> bool:
    """True iff the subgraph induced by V(H) minus N[a] is a clique (the
    empty set counts)."""
    h._check_vertex(a)
    rest = ((1 << h.n) - 1) & ~h.closed[a]
    for v in _bits(rest):
        if (rest & ~(1 << v)) & ~h.adj[v]:
            return False
    return True


# ---------------------------------------------------------------------------
# Solver configuration and results
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SolverConfig:
    """Search limits and strategy flags.

    ``bounds`` selects which lower-bound/pruning families apply: ``"chain"``
    enables the domination-chain start point, ``"product"`` enables the
    product-structure bound and the per-copy weight pruning.  Dropping
    ``"product"`` forces the structure-blind search (used when the claims
    that justify those prunes are themselves under test).
    """

    shards: int = 1
    node_budget: int | None = None
    max_weight: int | None = None
    bounds: frozenset = frozenset({"chain", "product"})

    def __post_init__(self):
        if self.shards < 1:
            raise GraphError("shard count must be >= 1")
        if self.node_budget is not None and self.node_budget <= 0:
            raise GraphError("node budget must be positive")


@dataclass
class SolveResult:
    invariant: str
    value: int
    certificate: VertexSet | LegionFunction
    nodes: int = 0
    millis: float = 0.0

    def certificate_json(self) -> dict:
        if isinstance(self.certificate, LegionFunction):
            return {
                "V1": sorted(self.certificate.v1),
                "V2": sorted(self.certificate.v2),
            }
        return {"set": sorted(self.certificate)}

    def to_json_dict(self, n: int, stats: bool = False) -> dict:
        out = {
            "schema": "1",
            "invariant": self.invariant,
            "n": n,
            "value": self.value,
            "certificate": self.certificate_json(),
        }
        if stats:
            out["nodes"] = self.nodes
            out["millis"] = round(self.millis, 3)
        return out


# ---------------------------------------------------------------------------
# Set-invariant search (gamma, gamma_t, gamma_2t, gamma_s, rho)
# ---------------------------------------------------------------------------


class _Counter:
    __slots__ = ("nodes", "budget", "invariant", "lower")

    def __init__(self, budget, invariant):
        self.nodes = 0
        self.budget = budget
        self.invariant = invariant
        self.lower = 0

    def tick(self):
        self.nodes += 1
        if self.budget is not None and self.nodes > self.budget:
            raise BudgetExceededError(self.invariant, self.lower, None)


def _min_set_exists(g: Graph, k: int, kind: str, counter: _Counter) -> int | None:
    """Lexicographically first feasible set of size exactly k, or None.

    ``kind`` selects the coverage notion: closed neighbourhoods for
    ``gamma``/``gamma_s`` (plus the swap test for the latter), open for
    ``gamma_t``, doubled open for ``gamma_2t``.
    """
    n = g.n
    full = (1 << n) - 1
    coverers = g.closed if kind in ("gamma", "gamma_s") else g.adj
    # threshold[v] = last index that can still cover v
    order = sorted(range(n), key=lambda v: coverers[v].bit_length() - 1 if coverers[v] else -1)
    thresholds = [coverers[v].bit_length() - 1 for v in order]
    double = kind == "gamma_2t"
    secure = kind == "gamma_s"

    def final_ok(mask: int, once: int, twice: int) -> bool:
        if double:
            return twice == full
        if once != full:
            return False
        if secure:
            return _secure_swaps_ok(g, mask)
        return True

    result = None

    def rec(start: int, mask: int, once: int, twice: int, slots: int, cp: int):
        nonlocal result
        if result is not None:
            return
        counter.tick()
        if slots == 0:
            if final_ok(mask, once, twice):
                result = mask
            return
        e = start
        while e <= n - slots:
            cover = coverers[e]
            m2 = mask | (1 << e)
            o2 = once | cover
            t2 = twice | (once & cover)
            # advance fully decided vertices; a vertex none of whose
            # coverers can still be chosen is dead
            cp2 = cp
            ok = True
            while cp2 < n and thresholds[cp2] <= e:
                v = order[cp2]
                need = t2 if double else o2
                if not need >> v & 1:
                    ok = False
                    break
                cp2 += 1
            if ok:
                rec(e + 1, m2, o2, t2, slots - 1, cp2)
                if result is not None:
                    return
            e += 1

    rec(0, 0, 0, 0, k, 0)
    return result


def _min_set_all(g: Graph, k: int, kind: str, counter: _Counter) -> list[int]:
    """Every feasible set of size exactly k, ascending lexicographic."""
    n = g.n
    full = (1 << n) - 1
    coverers = g.closed if kind in ("gamma", "gamma_s") else g.adj
    order = sorted(range(n), key=lambda v: coverers[v].bit_length() - 1)
    thresholds = [coverers[v].bit_length() - 1 for v in order]
    double = kind == "gamma_2t"
    secure = kind == "gamma_s"
    out: list[int] = []

    def rec(start: int, mask: int, once: int, twice: int, slots: int, cp: int):
        counter.tick()
        if slots == 0:
            goal = twice if double else once
            if goal == full and (not secure or _secure_swaps_ok(g, mask)):
                out.append(mask)
            return
        for e in range(start, n - slots + 1):
            cover = coverers[e]
            o2 = once | cover
            t2 = twice | (once & cover)
            cp2 = cp
            dead = False
            while cp2 < n and thresholds[cp2] <= e:
                v = order[cp2]
                need = t2 if double else o2
                if not need >> v & 1:
                    dead = True
                    break
                cp2 += 1
            if not dead:
                rec(e + 1, mask | (1 << e), o2, t2, slots - 1, cp2)

    rec(0, 0, 0, 0, k, 0)
    return out


def minimum_dominating_sets(g: Graph, config: SolverConfig | None = None) -> list[VertexSet]:
    """Every minimum dominating set, ascending lexicographic order."""
    cfg = config or SolverConfig()
    if g.n == 0:
        raise UndefinedInvariantError("invariants undefined on the graph with no vertices")
    counter = _Counter(cfg.node_budget, "gamma")
    per_comp = []
    comps = g.components()
    for comp in comps:
        verts = sorted(comp)
        sub = g.induced(comp) if len(comps) > 1 else g
        k, _ = _solve_min_set(sub, "gamma", counter)
        masks = _min_set_all(sub, k, "gamma", counter)
        per_comp.append([
            sum(1 << verts[i] for i in _bits(m)) for m in masks
        ])
    out = []
    for chosen in itertools.product(*per_comp):
        mask = 0
        for m in chosen:
            mask |= m
        out.append(mask)
    out.sort(key=lambda m: tuple(_bits(m)))
    return [VertexSet(g.n, m) for m in out]


def _secure_swaps_ok(g: Graph, smask: int) -> bool:
    # uniquely-covered analysis: removing u breaks exactly the vertices
    # whose only closed-neighbourhood cover in S is u
    cov1 = cov2 = 0
    for p in _bits(smask):
        c = g.closed[p]
        cov2 |= cov1 & c
        cov1 |= c
    full = (1 << g.n) - 1
    if cov1 != full:
        return False
    unique = cov1 & ~cov2
    for v in _bits(full & ~smask):
        cv = g.closed[v]
        ok = False
        for u in _bits(g.adj[v] & smask):
            if unique & g.closed[u] & ~cv == 0:
                ok = True
                break
        if not ok:
            return False
    return True


def _solve_min_set(g: Graph, invariant: str, counter: _Counter) -> tuple[int, int]:
    """(value, certificate mask) for a connected component."""
    n = g.n
    if invariant == "gamma":
        lo = -(-n // (g.max_degree() + 1))
    elif invariant == "gamma_t":
        lo = 1 if n == 1 else 2
    elif invariant == "gamma_2t":
        lo = min(3, n)
    else:
        lo = 1
    for k in range(max(1, lo), n + 1):
        counter.lower = k
        mask = _min_set_exists(g, k, invariant, counter)
        if mask is not None:
            return k, mask
    raise GraphError(f"no feasible set for {invariant} up to size n")  # unreachable for valid inputs


def _packing_exists(g: Graph, k: int, counter: _Counter) -> int | None:
    n = g.n
    result = None

    def rec(start: int, mask: int, blocked: int, slots: int):
        nonlocal result
        if result is not None:
            return
        counter.tick()
        if slots == 0:
            result = mask
            return
        for e in range(start, n - slots + 1):
            if g.closed[e] & blocked:
                continue
            rec(e + 1, mask | (1 << e), blocked | g.closed[e], slots - 1)
            if result is not None:
                return

    rec(0, 0, 0, k)
    return result


def _solve_rho(g: Graph, counter: _Counter) -> tuple[int, int]:
    best = (0, 0)
    for k in range(1, g.n + 1):
        mask = _packing_exists(g, k, counter)
        if mask is None:
            break
        best = (k, mask)
    return best


# ---------------------------------------------------------------------------
# Roman domination: weight-iterative with forced V1 construction
# ---------------------------------------------------------------------------


def _rdf_first_at_weight(g: Graph, t: int, counter: _Counter) -> tuple[int, int] | None:
    """Canonically smallest (V2, V1) RDF of weight exactly t, or None.

    Given V2, the vertices left undominated by V2 are forced into V1, and
    the remaining V1 slots are filled with the smallest free indices; so
    only V2 is searched, in ascending sequence order.
    """
    n = g.n
    full = (1 << n) - 1
    found = None

    def try_v2(m2: int) -> tuple[int, int] | None:
        counter.tick()
        k1 = t - 2 * m2.bit_count()
        cover2 = 0
        for u in _bits(m2):
            cover2 |= g.adj[u]
        required = full & ~m2 & ~cover2
        extra = k1 - required.bit_count()
        if extra < 0 or n - m2.bit_count() < k1:
            return None
        m1 = required
        for v in range(n):
            if extra == 0:
                break
            bv = 1 << v
            if not (m2 | m1) & bv:
                m1 |= bv
                extra -= 1
        return (m2, m1)

    def rec(last: int, m2: int, size: int):
        nonlocal found
        if found is not None:
            return
        res = try_v2(m2)
        if res is not None:
            found = res
            return
        if size < t // 2:
            for j in range(last + 1, n):
                rec(j, m2 | (1 << j), size + 1)
                if found is not None:
                    return

    rec(-1, 0, 0)
    return found


# ---------------------------------------------------------------------------
# Weak Roman domination: ordered exhaustive search at a fixed weight
# ---------------------------------------------------------------------------

_CP_DOM = 0
_CP_CLOSURE = 1
_CP_OUTER = 2
_CP_DEFENSE = 3


@dataclass(frozen=True)
class _LexContext:
    """Structure tables for searching a connected lexicographic product."""

    n_g: int
    n_h: int
    copy_of: tuple[int, ...]      # flat vertex -> factor-G vertex
    nbr_copies: tuple[tuple[int, ...], ...]  # open factor neighbourhoods
    closed_copy_mask: tuple[int, ...]        # closed factor neighbourhoods, as copy bitmasks
    copy_end: tuple[int, ...]     # last flat index of the closed copy neighbourhood
    h_closed: tuple[int, ...]     # closed neighbourhoods inside H
    h_full: int
    h_prop_p: tuple[bool, ...]    # H-vertices whose closed-neighbourhood complement is a clique
    prune_closure: bool           # per-copy closed weight >= 2 (optimal functions)


def _make_lex_context(factor: Graph, h: Graph) -> _LexContext:
    nh = h.n
    return _LexContext(
        n_g=factor.n,
        n_h=nh,
        copy_of=tuple(i // nh for i in range(factor.n * nh)),
        nbr_copies=tuple(tuple(_bits(factor.adj[u])) for u in range(factor.n)),
        closed_copy_mask=factor.closed,
        copy_end=tuple((factor.closed[u].bit_length()) * nh - 1 for u in range(factor.n)),
        h_closed=h.closed,
        h_full=(1 << nh) - 1,
        h_prop_p=tuple(satisfies_property_p(h, a) for a in range(nh)),
        prune_closure=True,
    )


class _WrdfSearch:
    """All weak Roman dominating functions of one fixed weight on one graph,
    enumerated in canonical (sorted V2, sorted V1) order."""

    def __init__(self, g: Graph, t: int, ctx: _LexContext | None):
        self.g = g
        self.t = t
        self.ctx = ctx
        n = g.n
        self.full = (1 << n) - 1
        cps: list[tuple[int, int, int, int]] = []
        for v in range(n):
            reach = g.closed[v]
            thr1 = reach.bit_length() - 1
            cps.append((thr1, _CP_DOM, _CP_DOM, v))
            ctx2 = reach
            for w in _bits(reach):
                ctx2 |= g.closed[w]
            thr2 = ctx2.bit_length() - 1
            # defence fires once when the defenders are decided (sound but
            # optimistic about undecided victims) and again when the whole
            # two-step context is decided
            cps.append((thr1, _CP_DEFENSE, _CP_DEFENSE, v))
            if thr2 != thr1:
                cps.append((thr2, _CP_DEFENSE, _CP_DEFENSE, v))
        support = [0] * n
        for v in range(n):
            last = g.closed[v].bit_length() - 1
            for e in range(last):
                support[e] |= 1 << v
        self.future_support = tuple(support)
        if ctx is not None:
            for x in range(ctx.n_g):
                thr = ctx.copy_end[x]
                if ctx.prune_closure:
                    cps.append((thr, _CP_CLOSURE, _CP_CLOSURE, x))
                cps.append((thr, _CP_OUTER, _CP_OUTER, x))
        cps.sort()
        self.cps = tuple((thr, kind, payload) for thr, _, kind, payload in cps)

    # -- task list: the fixed top-level partition of the search space -------

    def tasks(self) -> list[tuple[int, int]]:
        n = self.g.n
        out = [(0, i) for i in range(n - self.t + 1)]  # V2 empty, first 1 at i
        if self.t >= 2:
            out.extend((1, i) for i in range(n))       # V2 starting at i
        return out

    def run_task(self, task, first_only: bool, counter: _Counter) -> list[tuple[int, int]]:
        g = self.g
        n = g.n
        t = self.t
        adj = g.adj
        closed = g.closed
        full = self.full
        cps = self.cps
        ncp = len(cps)
        # future_support[e] = vertices that may still gain a coverer from an
        # index above e (conservatively ignoring V2 membership)
        future_support = self.future_support
        ctx = self.ctx
        lookahead = None
        if ctx is not None:
            copy_of = ctx.copy_of
            nbr_copies = ctx.nbr_copies
            h_closed = ctx.h_closed
            h_full = ctx.h_full
            h_prop_p = ctx.h_prop_p
            n_h = ctx.n_h
            n_g = ctx.n_g
            copy_end = ctx.copy_end
            closed_copy_mask = ctx.closed_copy_mask
            w = [0] * n_g

            if ctx.prune_closure:
                def lookahead(e: int, rem: int) -> bool:
                    # greedy disjoint lower bound on the weight that still has
                    # to land in not-yet-decided closed copy neighbourhoods
                    need = 0
                    used = 0
                    for x in range(n_g):
                        if copy_end[x] <= e:
                            continue
                        cm = closed_copy_mask[x]
                        if cm & used:
                            continue
                        total = w[x]
                        for y in nbr_copies[x]:
                            total += w[y]
                        if total < 2:
                            need += 2 - total
                            if need > rem:
                                return False
                            used |= cm
                    return True
        out: list[tuple[int, int]] = []

        def final_check(m2: int, m1: int, cov1: int, cov2: int) -> bool:
            if cov1 != full:
                return False
            pos = m2 | m1
            unique = cov1 & ~cov2
            safe = 0
            rest = m2
            while rest:
                low = rest & -rest
                safe |= adj[low.bit_length() - 1]
                rest ^= low
            good = m1  # movers whose removal breaks nothing (the mover itself
            rest = m1  # is always re-covered by the arriving legion)
            while rest:
                low = rest & -rest
                if unique & closed[low.bit_length() - 1] & ~low:
                    good &= ~low
                rest ^= low
            rest = full & ~pos & ~safe
            while rest:
                low = rest & -rest
                v = low.bit_length() - 1
                rest ^= low
                av = adj[v]
                if av & good:
                    continue
                cv = closed[v]
                ok = False
                cand = av & m1
                while cand:
                    ulow = cand & -cand
                    if unique & closed[ulow.bit_length() - 1] & ~cv == 0:
                        ok = True
                        break
                    cand ^= ulow
                if not ok:
                    return False
            return True

        def advance(cp: int, e: int, m2: int, m1: int, rem: int, cov1: int, cov2: int) -> int:
            """Run checkpoints with threshold <= e; -1 means prune."""
            if cp >= ncp or cps[cp][0] > e:
                return cp
            pos = m2 | m1
            # vertices whose unique cover is certain never to change
            breakable = cov1 & ~cov2
            if rem > 0:
                breakable &= ~future_support[e]
            good = m1  # movers that surely break nothing anywhere
            if breakable:
                rest = m1
                while rest:
                    low = rest & -rest
                    if breakable & closed[low.bit_length() - 1] & ~low:
                        good &= ~low
                    rest ^= low
            while cp < ncp and cps[cp][0] <= e:
                kind = cps[cp][1]
                x = cps[cp][2]
                if kind == _CP_DOM:
                    if not cov1 >> x & 1:
                        return -1
                elif kind == _CP_DEFENSE:
                    if not pos >> x & 1 and adj[x] & m2 == 0:
                        if adj[x] & good:
                            pass
                        else:
                            cand = adj[x] & m1
                            if cand == 0:
                                return -1
                            cx = closed[x]
                            ok = False
                            while cand:
                                ulow = cand & -cand
                                if breakable & closed[ulow.bit_length() - 1] & ~cx == 0:
                                    ok = True
                                    break
                                cand ^= ulow
                            if not ok:
                                return -1
                elif kind == _CP_CLOSURE:
                    total = w[x]
                    for y in nbr_copies[x]:
                        total += w[y]
                    if total < 2:
                        return -1
                else:  # _CP_OUTER
                    outer = 0
                    for y in nbr_copies[x]:
                        outer += w[y]
                    if outer == 0:
                        # no outer support: the copy must dominate itself
                        inner = (pos >> (x * n_h)) & h_full
                        cover = 0
                        while inner:
                            zlow = inner & -inner
                            cover |= h_closed[zlow.bit_length() - 1]
                            inner ^= zlow
                        if cover != h_full:
                            return -1
                    elif outer == 1 and w[x] == 1:
                        # a lone inner legion plus a lone outer legion cannot
                        # defend the copy unless the inner one sits on a
                        # vertex whose non-neighbours pair-dominate H
                        inner = (pos >> (x * n_h)) & h_full
                        if not h_prop_p[inner.bit_length() - 1]:
                            return -1
                cp += 1
            return cp

        class _Stop(Exception):
            pass

        def emit(m2: int, m1: int):
            out.append((m2, m1))
            if first_only:
                raise _Stop

        def dfs_v1(start: int, m2: int, m1: int, slots: int, cp: int, cov1: int, cov2: int):
            counter.tick()
            if slots == 0:
                if final_check(m2, m1, cov1, cov2):
                    emit(m2, m1)
                return
            if slots == 1:
                # the last legion must cover everything still uncovered
                cand = full & ~((1 << start) - 1) & ~m2 & ~m1
                uncov = full & ~cov1
                while uncov and cand:
                    low = uncov & -uncov
                    cand &= closed[low.bit_length() - 1]
                    uncov ^= low
                while cand:
                    elow = cand & -cand
                    cand ^= elow
                    e = elow.bit_length() - 1
                    m1b = m1 | elow
                    c = closed[e]
                    if ctx is not None:
                        w[copy_of[e]] += 1
                    cp2 = advance(cp, e, m2, m1b, 0, cov1 | c, cov2 | (cov1 & c))
                    if cp2 >= 0:
                        dfs_v1(e + 1, m2, m1b, 0, cp2, cov1 | c, cov2 | (cov1 & c))
                    if ctx is not None:
                        w[copy_of[e]] -= 1
                return
            for e in range(start, n - slots + 1):
                be = 1 << e
                if m2 & be:
                    continue
                m1b = m1 | be
                c = closed[e]
                nc2 = cov2 | (cov1 & c)
                nc1 = cov1 | c
                if ctx is not None:
                    w[copy_of[e]] += 1
                cp2 = advance(cp, e, m2, m1b, slots - 1, nc1, nc2)
                if cp2 >= 0 and (lookahead is None or lookahead(e, slots - 1)):
                    dfs_v1(e + 1, m2, m1b, slots - 1, cp2, nc1, nc2)
                if ctx is not None:
                    w[copy_of[e]] -= 1

        def v1_phase(m2: int, k1: int, cov1: int, cov2: int):
            if k1 == 0:
                counter.tick()
                if final_check(m2, 0, cov1, cov2):
                    emit(m2, 0)
            else:
                dfs_v1(0, m2, 0, k1, 0, cov1, cov2)

        def v2_node(last: int, m2: int, size: int, cov1: int, cov2: int):
            counter.tick()
            if lookahead is not None and not lookahead(-1, t - 2 * size):
                return
            v1_phase(m2, t - 2 * size, cov1, cov2)
            if size < t // 2:
                for j in range(last + 1, n):
                    c = closed[j]
                    if ctx is not None:
                        w[copy_of[j]] += 2
                    v2_node(j, m2 | (1 << j), size + 1, cov1 | c, cov2 | (cov1 & c))
                    if ctx is not None:
                        w[copy_of[j]] -= 2

        kind, i = task
        try:
            if kind == 0:
                counter.tick()
                bi = 1 << i
                c = closed[i]
                if ctx is not None:
                    w[copy_of[i]] += 1
                cp2 = advance(0, i, 0, bi, t - 1, c, 0)
                if cp2 >= 0 and (lookahead is None or lookahead(i, t - 1)):
                    dfs_v1(i + 1, 0, bi, t - 1, cp2, c, 0)
                if ctx is not None:
                    w[copy_of[i]] -= 1
            else:
                if ctx is not None:
                    w[copy_of[i]] += 2
                v2_node(i, 1 << i, 1, closed[i], 0)
                if ctx is not None:
                    w[copy_of[i]] -= 2
        except _Stop:
            pass
        return out


def _wrdf_first_at_weight(g, t, ctx, cfg, counter) -> tuple[int, int] | None:
    """Canonically smallest WRDF (m2, m1) of weight exactly t, or None."""
    search = _WrdfSearch(g, t, ctx)
    tasks = search.tasks()
    if cfg.shards <= 1:
        for task in tasks:
            res = search.run_task(task, True, counter)
            if res:
                return res[0]
        return None
    lanes = [tasks[s::cfg.shards] for s in range(cfg.shards)]

    def run_lane(lane):
        local = _Counter(cfg.node_budget, counter.invariant)
        local.lower = counter.lower
        for task in lane:
            res = search.run_task(task, True, local)
            if res:
                return res[0], local.nodes
        return None, local.nodes

    best = None
    with ThreadPoolExecutor(max_workers=cfg.shards) as pool:
        for found, nodes in pool.map(run_lane, lanes):
            counter.nodes += nodes
            if found is not None:
                key = (tuple(_bits(found[0])), tuple(_bits(found[1])))
                if best is None or key < best[0]:
                    best = (key, found)
    return best[1] if best else None


def _wrdf_all_at_weight(g, t, ctx, cfg, counter):
    """All WRDFs of weight exactly t, in canonical order."""
    search = _WrdfSearch(g, t, ctx)
    for task in search.tasks():
        yield from search.run_task(task, False, counter)


# ---------------------------------------------------------------------------
# Driver: per-component dispatch with structure detection
# ---------------------------------------------------------------------------


def _component_products(p: ProductGraph) -> list[tuple[list[int], Graph, Graph | None]]:
    """Split a lexicographic product along factor components.

    Returns (sorted flat vertices, flat component graph, factor component
    or None when the component is a single copy of H).
    """
    out = []
    for comp in p.g_factor.components():
        g_verts = sorted(comp)
        flat_mask = 0
        for u in g_verts:
            flat_mask |= p.copies[u]
        flat_verts = sorted(VertexSet(p.graph.n, flat_mask))
        sub_factor = p.g_factor.induced(comp) if len(g_verts) > 1 else None
        out.append((flat_verts, p.graph.induced(VertexSet(p.graph.n, flat_mask)), sub_factor))
    return out


def _gamma_r_connected(g: Graph, factor: Graph | None, h: Graph | None, cfg, counter) -> tuple[int, int, int]:
    """(value, m2, m1) for a connected graph; ``factor``/``h`` carry the
    lexicographic structure when there is one."""
    use_product = (
        factor is not None
        and h is not None
        and "product" in cfg.bounds
        and not h.is_complete()
    )
    if use_product:
        gr, _, _ = _gamma_r_connected(factor, None, None, cfg, counter)
        gt, _ = _solve_min_set(factor, "gamma_t", counter)
        rho, _ = _solve_rho(factor, counter)
        lo = max(gr, gt, 2 * rho)
        hi = g.n
        ctx = _make_lex_context(factor, h)
    else:
        gamma, _ = _solve_min_set(g, "gamma", counter)
        lo = gamma
        hi = 2 * gamma
        ctx = None
    if cfg.max_weight is not None:
        hi = min(hi, cfg.max_weight)
    for t in range(lo, hi + 1):
        counter.lower = t
        found = _wrdf_first_at_weight(g, t, ctx, cfg, counter)
        if found is not None:
            return t, found[0], found[1]
    raise BudgetExceededError("gamma_r", hi + 1, None)


def solve(invariant: str, g: Graph | ProductGraph, config: SolverConfig | None = None) -> SolveResult:
    """Exact optimum with a canonical certificate.

    Disconnected graphs are solved per component and summed.  ``gamma_t``
    requires no isolated vertex and ``gamma_2t`` requires minimum degree
    two; both raise :class:`UndefinedInvariantError` otherwise, as does the
    graph on zero vertices.
    """
    if invariant not in INVARIANTS:
        raise GraphError(f"unknown invariant {invariant!r} (expected one of {', '.join(INVARIANTS)})")
    cfg = config or SolverConfig()
    product = g if isinstance(g, ProductGraph) else None
    flat = product.graph if product is not None else g
    if flat.n == 0:
        raise UndefinedInvariantError("invariants undefined on the graph with no vertices")
    if invariant == "gamma_t" and flat.min_degree() == 0:
        raise UndefinedInvariantError("total domination undefined: isolated vertex")
    if invariant == "gamma_2t" and flat.min_degree() < 2:
        raise UndefinedInvariantError("double total domination undefined: minimum degree below two")

    started = time.perf_counter()
    counter = _Counter(cfg.node_budget, invariant)

    pieces: list[tuple[list[int], Graph, Graph | None, Graph | None]]
    if product is not None and product.kind == "lexicographic" and invariant == "gamma_r":
        pieces = [
            (verts, comp, factor, product.h_factor if factor is not None else None)
            for verts, comp, factor in _component_products(product)
        ]
    else:
        pieces = []
        for comp in flat.components():
            verts = sorted(comp)
            sub = flat.induced(comp) if len(verts) < flat.n else flat
            pieces.append((verts, sub, None, None))

    total = 0
    set_mask = 0
    m1_mask = 0
    m2_mask = 0
    for verts, sub, factor, h in pieces:
        if invariant == "gamma_r":
            val, m2, m1 = _gamma_r_connected(sub, factor, h, cfg, counter)
            total += val
            for i in _bits(m1):
                m1_mask |= 1 << verts[i]
            for i in _bits(m2):
                m2_mask |= 1 << verts[i]
        elif invariant == "gamma_R":
            gamma, _ = _solve_min_set(sub, "gamma", counter)
            found = None
            for t in range(gamma, 2 * gamma + 1):
                counter.lower = t
                found = _rdf_first_at_weight(sub, t, counter)
                if found is not None:
                    total += t
                    break
            if found is None:  # 2 gamma is always feasible
                raise BudgetExceededError("gamma_R", gamma, 2 * gamma)
            m2, m1 = found
            for i in _bits(m1):
                m1_mask |= 1 << verts[i]
            for i in _bits(m2):
                m2_mask |= 1 << verts[i]
        elif invariant == "rho":
            val, mask = _solve_rho(sub, counter)
            total += val
            for i in _bits(mask):
                set_mask |= 1 << verts[i]
        else:
            val, mask = _solve_min_set(sub, invariant, counter)
            total += val
            for i in _bits(mask):
                set_mask |= 1 << verts[i]

    if invariant in FUNCTION_INVARIANTS:
        certificate: VertexSet | LegionFunction = LegionFunction(flat.n, m1_mask, m2_mask)
    else:
        certificate = VertexSet(flat.n, set_mask)
    millis = (time.perf_counter() - started) * 1000.0
    return SolveResult(invariant, total, certificate, counter.nodes, millis)


def enumerate_optimal_wrdf(g: Graph | ProductGraph, config: SolverConfig | None = None):
    """Yield every weak Roman dominating function of minimum weight, each
    exactly once, in canonical order."""
    cfg = config or SolverConfig()
    product = g if isinstance(g, ProductGraph) else None
    flat = product.graph if product is not None else g
    if flat.n == 0:
        raise UndefinedInvariantError("invariants undefined on the graph with no vertices")
    counter = _Counter(cfg.node_budget, "gamma_r")

    if product is not None and product.kind == "lexicographic":
        parts = _component_products(product)
        pieces = [(verts, comp, factor, product.h_factor if factor else None) for verts, comp, factor in parts]
    else:
        pieces = [(sorted(c), flat.induced(c) if len(flat.components()) > 1 else flat, None, None) for c in flat.components()]

    per_piece = []
    for verts, sub, factor, h in pieces:
        val, _, _ = _gamma_r_connected(sub, factor, h, cfg, counter)
        use_product = factor is not None and h is not None and "product" in cfg.bounds and not h.is_complete()
        ctx = _make_lex_context(factor, h) if use_product else None
        per_piece.append((verts, sub, ctx, val))

    if len(per_piece) == 1:
        verts, sub, ctx, val = per_piece[0]
        for m2, m1 in _wrdf_all_at_weight(sub, val, ctx, cfg, counter):
            gm1 = 0
            gm2 = 0
            for i in _bits(m1):
                gm1 |= 1 << verts[i]
            for i in _bits(m2):
                gm2 |= 1 << verts[i]
            yield LegionFunction(flat.n, gm1, gm2)
        return

    # disconnected: take the cross product of per-component optima and
    # re-sort globally (component additivity makes this exhaustive)
    lists = []
    for verts, sub, ctx, val in per_piece:
        opts = []
        for m2, m1 in _wrdf_all_at_weight(sub, val, ctx, cfg, counter):
            gm1 = 0
            gm2 = 0
            for i in _bits(m1):
                gm1 |= 1 << verts[i]
            for i in _bits(m2):
                gm2 |= 1 << verts[i]
            opts.append((gm2, gm1))
        lists.append(opts)
    combos = []
    for chosen in itertools.product(*lists):
        gm2 = 0
        gm1 = 0
        for m2, m1 in chosen:
            gm2 |= m2
            gm1 |= m1
        combos.append(LegionFunction(flat.n, gm1, gm2))
    combos.sort(key=lambda f: f.key())
    yield from combos


def is_weak_roman_graph(g: Graph, config: SolverConfig | None = None) -> bool:
    """gamma_r(G) == 2 gamma(G)."""
    return solve("gamma_r", g, config).value == 2 * solve("gamma", g, config).value


def is_roman_graph(g: Graph, config: SolverConfig | None = None) -> bool:
    """gamma_R(G) == 2 gamma(G)."""
    return solve("gamma_R", g, config).value == 2 * solve("gamma", g, config).value


# ---------------------------------------------------------------------------
# Exhaustive oracle (anti-bug cross check; no pruning, raw predicates only)
# ---------------------------------------------------------------------------

_ORACLE_SET_LIMIT = 20
_ORACLE_FUNCTION_LIMIT = 12


def oracle(invariant: str, g: Graph | ProductGraph) -> int:
    """Exact invariant value by exhaustive scan over all subsets (2^n) or
    all legion functions (3^n), using only the definitional predicates."""
    if invariant not in INVARIANTS:
        raise GraphError(f"unknown invariant {invariant!r} (expected one of {', '.join(INVARIANTS)})")
    flat = g.graph if isinstance(g, ProductGraph) else g
    n = flat.n
    if n == 0:
        raise UndefinedInvariantError("invariants undefined on the graph with no vertices")
    if invariant in FUNCTION_INVARIANTS:
        if n > _ORACLE_FUNCTION_LIMIT:
            raise GraphError(f"oracle limit: function invariants need n <= {_ORACLE_FUNCTION_LIMIT}")
        test = is_rdf if invariant == "gamma_R" else is_wrdf
        best = None
        for values in itertools.product((0, 1, 2), repeat=n):
            weight = sum(values)
            if best is not None and weight >= best:
                continue
            f = LegionFunction.from_values(values)
            if test(flat, f):
                best = weight
        return best
    if n > _ORACLE_SET_LIMIT:
        raise GraphError(f"oracle limit: set invariants need n <= {_ORACLE_SET_LIMIT}")
    if invariant == "gamma_t" and flat.min_degree() == 0:
        raise UndefinedInvariantError("total domination undefined: isolated vertex")
    if invariant == "gamma_2t" and flat.min_degree() < 2:
        raise UndefinedInvariantError("double total domination undefined: minimum degree below two")
    predicate = {
        "gamma": is_dominating,
        "gamma_t": is_total_dominating,
        "gamma_2t": is_double_total_dominating,
        "gamma_s": is_secure_dominating,
        "rho": is_2packing,
    }[invariant]
    best = None
    maximize = invariant == "rho"
    for mask in range(1 << n):
        size = mask.bit_count()
        if best is not None:
            if maximize and size <= best:
                continue
            if not maximize and size >= best:
                continue
        if predicate(flat, mask):
            best = size
    return best
