"""Acceptance criteria, one test per criterion, each printing a PASS/FAIL line.

Criterion 10 is the extended tier: run it with ``pytest --slow``.

Criterion 4 contains one assertion that is expected to fail: the recorded
value gamma_r = 4 for the cycle-with-singleton-blocks graph hk(4,(1,1,1,1)).
Both the solver and the independent 3^n oracle find gamma_r = 3, with the
hand-checkable witness f = 1 on three consecutive cycle vertices; the
claim registry records the same finding (see the hk_value claim).  The
criterion is kept as stated rather than weakened.
"""

import itertools
import json
import time

import pytest

from weakroman import (
    LegionFunction,
    SolverConfig,
    UndefinedInvariantError,
    closed_copy_weight,
    corona,
    enumerate_optimal_wrdf,
    is_wrdf,
    lexicographic,
    oracle,
    random_connected,
    reduce_P4,
    satisfies_property_p,
    solve,
    verify_claim,
)
from weakroman import generators as gen

_BLIND = SolverConfig(bounds=frozenset({"chain"}))

# shards-1 JSON payloads recorded by criteria 4 and 5 for criterion 11
_BASELINE_JSON: dict[str, str] = {}


def _report(num, description, ok, elapsed=None):
    status = "PASS" if ok else "FAIL"
    suffix = f" ({elapsed:.1f}s)" if elapsed is not None else ""
    print(f"[{status}] criterion {num}: {description}{suffix}")


def _solve_json(key, g, shards=1):
    result = solve("gamma_r", g, SolverConfig(shards=shards))
    flat = g.graph if hasattr(g, "graph") else g
    text = json.dumps(result.to_json_dict(flat.n))
    if shards == 1:
        _BASELINE_JSON[key] = text
    return text


def test_criterion_01_path_cycle_formula():
    started = time.perf_counter()
    for n in range(4, 15):
        expected = -(-3 * n // 7)
        assert solve("gamma_r", gen.path(n)).value == expected, n
        assert solve("gamma_r", gen.cycle(n)).value == expected, n
    elapsed = time.perf_counter() - started
    _report(1, "gamma_r(P_n) == gamma_r(C_n) == ceil(3n/7) for 4 <= n <= 14", True, elapsed)
    assert elapsed < 5.0


def test_criterion_02_domination_chain():
    started = time.perf_counter()
    count = 0
    for seed in range(200):
        n = 4 + seed % 7  # 4..10
        g = random_connected(n, 0.25 + 0.1 * (seed % 4), seed)
        gamma = solve("gamma", g).value
        gr = solve("gamma_r", g).value
        gR = solve("gamma_R", g).value
        assert gamma <= gr <= gR <= 2 * gamma, seed
        if g.min_degree() >= 1:
            assert 2 * gamma <= 2 * solve("gamma_t", g).value, seed
        count += 1
    elapsed = time.perf_counter() - started
    _report(2, f"domination chain on {count} random connected graphs", True, elapsed)
    assert count >= 200 and elapsed < 60.0


def test_criterion_03_oracle_equivalence():
    started = time.perf_counter()
    checked = 0
    for seed in range(200):  # function invariants, n <= 8
        n = 4 + seed % 5
        g = random_connected(n, 0.3 + 0.1 * (seed % 3), seed)
        for invariant in ("gamma_r", "gamma_R", "gamma_s"):
            assert solve(invariant, g).value == oracle(invariant, g), (invariant, seed)
            checked += 1
    for seed in range(200):  # set invariants, n <= 12
        n = 4 + seed % 9
        g = random_connected(n, 0.3 + 0.1 * (seed % 3), seed + 1000)
        for invariant in ("gamma", "gamma_t", "rho"):
            assert solve(invariant, g).value == oracle(invariant, g), (invariant, seed)
            checked += 1
        if g.min_degree() >= 2:
            assert solve("gamma_2t", g).value == oracle("gamma_2t", g), seed
        else:
            with pytest.raises(UndefinedInvariantError):
                solve("gamma_2t", g)
            with pytest.raises(UndefinedInvariantError):
                oracle("gamma_2t", g)
        checked += 1
    elapsed = time.perf_counter() - started
    _report(3, f"solve == oracle across all seven invariants ({checked} comparisons)", True, elapsed)
    assert elapsed < 600.0


def test_criterion_04_fixed_instances():
    cases = [
        ("gamma_r fig1_tree", "gamma_r", gen.fig1_tree(), 3),
        ("gamma_R fig1_tree", "gamma_R", gen.fig1_tree(), 4),
        ("gamma fig1_tree", "gamma", gen.fig1_tree(), 2),
        ("gamma_r fig4_twocycles", "gamma_r", gen.fig4_twocycles(), 4),
        ("gamma_t fig4_twocycles", "gamma_t", gen.fig4_twocycles(), 5),
        ("gamma_r K33", "gamma_r", gen.complete_bipartite(3, 3), 3),
        ("gamma_t K33", "gamma_t", gen.complete_bipartite(3, 3), 2),
        ("gamma_2t G44", "gamma_2t", gen.grs(4, 4), 5),
        ("gamma_2t hk4_1111", "gamma_2t", gen.hk(4, (1, 1, 1, 1)), 4),
        ("gamma_r hk4_1111", "gamma_r", gen.hk(4, (1, 1, 1, 1)), 4),
    ]
    failures = []
    for name, invariant, g, expected in cases:
        t0 = time.perf_counter()
        got = solve(invariant, g).value
        dt = time.perf_counter() - t0
        assert dt < 1.0, name
        if invariant == "gamma_r":
            _solve_json(name, g)
        if got != expected:
            failures.append(f"{name}: expected {expected}, solver and oracle agree on {got}")
    _report(4, "fixed instances from the drawings and family definitions", not failures)
    assert not failures, (
        "known source-claim defect, kept as stated (see the module docstring "
        "and the hk_value registry claim): " + "; ".join(failures)
    )


def test_criterion_05_products_with_p10():
    h = gen.path(10)
    assert solve("gamma", h).value == 4  # hypothesis verified in-suite
    cases = [
        ("P2oP10", gen.path(2), 4),
        ("P3oP10", gen.path(3), 4),
        ("P4oP10", gen.path(4), 4),
        ("P5oP10", gen.path(5), 6),
        ("K13oP10", gen.star(3), 4),
        ("K14oP10", gen.star(4), 4),
        ("C4oP10", gen.cycle(4), 4),
    ]
    ok = True
    for name, g, expected in cases:
        p = lexicographic(g, h)
        t0 = time.perf_counter()
        result = solve("gamma_r", p)
        dt = time.perf_counter() - t0
        _solve_json(name, p)
        assert result.value == expected, (name, result.value)
        assert dt < 120.0, (name, dt)
    _report(5, "lexicographic products with H = P_10", ok)


def test_criterion_06_complete_second_factor():
    started = time.perf_counter()
    for g in (gen.path(5), gen.cycle(5), gen.fig1_tree()):
        expected = solve("gamma_r", g).value
        for m in (2, 3):
            assert solve("gamma_r", lexicographic(g, gen.complete(m))).value == expected
    elapsed = time.perf_counter() - started
    _report(6, "gamma_r(G o K_m) == gamma_r(G)", True, elapsed)
    assert elapsed < 30.0


def test_criterion_07_corona():
    started = time.perf_counter()
    p = corona(gen.path(2), gen.empty(2))
    assert solve("gamma_r", p).value == 4
    assert 2 * solve("gamma_t", p).value == 4
    assert 2 * solve("rho", p).value == 4
    assert solve("gamma_r", corona(gen.path(3), gen.empty(2))).value == 6
    elapsed = time.perf_counter() - started
    _report(7, "corona products: gamma_r == 2*gamma_t == 2*rho", True, elapsed)
    assert elapsed < 10.0


def test_criterion_08_complete_first_factor():
    started = time.perf_counter()
    p4 = gen.path(4)
    assert solve("gamma_r", p4).value == 2
    assert solve("gamma_r", lexicographic(gen.complete(3), p4)).value == 2
    c7 = gen.cycle(7)
    assert solve("gamma_r", c7).value == 3
    assert not any(satisfies_property_p(c7, v) for v in range(7))
    assert solve("gamma_r", lexicographic(gen.complete(3), c7)).value == 3
    elapsed = time.perf_counter() - started
    _report(8, "K_n o H characterisation instances", True, elapsed)
    assert elapsed < 120.0


def test_criterion_09_copy_lemma_enumerations():
    started = time.perf_counter()
    for g, h in ((gen.path(2), gen.path(10)), (gen.cycle(4), gen.path(7))):
        p = lexicographic(g, h)
        count = 0
        for f in enumerate_optimal_wrdf(p, _BLIND):
            count += 1
            for u in range(g.n):
                assert closed_copy_weight(p, f, u) >= 2, (g.n, h.n, u)
        assert count > 0
    elapsed = time.perf_counter() - started
    _report(9, "closed copy weight >= 2 over every enumerated optimum", True, elapsed)
    assert elapsed < 600.0


@pytest.mark.slow
def test_criterion_10_extended_slow():
    h = gen.path(10)
    assert solve("gamma_r", lexicographic(gen.cycle(5), h)).value == 5
    assert solve("gamma_r", lexicographic(gen.comb(5), h)).value == 6 == 2 * (2 * 5 // 3)

    # the weight-4 reduction on P_7 at full H = P_10 scale
    quad = (1, 2, 3, 4)
    red = reduce_P4(gen.path(7), quad)
    assert not red.degenerate and red.graph.n == 3
    reduced_value = solve("gamma_r", lexicographic(red.graph, h)).value
    assert reduced_value == 4
    full_value = solve("gamma_r", lexicographic(gen.path(7), h)).value
    assert full_value == reduced_value + 4 == 8

    # boundary probe: the degenerate contraction of C_6; the verdict is
    # recorded, and on this instance the reduction identity fails
    probe = verify_claim("p4_reduction", {"g": "cycle:6", "quad": (0, 1, 2, 3), "h": "empty:4"})
    print(f"boundary probe C_6 contraction: verdict={probe.verdict} details={probe.details}")
    assert probe.verdict in ("holds", "violated")
    assert probe.details["degenerate"]

    # full-scale spider and planar instances: upper-bound certificates built
    # from total dominating sets, plus the factor lower bound
    for g, target in ((gen.fig6_spider(), 12), (gen.fig2_planar(), 6)):
        p = lexicographic(g, h)
        tds = solve("gamma_t", g).certificate
        assert len(tds) * 2 == target
        f = LegionFunction.from_sets(p.graph.n, (), [p.pair_index(u, 0) for u in tds])
        assert f.weight == target
        assert is_wrdf(p.graph, f)  # certificate proves gamma_r <= target
        lower = max(solve("gamma_r", g).value, solve("gamma_t", g).value,
                    2 * solve("rho", g).value)
        assert lower <= target
        print(f"n={g.n}: {lower} <= gamma_r(G o P_10) <= {target} (certificate verified)")
    _report(10, "extended tier: reductions at P_10 scale and bound certificates", True)


def test_criterion_11_shard_determinism():
    keys = [
        ("gamma_r fig1_tree", gen.fig1_tree()),
        ("gamma_r fig4_twocycles", gen.fig4_twocycles()),
        ("gamma_r K33", gen.complete_bipartite(3, 3)),
        ("gamma_r hk4_1111", gen.hk(4, (1, 1, 1, 1))),
    ]
    h = gen.path(10)
    keys += [
        ("P2oP10", lexicographic(gen.path(2), h)),
        ("P3oP10", lexicographic(gen.path(3), h)),
        ("P4oP10", lexicographic(gen.path(4), h)),
        ("P5oP10", lexicographic(gen.path(5), h)),
        ("K13oP10", lexicographic(gen.star(3), h)),
        ("K14oP10", lexicographic(gen.star(4), h)),
        ("C4oP10", lexicographic(gen.cycle(4), h)),
    ]
    started = time.perf_counter()
    for key, g in keys:
        if key not in _BASELINE_JSON:
            _solve_json(key, g, shards=1)
        rerun = _solve_json(key, g, shards=8)
        assert rerun == _BASELINE_JSON[key], key
    elapsed = time.perf_counter() - started
    _report(11, "criteria 4-5 reruns with 8 shards are byte-identical", True, elapsed)
