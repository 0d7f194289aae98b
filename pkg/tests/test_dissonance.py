import random
from fractions import Fraction

import numpy as np
import pytest

from genuslab.dissonance import (
    INF,
    A,
    WindowError,
    decompose,
    derive_constraints,
    dissonance_feasible,
    eval_window,
    monoid_window,
    threshold_min_n,
    proof_constants,
    relevant_window,
    scan_column,
    sharp_min_n,
    t_set,
    verify_item_vi,
    verify_item_viii,
)
from genuslab.dissonance.items import item_vi_checks
from oracles import bfs_monoid, brute_feasible, brute_overlap, enum_ap


def test_eval_window_examples():
    assert eval_window(A(3, 2, 9), 0, 10).elements == (3, 5, 7, 9)
    got = eval_window(A(0, 1, 2) + A(10, 5, 20), 0, 25).elements
    assert got == tuple(sorted({a + b for a in range(3) for b in (10, 15, 20)}))
    assert got == (10, 11, 12, 15, 16, 17, 20, 21, 22)
    assert eval_window(A(5, 3, INF) - A(0, 1, 1), 0, 10).elements == (4, 5, 7, 8, 10)


def test_apset_wellformed():
    with pytest.raises(ValueError):
        A(0, 2, 5)
    with pytest.raises(ValueError):
        A(3, 0, 4)
    with pytest.raises(ValueError):
        A(3, 1, 2)
    assert eval_window(A(4, 0, 4), -10, 10).elements == (4,)


def test_diff_of_two_infinite_sets_rejected():
    with pytest.raises(WindowError):
        eval_window(A(0, 3, INF) - A(1, 2, INF), 0, 10)


def test_sum_of_two_infinite_sets_ok():
    got = eval_window(A(0, 3, INF) + A(1, 5, INF), 0, 30).elements
    assert got == tuple(sorted({a + b for a in range(0, 31, 3) for b in range(1, 31, 5) if a + b <= 30}))


def _random_ap(rng, infinite_ok=True):
    u = rng.randint(-30, 30)
    v = rng.randint(0, 9)
    if v == 0:
        return (u, 0, u)
    if infinite_ok and rng.random() < 0.4:
        return (u, v, INF)
    return (u, v, u + v * rng.randint(0, 12))


def test_window_arithmetic_vs_brute_force_1000_cases():
    rng = random.Random(20261014)
    for _ in range(1000):
        s = _random_ap(rng)
        t = _random_ap(rng, infinite_ok=(s[2] != INF))
        op = rng.choice(["sum", "diff", "union"])
        if op == "diff" and s[2] == INF and t[2] == INF:
            op = "sum"
        lo = rng.randint(-80, 80)
        hi = lo + rng.randint(0, 120)
        cap = 400
        S, T = enum_ap(*s, cap), enum_ap(*t, cap)
        if op == "sum":
            expr, want = A(*s) + A(*t), {a + b for a in S for b in T}
        elif op == "diff":
            expr, want = A(*s) - A(*t), {a - b for a in S for b in T}
        else:
            expr, want = A(*s) | A(*t), S | T
        want = {x for x in want if lo <= x <= hi}
        assert set(eval_window(expr, lo, hi).elements) == want, (s, t, op, lo, hi)


def test_nested_expression_vs_brute_force():
    rng = random.Random(7)
    for _ in range(200):
        s, t, r = _random_ap(rng), _random_ap(rng, False), _random_ap(rng, False)
        lo, hi = rng.randint(-60, 0), rng.randint(0, 90)
        S, T, R = enum_ap(*s, 500), enum_ap(*t, 500), enum_ap(*r, 500)
        want = {a - b + c for a in S for b in T for c in R}
        want = {x for x in want if lo <= x <= hi and x >= 0}
        got = eval_window((A(*s) - A(*t) + A(*r)).naturals(), lo, hi)
        assert set(got.elements) == want


def test_monoid_window_examples():
    assert monoid_window([3, 5], 12).elements == (0, 3, 5, 6, 8, 9, 10, 11, 12)
    assert monoid_window([], 10).elements == (0,)
    big = list(range(150, 170)) + list(range(318, 338))
    assert 750 in monoid_window(big, 760)


@pytest.mark.parametrize("use_numba", [True, False])
def test_monoid_vs_bfs_200_cases(use_numba):
    rng = random.Random(1 if use_numba else 2)
    for _ in range(200):
        bound = rng.randint(0, 2000)
        k = rng.randint(0, 40)
        gens = sorted({rng.randint(1, max(1, min(bound, 300))) for _ in range(k)})
        got = monoid_window(gens, bound, use_numba=use_numba)
        assert set(got.elements) == bfs_monoid(gens, bound)


def test_decompose():
    gens = [3, 5]
    reach = monoid_window(gens, 40).as_set()
    for x in reach:
        d = decompose(x, gens, reach)
        assert sum(d) == x and all(g in gens for g in d)


def test_t_set_examples():
    t = t_set(85, 400)
    assert set(t) == set(range(150, 170)) | set(range(318, 338))
    assert set(t_set(95, 200)) == set(range(170, 190))


def test_t_set_n1_degenerate():
    # A[1:0:1] = {1}; {1} - {0..19} meets N in {0, 1}
    assert t_set(1, 10).elements == (0, 1)


def test_relevant_window_examples():
    r = relevant_window(95)
    assert r.runs() == [(170, 189), (358, 377), (546, 565), (734, 753)]
    assert relevant_window(2).elements == tuple(range(10))
    assert relevant_window(1).elements == (0, 1)


def test_feasibility_examples():
    f = dissonance_feasible(95, 18)
    assert not f and f.witness == 170
    assert {170, 171} <= set(f.overlap)
    f = dissonance_feasible(95, 20)
    assert not f and f.witness == 750 and f.decomposition == (150,) * 5
    assert dissonance_feasible(97, 20).feasible
    with pytest.raises(ValueError):
        dissonance_feasible(95, 19)


@pytest.mark.parametrize("n", [60, 94, 95, 96, 97, 98, 110])
@pytest.mark.parametrize("s", [18, 20, 22])
def test_feasibility_vs_brute_oracle(n, s):
    assert dissonance_feasible(n, s).feasible == brute_feasible(n, s)


def test_witness_is_minimum_of_brute_overlap():
    for n, s in [(95, 20), (96, 20), (95, 18), (100, 22)]:
        f = dissonance_feasible(n, s)
        assert f.witness == brute_overlap(n, s)[0]


def test_s_at_most_19_never_feasible():
    for s in range(2, 19, 2):
        for n in range(max(20, s), 131, 11):
            assert not dissonance_feasible(n, s).feasible


def test_feasible_points_satisfy_cluster_constraints():
    for row in derive_constraints(30, 130, s_min=20, n_min=60):
        for n in row.feasible_ns:
            gens = t_set(n - row.s // 2, 8 * n - 7)
            first = gens.runs()[0]
            assert 5 * first[0] > 8 * n - 7
            assert first[1] < 2 * n - 20


def test_derive_constraints_columns():
    rows = {r.s: r for r in derive_constraints(22, 130, s_min=18, n_min=40)}
    assert rows[18].min_feasible_n is None
    assert rows[20].min_feasible_n == 97 and rows[20].threshold_n == 95 and not rows[20].matches_threshold
    assert rows[20].eventually_stable
    assert rows[22].min_feasible_n == sharp_min_n(22) == 102
    assert 95 in rows[20].witnesses and rows[20].witnesses[95].witness == 750


def test_closed_forms():
    assert threshold_min_n(20) == 95
    assert threshold_min_n(19) is None
    assert sharp_min_n(20) == 97
    assert sharp_min_n(20, shift_max=18) == 95


def test_alternative_cluster_reading():
    row = scan_column(20, 120, n_min=80, shift_max=18)
    assert row.min_feasible_n == 95


def test_proof_constants_examples():
    c = proof_constants(95, 20)
    assert (c.b, c.c2, c.first_obstruction, c.y_kill, c.v_kill_stated) == (84, 11, 526, 734, 621)
    assert c.first_obstruction == 6 * 95 - 4 * c.c2
    assert c.v_kill == 7 * 95 - 26
    assert c.k_bound == Fraction(5 * 95, 4) - 11 == Fraction(10775, 100)
    c = proof_constants(100, 20)
    assert (c.b, c.c2, c.k_bound) == (89, 11, 114)
    with pytest.raises(ValueError):
        proof_constants(95, 19)


@pytest.mark.parametrize("n, ell, bound", [(10, 8, 500), (5, 2, 200), (3, 3, 100)])
def test_item_vi_examples(n, ell, bound):
    assert verify_item_vi(n, ell, bound)


def test_item_vi_chain_relations_are_nontrivial():
    checks = item_vi_checks(4, 5, 300)
    assert [c.relation for c in checks] == [
        "definition = line1", "line1 = line2", "line2 = line3", "line3 ⊆ estimate"]
    assert all(len(c.left) > 10 for c in checks)
    # the last relation is a strict containment for these parameters
    assert checks[-1].left.as_set() < checks[-1].right.as_set()


def test_item_viii_equality():
    for n in range(3, 9):
        for ell in range(2, 9):
            assert verify_item_viii(n, ell, 600)


def test_kernels_backends_agree():
    from genuslab.dissonance.kernels import diff_mask, sum_mask

    rng = np.random.default_rng(3)
    for _ in range(50):
        a = rng.integers(-100, 100, size=rng.integers(0, 40))
        b = rng.integers(-100, 100, size=rng.integers(0, 40))
        lo, hi = -50, 60
        assert np.array_equal(sum_mask(a, b, lo, hi, True), sum_mask(a, b, lo, hi, False))
        assert np.array_equal(diff_mask(a, b, lo, hi, True), diff_mask(a, b, lo, hi, False))
