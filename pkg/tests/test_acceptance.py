"""Acceptance gate: one test per headline criterion, each printing PASS/FAIL.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines as they
happen; they are also repeated in the terminal summary.
"""
import io
import random
from itertools import combinations_with_replacement
from math import factorial

from genuslab.cli import run
from genuslab.dissonance import A, INF, dissonance_feasible, eval_window, monoid_window, scan_column, verify_item_vi
from genuslab.genus import coefficient
from genuslab.identities import (
    conjecture_scan,
    h_triple_closed_form,
    pair_gap,
    verify_pair_identity,
    verify_sign_lemma_pair,
    verify_sign_lemma_triple,
)
from genuslab.numeric import bernoulli, hirzebruch_B
from genuslab.signature import ProjectiveProduct, hirzebruch_check
from oracles import bfs_monoid, brute_feasible, brute_overlap, enum_ap


def _pairs(max_weight):
    return [(i, j) for i in range(1, max_weight) for j in range(i, max_weight - i + 1)]


def _triples(max_weight):
    return [(i, j, k) for i in range(1, max_weight) for j in range(i, max_weight) for k in range(j, max_weight - i - j + 1)]


def test_closed_form_agreement(criterion):
    c = criterion("closed form coefficient(L,[n]) for 1 <= n <= 25", 60)
    bad = [n for n in range(1, 26)
           if coefficient("L", [n]) != 2 ** (2 * n) * (2 ** (2 * n - 1) - 1) * hirzebruch_B(n) / factorial(2 * n)]
    c.finish(not bad, f"mismatches: {bad}" if bad else "25 exact equalities")


def test_pair_identities(criterion):
    c = criterion("pair identities for i <= j, i+j <= 30", 120)
    pairs = _pairs(30)
    bad = [p for p in pairs if not verify_pair_identity(*p)]
    c.finish(not bad, f"failures: {bad[:5]}" if bad else f"{len(pairs)} pairs exact")


def test_pair_sign_lemma(criterion):
    c = criterion("h_{i,j} < 0 for i+j <= 30, and the pi-cleared gap < 0", 120)
    reps = verify_sign_lemma_pair(30)
    bad = [r.lam for r in reps if not (r.value < 0)]
    gaps = [p for p in _pairs(30) if not pair_gap(*p) < 0]
    ok = not bad and not gaps and len(reps) == len(_pairs(30))
    c.finish(ok, f"{len(reps)} coefficients negative" if ok else f"sign {bad[:5]} gap {gaps[:5]}")


def test_triple_sign_lemma(criterion):
    c = criterion("h_{i,j,k} > 0 for i+j+k <= 13 and extended to <= 20", 300)
    core = verify_sign_lemma_triple(13)
    ext = verify_sign_lemma_triple(20)
    bad = [r.lam for r in ext if not r.value > 0]
    ok = not bad and len(ext) == len(_triples(20)) and all(r.value > 0 for r in core)
    c.finish(ok, f"{len(core)} + {len(ext) - len(core)} coefficients positive" if ok else f"failures {bad[:5]}")


def test_triple_closed_form(criterion):
    c = criterion("triple closed form equals coefficient extraction, i+j+k <= 20", None)
    trip = _triples(20)
    bad = [t for t in trip if h_triple_closed_form(*t) != coefficient("L", list(t))]
    c.finish(not bad, f"{len(trip)} triples exact" if not bad else f"failures {bad[:5]}")


def test_conjecture_scan(criterion):
    c = criterion("(-1)^(r-1) h_lambda > 0 for every partition of weight <= 13", None)
    reps = conjecture_scan("L", 13)
    bad = [r.lam for r in reps if not r.conforms]
    ok = not bad and len(reps) == sum(_partition_count(w) for w in range(1, 14))
    c.finish(ok, f"{len(reps)} partitions conform" if ok else f"failures {bad[:5]}")


def _partition_count(n):
    # Euler pentagonal recurrence, independent of the enumerator
    p = [1] + [0] * n
    for m in range(1, n + 1):
        k, total = 1, 0
        while True:
            g1, g2 = k * (3 * k - 1) // 2, k * (3 * k + 1) // 2
            if g1 > m:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[m - g1]
            if g2 <= m:
                total += sign * p[m - g2]
            k += 1
        p[m] = total
    return p[n]


def test_signature_oracle(criterion):
    c = criterion("signature check on CP^{2m}, m <= 5, and 2-factor even products of dim <= 40", 60)
    spaces = [ProjectiveProduct((2 * m,)) for m in range(1, 6)]
    spaces += [ProjectiveProduct((a, b)) for a, b in combinations_with_replacement(range(2, 19, 2), 2) if 2 * (a + b) <= 40]
    bad = [str(m) for m in spaces if not hirzebruch_check(m)]
    c.finish(not bad, f"{len(spaces)} manifolds" if not bad else f"failures {bad}")


def test_dissonance_necessity(criterion):
    c = criterion("infeasible for every even s <= 18 and 50 <= n <= 150", None)
    bad = [(n, s) for s in range(2, 19, 2) for n in range(50, 151) if dissonance_feasible(n, s).feasible]
    c.finish(not bad, f"{9 * 101} points infeasible" if not bad else f"feasible at {bad[:5]}")


def test_dissonance_scan_s20(criterion):
    c = criterion("s = 20 scan over n <= 120 against the brute-force oracle", 60)
    row = scan_column(20, 120)
    oracle = [n for n in range(11, 121) if brute_feasible(n, 20)]
    oracle_min = oracle[0] if oracle else None
    stable = oracle == list(range(oracle_min, 121)) if oracle else False
    w95 = row.witnesses.get(95)
    flagged = (w95 is not None and w95.witness == 750 and w95.decomposition == (150,) * 5
               and brute_overlap(95, 20)[0] == 750 and not row.matches_threshold)
    same = list(row.feasible_ns) == oracle
    ok = row.min_feasible_n == oracle_min == 97 and same and stable and flagged
    c.finish(ok, f"minimal n = {row.min_feasible_n} (oracle {oracle_min}, same set {same}, stable {stable}); "
                 f"n = 95 flagged {flagged}: witness {w95.witness if w95 is not None else None} = 5*150")


def test_item_vi_chain(criterion):
    c = criterion("item (vi) chain for 3 <= n <= 12, 2 <= ell <= 8, bound 1000", None)
    bad = [(n, ell) for n in range(3, 13) for ell in range(2, 9) if not verify_item_vi(n, ell, 1000)]
    c.finish(not bad, "70 (n, ell) pairs" if not bad else f"failures {bad}")


def test_property_suites(criterion, tmp_path, monkeypatch):
    c = criterion("property suites: von Staudt-Clausen, window arithmetic, monoid, CLI determinism", None)
    notes = []

    primes = [p for p in range(2, 62) if all(p % q for q in range(2, p))]
    vsc = all(bernoulli(2 * n).denominator == _prod(p for p in primes if (2 * n) % (p - 1) == 0) for n in range(1, 31))
    notes.append(f"von Staudt {'ok' if vsc else 'FAIL'}")

    rng = random.Random(2026)
    window_ok = 0
    for _ in range(1000):
        s, t = _ap(rng), _ap(rng)
        if s[2] == INF and t[2] == INF:
            t = (t[0], t[1], t[0] + 5 * t[1]) if t[1] else t
        op = rng.randrange(3)
        lo = rng.randint(-80, 60)
        hi = lo + rng.randint(0, 140)
        S, T = enum_ap(*s, 500), enum_ap(*t, 500)
        expr, want = [(A(*s) + A(*t), {a + b for a in S for b in T}),
                      (A(*s) - A(*t), {a - b for a in S for b in T}),
                      (A(*s) | A(*t), S | T)][op]
        window_ok += set(eval_window(expr, lo, hi).elements) == {x for x in want if lo <= x <= hi}
    notes.append(f"window {window_ok}/1000")

    monoid_ok = 0
    for _ in range(200):
        bound = rng.randint(0, 2000)
        gens = sorted({rng.randint(1, 400) for _ in range(rng.randint(0, 40))})
        monoid_ok += set(monoid_window(gens, bound).elements) == bfs_monoid(gens, bound)
    notes.append(f"monoid {monoid_ok}/200")

    monkeypatch.setenv("GENUSLAB_CACHE_DIR", str(tmp_path))
    outs = set()
    for argv in (["scan", "conjecture", "--max-weight", "8", "--format", "json"],
                 ["dissonance", "scan", "--s", "20", "--n-min", "90", "--n-max", "100", "--format", "csv"],
                 ["lpoly", "--weight", "7", "--format", "json"]):
        runs = []
        for _ in range(3):
            buf = io.StringIO()
            runs.append((run(argv, stdout=buf), buf.getvalue()))
        outs.add(len(set(runs)) == 1)
    det = outs == {True}
    notes.append(f"CLI determinism {'ok' if det else 'FAIL'}")

    c.finish(vsc and window_ok == 1000 and monoid_ok == 200 and det, ", ".join(notes))


def _ap(rng):
    u, v = rng.randint(-30, 30), rng.randint(0, 8)
    if v == 0:
        return (u, 0, u)
    if rng.random() < 0.35:
        return (u, v, INF)
    return (u, v, u + v * rng.randint(0, 15))


def _prod(xs):
    out = 1
    for x in xs:
        out *= x
    return out
