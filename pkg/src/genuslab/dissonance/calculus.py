"""Dimension sets, generated submonoids and the stabilization (dissonance) test.

``shift_max`` is the top of the progression A[0:1:shift_max] subtracted in
T_{2n}; the default 19 is the literal reading, 18 is the alternative
"19-element" reading that reproduces 2n > 5s + 88.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import floor

import numpy as np

from .kernels import monoid_mask
from .sets import INF, A, SetExpr, WindowSet, eval_window

DEFAULT_SHIFT_MAX = 19


def hilton_dims(n: int) -> SetExpr:
    """A[2n-1 : 2n-2 : inf]; for n = 1 the step is 0 and the set is {1}."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if n == 1:
        return A(1, 0, 1)
    return A(2 * n - 1, 2 * n - 2, INF)


def t_expr(n: int, shift_max: int = DEFAULT_SHIFT_MAX) -> SetExpr:
    """T_{2n} = (A[2n-1:2n-2:inf] - A[0:1:shift_max]) ∩ N."""
    return (hilton_dims(n) - A(0, 1, shift_max)).naturals()


def t_set(n: int, bound: int, shift_max: int = DEFAULT_SHIFT_MAX) -> WindowSet:
    """T_{2n} ∩ [0, bound]."""
    if bound < 0:
        raise ValueError("bound must be >= 0")
    return eval_window(t_expr(n, shift_max), 0, bound)


def relevant_expr(n: int, shift_max: int = DEFAULT_SHIFT_MAX) -> SetExpr:
    """(A[2n-1:2n-2:8n-7] - A[0:1:shift_max]) ∩ N."""
    if n < 1:
        raise ValueError("n must be >= 1")
    top = A(1, 0, 1) if n == 1 else A(2 * n - 1, 2 * n - 2, 8 * n - 7)
    return (top - A(0, 1, shift_max)).naturals()


def relevant_window(n: int, shift_max: int = DEFAULT_SHIFT_MAX) -> WindowSet:
    """The part of T_{2n} the stabilization argument needs, as a finite set."""
    expr = relevant_expr(n, shift_max)
    return eval_window(expr, 0, int(expr.max))


def monoid_window(generators, bound: int, use_numba: bool | None = None) -> WindowSet:
    """Elements of the additive monoid generated by ``generators`` lying in [0, bound]."""
    gens = np.asarray(list(generators), dtype=np.int64)
    if gens.size and gens.min() < 0:
        raise ValueError("generators must be non-negative")
    return WindowSet.from_mask(monoid_mask(gens, bound, use_numba), 0, bound)


def decompose(x: int, generators, reachable: frozenset[int]) -> list[int]:
    """Greedy decomposition of x into generators, smallest usable generator first.

    ``reachable`` must contain every monoid element <= x.
    """
    gens = sorted(g for g in set(generators) if g > 0)
    out = []
    while x > 0:
        for g in gens:
            if g <= x and (x - g) in reachable:
                out.append(g)
                x -= g
                break
        else:
            raise ValueError(f"{x} is not in the monoid")
    return out


@dataclass(frozen=True)
class Feasibility:
    n: int
    s: int
    feasible: bool
    witness: int | None = None
    decomposition: tuple[int, ...] = ()
    overlap: tuple[int, ...] = field(default=(), repr=False)

    def __bool__(self):
        return self.feasible

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "s": self.s,
            "feasible": self.feasible,
            "witness": self.witness,
            "decomposition": list(self.decomposition),
        }


def dissonance_feasible(n: int, s: int, shift_max: int = DEFAULT_SHIFT_MAX,
                        use_numba: bool | None = None) -> Feasibility:
    """Whether <T_{2n-s}>_N misses the relevant part of T_{2n}.

    An infeasible verdict carries the smallest common element and its
    decomposition into generators of T_{2n-s}.
    """
    if s % 2:
        raise ValueError("s must be even")
    if not 1 <= s <= 2 * n - 1:
        raise ValueError("need 1 <= s <= 2n - 1")
    target = relevant_window(n, shift_max)
    bound = 8 * n - 7
    gens = t_set(n - s // 2, bound, shift_max)
    reach = monoid_window(gens.elements, bound, use_numba)
    common = sorted(reach.as_set() & target.as_set())
    if not common:
        return Feasibility(n, s, True)
    w = common[0]
    return Feasibility(n, s, False, w, tuple(decompose(w, gens.elements, reach.as_set())), tuple(common))


def threshold_min_n(s: int) -> int | None:
    """Smallest n with 2n > 5s + 88, provided s > 19; None otherwise."""
    if s <= 19:
        return None
    return (5 * s + 88) // 2 + 1


def sharp_min_n(s: int, shift_max: int = DEFAULT_SHIFT_MAX) -> int | None:
    """Smallest n with 5(2n - s - 1 - shift_max) > 8n - 7, provided s > shift_max.

    This is the first-cluster condition using the true minimum of T_{2n-s}.
    """
    if s <= shift_max:
        return None
    return (5 * s + 5 * shift_max - 2) // 2 + 1


@dataclass
class ConstraintRow:
    s: int
    min_feasible_n: int | None
    threshold_n: int | None
    sharp_n: int | None
    feasible_ns: list[int]
    eventually_stable: bool
    witnesses: dict[int, Feasibility]

    @property
    def matches_threshold(self) -> bool:
        return self.min_feasible_n == self.threshold_n

    def to_record(self) -> dict:
        return {
            "s": self.s,
            "min_feasible_n": self.min_feasible_n,
            "threshold_n": self.threshold_n,
            "sharp_n": self.sharp_n,
            "matches_threshold": self.matches_threshold,
            "eventually_stable": self.eventually_stable,
        }


def scan_column(s: int, n_max: int, n_min: int = 1, shift_max: int = DEFAULT_SHIFT_MAX,
                use_numba: bool | None = None) -> ConstraintRow:
    """Feasibility of every n in [n_min, n_max] for one even s."""
    lo = max(n_min, s // 2 + 1)
    verdicts = {n: dissonance_feasible(n, s, shift_max, use_numba) for n in range(lo, n_max + 1)}
    feasible_ns = [n for n, f in verdicts.items() if f.feasible]
    first = feasible_ns[0] if feasible_ns else None
    stable = first is not None and feasible_ns == list(range(first, n_max + 1))
    threshold = threshold_min_n(s)
    witnesses = {n: f for n, f in verdicts.items() if not f.feasible}
    return ConstraintRow(s, first, threshold, sharp_min_n(s, shift_max), feasible_ns, stable, witnesses)


def derive_constraints(s_max: int, n_max: int, s_min: int = 2, n_min: int = 1,
                       shift_max: int = DEFAULT_SHIFT_MAX, use_numba: bool | None = None) -> list[ConstraintRow]:
    """One row per even s in [s_min, s_max]: minimal feasible n up to n_max vs the closed forms."""
    if s_max < 1 or n_max < 1:
        raise ValueError("s_max and n_max must be >= 1")
    s0 = s_min + (s_min % 2)
    return [scan_column(s, n_max, n_min, shift_max, use_numba) for s in range(max(2, s0), s_max + 1, 2)]


@dataclass(frozen=True)
class ProofConstants:
    n: int
    s: int
    b: int
    c2: int
    first_obstruction: int
    y_kill: int
    v_kill: int
    v_kill_stated: int
    second_part_w: int
    second_part_v: int
    k_bound: Fraction

    def to_record(self) -> dict:
        d = dict(self.__dict__)
        d["k_bound"] = {"numerator": str(self.k_bound.numerator), "denominator": str(self.k_bound.denominator)}
        return d


def proof_constants(n: int, s: int, shift_max: int = DEFAULT_SHIFT_MAX) -> ProofConstants:
    """Degree bookkeeping for the stabilization step with b = n - s/2 - 1.

    y_kill = 8n - 7 - shift_max is where pi_*(Y) first meets the obstruction
    range; v_kill = y_kill - n; v_kill_stated = 4b + 3n is the smaller
    closed-form threshold, kept alongside for comparison.
    """
    if s % 2:
        raise ValueError("s must be even")
    if not 0 < s < 2 * n:
        raise ValueError("need 0 < s < 2n")
    c2 = s // 2 + 1
    b = n - c2
    y_kill = 8 * n - 7 - shift_max
    return ProofConstants(
        n=n,
        s=s,
        b=b,
        c2=c2,
        first_obstruction=4 * b + 2 * n,
        y_kill=y_kill,
        v_kill=y_kill - n,
        v_kill_stated=4 * b + 3 * n,
        second_part_w=4 * b + 2 * n,
        second_part_v=4 * b + n,
        k_bound=Fraction(5 * n, 4) - c2,
    )


def k_range(n: int, s: int) -> int:
    """Largest integer k with k < 5n/4 - c2."""
    bound = proof_constants(n, s).k_bound
    k = floor(bound)
    return k - 1 if k == bound else k
