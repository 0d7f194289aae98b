"""Multiplicative sequences K_m in the Pontryagin classes.

For a genus with characteristic series Q, prod_i Q(x_i) = exp(sum_k a_k s_k)
where log Q(x) = sum_k a_k x^(2k) and s_k = sum_i x_i^(2k) is written in the
p_i = e_i(x_1^2, x_2^2, ...) by Newton's identities.  The weight-m part of
the exponential is K_m.
"""
from __future__ import annotations

import enum
import threading
from fractions import Fraction
from functools import reduce
from math import factorial, gcd, lcm

from .numeric import bernoulli
from .partitions import Partition, partition
from .polynomial import GradedPolynomial
from .series import EvenPowerSeries

__all__ = [
    "GenusId",
    "characteristic_series",
    "characteristic_log_series",
    "newton_power_sum",
    "genus_polynomial",
    "genus_sequence",
    "coefficient",
]

Homog = dict[Partition, Fraction]


class GenusId(str, enum.Enum):
    L = "L"
    A_HAT = "A-hat"

    @classmethod
    def parse(cls, name) -> "GenusId":
        if isinstance(name, GenusId):
            return name
        key = str(name).strip().lower().replace("_", "-")
        aliases = {"l": cls.L, "a-hat": cls.A_HAT, "ahat": cls.A_HAT, "a": cls.A_HAT}
        try:
            return aliases[key]
        except KeyError:
            raise ValueError(f"unknown genus {name!r}; expected 'L' or 'A-hat'") from None


def characteristic_series(genus, order: int) -> EvenPowerSeries:
    """Q(x) through x^(2*order), from the Bernoulli generating identities.

    x*coth(x) = sum_k 2^{2k} B_{2k} x^{2k}/(2k)!
    x/sinh(x) = sum_k (2 - 2^{2k}) B_{2k} x^{2k}/(2k)!, then x -> x/2 for A-hat.
    """
    genus = GenusId.parse(genus)
    if order < 1:
        raise ValueError("order must be >= 1")
    ks = range(1, order + 1)
    if genus is GenusId.L:
        c = [Fraction(2 ** (2 * k)) * bernoulli(2 * k) / factorial(2 * k) for k in ks]
    else:
        c = [Fraction(2 - 2 ** (2 * k), 2 ** (2 * k)) * bernoulli(2 * k) / factorial(2 * k) for k in ks]
    return EvenPowerSeries(tuple(c))


def characteristic_log_series(genus, order: int) -> EvenPowerSeries:
    """Coefficients a_1..a_order of log Q(x) = sum a_k x^(2k)."""
    return characteristic_series(genus, order).log()


def _mul_homog(a: Homog, b: Homog, out: Homog, scale: Fraction = Fraction(1)) -> None:
    for ka, va in a.items():
        for kb, vb in b.items():
            key = tuple(sorted(ka + kb, reverse=True))
            out[key] = out.get(key, 0) + scale * va * vb


def _prune(d: Homog) -> Homog:
    return {k: v for k, v in d.items() if v}


_newton_lock = threading.Lock()
_newton_cache: list[Homog] = [{}]  # index k holds s_k; s_0 unused


def _power_sums(k_max: int) -> list[Homog]:
    with _newton_lock:
        while len(_newton_cache) <= k_max:
            k = len(_newton_cache)
            sk: Homog = {(k,): Fraction((-1) ** (k - 1) * k)}
            for i in range(1, k):
                sign = Fraction((-1) ** (i - 1))
                _mul_homog({(i,): Fraction(1)}, _newton_cache[k - i], sk, sign)
            _newton_cache.append(_prune(sk))
        return _newton_cache[: k_max + 1]


def newton_power_sum(k: int, truncation: int) -> GradedPolynomial:
    """s_k = sum_i x_i^(2k) written in p_1..p_k; homogeneous of weight k."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if k > truncation:
        raise ValueError(f"power sum s_{k} exceeds truncation weight {truncation}")
    return GradedPolynomial._raw(dict(_power_sums(k)[k]), truncation)


class _SequenceState:
    """Integer-scaled homogeneous components: K_m = numerators[m] / denominators[m]."""

    def __init__(self, genus: GenusId):
        self.genus = genus
        self.lock = threading.Lock()
        self.numerators: list[dict[Partition, int]] = [{(): 1}]
        self.denominators: list[int] = [1]
        self.components: list[Homog] = [{(): Fraction(1)}]
        self.log_coeffs: tuple[Fraction, ...] = ()

    def extend(self, m_max: int) -> list[Homog]:
        with self.lock:
            if len(self.components) > m_max:
                return self.components[: m_max + 1]
            if len(self.log_coeffs) < m_max:
                self.log_coeffs = characteristic_log_series(self.genus, m_max).coeffs
            s = _power_sums(m_max)
            s_int = [{key: int(v) for key, v in sk.items()} for sk in s]
            a = self.log_coeffs
            # F_k = a_k s_k; m E_m = sum_k k F_k E_{m-k}, done over a common denominator
            for m in range(len(self.components), m_max + 1):
                ks = [k for k in range(1, m + 1) if a[k - 1]]
                denom = 1
                for k in ks:
                    denom = lcm(denom, a[k - 1].denominator * self.denominators[m - k])
                acc: dict[Partition, int] = {}
                for k in ks:
                    scale = k * a[k - 1].numerator * (denom // (a[k - 1].denominator * self.denominators[m - k]))
                    right = self.numerators[m - k]
                    for ka, va in s_int[k].items():
                        f = scale * va
                        for kb, vb in right.items():
                            key = tuple(sorted(ka + kb, reverse=True))
                            acc[key] = acc.get(key, 0) + f * vb
                acc = {key: v for key, v in acc.items() if v}
                denom *= m
                g = reduce(gcd, acc.values(), denom)
                acc = {key: v // g for key, v in acc.items()}
                denom //= g
                self.numerators.append(acc)
                self.denominators.append(denom)
                self.components.append({key: Fraction(v, denom) for key, v in acc.items()})
            return self.components[: m_max + 1]


_states = {g: _SequenceState(g) for g in GenusId}


def genus_sequence(genus, m_max: int) -> list[GradedPolynomial]:
    """[K_1, ..., K_{m_max}] from one pass of the exponential recurrence."""
    genus = GenusId.parse(genus)
    comps = _states[genus].extend(m_max)
    return [GradedPolynomial._raw(dict(comps[m]), m) for m in range(1, m_max + 1)]


def genus_polynomial(genus, m: int) -> GradedPolynomial:
    """K_m for the genus, homogeneous of weight m, truncation weight m."""
    if m < 1:
        raise ValueError("m must be >= 1")
    genus = GenusId.parse(genus)
    comps = _states[genus].extend(m)
    return GradedPolynomial._raw(dict(comps[m]), m)


def coefficient(genus, lam) -> Fraction:
    """h_lambda: coefficient of p_lambda in K_{|lambda|}.  Part order is irrelevant."""
    lam = partition(lam)
    if not lam:
        raise ValueError("partition must be nonempty")
    genus = GenusId.parse(genus)
    comps = _states[genus].extend(sum(lam))
    return comps[sum(lam)].get(lam, Fraction(0))
