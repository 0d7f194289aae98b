"""Exact scalars: Bernoulli numbers, even zeta values over pi powers, h_n.

All scalars are :class:`fractions.Fraction`.  The only place pi enters is
:func:`pi_enclosure`, which returns a rational interval.
"""
from __future__ import annotations

import threading
from dataclasses import dataclass
from fractions import Fraction
from math import comb, factorial

__all__ = [
    "RationalInterval",
    "bernoulli",
    "hirzebruch_B",
    "zeta_even_rational",
    "h_closed_form",
    "pi_enclosure",
    "zeta_minus_one_interval",
    "PI_DIGITS",
    "MAX_PI_DIGITS",
]

# 60 decimals of pi after the point.
PI_DIGITS = "3.141592653589793238462643383279502884197169399375105820974944"
MAX_PI_DIGITS = 55

_bern_lock = threading.Lock()
_bern_cache: list[Fraction] = [Fraction(1)]


@dataclass(frozen=True)
class RationalInterval:
    """Closed interval ``[lo, hi]`` with exact rational endpoints."""

    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @classmethod
    def point(cls, x) -> "RationalInterval":
        return cls(Fraction(x), Fraction(x))

    @staticmethod
    def _coerce(other) -> "RationalInterval":
        if isinstance(other, RationalInterval):
            return other
        return RationalInterval.point(other)

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    def __contains__(self, x) -> bool:
        return self.lo <= x <= self.hi

    def __add__(self, other):
        o = self._coerce(other)
        return RationalInterval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return RationalInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        o = self._coerce(other)
        ends = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return RationalInterval(min(ends), max(ends))

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative powers are not supported")
        if k == 0:
            return RationalInterval.point(1)
        if k % 2 == 1 or self.lo >= 0:
            a, b = self.lo**k, self.hi**k
            return RationalInterval(min(a, b), max(a, b))
        if self.hi <= 0:
            return RationalInterval(self.hi**k, self.lo**k)
        return RationalInterval(Fraction(0), max(self.lo**k, self.hi**k))

    def intersect(self, other: "RationalInterval") -> "RationalInterval":
        return RationalInterval(max(self.lo, other.lo), min(self.hi, other.hi))

    def sign(self) -> int | None:
        """+1 or -1 when the whole interval is strictly on one side of 0, else None."""
        if self.lo > 0:
            return 1
        if self.hi < 0:
            return -1
        return None

    def __repr__(self):
        return f"RationalInterval({self.lo}, {self.hi})"


def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with B_1 = -1/2.

    Uses sum_{k=0}^{n} C(n+1, k) B_k = 0 and memoizes the whole prefix.
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    with _bern_lock:
        while len(_bern_cache) <= n:
            m = len(_bern_cache)
            if m % 2 == 1 and m > 1:
                _bern_cache.append(Fraction(0))
                continue
            if m == 1:
                _bern_cache.append(Fraction(-1, 2))
                continue
            s = sum(comb(m + 1, k) * _bern_cache[k] for k in range(m) if k == 1 or k % 2 == 0)
            _bern_cache.append(-s / (m + 1))
        return _bern_cache[n]


def hirzebruch_B(n: int) -> Fraction:
    """Unsigned even Bernoulli number in Hirzebruch's indexing: |B_{2n}|."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return abs(bernoulli(2 * n))


def zeta_even_rational(n: int) -> Fraction:
    """The rational r with zeta(2n) = r * pi^(2n)."""
    if n < 1:
        raise ValueError("n must be >= 1")
    sign = 1 if n % 2 == 1 else -1
    return sign * bernoulli(2 * n) * 2 ** (2 * n) / (2 * factorial(2 * n))


def h_closed_form(n: int) -> Fraction:
    """Coefficient of p_n in L_n, 2^{2n}(2^{2n-1}-1) B_n / (2n)! with unsigned B_n."""
    if n < 1:
        raise ValueError("n must be >= 1")
    return Fraction(2 ** (2 * n) * (2 ** (2 * n - 1) - 1)) * hirzebruch_B(n) / factorial(2 * n)


def pi_enclosure(digits: int) -> RationalInterval:
    """Rational interval of width < 10**-digits that contains pi."""
    if digits < 1:
        raise ValueError("digits must be >= 1")
    if digits > MAX_PI_DIGITS:
        raise ValueError(f"at most {MAX_PI_DIGITS} digits of pi are available")
    d = digits + 1
    whole, frac = PI_DIGITS.split(".")
    lo = Fraction(int(whole + frac[:d]), 10**d)
    return RationalInterval(lo, lo + Fraction(1, 10**d))


def zeta_minus_one_interval(s: int, terms: int = 20, digits: int | None = None) -> RationalInterval:
    """Certified enclosure of zeta(s) - 1 for integer s >= 2.

    Lower end is the partial sum over 2..terms; the upper end adds the
    integral tail terms^(1-s)/(s-1).  For even s and ``digits`` given, the
    result is intersected with the pi-enclosure value.
    """
    if s < 2:
        raise ValueError("s must be >= 2")
    if terms < 2:
        raise ValueError("terms must be >= 2")
    partial = sum(Fraction(1, m**s) for m in range(2, terms + 1))
    iv = RationalInterval(partial, partial + Fraction(1, (s - 1) * terms ** (s - 1)))
    if digits is not None and s % 2 == 0:
        via_pi = zeta_even_rational(s // 2) * pi_enclosure(digits) ** s - 1
        iv = iv.intersect(via_pi)
    return iv
