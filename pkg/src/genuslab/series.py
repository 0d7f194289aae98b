"""Formal power series in x^2 with exact coefficients."""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction


@dataclass(frozen=True)
class EvenPowerSeries:
    """``constant + sum_{k=1}^{order} coeffs[k-1] * x^(2k)``, truncated at x^(2*order)."""

    coeffs: tuple[Fraction, ...]
    constant: Fraction = Fraction(1)

    def __post_init__(self):
        object.__setattr__(self, "coeffs", tuple(Fraction(c) for c in self.coeffs))
        object.__setattr__(self, "constant", Fraction(self.constant))
        if not self.coeffs:
            raise ValueError("order must be >= 1")

    @property
    def order(self) -> int:
        return len(self.coeffs)

    def _full(self) -> list[Fraction]:
        return [self.constant, *self.coeffs]

    def __getitem__(self, k: int) -> Fraction:
        """Coefficient of x^(2k)."""
        return self._full()[k]

    def truncate(self, order: int) -> "EvenPowerSeries":
        if order > self.order:
            raise ValueError("cannot extend a truncated series")
        return EvenPowerSeries(self.coeffs[:order], self.constant)

    def __mul__(self, other: "EvenPowerSeries") -> "EvenPowerSeries":
        n = min(self.order, other.order)
        a, b = self._full(), other._full()
        c = [sum((a[i] * b[k - i] for i in range(k + 1)), Fraction(0)) for k in range(n + 1)]
        return EvenPowerSeries(tuple(c[1:]), c[0])

    def reciprocal(self) -> "EvenPowerSeries":
        if not self.constant:
            raise ZeroDivisionError("series with zero constant term is not invertible")
        a = self._full()
        inv = [1 / self.constant]
        for k in range(1, self.order + 1):
            inv.append(-sum((a[i] * inv[k - i] for i in range(1, k + 1)), Fraction(0)) / self.constant)
        return EvenPowerSeries(tuple(inv[1:]), inv[0])

    def log(self) -> "EvenPowerSeries":
        """Formal log; requires constant term 1.  Result has constant 0."""
        if self.constant != 1:
            raise ValueError("log needs constant term 1")
        a = self._full()
        n = self.order
        # F' = A'/A  ->  k*b_k = k*a_k - sum_{i=1}^{k-1} i*b_i*a_{k-i}
        b = [Fraction(0)] * (n + 1)
        for k in range(1, n + 1):
            s = k * a[k] - sum((i * b[i] * a[k - i] for i in range(1, k)), Fraction(0))
            b[k] = s / k
        return EvenPowerSeries(tuple(b[1:]), Fraction(0))

    def exp(self) -> "EvenPowerSeries":
        """Formal exp; requires constant term 0."""
        if self.constant != 0:
            raise ValueError("exp needs constant term 0")
        a = self._full()
        n = self.order
        e = [Fraction(1)] + [Fraction(0)] * n
        for k in range(1, n + 1):
            e[k] = sum((i * a[i] * e[k - i] for i in range(1, k + 1)), Fraction(0)) / k
        return EvenPowerSeries(tuple(e[1:]), e[0])
