"""Coefficient identities and sign checks for the L-polynomial coefficients h_lambda.

Everything that compares h-values is exact: pi powers cancel after
multiplying through, leaving only the rationals zeta(2n)/pi^(2n).  Rational
intervals are used only for the zeta tail bound and the inequality chain,
where x = zeta(2i) - 1 and friends appear on their own.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .genus import GenusId, coefficient, genus_sequence
from .numeric import (
    RationalInterval,
    h_closed_form,
    pi_enclosure,
    zeta_even_rational,
    zeta_minus_one_interval,
)
from .partitions import Partition, multiplicities, partition, partitions_up_to, sort_key


@dataclass(frozen=True)
class SignReport:
    lam: Partition
    value: Fraction
    expected_sign: int
    conforms: bool = field(init=False)

    def __post_init__(self):
        v = self.value
        sign = (v > 0) - (v < 0)
        object.__setattr__(self, "conforms", v != 0 and sign == self.expected_sign)

    def to_record(self) -> dict:
        return {
            "partition": list(self.lam),
            "numerator": str(self.value.numerator),
            "denominator": str(self.value.denominator),
            "expected_sign": self.expected_sign,
            "conforms": self.conforms,
        }


def h(n: int) -> Fraction:
    return h_closed_form(n)


def verify_pair_identity(i: int, j: int) -> bool:
    """h_{i,j} + h_{i+j} = h_i h_j for i != j, and 2 h_{i,i} + h_{2i} = h_i^2."""
    if i < 1 or j < 1:
        raise ValueError("i, j must be >= 1")
    hij = coefficient(GenusId.L, (i, j))
    lhs = (2 if i == j else 1) * hij + coefficient(GenusId.L, (i + j,))
    return lhs == h(i) * h(j) == coefficient(GenusId.L, (i,)) * coefficient(GenusId.L, (j,))


def _symmetry_factor(lam: Partition) -> int:
    out = 1
    for mult in multiplicities(lam).values():
        out *= factorial(mult)
    return out


def h_triple_closed_form(i: int, j: int, k: int) -> Fraction:
    """(2h_{i+j+k} + h_i h_j h_k - h_{i+j}h_k - h_{i+k}h_j - h_{j+k}h_i) / c!.

    c! is the product of the factorials of the multiplicities in (i, j, k):
    1 for distinct indices, 2 for one repeat, 6 when all three agree.
    """
    if min(i, j, k) < 1:
        raise ValueError("i, j, k must be >= 1")
    num = (
        2 * h(i + j + k)
        + h(i) * h(j) * h(k)
        - h(i + j) * h(k)
        - h(i + k) * h(j)
        - h(j + k) * h(i)
    )
    return num / _symmetry_factor(partition((i, j, k)))


def _warm(max_weight: int) -> None:
    genus_sequence(GenusId.L, max_weight)


def verify_sign_lemma_pair(max_weight: int) -> list[SignReport]:
    """Reports on h_{i,j}, i <= j, i + j <= max_weight; each should be negative."""
    if max_weight < 2:
        raise ValueError("max_weight must be >= 2")
    _warm(max_weight)
    out = []
    for w in range(2, max_weight + 1):
        for i in range(w // 2, 0, -1):
            lam = (w - i, i)
            out.append(SignReport(lam, coefficient(GenusId.L, lam), -1))
    return out


def pair_gap(i: int, j: int) -> Fraction:
    """pi^(2i+2j) (h_i h_j - h_{i+j}) as an exact rational.

    Equals rho_i rho_j - rho_{i+j} with rho_n = zeta(2n)(2^{2n} - 2); the pi
    factors are cleared by working with zeta(2n)/pi^(2n).
    """
    def rho(n):  # rho_n / pi^(2n)
        return zeta_even_rational(n) * (2 ** (2 * n) - 2)

    return rho(i) * rho(j) - rho(i + j)


def verify_sign_lemma_triple(max_weight: int) -> list[SignReport]:
    """Reports on h_{i,j,k}, i >= j >= k, i + j + k <= max_weight; each should be strictly positive."""
    if max_weight < 3:
        raise ValueError("max_weight must be >= 3")
    _warm(max_weight)
    out = []
    for lam in partitions_up_to(max_weight):
        if len(lam) == 3:
            out.append(SignReport(lam, coefficient(GenusId.L, lam), 1))
    return out


def conjecture_scan(genus, max_weight: int, max_parts: int | None = None) -> list[SignReport]:
    """One report per partition with expected sign (-1)^(r-1), r = number of parts."""
    if max_weight < 1:
        raise ValueError("max_weight must be >= 1")
    genus = GenusId.parse(genus)
    genus_sequence(genus, max_weight)
    return [
        SignReport(lam, coefficient(genus, lam), (-1) ** (len(lam) - 1))
        for lam in partitions_up_to(max_weight, max_len=max_parts)
    ]


def zeta_bound_rhs(s: int) -> Fraction:
    """1 + 2^{-s} + (5/2) 3^{-s}."""
    return 1 + Fraction(1, 2**s) + Fraction(5, 2 * 3**s)


def zeta_bound_at(n: int, digits: int = 20) -> bool | None:
    """Whether zeta(2n) < 1 + 2^{-2n} + (5/2) 3^{-2n}; None if the enclosure cannot decide.

    The pi-based enclosure is intersected with the partial-sum one, which
    is the tighter of the two for large n.
    """
    zeta = zeta_minus_one_interval(2 * n, digits=digits) + RationalInterval.point(Fraction(1))
    rhs = zeta_bound_rhs(2 * n)
    if zeta.hi < rhs:
        return True
    if zeta.lo >= rhs:
        return False
    return None


def verify_zeta_bound(max_n: int, digits: int = 20, min_n: int = 1) -> bool | None:
    """Conjunction of :func:`zeta_bound_at` over min_n..max_n.

    False as soon as one n is decided false; None if some n is undecided
    and none is false.
    """
    if max_n < 1:
        raise ValueError("max_n must be >= 1")
    verdicts = [zeta_bound_at(n, digits) for n in range(min_n, max_n + 1)]
    if False in verdicts:
        return False
    if None in verdicts:
        return None
    return True


@dataclass
class ChainReport:
    i: int
    j: int
    x: RationalInterval
    y: RationalInterval
    z: RationalInterval
    a1: RationalInterval
    a2: RationalInterval
    a3: RationalInterval
    a4: RationalInterval
    a4_refined: RationalInterval | None
    steps: dict[str, bool | None]
    a1_matches_exact: bool
    a4_sign: int | None
    exact_gap: Fraction
    exact_sign: int

    def to_record(self) -> dict:
        def iv(r):
            return None if r is None else {"lo": str(r.lo), "hi": str(r.hi)}

        return {
            "i": self.i,
            "j": self.j,
            "a1": iv(self.a1),
            "a2": iv(self.a2),
            "a3": iv(self.a3),
            "a4": iv(self.a4),
            "a4_refined": iv(self.a4_refined),
            "steps": self.steps,
            "a1_matches_exact": self.a1_matches_exact,
            "a4_sign": self.a4_sign,
            "exact_gap": {"numerator": str(self.exact_gap.numerator), "denominator": str(self.exact_gap.denominator)},
            "exact_sign": self.exact_sign,
        }


def _nonneg(iv: RationalInterval) -> bool | None:
    if iv.lo >= 0:
        return True
    if iv.hi < 0:
        return False
    return None


def verify_lemma_a1_chain(i: int, j: int, digits: int = 30, a4_reading: str = "corrected") -> ChainReport:
    """Interval evaluation of the four bounding expressions for pi^(2i+2j)(h_i h_j - h_{i+j}).

    ``a4_reading`` selects the last bound: "corrected" uses (2/3)^{2j} as
    implied by the preceding step, "literal" uses (2/3)^{-2j}.
    Steps are checked on differences (A2-A1, A3-A2, A4-A3) so shared
    variables do not widen the verdict.
    """
    if i < 1 or j < 1:
        raise ValueError("i, j must be >= 1")
    if a4_reading not in ("corrected", "literal"):
        raise ValueError("a4_reading must be 'corrected' or 'literal'")
    x = zeta_minus_one_interval(2 * i, digits=digits)
    y = zeta_minus_one_interval(2 * j, digits=digits)
    z = zeta_minus_one_interval(2 * (i + j), digits=digits)
    P, Q, PQ = 2 ** (2 * i), 2 ** (2 * j), 2 ** (2 * i + 2 * j)
    sxy = x + y + x * y

    a1 = (6 - 2 * P - 2 * Q) + (PQ - 2 * P - 2 * Q + 4) * sxy + (2 - PQ) * z
    a2 = (6 - 2 * P - 2 * Q) + (PQ + 4) * sxy + 2 * z
    a3 = 20 - 2 * P - 2 * Q + PQ * sxy

    e = 1 if a4_reading == "corrected" else -1
    r_i = Fraction(2, 3) ** (e * 2 * i)
    r_j = Fraction(2, 3) ** (e * 2 * j)
    a4_val = 27 + (Fraction(5, 2) * r_j - 1) * P + (Fraction(5, 2) * r_i - 1) * Q
    a4 = RationalInterval.point(a4_val)

    steps = {
        "a1<=a2": _nonneg((2 * P + 2 * Q) * sxy + PQ * z),
        "a2<=a3": _nonneg(14 - 4 * sxy - 2 * z),
        "a3<=a4": _nonneg(a4 - a3),
    }

    # For i = 1 (or j = 1) the step to a2 discarded at least 2^{2j+1} x with x > 1/4.
    a4_refined = None
    if i == 1:
        a4_refined = a4 - Fraction(Q, 2)
    elif j == 1:
        a4_refined = a4 - Fraction(P, 2)
    if a4_refined is not None:
        steps["a1<=a4_refined"] = _nonneg(a4_refined - a1)

    pi_iv = pi_enclosure(digits)
    gap = pair_gap(i, j)
    # a1 is the same quantity with pi^(2i+2j) restored.
    exact_iv = gap * pi_iv ** (2 * i + 2 * j)
    overlap = exact_iv.lo <= a1.hi and a1.lo <= exact_iv.hi
    return ChainReport(
        i=i,
        j=j,
        x=x,
        y=y,
        z=z,
        a1=a1,
        a2=a2,
        a3=a3,
        a4=a4,
        a4_refined=a4_refined,
        steps=steps,
        a1_matches_exact=overlap,
        a4_sign=a4.sign(),
        exact_gap=gap,
        exact_sign=(gap > 0) - (gap < 0),
    )


def sorted_reports(reports: list[SignReport]) -> list[SignReport]:
    return sorted(reports, key=lambda r: sort_key(r.lam))
