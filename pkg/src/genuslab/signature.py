"""Hirzebruch signature theorem on products of complex projective spaces.

H*(CP^{n_1} x ... x CP^{n_t}) = Z[x_1..x_t]/(x_i^{n_i+1}); the total
Pontryagin class is prod_i (1 + x_i^2)^{n_i+1} and the fundamental class
pairs with x_1^{n_1}...x_t^{n_t} under the complex orientation.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb, prod

from .genus import GenusId, genus_polynomial
from .polynomial import GradedPolynomial

Exponents = tuple[int, ...]


@dataclass(frozen=True)
class ProjectiveProduct:
    factors: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "factors", tuple(int(f) for f in self.factors))
        if not self.factors or min(self.factors) < 1:
            raise ValueError("factors must be a nonempty list of positive integers")

    @property
    def dimension(self) -> int:
        return 2 * sum(self.factors)

    def __mul__(self, other: "ProjectiveProduct") -> "ProjectiveProduct":
        return ProjectiveProduct(self.factors + other.factors)

    def __str__(self):
        return " x ".join(f"CP^{n}" for n in self.factors)


class TruncatedCohomology:
    """Element of Q[x_1..x_t]/(x_i^{n_i+1}), stored as exponent tuple -> coefficient."""

    __slots__ = ("bounds", "terms")

    def __init__(self, bounds: tuple[int, ...], terms: dict[Exponents, Fraction] | None = None):
        self.bounds = tuple(bounds)
        self.terms = {}
        for e, c in (terms or {}).items():
            if len(e) != len(self.bounds):
                raise ValueError("exponent length mismatch")
            if c and all(0 <= a <= b for a, b in zip(e, self.bounds)):
                self.terms[tuple(e)] = Fraction(c)

    @classmethod
    def one(cls, bounds) -> "TruncatedCohomology":
        return cls(bounds, {(0,) * len(bounds): Fraction(1)})

    def __add__(self, other: "TruncatedCohomology") -> "TruncatedCohomology":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) + c
        return TruncatedCohomology(self.bounds, out)

    def scale(self, c) -> "TruncatedCohomology":
        return TruncatedCohomology(self.bounds, {e: v * c for e, v in self.terms.items()})

    def __mul__(self, other: "TruncatedCohomology") -> "TruncatedCohomology":
        out: dict[Exponents, Fraction] = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                e = tuple(a + b for a, b in zip(e1, e2))
                if all(a <= b for a, b in zip(e, self.bounds)):
                    out[e] = out.get(e, 0) + c1 * c2
        return TruncatedCohomology(self.bounds, out)

    def __eq__(self, other):
        if not isinstance(other, TruncatedCohomology):
            return NotImplemented
        return self.bounds == other.bounds and self.terms == other.terms

    def degree_part(self, deg: int) -> "TruncatedCohomology":
        """Part of real cohomological degree ``deg`` (each x_i has degree 2)."""
        return TruncatedCohomology(self.bounds, {e: c for e, c in self.terms.items() if 2 * sum(e) == deg})

    def pair(self) -> Fraction:
        """Evaluation on the fundamental class: the coefficient of the top monomial."""
        return self.terms.get(self.bounds, Fraction(0))

    def __repr__(self):
        return f"TruncatedCohomology({self.bounds}, {self.terms})"


def total_pontryagin_class(m: ProjectiveProduct) -> TruncatedCohomology:
    bounds = m.factors
    total = TruncatedCohomology.one(bounds)
    for i, n in enumerate(bounds):
        e = [0] * len(bounds)
        terms = {}
        for k in range(n + 2):
            e[i] = 2 * k
            terms[tuple(e)] = Fraction(comb(n + 1, k))
        total = total * TruncatedCohomology(bounds, terms)
    return total


def pontryagin_classes(m: ProjectiveProduct, max_weight: int) -> list[TruncatedCohomology]:
    """[p_1, ..., p_max_weight]; p_k is the degree-4k part of the total class."""
    if max_weight < 1:
        raise ValueError("max_weight must be >= 1")
    total = total_pontryagin_class(m)
    return [total.degree_part(4 * k) for k in range(1, max_weight + 1)]


def evaluate(poly: GradedPolynomial, classes: list[TruncatedCohomology], bounds) -> TruncatedCohomology:
    """Substitute p_k -> classes[k-1] into ``poly``."""
    powers: dict[tuple[int, int], TruncatedCohomology] = {}

    def power(k, e):
        if (k, e) not in powers:
            powers[(k, e)] = TruncatedCohomology.one(bounds) if e == 0 else power(k, e - 1) * classes[k - 1]
        return powers[(k, e)]

    out = TruncatedCohomology(bounds)
    for lam, c in poly.items():
        mono = TruncatedCohomology.one(bounds)
        for k in sorted(set(lam)):
            mono = mono * power(k, lam.count(k))
        out = out + mono.scale(c)
    return out


def genus_number(m: ProjectiveProduct, genus=GenusId.L) -> Fraction:
    if m.dimension % 4:
        raise ValueError(f"dimension {m.dimension} of {m} is not divisible by 4")
    w = m.dimension // 4
    classes = pontryagin_classes(m, w)
    return evaluate(genus_polynomial(genus, w), classes, m.factors).pair()


def l_number(m: ProjectiveProduct) -> Fraction:
    """<L_{dim/4}(p), [M]>."""
    return genus_number(m, GenusId.L)


def signature(m: ProjectiveProduct) -> int:
    """Multiplicative; sigma(CP^{2k}) = 1 and sigma(CP^{2k+1}) = 0."""
    return prod(1 if n % 2 == 0 else 0 for n in m.factors)


def hirzebruch_check(m: ProjectiveProduct) -> bool:
    return l_number(m) == signature(m)
