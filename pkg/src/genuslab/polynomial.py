"""Truncated graded polynomial ring Q[p_1, p_2, ...] with p_i in weight i."""
from __future__ import annotations

from collections.abc import Iterable, Mapping
from fractions import Fraction

from .partitions import Partition, merge, partition, sort_key


class GradedPolynomial:
    """Sparse element of Q[p_1, p_2, ...] with all terms of weight <= ``truncation_weight``.

    Terms map canonical partitions to nonzero Fractions.  Products drop
    every term whose weight exceeds the truncation.  Instances are treated
    as immutable.
    """

    __slots__ = ("truncation_weight", "_terms")

    def __init__(self, terms: Mapping[Partition, Fraction] | Iterable = (), truncation_weight: int = 1):
        if truncation_weight < 0:
            raise ValueError("truncation_weight must be >= 0")
        self.truncation_weight = truncation_weight
        items = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Partition, Fraction] = {}
        for lam, c in items:
            lam = partition(lam)
            if sum(lam) > truncation_weight:
                continue
            c = Fraction(c)
            if c:
                clean[lam] = clean.get(lam, Fraction(0)) + c
                if not clean[lam]:
                    del clean[lam]
        self._terms = clean

    @classmethod
    def _raw(cls, terms: dict[Partition, Fraction], truncation_weight: int) -> "GradedPolynomial":
        # terms must already be canonical, in range and nonzero
        obj = cls.__new__(cls)
        obj.truncation_weight = truncation_weight
        obj._terms = terms
        return obj

    @classmethod
    def p(cls, i: int, truncation_weight: int) -> "GradedPolynomial":
        """The Pontryagin symbol p_i."""
        return cls({(i,): Fraction(1)}, truncation_weight)

    @classmethod
    def one(cls, truncation_weight: int) -> "GradedPolynomial":
        return cls({(): Fraction(1)}, truncation_weight)

    @property
    def terms(self) -> dict[Partition, Fraction]:
        return dict(self._terms)

    def items(self):
        """Terms in canonical partition order."""
        return sorted(self._terms.items(), key=lambda kv: sort_key(kv[0]))

    def __getitem__(self, lam) -> Fraction:
        return self._terms.get(partition(lam), Fraction(0))

    def __len__(self):
        return len(self._terms)

    def __bool__(self):
        return bool(self._terms)

    def __eq__(self, other):
        if not isinstance(other, GradedPolynomial):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))

    def weights(self) -> set[int]:
        return {sum(lam) for lam in self._terms}

    def homogeneous_part(self, w: int) -> "GradedPolynomial":
        return self._raw({k: v for k, v in self._terms.items() if sum(k) == w}, self.truncation_weight)

    def _trunc(self, other: "GradedPolynomial") -> int:
        return min(self.truncation_weight, other.truncation_weight)

    def __add__(self, other: "GradedPolynomial") -> "GradedPolynomial":
        t = self._trunc(other)
        out = {k: v for k, v in self._terms.items() if sum(k) <= t}
        for k, v in other._terms.items():
            if sum(k) > t:
                continue
            s = out.get(k, 0) + v
            if s:
                out[k] = s
            else:
                out.pop(k, None)
        return self._raw(out, t)

    def __neg__(self):
        return self._raw({k: -v for k, v in self._terms.items()}, self.truncation_weight)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c) -> "GradedPolynomial":
        c = Fraction(c)
        if not c:
            return self._raw({}, self.truncation_weight)
        return self._raw({k: v * c for k, v in self._terms.items()}, self.truncation_weight)

    def __mul__(self, other):
        if not isinstance(other, GradedPolynomial):
            return self.scale(other)
        t = self._trunc(other)
        out: dict[Partition, Fraction] = {}
        right = [(k, sum(k), v) for k, v in other._terms.items()]
        for a, ca in self._terms.items():
            wa = sum(a)
            for b, wb, cb in right:
                if wa + wb > t:
                    continue
                key = merge(a, b)
                s = out.get(key, 0) + ca * cb
                if s:
                    out[key] = s
                else:
                    out.pop(key, None)
        return self._raw(out, t)

    __rmul__ = __mul__

    def __repr__(self):
        return f"GradedPolynomial({self.to_str()!r}, truncation_weight={self.truncation_weight})"

    def to_str(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for lam, c in self.items():
            mono = "*".join(f"p{j}" for j in lam) or "1"
            parts.append(f"({c})*{mono}")
        return " + ".join(parts)

    def to_records(self) -> list[dict]:
        """Serialized terms: ``{partition, numerator, denominator}`` in canonical order."""
        return [
            {"partition": list(lam), "numerator": str(c.numerator), "denominator": str(c.denominator)}
            for lam, c in self.items()
        ]

    @classmethod
    def from_records(cls, records: Iterable[Mapping], truncation_weight: int) -> "GradedPolynomial":
        return cls(
            ((tuple(r["partition"]), Fraction(int(r["numerator"]), int(r["denominator"]))) for r in records),
            truncation_weight,
        )
