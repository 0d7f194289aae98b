"""Dimension-set expressions for configuration-space estimates, and checks of the item (vi) chain.

``X(n)`` is the Hilton progression A[2n-1 : 2n-2 : inf].  Each function
returns a :class:`SetExpr`; realize it with ``eval_window``.
"""
from __future__ import annotations

from dataclasses import dataclass

from .calculus import hilton_dims
from .sets import A, SetExpr, WindowSet, eval_window


def X(n: int) -> SetExpr:
    return hilton_dims(n)


def item_i(n: int) -> SetExpr:
    """Rational homotopy of the ordered configuration space of l points in R^{2n}."""
    return X(n)


def item_ii(n: int, ell: int) -> SetExpr:
    return X(n) - A(0, 1, ell - 3)


def item_iii(n: int, ell: int) -> SetExpr:
    return X(n) - A(0, 1, ell - 2)


def item_iv(n: int, ell: int) -> SetExpr:
    """Cohomology of the homotopy cofiber of LP(l) -> P(l)."""
    return A(ell - 2, 2 * n - 1, 2 * n * (ell - 1) - 1)


def item_v(n: int, ell: int) -> SetExpr:
    """Cohomology of LP(l), l >= 3."""
    return A(0, 2 * n - 1, (ell - 1) * (2 * n - 1)) + A(0, ell - 3, ell - 3)


def item_vi_definition(n: int, ell: int) -> SetExpr:
    """((iii) - (iv)) ∪ ((ii) - (v) - 2)."""
    return (item_iii(n, ell) - item_iv(n, ell)) | ((item_ii(n, ell) - item_v(n, ell)) - 2)


def item_vi_line1(n: int, ell: int) -> SetExpr:
    x = X(n)
    return (x - A(0, 1, ell - 2) - A(ell - 2, 2 * n - 1, 2 * n * (ell - 1) - 1)) | (
        x - A(2, 1, ell - 1) - A(0, 2 * n - 1, (ell - 1) * (2 * n - 1)) - A(0, ell - 3, ell - 3)
    )


def item_vi_line2(n: int, ell: int) -> SetExpr:
    x = X(n)
    return (x - A(0, 1, ell - 2) - A(ell - 2, 2 * n - 1, 2 * n * (ell - 1) - 1)) | (
        x - A(2, 1, 2 * (ell - 2)) - A(0, 2 * n - 1, (ell - 1) * (2 * n - 1))
    )


def item_vi_line3(n: int, ell: int) -> SetExpr:
    x = X(n)
    return (x - A(ell - 2, 1, 2 * (ell - 2)) - A(0, 2 * n - 1, (ell - 1) * (2 * n - 1))) | (
        x - A(2, 1, 2 * (ell - 2)) - A(0, 2 * n - 1, (ell - 1) * (2 * n - 1))
    )


def item_vi_estimate(n: int, ell: int) -> SetExpr:
    """The final upper estimate, valid for l >= 2."""
    return X(n) - A(0, 1, 2 * (ell - 2)) - A(0, 2 * n - 1, (ell - 1) * (2 * n - 1))


def item_vi_direct_l2(n: int) -> SetExpr:
    """For l = 2: P(2) ~ S^{2n-1} has rational homotopy only in 2n-1, LP(2) is empty.

    Cohomology of P(2)_+ sits in {0, 2n-1}, so the obstruction dimensions are
    {2n-1} - {0, 2n-1}.
    """
    return A(2 * n - 1, 0, 2 * n - 1) - A(0, 2 * n - 1, 2 * n - 1)


def item_viii(n: int, ell: int) -> SetExpr:
    """(A[2n-1:2n-2:inf] - A[0:1:3(l-2)+1]) ∩ N."""
    return (X(n) - A(0, 1, 3 * (ell - 2) + 1)).naturals()


@dataclass
class ChainCheck:
    relation: str
    holds: bool
    left: WindowSet
    right: WindowSet

    def to_record(self) -> dict:
        return {"relation": self.relation, "holds": self.holds}


def _check(name, rel, left, right, lo, hi) -> ChainCheck:
    a, b = eval_window(left, lo, hi), eval_window(right, lo, hi)
    holds = a.as_set() == b.as_set() if rel == "=" else a.as_set() <= b.as_set()
    return ChainCheck(name, holds, a, b)


def item_vi_checks(n: int, ell: int, bound: int) -> list[ChainCheck]:
    """Each relation of the item (vi) chain on the window [-bound, bound].

    For l = 2 the intermediate lines are undefined; the direct calculation
    and the (iii) - (iv) estimate are compared with the final estimate on
    higher dimensions (>= 2) only.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    if ell < 2:
        raise ValueError("ell must be >= 2")
    if bound < 1:
        raise ValueError("bound must be >= 1")
    lo, hi = -bound, bound
    if ell == 2:
        est = item_vi_estimate(n, 2)
        hi2 = max(hi, 2)
        return [
            _check("direct(l=2) ⊆ estimate", "⊆", item_vi_direct_l2(n), est, 2, hi2),
            _check("(iii)-(iv) ⊆ estimate", "⊆", item_iii(n, 2) - item_iv(n, 2), est, 2, hi2),
        ]
    return [
        _check("definition = line1", "=", item_vi_definition(n, ell), item_vi_line1(n, ell), lo, hi),
        _check("line1 = line2", "=", item_vi_line1(n, ell), item_vi_line2(n, ell), lo, hi),
        _check("line2 = line3", "=", item_vi_line2(n, ell), item_vi_line3(n, ell), lo, hi),
        _check("line3 ⊆ estimate", "⊆", item_vi_line3(n, ell), item_vi_estimate(n, ell), lo, hi),
    ]


def verify_item_vi(n: int, ell: int, bound: int) -> bool:
    return all(c.holds for c in item_vi_checks(n, ell, bound))


def verify_item_viii(n: int, ell: int, bound: int) -> bool:
    """estimate ∩ N equals (A[2n-1:2n-2:inf] - A[0:1:3(l-2)+1]) ∩ N in dimensions 1..bound."""
    left = eval_window(item_vi_estimate(n, ell).naturals(), 1, bound)
    right = eval_window(item_viii(n, ell), 1, bound)
    return left.as_set() == right.as_set()
