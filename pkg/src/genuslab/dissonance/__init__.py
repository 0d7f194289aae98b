"""Arithmetic-progression set calculus and the stabilization feasibility test."""
from .calculus import (
    DEFAULT_SHIFT_MAX,
    ConstraintRow,
    Feasibility,
    ProofConstants,
    decompose,
    derive_constraints,
    dissonance_feasible,
    monoid_window,
    threshold_min_n,
    proof_constants,
    relevant_window,
    scan_column,
    sharp_min_n,
    t_expr,
    t_set,
)
from .items import item_vi_checks, verify_item_vi, verify_item_viii
from .kernels import backend
from .sets import INF, A, APSet, SetExpr, WindowError, WindowSet, eval_window

__all__ = [
    "A", "APSet", "INF", "SetExpr", "WindowError", "WindowSet", "eval_window",
    "DEFAULT_SHIFT_MAX", "ConstraintRow", "Feasibility", "ProofConstants",
    "decompose", "derive_constraints", "dissonance_feasible", "monoid_window",
    "threshold_min_n", "proof_constants", "relevant_window", "scan_column",
    "sharp_min_n", "t_expr", "t_set", "item_vi_checks", "verify_item_vi",
    "verify_item_viii", "backend",
]
