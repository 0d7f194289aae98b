"""Exact multiplicative-sequence coefficients, sign checks and dimension-set calculus."""
__version__ = "0.1.0"

from .genus import GenusId, coefficient, genus_polynomial, genus_sequence
from .numeric import bernoulli, h_closed_form, hirzebruch_B, zeta_even_rational

__all__ = [
    "__version__",
    "GenusId",
    "bernoulli",
    "coefficient",
    "genus_polynomial",
    "genus_sequence",
    "h_closed_form",
    "hirzebruch_B",
    "zeta_even_rational",
]
