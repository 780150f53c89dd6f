"""Exact and numeric verification of integral representations of
k-Pell and k-Pell-Lucas numbers."""

from kpell.identities import check_lemma21, check_lemma22
from kpell.quadrature import QuadratureRule, legendre_rule, verify_numeric
from kpell.report import Mode, Status, VerificationReport
from kpell.ring import BinetPair, QuadraticElement, binet_pair, ring_conj, ring_mul, ring_pow
from kpell.sequences import Classical, Family, classical, kpell, kpell_lucas, sequence_range
from kpell.symbolic import (
    RingPoly,
    Theorem,
    TheoremParams,
    expand_linear_power,
    integrate_sym,
    poly_mul,
    rhs_exact,
    verify,
)

__all__ = [
    "BinetPair",
    "Classical",
    "Family",
    "Mode",
    "QuadraticElement",
    "QuadratureRule",
    "RingPoly",
    "Status",
    "Theorem",
    "TheoremParams",
    "VerificationReport",
    "binet_pair",
    "check_lemma21",
    "check_lemma22",
    "classical",
    "expand_linear_power",
    "integrate_sym",
    "kpell",
    "kpell_lucas",
    "legendre_rule",
    "poly_mul",
    "rhs_exact",
    "ring_conj",
    "ring_mul",
    "ring_pow",
    "sequence_range",
    "verify",
    "verify_numeric",
]

__version__ = "0.1.0"
