"""Exact moments of moments of characteristic polynomials of Haar-random unitary matrices."""

__version__ = "0.1.0"

from .cfkrs import ct_extract, eval_I
from .closed_forms import degree_of, keating_snaith_poly, ks_leading_coeff, n1_value
from .reconstructor import leading_coefficient, mom_polynomial, verify_suite
from .rssyt import brute_force_count, count_rssyt, count_rssyt_range

__all__ = [
    "brute_force_count",
    "count_rssyt",
    "count_rssyt_range",
    "ct_extract",
    "degree_of",
    "eval_I",
    "keating_snaith_poly",
    "ks_leading_coeff",
    "leading_coefficient",
    "mom_polynomial",
    "n1_value",
    "verify_suite",
]
