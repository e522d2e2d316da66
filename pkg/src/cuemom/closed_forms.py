"""Closed formulas for the k = 1 moment, its leading term, the degree law and N = 1."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .config import MomentSpec
from .exact import UniPoly, binomial


@dataclass(frozen=True)
class ClosedFormReport:
    spec: MomentSpec
    polynomial: UniPoly | None
    leading_coefficient: Fraction
    degree: int

    def __post_init__(self):
        if self.polynomial is not None and self.polynomial.degree != self.degree:
            raise ValueError("degree does not match the polynomial")


def _check_beta(beta: int) -> None:
    if not 1 <= beta <= 8:
        raise ValueError("beta must satisfy 1 <= beta <= 8")


def keating_snaith_poly(beta: int) -> UniPoly:
    """prod_{0 <= i, j <= beta-1} (1 + N / (i + j + 1)), expanded exactly."""
    _check_beta(beta)
    p = UniPoly([1])
    for i in range(beta):
        for j in range(beta):
            p = p * UniPoly([1, Fraction(1, i + j + 1)])
    return p


def ks_leading_coeff(beta: int) -> Fraction:
    _check_beta(beta)
    out = Fraction(1)
    for j in range(beta):
        out *= Fraction(math.factorial(j), math.factorial(j + beta))
    return out


def degree_of(k: int, beta: int) -> int:
    if k < 1 or beta < 1:
        raise ValueError("k and beta must be positive integers")
    return k * k * beta * beta - k + 1


def n1_value(k: int, beta: int) -> int:
    """MoM_1(k, beta): for a 1x1 unitary |P|^(2 beta) averages to C(2 beta, beta) for every A."""
    if k < 1 or beta < 1:
        raise ValueError("k and beta must be positive integers")
    return binomial(2 * beta, beta) ** k


def closed_form_report(beta: int) -> ClosedFormReport:
    p = keating_snaith_poly(beta)
    return ClosedFormReport(MomentSpec(1, beta), p, ks_leading_coeff(beta), degree_of(1, beta))
