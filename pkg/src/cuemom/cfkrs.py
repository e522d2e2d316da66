"""MoM_N(k, beta) from the split-permutation ratio sum.

For 2kb = 2*k*beta variables omega_1..omega_2kb the rectangular Schur
polynomial of shape <N^kb> is

    sum over sigma in Xi_kb of
        (omega_{sigma(kb+1)} ... omega_{sigma(2kb)})^N
        / prod_{l <= kb < q} (1 - omega_{sigma(l)} / omega_{sigma(q)})

where Xi_kb holds the permutations increasing on each half. The average
I_{k,beta} is this sum at omega = (q_1 x beta, ..., q_k x beta, q_1 x beta,
..., q_k x beta) divided by prod_j q_j^(beta N). Equal omegas make single
summands singular, so each omega_m is pushed to q_b(m) * (1+t)^c_m, every
summand becomes a truncated Laurent series in t, and the t^0 coefficient of
the total is read off after checking that every negative power cancelled.

MoM_N is then the constant term of I over the k variables q_j, extracted by
nested exact interpolation on disjoint integer node grids.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Sequence

from .config import DEFAULT_BUDGET, Budget
from .exact import SizeError, TruncatedLaurentSeries, poly_interpolate, series_limit_t0

TLS = TruncatedLaurentSeries


@dataclass(frozen=True)
class SplitPermutation:
    """sigma in Xi_half, stored by the (0-based, increasing) images of the first half."""

    first_half: tuple[int, ...]
    size: int

    @property
    def second_half(self) -> tuple[int, ...]:
        taken = set(self.first_half)
        return tuple(m for m in range(self.size) if m not in taken)


def enumerate_xi(half: int, budget: Budget = DEFAULT_BUDGET) -> list[SplitPermutation]:
    if half < 1:
        raise ValueError("half must be a positive integer")
    if half > budget.max_xi_half:
        raise SizeError(f"half = {half} exceeds the budget of {budget.max_xi_half}")
    n = 2 * half
    return [SplitPermutation(c, n) for c in itertools.combinations(range(n), half)]


def omega_blocks(k: int, beta: int) -> tuple[int, ...]:
    """Block index (0-based) of each omega position: each q_j beta times per half."""
    half = [j for j in range(k) for _ in range(beta)]
    return tuple(half + half)


def default_exponents(k: int, beta: int) -> tuple[int, ...]:
    return tuple(range(1, 2 * k * beta + 1))


def _check_exponents(exponents: Sequence[int], size: int) -> tuple[int, ...]:
    exps = tuple(int(c) for c in exponents)
    if len(exps) != size or len(set(exps)) != size:
        raise ValueError(f"need {size} pairwise-distinct deformation exponents")
    return exps


# ---------------------------------------------------------------------------
# q-independent pieces, cached per (k, beta, N, exponents, window)
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class _Summand:
    second: tuple[int, ...]  # omega positions in the numerator
    cross: tuple[tuple[int, int], ...]  # (l, q) position pairs lying in distinct blocks
    fixed: TruncatedLaurentSeries  # (1+t)^(N sum c) / prod over same-block pairs


def _unit_over_t(d: int, window: int) -> TruncatedLaurentSeries:
    """1 / (1 - (1+t)^d) for d != 0, as t^-1 times a unit series."""
    u = TLS.binomial_power(d, window + 1)
    # 1 - (1+t)^d = -(d t + C(d,2) t^2 + ...); keep the quotient by t.
    reduced = TLS(0, [-c for c in u.coeffs[1:]])
    return reduced.inverse().shift(-1)


@lru_cache(maxsize=64)
def _summands(k: int, beta: int, n: int, exponents: tuple[int, ...], window: int) -> tuple[_Summand, ...]:
    blocks = omega_blocks(k, beta)
    kb = k * beta
    out = []
    for sigma in enumerate_xi(kb):
        first, second = sigma.first_half, sigma.second_half
        fixed = TLS.binomial_power(n * sum(exponents[m] for m in second), window)
        cross = []
        for l in first:
            for q in second:
                if blocks[l] == blocks[q]:
                    fixed = fixed * _unit_over_t(exponents[l] - exponents[q], window)
                else:
                    cross.append((l, q))
        out.append(_Summand(second, tuple(cross), fixed))
    return tuple(out)


def _cross_factor(rho: Fraction, d: int, window: int) -> TruncatedLaurentSeries:
    """1 / (1 - rho (1+t)^d) with rho != 1."""
    u = TLS.binomial_power(d, window)
    return TLS(0, [1 - rho * u.coeffs[0]] + [-rho * c for c in u.coeffs[1:]]).inverse()


def summed_series(k: int, beta: int, n: int, q: Sequence, exponents: Sequence[int] | None = None,
                  window: int | None = None) -> TruncatedLaurentSeries:
    """The deformed ratio sum, before dividing by prod q_j^(beta N).

    Its t^0 coefficient is the rectangular Schur polynomial at the repeated
    point; negative powers of t must all cancel.
    """
    if k < 1 or beta < 1 or n < 0:
        raise ValueError("k, beta must be positive and N nonnegative")
    qs = tuple(Fraction(x) for x in q)
    if len(qs) != k:
        raise ValueError(f"need exactly k = {k} values q")
    if any(x == 0 for x in qs) or len(set(qs)) != k:
        raise ValueError("q values must be nonzero and pairwise distinct")
    min_window = k * beta * beta + 1
    if window is None:
        window = min_window
    if window < min_window:
        raise ValueError(f"series window must be at least k*beta^2 + 1 = {min_window}")
    exps = _check_exponents(exponents if exponents is not None else default_exponents(k, beta), 2 * k * beta)
    blocks = omega_blocks(k, beta)

    cross_cache: dict[tuple[int, int], TruncatedLaurentSeries] = {}
    total = None
    for s in _summands(k, beta, n, exps, window):
        term = s.fixed
        for l, qpos in s.cross:
            f = cross_cache.get((l, qpos))
            if f is None:
                rho = qs[blocks[l]] / qs[blocks[qpos]]
                f = _cross_factor(rho, exps[l] - exps[qpos], window)
                cross_cache[(l, qpos)] = f
            term = term * f
        mono = Fraction(1)
        for m in s.second:
            mono *= qs[blocks[m]]
        term = term.scale(mono ** n)
        total = term if total is None else total + term
    return total


def eval_I(k: int, beta: int, n: int, q: Sequence, exponents: Sequence[int] | None = None,
           window: int | None = None) -> Fraction:
    """E prod_j |P_N(A, theta_j)|^(2 beta) with e^(i theta_j) replaced by the rational q_j."""
    s = summed_series(k, beta, n, q, exponents, window)
    value = series_limit_t0(s)
    prefactor = Fraction(1)
    for x in q:
        prefactor *= Fraction(x) ** (beta * n)
    return value / prefactor


# ---------------------------------------------------------------------------
# Constant-term extraction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CTPlan:
    nodes: tuple[tuple[int, ...], ...]  # one node list per variable

    @classmethod
    def default(cls, k: int, beta: int, n: int, extra: int = 0) -> CTPlan:
        m = 2 * beta * n + 1
        stride = m + 1 + extra
        return cls(tuple(tuple(j * stride + i for i in range(1, m + 1 + extra)) for j in range(k)))


def ct_extract(k: int, beta: int, n: int, exponents: Sequence[int] | None = None,
               budget: Budget = DEFAULT_BUDGET) -> int:
    """MoM_N(k, beta) as the constant term of I_{k,beta} over q_1..q_k."""
    if k < 1 or beta < 1 or n < 0:
        raise ValueError("k, beta must be positive and N nonnegative")
    m = 2 * beta * n + 1
    if m ** k > budget.max_ct_evals:
        raise SizeError(f"{m ** k} evaluations exceed the budget of {budget.max_ct_evals}")
    plan = CTPlan.default(k, beta, n)
    shift = beta * n

    def coefficient(prefix: tuple[int, ...]) -> Fraction:
        j = len(prefix)
        if j == k:
            return eval_I(k, beta, n, prefix, exponents)
        samples = []
        for x in plan.nodes[j]:
            # q^(beta N) times a Laurent polynomial with exponents in [-beta N, beta N].
            samples.append((x, Fraction(x) ** shift * coefficient(prefix + (x,))))
        return poly_interpolate(samples)[shift]

    value = coefficient(())
    if value.denominator != 1:
        raise ArithmeticError(f"constant term {value} is not an integer")
    return int(value)
