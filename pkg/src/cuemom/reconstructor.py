"""Rebuild MoM_N(k, beta) as a polynomial in N and run the verification tiers."""

from __future__ import annotations

import math
import random
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable

from . import cfkrs, closed_forms, golden, rssyt
from .config import DEFAULT_BUDGET, Budget
from .exact import UniPoly, binomial, poly_interpolate, vandermonde_sq_central_coeff


class DegreeLawError(ArithmeticError):
    """Reconstructed values disagree with a polynomial of degree k^2 beta^2 - k + 1."""


@lru_cache(maxsize=32)
def mom_polynomial(k: int, beta: int, guard: int = 2, budget: Budget = DEFAULT_BUDGET) -> UniPoly:
    """Interpolate tableau counts at N = 0..d, then confirm ``guard`` further values."""
    if guard < 0:
        raise ValueError("guard must be nonnegative")
    d = closed_forms.degree_of(k, beta)
    values = rssyt.count_rssyt_range(k, beta, d + guard, budget)
    poly = poly_interpolate([(n, values[n]) for n in range(d + 1)])
    for n in range(d + 1, d + guard + 1):
        if poly(n) != values[n]:
            raise DegreeLawError(f"MoM_{n}({k},{beta}) = {values[n]} but the degree-{d} fit predicts {poly(n)}")
    if poly.degree != d or poly.leading_coefficient() <= 0:
        raise DegreeLawError(f"fit has degree {poly.degree} and leading coefficient "
                             f"{poly.leading_coefficient()}, expected degree {d} with positive lead")
    return poly


def leading_coefficient(k: int, beta: int, budget: Budget = DEFAULT_BUDGET) -> Fraction:
    return mom_polynomial(k, beta, budget=budget).leading_coefficient()


def factor_shifted_linear(p: UniPoly, max_shift: int | None = None) -> tuple[list[int], UniPoly]:
    """Split off every factor (N + j), j = 1..max_shift, with multiplicity.

    Returns the sorted shifts and the remaining cofactor.
    """
    if p.is_zero():
        raise ValueError("cannot factor the zero polynomial")
    if max_shift is None:
        max_shift = p.degree + 1
    shifts = []
    rest = p
    for j in range(1, max_shift + 1):
        while rest.degree >= 1:
            quot, rem = rest.divmod_linear(j)
            if rem != 0:
                break
            shifts.append(j)
            rest = quot
    return shifts, rest


# ---------------------------------------------------------------------------
# Verification tiers
# ---------------------------------------------------------------------------

LEVELS = ("fast", "full", "extended")


@dataclass
class CheckRecord:
    name: str
    spec: str
    passed: bool
    expected: str
    actual: str
    elapsed_ms: float

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"


@dataclass
class VerificationReport:
    level: str
    records: list[CheckRecord] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.records)

    def to_dict(self) -> dict:
        return {
            "level": self.level,
            "status": "pass" if self.passed else "fail",
            "checks": [dict(asdict(r), status=r.status) for r in self.records],
        }

    def render_text(self) -> str:
        lines = []
        for r in self.records:
            line = f"[{r.status.upper()}] {r.name} ({r.spec}) {r.elapsed_ms:.0f} ms"
            if not r.passed:
                line += f"\n    expected: {r.expected}\n    actual:   {r.actual}"
            lines.append(line)
        n_ok = sum(r.passed for r in self.records)
        lines.append(f"{self.level}: {n_ok}/{len(self.records)} checks passed -> "
                     f"{'PASS' if self.passed else 'FAIL'}")
        return "\n".join(lines)


def _run(report: VerificationReport, name: str, spec: str, fn: Callable[[], tuple[object, object]]) -> None:
    t0 = time.perf_counter()
    try:
        expected, actual = fn()
        ok = expected == actual
        exp_s, act_s = _render(expected), _render(actual)
    except Exception as exc:  # a crashing check is a failed check
        ok, exp_s, act_s = False, "no exception", f"{type(exc).__name__}: {exc}"
    report.records.append(CheckRecord(name, spec, ok, exp_s, act_s, (time.perf_counter() - t0) * 1e3))


def _render(x) -> str:
    if isinstance(x, UniPoly):
        return "[" + ", ".join(str(c) for c in x.coeffs) + "]"
    return str(x)


def shuffled_exponents(k: int, beta: int, seed: int = 2) -> tuple[int, ...]:
    exps = list(cfkrs.default_exponents(k, beta))
    random.Random(seed).shuffle(exps)
    return tuple(exps)


FAST_GOLDEN = ((1, 1), (2, 1), (1, 2))
FULL_GOLDEN = ((3, 1), (4, 1), (2, 2))
EXTENDED_GOLDEN = ((2, 3),)
CROSS_METHOD_CASES = ((1, 1), (1, 2), (2, 1), (2, 2), (3, 1))
# k <= 4, beta <= 3 at N = 1 reaches k*beta = 12; only the single-column path runs there.
WIDE_BUDGET = Budget(max_kb=12)


def _golden_checks(report: VerificationReport, cases) -> None:
    for k, beta in cases:
        spec = f"k={k}, beta={beta}"
        _run(report, "golden polynomial", spec,
             lambda k=k, beta=beta: (golden.golden_polynomial(k, beta).polynomial, mom_polynomial(k, beta)))
        _run(report, "degree law", spec,
             lambda k=k, beta=beta: (closed_forms.degree_of(k, beta), mom_polynomial(k, beta).degree))
        _run(report, "positive leading coefficient", spec,
             lambda k=k, beta=beta: (True, leading_coefficient(k, beta) > 0))


def verify_suite(level: str = "fast") -> VerificationReport:
    if level not in LEVELS:
        raise ValueError(f"level must be one of {LEVELS}")
    report = VerificationReport(level)
    tiers = LEVELS[: LEVELS.index(level) + 1]

    # fast
    _golden_checks(report, FAST_GOLDEN)
    for k in range(1, 4):
        for beta in range(1, 4):
            if k * beta > 3:
                continue
            _run(report, "DP equals brute force", f"k={k}, beta={beta}, N=0..4",
                 lambda k=k, beta=beta: ([rssyt.brute_force_count(k, beta, n) for n in range(5)],
                                         rssyt.count_rssyt_range(k, beta, 4)))
    for beta in range(1, 5):
        _run(report, "k=1 product formula", f"beta={beta}, N=0..10",
             lambda beta=beta: ([closed_forms.keating_snaith_poly(beta)(n) for n in range(11)],
                                rssyt.count_rssyt_range(1, beta, 10)))
        _run(report, "k=1 leading coefficient", f"beta={beta}",
             lambda beta=beta: (closed_forms.ks_leading_coeff(beta),
                                closed_forms.keating_snaith_poly(beta).leading_coefficient()))
    for k in range(1, 5):
        for beta in range(1, 4):
            _run(report, "N=1 value", f"k={k}, beta={beta}",
                 lambda k=k, beta=beta: (binomial(2 * beta, beta) ** k,
                                         rssyt.count_rssyt(k, beta, 1, WIDE_BUDGET)))
    _run(report, "Vandermonde square central coefficient", "n=1..6",
         lambda: ([(-1) ** (n // 2) * math.factorial(n) for n in range(1, 7)],
                  [vandermonde_sq_central_coeff(n) for n in range(1, 7)]))

    if "full" in tiers:
        _golden_checks(report, FULL_GOLDEN)
        for k, beta in CROSS_METHOD_CASES:
            for n in range(4):
                spec = f"k={k}, beta={beta}, N={n}"
                _run(report, "ratio sum equals tableau count", spec,
                     lambda k=k, beta=beta, n=n: (rssyt.count_rssyt(k, beta, n), cfkrs.ct_extract(k, beta, n)))
                _run(report, "deformation independence", spec,
                     lambda k=k, beta=beta, n=n: (
                         cfkrs.ct_extract(k, beta, n),
                         cfkrs.ct_extract(k, beta, n, exponents=shuffled_exponents(k, beta))))

    if "extended" in tiers:
        _golden_checks(report, EXTENDED_GOLDEN)
        _run(report, "degree law", "k=3, beta=2",
             lambda: (closed_forms.degree_of(3, 2), mom_polynomial(3, 2).degree))

    return report
