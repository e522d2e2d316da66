import math
from fractions import Fraction

import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from cuemom.exact import (
    DistinctNodesError,
    InterpolationSample,
    ResidualPoleError,
    SizeError,
    TruncatedLaurentSeries as TLS,
    UniPoly,
    binomial,
    poly_interpolate,
    series_limit_t0,
    vandermonde_sq_central_coeff,
)

rationals = st.fractions(min_value=-20, max_value=20, max_denominator=12)


def test_interpolate_line():
    assert poly_interpolate([(0, 1), (1, 2)]) == UniPoly([1, 1])


def test_interpolate_cubic_from_appendix_values():
    p = poly_interpolate([InterpolationSample(Fraction(x), Fraction(y)) for x, y in [(0, 1), (1, 4), (2, 10), (3, 20)]])
    assert p == UniPoly([6, 11, 6, 1]) * Fraction(1, 6)


def test_interpolate_single_sample():
    assert poly_interpolate([(5, 7)]) == UniPoly([7])


def test_interpolate_duplicate_nodes():
    with pytest.raises(DistinctNodesError):
        poly_interpolate([(1, 2), (1, 3)])


@given(st.lists(rationals, min_size=1, max_size=7), st.integers(0, 3), st.integers(-5, 5))
def test_interpolation_reproduces_and_predicts_guards(coeffs, guard, start):
    p = UniPoly(coeffs)
    d = max(p.degree, 0)
    xs = list(range(start, start + d + 1 + guard))
    fit = poly_interpolate([(x, p(x)) for x in xs[: d + 1]])
    assert fit == p
    assert all(fit(x) == p(x) for x in xs[d + 1:])


@given(st.integers(-10**12, 10**12), st.integers(-10**12, 10**12))
def test_rationals_preserve_integers(a, b):
    for r in (Fraction(a) + Fraction(b), Fraction(a) - Fraction(b), Fraction(a) * Fraction(b)):
        assert r.denominator == 1


def test_unipoly_zero_and_eval():
    assert UniPoly().degree == -1
    assert UniPoly([0, 0]).is_zero()
    p = UniPoly([1, 1]) * UniPoly([2, 1]) * UniPoly([3, 1])
    assert p(4) == 5 * 6 * 7
    q, r = p.divmod_linear(2)
    assert r == 0 and q == UniPoly([1, 1]) * UniPoly([3, 1])


def test_binomial():
    assert binomial(4, 2) == 6
    assert binomial(2, 1) == 2
    assert binomial(3, 5) == 0
    # Pascal recurrence oracle for C(12, 6).
    row = [1]
    for _ in range(12):
        row = [1] + [row[i] + row[i + 1] for i in range(len(row) - 1)] + [1]
    assert binomial(12, 6) == row[6] == 924


# --- Laurent series ---------------------------------------------------------


def test_limit_of_regular_series():
    s = TLS(-2, [0, 0, 3, 5])
    assert series_limit_t0(s) == 3


def test_limit_rejects_uncancelled_pole():
    s = TLS(-1, [1, 3])
    with pytest.raises(ResidualPoleError):
        series_limit_t0(s)


def _divide_by_t(s):
    assert s.coeffs[0] == 0
    return TLS(s.min_exp, s.coeffs[1:])


def test_limit_of_two_term_deformed_sum():
    # 1/(1-(1+t)^-1) + (1+t)^-N/(1-(1+t)) at N = 1: both terms have a simple pole.
    w = 3
    one = TLS.constant(1, w + 1)
    term1 = _divide_by_t(one - TLS.binomial_power(-1, w + 1)).inverse().shift(-1)
    term2 = TLS.binomial_power(-1, w) * _divide_by_t(one - TLS.binomial_power(1, w + 1)).inverse().shift(-1)
    assert term1.valuation() == term2.valuation() == -1
    assert series_limit_t0(term1 + term2) == 2

    t = sympy.symbols("t")
    expr = 1 / (1 - (1 + t) ** -1) + (1 + t) ** -1 / (1 - (1 + t))
    assert sympy.limit(expr, t, 0) == 2


series_strategy = st.builds(
    lambda val, lead, rest: TLS(val, [lead] + rest),
    st.integers(-3, 3),
    rationals.filter(lambda x: x != 0),
    st.lists(rationals, min_size=0, max_size=5),
)


@settings(max_examples=60)
@given(series_strategy, series_strategy, series_strategy)
def test_series_product_is_associative(a, b, c):
    assert (a * b) * c == a * (b * c)


@settings(max_examples=60)
@given(series_strategy)
def test_series_inverse(a):
    prod = a * a.inverse()
    assert prod.min_exp == 0
    assert prod.coeffs == (1,) + (0,) * (a.window - 1)
    assert a.inverse().valuation() == -a.valuation()


def test_series_product_window_is_min_relative():
    a = TLS(-1, [1, 2, 3, 4])
    b = TLS(2, [5, 6])
    p = a * b
    assert p.min_exp == 1 and p.window == 2


def test_binomial_power_matches_sympy():
    t = sympy.symbols("t")
    for a in (-4, -1, 3, 7):
        ref = sympy.series((1 + t) ** a, t, 0, 6).removeO()
        got = TLS.binomial_power(a, 6)
        assert [sympy.Rational(ref.coeff(t, i)) for i in range(6)] == [sympy.Rational(str(c)) for c in got.coeffs]


# --- Vandermonde ------------------------------------------------------------


def test_vandermonde_small():
    assert vandermonde_sq_central_coeff(1) == 1
    assert vandermonde_sq_central_coeff(2) == -2
    assert vandermonde_sq_central_coeff(3) == -6


@pytest.mark.parametrize("n", [2, 3, 4])
def test_vandermonde_against_sympy(n):
    xs = sympy.symbols(f"x1:{n + 1}")
    delta = sympy.prod([(xs[j] - xs[i]) for i in range(n) for j in range(i + 1, n)])
    poly = sympy.Poly(sympy.expand(delta**2), *xs)
    assert poly.coeff_monomial(sympy.prod([x ** (n - 1) for x in xs])) == vandermonde_sq_central_coeff(n)


@pytest.mark.parametrize("n", range(1, 7))
def test_vandermonde_sign_law(n):
    assert vandermonde_sq_central_coeff(n) == (-1) ** (n // 2) * math.factorial(n)


def test_vandermonde_range():
    with pytest.raises(SizeError):
        vandermonde_sq_central_coeff(7)
