from fractions import Fraction

import pytest

from cuemom import golden
from cuemom.closed_forms import degree_of, keating_snaith_poly
from cuemom.exact import UniPoly
from cuemom.reconstructor import (
    DegreeLawError,
    factor_shifted_linear,
    leading_coefficient,
    mom_polynomial,
    verify_suite,
)

QUICK_GOLDEN = [(1, 1), (2, 1), (3, 1), (4, 1), (1, 2), (2, 2)]


def test_examples():
    assert mom_polynomial(2, 1) == UniPoly.from_linear_factors([1, 2, 3], Fraction(1, 6))
    assert mom_polynomial(1, 2) == UniPoly.from_linear_factors([1, 2, 2, 3], Fraction(1, 12))
    expected = UniPoly.from_linear_factors(range(1, 6), Fraction(1, 2520)) * UniPoly([21, 6, 1])
    assert mom_polynomial(3, 1) == expected


@pytest.mark.parametrize("k,beta", QUICK_GOLDEN)
def test_matches_golden(k, beta):
    p = mom_polynomial(k, beta)
    assert p == golden.golden_polynomial(k, beta).polynomial
    assert p.degree == degree_of(k, beta)
    assert p.leading_coefficient() > 0


@pytest.mark.parametrize("k,beta", QUICK_GOLDEN)
def test_golden_vanishes_at_small_negative_integers(k, beta):
    p = golden.golden_polynomial(k, beta).polynomial
    assert all(p(-j) == 0 for j in range(1, 2 * k * beta))


@pytest.mark.parametrize("k,beta", QUICK_GOLDEN)
def test_values_are_positive_integers(k, beta):
    p = mom_polynomial(k, beta)
    for n in range(degree_of(k, beta) + 3):
        v = p(n)
        assert v.denominator == 1 and v > 0


def test_golden_table_shape():
    assert set(golden.GOLDEN_CASES) == {(1, 1), (2, 1), (3, 1), (4, 1), (1, 2), (2, 2), (2, 3)}
    for k, beta in golden.GOLDEN_CASES:
        g = golden.golden_polynomial(k, beta).polynomial
        assert g.degree == degree_of(k, beta)
        assert g(0) == 1


@pytest.mark.parametrize("beta", [1, 2, 3, 4])
def test_k1_equals_product_formula(beta):
    assert mom_polynomial(1, beta) == keating_snaith_poly(beta)


def test_leading_coefficients():
    assert leading_coefficient(1, 1) == 1
    assert leading_coefficient(3, 1) == Fraction(1, 2520)
    assert leading_coefficient(2, 2) == Fraction(298, 163459296000)


def test_degree_law_violation_is_reported(monkeypatch):
    import cuemom.reconstructor as rec

    real = rec.rssyt.count_rssyt_range

    def tampered(k, beta, n_max, budget):
        vals = real(k, beta, n_max, budget)
        vals[-1] += 1
        return vals

    monkeypatch.setattr(rec.rssyt, "count_rssyt_range", tampered)
    rec.mom_polynomial.cache_clear()
    try:
        with pytest.raises(DegreeLawError):
            rec.mom_polynomial(2, 1)
    finally:
        monkeypatch.undo()
        rec.mom_polynomial.cache_clear()


def test_factor_examples():
    shifts, rest = factor_shifted_linear(UniPoly.from_linear_factors([1, 2, 3], Fraction(1, 6)))
    assert shifts == [1, 2, 3] and rest == UniPoly([Fraction(1, 6)])
    quad = UniPoly([21, 6, 1])
    assert factor_shifted_linear(quad) == ([], quad)
    assert factor_shifted_linear(UniPoly([1, 1])) == ([1], UniPoly([1]))


def test_factor_multiplicity_and_product():
    p = golden.golden_polynomial(1, 2).polynomial
    shifts, rest = factor_shifted_linear(p, 4)
    assert shifts == [1, 2, 2, 3]
    assert UniPoly.from_linear_factors(shifts) * rest == p


def test_factor_zero():
    with pytest.raises(ValueError):
        factor_shifted_linear(UniPoly())


def test_fast_tier_passes():
    report = verify_suite("fast")
    assert report.passed, report.render_text()
    names = {r.name for r in report.records}
    assert "golden polynomial" in names and "DP equals brute force" in names
    assert report.to_dict()["status"] == "pass"


def test_unknown_level():
    with pytest.raises(ValueError):
        verify_suite("huge")
