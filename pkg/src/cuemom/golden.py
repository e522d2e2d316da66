"""Published exact polynomials MoM_N(k, beta) for small k and beta.

Each entry is ``prefactor * prod (N + j) over shifts * cofactor`` with the
cofactor's integer coefficients listed from the highest power down.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .config import MomentSpec
from .exact import UniPoly


@dataclass(frozen=True)
class GoldenPolynomial:
    spec: MomentSpec
    polynomial: UniPoly


_TABLE = {
    (1, 1): (Fraction(1), range(1, 2), [1]),
    (2, 1): (Fraction(1, 6), range(1, 4), [1]),
    (3, 1): (Fraction(1, 2520), range(1, 6), [1, 6, 21]),
    (4, 1): (
        Fraction(1, 778377600),
        range(1, 8),
        [7, 168, 1804, 10944, 41893, 99624, 154440],
    ),
    (1, 2): (Fraction(1, 12), (1, 2, 2, 3), [1]),
    (2, 2): (
        Fraction(1, 163459296000),
        range(1, 8),
        [298, 9536, 134071, 1081640, 5494237, 18102224, 38466354, 50225040, 32432400],
    ),
    (2, 3): (
        Fraction(1, 1722191327731024154944441889587200000000),
        range(1, 12),
        [
            12308743625763,
            1772459082109872,
            121902830804059138,
            5328802119564663432,
            166214570195622478453,
            3937056259812505643352,
            73583663800226157619008,
            1113109355823972261429312,
            13869840005250869763713293,
            144126954435929329947378912,
            1259786144898207172443272698,
            9315726913410827893883025672,
            58475127984013141340467825323,
            311978271286536355427593012632,
            1413794106539529439589778645028,
            5427439874579682729570383266992,
            17564370687865211818995713096848,
            47561382824003032731805262975232,
            106610927256886475209611301000128,
            194861499503272627170466392014592,
            284303877221735683573377603640320,
            320989495108428049992898521600000,
            266974288159876385845370793984000,
            148918006780282798012340305920000,
            43144523802785397500411904000000,
        ],
    ),
}

GOLDEN_CASES: tuple[tuple[int, int], ...] = tuple(_TABLE)


def golden_polynomial(k: int, beta: int) -> GoldenPolynomial:
    prefactor, shifts, cofactor = _TABLE[(k, beta)]
    poly = UniPoly.from_linear_factors(shifts, prefactor) * UniPoly(reversed(cofactor))
    return GoldenPolynomial(MomentSpec(k, beta), poly)


def golden_cofactor(k: int, beta: int) -> UniPoly:
    return UniPoly(reversed(_TABLE[(k, beta)][2]))
