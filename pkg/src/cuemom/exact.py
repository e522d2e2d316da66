"""Exact arithmetic layer: rationals, dense polynomials in N, truncated Laurent
series in a deformation parameter t, and Newton interpolation.

Rationals are :class:`fractions.Fraction`; nothing in this module touches
floating point.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

ExactRational = Fraction


class DistinctNodesError(ValueError):
    """Two interpolation samples share an abscissa."""


class ResidualPoleError(ArithmeticError):
    """A summed series still carries a negative power of t."""


class SizeError(ValueError):
    """A request exceeds a configured size or runtime guard."""


def as_rational(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def binomial(n: int, r: int) -> int:
    if n < 0 or r < 0:
        raise ValueError("binomial arguments must be nonnegative")
    return math.comb(n, r)


def gen_binomial(a: int, i: int) -> int:
    """Generalised binomial coefficient a(a-1)...(a-i+1)/i! for any integer a."""
    num = 1
    for j in range(i):
        num *= a - j
    return num // math.factorial(i)


# ---------------------------------------------------------------------------
# Univariate polynomials in N
# ---------------------------------------------------------------------------


class UniPoly:
    """Dense polynomial with exact rational coefficients, lowest power first.

    The zero polynomial has degree -1.
    """

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)

    @classmethod
    def constant(cls, c) -> UniPoly:
        return cls([c])

    @classmethod
    def x(cls) -> UniPoly:
        return cls([0, 1])

    @classmethod
    def from_linear_factors(cls, shifts: Iterable[int], scale=1) -> UniPoly:
        """scale * prod (N + j) over the given shifts."""
        p = cls([scale])
        for j in shifts:
            p = p * cls([j, 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def leading_coefficient(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def __getitem__(self, i: int) -> Fraction:
        if 0 <= i < len(self.coeffs):
            return self.coeffs[i]
        return Fraction(0)

    def __call__(self, x):
        acc = Fraction(0)
        x = as_rational(x)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == UniPoly([other]).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other) -> UniPoly:
        other = _lift(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self[i] + other[i] for i in range(n))

    __radd__ = __add__

    def __neg__(self) -> UniPoly:
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> UniPoly:
        return self + (-_lift(other))

    def __rsub__(self, other) -> UniPoly:
        return _lift(other) - self

    def __mul__(self, other) -> UniPoly:
        other = _lift(other)
        if self.is_zero() or other.is_zero():
            return UniPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                out[i + j] += a * b
        return UniPoly(out)

    __rmul__ = __mul__

    def divmod_linear(self, shift: int) -> tuple[UniPoly, Fraction]:
        """Synthetic division by (N + shift); returns (quotient, remainder)."""
        if self.is_zero():
            return UniPoly(), Fraction(0)
        root = -shift
        quot = [Fraction(0)] * self.degree
        acc = Fraction(0)
        for i in range(self.degree, -1, -1):
            acc = acc * root + self.coeffs[i]
            if i > 0:
                quot[i - 1] = acc
        return UniPoly(quot), acc

    def content(self) -> Fraction:
        """Positive rational c with self / c primitive with integer coefficients."""
        if self.is_zero():
            return Fraction(0)
        den = math.lcm(*(c.denominator for c in self.coeffs))
        num = math.gcd(*(c.numerator for c in self.coeffs))
        return Fraction(num, den)

    def __repr__(self) -> str:
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self) -> str:
        return render_plain(self)


def _lift(x) -> UniPoly:
    if isinstance(x, UniPoly):
        return x
    return UniPoly([x])


def render_plain(p: UniPoly, var: str = "N") -> str:
    """Human rendering in descending powers, e.g. ``1/6*N^3 + N^2 + 11/6*N + 1``."""
    if p.is_zero():
        return "0"
    parts = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = abs(c)
        if i == 0:
            body = str(a)
        else:
            mono = var if i == 1 else f"{var}^{i}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


# ---------------------------------------------------------------------------
# Interpolation
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InterpolationSample:
    abscissa: Fraction
    value: Fraction


def _coerce_samples(samples) -> list[tuple[Fraction, Fraction]]:
    out = []
    for s in samples:
        if isinstance(s, InterpolationSample):
            out.append((as_rational(s.abscissa), as_rational(s.value)))
        else:
            x, y = s
            out.append((as_rational(x), as_rational(y)))
    return out


def poly_interpolate(samples: Sequence) -> UniPoly:
    """Unique polynomial of degree < len(samples) through the samples.

    Samples are :class:`InterpolationSample` objects or ``(x, y)`` pairs.
    Uses Newton divided differences.
    """
    pts = _coerce_samples(samples)
    if not pts:
        raise ValueError("at least one sample is required")
    xs = [x for x, _ in pts]
    if len(set(xs)) != len(xs):
        raise DistinctNodesError("interpolation abscissas must be pairwise distinct")
    n = len(pts)
    dd = [y for _, y in pts]
    for level in range(1, n):
        for i in range(n - 1, level - 1, -1):
            dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level])
    # Horner on the Newton form.
    p = UniPoly([dd[-1]])
    for i in range(n - 2, -1, -1):
        p = p * UniPoly([-xs[i], 1]) + dd[i]
    return p


# ---------------------------------------------------------------------------
# Truncated Laurent series in t
# ---------------------------------------------------------------------------


class TruncatedLaurentSeries:
    """``sum_{e=min_exp}^{min_exp+len-1} c_e t^e + O(t^{min_exp+len})``.

    ``prec`` is the absolute precision: the first exponent not tracked.
    """

    __slots__ = ("min_exp", "coeffs")

    def __init__(self, min_exp: int, coeffs: Iterable):
        self.min_exp = int(min_exp)
        self.coeffs: tuple[Fraction, ...] = tuple(as_rational(c) for c in coeffs)
        if not self.coeffs:
            raise ValueError("series window must be nonempty")

    @property
    def window(self) -> int:
        return len(self.coeffs)

    @property
    def prec(self) -> int:
        return self.min_exp + len(self.coeffs)

    @classmethod
    def constant(cls, c, window: int) -> TruncatedLaurentSeries:
        return cls(0, [c] + [0] * (window - 1))

    @classmethod
    def binomial_power(cls, a: int, window: int) -> TruncatedLaurentSeries:
        """(1+t)^a to ``window`` terms, for any integer a."""
        return cls(0, [gen_binomial(a, i) for i in range(window)])

    def coefficient(self, e: int) -> Fraction:
        if not self.min_exp <= e < self.prec:
            raise IndexError(f"exponent {e} outside tracked window [{self.min_exp}, {self.prec})")
        return self.coeffs[e - self.min_exp]

    def valuation(self) -> int | None:
        """Lowest exponent with a nonzero tracked coefficient (None if all zero)."""
        for i, c in enumerate(self.coeffs):
            if c != 0:
                return self.min_exp + i
        return None

    def _normalized(self) -> TruncatedLaurentSeries:
        v = self.valuation()
        if v is None or v == self.min_exp:
            return self
        return TruncatedLaurentSeries(v, self.coeffs[v - self.min_exp:])

    def __add__(self, other) -> TruncatedLaurentSeries:
        if not isinstance(other, TruncatedLaurentSeries):
            other = TruncatedLaurentSeries.constant(other, max(self.prec, 1))
        lo = min(self.min_exp, other.min_exp)
        hi = min(self.prec, other.prec)
        if hi <= lo:
            raise ValueError("sum has empty precision window")
        out = [Fraction(0)] * (hi - lo)
        for s in (self, other):
            for i, c in enumerate(s.coeffs):
                e = s.min_exp + i
                if e >= hi:
                    break
                out[e - lo] += c
        return TruncatedLaurentSeries(lo, out)

    __radd__ = __add__

    def __neg__(self) -> TruncatedLaurentSeries:
        return TruncatedLaurentSeries(self.min_exp, [-c for c in self.coeffs])

    def __sub__(self, other) -> TruncatedLaurentSeries:
        return self + (-other)

    def scale(self, c) -> TruncatedLaurentSeries:
        c = as_rational(c)
        return TruncatedLaurentSeries(self.min_exp, [c * x for x in self.coeffs])

    def shift(self, e: int) -> TruncatedLaurentSeries:
        """Multiply by t^e."""
        return TruncatedLaurentSeries(self.min_exp + e, self.coeffs)

    def __mul__(self, other) -> TruncatedLaurentSeries:
        if not isinstance(other, TruncatedLaurentSeries):
            return self.scale(other)
        a, b = self._normalized(), other._normalized()
        if a.valuation() is None or b.valuation() is None:
            raise ValueError("product with an all-zero tracked series has no defined window")
        n = min(a.window, b.window)
        # Convolve integer numerators over common denominators; one reduction per coefficient.
        ai, da = _integer_vector(a.coeffs[:n])
        bi, db = _integer_vector(b.coeffs[:n])
        den = da * db
        out = [Fraction(sum(ai[j] * bi[i - j] for j in range(i + 1)), den) for i in range(n)]
        return TruncatedLaurentSeries(a.min_exp + b.min_exp, out)

    __rmul__ = __mul__

    def inverse(self) -> TruncatedLaurentSeries:
        c0 = self.coeffs[0]
        if c0 == 0:
            raise ZeroDivisionError("series inverse needs a nonzero lowest tracked coefficient")
        n = self.window
        inv0 = 1 / c0
        out = [inv0]
        for i in range(1, n):
            s = Fraction(0)
            for j in range(1, i + 1):
                s += self.coeffs[j] * out[i - j]
            out.append(-s * inv0)
        return TruncatedLaurentSeries(-self.min_exp, out)

    def __truediv__(self, other) -> TruncatedLaurentSeries:
        if isinstance(other, TruncatedLaurentSeries):
            return self * other._normalized().inverse()
        return self.scale(1 / as_rational(other))

    def __eq__(self, other) -> bool:
        if not isinstance(other, TruncatedLaurentSeries):
            return NotImplemented
        return self.min_exp == other.min_exp and self.coeffs == other.coeffs

    def __repr__(self) -> str:
        terms = ", ".join(str(c) for c in self.coeffs)
        return f"TruncatedLaurentSeries(min_exp={self.min_exp}, [{terms}])"


def _integer_vector(cs: Sequence[Fraction]) -> tuple[list[int], int]:
    den = math.lcm(*(c.denominator for c in cs))
    return [c.numerator * (den // c.denominator) for c in cs], den


def series_limit_t0(s: TruncatedLaurentSeries) -> Fraction:
    """Value at t=0 of a series that must be regular there."""
    if s.prec <= 0:
        raise ValueError("series window stops before t^0")
    for e in range(s.min_exp, 0):
        c = s.coefficient(e)
        if c != 0:
            raise ResidualPoleError(f"nonzero coefficient {c} at t^{e}")
    return s.coefficient(0) if s.min_exp <= 0 else Fraction(0)


# ---------------------------------------------------------------------------
# Vandermonde square
# ---------------------------------------------------------------------------


def _mpoly_mul(a: dict, b: dict) -> dict:
    out: dict = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def vandermonde_sq_central_coeff(n: int) -> int:
    """Coefficient of (x_1...x_n)^(n-1) in prod_{i<j} (x_j - x_i)^2, by expansion."""
    if not 1 <= n <= 6:
        raise SizeError("vandermonde_sq_central_coeff supports 1 <= n <= 6")
    zero = (0,) * n
    delta = {zero: 1}
    for i, j in itertools.combinations(range(n), 2):
        xi = tuple(1 if m == i else 0 for m in range(n))
        xj = tuple(1 if m == j else 0 for m in range(n))
        delta = _mpoly_mul(delta, {xj: 1, xi: -1})
    # Coefficient of the centre in delta^2: pair each monomial with its complement.
    total = 0
    for e, c in delta.items():
        comp = tuple(n - 1 - x for x in e)
        total += c * delta.get(comp, 0)
    return total
