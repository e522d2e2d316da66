"""``mom`` command line: values, polynomials, tables and verification."""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile
import time
from dataclasses import asdict, dataclass, field
from fractions import Fraction
from pathlib import Path

from . import __version__, cfkrs, closed_forms, rssyt
from .config import cache_dir
from .exact import SizeError, UniPoly, render_plain
from .reconstructor import DegreeLawError, LEVELS, factor_shifted_linear, mom_polynomial, verify_suite

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2
EXIT_CACHE_MISMATCH = 3

METHODS = ("dp", "cfkrs", "closed-form")


class UsageError(Exception):
    pass


class CacheMismatch(Exception):
    pass


# ---------------------------------------------------------------------------
# Documents
# ---------------------------------------------------------------------------


def _ms(seconds: float) -> float:
    return round(seconds * 1e3, 3)


@dataclass
class ValueDocument:
    k: int
    beta: int
    n: int
    method: str
    value: str
    elapsed_ms: float

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> ValueDocument:
        return cls(**json.loads(text))


@dataclass
class PolyDocument:
    k: int
    beta: int
    method: str
    degree: int
    coefficients: list[dict]
    factors: list[dict]
    elapsed_ms: float

    @classmethod
    def build(cls, k: int, beta: int, poly: UniPoly, shifts: list[int], elapsed_ms: float) -> PolyDocument:
        coeffs = [{"num": str(c.numerator), "den": str(c.denominator)} for c in poly.coeffs]
        factors = [{"shift": j, "multiplicity": shifts.count(j)} for j in sorted(set(shifts))]
        return cls(k, beta, "dp", poly.degree, coeffs, factors, elapsed_ms)

    def polynomial(self) -> UniPoly:
        return UniPoly(Fraction(int(c["num"]), int(c["den"])) for c in self.coefficients)

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2) + "\n"

    @classmethod
    def from_json(cls, text: str) -> PolyDocument:
        return cls(**json.loads(text))


@dataclass
class TableDocument:
    k: int
    beta: int
    method: str
    rows: list[dict] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def to_json(self) -> str:
        return json.dumps(asdict(self), indent=2) + "\n"

    def to_csv(self) -> str:
        lines = ["k,beta,n,value"]
        lines += [f"{self.k},{self.beta},{r['n']},{r['value']}" for r in self.rows]
        return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Rendering
# ---------------------------------------------------------------------------


def split_factored(poly: UniPoly, max_shift: int) -> tuple[Fraction, list[int], UniPoly]:
    """poly = prefactor * prod (N + j) * cofactor with an integer primitive cofactor."""
    shifts, rest = factor_shifted_linear(poly, max_shift)
    c = rest.content()
    if rest.leading_coefficient() < 0:
        c = -c
    cofactor = UniPoly(x / c for x in rest.coeffs)
    return c, shifts, cofactor


def _poly_body(p: UniPoly, latex: bool) -> str:
    terms = []
    for i in range(p.degree, -1, -1):
        c = p.coeffs[i]
        if c == 0:
            continue
        a = abs(c)
        if i == 0:
            mono = ""
        elif i == 1:
            mono = "N"
        else:
            mono = f"N^{{{i}}}" if (latex and i >= 10) else f"N^{i}"
        coef = "" if (a == 1 and mono) else str(a)
        terms.append(("-" if c < 0 else "+", coef + mono))
    out = ("-" if terms[0][0] == "-" else "") + terms[0][1]
    for sign, body in terms[1:]:
        out += sign + body
    return out


def render_factored(poly: UniPoly, max_shift: int, latex: bool = False) -> str:
    pre, shifts, cofactor = split_factored(poly, max_shift)
    parts = []
    for j in sorted(set(shifts)):
        m = shifts.count(j)
        base = f"(N+{j})"
        if m > 1:
            base += f"^{{{m}}}" if (latex and m >= 10) else f"^{m}"
        parts.append(base)
    if cofactor.degree >= 1:
        parts.append(f"({_poly_body(cofactor, latex)})")
    body = "".join(parts)
    if pre == 1 and body:
        return body
    if latex:
        pre_s = str(pre) if pre.denominator == 1 else f"\\frac{{{pre.numerator}}}{{{pre.denominator}}}"
    else:
        pre_s = str(pre) + (" " if body else "")
    return pre_s + body


# ---------------------------------------------------------------------------
# Cache
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class CacheRecord:
    k: int
    beta: int
    n: int
    method: str
    value: str
    tool_version: str

    @property
    def key(self) -> tuple:
        return (self.k, self.beta, self.n, self.method)


class ValueCache:
    """Line-delimited JSON records; writes replace the file atomically."""

    def __init__(self, directory: Path):
        self.path = Path(directory) / "values.jsonl"

    def load(self) -> dict[tuple, CacheRecord]:
        if not self.path.exists():
            return {}
        out = {}
        for line in self.path.read_text().splitlines():
            if line.strip():
                rec = CacheRecord(**json.loads(line))
                out[rec.key] = rec
        return out

    def check_and_store(self, rec: CacheRecord) -> None:
        existing = self.load()
        old = existing.get(rec.key)
        if old is not None:
            if old.value != rec.value:
                raise CacheMismatch(f"cached value {old.value} for {rec.key} differs from recomputed {rec.value}")
            return
        self.path.parent.mkdir(parents=True, exist_ok=True)
        body = self.path.read_text() if self.path.exists() else ""
        body += json.dumps(asdict(rec), sort_keys=True) + "\n"
        fd, tmp = tempfile.mkstemp(dir=self.path.parent, prefix=".values.", suffix=".tmp")
        with os.fdopen(fd, "w") as fh:
            fh.write(body)
        os.replace(tmp, self.path)


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------


def compute_value(k: int, beta: int, n: int, method: str) -> int:
    if method == "dp":
        return rssyt.count_rssyt(k, beta, n)
    if method == "cfkrs":
        return cfkrs.ct_extract(k, beta, n)
    if method == "closed-form":
        if k == 1:
            v = closed_forms.keating_snaith_poly(beta)(n)
            return int(v)
        if n == 0:
            return 1
        if n == 1:
            return closed_forms.n1_value(k, beta)
        raise UsageError("closed-form needs k = 1 or n in {0, 1}")
    raise UsageError(f"unknown method {method!r}")


def cmd_value(args) -> int:
    t0 = time.perf_counter()
    value = compute_value(args.k, args.beta, args.n, args.method)
    elapsed = _ms(time.perf_counter() - t0)
    if not args.no_cache:
        ValueCache(cache_dir()).check_and_store(
            CacheRecord(args.k, args.beta, args.n, args.method, str(value), __version__))
    if args.format == "json":
        sys.stdout.write(ValueDocument(args.k, args.beta, args.n, args.method, str(value), elapsed).to_json())
    else:
        print(value)
    return EXIT_OK


def cmd_poly(args) -> int:
    t0 = time.perf_counter()
    poly = mom_polynomial(args.k, args.beta, args.guard)
    max_shift = 2 * args.k * args.beta
    shifts, _ = factor_shifted_linear(poly, max_shift)
    elapsed = _ms(time.perf_counter() - t0)
    if args.format == "json":
        sys.stdout.write(PolyDocument.build(args.k, args.beta, poly, shifts, elapsed).to_json())
    elif args.format == "latex":
        print(render_factored(poly, max_shift, latex=True))
    elif args.format == "csv":
        print("power,numerator,denominator")
        for i, c in enumerate(poly.coeffs):
            print(f"{i},{c.numerator},{c.denominator}")
    else:
        print(render_plain(poly))
        print(f"degree: {poly.degree}")
        print(f"leading coefficient: {poly.leading_coefficient()}")
        print(f"factored: {render_factored(poly, max_shift)}")
    return EXIT_OK


def parse_range(text: str) -> tuple[int, int]:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected <a>..<b>, got {text!r}") from None
    if lo < 0 or hi < lo:
        raise argparse.ArgumentTypeError("need 0 <= a <= b")
    return lo, hi


def cmd_table(args) -> int:
    lo, hi = args.n_range
    t0 = time.perf_counter()
    values = rssyt.count_rssyt_range(args.k, args.beta, hi)
    doc = TableDocument(args.k, args.beta, "dp", [{"n": n, "value": str(values[n])} for n in range(lo, hi + 1)])
    doc.elapsed_ms = _ms(time.perf_counter() - t0)
    sys.stdout.write(doc.to_json() if args.format == "json" else doc.to_csv())
    return EXIT_OK


def cmd_verify(args) -> int:
    report = verify_suite(args.level)
    if args.format == "json":
        print(json.dumps(report.to_dict(), indent=2))
    else:
        print(report.render_text())
    return EXIT_OK if report.passed else EXIT_FAILURE


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be a positive integer")
    return v


def _nonneg(text: str) -> int:
    v = int(text)
    if v < 0:
        raise argparse.ArgumentTypeError("must be a nonnegative integer")
    return v


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="mom", description="Exact moments of moments of CUE characteristic polynomials.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("value", help="exact MoM_N(k, beta) for one N")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--beta", type=_positive, required=True)
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--method", choices=METHODS, default="dp")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--no-cache", action="store_true", help="do not read or write the value cache")
    p.set_defaults(func=cmd_value)

    p = sub.add_parser("poly", help="the full polynomial in N")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--beta", type=_positive, required=True)
    p.add_argument("--format", choices=("text", "json", "latex", "csv"), default="text")
    p.add_argument("--guard", type=_nonneg, default=2)
    p.set_defaults(func=cmd_poly)

    p = sub.add_parser("table", help="values over a range of N")
    p.add_argument("--k", type=_positive, required=True)
    p.add_argument("--beta", type=_positive, required=True)
    p.add_argument("--n-range", type=parse_range, required=True, metavar="A..B")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run a verification tier")
    p.add_argument("--level", choices=LEVELS, default="fast")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"mom: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except CacheMismatch as exc:
        print(f"mom: cache corruption: {exc}", file=sys.stderr)
        return EXIT_CACHE_MISMATCH
    except (SizeError, DegreeLawError) as exc:
        print(f"mom: {exc}", file=sys.stderr)
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())
