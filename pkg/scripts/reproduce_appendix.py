"""Rebuild the seven tabulated polynomials and print them in LaTeX with timings."""

from __future__ import annotations

import argparse
import time

from cuemom.cli import render_factored
from cuemom.golden import GOLDEN_CASES, golden_polynomial
from cuemom.reconstructor import mom_polynomial


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--skip-large", action="store_true", help="leave out (2,3)")
    args = parser.parse_args()

    for k, beta in GOLDEN_CASES:
        if args.skip_large and (k, beta) == (2, 3):
            continue
        t0 = time.perf_counter()
        poly = mom_polynomial(k, beta)
        dt = time.perf_counter() - t0
        match = poly == golden_polynomial(k, beta).polynomial
        print(f"k={k} beta={beta} degree={poly.degree} match={match} time={dt:.2f}s")
        print("  " + render_factored(poly, 2 * k * beta, latex=True))


if __name__ == "__main__":
    main()
