"""Leading coefficients of the reconstructed polynomials, next to the k = 1 product formula."""

from __future__ import annotations

import argparse

from cuemom.closed_forms import degree_of, ks_leading_coeff
from cuemom.reconstructor import leading_coefficient


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--cases", default="1,1 2,1 3,1 4,1 1,2 2,2 1,3 2,3",
                        help="space separated k,beta pairs")
    args = parser.parse_args()

    for item in args.cases.split():
        k, beta = map(int, item.split(","))
        lead = leading_coefficient(k, beta)
        extra = f"  product formula {ks_leading_coeff(beta)}" if k == 1 else ""
        print(f"k={k} beta={beta} degree={degree_of(k, beta):>3} lead={lead} (~{float(lead):.3e}){extra}")


if __name__ == "__main__":
    main()
