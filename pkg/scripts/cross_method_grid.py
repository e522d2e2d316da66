"""Compare the ratio-sum constant term with the tableau count on a (k, beta, N) grid."""

from __future__ import annotations

import argparse
import time

from cuemom.cfkrs import ct_extract
from cuemom.exact import SizeError
from cuemom.rssyt import count_rssyt


def main() -> None:
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--max-k", type=int, default=3)
    parser.add_argument("--max-beta", type=int, default=2)
    parser.add_argument("--max-n", type=int, default=3)
    args = parser.parse_args()

    print(f"{'k':>2} {'beta':>4} {'N':>2} {'count':>14} {'ct':>14} {'ok':>3} {'ct time':>8}")
    for k in range(1, args.max_k + 1):
        for beta in range(1, args.max_beta + 1):
            for n in range(args.max_n + 1):
                count = count_rssyt(k, beta, n)
                t0 = time.perf_counter()
                try:
                    ct = ct_extract(k, beta, n)
                except SizeError:
                    print(f"{k:>2} {beta:>4} {n:>2} {count:>14} {'(budget)':>14}")
                    continue
                dt = time.perf_counter() - t0
                print(f"{k:>2} {beta:>4} {n:>2} {count:>14} {ct:>14} {'yes' if ct == count else 'NO':>3} {dt:>7.2f}s")


if __name__ == "__main__":
    main()
