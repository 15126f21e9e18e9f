#!/usr/bin/env python3
"""Tabulate intersection sizes of distinct longest-path pairs by order.

For each order n in the requested range, sweep all connected graphs and
print the distribution of ell = |V(P) & V(Q)| over pairs of distinct
longest-path vertex sets, plus which ell values (if any) admit a
non-separating intersection.  At n <= 10 the last column stays empty;
the 11-vertex witness is the first graph where it does not.

    python3 scripts/ell_statistics.py --n-max 8
"""
from __future__ import annotations

import argparse
import sys

from longpath import (
    build_witness,
    enumerate_connected,
    longest_path_profile,
    min_ell_statistics,
)


def sweep_order(n: int) -> tuple[dict[int, int], set[int]]:
    hist: dict[int, int] = {}
    violating: set[int] = set()
    for g in enumerate_connected(n):
        profile = longest_path_profile(g)
        if len(profile.sets) < 2:
            continue
        stats = min_ell_statistics(g, profile)
        for ell, count in stats.pair_counts.items():
            hist[ell] = hist.get(ell, 0) + count
        violating |= stats.violating_ells
    return hist, violating


def main() -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--n-max", type=int, default=8)
    parser.add_argument("--witness", action="store_true",
                        help="also profile the builtin 11-vertex witness")
    args = parser.parse_args()

    print(f"{'n':>3}  {'ell histogram':<50} violating ell values")
    for n in range(2, args.n_max + 1):
        hist, violating = sweep_order(n)
        h = " ".join(f"{k}:{v}" for k, v in sorted(hist.items())) or "-"
        print(f"{n:>3}  {h:<50} {sorted(violating) or '-'}")
    if args.witness:
        g = build_witness()
        stats = min_ell_statistics(g, longest_path_profile(g))
        h = " ".join(f"{k}:{v}" for k, v in sorted(stats.pair_counts.items()))
        print(f"{'11w':>3}  {h:<50} {sorted(stats.violating_ells)}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
