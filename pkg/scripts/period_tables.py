#!/usr/bin/env python3
"""Print the period tables and sequences: N=24 first family, N=12 M chain,
N=16 edge chain and the N=13 GenStar chain.

``--deep`` adds the next terms, which take minutes rather than seconds.
"""
import argparse
import sys
import time

from artifact.analysis import conjecture_probe_4k1, edge_chain_periods, n12_m_periods, period_table


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--deep", action="store_true", help="one more generation everywhere")
    ap.add_argument("--csv", help="also write the N=24 table here")
    args = ap.parse_args()
    extra = 1 if args.deep else 0

    t = period_table(24)
    print("N=24  k      :", [r.k for r in t.rows])
    print("      period :", t.periods())
    print("      mutated:", ["Y" if f else "N" for f in t.flags()])
    if args.csv:
        t.to_csv(args.csv)

    t0 = time.perf_counter()
    n12 = n12_m_periods(3 + extra, max_n=10**9)
    print("N=12  M single:", n12["single"], "mirror:", n12["mirror"], "combined:", n12["combined"])
    print("N=16  D edge chain:", edge_chain_periods(16, 4 + extra, max_n=10**9))
    p13 = conjecture_probe_4k1(13, 2 + extra, max_n=10**9)
    print("N=13  D:", p13["D"], "ratios:", p13["D_ratios"], " M:", p13["M"])
    print(f"({time.perf_counter() - t0:.1f}s)", file=sys.stderr)


if __name__ == "__main__":
    main()
