#!/usr/bin/env python3
"""Derive Mx of N=11 by three independent routes and the Sx tile by two-star solving."""
import argparse
import time

from artifact.derivations import MX_TARGET, mx_triple, sx_tile


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--digits", type=int, default=40)
    args = ap.parse_args()
    t = time.perf_counter()
    for name, d in mx_triple(args.digits).items():
        mark = "ok" if d.polynomial == MX_TARGET else "MISMATCH"
        print(f"{name:6s} {d.steps:4d} steps  hMx/hN = {d.value:.15f}  = {d.polynomial}  [{mark}]")
    r = sx_tile()
    print(f"Sx     hSx/hN = {float(r.ratio):.15f} = {r.polynomial}")
    print(f"       center x = {float(r.midpoint_x):.12f}, left star point in the family: {r.p1_in_family}")
    print(f"({time.perf_counter() - t:.1f}s at {args.digits} digits)")


if __name__ == "__main__":
    main()
