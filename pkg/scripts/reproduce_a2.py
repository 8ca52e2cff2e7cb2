#!/usr/bin/env python3
"""Rebuild the N=14 dual-center web (1000 seeds on [-2, -1], depth 5000).

Writes the cloud, its run config and an SVG into --outdir, then prints the
point count and timing.
"""
import argparse
import json
import time
from pathlib import Path

from artifact.config import RunConfig, run_web
from artifact.render import Style, render_cloud, write_svg
from artifact.web import write_cloud


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--outdir", default="out/a2")
    ap.add_argument("--depth", type=int, default=5000)
    ap.add_argument("--samples", type=int, default=1000)
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)
    cfg = RunConfig(n=14, map="dkhoy", depth=args.depth, samples=args.samples,
                    out=str(out / "a2.pweb"), svg=str(out / "a2.svg"))
    cfg.save(out / "a2.cfg")
    t = time.perf_counter()
    cloud, _ = run_web(cfg)
    dt = time.perf_counter() - t
    write_cloud(cloud, cfg.out)
    write_svg(render_cloud(cloud, Style(point_size=0.8)), cfg.svg)
    print(json.dumps({"points": len(cloud), "seconds": round(dt, 2), "crop": list(cloud.crop)}, indent=1))


if __name__ == "__main__":
    main()
