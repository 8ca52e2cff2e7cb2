#!/usr/bin/env python3
"""Write a small gallery of SVGs: First Families, an overlay, a segment web and the Sx neighborhood."""
import argparse
from pathlib import Path

from artifact.derivations import sx_neighborhood_web
from artifact.geometry import first_family, regular_polygon, revised_sub_tile
from artifact.maps import OuterBilliardsSystem
from artifact.render import Style, render_cloud, render_svg, write_svg
from artifact.web import segment_web


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--outdir", default="out/gallery")
    ap.add_argument("--sx-depth", type=int, default=80000)
    args = ap.parse_args()
    out = Path(args.outdir)
    out.mkdir(parents=True, exist_ok=True)

    for n in (7, 9, 12, 14, 22):
        write_svg(render_svg(first_family(regular_polygon(n))), out / f"family_{n}.svg")
    P = regular_polygon(22)
    write_svg(render_svg(first_family(P), overlays=[first_family(revised_sub_tile(P, 9, "left"))]),
              out / "family_22_s9.svg")

    P7 = regular_polygon(7, radius=1)
    write_svg(render_svg(segment_web(OuterBilliardsSystem(P7), 10), polygon=P7), out / "segments_7.svg")

    w = sx_neighborhood_web(args.sx_depth)
    write_svg(render_cloud(w.cloud, Style(point_size=1.5)), out / "sx_neighborhood.svg")
    print(f"wrote {len(list(out.glob('*.svg')))} files to {out}; Sx edge coverage {w.mean_coverage:.2f}")


if __name__ == "__main__":
    main()
