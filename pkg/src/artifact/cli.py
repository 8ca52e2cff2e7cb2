"""Command-line entry point: ``artifact <command> [options]``.

Exit codes: 0 ok, 1 verification failure, 2 usage error, 3 resource guard.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from math import gcd
from pathlib import Path

import mpmath

from .config import DIGITS_ENV, RunConfig, default_digits, parse_crop, parse_interval

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_GUARD = 0, 1, 2, 3


class UsageError(ValueError):
    pass


def _emit(doc, out: str | None = None) -> None:
    text = json.dumps(doc, indent=1, sort_keys=True, default=str) + "\n"
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _nstr(x, digits: int) -> str:
    from .cyclotomic import ExactNumber, embed_numeric

    if isinstance(x, ExactNumber):
        x = embed_numeric(x, digits).real
    return mpmath.nstr(x, digits)


def _polygon(n: int, frame: str):
    from .config import polygon_in_frame

    return polygon_in_frame(n, frame)


# ---------------------------------------------------------------------------
# commands


def cmd_family(a) -> int:
    from .geometry import first_family, revised_sub_tile
    from .render import Style, render_family, write_svg

    if a.n < 3:
        raise UsageError("N must be at least 3")
    P = _polygon(a.n, a.frame)
    fam = first_family(P)
    text = fam.to_json(a.digits)
    if a.json:
        Path(a.json).write_text(text + "\n")
    else:
        sys.stdout.write(text + "\n")
    if a.svg:
        overlays = []
        if a.overlay_sub:
            overlays.append(first_family(revised_sub_tile(P, a.overlay_sub, "left")))
        write_svg(render_family(fam, Style(), overlays=overlays), a.svg)
    return EXIT_OK


def cmd_scales(a) -> int:
    from .cyclotomic import express_in_generator, integrality
    from .geometry import gen_scale, scale_of

    g = gen_scale(a.n)
    rows = []
    for k in range(1, (a.n + 1) // 2):
        if 2 * k == a.n:
            continue
        s = scale_of(a.n, k, ctx=g.ctx)
        rows.append(
            {
                "k": k,
                "scale": _nstr(s, a.digits),
                "coscale": _nstr(s.inverse(), a.digits),
                "primitive": gcd(k, a.n) == 1,
                "class": integrality(s),
                "in_genscale": str(express_in_generator(s, g)) if a.poly else None,
            }
        )
    _emit({"N": a.n, "precision_digits": a.digits, "genscale": _nstr(g, a.digits), "scales": rows}, a.out)
    return EXIT_OK


def cmd_minpoly(a) -> int:
    from .cyclotomic import integrality, minimal_polynomial
    from .geometry import gen_scale, scale_of

    if a.kind == "genscale":
        x = gen_scale(a.n)
    else:
        if a.k is None:
            raise UsageError("--k is required for scale and coscale")
        x = scale_of(a.n, a.k, a.kind)
    mp = minimal_polynomial(x)
    _emit(
        {
            "N": a.n,
            "k": a.k,
            "kind": a.kind,
            "precision_digits": a.digits,
            "value": _nstr(x, a.digits),
            "minimal_polynomial": str(mp),
            "degree": mp.degree,
            "class": integrality(x),
        },
        a.out,
    )
    return EXIT_OK


def cmd_orbit(a) -> int:
    from .maps import DfSystem, DualCenterSystem, OuterBilliardsSystem, SingularityError
    from .symbolic import record_itinerary, write_itinerary

    with mpmath.workdps(a.digits + 10):
        x, y = mpmath.mpf(a.x), mpmath.mpf(a.y)
        if a.map == "tau":
            sysm = OuterBilliardsSystem(_polygon(a.n, a.frame), digits=a.digits)
            seed = (x, y)
        elif a.map == "df":
            sysm = DfSystem(a.n, digits=a.digits)
            seed = (x, y)
        else:
            sysm = DualCenterSystem(a.n, digits=a.digits)
            seed = mpmath.mpc(x, y)
        try:
            seq = record_itinerary(sysm, seed, a.steps)
        except SingularityError as exc:
            _emit({"status": "singular", "detail": str(exc)})
            return EXIT_FAIL
    if a.out:
        write_itinerary(seq, a.out)
    _emit({"N": a.n, "map": a.map, "precision_digits": a.digits, "steps": len(seq), "labels": list(seq.labels)})
    return EXIT_OK


def cmd_period(a) -> int:
    from .analysis import period_table
    from .geometry import first_family
    from .maps import OuterBilliardsSystem, SingularityError
    from .symbolic import detect_period

    if a.table:
        sys.stdout.write(period_table(a.n).to_csv(a.out))
        return EXIT_OK
    P = _polygon(a.n, a.frame)
    fam = first_family(P)
    try:
        tile = fam.get(a.tile, a.k, a.side if a.tile in ("S", "D", "DS") else None)
    except KeyError as exc:
        raise UsageError(str(exc)) from None
    try:
        res = detect_period(OuterBilliardsSystem(P), tile.center, a.max_n)
    except SingularityError as exc:
        _emit({"status": "singular", "detail": str(exc)})
        return EXIT_FAIL
    _emit({"N": a.n, "tile": f"{a.tile}[{tile.k}]", "period": res.period, "status": res.status, "steps": res.steps_used})
    return EXIT_OK if res else EXIT_FAIL


def _run_web(cfg: RunConfig):
    from .config import run_web

    return run_web(cfg)


def cmd_web(a) -> int:
    from .render import Style, render_cloud, render_segments, write_svg
    from .web import write_cloud, cloud_to_csv

    if a.config:
        cfg = RunConfig.load(a.config)
    else:
        cfg = RunConfig(
            n=a.n, map=a.map, depth=a.depth, samples=a.samples, digits=a.digits, interval=a.interval,
            crop=a.crop, augment=not a.no_augment, segments=a.segments, level=a.level,
            point_size=a.point_size, out=a.out or "", svg=a.svg or "", csv=a.csv or "",
        )
    if a.emit_config:
        cfg.save(a.emit_config)
    t0 = time.perf_counter()
    result, P = _run_web(cfg)
    elapsed = time.perf_counter() - t0
    style = Style(point_size=cfg.point_size)
    if cfg.segments:
        report = {"segments": len(result), "level": cfg.level}
        if cfg.svg:
            write_svg(render_segments(result, style, polygon=P), cfg.svg)
        if cfg.csv:
            import numpy as np

            np.savetxt(cfg.csv, result.array(), delimiter=",", header="ax,ay,bx,by", comments="", fmt="%.17g")
    else:
        report = {"points": len(result), "dropped": result.dropped, "crop": list(result.crop or ())}
        if cfg.out:
            write_cloud(result, cfg.out)
        if cfg.csv:
            cloud_to_csv(result, cfg.csv)
        if cfg.svg:
            write_svg(render_cloud(result, style), cfg.svg)
    report.update({"N": cfg.n, "map": cfg.map, "precision_digits": cfg.digits, "seconds": round(elapsed, 3)})
    _emit(report)
    return EXIT_OK


def cmd_classify(a) -> int:
    from .analysis import edge_class, period_table

    doc = json.loads(edge_class(a.n).to_json()) if a.n >= 8 else {"N": a.n}
    if a.mutations:
        t = period_table(a.n)
        doc["periods"] = {f"S[{r.k}]": r.period for r in t.rows}
        doc["mutated"] = {f"S[{r.k}]": r.mutated for r in t.rows}
    _emit(doc, a.out)
    return EXIT_OK


def cmd_census(a) -> int:
    from .analysis import tile_census
    from .geometry import first_family
    from .web import read_cloud

    cloud = read_cloud(a.cloud)
    P = _polygon(cloud.N, "side" if cloud.kind == "dkhoy" else a.frame)
    fam = first_family(P)
    templates, names = [], []
    for spec in a.tiles.split(","):
        kind, _, k = spec.strip().partition(":")
        try:
            templates.append(fam.get(kind, int(k) if k else None))
        except (KeyError, ValueError) as exc:
            raise UsageError(f"bad tile spec {spec!r}: {exc}") from None
        names.append(spec.strip())
    counts = tile_census(cloud, templates, a.tolerance, a.fit)
    lines = ["tile,count"] + [f"{names[i]},{counts[i]}" for i in range(len(names))]
    text = "\n".join(lines) + "\n"
    if a.out:
        Path(a.out).write_text(text)
    sys.stdout.write(text)
    return EXIT_OK


def cmd_probe(a) -> int:
    from .analysis import conjecture_probe_4k1, edge_chain_periods, n12_m_periods, scaling_report, temporal_scaling_n10

    if a.name == "4k1":
        doc = conjecture_probe_4k1(a.n, a.depth, a.max_n)
    elif a.name == "edge-chain":
        vals = edge_chain_periods(a.n, a.depth, max_n=a.max_n)
        doc = {"N": a.n, "periods": vals}
    elif a.name == "n12":
        doc = n12_m_periods(a.depth, a.max_n)
    elif a.name == "scaling":
        t = temporal_scaling_n10(max(a.depth, 2))
        rep = scaling_report(6, 5)  # N = 10 shares the field and GenScale of N = 5
        doc = {**t, "dimension": rep.dimension}
    elif a.name == "sx-web":
        from .derivations import sx_neighborhood_web

        w = sx_neighborhood_web(a.orbit_depth, a.samples)
        doc = {
            "depth": w.depth,
            "points": len(w.cloud),
            "inside_sx": w.inside,
            "edge_coverage": w.edge_coverage,
            "mean_coverage": w.mean_coverage,
            "window": list(w.cloud.crop),
        }
        if a.svg:
            from .render import Style, render_cloud, write_svg

            write_svg(render_cloud(w.cloud, Style(point_size=1.5)), a.svg)
    else:
        raise UsageError(f"unknown probe {a.name!r}")
    doc["note"] = "report only; reduced-depth stand-in" if a.name == "sx-web" else "report only; the underlying statements are conjectural"
    _emit(doc, a.out)
    return EXIT_OK


def cmd_verify(a) -> int:
    from . import verify as V

    suites = {
        "scaling": lambda: V.verify_scaling(a.n_max),
        "fields": V.verify_fields,
        "periods": lambda: V.verify_periods(a.n),
        "dimensions": V.verify_dimensions,
        "mx": lambda: V.verify_mx(a.digits),
        "sx": V.verify_sx,
        "edges": V.verify_edges,
    }
    if a.suite not in suites:
        raise UsageError(f"unknown suite {a.suite!r}; choose from {sorted(suites)}")
    t0 = time.perf_counter()
    rep = suites[a.suite]()
    rep["seconds"] = round(time.perf_counter() - t0, 3)
    rep["precision_digits"] = a.digits
    _emit(rep, a.out)
    return EXIT_OK if rep["ok"] else EXIT_FAIL


def cmd_render(a) -> int:
    from .render import Style, render_cloud, render_family, write_svg
    from .web import read_cloud

    style = Style(point_size=a.point_size, width=a.width)
    if a.cloud:
        text = render_cloud(read_cloud(a.cloud), style)
    elif a.family:
        from .geometry import first_family

        text = render_family(first_family(_polygon(a.family, a.frame)), style)
    else:
        raise UsageError("render needs --cloud or --family")
    write_svg(text, a.svg)
    return EXIT_OK


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="artifact", description="Dynamics of regular polygons under piecewise isometries.")
    p.add_argument("--digits", type=int, default=None, help=f"working precision (default ${DIGITS_ENV} or 40)")
    sub = p.add_subparsers(dest="command", required=True)

    def add(name, fn, help_):
        sp = sub.add_parser(name, help=help_)
        sp.set_defaults(func=fn)
        return sp

    sp = add("family", cmd_family, "First Family of N as JSON, optional SVG")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--frame", choices=("radius", "apothem", "side"), default="apothem")
    sp.add_argument("--json")
    sp.add_argument("--svg")
    sp.add_argument("--overlay-sub", type=int, default=0, help="overlay the family of the (revised) left S[k]")

    sp = add("scales", cmd_scales, "scale[k] and coscale[k] of N")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--poly", action="store_true", help="also express each scale in the GenScale basis")
    sp.add_argument("--out")

    sp = add("minpoly", cmd_minpoly, "minimal polynomial and integrality class")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--k", type=int)
    sp.add_argument("--kind", choices=("scale", "coscale", "genscale"), default="scale")
    sp.add_argument("--out")

    sp = add("orbit", cmd_orbit, "numeric itinerary of a seed")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--map", choices=("tau", "df", "dkhoy"), default="tau")
    sp.add_argument("--frame", choices=("radius", "apothem", "side"), default="radius")
    sp.add_argument("--x", required=True)
    sp.add_argument("--y", required=True)
    sp.add_argument("--steps", type=int, default=100)
    sp.add_argument("--out", help="write the itinerary file")

    sp = add("period", cmd_period, "tau period of a family tile center")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--tile", default="S", choices=("S", "D", "DS", "M", "M_gen", "D_gen"))
    sp.add_argument("--k", type=int)
    sp.add_argument("--side", choices=("left", "right"), default="left")
    sp.add_argument("--frame", choices=("radius", "apothem"), default="radius")
    sp.add_argument("--max-n", type=int, default=10**7)
    sp.add_argument("--table", action="store_true", help="full S[k] period and mutation table as CSV")
    sp.add_argument("--out")

    sp = add("web", cmd_web, "point cloud or exact segment web")
    d = RunConfig()
    sp.add_argument("--n", type=int, default=d.n)
    sp.add_argument("--map", choices=("tau", "df", "dkhoy"), default=d.map)
    sp.add_argument("--depth", type=int, default=d.depth)
    sp.add_argument("--samples", type=int, default=d.samples)
    sp.add_argument("--interval", default=d.interval, help="seed interval a:b")
    sp.add_argument("--crop", default=d.crop, help="xmin,xmax,ymin,ymax or 'default'")
    sp.add_argument("--no-augment", action="store_true")
    sp.add_argument("--segments", action="store_true", help="exact tau segment web")
    sp.add_argument("--level", type=int, default=d.level)
    sp.add_argument("--point-size", type=float, default=d.point_size)
    sp.add_argument("--out", help="PWEB cloud file")
    sp.add_argument("--svg")
    sp.add_argument("--csv")
    sp.add_argument("--config", help="run from a key=value config file")
    sp.add_argument("--emit-config", help="write the effective config here")

    sp = add("classify", cmd_classify, "edge class, optionally with period mutations")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--mutations", action="store_true")
    sp.add_argument("--out")

    sp = add("census", cmd_census, "count family tiles in a cloud")
    sp.add_argument("--cloud", required=True)
    sp.add_argument("--tiles", default="D,M", help="comma list of kind[:k]")
    sp.add_argument("--frame", choices=("radius", "apothem", "side"), default="radius")
    sp.add_argument("--tolerance", type=float, default=0.02)
    sp.add_argument("--fit", type=float, default=0.9)
    sp.add_argument("--out")

    sp = add("probe", cmd_probe, "conjecture probes (reports only)")
    sp.add_argument("name", choices=("4k1", "edge-chain", "n12", "scaling", "sx-web"))
    sp.add_argument("--n", type=int, default=13)
    sp.add_argument("--depth", type=int, default=2)
    sp.add_argument("--max-n", type=int, default=10**7)
    sp.add_argument("--orbit-depth", type=int, default=40000, help="sx-web orbit length")
    sp.add_argument("--samples", type=int, default=400, help="sx-web seed count")
    sp.add_argument("--svg")
    sp.add_argument("--out")

    sp = add("verify", cmd_verify, "run an invariant suite")
    sp.add_argument("suite")
    sp.add_argument("--n", type=int, default=24)
    sp.add_argument("--n-max", type=int, default=24)
    sp.add_argument("--out")

    sp = add("render", cmd_render, "SVG of a cloud file or a family")
    sp.add_argument("--cloud")
    sp.add_argument("--family", type=int)
    sp.add_argument("--frame", choices=("radius", "apothem", "side"), default="apothem")
    sp.add_argument("--svg", required=True)
    sp.add_argument("--point-size", type=float, default=1.0)
    sp.add_argument("--width", type=int, default=1000)
    return p


def _join_dash_values(argv: list[str]) -> list[str]:
    """Let '--interval -2:-1' through: argparse would read -2:-1 as an option."""
    out, i = [], 0
    while i < len(argv):
        if argv[i] in ("--interval", "--crop") and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{argv[i]}={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    from .web import ResourceGuardError

    parser = build_parser()
    argv = _join_dash_values(list(sys.argv[1:] if argv is None else argv))
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0) and EXIT_USAGE
    try:
        a.digits = a.digits or default_digits()
        return a.func(a)
    except ResourceGuardError as exc:
        sys.stderr.write(f"resource guard: {exc}\n")
        return EXIT_GUARD
    except (UsageError, ValueError, FileNotFoundError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
