"""Classification and measurement: periods, mutations, edge classes, scaling."""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass, field
from math import gcd
from pathlib import Path
from typing import Sequence

import numpy as np

from .cyclotomic import ExactNumber
from .geometry import (
    GENDER_HALF,
    LEFT,
    ExactPoint,
    PolygonSpec,
    TileRecord,
    edge_chain,
    gen_scale,
    gen_star,
    gender_dual,
    half,
    ideal_generations,
    polygon_vertices,
    regular_polygon,
    star_point,
    sub_tile,
)
from .maps import OuterBilliardsSystem, SingularityError
from .symbolic import detect_period
from .web import WebCloud, _float_vertices, tau_labels

# ---------------------------------------------------------------------------
# periods and mutations


@dataclass(frozen=True)
class PeriodRow:
    k: int
    period: int
    mutated: bool
    open_edges: int = 0


@dataclass
class PeriodTable:
    N: int
    rows: list[PeriodRow]

    def periods(self) -> list[int]:
        return [r.period for r in self.rows]

    def flags(self) -> list[bool]:
        return [r.mutated for r in self.rows]

    def to_csv(self, path: str | Path | None = None) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["N", "k", "period", "mutated", "open_edges"])
        for r in self.rows:
            w.writerow([self.N, r.k, r.period, "Y" if r.mutated else "N", r.open_edges])
        if path is not None:
            Path(path).write_text(buf.getvalue(), encoding="utf-8")
        return buf.getvalue()


def _labels(sys: OuterBilliardsSystem, p: tuple[float, float], n: int) -> np.ndarray:
    vx, vy = _float_vertices(sys)
    sgn = 1.0 if sys.orientation == "left" else -1.0
    return tau_labels(vx, vy, float(p[0]), float(p[1]), n, sgn, 1e-13)


def open_edges(sys: OuterBilliardsSystem, tile: PolygonSpec, period: int, offsets=(1e-6, 1e-5)) -> list[int]:
    """Edges of an ideal tile that are not part of the web.

    A point just across an edge that follows the center's itinerary for 2p
    steps returns to itself, so it lies in the same periodic tile and the
    edge is not a web line.
    """
    steps = 2 * period
    ref = _labels(sys, tile.center.as_floats(), steps)
    if (ref == 0).any():
        raise SingularityError("tile center is singular")
    c = np.array(tile.center.as_floats())
    h = float(tile.apothem)
    V = [np.array(v.as_floats()) for v in polygon_vertices(tile)]
    out = []
    for j in range(tile.n):
        mid = (V[j] + V[(j + 1) % tile.n]) / 2
        nrm = (mid - c) / np.linalg.norm(mid - c)
        if all(np.array_equal(_labels(sys, mid + d * h * nrm, steps), ref) for d in offsets):
            out.append(j)
    return out


def period_table(N: int, empirical: bool = True) -> PeriodTable:
    """Center periods of S[<N/2>] (= D) .. S[1] with web-based mutation flags."""
    if N < 5:
        raise ValueError("period tables need N >= 5")
    P = regular_polygon(N, radius=1)
    sys = OuterBilliardsSystem(P)
    rows = []
    for k in range(half(N), 0, -1):
        T = sub_tile(P, k, LEFT)
        res = detect_period(sys, T.center)
        if not res:
            raise RuntimeError(f"period search failed for S[{k}] of N={N}")
        gaps = open_edges(sys, T, res.period) if empirical else []
        rows.append(PeriodRow(k, res.period, bool(gaps), len(gaps)))
    return PeriodTable(N, rows)


def _rotation(m: int, i: int, ctx):
    from .cyclotomic import trig_exact

    return trig_exact("cos", 2 * i, m, ctx), trig_exact("sin", 2 * i, m, ctx)


def mutated_tile(N: int, k: int, mode: str = "period", P: PolygonSpec | None = None) -> TileRecord:
    """Explicit vertices of a mutated S[k].

    period mode: with tile period p, take m = p (p even) or 2p (p odd)
    rotations about cS[k] of the left star[1] and of the right star[j],
    j = n/m - 1, and interleave them.  The weave is equilateral because the
    angle between a star[j] image and the next star[1] image is (j+1) pi/n.
    gender mode: the N/2-gon with the same center and apothem.
    """
    P = P or regular_polygon(N, radius=1)
    T = sub_tile(P, k, LEFT)
    if mode == "gender":
        if N % 4 != 2 or k % 2 == 0:
            raise ValueError(f"S[{k}] of N={N} has no gender mutation")
        G = gender_dual(T)
        return TileRecord("S", k, GENDER_HALF, G, polygon_vertices(G), f"gender-mutated S[{k}] of N={N}")
    if mode != "period":
        raise ValueError(f"unknown mutation mode {mode!r}")
    g = gcd(k, N)
    if g == 1:
        raise ValueError(f"S[{k}] of N={N} has full period; no period mutation")
    p = N // g
    m = p if p % 2 == 0 else 2 * p
    n = T.n
    if n % m or n // m - 1 < 2:
        raise ValueError(f"S[{k}] of N={N} is not mutated by its period {p}")
    j = n // m - 1
    ctx = P.ctx
    c = T.center
    a = star_point(T, 1, LEFT)
    b = star_point(T, j, "right")
    verts = []
    for i in range(m):
        cs, sn = _rotation(m, i, ctx)
        verts.append(a.rotate(cs, sn, c))
        verts.append(b.rotate(cs, sn, c))
    return TileRecord("S", k, f"{2 * m}-gon", T, verts, f"period-mutated S[{k}] of N={N} (m={m}, star[{j}])")


def predicted_period_mutation(N: int, k: int) -> bool:
    try:
        mutated_tile(N, k, "period")
        return True
    except ValueError:
        return False


# ---------------------------------------------------------------------------
# edge classes


@dataclass
class EdgeClass:
    N: int
    residue: str
    survivors: list[int]
    flags: dict[str, bool] = field(default_factory=dict)

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)


_EVEN_FAMILIES = {0: "8k", 2: "8k+2", 4: "8k+4", 6: "8k+6"}
_ODD_FAMILIES = {1: "8k+1", 3: "8k+3", 5: "8k+5", 7: "8k+7"}

# small-N exceptions quoted in the tables ("No if > 8", "No if > 12", "No if > 14")
_SMALL_N_EXTRA = {8: [3, 1], 12: [2, 1], 14: [2]}


def edge_class(N: int) -> EdgeClass:
    """Surviving DS[k] on the edges of N by the Rule of 4 (even) or 8 (odd).

    Counting starts at the DS index of S[1] and steps down.  A DS[3] in the
    chain brings its cluster (the DS[2] and DS[1] it generates) with it.
    """
    if N < 8:
        raise ValueError("edge classes need N >= 8")
    if N % 2 == 0:
        start, step = N // 2 - 2, 4
        residue = _EVEN_FAMILIES[N % 8]
    else:
        start, step = N - 4, 8
        residue = _ODD_FAMILIES[N % 8]
    chain = list(range(start, 0, -step))
    surv = set(chain)
    if 3 in surv:
        surv.update({2, 1} if N % 2 == 0 else {1})
    surv.update(_SMALL_N_EXTRA.get(N, []))
    out = sorted(surv, reverse=True)
    flags = {f"DS[{i}]": i in surv for i in ((3, 2, 1) if N % 2 == 0 else (3, 1))}
    flags["S[1]"] = True
    return EdgeClass(N, residue, out, flags)


# ---------------------------------------------------------------------------
# temporal and geometric scaling


@dataclass
class ScalingReport:
    geometric: ExactNumber | None
    geometric_value: float
    temporal: float
    dimension: float


def temporal_scaling_n10(generations: int) -> dict:
    """Decagon/pentagon counts d_n = 3d + 2p, p_n = 6d + 2p from (1, 1)."""
    if generations < 2:
        raise ValueError("need at least two generations")
    d, p = [1], [1]
    for _ in range(generations - 1):
        d.append(3 * d[-1] + 2 * p[-1])
        p.append(6 * d[-2] + 2 * p[-1])
    for n in range(2, generations):
        if d[n] != 5 * d[n - 1] + 6 * d[n - 2]:
            raise AssertionError("collapsed recurrence fails")
    ratios = [d[n] / d[n - 1] for n in range(1, generations)]
    return {"d": d, "p": p, "ratios": ratios}


def similarity_dimension(temporal: float, geometric) -> float:
    g = float(geometric)
    if not 0 < g < 1:
        raise ValueError("geometric scale must lie in (0, 1)")
    if temporal <= 1:
        raise ValueError("temporal scale must exceed 1")
    return math.log(temporal) / math.log(1 / g)


def scaling_report(temporal: float, N: int) -> ScalingReport:
    g = gen_scale(N)
    dim = similarity_dimension(temporal, g)
    if not 0 < dim < 2:
        raise ValueError("dimension outside (0, 2)")
    return ScalingReport(g, float(g), float(temporal), dim)


# ---------------------------------------------------------------------------
# conjecture probes (reports only)


def _ratios(vals: Sequence[int | None]) -> list[float | None]:
    return [None if a is None or b is None else b / a for a, b in zip(vals, vals[1:])]


def _period_or_none(sys, p: ExactPoint, max_n: int):
    try:
        res = detect_period(sys, p, max_n)
    except SingularityError as exc:
        return None, f"singular: {exc}"
    return (res.period, "ok") if res else (None, "exhausted")


def conjecture_probe_4k1(N: int, depth: int = 2, max_n: int = 10**7) -> dict:
    """Periods of cM[k], cD[k] along the GenStar chain and successive ratios."""
    P = regular_polygon(N, radius=1)
    sys = OuterBilliardsSystem(P)
    gens = ideal_generations(P, depth)
    report = {"N": N, "M": [], "D": [], "status": []}
    for Mt, Dt in gens:
        pm, sm = _period_or_none(sys, Mt.center, max_n)
        pd, sd = _period_or_none(sys, Dt.center, max_n)
        report["M"].append(pm)
        report["D"].append(pd)
        report["status"].append((sm, sd))
    report["M_ratios"] = _ratios(report["M"])
    report["D_ratios"] = _ratios(report["D"])
    report["limit_hint"] = N + 1
    return report


def edge_chain_periods(N: int, depth: int, k: int = 2, max_n: int = 10**7) -> list[int | None]:
    """Periods of the D[k] tiles on the left edge of N (S[k] of N, then its right S[k], ...)."""
    P = regular_polygon(N, radius=1)
    sys = OuterBilliardsSystem(P)
    return [_period_or_none(sys, t.center, max_n)[0] for t in edge_chain(P, depth, k)]


def n12_m_periods(depth: int, max_n: int = 10**8) -> dict:
    """N = 12: periods of cM[k] = (1 - x^k) GenStar and of their mirror images about cS[4].

    hN = 1 at the origin, x = GenScale[12].  The combined periods are the sums.
    """
    P = regular_polygon(12)
    sys = OuterBilliardsSystem(P)
    x = gen_scale(12, P.ctx)
    G = gen_star(P, LEFT)
    axis = sub_tile(P, 4, LEFT).center.x
    single, mirror = [], []
    xk = P.ctx.one()
    for _ in range(depth):
        xk = xk * x
        c = G * (P.ctx.one() - xk)
        r = ExactPoint(axis * 2 - c.x, c.y)
        single.append(_period_or_none(sys, c, max_n)[0])
        mirror.append(_period_or_none(sys, r, max_n)[0])
    combined = [None if a is None or b is None else a + b for a, b in zip(single, mirror)]
    return {"single": single, "mirror": mirror, "combined": combined, "ratios": _ratios(combined)}


# ---------------------------------------------------------------------------
# census


def tile_census(cloud: WebCloud, templates: Sequence[TileRecord], tolerance: float = 0.02, fit: float = 0.9) -> dict:
    """Count empty regions of the cloud matching each template tile.

    Candidate centers are maxima of the distance to the cloud whose value is
    close to the template apothem; a candidate counts when at least ``fit`` of
    the template boundary samples lie within tolerance * apothem of the cloud.
    """
    from scipy.spatial import cKDTree

    out = {}
    P = cloud.points
    if len(P) == 0:
        return {i: 0 for i in range(len(templates))}
    tree = cKDTree(P)
    lo, hi = P.min(axis=0), P.max(axis=0)
    for i, t in enumerate(templates):
        h = float(t.apothem)
        verts = np.array([v.as_floats() for v in (t.vertices or polygon_vertices(t.polygon))])
        rel = verts - np.array(t.center.as_floats())
        step = h / 4
        xs = np.arange(lo[0], hi[0] + step, step)
        ys = np.arange(lo[1], hi[1] + step, step)
        G = np.stack(np.meshgrid(xs, ys), -1).reshape(-1, 2)
        dist, _ = tree.query(G)
        cand = G[np.abs(dist - h) < 0.5 * h]
        found: list[np.ndarray] = []
        for c in cand:
            c = _refine_center(tree, c, h)
            if c is None or any(np.hypot(*(c - f)) < h / 2 for f in found):
                continue
            if _boundary_fit(tree, c, rel, tolerance * h) >= fit:
                found.append(c)
        out[i] = len(found)
    return out


def _refine_center(tree, c: np.ndarray, h: float, iters: int = 30) -> np.ndarray | None:
    """Hill-climb the distance-to-cloud function from c."""
    step = h / 4
    d0 = tree.query(c)[0]
    for _ in range(iters):
        best, bd = c, d0
        for dx, dy in ((1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (-1, -1), (1, -1), (-1, 1)):
            q = c + step * np.array([dx, dy])
            d = tree.query(q)[0]
            if d > bd:
                best, bd = q, d
        if best is c:
            step /= 2
            if step < h * 1e-4:
                break
        c, d0 = best, bd
    return c if abs(d0 - h) < 0.2 * h else None


def _boundary_fit(tree, c: np.ndarray, rel: np.ndarray, tol: float, per_edge: int = 8) -> float:
    pts = []
    n = len(rel)
    for j in range(n):
        a, b = rel[j], rel[(j + 1) % n]
        for s in range(per_edge):
            t = (s + 0.5) / per_edge
            pts.append(c + a + t * (b - a))
    d, _ = tree.query(np.array(pts))
    return float(np.mean(d < tol))
