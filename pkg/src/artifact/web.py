"""Web (singularity set) generation: float point clouds and exact segment webs.

Clouds iterate sampled seed intervals under one of the three maps with numba
kernels, then snap to a dyadic grid, deduplicate and sort, so the output does not
depend on evaluation order.  Segment webs iterate exact segments under tau,
splitting each one where it crosses a discontinuity ray.
"""

from __future__ import annotations

import math
import struct
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Sequence

import numba
import numpy as np

from .cyclotomic import ExactNumber
from .geometry import ExactPoint, PolygonSpec, TileRecord, half, polygon_vertices, tan_
from .maps import DfSystem, DualCenterSystem, OuterBilliardsSystem, SingularityError, _select_exact

MAP_CODES = {"tau": 0, "df": 1, "dkhoy": 2}
MAP_NAMES = {v: k for k, v in MAP_CODES.items()}
GRID_BITS = 40
PWEB_MAGIC = b"PWEB"
PWEB_VERSION = 1
_HEADER = struct.Struct("<4sHBIIQ")


class ResourceGuardError(RuntimeError):
    """A requested computation exceeds the configured size limits."""


@dataclass(frozen=True)
class SeedInterval:
    """Uniform samples of the segment a -> b, endpoints included."""

    a: tuple[float, float]
    b: tuple[float, float]
    samples: int

    def __post_init__(self):
        if tuple(self.a) == tuple(self.b):
            raise ValueError("seed interval endpoints must differ")
        if self.samples < 1:
            raise ValueError("need at least one sample")

    @classmethod
    def real(cls, lo: float, hi: float, samples: int) -> "SeedInterval":
        return cls((float(lo), 0.0), (float(hi), 0.0), samples)

    def points(self) -> np.ndarray:
        t = np.linspace(0.0, 1.0, self.samples) if self.samples > 1 else np.array([0.5])
        a, b = np.asarray(self.a, float), np.asarray(self.b, float)
        return a[None, :] + t[:, None] * (b - a)[None, :]


@dataclass
class WebCloud:
    kind: str
    N: int
    depth: int
    points: np.ndarray
    crop: tuple[float, float, float, float] | None = None
    provenance: dict = field(default_factory=dict)
    dropped: int = 0

    def __len__(self) -> int:
        return len(self.points)

    def replace(self, points: np.ndarray, **prov) -> "WebCloud":
        p = dict(self.provenance)
        p.update(prov)
        return WebCloud(self.kind, self.N, self.depth, points, self.crop, p, self.dropped)


# ---------------------------------------------------------------------------
# kernels


@numba.njit(cache=True)
def _dkhoy_kernel(x0, y0, depth, c, s, tol, out, lens):
    dropped = 0
    for i in range(x0.shape[0]):
        x, y = x0[i], y0[i]
        out[i, 0, 0] = x
        out[i, 0, 1] = y
        n = 1
        for k in range(depth):
            if y > 0:
                sg = 1.0
            elif y < 0:
                sg = -1.0
            else:
                sg = 0.0
            if k > 0 and abs(y) < tol:
                dropped += 1
                break
            xx = x - sg
            x, y = c * xx + s * y, -s * xx + c * y
            out[i, n, 0] = x
            out[i, n, 1] = y
            n += 1
        lens[i] = n
    return dropped


@numba.njit(cache=True)
def _df_kernel(x0, y0, depth, a, tol, out, lens):
    dropped = 0
    for i in range(x0.shape[0]):
        x, y = x0[i], y0[i]
        out[i, 0, 0] = x
        out[i, 0, 1] = y
        n = 1
        for k in range(depth):
            w = -x + a * y
            if abs(w - 1.0) < tol or abs(w + 1.0) < tol:
                dropped += 1
                break
            if w >= 1.0:
                w -= 2.0
            elif w < -1.0:
                w += 2.0
            x, y = y, w
            out[i, n, 0] = x
            out[i, n, 1] = y
            n += 1
        lens[i] = n
    return dropped


@numba.njit(cache=True)
def _tau_select(vx, vy, px, py, sgn, tol):
    """Vertex index, or -1 (singular) / -2 (inside)."""
    N = vx.shape[0]
    j = 0
    for i in range(1, N):
        if sgn * ((vx[j] - px) * (vy[i] - py) - (vy[j] - py) * (vx[i] - px)) < 0:
            j = i
    djx, djy = vx[j] - px, vy[j] - py
    nj = math.sqrt(djx * djx + djy * djy)
    for i in range(N):
        if i == j:
            continue
        dix, diy = vx[i] - px, vy[i] - py
        cr = sgn * (djx * diy - djy * dix) / (nj * math.sqrt(dix * dix + diy * diy))
        if cr < -tol:
            return -2
        if cr <= tol:
            return -1
    return j


@numba.njit(cache=True)
def _tau_kernel(x0, y0, depth, vx, vy, sgn, tol, out, lens):
    dropped = 0
    for i in range(x0.shape[0]):
        x, y = x0[i], y0[i]
        out[i, 0, 0] = x
        out[i, 0, 1] = y
        n = 1
        for k in range(depth):
            j = _tau_select(vx, vy, x, y, sgn, tol)
            if j < 0:
                dropped += 1
                break
            x, y = 2.0 * vx[j] - x, 2.0 * vy[j] - y
            out[i, n, 0] = x
            out[i, n, 1] = y
            n += 1
        lens[i] = n
    return dropped


@numba.njit(cache=True)
def tau_labels(vx, vy, px, py, n, sgn, tol):
    """1-based vertex labels of a float tau orbit; 0 marks a singular stop."""
    labels = np.zeros(n, dtype=np.int64)
    x, y = px, py
    for k in range(n):
        j = _tau_select(vx, vy, x, y, sgn, tol)
        if j < 0:
            return labels
        labels[k] = j + 1
        x, y = 2.0 * vx[j] - x, 2.0 * vy[j] - y
    return labels


def _system_kind(sys) -> str:
    return sys.kind


def _float_vertices(sys: OuterBilliardsSystem):
    V = np.array(sys.float_vertices(), dtype=float)
    return V[:, 0].copy(), V[:, 1].copy()


def web_points(
    sys,
    seeds: Sequence[SeedInterval],
    depth: int,
    grid_bits: int = GRID_BITS,
    tol: float = 1e-12,
    max_points: int = 60_000_000,
) -> WebCloud:
    """Union of the orbits of all seed samples, snapped, deduplicated and sorted."""
    if depth < 0:
        raise ValueError("depth must be non-negative")
    if not seeds:
        raise ValueError("need at least one seed interval")
    P0 = np.concatenate([s.points() for s in seeds])
    if len(P0) * (depth + 1) > max_points:
        raise ResourceGuardError(f"{len(P0) * (depth + 1)} raw points exceed the limit {max_points}")
    x0, y0 = P0[:, 0].copy(), P0[:, 1].copy()
    out = np.empty((len(P0), depth + 1, 2))
    lens = np.zeros(len(P0), dtype=np.int64)
    kind = _system_kind(sys)
    if kind == "dkhoy":
        w = 2 * math.pi / sys.N
        dropped = _dkhoy_kernel(x0, y0, depth, math.cos(w), math.sin(w), tol, out, lens)
    elif kind == "df":
        dropped = _df_kernel(x0, y0, depth, 2 * math.cos(2 * math.pi / sys.N), tol, out, lens)
    elif kind == "tau":
        vx, vy = _float_vertices(sys)
        sgn = 1.0 if sys.orientation == "left" else -1.0
        dropped = _tau_kernel(x0, y0, depth, vx, vy, sgn, tol, out, lens)
    else:
        raise TypeError(f"unsupported map {kind!r}")
    mask = np.arange(depth + 1)[None, :] < lens[:, None]
    pts = dedup(out[mask], grid_bits)
    prov = {
        "seeds": [(s.a, s.b, s.samples) for s in seeds],
        "raw": int(mask.sum()),
        "grid_bits": grid_bits,
        "precision": "float64",
    }
    return WebCloud(kind, sys.N, depth, pts, None, prov, int(dropped))


def dedup(points: np.ndarray, grid_bits: int = GRID_BITS) -> np.ndarray:
    """Snap to the 2^-grid_bits lattice, drop repeats, sort lexicographically."""
    if len(points) == 0:
        return np.zeros((0, 2))
    scale = float(2**grid_bits)
    keys = np.round(np.asarray(points, float) * scale).astype(np.int64)
    keys = np.unique(keys, axis=0)
    return keys / scale


# ---------------------------------------------------------------------------
# symmetry and cropping


def _reflect_line(P: np.ndarray, origin, angle: float) -> np.ndarray:
    d = np.array([math.cos(angle), math.sin(angle)])
    Q = P - np.asarray(origin, float)[None, :]
    proj = Q @ d
    return 2 * proj[:, None] * d[None, :] - Q + np.asarray(origin, float)[None, :]


def symmetry_images(kind: str, N: int, P: np.ndarray, polygon: PolygonSpec | None = None) -> list[np.ndarray]:
    """Images of P under the frame's negation and mirror symmetries.

    dkhoy: z -> -z and the mirror in the common vertex axis of N and -N.
    df: (x, y) -> (-x, -y) and the swap (x, y) -> (y, x).
    tau: the mirror in the vertical axis of the polygon, plus the point
    reflection in its center when N is even (odd polygons lack it).
    """
    if kind == "dkhoy":
        return [-P, _reflect_line(P, (0.0, 0.0), math.pi / 2 - math.pi / N)]
    if kind == "df":
        return [-P, P[:, ::-1].copy()]
    if kind == "tau":
        if polygon is None:
            raise ValueError("tau clouds need the polygon for symmetry")
        cx, cy = float(polygon.center.x), float(polygon.center.y)
        mir = np.column_stack([2 * cx - P[:, 0], P[:, 1]])
        if N % 2 == 0:
            return [np.column_stack([2 * cx - P[:, 0], 2 * cy - P[:, 1]]), mir]
        return [mir]
    raise ValueError(f"unknown map kind {kind!r}")


def augment_symmetry(cloud: WebCloud, polygon: PolygonSpec | None = None) -> WebCloud:
    """Union of the cloud with each of its symmetry images (one application, not the group closure)."""
    P = cloud.points
    if len(P) == 0:
        return cloud.replace(P, augmented=True)
    parts = [P] + symmetry_images(cloud.kind, cloud.N, P, polygon)
    g = cloud.provenance.get("grid_bits", GRID_BITS)
    return cloud.replace(dedup(np.concatenate(parts), g), augmented=True)


def crop(cloud: WebCloud, rect: tuple[float, float, float, float]) -> WebCloud:
    """Keep points strictly inside (xmin, xmax, ymin, ymax)."""
    xmin, xmax, ymin, ymax = rect
    P = cloud.points
    m = (P[:, 0] > xmin) & (P[:, 0] < xmax) & (P[:, 1] > ymin) & (P[:, 1] < ymax)
    out = cloud.replace(P[m], crop=list(rect))
    out.crop = tuple(rect)
    return out


def fold_to_window(P: np.ndarray, polygon: PolygonSpec, center, half_width: float) -> np.ndarray:
    """Carry points into a square window by the symmetries of tau for a regular polygon.

    Rotations by 2 pi/N about the polygon center commute with tau and the mirror
    in its vertical axis conjugates tau to its inverse, so both preserve the web.
    Each point (and its mirror) is rotated by the one multiple of 2 pi/N that
    brings it nearest the window, then kept if it lands inside.
    """
    N = polygon.n
    ox, oy = float(polygon.center.x), float(polygon.center.y)
    wx, wy = float(center[0]) - ox, float(center[1]) - oy
    rw, tw = math.hypot(wx, wy), math.atan2(wy, wx)
    step = 2 * math.pi / N
    Q = np.asarray(P, float).reshape(-1, 2) - [ox, oy]
    Q = Q[np.abs(np.hypot(Q[:, 0], Q[:, 1]) - rw) < 1.5 * half_width]
    out = []
    for R in (Q, Q * [-1.0, 1.0]):
        a = np.round((tw - np.arctan2(R[:, 1], R[:, 0])) / step) * step
        ca, sa = np.cos(a), np.sin(a)
        out.append(np.column_stack([ca * R[:, 0] - sa * R[:, 1], sa * R[:, 0] + ca * R[:, 1]]))
    F = np.concatenate(out)
    keep = (np.abs(F[:, 0] - wx) < half_width) & (np.abs(F[:, 1] - wy) < half_width)
    return F[keep] + [ox, oy]


def windowed_tau_web(
    sys: OuterBilliardsSystem,
    seeds: np.ndarray,
    depth: int,
    center,
    half_width: float,
    batch: int = 100,
    grid_bits: int = GRID_BITS,
) -> WebCloud:
    """Tau web of many point seeds, folded into a small window batch by batch.

    Memory stays at one batch of orbits, so deep local webs fit where a full
    cloud would not.
    """
    seeds = np.asarray(seeds, float).reshape(-1, 2)
    if len(seeds) == 0:
        raise ValueError("need at least one seed")
    vx, vy = _float_vertices(sys)
    sgn = 1.0 if sys.orientation == "left" else -1.0
    parts, raw, dropped = [], 0, 0
    for i in range(0, len(seeds), batch):
        S = seeds[i : i + batch]
        out = np.empty((len(S), depth + 1, 2))
        lens = np.zeros(len(S), dtype=np.int64)
        dropped += _tau_kernel(S[:, 0].copy(), S[:, 1].copy(), depth, vx, vy, sgn, 1e-12, out, lens)
        mask = np.arange(depth + 1)[None, :] < lens[:, None]
        raw += int(mask.sum())
        parts.append(fold_to_window(out[mask], sys.polygon, center, half_width))
    pts = dedup(np.concatenate(parts), grid_bits)
    cx, cy = float(center[0]), float(center[1])
    rect = (cx - half_width, cx + half_width, cy - half_width, cy + half_width)
    prov = {"seeds": len(seeds), "raw": raw, "grid_bits": grid_bits, "folded": True}
    return WebCloud("tau", sys.N, depth, pts, rect, prov, int(dropped))


def default_crop(kind: str, N: int, polygon: PolygonSpec | None = None) -> tuple[float, float, float, float]:
    """Default region of interest for each frame.

    dkhoy (side 1, base edge [0, 1]): the left half of the upper polygon's
    half-plane, which is a fundamental region for N even.  tau: for N even the
    left half of the band from the left D to the vertical axis; for N odd the
    span from the left D to the right D.
    """
    big = 1e6
    if kind == "dkhoy":
        return (-big, 0.5, 0.0, big)
    if kind == "tau":
        if polygon is None:
            raise ValueError("tau crop needs the polygon")
        cx, cy, h = float(polygon.center.x), float(polygon.center.y), float(polygon.apothem)
        reach = h * math.tan(half(N) * math.pi / N) * 1.05
        top = cy + h * (1 + 2 * math.tan(math.pi / N))
        right = cx if N % 2 == 0 else cx + reach
        return (cx - reach, right, cy - h - reach, top)
    return (-1.0, 1.0, -1.0, 1.0)


# ---------------------------------------------------------------------------
# files


def write_cloud(cloud: WebCloud, path: str | Path) -> None:
    """Little-endian: magic, version, map code, N, depth, count, then doubles."""
    pts = np.ascontiguousarray(cloud.points, dtype="<f8")
    head = _HEADER.pack(PWEB_MAGIC, PWEB_VERSION, MAP_CODES[cloud.kind], cloud.N, cloud.depth, len(pts))
    with open(path, "wb") as fh:
        fh.write(head)
        fh.write(pts.tobytes())


def read_cloud(path: str | Path) -> WebCloud:
    data = Path(path).read_bytes()
    magic, version, code, N, depth, count = _HEADER.unpack_from(data, 0)
    if magic != PWEB_MAGIC:
        raise ValueError("not a PWEB file")
    if version != PWEB_VERSION:
        raise ValueError(f"unsupported PWEB version {version}")
    body = np.frombuffer(data, dtype="<f8", offset=_HEADER.size)
    if len(body) != 2 * count:
        raise ValueError("truncated PWEB file")
    return WebCloud(MAP_NAMES[code], N, depth, body.reshape(count, 2).copy())


def cloud_to_csv(cloud: WebCloud, path: str | Path) -> None:
    np.savetxt(path, cloud.points, delimiter=",", header="x,y", comments="", fmt="%.17g")


# ---------------------------------------------------------------------------
# exact segment webs


@dataclass(frozen=True)
class WebSegment:
    a: ExactPoint
    b: ExactPoint
    source: int  # index of the originating edge of N
    iteration: int

    def floats(self) -> tuple[float, float, float, float]:
        return (*self.a.as_floats(), *self.b.as_floats())


@dataclass
class SegmentWeb:
    level: int
    segments: list[WebSegment]
    N: int = 0

    def __len__(self) -> int:
        return len(self.segments)

    def array(self) -> np.ndarray:
        return np.array([s.floats() for s in self.segments], dtype=float).reshape(-1, 4)


def _cross(ax, ay, bx, by):
    return ax * by - ay * bx


def _rays(sys: OuterBilliardsSystem):
    """The 2N discontinuity rays (origin vertex, direction), exact and float."""
    V = sys.exact_vertices
    N = sys.N
    out = []
    for j in range(N):
        a, b = V[j], V[(j + 1) % N]
        out.append((b, b - a, (j + 1) % N))
        out.append((a, a - b, j))
    return out


def _segment_key(a: ExactPoint, b: ExactPoint) -> tuple:
    fa, fb = a.as_floats(), b.as_floats()
    pa = (round(fa[0], 10), round(fa[1], 10))
    pb = (round(fb[0], 10), round(fb[1], 10))
    return (pa, pb) if pa <= pb else (pb, pa)


def _split(seg_a: ExactPoint, seg_b: ExactPoint, rays, rays_f) -> list[ExactPoint]:
    """seg_a, interior crossing points with the rays in order, seg_b."""
    ax, ay = seg_a.as_floats()
    bx, by = seg_b.as_floats()
    dx, dy = bx - ax, by - ay
    ts: list[tuple[float, ExactNumber | None]] = []
    d = seg_b - seg_a
    for (v, r, _), (vx, vy, rx, ry) in zip(rays, rays_f):
        den_f = _cross(dx, dy, rx, ry)
        scale = math.hypot(dx, dy) * math.hypot(rx, ry)
        if abs(den_f) <= 1e-12 * scale:
            continue  # parallel or collinear: no proper crossing
        t_f = _cross(vx - ax, vy - ay, rx, ry) / den_f
        s_f = _cross(vx - ax, vy - ay, dx, dy) / den_f
        if t_f < -1e-9 or t_f > 1 + 1e-9 or s_f < -1e-9:
            continue
        den = _cross(d.x, d.y, r.x, r.y)
        w = v - seg_a
        tn = _cross(w.x, w.y, r.x, r.y)
        sn = _cross(w.x, w.y, d.x, d.y)
        sd = den.sign()
        if (sn.sign() * sd) <= 0:
            continue  # crosses at or behind the ray origin (the vertex itself is a cut only if inside)
        st = tn.sign() * sd
        if st <= 0:
            continue
        if (tn - den).sign() * sd >= 0:
            continue
        ts.append((t_f, tn / den))
    ts.sort(key=lambda x: x[0])
    pts = [seg_a]
    for _, t in ts:
        p = seg_a + d * t
        if not (p.x == pts[-1].x and p.y == pts[-1].y):
            pts.append(p)
    if not (seg_b.x == pts[-1].x and seg_b.y == pts[-1].y):
        pts.append(seg_b)
    return pts


def _branch(sys: OuterBilliardsSystem, a: ExactPoint, b: ExactPoint) -> int | None:
    """Vertex used on the open piece a-b; None when it lies inside N."""
    m = (a + b) * sys.polygon.ctx.rational(Fraction(1, 2))
    try:
        return _select_exact(sys, m)
    except SingularityError:
        pass
    # the piece runs along a discontinuity ray: use the side away from N
    C = sys.polygon.center
    d = b - a
    mx, my = m.as_floats()
    nx, ny = -float(d.y), float(d.x)
    if (mx - float(C.x)) * nx + (my - float(C.y)) * ny < 0:
        nx, ny = -nx, -ny
    vx, vy = _float_vertices(sys)
    sgn = 1.0 if sys.orientation == "left" else -1.0
    ln = math.hypot(nx, ny)
    j = _tau_select(vx, vy, mx + 1e-7 * nx / ln, my + 1e-7 * ny / ln, sgn, 1e-12)
    return None if j < 0 else int(j)


def initial_segments(sys: OuterBilliardsSystem, reach: str = "genstar") -> list[WebSegment]:
    """The extended edges of N outside N, cut at the GenStar points.

    These are the parts of the maximal star polygon's edges lying outside N.
    """
    P = sys.polygon
    ctx, n = P.ctx, P.n
    V = sys.exact_vertices
    L = P.apothem * tan_(half(n), n, ctx) - P.side / 2  # vertex to GenStar along an edge
    segs = []
    for j in range(n):
        a, b = V[j], V[(j + 1) % n]
        u = (b - a) * P.side.inverse()
        segs.append(WebSegment(b, b + u * L, j, 0))
        segs.append(WebSegment(a, a - u * L, j, 0))
    return segs


def segment_web(
    sys: OuterBilliardsSystem,
    level: int,
    initial: Sequence[WebSegment] | None = None,
    max_segments: int = 200_000,
) -> SegmentWeb:
    """Forward images of the initial segments for 0..level steps, split exactly."""
    if level < 0:
        raise ValueError("level must be non-negative")
    rays = _rays(sys)
    rays_f = [(*v.as_floats(), *r.as_floats()) for v, r, _ in rays]
    current = list(initial_segments(sys) if initial is None else initial)
    seen = {_segment_key(s.a, s.b) for s in current}
    out = list(current)
    for it in range(1, level + 1):
        nxt = []
        for s in current:
            pts = _split(s.a, s.b, rays, rays_f)
            for a, b in zip(pts, pts[1:]):
                j = _branch(sys, a, b)
                if j is None:
                    continue
                v = sys.exact_vertices[j]
                na, nb = v * 2 - a, v * 2 - b
                key = _segment_key(na, nb)
                if key in seen:
                    continue
                seen.add(key)
                nxt.append(WebSegment(na, nb, s.source, it))
        out.extend(nxt)
        if len(out) > max_segments:
            raise ResourceGuardError(f"segment web exceeds {max_segments} segments at level {it}")
        current = nxt
        if not current:
            break
    return SegmentWeb(level, out, sys.N)


def _on_web(web_arr: np.ndarray, p: tuple[float, float], tol: float = 1e-9) -> bool:
    ax, ay, bx, by = web_arr.T
    dx, dy = bx - ax, by - ay
    L2 = dx * dx + dy * dy
    t = ((p[0] - ax) * dx + (p[1] - ay) * dy) / np.where(L2 > 0, L2, 1)
    cx, cy = ax + np.clip(t, 0, 1) * dx, ay + np.clip(t, 0, 1) * dy
    return bool(np.any(np.hypot(cx - p[0], cy - p[1]) < tol))


def edge_coverage(web: SegmentWeb, polygon: PolygonSpec, samples: int = 5, tol: float = 1e-9) -> list[float]:
    """Fraction of sample points on each edge of polygon that lie on the web."""
    arr = web.array()
    V = polygon_vertices(polygon)
    out = []
    for j in range(polygon.n):
        a, b = V[j].as_floats(), V[(j + 1) % polygon.n].as_floats()
        hits = 0
        for i in range(1, samples + 1):
            t = i / (samples + 1)
            if _on_web(arr, (a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])), tol):
                hits += 1
        out.append(hits / samples)
    return out


def local_web(sys: OuterBilliardsSystem, tile: TileRecord, side: str = "left", level: int = 1) -> SegmentWeb:
    """Web grown only from the base-edge interval of a tile on the extended edge of N.

    side='left' iterates under tau; side='right' under tau inverse, which is
    the counter-clockwise web seen from the D side.
    """
    base = _base_edge(tile.polygon)
    seed = [WebSegment(base[0], base[1], 0, 0)]
    s = sys if side == "left" else sys.inverse()
    return segment_web(s, level, seed)


def _base_edge(P: PolygonSpec) -> tuple[ExactPoint, ExactPoint]:
    V = polygon_vertices(P)
    # vertex 0 is the right end of the base edge; the last vertex is its left end
    return V[-1], V[0]


def first_stage_skip(sys: OuterBilliardsSystem, tile: TileRecord, side: str = "left") -> list[int]:
    """Edge indices of the tile hit by its local web on the first pass around N.

    Each image of the base edge is carried back to the tile by the rotation of
    N that returns the image tile to the original position; the index of the
    tile edge it then lies on is recorded.
    """
    P = tile.polygon
    n = P.n
    cx, cy = float(sys.polygon.center.x), float(sys.polygon.center.y)
    tx, ty = float(P.center.x), float(P.center.y)
    a, b = (q.as_floats() for q in _base_edge(P))
    pts = np.array([a, b])
    vx, vy = _float_vertices(sys)
    sgn = 1.0 if side == "left" else -1.0
    hits = []
    N = sys.N
    ctr = np.array([tx, ty])
    for _ in range(2 * N):
        m = pts.mean(axis=0)
        # move the piece slightly into the tile's side so the branch is well defined
        probe = m + 1e-9 * (ctr - m)
        j = _tau_select(vx, vy, probe[0], probe[1], sgn, 1e-13)
        if j < 0:
            break
        v = np.array([vx[j], vy[j]])
        pts = 2 * v[None, :] - pts
        ctr = 2 * v - ctr
        ang = math.atan2(ctr[1] - cy, ctr[0] - cx) - math.atan2(ty - cy, tx - cx)
        rot = np.array([[math.cos(-ang), -math.sin(-ang)], [math.sin(-ang), math.cos(-ang)]])
        back = (pts - [cx, cy]) @ rot.T + [cx, cy]
        if np.hypot(*(rot @ (ctr - [cx, cy]) + [cx, cy] - [tx, ty])) > 1e-7:
            continue  # not a rotated copy of the tile position
        mid = back.mean(axis=0)
        e_ang = math.atan2(mid[1] - ty, mid[0] - tx)
        idx = int(round((e_ang + math.pi / 2) / (2 * math.pi / n))) % n
        if abs(np.hypot(*(mid - [tx, ty])) - float(P.apothem)) > 1e-6 * float(P.apothem):
            continue
        hits.append(idx)
        if idx == 0 and len(hits) > 1:
            break
    return hits


def edge_skip(sys: OuterBilliardsSystem, tile: TileRecord, side: str = "left") -> int:
    """Blank edges of the ideal tile between consecutive first-stage web edges.

    The ideal tile of N is an N-gon (N even) or a 2N-gon (N odd); a gender
    dual with half as many edges counts each of its edges twice.
    """
    hits = first_stage_skip(sys, tile, side)
    if len(hits) < 2:
        raise ValueError("local web did not return to the tile")
    n = tile.polygon.n
    ideal = sys.N if sys.N % 2 == 0 else 2 * sys.N
    advance = (hits[1] - hits[0]) % n
    return advance * (ideal // n) - 1
