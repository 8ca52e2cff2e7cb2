"""Static SVG output for families, point clouds and segment webs.

Documents are plain SVG 1.1 with the y axis flipped so that mathematical
coordinates read upward.  Output depends only on the input data: no
timestamps, ids or dictionary-order effects.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .geometry import GENDER_2N, GENDER_HALF, GENDER_N, FamilyRecord, gen_star, numeric_vertices, polygon_vertices
from .web import SegmentWeb, WebCloud

_SVG_HEAD = '<?xml version="1.0" encoding="UTF-8" standalone="no"?>\n'


@dataclass(frozen=True)
class Style:
    width: int = 1000
    margin: float = 0.04
    point_size: float = 1.0
    stroke: float = 1.0
    background: str = "white"
    palette: dict = field(
        default_factory=lambda: {
            "parent": "#000000",
            GENDER_N: "#1f4e9c",
            GENDER_2N: "#b23a1e",
            GENDER_HALF: "#2b8a3e",
            "other": "#7a4fa0",
            "overlay": "#c08a00",
            "chord": "#9a9a9a",
            "genstar": "#d10000",
            "cloud": "#1a1a1a",
            "segments": "#1f4e9c",
        }
    )


def _fmt(v: float) -> str:
    s = f"{v:.9g}"
    return "0" if s == "-0" else s


class _Canvas:
    """Maps a bounding box onto a width x height pixel viewport, y up."""

    def __init__(self, bbox, style: Style):
        xmin, xmax, ymin, ymax = bbox
        w, h = xmax - xmin, ymax - ymin
        if w <= 0 or h <= 0:
            w = h = max(w, h, 1.0)
            xmax, ymax = xmin + w, ymin + h
        pad = style.margin * max(w, h)
        self.x0, self.y1 = xmin - pad, ymax + pad
        self.span = max(w, h) + 2 * pad
        self.sx = style.width / (w + 2 * pad)
        self.height = max(1, int(round((h + 2 * pad) * self.sx)))
        self.width = style.width
        self.unit = 1.0 / self.sx  # one pixel in user units

    def xy(self, x: float, y: float) -> str:
        return f"{_fmt((x - self.x0) * self.sx)},{_fmt((self.y1 - y) * self.sx)}"

    def arrays(self, P: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
        return (P[:, 0] - self.x0) * self.sx, (self.y1 - P[:, 1]) * self.sx


def _document(canvas: _Canvas, body: list[str], style: Style, title: str) -> str:
    out = [
        _SVG_HEAD,
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{canvas.width}" '
        f'height="{canvas.height}" viewBox="0 0 {canvas.width} {canvas.height}">\n',
        f"<title>{title}</title>\n",
        f'<rect x="0" y="0" width="{canvas.width}" height="{canvas.height}" fill="{style.background}"/>\n',
    ]
    out.extend(body)
    out.append("</svg>\n")
    return "".join(out)


def _polygon_elem(canvas: _Canvas, pts, stroke: str, width: float, dash: str | None = None, fill: str = "none") -> str:
    d = " ".join(canvas.xy(x, y) for x, y in pts)
    extra = f' stroke-dasharray="{dash}"' if dash else ""
    return f'<polygon points="{d}" fill="{fill}" stroke="{stroke}" stroke-width="{_fmt(width)}"{extra}/>\n'


def _bbox(points: np.ndarray) -> tuple[float, float, float, float]:
    if len(points) == 0:
        return (-1.0, 1.0, -1.0, 1.0)
    lo, hi = points.min(axis=0), points.max(axis=0)
    return (float(lo[0]), float(hi[0]), float(lo[1]), float(hi[1]))


# ---------------------------------------------------------------------------
# family


def _float_pts(P) -> list[tuple[float, float]]:
    return numeric_vertices(P)


def _star_chords(P) -> list[tuple[tuple[float, float], tuple[float, float]]]:
    """Chords of the star polygon {n/2-ish}: each vertex to its ⟨n/2⟩-th neighbour."""
    V = _float_pts(P)
    n = len(V)
    step = (n - 1) // 2
    return [(V[j], V[(j + step) % n]) for j in range(n)]


def render_family(
    fam: FamilyRecord,
    style: Style = Style(),
    overlays: Sequence[FamilyRecord] = (),
    chords: bool = True,
) -> str:
    """Parent, every family tile by gender, star chords and the GenStar markers."""
    P = fam.parent
    shapes: list[tuple[str, list, str | None]] = []
    for t in fam.tiles:
        color = style.palette.get(t.gender, style.palette["other"])
        dash = "6,3" if t.gender == GENDER_HALF else None
        shapes.append((color, _float_pts(t.polygon), dash))
    for ov in overlays:
        shapes.append((style.palette["overlay"], _float_pts(ov.parent), "2,2"))
        for t in ov.tiles:
            shapes.append((style.palette["overlay"], _float_pts(t.polygon), "2,2"))
    parent_pts = _float_pts(P)
    allpts = np.array(parent_pts + [p for _, pts, _ in shapes for p in pts])
    canvas = _Canvas(_bbox(allpts), style)
    body = ['<g id="chords">\n']
    if chords:
        for a, b in _star_chords(P):
            body.append(
                f'<line x1="{_fmt((a[0] - canvas.x0) * canvas.sx)}" y1="{_fmt((canvas.y1 - a[1]) * canvas.sx)}" '
                f'x2="{_fmt((b[0] - canvas.x0) * canvas.sx)}" y2="{_fmt((canvas.y1 - b[1]) * canvas.sx)}" '
                f'stroke="{style.palette["chord"]}" stroke-width="{_fmt(0.5 * style.stroke)}"/>\n'
            )
    body.append("</g>\n<g id=\"tiles\">\n")
    body.append(_polygon_elem(canvas, parent_pts, style.palette["parent"], 1.5 * style.stroke))
    for color, pts, dash in shapes:
        body.append(_polygon_elem(canvas, pts, color, style.stroke, dash))
    body.append("</g>\n<g id=\"genstar\">\n")
    for side in ("left", "right"):
        g = gen_star(P, side)
        x, y = float(g.x), float(g.y)
        cx, cy = canvas.xy(x, y).split(",")
        body.append(f'<circle cx="{cx}" cy="{cy}" r="{_fmt(3 * style.stroke)}" fill="{style.palette["genstar"]}"/>\n')
    body.append("</g>\n")
    return _document(canvas, body, style, f"First Family of N={P.n}")


# ---------------------------------------------------------------------------
# clouds and segments


def render_cloud(cloud: WebCloud, style: Style = Style(), bbox=None) -> str:
    """All points in one path of zero-length round-capped segments."""
    P = np.asarray(cloud.points, float).reshape(-1, 2)
    if bbox is None:
        bbox = tuple(cloud.crop) if cloud.crop and all(abs(v) < 1e5 for v in cloud.crop) else _bbox(P)
    canvas = _Canvas(bbox, style)
    title = f"{cloud.kind} web of N={cloud.N}, depth {cloud.depth}, {len(P)} points"
    if len(P) == 0:
        return _document(canvas, ['<g id="cloud"/>\n'], style, title)
    X, Y = canvas.arrays(P)
    parts = [f"M{_fmt(x)} {_fmt(y)}h0" for x, y in zip(X.tolist(), Y.tolist())]
    body = [
        f'<g id="cloud"><path d="{"".join(parts)}" fill="none" stroke="{style.palette["cloud"]}" '
        f'stroke-width="{_fmt(style.point_size)}" stroke-linecap="round"/></g>\n'
    ]
    return _document(canvas, body, style, title)


def render_segments(web: SegmentWeb, style: Style = Style(), polygon=None, bbox=None) -> str:
    A = web.array()
    pts = A.reshape(-1, 2) if len(A) else np.zeros((0, 2))
    if polygon is not None:
        pts = np.concatenate([pts, np.array(numeric_vertices(polygon))])
    canvas = _Canvas(bbox or _bbox(pts), style)
    body = []
    if polygon is not None:
        body.append(_polygon_elem(canvas, numeric_vertices(polygon), style.palette["parent"], 1.5 * style.stroke))
    if len(A):
        d = "".join(f"M{canvas.xy(ax, ay)}L{canvas.xy(bx, by)}" for ax, ay, bx, by in A.tolist())
        body.append(
            f'<g id="segments"><path d="{d}" fill="none" stroke="{style.palette["segments"]}" '
            f'stroke-width="{_fmt(0.6 * style.stroke)}"/></g>\n'
        )
    else:
        body.append('<g id="segments"/>\n')
    return _document(canvas, body, style, f"segment web of N={web.N}, level {web.level}")


def render_svg(scene, style: Style = Style(), **kw) -> str:
    """Dispatch on the scene type: FamilyRecord, WebCloud or SegmentWeb."""
    if isinstance(scene, FamilyRecord):
        return render_family(scene, style, **kw)
    if isinstance(scene, WebCloud):
        return render_cloud(scene, style, **kw)
    if isinstance(scene, SegmentWeb):
        return render_segments(scene, style, **kw)
    raise TypeError(f"cannot render {type(scene).__name__}")


def write_svg(text: str, path: str | Path) -> None:
    Path(path).write_text(text, encoding="utf-8")
