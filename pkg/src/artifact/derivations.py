"""Worked derivations for N = 11: the Mx tile three ways, and the Sx tile.

Each Mx route harvests an itinerary from a numeric surrogate orbit near a
singular seed, replays it exactly, intersects the resulting web line with the
edge of N and reads off the height of Mx as an element of S_11.  The routes use
different maps and different frames, so agreement is a real cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import mpmath

from .cyclotomic import ExactNumber, RationalPolynomial, embed_numeric, express_in_generator, trig_exact
from .geometry import LEFT, RIGHT, ExactPoint, PolygonSpec, gen_scale, regular_polygon, revised_sub_tile, star_point, sub_tile
from .maps import DfSystem, DualCenterSystem, OuterBilliardsSystem, df_rectify, df_unrectify
from .symbolic import record_itinerary, replay_exact, surrogate_seed

N11 = 11
MX_TARGET = RationalPolynomial((Fraction(1), Fraction(-23), Fraction(-27, 2), Fraction(0), Fraction(1, 2)))


@dataclass
class Derivation:
    """Outcome of one route: the height ratio and its polynomial in GenScale."""

    route: str
    ratio: ExactNumber
    polynomial: RationalPolynomial
    steps: int
    hit: tuple = ()
    meta: dict = field(default_factory=dict)

    @property
    def value(self) -> float:
        return float(self.ratio)


def _tan(k: int, d: int, ctx):
    return trig_exact("tan", k, d, ctx)


def _abs(x: ExactNumber) -> ExactNumber:
    return -x if x.sign() < 0 else x


def _tau_frame():
    """N = 11 with radius 1 at the origin; D is the left S[5], D1 its right DS[2]."""
    P = regular_polygon(N11, radius=1)
    D = sub_tile(P, 5, LEFT)
    D1 = revised_sub_tile(D, 2, RIGHT)
    return P, D, D1


def _direction(digits: int):
    with mpmath.workdps(digits + 10):
        t = mpmath.pi / N11
        return (mpmath.cos(t), mpmath.sin(t))


def mx_via_tau(digits: int = 40, steps: int = 142) -> Derivation:
    """Route (a): outer billiards surrogate orbit from the right star[3] of D1."""
    P, _, D1 = _tau_frame()
    ctx, hN = P.ctx, P.apothem
    seed = star_point(D1, 3, RIGHT)
    sys = OuterBilliardsSystem(P, digits=digits)
    start = surrogate_seed(seed, _direction(digits), "1e-9", digits)
    seq = record_itinerary(sys, start, steps)
    p = replay_exact(sys, seed, seq)[-1]
    # the web line through p has slope tan(3 pi/11) and meets the base edge at a star[4] of Mx
    xs = p.x - (p.y + hN) / _tan(3, N11, ctx)
    x5 = star_point(D1, 1, LEFT).x  # GenStar of Mx
    h = _abs(xs - x5) / (_tan(5, N11, ctx) + _tan(4, N11, ctx))
    ratio = h / hN
    return Derivation("tau", ratio, express_in_generator(ratio, gen_scale(N11, ctx)), steps, p.as_floats())


def _df_embedding(ctx):
    """The 11-gon sits in the 22-gon (apothem 1) as its left S[9]."""
    h9 = _tan(1, 22, ctx) / _tan(1, 11, ctx)
    c9 = ExactPoint(-(_tan(9, 22, ctx) + _tan(1, 22, ctx)), h9 - 1)
    scale = h9 / trig_exact("cos", 1, 11, ctx)
    return c9, scale, h9


def mx_via_df(digits: int = 40, steps: int = 135) -> Derivation:
    """Route (b): the filter map of N = 22 with rectification to the plane."""
    P, _, D1 = _tau_frame()
    ctx = P.ctx
    c9, sc, h9 = _df_embedding(ctx)

    def emb(q: ExactPoint) -> ExactPoint:
        return c9 + q * sc

    D1S3 = sub_tile(D1, 3, RIGHT)  # the ideal 22-gon, not its dual
    seed_plane = emb(star_point(D1S3, 9, LEFT))
    sys = DfSystem(22, digits=digits)
    d = _direction(digits)
    with mpmath.workdps(digits + 10):
        eps = mpmath.mpf("1e-9")
        u = seed_plane.numeric(digits)
        start = df_unrectify(sys, (u[0] + eps * d[0], u[1] + eps * d[1]))
    seq = record_itinerary(sys, start, steps)
    exact_start = df_unrectify(sys, (seed_plane.x, seed_plane.y))
    end = replay_exact(sys, exact_start, seq)[-1]
    ux, uy = df_rectify(sys, end)
    # line of slope tan(8 pi/11) to the base y = -1; same-side star pair (5, 4)
    xs = ux - (uy + 1) / _tan(8, N11, ctx)
    x5 = emb(star_point(D1, 1, LEFT)).x
    h = _abs(xs - x5) / (_tan(5, N11, ctx) - _tan(4, N11, ctx))
    ratio = h / h9
    return Derivation(
        "df", ratio, express_in_generator(ratio, gen_scale(N11, ctx)), steps, (float(ux), float(uy))
    )


DKHOY_SIGN_PREFIX = (0, 1, 1, 1, 1, 1, 1, -1, -1, -1, -1, -1, -1, 1)


def _dkhoy_coord(x: ExactNumber, sN: ExactNumber) -> ExactNumber:
    return (x + sN / 2) / sN


def mx_via_dkhoy(digits: int = 40, steps: int = 563) -> Derivation:
    """Route (c): the dual-center map in the side-1 frame, seeded on the real axis."""
    P, _, D1 = _tau_frame()
    ctx = P.ctx
    sN = P.side
    p0 = _dkhoy_coord(star_point(D1, 3, LEFT).x, sN)
    sys = DualCenterSystem(N11, digits=digits)
    seq = record_itinerary(sys, embed_numeric(p0, digits), steps)
    q = replay_exact(sys, p0, seq)[-1]
    px = -q
    re, im = px.real(), px.imag()
    s2 = re - im / (-_tan(4, N11, ctx))
    star5 = _dkhoy_coord(star_point(D1, 1, LEFT).x, sN)
    h = _abs(star5 - s2) / (_tan(2, N11, ctx) + _tan(5, N11, ctx))
    hN = ctx.one() / (_tan(1, N11, ctx) * 2)  # apothem of a side-1 11-gon
    ratio = h / hN
    return Derivation(
        "dkhoy",
        ratio,
        express_in_generator(ratio, gen_scale(N11, ctx)),
        steps,
        (float(re), float(im)),
        {"sign_prefix": seq.labels[: len(DKHOY_SIGN_PREFIX)], "px": px},
    )


def mx_triple(digits: int = 40) -> dict[str, Derivation]:
    return {d.route: d for d in (mx_via_tau(digits), mx_via_df(digits), mx_via_dkhoy(digits))}


# ---------------------------------------------------------------------------
# Sx: a tiny tile on the edge of N = 11 bounded by two star points


@dataclass
class SxReport:
    p1: ExactNumber
    p2: ExactNumber
    h: ExactNumber
    ratio: ExactNumber
    polynomial: RationalPolynomial
    midpoint_x: ExactNumber
    family_p1: ExactNumber | None = None
    base_y: ExactNumber | None = None

    @property
    def polygon(self) -> PolygonSpec:
        """Sx itself: the 11-gon resting on the base line with p1, p2 as its star points."""
        return PolygonSpec(N11, ExactPoint(self.midpoint_x, self.base_y + self.h), self.h)

    @property
    def p1_in_family(self) -> bool:
        """p1 is the left star[4] of the second-generation DS[5]."""
        return self.family_p1 is not None and self.family_p1 == self.p1


def _sx_points(ctx):
    """The two star points of Sx on the base edge of N (apothem cos(pi/11))."""
    t = lambda k, d: _tan(k, d, ctx)  # noqa: E731
    s = lambda k, d: trig_exact("sin", k, d, ctx)  # noqa: E731
    c = lambda k, d: trig_exact("cos", k, d, ctx)  # noqa: E731
    cot = lambda k, d: t(k, d).inverse()  # noqa: E731
    p1 = (
        -c(1, 11) * cot(1, 22)
        + s(1, 11) * 2
        - s(1, 11) * t(1, 11) * t(5, 22)
        - cot(3, 22) * s(1, 11) * t(1, 22) * t(1, 11) * t(5, 22)
    )
    z = ctx.zeta(1)
    zp = lambda e: z ** e  # noqa: E731
    num = (
        -ctx.i() * 5 + zp(1) * 8 - zp(3) * 15 - zp(5) * 5 + zp(7) * 5
        + zp(13) * 5 + zp(15) * 15 - zp(17) * 8 + zp(19) * 3 + zp(21) * 3
    )
    den = (ctx.one() + zp(8)) * (zp(10) - 1) * (c(1, 11) - s(5, 22)) * 4
    p2 = -(num / den)
    return p1, p2


def sx_tile() -> SxReport:
    P = regular_polygon(N11, radius=1)
    ctx = P.ctx
    if ctx.M != 44:
        raise ValueError("Sx needs zeta_44")
    p1, p2 = _sx_points(ctx)
    h = (p2 - p1) / (_tan(4, N11, ctx) + _tan(3, N11, ctx))
    ratio = h / P.apothem
    poly = express_in_generator(ratio, gen_scale(N11, ctx))
    _, _, D1 = _tau_frame()
    fp1 = star_point(revised_sub_tile(D1, 5, LEFT), 4, LEFT).x
    return SxReport(p1, p2, h, ratio, poly, p2 - h * _tan(3, N11, ctx), fp1, -P.apothem)


@dataclass
class SxWebReport:
    """A reduced-depth local web around Sx and how closely it hugs each edge."""

    cloud: object
    depth: int
    inside: int
    edge_coverage: list

    @property
    def mean_coverage(self) -> float:
        return sum(self.edge_coverage) / len(self.edge_coverage)


def _edge_coverage(pts, V, band: float, bins: int) -> list[float]:
    import numpy as np

    out = []
    for j in range(len(V)):
        a, b = np.asarray(V[j]), np.asarray(V[(j + 1) % len(V)])
        e = b - a
        L = float(np.hypot(*e))
        u = e / L
        outward = np.array([u[1], -u[0]])  # vertices run counterclockwise
        rel = pts - a
        t, s = rel @ u / L, rel @ outward
        sel = (t >= 0) & (t <= 1) & (s > -1e-12) & (s < band)
        out.append(len(np.unique(np.floor(t[sel] * bins).clip(0, bins - 1))) / bins)
    return out


def sx_neighborhood_web(depth: int = 20000, samples: int = 400, span: float = 30.0, bins: int = 10) -> SxWebReport:
    """Local tau web around Sx from seeds just above the base line.

    Seeds sample the base line over span apothems of Sx on either side and
    orbits are folded into a window of three apothems by the rotations and
    mirror of N.  The report counts points inside Sx (which must stay empty)
    and, per edge, the share of bins holding a point within 0.1 apothem
    outside it.  Both numbers are meaningful at any depth; coverage grows as
    the boundary fills in.
    """
    import numpy as np

    from .geometry import numeric_vertices
    from .web import windowed_tau_web

    r = sx_tile()
    S = r.polygon
    n, cx, cy, h = S.numeric()
    base = float(r.base_y)
    xs = np.linspace(cx - span * h, cx + span * h, samples)
    xs = xs[np.abs(xs - cx) > h * float(_tan(1, N11, S.ctx)) * 1.001]  # seeds above Sx's own base would start inside it
    seeds = np.column_stack([xs, np.full_like(xs, base + 1e-10)])
    sys = OuterBilliardsSystem(regular_polygon(N11, radius=1))
    cloud = windowed_tau_web(sys, seeds, depth, (cx, cy), 3 * h)
    V = numeric_vertices(S)
    pts = cloud.points
    d = pts - [cx, cy]
    inside = np.ones(len(pts), bool)
    for j in range(n):
        m = (np.asarray(V[j]) + np.asarray(V[(j + 1) % n])) / 2 - [cx, cy]
        inside &= d @ (m / np.hypot(*m)) < h * (1 - 1e-9)
    return SxWebReport(cloud, depth, int(inside.sum()), _edge_coverage(pts, V, 0.1 * h, bins))
