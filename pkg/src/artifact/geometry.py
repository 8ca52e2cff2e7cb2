"""Regular polygons, star points, scales and First Families in exact coordinates.

Conventions: a polygon has its base edge horizontal at y = c_y - h; vertex j
sits at angle -pi/2 + pi/n + 2 pi j/n.  Star points live on the extended base
edge, at c_x +/- h tan(k pi/n).  ``side`` is -1 (left) or +1 (right).
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

import mpmath

from .cyclotomic import (
    CycloContext,
    ExactNumber,
    context_for_polygon,
    deserialize,
    embed_numeric,
    serialize,
    trig_exact,
)

LEFT, RIGHT = -1, 1


def _side(side) -> int:
    if side in (LEFT, RIGHT):
        return side
    if side in ("left", "l", "L"):
        return LEFT
    if side in ("right", "r", "R"):
        return RIGHT
    raise ValueError(f"side must be left or right, got {side!r}")


def half(n: int) -> int:
    """<n/2>: the largest integer strictly below n/2."""
    return n // 2 - 1 if n % 2 == 0 else (n - 1) // 2


def tan_(k: int, n: int, ctx: CycloContext) -> ExactNumber:
    return trig_exact("tan", k, n, ctx)


# ---------------------------------------------------------------------------
# points and polygons


@dataclass(frozen=True)
class ExactPoint:
    x: ExactNumber
    y: ExactNumber

    @classmethod
    def of(cls, x, y, ctx: CycloContext) -> "ExactPoint":
        return cls(ctx.coerce(x), ctx.coerce(y))

    @property
    def ctx(self) -> CycloContext:
        return self.x.ctx

    def __add__(self, o: "ExactPoint") -> "ExactPoint":
        return ExactPoint(self.x + o.x, self.y + o.y)

    def __sub__(self, o: "ExactPoint") -> "ExactPoint":
        return ExactPoint(self.x - o.x, self.y - o.y)

    def __neg__(self) -> "ExactPoint":
        return ExactPoint(-self.x, -self.y)

    def __mul__(self, s) -> "ExactPoint":
        return ExactPoint(self.x * s, self.y * s)

    __rmul__ = __mul__

    def rotate(self, cos_a: ExactNumber, sin_a: ExactNumber, about: "ExactPoint | None" = None) -> "ExactPoint":
        p = self if about is None else self - about
        q = ExactPoint(p.x * cos_a - p.y * sin_a, p.x * sin_a + p.y * cos_a)
        return q if about is None else q + about

    def to_complex(self) -> ExactNumber:
        return self.x + self.ctx.i() * self.y

    @classmethod
    def from_complex(cls, z: ExactNumber) -> "ExactPoint":
        return cls(z.real(), z.imag())

    def numeric(self, digits: int = 40) -> tuple:
        return (embed_numeric(self.x, digits).real, embed_numeric(self.y, digits).real)

    def as_floats(self) -> tuple[float, float]:
        return (float(self.x), float(self.y))

    def is_real(self) -> bool:
        return self.x.is_real() and self.y.is_real()


@dataclass(frozen=True)
class PolygonSpec:
    """Regular n-gon given by center and apothem."""

    n: int
    center: ExactPoint
    apothem: ExactNumber

    def __post_init__(self):
        if self.n < 3:
            raise ValueError("a polygon needs at least 3 sides")

    @property
    def ctx(self) -> CycloContext:
        return self.apothem.ctx

    @property
    def h(self) -> ExactNumber:
        return self.apothem

    @property
    def radius(self) -> ExactNumber:
        return self.apothem / trig_exact("cos", 1, self.n, self.ctx)

    @property
    def side(self) -> ExactNumber:
        return self.apothem * tan_(1, self.n, self.ctx) * 2

    def scaled(self, s, about: ExactPoint | None = None) -> "PolygonSpec":
        about = about or ExactPoint(self.ctx.zero(), self.ctx.zero())
        return PolygonSpec(self.n, about + (self.center - about) * s, self.apothem * s)

    def translated(self, v: ExactPoint) -> "PolygonSpec":
        return PolygonSpec(self.n, self.center + v, self.apothem)

    def numeric(self) -> tuple[int, float, float, float]:
        return (self.n, float(self.center.x), float(self.center.y), float(self.apothem))


def regular_polygon(
    n: int,
    apothem=None,
    center: tuple | ExactPoint | None = None,
    ctx: CycloContext | None = None,
    radius=None,
) -> PolygonSpec:
    """Convenience constructor; default is apothem 1 at the origin."""
    ctx = ctx or context_for_polygon(n)
    if radius is not None:
        h = ctx.coerce(radius) * trig_exact("cos", 1, n, ctx)
    else:
        h = ctx.coerce(1 if apothem is None else apothem)
    if center is None:
        c = ExactPoint(ctx.zero(), ctx.zero())
    elif isinstance(center, ExactPoint):
        c = center
    else:
        c = ExactPoint.of(center[0], center[1], ctx)
    return PolygonSpec(n, c, h)


def polygon_vertices(P: PolygonSpec) -> list[ExactPoint]:
    """Counterclockwise vertices starting with the right end of the base edge."""
    n, ctx = P.n, P.ctx
    r = P.radius
    out = []
    for j in range(n):
        num = 4 * j + 2 - n  # theta_j = num * pi / (2n)
        cx = trig_exact("cos", num, 2 * n, ctx)
        sy = trig_exact("sin", num, 2 * n, ctx)
        out.append(ExactPoint(P.center.x + r * cx, P.center.y + r * sy))
    return out


def numeric_vertices(P: PolygonSpec) -> list[tuple[float, float]]:
    cx, cy, r = float(P.center.x), float(P.center.y), float(P.radius)
    return [
        (cx + r * math.cos(-math.pi / 2 + math.pi / P.n + 2 * math.pi * j / P.n),
         cy + r * math.sin(-math.pi / 2 + math.pi / P.n + 2 * math.pi * j / P.n))
        for j in range(P.n)
    ]


def star_point(P: PolygonSpec, k: int, side=RIGHT) -> ExactPoint:
    """star[k] of P on the extended base edge."""
    if not 1 <= k < P.n / 2:
        raise ValueError(f"star index {k} out of range for n={P.n}")
    s = _side(side)
    dx = P.apothem * tan_(k, P.n, P.ctx)
    return ExactPoint(P.center.x + dx * s, P.center.y - P.apothem)


def gen_star(P: PolygonSpec, side=LEFT) -> ExactPoint:
    return star_point(P, half(P.n), side)


# ---------------------------------------------------------------------------
# scales


def scale_of(N: int, k: int, kind: str = "scale", ctx: CycloContext | None = None) -> ExactNumber:
    """scale[k] = tan(pi/N)/tan(k pi/N), or its inverse coscale[k]."""
    if not 1 <= k < N / 2:
        raise ValueError(f"scale index {k} out of range for N={N}")
    ctx = ctx or context_for_polygon(N)
    v = tan_(1, N, ctx) / tan_(k, N, ctx)
    if kind == "scale":
        return v
    if kind == "coscale":
        return v.inverse()
    raise ValueError(f"unknown kind {kind!r}")


def gen_scale(N: int, ctx: CycloContext | None = None) -> ExactNumber:
    """GenScale[N] = scale[<N/2>]."""
    if N < 3:
        raise ValueError("N must be at least 3")
    return scale_of(N, half(N), ctx=ctx)


def scale_change(N: int, M: int, ctx: CycloContext | None = None) -> ExactNumber:
    """SC(N, M) = tan(pi/N)/tan(pi/M) for M dividing N."""
    if M < 1 or N % M:
        raise ValueError(f"{M} does not divide {N}")
    ctx = ctx or context_for_polygon(N)
    if M == 1 or M == 2:
        raise ValueError("SC needs M >= 3")
    return tan_(1, N, ctx) / tan_(1, M, ctx)


def two_star_solve(p1: ExactPoint, j: int, p2: ExactPoint, k: int, sides: str, N: int) -> tuple[ExactNumber, ExactPoint]:
    """Apothem and center of the regular N-gon with p1 = star[j], p2 = star[k].

    ``same``: both points right of center, j < k.  ``opposite``: p1 is the left
    star[j], p2 the right star[k].
    """
    if p1.y != p2.y:
        raise ValueError("star points must share a horizontal line")
    ctx = p1.ctx
    d = p2.x - p1.x
    if d.sign() <= 0:
        raise ValueError("p2 must lie to the right of p1")
    tj, tk = tan_(j, N, ctx), tan_(k, N, ctx)
    if sides == "same":
        if j >= k:
            raise ValueError("degenerate: same-side solve needs j < k")
        h = d / (tk - tj)
        cx = p1.x - h * tj
    elif sides == "opposite":
        h = d / (tj + tk)
        cx = p1.x + h * tj
    else:
        raise ValueError(f"sides must be 'same' or 'opposite', got {sides!r}")
    return h, ExactPoint(cx, p1.y + h)


# ---------------------------------------------------------------------------
# First Family


GENDER_N, GENDER_2N, GENDER_HALF = "N-gon", "2N-gon", "N/2-gon"


@dataclass(frozen=True)
class TileRecord:
    kind: str
    k: int
    gender: str
    polygon: PolygonSpec | None
    vertices: tuple | None = None
    provenance: str = ""
    side: int = RIGHT

    @property
    def center(self) -> ExactPoint:
        return self.polygon.center

    @property
    def apothem(self) -> ExactNumber:
        return self.polygon.apothem

    @property
    def n(self) -> int:
        return self.polygon.n


def sub_tile(P: PolygonSpec, k: int, side=LEFT) -> PolygonSpec:
    """S[k] of P on the given side (an n-gon for n even, a 2n-gon for n odd)."""
    n, ctx = P.n, P.ctx
    if not 1 <= k <= half(n):
        raise ValueError(f"S[{k}] undefined for n={n}")
    s = _side(side)
    star = star_point(P, k, s)
    t1 = tan_(1, n, ctx)
    if n % 2 == 0:
        h = P.apothem * t1 / tan_(n // 2 - k, n, ctx)
        m = n
    else:
        h = P.apothem * t1 / tan_(n - 2 * k, 2 * n, ctx)
        m = 2 * n
    c = ExactPoint(star.x + P.apothem * t1 * s, star.y + h)
    return PolygonSpec(m, c, h)


def gender_dual(P: PolygonSpec) -> PolygonSpec:
    """The circumscribed n/2-gon with the same center and apothem."""
    if P.n % 2:
        raise ValueError("gender dual needs an even polygon")
    return PolygonSpec(P.n // 2, P.center, P.apothem)


def revised_sub_tile(P: PolygonSpec, k: int, side=LEFT) -> PolygonSpec:
    """S[k] with the odd tiles of a twice-odd P swapped for their duals."""
    T = sub_tile(P, k, side)
    if P.n % 4 == 2 and k % 2 == 1:
        return gender_dual(T)
    return T


def conformal_D(P: PolygonSpec, side=LEFT) -> TileRecord:
    D = sub_tile(P, half(P.n), side)
    return TileRecord("D", half(P.n), _gender(P.n, D.n), D, provenance=f"D of N={P.n}", side=_side(side))


def _gender(N: int, m: int) -> str:
    if m == N:
        return GENDER_N
    if m == 2 * N:
        return GENDER_2N
    if 2 * m == N:
        return GENDER_HALF
    return f"{m}-gon"


def family_case(N: int) -> str:
    if N % 2:
        return "odd"
    return "twice-even" if N % 4 == 0 else "twice-odd"


@dataclass
class FamilyRecord:
    parent: PolygonSpec
    case: str
    tiles: list[TileRecord] = field(default_factory=list)

    def get(self, kind: str, k: int | None = None, side=None) -> TileRecord:
        for t in self.tiles:
            if t.kind == kind and (k is None or t.k == k) and (side is None or t.side == _side(side)):
                return t
        raise KeyError(f"no tile {kind}[{k}] side={side}")

    def select(self, kind: str, side=None) -> list[TileRecord]:
        return [t for t in self.tiles if t.kind == kind and (side is None or t.side == _side(side))]

    def to_json(self, digits: int = 20) -> str:
        return family_to_json(self, digits)


def first_family(P: PolygonSpec, include_last_ds: bool = False) -> FamilyRecord:
    """S[k], D, M, DS[k], M[1], D[1] of P, every tile on both sides."""
    N = P.n
    case = family_case(N)
    fam = FamilyRecord(P, case)
    revise_nucleus = case == "twice-odd"
    for side in (LEFT, RIGHT):
        for k in range(1, half(N) + 1):
            T = revised_sub_tile(P, k, side) if revise_nucleus else sub_tile(P, k, side)
            fam.tiles.append(TileRecord("S", k, _gender(N, T.n), T, provenance=f"S[{k}] of N={N}", side=side))
    for side in (LEFT, RIGHT):
        fam.tiles.append(conformal_D(P, side))
    D = conformal_D(P, LEFT).polygon
    last = half(D.n)
    for side in (RIGHT, LEFT):
        for k in range(1, last + (1 if include_last_ds else 0)):
            T = revised_sub_tile(D, k, side)
            fam.tiles.append(TileRecord("DS", k, _gender(N, T.n), T, provenance=f"DS[{k}] of N={N}", side=side))
    if N > 4:
        Mt = revised_sub_tile(D, D.n // 2 - 2, RIGHT)
        fam.tiles.append(TileRecord("M", D.n // 2 - 2, _gender(N, Mt.n), Mt, provenance=f"M of N={N}"))
        m1, d1 = revised_sub_tile(D, 1, RIGHT), revised_sub_tile(D, 2, RIGHT)
        fam.tiles.append(TileRecord("M_gen", 1, _gender(N, m1.n), m1, provenance=f"M[1] of N={N}"))
        fam.tiles.append(TileRecord("D_gen", 1, _gender(N, d1.n), d1, provenance=f"D[1] of N={N}"))
    return fam


def gen_step(X: PolygonSpec) -> tuple[PolygonSpec, PolygonSpec]:
    """Next-generation (M, D) pair: the right DS[1], DS[2] of X's left D."""
    D = sub_tile(X, half(X.n), LEFT)
    return revised_sub_tile(D, 1, RIGHT), revised_sub_tile(D, 2, RIGHT)


def ideal_generations(P: PolygonSpec, depth: int) -> list[tuple[TileRecord, TileRecord]]:
    """[(M[k], D[k]) for k = 1..depth] converging to the left GenStar of P."""
    if P.n <= 4:
        raise ValueError("ideal generations need N > 4")
    if depth < 1:
        raise ValueError("depth must be at least 1")
    out = []
    M = P
    for k in range(1, depth + 1):
        M, D = gen_step(M)
        out.append(
            (
                TileRecord("M_gen", k, _gender(P.n, M.n), M, provenance=f"M[{k}] of N={P.n}"),
                TileRecord("D_gen", k, _gender(P.n, D.n), D, provenance=f"D[{k}] of N={P.n}"),
            )
        )
    return out


def edge_chain(P: PolygonSpec, depth: int, k: int = 2) -> list[TileRecord]:
    """Tiles on the left edge of P: S[k] of P, its right S[k], then D tiles of later generations."""
    if depth < 1:
        raise ValueError("depth must be at least 1")
    d1 = sub_tile(P, k, LEFT)
    chain = [d1]
    if depth > 1:
        chain.append(sub_tile(d1, k, RIGHT))
    while len(chain) < depth:
        chain.append(gen_step(chain[-1])[1])
    return [TileRecord("D_gen", i + 1, _gender(P.n, T.n), T, provenance=f"edge D[{i + 1}] of N={P.n}") for i, T in enumerate(chain)]


def outer_dual_center(P: PolygonSpec, k: int, side=LEFT) -> ExactPoint:
    """Center of S[k] as the scaled, rotated star[k] (rotation toward the polygon)."""
    if not 1 <= k <= half(P.n):
        raise ValueError(f"k={k} out of range for n={P.n}")
    s = _side(side)
    ctx, n = P.ctx, P.n
    v = star_point(P, k, s) - P.center
    cos1 = trig_exact("cos", 1, n, ctx)
    sin1 = trig_exact("sin", 1, n, ctx)
    v = v * cos1.inverse()
    return v.rotate(cos1, sin1 * s) + P.center


# ---------------------------------------------------------------------------
# export


def _tile_json(t: TileRecord, N: int, digits: int) -> dict:
    P = t.polygon
    return {
        "kind": t.kind,
        "k": t.k,
        "side": "left" if t.side == LEFT else "right",
        "gender": t.gender,
        "n": P.n,
        "center": [serialize(P.center.x), serialize(P.center.y)],
        "apothem": serialize(P.apothem),
        "numeric": {
            "cx": mpmath.nstr(embed_numeric(P.center.x, digits).real, digits),
            "cy": mpmath.nstr(embed_numeric(P.center.y, digits).real, digits),
            "h": mpmath.nstr(embed_numeric(P.apothem, digits).real, digits),
        },
        "provenance": t.provenance,
    }


def family_to_json(fam: FamilyRecord, digits: int = 20) -> str:
    P = fam.parent
    doc = {
        "N": P.n,
        "case": fam.case,
        "parent": {
            "center": [serialize(P.center.x), serialize(P.center.y)],
            "apothem": serialize(P.apothem),
        },
        "tiles": [_tile_json(t, P.n, digits) for t in fam.tiles],
    }
    return json.dumps(doc, indent=1)


def family_from_json(text: str) -> FamilyRecord:
    doc = json.loads(text)
    parent = PolygonSpec(
        doc["N"],
        ExactPoint(deserialize(doc["parent"]["center"][0]), deserialize(doc["parent"]["center"][1])),
        deserialize(doc["parent"]["apothem"]),
    )
    fam = FamilyRecord(parent, doc["case"])
    for t in doc["tiles"]:
        poly = PolygonSpec(t["n"], ExactPoint(deserialize(t["center"][0]), deserialize(t["center"][1])), deserialize(t["apothem"]))
        fam.tiles.append(TileRecord(t["kind"], t["k"], t["gender"], poly, provenance=t["provenance"], side=_side(t["side"])))
    return fam
