"""Outer billiards, the digital filter map and the dual-center map.

Each map has a numeric step that returns a label and an exact replay step that
consumes one.  Numeric states are mpmath values at the system precision.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import mpmath

from .cyclotomic import DEFAULT_DIGITS, CycloContext, ExactNumber, context_for_polygon, embed_numeric, trig_exact
from .geometry import ExactPoint, PolygonSpec, numeric_vertices, polygon_vertices


class SingularityError(ArithmeticError):
    """Raised when an orbit meets (or comes within tolerance of) a discontinuity."""

    def __init__(self, msg: str, step: int | None = None):
        super().__init__(msg if step is None else f"{msg} at step {step}")
        self.step = step


def _tolerance(digits: int):
    return mpmath.mpf(10) ** (1 - digits / 2)


# ---------------------------------------------------------------------------
# outer billiards


@dataclass(frozen=True)
class OuterBilliardsSystem:
    """tau(p) = 2c - p; c is the vertex with the polygon to the left of p -> c.

    ``orientation='right'`` selects the mirror choice, which is tau inverse.
    """

    polygon: PolygonSpec
    orientation: str = "left"
    digits: int = DEFAULT_DIGITS
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    kind = "tau"

    @property
    def N(self) -> int:
        return self.polygon.n

    @property
    def exact_vertices(self) -> list[ExactPoint]:
        v = self._cache.get("exact")
        if v is None:
            v = self._cache["exact"] = polygon_vertices(self.polygon)
        return v

    def numeric_vertices(self, digits: int | None = None) -> list[tuple]:
        digits = digits or self.digits
        key = ("mp", digits)
        v = self._cache.get(key)
        if v is None:
            v = self._cache[key] = [
                (embed_numeric(p.x, digits).real, embed_numeric(p.y, digits).real) for p in self.exact_vertices
            ]
        return v

    def float_vertices(self) -> list[tuple[float, float]]:
        return numeric_vertices(self.polygon)

    def inverse(self) -> "OuterBilliardsSystem":
        return OuterBilliardsSystem(self.polygon, "right" if self.orientation == "left" else "left", self.digits)

    def select_vertex(self, p) -> int:
        """0-based index of the supporting vertex; raises on singular/inside points."""
        with mpmath.workdps(self.digits + 10):
            V = self.numeric_vertices()
            px, py = mpmath.mpf(p[0]), mpmath.mpf(p[1])
            sgn = 1 if self.orientation == "left" else -1
            d = [(vx - px, vy - py) for vx, vy in V]
            j = 0
            for i in range(1, self.N):
                cr = d[j][0] * d[i][1] - d[j][1] * d[i][0]
                if sgn * cr < 0:
                    j = i
            tol = _tolerance(self.digits)
            dj = d[j]
            nj = mpmath.sqrt(dj[0] ** 2 + dj[1] ** 2)
            for i in range(self.N):
                if i == j:
                    continue
                cr = sgn * (dj[0] * d[i][1] - dj[1] * d[i][0])
                ni = mpmath.sqrt(d[i][0] ** 2 + d[i][1] ** 2)
                if cr < -tol * nj * ni:
                    raise SingularityError("point inside the polygon")
                if abs(cr) <= tol * nj * ni:
                    raise SingularityError("point on an extended edge")
        return j


def tau_step(sys: OuterBilliardsSystem, p) -> tuple[tuple, int]:
    """Numeric step; returns (image, 1-based vertex label)."""
    j = sys.select_vertex(p)
    with mpmath.workdps(sys.digits + 10):
        vx, vy = sys.numeric_vertices()[j]
        return (2 * vx - mpmath.mpf(p[0]), 2 * vy - mpmath.mpf(p[1])), j + 1


def tau_inverse_step(sys: OuterBilliardsSystem, p) -> tuple[tuple, int]:
    return tau_step(sys.inverse(), p)


def tau_step_with_label(sys: OuterBilliardsSystem, p: ExactPoint, label: int) -> ExactPoint:
    """Exact 2 v[label] - p (no geometric test)."""
    v = sys.exact_vertices[label - 1]
    return ExactPoint(v.x * 2 - p.x, v.y * 2 - p.y)


def tau_step_exact(sys: OuterBilliardsSystem, p: ExactPoint) -> tuple[ExactPoint, int]:
    """Exact step with exact incidence checks on the chosen vertex."""
    j = _select_exact(sys, p)
    return tau_step_with_label(sys, p, j + 1), j + 1


def _select_exact(sys: OuterBilliardsSystem, p: ExactPoint) -> int:
    V = sys.exact_vertices
    sgn = 1 if sys.orientation == "left" else -1
    d = [(v.x - p.x, v.y - p.y) for v in V]
    approx = [(float(a), float(b)) for a, b in d]
    j = 0
    for i in range(1, sys.N):
        cr = approx[j][0] * approx[i][1] - approx[j][1] * approx[i][0]
        if sgn * cr < 0:
            j = i
    for i in range(sys.N):
        if i == j:
            continue
        s = (d[j][0] * d[i][1] - d[j][1] * d[i][0]).sign() * sgn
        if s == 0:
            raise SingularityError("point on an extended edge")
        if s < 0:
            raise SingularityError("point inside the polygon or ambiguous vertex")
    return j


# ---------------------------------------------------------------------------
# digital filter


@dataclass(frozen=True)
class DfSystem:
    """Df(x, y) = (y, f(-x + a y)) with a = 2 cos(2 pi/N) on [-1, 1)^2."""

    N: int
    digits: int = DEFAULT_DIGITS
    _cache: dict = field(default_factory=dict, repr=False, compare=False)

    kind = "df"

    def __post_init__(self):
        if self.N < 3:
            raise ValueError("N must be at least 3")

    @property
    def ctx(self) -> CycloContext:
        return context_for_polygon(self.N)

    @property
    def a_exact(self) -> ExactNumber:
        return trig_exact("cos", 2, self.N, self.ctx) * 2

    @property
    def a(self):
        with mpmath.workdps(self.digits + 10):
            return 2 * mpmath.cos(2 * mpmath.pi / self.N)


def df_atom(w) -> int:
    if w >= 1:
        return 1
    if w < -1:
        return -1
    return 0


def df_step(sys: DfSystem, state) -> tuple[tuple, int]:
    with mpmath.workdps(sys.digits + 10):
        x, y = mpmath.mpf(state[0]), mpmath.mpf(state[1])
        w = -x + sys.a * y
        s = df_atom(w)
        tol = _tolerance(sys.digits)
        if abs(w - 1) < tol or abs(w + 1) < tol:
            raise SingularityError("state on an atom boundary")
        return (y, w - 2 * s), s


def dfx(sys: DfSystem, state: tuple, atom: int) -> tuple:
    """Replay form (y, -x + a y - 2 atom), exact when the state is exact."""
    x, y = state
    a = sys.a_exact if isinstance(y, ExactNumber) else sys.a
    return (y, -x + a * y - 2 * atom)


def _rect_trig(sys: DfSystem, exact: bool):
    if exact:
        return trig_exact("sin", 2, sys.N, sys.ctx), trig_exact("cos", 2, sys.N, sys.ctx)
    th = 2 * mpmath.pi / sys.N
    return mpmath.sin(th), mpmath.cos(th)


def df_rectify(sys: DfSystem, state) -> tuple:
    """Filter state (x, y) -> plane point u with Df acting as rotation by -2pi/N.

    (x, y) = (n0 . u, n1 . u) with n0 = (0, -1) and n1 = (sin t, -cos t).
    """
    x, y = state
    exact = isinstance(x, ExactNumber)
    with mpmath.workdps(sys.digits + 10):
        s, c = _rect_trig(sys, exact)
        uy = -x
        ux = (y + c * uy) / s
        return (ux, uy)


def df_unrectify(sys: DfSystem, u) -> tuple:
    ux, uy = u
    exact = isinstance(ux, ExactNumber)
    with mpmath.workdps(sys.digits + 10):
        s, c = _rect_trig(sys, exact)
        return (-uy, s * ux - c * uy)


# ---------------------------------------------------------------------------
# dual-center map


@dataclass(frozen=True)
class DualCenterSystem:
    """F(z) = exp(-i w) (z - sign(Im z)), w = 2 pi/N."""

    N: int
    digits: int = DEFAULT_DIGITS

    kind = "dkhoy"

    @property
    def ctx(self) -> CycloContext:
        return context_for_polygon(self.N)

    @property
    def rotation_exact(self) -> ExactNumber:
        return self.ctx.zeta(-self.ctx.M // self.N)

    @property
    def rotation(self):
        with mpmath.workdps(self.digits + 10):
            return mpmath.expjpi(-mpmath.mpf(2) / self.N)


def dkhoy_step(sys: DualCenterSystem, z) -> tuple:
    with mpmath.workdps(sys.digits + 10):
        z = mpmath.mpc(z)
        im = z.imag
        if im != 0 and abs(im) < _tolerance(sys.digits):
            raise SingularityError("point on the real axis")
        s = 0 if im == 0 else (1 if im > 0 else -1)
        return sys.rotation * (z - s), s


def dkhoy_replay(sys: DualCenterSystem, z: ExactNumber, sign: int) -> ExactNumber:
    return sys.rotation_exact * (z - sign)


# ---------------------------------------------------------------------------
# dispatch used by the symbolic layer


def numeric_step(sys, state):
    if isinstance(sys, OuterBilliardsSystem):
        return tau_step(sys, state)
    if isinstance(sys, DfSystem):
        return df_step(sys, state)
    if isinstance(sys, DualCenterSystem):
        return dkhoy_step(sys, state)
    raise TypeError(f"unknown map system {type(sys).__name__}")


def exact_step(sys, state, label):
    if isinstance(sys, OuterBilliardsSystem):
        return tau_step_with_label(sys, state, label)
    if isinstance(sys, DfSystem):
        return dfx(sys, state, label)
    if isinstance(sys, DualCenterSystem):
        return dkhoy_replay(sys, state, label)
    raise TypeError(f"unknown map system {type(sys).__name__}")


def numeric_shadow(state, digits: int = DEFAULT_DIGITS):
    """mpmath view of an exact state (point, pair or complex element)."""
    if isinstance(state, ExactPoint):
        return state.numeric(digits)
    if isinstance(state, ExactNumber):
        return embed_numeric(state, digits)
    if isinstance(state, tuple) and state and isinstance(state[0], ExactNumber):
        return tuple(embed_numeric(s, digits).real for s in state)
    return state
