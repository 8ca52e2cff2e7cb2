"""Itineraries, exact replay, projections and exact period detection."""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import mpmath
import numba
import numpy as np

from .cyclotomic import DEFAULT_DIGITS, ExactNumber, cyclotomic_polynomial, deserialize, serialize
from .geometry import ExactPoint, PolygonSpec
from .maps import (
    DfSystem,
    DualCenterSystem,
    OuterBilliardsSystem,
    SingularityError,
    exact_step,
    numeric_shadow,
    numeric_step,
)

LABEL_ALPHABETS = {"tau": None, "df": (-1, 0, 1), "dkhoy": (-1, 0, 1)}


@dataclass(frozen=True)
class IndexSequence:
    kind: str
    labels: tuple[int, ...]
    N: int
    seed: object = None  # exact state or None
    seed_numeric: object = None
    digits: int = DEFAULT_DIGITS
    meta: dict = field(default_factory=dict, compare=False)

    def __len__(self) -> int:
        return len(self.labels)

    def __post_init__(self):
        alpha = LABEL_ALPHABETS.get(self.kind, ())
        if alpha is None:
            bad = [x for x in self.labels if not 1 <= x <= self.N]
        elif alpha:
            bad = [x for x in self.labels if x not in alpha]
        else:
            raise ValueError(f"unknown map kind {self.kind!r}")
        if bad:
            raise ValueError(f"labels outside alphabet: {bad[:5]}")


@dataclass(frozen=True)
class OrbitDecomposition:
    parity: int
    Q: ExactPoint


def _kind(sys) -> str:
    return sys.kind


# ---------------------------------------------------------------------------
# recording and replay


def record_itinerary(sys, seed, n: int, exact_seed=None) -> IndexSequence:
    """Numeric orbit of length n; returns its labels (raises on singular steps)."""
    labels = []
    state = seed
    for step in range(n):
        try:
            state, lab = numeric_step(sys, state)
        except SingularityError as exc:
            raise SingularityError(str(exc), step) from None
        labels.append(lab)
    return IndexSequence(_kind(sys), tuple(labels), sys.N, exact_seed, seed, sys.digits)


def surrogate_seed(point, direction, offset=None, digits: int = DEFAULT_DIGITS):
    """A numeric point displaced from an exact one along a direction."""
    with mpmath.workdps(digits + 10):
        eps = mpmath.mpf("1e-8") if offset is None else mpmath.mpf(offset)
        base = numeric_shadow(point, digits)
        if isinstance(base, mpmath.mpc):
            return base + eps * mpmath.mpc(direction)
        return tuple(b + eps * mpmath.mpf(d) for b, d in zip(base, direction))


def replay_exact(sys, seed, seq: IndexSequence | Sequence[int]) -> list:
    """Exact orbit [seed, F(seed), ...] driven by recorded labels."""
    labels = seq.labels if isinstance(seq, IndexSequence) else tuple(seq)
    orbit = [seed]
    state = seed
    for lab in labels:
        state = exact_step(sys, state, lab)
        orbit.append(state)
    return orbit


def decompose_affine(seq: IndexSequence | Sequence[int], sys: OuterBilliardsSystem) -> OrbitDecomposition:
    """(parity, Q) with tau^n(p) = parity p + 2Q along the itinerary."""
    labels = seq.labels if isinstance(seq, IndexSequence) else tuple(seq)
    ctx = sys.polygon.ctx
    Qx, Qy = ctx.zero(), ctx.zero()
    V = sys.exact_vertices
    for lab in labels:
        v = V[lab - 1]
        Qx, Qy = v.x - Qx, v.y - Qy
    return OrbitDecomposition(-1 if len(labels) % 2 else 1, ExactPoint(Qx, Qy))


def compose_affine(first: OrbitDecomposition, second: OrbitDecomposition) -> OrbitDecomposition:
    """Decomposition of the second segment applied after the first."""
    return OrbitDecomposition(
        first.parity * second.parity,
        ExactPoint(first.Q.x * second.parity + second.Q.x, first.Q.y * second.parity + second.Q.y),
    )


def projection(seq: IndexSequence | Sequence[int], seed: ExactPoint, stride: int, sys: OuterBilliardsSystem) -> list[ExactPoint]:
    """Every stride-th point of the replayed tau orbit, from the affine form."""
    labels = seq.labels if isinstance(seq, IndexSequence) else tuple(seq)
    if stride < 1:
        raise ValueError("stride must be positive")
    if stride > len(labels):
        raise ValueError("stride exceeds sequence length")
    out = []
    for m in range(0, len(labels), stride):
        dec = decompose_affine(labels[:m], sys)
        out.append(ExactPoint(seed.x * dec.parity + dec.Q.x * 2, seed.y * dec.parity + dec.Q.y * 2))
    return out


# ---------------------------------------------------------------------------
# itinerary files


def _ser_state(state) -> str:
    if isinstance(state, ExactPoint):
        return f"{serialize(state.x)};{serialize(state.y)}"
    if isinstance(state, ExactNumber):
        return serialize(state)
    if isinstance(state, tuple):
        return ";".join(serialize(s) for s in state)
    return ""


def _de_state(text: str, kind: str):
    if not text:
        return None
    parts = [deserialize(t) for t in text.split(";")]
    if kind == "dkhoy":
        return parts[0]
    if kind == "tau":
        return ExactPoint(parts[0], parts[1])
    return tuple(parts)


def write_itinerary(seq: IndexSequence, path: str | Path) -> None:
    lines = [
        "# itinerary v1",
        f"# map={seq.kind}",
        f"# N={seq.N}",
        f"# digits={seq.digits}",
        f"# seed={_ser_state(seq.seed)}",
    ]
    for k, v in sorted(seq.meta.items()):
        lines.append(f"# {k}={v}")
    lines.extend(str(x) for x in seq.labels)
    Path(path).write_text("\n".join(lines) + "\n", encoding="utf-8")


def read_itinerary(path: str | Path) -> IndexSequence:
    head, labels = {}, []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if line.startswith("#"):
            if "=" in line:
                k, v = line[1:].strip().split("=", 1)
                head[k.strip()] = v.strip()
        elif line.strip():
            labels.append(int(line))
    kind = head["map"]
    meta = {k: v for k, v in head.items() if k not in ("map", "N", "digits", "seed")}
    return IndexSequence(kind, tuple(labels), int(head["N"]), _de_state(head.get("seed", ""), kind), None, int(head["digits"]), meta)


# ---------------------------------------------------------------------------
# fast exact period detection for tau


@numba.njit(cache=True)
def _tau_period_kernel(p0x, p0y, cx, cy, dvx, dvy, red, sgn, A, kappa, n0, max_n, tol, close_tol):
    N = dvx.shape[0]
    phi = red.shape[1]
    n = n0
    while n < max_n:
        # current point from the integer state
        qx = kappa * cx
        qy = kappa * cy
        for t in range(phi):
            if A[t] != 0:
                qx += A[t] * dvx[t]
                qy += A[t] * dvy[t]
        par = 1.0 if n % 2 == 0 else -1.0
        px = par * p0x + 2.0 * qx
        py = par * p0y + 2.0 * qy
        if n > n0:
            if n % 2 == 0:
                zero = True
                for t in range(phi):
                    if A[t] != 0:
                        zero = False
                        break
                if zero:
                    return 0, n
            elif abs(qx - p0x) + abs(qy - p0y) < close_tol:
                return 1, n
        # supporting vertex
        j = 0
        for i in range(1, N):
            djx = cx + dvx[j] - px
            djy = cy + dvy[j] - py
            dix = cx + dvx[i] - px
            diy = cy + dvy[i] - py
            if sgn * (djx * diy - djy * dix) < 0:
                j = i
        djx = cx + dvx[j] - px
        djy = cy + dvy[j] - py
        nj = math.sqrt(djx * djx + djy * djy)
        for i in range(N):
            if i == j:
                continue
            dix = cx + dvx[i] - px
            diy = cy + dvy[i] - py
            cr = sgn * (djx * diy - djy * dix) / (nj * math.sqrt(dix * dix + diy * diy))
            if cr < -tol:
                return 4, n
            if cr <= tol:
                return 3, n
        # Q <- v_j - Q
        for t in range(phi):
            A[t] = red[j, t] - A[t]
        kappa = 1 - kappa
        n += 1
    return 2, n


@dataclass(frozen=True)
class PeriodResult:
    period: int | None
    steps_used: int
    status: str = "ok"

    def __bool__(self) -> bool:
        return self.period is not None


def _tau_tables(sys: OuterBilliardsSystem):
    cache = sys._cache.get("period_tables")
    if cache is not None:
        return cache
    N = sys.N
    phi_poly = list(cyclotomic_polynomial(N))
    phi = len(phi_poly) - 1
    red = np.zeros((N, phi), dtype=np.int64)
    for j in range(N):
        v = [0] * (j + 1)
        v[j] = 1
        for e in range(len(v) - 1, phi - 1, -1):
            c = v[e]
            if c:
                for t in range(phi + 1):
                    v[e - phi + t] -= c * phi_poly[t]
        for t in range(min(phi, len(v))):
            red[j, t] = v[t]
    V = sys.exact_vertices
    C = sys.polygon.center
    offsets = [ExactPoint(v.x - C.x, v.y - C.y) for v in V]
    dvx = np.array([float(o.x) for o in offsets])
    dvy = np.array([float(o.y) for o in offsets])
    cache = (red, dvx, dvy, offsets)
    sys._cache["period_tables"] = cache
    return cache


def _exact_Q(sys, A, kappa, offsets) -> ExactPoint:
    C = sys.polygon.center
    ctx = C.ctx
    qx, qy = C.x * kappa, C.y * kappa
    for t, a in enumerate(A):
        if a:
            qx = qx + offsets[t].x * int(a)
            qy = qy + offsets[t].y * int(a)
    return ExactPoint(qx, qy)


def tau_period(sys: OuterBilliardsSystem, p: ExactPoint, max_n: int = 10**7, tol: float = 1e-11) -> PeriodResult:
    """Least n with tau^n(p) = p exactly, tracked as an integer vector."""
    red, dvx, dvy, offsets = _tau_tables(sys)
    C = sys.polygon.center
    phi = red.shape[1]
    A = np.zeros(phi, dtype=np.int64)
    kappa, n = 0, 0
    p0x, p0y = float(p.x), float(p.y)
    scale = 1.0 + abs(p0x) + abs(p0y)
    sgn = 1.0 if sys.orientation == "left" else -1.0
    while True:
        status, n = _tau_period_kernel(
            p0x, p0y, float(C.x), float(C.y), dvx, dvy, red, sgn, A, kappa, n, max_n, tol, 1e-9 * scale
        )
        kappa = n % 2
        if status == 0:
            return PeriodResult(n, n)
        if status == 1:
            if _exact_Q(sys, A, kappa, offsets) == p:
                return PeriodResult(n, n)
            # numeric near miss: step past it
            status, n = _tau_period_kernel(
                p0x, p0y, float(C.x), float(C.y), dvx, dvy, red, sgn, A, kappa, n, n + 1, tol, -1.0
            )
            kappa = n % 2
            if status == 2:
                continue
        if status == 2:
            return PeriodResult(None, n, "exhausted")
        if status == 3:
            raise SingularityError("orbit meets an extended edge", n)
        if status == 4:
            raise SingularityError("orbit enters the polygon", n)


def generic_period(sys, seed, max_n: int = 10**5) -> PeriodResult:
    """Exact replay period search for any map (slow; small periods only)."""
    num = numeric_shadow(seed, sys.digits)
    state = seed
    for n in range(1, max_n + 1):
        try:
            num, lab = numeric_step(sys, num)
        except SingularityError as exc:
            raise SingularityError(str(exc), n - 1) from None
        state = exact_step(sys, state, lab)
        if _state_eq(state, seed):
            return PeriodResult(n, n)
        num = numeric_shadow(state, sys.digits)
    return PeriodResult(None, max_n, "exhausted")


def _state_eq(a, b) -> bool:
    if isinstance(a, ExactPoint):
        return a.x == b.x and a.y == b.y
    if isinstance(a, tuple):
        return all(x == y for x, y in zip(a, b))
    return a == b


def detect_period(sys, p, max_n: int = 10**7) -> PeriodResult:
    if isinstance(sys, OuterBilliardsSystem):
        return tau_period(sys, p, max_n)
    return generic_period(sys, p, min(max_n, 10**5))


# ---------------------------------------------------------------------------
# census output


def period_census_csv(rows: Sequence[tuple], path: str | Path | None = None) -> str:
    """CSV with columns N, tile, k, period, steps_used."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["N", "tile", "k", "period", "steps_used"])
    for r in rows:
        w.writerow(["" if x is None else x for x in r])
    text = buf.getvalue()
    if path is not None:
        Path(path).write_text(text, encoding="utf-8")
    return text
