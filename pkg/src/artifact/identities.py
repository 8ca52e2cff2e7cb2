"""Exact scaling identities, checked with zero tolerance in Q(zeta_M)."""

from __future__ import annotations

from dataclasses import dataclass, field
from math import gcd

from .cyclotomic import context_for_polygon, integrality, trig_exact
from .geometry import LEFT, RIGHT, gen_scale, half, regular_polygon, scale_of, sub_tile


@dataclass
class IdentityResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.checked > 0 and not self.failures

    def check(self, cond: bool, case) -> None:
        self.checked += 1
        if not cond:
            self.failures.append(case)


def scaling_lemma(N: int, res: IdentityResult) -> None:
    """scale[j] of N/k equals scale[kj]/scale[k] of N."""
    ctx = context_for_polygon(N)
    for k in range(2, N // 3 + 1):
        if N % k:
            continue
        M = N // k
        for j in range(1, (M + 1) // 2):
            if 2 * j == M:
                continue
            lhs = scale_of(M, j, ctx=ctx)
            rhs = scale_of(N, k * j, ctx=ctx) / scale_of(N, k, ctx=ctx)
            res.check(lhs == rhs, (N, k, j))


def genscale_form(N: int, res: IdentityResult) -> None:
    """GenScale is tan^2(pi/N) for N even and tan(pi/2N) tan(pi/N) for N odd."""
    ctx = context_for_polygon(N)
    t = trig_exact("tan", 1, N, ctx)
    other = t if N % 2 == 0 else trig_exact("tan", 1, 2 * N, ctx)
    res.check(gen_scale(N, ctx) == t * other, N)


def first_family_scaling(N: int, res: IdentityResult) -> None:
    """hS[1]/hS[k] = scale[k] on both sides."""
    P = regular_polygon(N)
    for k in range(1, half(N) + 1):
        for side in (LEFT, RIGHT):
            r = sub_tile(P, 1, side).apothem / sub_tile(P, k, side).apothem
            res.check(r == scale_of(N, k, ctx=P.ctx), (N, k, side))


def ds1_genscale(N: int, res: IdentityResult) -> None:
    """hDS[1]/hN = GenScale[N]."""
    P = regular_polygon(N)
    D = sub_tile(P, half(N), LEFT)
    for side in (LEFT, RIGHT):
        h = sub_tile(D, 1, side).apothem
        res.check(h / P.apothem == gen_scale(N, P.ctx), (N, side))


def complementary_tangents(N: int, res: IdentityResult) -> None:
    """s_{N/2-k} = 1/s_k, where s_k = tan(k pi/N)."""
    ctx = context_for_polygon(N)
    for k in range(1, (N + 1) // 2):
        if 2 * k == N:
            continue
        sk = trig_exact("tan", k, N, ctx)
        comp = trig_exact("tan", N - 2 * k, 2 * N, ctx)
        res.check(comp * sk == ctx.one(), (N, k))


def scale_coscale(N: int, res: IdentityResult) -> None:
    ctx = context_for_polygon(N)
    for k in range(1, (N + 1) // 2):
        if 2 * k == N:
            continue
        res.check(scale_of(N, k, "scale", ctx) * scale_of(N, k, "coscale", ctx) == ctx.one(), (N, k))


def primitive_units(N: int, res: IdentityResult) -> None:
    """Primitive scales are algebraic units."""
    for k in range(1, (N + 1) // 2):
        if 2 * k == N or gcd(k, N) != 1:
            continue
        res.check(integrality(scale_of(N, k)) == "unit", (N, k))


SUITE = {
    "scaling_lemma": scaling_lemma,
    "genscale_form": genscale_form,
    "first_family_scaling": first_family_scaling,
    "ds1_genscale": ds1_genscale,
    "complementary_tangents": complementary_tangents,
    "scale_coscale": scale_coscale,
}


def run_identity_suite(n_min: int = 3, n_max: int = 24, with_units: bool = False) -> dict[str, IdentityResult]:
    names = dict(SUITE)
    if with_units:
        names["primitive_units"] = primitive_units
    out = {name: IdentityResult(name) for name in names}
    for N in range(n_min, n_max + 1):
        for name, fn in names.items():
            fn(N, out[name])
    return out
