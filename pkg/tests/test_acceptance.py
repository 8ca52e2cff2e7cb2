"""Acceptance criteria 1-11, each at its stated tolerance and time budget.

Every test records one PASS/FAIL line (shown inline and again in the terminal
summary) before asserting, so a failing criterion still reports what it saw.
Run just these with ``pytest tests/test_acceptance.py -v``.
"""

import time
from math import gcd

import pytest

from artifact.analysis import (
    conjecture_probe_4k1,
    edge_chain_periods,
    edge_class,
    n12_m_periods,
    period_table,
    scaling_report,
    temporal_scaling_n10,
)
from artifact.config import RunConfig, run_web
from artifact.cyclotomic import express_in_generator, trig_exact
from artifact.derivations import MX_TARGET, mx_triple, sx_neighborhood_web, sx_tile
from artifact.geometry import LEFT, RIGHT, gen_scale, half, regular_polygon, star_point, sub_tile, two_star_solve
from artifact.identities import run_identity_suite
from artifact.maps import OuterBilliardsSystem
from artifact.symbolic import detect_period
from artifact.verify import N24_MUTATED, N24_PERIODS, verify_edges, verify_fields
from artifact.web import edge_coverage, segment_web


def test_c1_identity_suite(acceptance):
    t = time.perf_counter()
    res = run_identity_suite(3, 24)
    dt = time.perf_counter() - t
    bad = {k: r.failures[:3] for k, r in res.items() if not r.ok}
    cases = sum(r.checked for r in res.values())
    ok = not bad and dt < 60
    assert acceptance(1, ok, f"{len(res)} identities, {cases} exact cases, N=3..24, {dt:.1f}s, failures={bad or 'none'}")


def test_c2_two_star(acceptance):
    N = regular_polygon(14)
    ctx = N.ctx
    h, c = two_star_solve(star_point(N, 4, LEFT), 3, star_point(N, 1, LEFT), 6, "same", 14)
    exact = h == trig_exact("tan", 1, 14, ctx) / trig_exact("tan", 3, 14, ctx)
    err = abs(float(h) - 0.286208264215)
    ok = exact and err < 1e-12
    assert acceptance(2, ok, f"hP/hN exact={exact}, value={float(h):.15f}, |diff|={err:.1e} (< 1e-12)")


def test_c3_sx(acceptance):
    r = sx_tile()
    P = regular_polygon(11, radius=1)
    hn_ok = P.apothem == trig_exact("cos", 1, 11, P.ctx)
    g = gen_scale(11, P.ctx)
    back = r.polynomial(g)
    round_trip = back == r.ratio and express_in_generator(back, g) == r.polynomial
    rel = abs(float(r.ratio) - 0.00150329) / 0.00150329
    ok = hn_ok and round_trip and rel < 1e-7
    detail = (
        f"hSx/hN={float(r.ratio):.12g}, relative error {rel:.2e} vs tolerance 1e-07; "
        f"hN=cos(pi/11) {hn_ok}; polynomial {r.polynomial} round-trips {round_trip}"
    )
    assert acceptance(3, ok, detail)


def test_c4_fields(acceptance):
    t = time.perf_counter()
    rep = verify_fields()
    dt = time.perf_counter() - t
    bad = [c["name"] for c in rep["checks"] if not c["ok"]]
    ok = rep["ok"] and dt < 30
    assert acceptance(4, ok, f"{len(rep['checks'])} field checks, {dt:.1f}s, failures={bad or 'none'}")


def test_c5_period_oracle(acceptance):
    t = time.perf_counter()
    bad, cases = [], 0
    for N in range(3, 25):
        P = regular_polygon(N, radius=1)
        sys = OuterBilliardsSystem(P)
        for k in range(1, half(N) + 1):
            for side in (LEFT, RIGHT):
                res = detect_period(sys, sub_tile(P, k, side).center)
                cases += 1
                if not res or res.period != N // gcd(k, N):
                    bad.append((N, k, side, res and res.period))
    table = period_table(24)
    periods_ok = tuple(table.periods()) == N24_PERIODS
    flags_ok = tuple(table.flags()) == N24_MUTATED
    dt = time.perf_counter() - t
    ok = not bad and periods_ok and flags_ok and dt < 120
    detail = f"{cases} tile centers, mismatches={bad or 'none'}; N=24 periods {periods_ok}, mutations {flags_ok}; {dt:.1f}s"
    assert acceptance(5, ok, detail)


def test_c6_mx_triple(acceptance):
    t = time.perf_counter()
    res = mx_triple(40)
    dt = time.perf_counter() - t
    polys = {k: str(d.polynomial) for k, d in res.items()}
    ratios = [d.ratio for d in res.values()]
    ok = all(d.polynomial == MX_TARGET for d in res.values()) and all(x == ratios[0] for x in ratios) and dt < 600
    assert acceptance(6, ok, f"routes {polys}, exact agreement {all(x == ratios[0] for x in ratios)}, {dt:.1f}s")


def test_c7_period_sequences(acceptance):
    n12 = n12_m_periods(3)["combined"]
    n16 = edge_chain_periods(16, 4)
    n13 = conjecture_probe_4k1(13, 2)
    ratio = n13["D_ratios"][0]
    parts = {
        "N=12 M": n12 == [60, 942, 28292],
        "N=16 D": n16 == [8, 32, 456, 2464],
        "N=13 D": n13["D"] == [117, 1547] and abs(ratio - 13.22) <= 0.01,
    }
    detail = f"N=12 M periods {n12} (want [60, 942, 28292]); N=16 {n16}; N=13 {n13['D']} ratio {ratio:.4f}; " + ", ".join(
        f"{k} {'ok' if v else 'MISMATCH'}" for k, v in parts.items()
    )
    assert acceptance(7, all(parts.values()), detail)


def test_c8_counts_and_dimensions(acceptance):
    t = temporal_scaling_n10(4)
    counts = t["d"] == [1, 5, 31, 185] and t["p"] == [1, 8, 46, 278]
    dims = {N: scaling_report(T, N).dimension for T, N in ((6, 5), (9, 8), (27, 12))}
    refs = {5: 1.2411, 8: 1.2465, 12: 1.2513}
    dim_ok = all(abs(dims[N] - refs[N]) < 1e-4 for N in refs)
    ok = counts and dim_ok
    shown = {("10" if N == 5 else str(N)): round(v, 5) for N, v in dims.items()}
    assert acceptance(8, ok, f"counts {t['d']} / {t['p']} exact={counts}; dimensions {shown} within 1e-4={dim_ok}")


SURVIVORS = {10: [3, 2, 1], 34: [15, 11, 7, 3, 2, 1], 14: [5, 2, 1], 24: [10, 6, 2]}


def test_c9_edge_classes(acceptance):
    rep = verify_edges()
    rows_bad = [c["name"] for c in rep["checks"] if not c["ok"]]
    surv = {N: edge_class(N).survivors for N in SURVIVORS}
    surv_bad = {N: s for N, s in surv.items() if s != SURVIVORS[N]}
    ok = rep["ok"] and not surv_bad
    assert acceptance(9, ok, f"table rows N=16..23 mismatches={rows_bad or 'none'}; survivors {surv}")


def test_c10_web_reproduction(acceptance):
    t = time.perf_counter()
    cloud, _ = run_web(RunConfig(n=14, map="dkhoy", depth=5000, samples=1000))
    dt = time.perf_counter() - t
    close = abs(len(cloud) - 450_000) / 450_000 < 0.10
    P = regular_polygon(7, radius=1)
    web = segment_web(OuterBilliardsSystem(P), 10)
    cov = edge_coverage(web, sub_tile(P, half(7), LEFT))
    ring = min(cov) == 1.0
    ok = close and dt < 60 and ring
    detail = f"A2 cloud {len(cloud)} points in {dt:.1f}s (target 450000 +/- 10%); N=7 level-10 web {len(web)} segments covers D: {ring}"
    assert acceptance(10, ok, detail)


def test_c11_reduced_depth_reports(acceptance):
    probes = {
        "4k1": conjecture_probe_4k1(13, 1),
        "edge": {"periods": edge_chain_periods(16, 2)},
        "scaling": {"dimension": scaling_report(6, 5).dimension},
    }
    reports_ok = all(isinstance(v, dict) and v for v in probes.values())
    webs = [sx_neighborhood_web(d) for d in (5000, 40000, 160000)]
    empty = all(w.inside == 0 for w in webs)
    cov = [round(w.mean_coverage, 3) for w in webs]
    growing = all(a < b for a, b in zip(cov, cov[1:]))
    sides = webs[-1].edge_coverage[:-1]  # the last edge lies on the seed line itself
    formed = min(sides) >= 0.5
    ok = reports_ok and empty and growing and formed
    detail = (
        f"probes report only ({', '.join(probes)}); Sx local web depths 5000/40000/160000: "
        f"inside Sx {[w.inside for w in webs]}, mean edge coverage {cov}, weakest side edge {min(sides):.1f}"
    )
    assert acceptance(11, ok, detail)
