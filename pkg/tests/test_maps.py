import cmath
import math

import mpmath
import pytest
from hypothesis import assume, given, strategies as st

from artifact.geometry import ExactPoint, regular_polygon
from artifact.maps import (
    DfSystem,
    DualCenterSystem,
    OuterBilliardsSystem,
    SingularityError,
    df_rectify,
    df_step,
    df_unrectify,
    dfx,
    dkhoy_replay,
    dkhoy_step,
    tau_inverse_step,
    tau_step,
    tau_step_exact,
)

angles = st.floats(0, 2 * math.pi, allow_nan=False)
radii = st.floats(1.2, 6.0)


def outside_point(r, t):
    return (mpmath.mpf(r * math.cos(t)), mpmath.mpf(r * math.sin(t)))


@pytest.fixture(scope="module", params=[5, 7, 8, 12])
def tau_sys(request):
    return OuterBilliardsSystem(regular_polygon(request.param, radius=1), digits=30)


@given(radii, angles)
def test_tau_inverse(r, t):
    for N in (5, 8):
        sys = OuterBilliardsSystem(regular_polygon(N, radius=1), digits=30)
        p = outside_point(r, t)
        try:
            q, _ = tau_step(sys, p)
            back, _ = tau_inverse_step(sys, q)
        except SingularityError:
            assume(False)
        assert abs(back[0] - p[0]) < 1e-12 and abs(back[1] - p[1]) < 1e-12


@given(radii, angles)
def test_tau_is_point_reflection(r, t):
    sys = OuterBilliardsSystem(regular_polygon(7, radius=1), digits=30)
    p = outside_point(r, t)
    try:
        q, lab = tau_step(sys, p)
    except SingularityError:
        assume(False)
    vx, vy = sys.numeric_vertices()[lab - 1]
    assert abs((p[0] + q[0]) / 2 - vx) < 1e-12 and abs((p[1] + q[1]) / 2 - vy) < 1e-12


def test_tau_polygon_on_the_left(tau_sys):
    p = (mpmath.mpf(0), mpmath.mpf(-3))
    q, lab = tau_step(tau_sys, p)
    vx, vy = tau_sys.numeric_vertices()[lab - 1]
    # every vertex is weakly left of p -> v
    for wx, wy in tau_sys.numeric_vertices():
        assert (vx - p[0]) * (wy - p[1]) - (vy - p[1]) * (wx - p[0]) >= -1e-12


def test_tau_exact_matches_numeric(tau_sys):
    ctx = tau_sys.polygon.ctx
    p = ExactPoint.of(0, -3, ctx)
    for _ in range(20):
        q, lab = tau_step_exact(tau_sys, p)
        _, lab_num = tau_step(tau_sys, p.numeric(30))
        assert lab == lab_num
        p = q


def test_tau_singularities():
    sys = OuterBilliardsSystem(regular_polygon(6), digits=30)
    with pytest.raises(SingularityError):
        tau_step(sys, (mpmath.mpf(0), mpmath.mpf(0)))
    V = sys.exact_vertices
    on_edge = V[0] * 2 - V[1]  # on the extension of edge V1 -> V0
    with pytest.raises(SingularityError):
        tau_step_exact(sys, on_edge)


@given(st.floats(-0.99, 0.99), st.floats(-0.99, 0.99))
def test_df_stays_in_box(x, y):
    sys = DfSystem(7, digits=30)
    s = (mpmath.mpf(x), mpmath.mpf(y))
    for _ in range(30):
        try:
            s, atom = df_step(sys, s)
        except SingularityError:
            return
        assert -1 <= s[0] < 1 and -1 <= s[1] < 1 and atom in (-1, 0, 1)


def test_df_rectified_rotation():
    sys = DfSystem(9, digits=30)
    s = (mpmath.mpf("0.1"), mpmath.mpf("0.2"))
    t, atom = df_step(sys, s)
    assert atom == 0
    u, v = df_rectify(sys, s), df_rectify(sys, t)
    zu, zv = complex(u[0], u[1]), complex(v[0], v[1])
    assert abs(zv - zu * cmath.exp(-2j * math.pi / 9)) < 1e-12


def test_df_rectify_round_trip_exact():
    sys = DfSystem(22)
    ctx = sys.ctx
    s = (ctx.rational(1) / 3, ctx.rational(-2) / 7)
    back = df_unrectify(sys, df_rectify(sys, s))
    assert back[0] == s[0] and back[1] == s[1]


def test_df_exact_replay_tracks_numeric():
    sys = DfSystem(22)
    ctx = sys.ctx
    s_exact = (ctx.rational(1) / 3, ctx.rational(-2) / 7)
    s_num = (mpmath.mpf(1) / 3, mpmath.mpf(-2) / 7)
    for _ in range(40):
        s_num, atom = df_step(sys, s_num)
        s_exact = dfx(sys, s_exact, atom)
    assert abs(float(s_exact[0]) - float(s_num[0])) < 1e-12


@given(st.floats(-3, 3), st.floats(0.01, 3), st.floats(-3, 3), st.floats(0.01, 3))
def test_dkhoy_isometry_on_half_plane(a, b, c, d):
    sys = DualCenterSystem(14, digits=30)
    z1, z2 = mpmath.mpc(a, b), mpmath.mpc(c, d)
    w1, s1 = dkhoy_step(sys, z1)
    w2, s2 = dkhoy_step(sys, z2)
    assert s1 == s2 == 1
    assert abs(abs(w1 - w2) - abs(z1 - z2)) < 1e-12


def test_dkhoy_real_axis_seed_and_replay():
    sys = DualCenterSystem(11)
    ctx = sys.ctx
    z = ctx.rational(-3) / 2
    w, s = dkhoy_step(sys, mpmath.mpc(-1.5, 0))
    assert s == 0
    assert abs(complex(dkhoy_replay(sys, z, s)) - complex(w)) < 1e-14


def test_dkhoy_near_axis_is_singular():
    with pytest.raises(SingularityError):
        dkhoy_step(DualCenterSystem(11, digits=30), mpmath.mpc(0.5, 1e-35))
