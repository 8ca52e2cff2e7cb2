import math
import struct
from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, strategies as st
from hypothesis.extra.numpy import arrays

from artifact.geometry import LEFT, first_family, half, regular_polygon, sub_tile
from artifact.maps import DfSystem, DualCenterSystem, OuterBilliardsSystem
from artifact.web import (
    ResourceGuardError,
    SeedInterval,
    WebCloud,
    augment_symmetry,
    cloud_to_csv,
    crop,
    dedup,
    default_crop,
    edge_coverage,
    edge_skip,
    fold_to_window,
    initial_segments,
    read_cloud,
    segment_web,
    symmetry_images,
    web_points,
    windowed_tau_web,
    write_cloud,
)


def test_seed_interval_samples_include_endpoints():
    pts = SeedInterval.real(-2, -1, 5).points()
    assert pts[0].tolist() == [-2, 0] and pts[-1].tolist() == [-1, 0] and len(pts) == 5


@pytest.mark.parametrize("args", [((0, 0), (0, 0), 3), ((0, 0), (1, 0), 0)])
def test_seed_interval_rejects(args):
    with pytest.raises(ValueError):
        SeedInterval(*args)


def test_depth_zero_is_seeds():
    c = web_points(DualCenterSystem(14), [SeedInterval.real(-2, -1, 11)], 0)
    assert len(c) == 11 and np.allclose(c.points[:, 1], 0)


@pytest.mark.parametrize("sys", [DualCenterSystem(14), DfSystem(7), OuterBilliardsSystem(regular_polygon(7, radius=1))])
def test_clouds_ignore_seed_order(sys):
    if sys.kind == "tau":
        a = SeedInterval((-3.0, -1.2), (-2.0, -1.2), 50)
        b = SeedInterval((2.0, -1.3), (3.0, -1.3), 50)
    else:
        a, b = SeedInterval.real(-0.9, -0.5, 50), SeedInterval.real(0.2, 0.6, 50)
    c1 = web_points(sys, [a, b], 200)
    c2 = web_points(sys, [b, a], 200)
    assert np.array_equal(c1.points, c2.points)


def test_resource_guard():
    with pytest.raises(ResourceGuardError):
        web_points(DualCenterSystem(14), [SeedInterval.real(-2, -1, 1000)], 1000, max_points=10_000)


@given(arrays(np.float64, st.tuples(st.integers(0, 40), st.just(2)), elements=st.floats(-10, 10)))
def test_dedup_idempotent_and_sorted(P):
    once = dedup(P)
    assert np.array_equal(dedup(once), once)
    keys = [tuple(r) for r in once.tolist()]
    assert keys == sorted(set(keys))


def test_cloud_file_round_trip(tmp_path):
    c = web_points(DualCenterSystem(14), [SeedInterval.real(-2, -1, 20)], 50)
    path = tmp_path / "c.pweb"
    write_cloud(c, path)
    raw = path.read_bytes()
    magic, version, code, N, depth, count = struct.unpack_from("<4sHBIIQ", raw)
    assert (magic, version, code, N, depth, count) == (b"PWEB", 1, 2, 14, 50, len(c))
    back = read_cloud(path)
    assert np.array_equal(back.points, c.points) and back.kind == "dkhoy"
    cloud_to_csv(c, tmp_path / "c.csv")
    assert (tmp_path / "c.csv").read_text().splitlines()[0] == "x,y"


def test_read_cloud_rejects_garbage(tmp_path):
    p = tmp_path / "bad"
    p.write_bytes(b"NOPE" + bytes(30))
    with pytest.raises(ValueError):
        read_cloud(p)
    c = WebCloud("df", 7, 3, np.zeros((4, 2)))
    write_cloud(c, p)
    p.write_bytes(p.read_bytes()[:-8])
    with pytest.raises(ValueError):
        read_cloud(p)


def test_crop_is_strict():
    c = WebCloud("df", 7, 0, np.array([[0.0, 0.0], [1.0, 0.5], [0.5, 0.5]]))
    out = crop(c, (0.0, 1.0, 0.0, 1.0))
    assert out.points.tolist() == [[0.5, 0.5]] and out.crop == (0.0, 1.0, 0.0, 1.0)


@pytest.mark.parametrize("kind,N", [("dkhoy", 14), ("df", 7)])
def test_augment_is_symmetric(kind, N):
    sys = DualCenterSystem(N) if kind == "dkhoy" else DfSystem(N)
    c = web_points(sys, [SeedInterval.real(-0.9, -0.4, 30)], 100)
    a = augment_symmetry(c)
    have = {tuple(r) for r in a.points.tolist()}
    for img in [c.points] + symmetry_images(kind, N, c.points):
        assert {tuple(r) for r in dedup(img).tolist()} <= have


def test_tau_augment_needs_polygon():
    c = WebCloud("tau", 7, 0, np.zeros((1, 2)))
    with pytest.raises(ValueError):
        augment_symmetry(c)


def test_invariance_one_more_step():
    """F maps the depth-d cloud into the depth-(d+1) cloud."""
    from scipy.spatial import cKDTree

    sys = DualCenterSystem(14)
    seeds = [SeedInterval.real(-2, -1, 40)]
    c = web_points(sys, seeds, 30)
    c1 = web_points(sys, seeds, 31)
    z = c.points[:, 0] + 1j * c.points[:, 1]
    s = np.sign(c.points[:, 1])
    w = np.exp(-2j * math.pi / 14) * (z - s)
    img = np.column_stack([w.real, w.imag])
    d, _ = cKDTree(c1.points).query(img)
    assert np.quantile(d, 0.99) < 1e-9


def test_default_crop_dkhoy():
    assert default_crop("dkhoy", 14)[1] == 0.5


# -- exact segment webs


def _min_parallel_gap(A):
    d = A[:, 2:] - A[:, :2]
    ang = np.mod(np.arctan2(d[:, 1], d[:, 0]), math.pi)
    key = np.round(ang, 6) % round(math.pi, 6)
    gaps = []
    for a in np.unique(key):
        m = key == a
        t = float(np.mean(ang[m]))
        n = np.array([-math.sin(t), math.cos(t)])
        off = np.sort(A[m, :2] @ n)
        df = np.diff(off)
        df = df[df > 1e-9]
        if len(df):
            gaps.append(df.min())
    return min(gaps)


@pytest.mark.parametrize("N", [3, 4, 6])
def test_lattice_webs_have_no_accumulation(N):
    sys = OuterBilliardsSystem(regular_polygon(N, radius=1))
    gaps = [_min_parallel_gap(segment_web(sys, lev).array()) for lev in (2, 6, 12)]
    assert min(gaps) > 0.5 and max(gaps) - min(gaps) < 1e-9


def test_segment_web_grows_and_starts_from_edges():
    sys = OuterBilliardsSystem(regular_polygon(7, radius=1))
    w0 = segment_web(sys, 0)
    assert len(w0) == len(initial_segments(sys))
    sizes = [len(segment_web(sys, lev)) for lev in (1, 3, 5)]
    assert sizes == sorted(sizes) and sizes[0] > len(w0)


def test_segment_web_guard():
    sys = OuterBilliardsSystem(regular_polygon(7, radius=1))
    with pytest.raises(ResourceGuardError):
        segment_web(sys, 10, max_segments=20)


@pytest.mark.parametrize("k,skip", [(9, 1), (8, 2), (5, 5), (3, 7), (2, 8)])
def test_edge_skip_n22(k, skip):
    P = regular_polygon(22, radius=1)
    fam = first_family(P)
    assert edge_skip(OuterBilliardsSystem(P), fam.get("S", k, LEFT), "left") == skip


def test_retrograde_skip_n17():
    P = regular_polygon(17, radius=1)
    sys = OuterBilliardsSystem(P)
    fam = first_family(P)
    assert edge_skip(sys, fam.get("S", 7, LEFT), "left") == 2
    assert edge_skip(sys, fam.get("S", 7, LEFT), "right") == 30


def test_edge_coverage_of_d_for_n7():
    P = regular_polygon(7, radius=1)
    sys = OuterBilliardsSystem(P)
    D = sub_tile(P, half(7), LEFT)
    cov = edge_coverage(segment_web(sys, 10), D)
    assert len(cov) == 14 and min(cov) == 1.0


@given(st.integers(0, 6), st.booleans())
def test_fold_to_window_undoes_symmetries(j, mirror):
    P = regular_polygon(7, radius=1, center=(Fraction(1, 2), Fraction(-1, 4)))
    c = np.array([2.0, 1.5])
    a = 2 * math.pi * j / 7
    rel = np.array([[0.01, -0.02], [0.0, 0.03]]) + c - [0.5, -0.25]
    rot = rel @ np.array([[math.cos(a), math.sin(a)], [-math.sin(a), math.cos(a)]])
    if mirror:
        rot = rot * [-1.0, 1.0]
    back = fold_to_window(rot + [0.5, -0.25], P, c, 0.05)
    for w in rel + [0.5, -0.25]:
        assert np.abs(back - w).max(axis=1).min() < 1e-12


def test_windowed_web_matches_full_cloud_inside_window():
    P = regular_polygon(7, radius=1)
    sys = OuterBilliardsSystem(P)
    starts = np.column_stack([np.linspace(-3, -1.5, 30), np.full(30, float(-P.apothem) + 1e-9)])
    intervals = [SeedInterval(tuple(s), tuple(s + [1e-15, 0]), 1) for s in starts]
    seeds = np.concatenate([iv.points() for iv in intervals])
    w = windowed_tau_web(sys, seeds, 300, (-2.0, -0.5), 0.5, batch=7)
    full = web_points(sys, intervals, 300)
    direct = crop(full, w.crop).points
    keys = {tuple(p) for p in w.points}
    assert all(tuple(p) in keys for p in direct)
    assert len(w.points) >= len(direct)
