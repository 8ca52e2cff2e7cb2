import json
from math import gcd

import numpy as np
import pytest
from hypothesis import given, strategies as st

from artifact.analysis import (
    conjecture_probe_4k1,
    edge_chain_periods,
    edge_class,
    mutated_tile,
    n12_m_periods,
    period_table,
    predicted_period_mutation,
    scaling_report,
    similarity_dimension,
    temporal_scaling_n10,
    tile_census,
)
from artifact.cyclotomic import trig_exact
from artifact.geometry import TileRecord, numeric_vertices, regular_polygon
from artifact.web import WebCloud


@pytest.fixture(scope="module")
def table24():
    return period_table(24)


def test_period_table_n24(table24):
    assert [r.k for r in table24.rows] == list(range(11, 0, -1))
    assert table24.periods() == [24, 12, 8, 3, 24, 4, 24, 6, 8, 12, 24]
    assert ["Y" if f else "N" for f in table24.flags()] == list("NNYYNYNYYNN")


def test_period_table_csv(table24, tmp_path):
    text = table24.to_csv(tmp_path / "t.csv")
    assert text.splitlines()[1].startswith("24,11,24,N")


@pytest.mark.parametrize(
    "N,flags",
    [(12, {4: False, 3: True, 2: True}), (9, {3: True}), (13, {k: False for k in range(1, 7)})],
)
def test_empirical_mutations(N, flags):
    t = {r.k: r.mutated for r in period_table(N).rows}
    for k, f in flags.items():
        assert t[k] == f


def test_gender_mutations_are_detected():
    t = {r.k: r.mutated for r in period_table(14).rows}
    assert t[3] and t[5] and t[1] and not t[2]


@pytest.mark.parametrize("N,k,n", [(24, 8, 12), (24, 9, 16), (24, 6, 8), (24, 4, 12), (24, 3, 16), (9, 3, 12), (12, 3, 8)])
def test_mutated_tiles_are_equilateral(N, k, n):
    T = mutated_tile(N, k)
    V = T.vertices
    assert len(V) == n
    lengths = {(V[i] - V[i - 1]).x ** 2 + (V[i] - V[i - 1]).y ** 2 for i in range(n)}
    assert len(lengths) == 1
    # symmetric under rotation by 2 pi / period about the ideal center
    p = N // gcd(k, N)
    ctx = T.polygon.ctx
    c, s = trig_exact("cos", 2, p, ctx), trig_exact("sin", 2, p, ctx)
    rotated = {v.rotate(c, s, T.center) for v in V}
    assert rotated == set(V)


def test_mutation_prediction_matches_n24(table24):
    assert [predicted_period_mutation(24, r.k) for r in table24.rows] == table24.flags()


def test_mutation_errors():
    with pytest.raises(ValueError):
        mutated_tile(24, 5)
    with pytest.raises(ValueError):
        mutated_tile(24, 10)
    with pytest.raises(ValueError):
        mutated_tile(24, 8, mode="gender")
    g = mutated_tile(14, 3, mode="gender")
    assert g.polygon.n == 7


@pytest.mark.parametrize(
    "N,survivors",
    [(10, [3, 2, 1]), (14, [5, 2, 1]), (24, [10, 6, 2]), (34, [15, 11, 7, 3, 2, 1]), (22, [9, 5, 1]), (17, [13, 5])],
)
def test_edge_class_survivors(N, survivors):
    assert edge_class(N).survivors == survivors


def test_edge_class_json():
    doc = json.loads(edge_class(21).to_json())
    assert doc["residue"] == "8k+5" and doc["flags"]["DS[1]"] is True
    with pytest.raises(ValueError):
        edge_class(7)


@given(st.integers(15, 200))
def test_edge_class_rule(N):
    ec = edge_class(N)
    step = 4 if N % 2 == 0 else 8
    top = N // 2 - 2 if N % 2 == 0 else N - 4
    assert ec.survivors[0] == top
    assert all(k > 0 for k in ec.survivors)
    assert all((top - k) % step == 0 for k in ec.survivors if k > 3)


def test_temporal_scaling_counts():
    t = temporal_scaling_n10(6)
    assert t["d"] == [1, 5, 31, 185, 1111, 6665]
    assert t["p"] == [1, 8, 46, 278, 1666, 9998]


@given(st.integers(4, 30))
def test_temporal_ratios_settle_on_6(n):
    r = temporal_scaling_n10(n)["ratios"]
    assert all(abs(x - 6) < 0.2 for x in r[2:])
    assert all(abs(b - 6) <= abs(a - 6) for a, b in zip(r[1:], r[2:]))


@pytest.mark.parametrize("temporal,N,ref", [(6, 5, 1.2411), (9, 8, 1.2465), (27, 12, 1.2513)])
def test_dimensions(temporal, N, ref):
    assert abs(scaling_report(temporal, N).dimension - ref) < 1e-4


@pytest.mark.parametrize("t,g", [(1, 0.5), (6, 1.5), (6, 0)])
def test_similarity_dimension_errors(t, g):
    with pytest.raises(ValueError):
        similarity_dimension(t, g)


def test_probe_13():
    rep = conjecture_probe_4k1(13, 2)
    assert rep["D"] == [117, 1547] and rep["M"] == [130, 2366]
    assert abs(rep["D_ratios"][0] - 13.22) < 0.01


def test_edge_chain_16():
    assert edge_chain_periods(16, 4) == [8, 32, 456, 2464]


def test_n12_m_periods_regression():
    rep = n12_m_periods(3)
    assert rep["single"] == [48, 504, 15144]
    assert rep["mirror"] == [12, 420, 14148]
    assert rep["combined"] == [60, 924, 29292]


def _boundary(P, m=120):
    V = np.array(numeric_vertices(P))
    t = np.linspace(0, 1, m, endpoint=False)[:, None]
    return np.concatenate([V[j] + t * (V[(j + 1) % len(V)] - V[j]) for j in range(len(V))])


def test_census_synthetic():
    tiles = [regular_polygon(6, center=(0, 0)), regular_polygon(6, center=(5, 1)), regular_polygon(4, center=(2, -4))]
    cloud = WebCloud("tau", 6, 0, np.concatenate([_boundary(P) for P in tiles]))
    templates = [TileRecord("S", 1, "N-gon", regular_polygon(n, apothem=h)) for n, h in ((6, 1), (4, 1), (6, 2))]
    assert tile_census(cloud, templates) == {0: 2, 1: 1, 2: 0}


def test_census_empty():
    cloud = WebCloud("tau", 6, 0, np.zeros((0, 2)))
    assert tile_census(cloud, [TileRecord("S", 1, "N-gon", regular_polygon(6))]) == {0: 0}
