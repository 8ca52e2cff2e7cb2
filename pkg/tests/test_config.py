import pytest
from hypothesis import given, strategies as st

from artifact.config import DIGITS_ENV, RunConfig, default_digits, parse_crop, parse_interval

configs = st.builds(
    RunConfig,
    n=st.integers(3, 40),
    map=st.sampled_from(["tau", "df", "dkhoy"]),
    depth=st.integers(0, 10**6),
    samples=st.integers(1, 10**4),
    digits=st.integers(16, 200),
    augment=st.booleans(),
    segments=st.booleans(),
    point_size=st.floats(0.1, 5, allow_nan=False),
    out=st.text("abc._/", max_size=12),
)


@given(configs)
def test_round_trip(cfg):
    assert RunConfig.loads(cfg.dumps()) == cfg


def test_file_round_trip(tmp_path):
    cfg = RunConfig(n=7, map="tau", segments=True)
    cfg.save(tmp_path / "run.cfg")
    assert RunConfig.load(tmp_path / "run.cfg") == cfg


@pytest.mark.parametrize(
    "text", ["n=2", "map=billiard", "bogus=1", "augment=maybe", "samples=0", "interval=3:3", "crop=1,2"]
)
def test_rejects(text):
    with pytest.raises(ValueError):
        RunConfig.loads(text)


def test_comments_and_blank_lines():
    assert RunConfig.loads("# hello\n\nn=9\n").n == 9


def test_interval_and_crop():
    assert parse_interval("-2:-1") == (-2.0, -1.0)
    assert parse_crop("default") is None
    assert parse_crop("0,1,-1,2") == (0.0, 1.0, -1.0, 2.0)


def test_digits_env(monkeypatch):
    monkeypatch.delenv(DIGITS_ENV, raising=False)
    assert default_digits() == 40
    monkeypatch.setenv(DIGITS_ENV, "64")
    assert default_digits() == 64
    monkeypatch.setenv(DIGITS_ENV, "8")
    with pytest.raises(ValueError):
        default_digits()


def test_run_web_small_tau():
    from artifact.config import run_web

    cloud, P = run_web(RunConfig(n=7, map="tau", depth=50, samples=20, interval="-3:-1.2"))
    assert P.n == 7 and len(cloud) > 0 and cloud.crop is not None


def test_polygon_frames():
    from artifact.config import polygon_in_frame

    assert float(polygon_in_frame(6, "side").side) == pytest.approx(1.0)
    assert float(polygon_in_frame(6, "radius").radius) == pytest.approx(1.0)
    with pytest.raises(ValueError):
        polygon_in_frame(6, "diameter")
