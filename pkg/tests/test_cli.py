import json

import pytest

from artifact.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    return code, capsys.readouterr()


def test_family_json(capsys):
    code, out = run(capsys, "family", "--n", "14")
    doc = json.loads(out.out)
    assert code == 0 and doc["N"] == 14
    assert sum(1 for t in doc["tiles"] if t["kind"] == "S" and t["side"] == "left") == 6


def test_family_3_has_no_m(capsys):
    code, out = run(capsys, "family", "--n", "3")
    assert code == 0 and not [t for t in json.loads(out.out)["tiles"] if t["kind"].startswith("M")]


def test_family_svg(tmp_path, capsys):
    code, _ = run(capsys, "family", "--n", "22", "--overlay-sub", "9", "--svg", str(tmp_path / "f.svg"))
    assert code == 0 and (tmp_path / "f.svg").read_text().startswith("<?xml")


@pytest.mark.parametrize("argv", [["family", "--n", "2"], ["nonsense"], ["minpoly", "--n", "7"], ["web", "--map", "df", "--segments"]])
def test_usage_errors(capsys, argv):
    assert run(capsys, *argv)[0] == 2


def test_scales_carry_precision(capsys):
    code, out = run(capsys, "--digits", "25", "scales", "--n", "7")
    doc = json.loads(out.out)
    assert doc["precision_digits"] == 25 and len(doc["genscale"]) >= 20


def test_minpoly(capsys):
    code, out = run(capsys, "minpoly", "--n", "12", "--kind", "genscale")
    doc = json.loads(out.out)
    assert doc["minimal_polynomial"] == "1 - 14*x + x^2" and doc["class"] == "unit"


def test_orbit_and_period(capsys, tmp_path):
    code, out = run(capsys, "orbit", "--n", "7", "--x", "0.3", "--y", "-1.4", "--steps", "7", "--out", str(tmp_path / "o"))
    assert code == 0 and json.loads(out.out)["labels"] == [2, 4, 6, 1, 3, 5, 7]
    code, out = run(capsys, "period", "--n", "24", "--k", "8")
    assert code == 0 and json.loads(out.out)["period"] == 3


def test_web_config_round_trip(tmp_path, capsys):
    cfg, a, b = tmp_path / "run.cfg", tmp_path / "a.pweb", tmp_path / "b.pweb"
    argv = ["web", "--n", "14", "--depth", "200", "--samples", "50", "--interval", "-2:-1"]
    assert run(capsys, *argv, "--out", str(a), "--emit-config", str(cfg))[0] == 0
    text = cfg.read_text().replace(f"out={a}", f"out={b}")
    cfg.write_text(text)
    assert run(capsys, "web", "--config", str(cfg))[0] == 0
    assert a.read_bytes() == b.read_bytes()


def test_web_depth_zero(capsys):
    code, out = run(capsys, "web", "--depth", "0", "--samples", "7", "--no-augment", "--crop", "-10,10,-1,1")
    assert code == 0 and json.loads(out.out)["points"] == 7


def test_web_resource_guard(capsys):
    assert run(capsys, "web", "--depth", "200000", "--samples", "1000")[0] == 3


def test_web_segments(tmp_path, capsys):
    code, out = run(capsys, "web", "--n", "7", "--map", "tau", "--segments", "--level", "3", "--svg", str(tmp_path / "s.svg"))
    assert code == 0 and json.loads(out.out)["segments"] > 14


def test_classify(capsys):
    code, out = run(capsys, "classify", "--n", "22")
    assert json.loads(out.out)["survivors"] == [9, 5, 1]


@pytest.mark.parametrize("suite", ["scaling", "fields", "dimensions", "edges", "mx"])
def test_verify_passes(capsys, suite):
    code, out = run(capsys, "verify", suite, "--n-max", "12")
    assert code == 0 and json.loads(out.out)["ok"]


def test_verify_sx_reports_strict_tolerance_failure(capsys):
    code, out = run(capsys, "verify", "sx")
    checks = {c["name"]: c["ok"] for c in json.loads(out.out)["checks"]}
    assert code == 1
    assert checks["ratio_printed_precision"] and checks["polynomial_round_trip"] and not checks["ratio_relative_1e-7"]


def test_verify_unknown_suite(capsys):
    assert run(capsys, "verify", "nope")[0] == 2


def test_probe_reports(capsys):
    code, out = run(capsys, "probe", "edge-chain", "--n", "16", "--depth", "3")
    assert code == 0 and json.loads(out.out)["periods"] == [8, 32, 456]


def test_census_cli(tmp_path, capsys):
    run(capsys, "web", "--n", "14", "--depth", "300", "--samples", "50", "--out", str(tmp_path / "c.pweb"))
    code, out = run(capsys, "census", "--cloud", str(tmp_path / "c.pweb"), "--tiles", "D")
    assert code == 0 and out.out.startswith("tile,count")


def test_render_cli(tmp_path, capsys):
    assert run(capsys, "render", "--family", "9", "--svg", str(tmp_path / "r.svg"))[0] == 0
    assert run(capsys, "render", "--svg", str(tmp_path / "r.svg"))[0] == 2


def test_probe_sx_web(tmp_path, capsys):
    code, out = run(capsys, "probe", "sx-web", "--orbit-depth", "3000", "--svg", str(tmp_path / "sx.svg"))
    doc = json.loads(out.out)
    assert code == 0 and doc["inside_sx"] == 0 and len(doc["edge_coverage"]) == 11
    assert (tmp_path / "sx.svg").exists()
