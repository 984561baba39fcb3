import json
import re

import pytest
from typer.testing import CliRunner

from lcl_cli import USAGE_EXIT, WITNESS_EXIT, app
from lcl_cli.config import PRECISION_ENV

runner = CliRunner()

PAIR = {
    "label": "pair",
    "field": {"minpoly": [0, 1]},
    "generators": [[[2, 0], [0, "1/2"]], [[1, 1], [1, 2]]],
    "labels": ["g", "h"],
}


@pytest.fixture(autouse=True)
def isolated(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    monkeypatch.delenv(PRECISION_ENV, raising=False)


@pytest.fixture
def pair_file(tmp_path):
    path = tmp_path / "pair.json"
    path.write_text(json.dumps(PAIR), encoding="utf-8")
    return path


def _distinct(output: str) -> int:
    return int(re.search(r"distinct interior directions: (\d+)", output).group(1))


def test_banner_without_command():
    result = runner.invoke(app, [])
    assert result.exit_code == 0
    assert "lcl --help" in result.output


def test_version():
    result = runner.invoke(app, ["version"])
    assert result.exit_code == 0
    assert "lcl CLI Information" in result.output


def test_catalog_listing():
    result = runner.invoke(app, ["catalog"])
    assert result.exit_code == 0
    for name in ("hecke", "psl2z-diag", "quat-remark"):
        assert name in result.output


def test_catalog_group_info_and_spec(tmp_path):
    out = tmp_path / "hecke5.json"
    result = runner.invoke(app, ["catalog", "--group", "hecke:5", "--out", str(out)])
    assert result.exit_code == 0
    assert "algebra signature" in result.output
    assert json.loads(out.read_text(encoding="utf-8"))["label"] == "hecke:5"


def test_unsupported_catalog_parameter():
    result = runner.invoke(app, ["catalog", "--group", "hecke:9000"])
    assert result.exit_code == 1
    assert "UnsupportedParameter" in result.output


def test_one_point_for_diagonal_group():
    result = runner.invoke(app, ["one-point", "--group", "psl2z-diag:2", "--max-len", "6"])
    assert result.exit_code == 0
    assert "one-point" in result.output


def test_multi_point_exits_with_witness_code(tmp_path):
    out = tmp_path / "verdict.json"
    result = runner.invoke(app, ["one-point", "--group", "hecke:5", "--max-len", "6", "--out", str(out)])
    assert result.exit_code == WITNESS_EXIT
    assert "multi-point" in result.output
    assert json.loads(out.read_text(encoding="utf-8"))["verdict"] == "multi-point"


def test_directions_csv_is_deterministic(tmp_path):
    first, second = tmp_path / "a.csv", tmp_path / "b.csv"
    result = runner.invoke(app, ["directions", "--group", "hecke:5", "--max-len", "8", "--out", str(first)])
    assert result.exit_code == 0
    assert _distinct(result.output) >= 5
    runner.invoke(app, ["directions", "--group", "hecke:5", "--max-len", "8", "--out", str(second)])
    assert first.read_text(encoding="utf-8") == second.read_text(encoding="utf-8")
    assert first.read_text(encoding="utf-8").startswith("word,len,l_1,l_2,dir_1,dir_2,interior")


def test_directions_table_for_diagonal_group():
    result = runner.invoke(app, ["directions", "--group", "psl2z-diag:2", "--max-len", "5"])
    assert result.exit_code == 0
    assert _distinct(result.output) == 1


def test_takeuchi_witness():
    result = runner.invoke(app, ["takeuchi", "--group", "hecke:5", "--max-len", "6"])
    assert result.exit_code == WITNESS_EXIT
    assert "semi-arithmetic-consistent" in result.output
    assert "witness:" in result.output


def test_takeuchi_arithmetic_group(tmp_path):
    out = tmp_path / "report.json"
    result = runner.invoke(app, ["takeuchi", "--group", "hecke:3", "--max-len", "4", "--out", str(out)])
    assert result.exit_code == 0
    assert json.loads(out.read_text(encoding="utf-8"))["verdict"] == "arithmetic-consistent"


def test_classify_single_word():
    result = runner.invoke(app, ["classify", "--group", "hecke:5", "--word", "T^4 S"])
    assert result.exit_code == 0
    assert "loxodromic" in result.output


def test_classify_rejects_unknown_label():
    result = runner.invoke(app, ["classify", "--group", "hecke:5", "--word", "U"])
    assert result.exit_code == USAGE_EXIT
    assert USAGE_EXIT != WITNESS_EXIT


def test_schottky_and_zariski_for_pair(pair_file, tmp_path):
    out = tmp_path / "cert.json"
    result = runner.invoke(app, ["schottky", "--spec", str(pair_file), "--out", str(out)])
    assert result.exit_code == 0
    assert "certified at power" in result.output
    assert "R1" in json.loads(out.read_text(encoding="utf-8"))["certificates"]

    result = runner.invoke(app, ["zariski", "--spec", str(pair_file)])
    assert result.exit_code == 0
    assert "span dimension 3 of 3" in result.output


def test_schottky_without_certificate(pair_file):
    result = runner.invoke(app, ["schottky", "--spec", str(pair_file), "--power-budget", "1"])
    assert result.exit_code == 1
    assert "NotCertified" in result.output


def test_dalbo_on_pair(pair_file, tmp_path):
    out = tmp_path / "dalbo.json"
    result = runner.invoke(app, ["dalbo", "--spec", str(pair_file), "--grid", "5", "--k-max", "4", "--out", str(out)])
    assert result.exit_code == 0
    data = json.loads(out.read_text(encoding="utf-8"))
    assert data["grid"] == 5
    assert len(data["distances"]) == 4


def test_export_svg(tmp_path):
    out = tmp_path / "cloud.svg"
    result = runner.invoke(
        app, ["export-svg", "--group", "hecke:5", "--max-len", "5", "--out", str(out), "--no-timestamp"]
    )
    assert result.exit_code == 0
    text = out.read_text(encoding="utf-8")
    assert text.startswith("<svg")
    assert "generated" not in text


def test_export_svg_rejects_one_factor():
    result = runner.invoke(app, ["export-svg", "--group", "hecke:3", "--max-len", "4"])
    assert result.exit_code == 1
    assert "UnsupportedDimension" in result.output


def test_fit_circle_for_diagonal_group():
    result = runner.invoke(app, ["fit-circle", "--group", "psl2z-diag:2", "--max-len", "6"])
    assert result.exit_code == 0
    assert "fits a circle" in result.output


def test_trace_maps():
    result = runner.invoke(app, ["trace-maps", "--group", "hecke:5", "--max-len", "4"])
    assert result.exit_code == 0
    assert "more than one point" in result.output


def test_config_init(tmp_path):
    path = tmp_path / "conf" / "config.json"
    result = runner.invoke(app, ["config", "--init", "--config", str(path)])
    assert result.exit_code == 0
    assert json.loads(path.read_text(encoding="utf-8"))["numerics"]["precision"] == 60
    assert "sampling.max_len" in result.output


def test_missing_group_is_an_error():
    result = runner.invoke(app, ["directions"])
    assert result.exit_code == 1
    assert "SpecParseError" in result.output


def test_unknown_option_is_a_usage_error():
    result = runner.invoke(app, ["directions", "--bogus"])
    assert result.exit_code == USAGE_EXIT


def test_unknown_export_format_is_an_error(tmp_path):
    out = tmp_path / "cloud.xml"
    result = runner.invoke(
        app, ["directions", "--group", "psl2z-diag:2", "--max-len", "3", "--format", "xml", "--out", str(out)]
    )
    assert result.exit_code == 1
    assert "UnsupportedParameter" in result.output
    assert not out.exists()


def test_unknown_format_from_config_file(tmp_path):
    path = tmp_path / "config.json"
    path.write_text(json.dumps({"output": {"format": "xml"}}), encoding="utf-8")
    out = tmp_path / "cloud.out"
    result = runner.invoke(
        app, ["directions", "--group", "psl2z-diag:2", "--max-len", "3", "--out", str(out), "--config", str(path)]
    )
    assert result.exit_code == 1
    assert "UnsupportedParameter" in result.output


def test_factors_for_hecke_group():
    result = runner.invoke(app, ["factors", "--group", "hecke:5", "--max-len", "4"])
    assert result.exit_code == 0
    assert "R1" in result.output
    assert "R2" in result.output
