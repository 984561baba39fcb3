import csv
import io
import json

import dataclasses

import pytest

from lcl_cli.analysis.arithtest import takeuchi_report
from lcl_cli.analysis.formatters import CSVFormatter, JSONFormatter, SVGFormatter, export, save_report
from lcl_cli.analysis.limitset import furstenberg_samples, moebius_fit, one_point_test, sample_directions
from lcl_cli.catalog import catalog
from lcl_cli.errors import LclError, UnsupportedDimension, UnsupportedParameter


@pytest.fixture(scope="module")
def cloud(hecke5):
    _, gens, ctx = hecke5
    return sample_directions(gens, ctx, max_len=6, labels=["S", "T"], group_label="hecke:5")


def test_csv_columns_and_rows(cloud):
    rows = list(csv.reader(io.StringIO(CSVFormatter().format(cloud))))
    assert rows[0] == ["word", "len", "l_1", "l_2", "dir_1", "dir_2", "interior"]
    assert len(rows) == cloud.size + 1
    assert {row[-1] for row in rows[1:]} <= {"0", "1"}
    first = cloud.samples[0]
    assert rows[1][0] == first.word.format(["S", "T"])
    assert int(rows[1][1]) == len(first.word)


def test_csv_is_deterministic(cloud):
    assert CSVFormatter().format(cloud) == CSVFormatter().format(cloud)


def test_json_cloud(cloud):
    data = json.loads(JSONFormatter().format(cloud))
    assert data["group"] == "hecke:5"
    assert data["factors"] == {"q": 0, "r": 2, "places": [0, 1]}
    assert data["size"] == cloud.size
    assert data["interior"] + data["boundary"] == cloud.size
    assert "timestamp" not in data
    assert "timestamp" in json.loads(JSONFormatter(timestamp=True).format(cloud))


def test_json_verdict_and_report(cloud, hecke5):
    _, gens, ctx = hecke5
    verdict = json.loads(JSONFormatter().format_verdict(one_point_test(cloud), ["S", "T"]))
    assert verdict["verdict"] == "multi-point"
    assert verdict["point"] is None
    assert len(verdict["witnesses"]) == 2

    report = takeuchi_report(gens, ctx, budget=5, product_len=2)
    data = json.loads(JSONFormatter().format_trace_report(report, ["S", "T"]))
    assert data["criterion"] == "takeuchi"
    assert data["verdict"] == "semi-arithmetic-consistent"
    assert data["witnesses"][0]["place_index"] == 1


def test_json_samples_and_fit(diagonal2):
    _, gens, ctx = diagonal2
    samples = furstenberg_samples(gens, ctx, max_len=6)
    data = json.loads(JSONFormatter().format_samples(samples, ["S", "T"]))
    assert len(data["samples"]) == len(samples)
    assert all(len(s["points"]) == 2 for s in data["samples"])
    fit = json.loads(JSONFormatter().format_fit(moebius_fit(samples), ["S", "T"]))
    assert len(fit["maps"]) == 1
    assert len(fit["maps"][0]["matrix"]) == 4


def test_svg_scatter(cloud):
    svg = SVGFormatter(timestamp=False).format(cloud)
    assert svg.startswith("<svg")
    assert svg.count("<circle") == cloud.size
    assert "<polyline" in svg
    assert "hecke:5" in svg
    assert "generated" not in svg
    assert "generated" in SVGFormatter().format(cloud)


def test_svg_needs_two_or_three_factors():
    _, gens, ctx = catalog("hecke", 3).build()
    one_factor = sample_directions(gens, ctx, max_len=4)
    with pytest.raises(UnsupportedDimension):
        SVGFormatter().format(one_factor)


def test_export_and_save(cloud, tmp_path, monkeypatch):
    target = tmp_path / "out" / "cloud.json"
    content = export(cloud, "json", target)
    assert target.read_text(encoding="utf-8") == content
    with pytest.raises(UnsupportedParameter):
        export(cloud, "xml")
    assert issubclass(UnsupportedParameter, LclError)

    monkeypatch.chdir(tmp_path)
    path = save_report("x", "csv")
    assert path.parent.resolve() == tmp_path.resolve()
    assert path.name.startswith("lcl_report_")
    assert path.suffix == ".csv"


def test_svg_caption_is_escaped(cloud):
    labelled = dataclasses.replace(cloud, group_label="a<b&c")
    svg = SVGFormatter(timestamp=False).format(labelled)
    assert "a&lt;b&amp;c" in svg
    assert "a<b&c" not in svg
