import json

import pytest

from lcl_cli.catalog import CATALOG, GroupSpec, catalog, group_spec, in_psl2_ok, normalize, parse_group
from lcl_cli.catalog.schemas import FieldSpec
from lcl_cli.errors import SpecParseError, UnsupportedParameter
from lcl_cli.groups.moebius import MoebiusElement

PAIR = {
    "label": "pair",
    "field": {"minpoly": [0, 1]},
    "generators": [[[2, 0], [0, "1/2"]], [[1, 1], [1, 2]]],
    "labels": ["g", "h"],
}


def test_catalog_names():
    assert set(CATALOG) == {"hecke", "psl2z-diag", "hilbert-sample", "quat-remark", "custom"}


def test_hecke_spec():
    spec = parse_group("hecke:5")
    assert spec.label == "hecke:5"
    assert spec.labels == ["S", "T"]
    assert spec.field.minpoly == ["-1", "-1", "1"]
    ring, gens, ctx = spec.build()
    assert ctx.size == 2
    assert gens[1].b == ring.gen()
    assert spec.algebra().signature() == (0, 2)


@pytest.mark.parametrize("text", ["hecke:9", "hecke:x", "hecke", "psl2z-diag:7", "nope:1"])
def test_unsupported_parameters(text):
    with pytest.raises(UnsupportedParameter):
        parse_group(text)


@pytest.mark.parametrize("r", [1, 2, 3, 4])
def test_diagonal_groups_have_r_real_factors(r):
    _, gens, ctx = catalog("psl2z-diag", r).build()
    assert (ctx.q, ctx.r) == (0, r)
    assert all(in_psl2_ok(g, g.ring) for g in gens)


def test_hilbert_sample():
    ring, gens, ctx = catalog("hilbert-sample").build()
    assert len(gens) == 3
    assert ctx.r == 2
    assert all(in_psl2_ok(g, ring) for g in gens)


def test_quaternion_remark_group():
    spec = catalog("quat-remark")
    ring, gens, ctx = spec.build()
    assert [p.kind for p in ctx.places] == ["real", "real", "complex"]
    assert all(g.a * g.d - g.b * g.c == 1 for g in gens)
    algebra = spec.algebra()
    assert algebra.signature() == (0, 1)
    assert [flag for _, flag in algebra.ramification()] == [False, True]


def test_round_trip_through_json():
    spec = catalog("quat-remark")
    again = GroupSpec.from_json(spec.to_json())
    assert again.to_dict() == spec.to_dict()
    assert normalize(spec.to_dict()) == spec.to_dict()


def test_normalize_pads_coefficients():
    data = normalize(
        {"field": {"minpoly": [-2, 0, 1]}, "generators": [[[1, [0, 1]], [0, 1]]]}
    )
    assert data["generators"][0][0] == [["1", "0"], ["0", "1"]]
    assert data["labels"] == ["a"]
    assert data["label"] == "custom"


@pytest.mark.parametrize(
    "data",
    [
        {"field": {"minpoly": [0, 1]}},
        {"generators": [[[1, 0], [0, 1]]]},
        {"field": {"minpoly": [0, 1]}, "generators": [[[1, 0]]]},
        {"field": {"minpoly": [0, 1]}, "generators": []},
        {"field": {"minpoly": [1]}, "generators": [[[1, 0], [0, 1]]]},
        {"field": {"minpoly": [0, 1]}, "generators": [[[1, 0], [0, 1]]], "labels": ["a", "b"]},
        {"field": {"minpoly": [0, 1]}, "generators": [[["x", 0], [0, 1]]]},
        {"field": {"minpoly": [0, 1]}, "generators": [[[1, 0], [0, 1]]], "quaternion": {"a": 1}},
        {"field": {"minpoly": [0, 1], "identity": [1]}, "generators": [[[1, 0], [0, 1]]]},
    ],
)
def test_malformed_specs(data):
    with pytest.raises(SpecParseError):
        GroupSpec.from_dict(data)


def test_build_rejects_bad_determinant_and_factors():
    with pytest.raises(SpecParseError):
        GroupSpec.from_dict({**PAIR, "generators": [[[2, 0], [0, 1]]], "labels": ["g"]}).build()
    with pytest.raises(SpecParseError):
        GroupSpec.from_dict({**PAIR, "factors": [3]}).build()
    with pytest.raises(SpecParseError):
        GroupSpec.from_json("{not json")


def test_factor_subset_and_identity_hint():
    spec = GroupSpec.from_dict(
        {
            "field": {"minpoly": [-1, -1, 1], "identity": [-0.618, 0]},
            "generators": [[[1, [0, 1]], [0, 1]]],
            "factors": [1, 1, 0],
        }
    )
    assert spec.factors == [0, 1]
    ring, _, ctx = spec.build()
    assert ring.identity_place.root < 0
    assert ctx.size == 2
    assert spec.algebra() is None


def test_tower_spec_uses_pairs():
    field = FieldSpec.from_dict({"minpoly": [-2, 0, 1], "sqrt_ext": [0, 1]})
    tower = field.build()
    assert tower.degree == 4
    assert field.to_dict()["sqrt_ext"] == ["0", "1"]


def test_spec_file_and_custom_label(tmp_path):
    path = tmp_path / "pair.json"
    path.write_text(json.dumps({k: v for k, v in PAIR.items() if k != "label"}), encoding="utf-8")
    spec = group_spec(spec_file=str(path))
    assert spec.label == "custom:pair.json"
    assert parse_group(f"custom:{path}").labels == ["g", "h"]
    with pytest.raises(SpecParseError):
        group_spec()
    with pytest.raises(SpecParseError):
        group_spec(spec_file=str(tmp_path / "missing.json"))


def test_in_psl2_ok(rationals, golden):
    assert in_psl2_ok(MoebiusElement.from_rows(rationals, [[1, 1], [0, 1]]), rationals)
    assert not in_psl2_ok(MoebiusElement.from_rows(rationals, [[2, 0], [0, "1/2"]]), rationals)
    assert not in_psl2_ok(MoebiusElement.from_rows(golden, [[1, 1], [0, 1]]), rationals)
