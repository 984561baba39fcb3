import pytest

from lcl_cli.algebra.exactnum import NumberField
from lcl_cli.analysis.arithtest import (
    ARITHMETIC,
    INDETERMINATE,
    NON_ARITHMETIC,
    NON_INTEGRAL,
    SEMI_ARITHMETIC,
    factor_reports,
    gamma2_sample,
    maclachlan_reid_report,
    takeuchi_report,
    trace_map_report,
    trace_realness,
)
from lcl_cli.catalog import catalog
from lcl_cli.groups.moebius import MoebiusElement
from lcl_cli.groups.stargroup import gamma_ne


def _hecke(m):
    return catalog("hecke", m).build()


@pytest.fixture(scope="module")
def gaussian_sample(gaussian):
    i = gaussian.gen()
    return [
        MoebiusElement.from_rows(gaussian, [[0, 1], [-1, 0]]),
        MoebiusElement.from_rows(gaussian, [[1, 1], [0, 1]]),
        MoebiusElement.from_rows(gaussian, [[1, i], [0, 1]]),
    ]


@pytest.fixture(scope="module")
def quartic_sample():
    field = NumberField([-1, 0, 1, 0, 1], identity=complex(0, 1.272))
    beta = field.gen()
    return field, [
        MoebiusElement.from_rows(field, [[0, 1], [-1, 0]]),
        MoebiusElement.from_rows(field, [[1, beta], [0, 1]]),
    ]


def test_gamma2_sample_has_squares_and_products(hecke5):
    _, gens, _ = hecke5
    sample = gamma2_sample(gens, 3, product_len=2)
    keys = [element.key() for _, element in sample]
    assert len(keys) == len(set(keys))
    assert not any(element.is_identity() for _, element in sample)
    assert all(word.evaluate(gens) == element for word, element in sample)
    assert gamma2_sample(gens, 0) == []


def test_hecke5_is_semi_arithmetic(hecke5):
    _, gens, ctx = hecke5
    report = takeuchi_report(gens, ctx, budget=5, product_len=2)
    assert report.verdict == SEMI_ARITHMETIC
    assert report.totally_real
    assert report.integral
    assert report.trace_field_degree == 2
    assert report.tested_places == [1]
    assert report.has_witness
    assert all(w.place_index == 1 and w.abs_value > 2 for w in report.witnesses)


def test_known_witness_value_for_hecke5(hecke5):
    _, gens, _ = hecke5
    square = (gens[1] ** 4 * gens[0]) ** 2
    ring = gens[0].ring
    assert square.trace() == 16 * ring.gen() + 14
    assert float(abs(square.trace().evaluate(ring.places[1]))) == pytest.approx(4.1115, abs=1e-3)


def test_hecke7_witness_at_negative_place():
    ring, gens, ctx = _hecke(7)
    report = takeuchi_report(gens, ctx, budget=4, product_len=2)
    assert report.verdict == SEMI_ARITHMETIC
    assert ring.places[2].root < -1.2
    assert 2 in {w.place_index for w in report.witnesses}


@pytest.mark.parametrize("m", [3, 4, 6])
def test_arithmetic_hecke_groups(m):
    _, gens, ctx = _hecke(m)
    report = takeuchi_report(gens, ctx, budget=4, product_len=2)
    assert report.verdict == ARITHMETIC
    assert report.trace_field_degree == 1
    assert not report.has_witness


def test_non_integral_traces(rationals):
    g = MoebiusElement.from_rows(rationals, [[2, 0], [0, "1/2"]])
    h = MoebiusElement.from_rows(rationals, [[1, "1/2"], [0, 1]])
    report = takeuchi_report([g, h], budget=3, product_len=2)
    assert report.verdict == NON_INTEGRAL
    assert not report.integral
    assert report.non_integral


def test_empty_sample_is_indeterminate(hecke5):
    _, gens, _ = hecke5
    assert takeuchi_report(gens, budget=0).verdict == INDETERMINATE


def test_gaussian_sample_is_arithmetic(gaussian_sample):
    report = maclachlan_reid_report(gaussian_sample, budget=3, product_len=2)
    assert report.verdict == ARITHMETIC
    assert report.totally_real is False
    assert report.criterion == "maclachlan-reid"


def test_quartic_sample_is_not_arithmetic(quartic_sample):
    field, gens = quartic_sample
    assert not field.identity_place.is_real
    report = maclachlan_reid_report(gens, budget=3, product_len=2)
    assert report.verdict == NON_ARITHMETIC
    assert report.totally_real
    assert all(field.places[w.place_index].is_real for w in report.witnesses)
    beta = field.gen()
    witness = 9 * beta * beta - 2
    assert max(abs(float(witness.evaluate(p))) for p in field.places if p.is_real) == pytest.approx(3.562, abs=1e-2)


def test_trace_realness(hecke5, gaussian_sample):
    assert trace_realness(hecke5[1], budget=4).all_real
    report = trace_realness(gaussian_sample, budget=2)
    assert not report.all_real
    assert report.witness is not None


def test_trace_maps(hecke5, diagonal2):
    _, gens, ctx = hecke5
    report = trace_map_report(gens, ctx, budget=4)
    assert report.kinds == {0: "identity", 1: "other"}
    assert 1 in report.witnesses
    assert not report.predicted_one_point

    _, gens, ctx = diagonal2
    report = trace_map_report(gens, ctx, budget=4)
    assert set(report.kinds.values()) == {"identity"}
    assert report.predicted_one_point


def test_factor_reports_on_quaternion_units(quat_remark):
    _, gens, ctx = quat_remark
    reports = factor_reports(gens, ctx, budget=4)
    assert sorted(reports) == [0, 1]
    assert all(r.verdict == ARITHMETIC for r in reports.values())


@pytest.mark.parametrize("budget", [2, 3])
def test_doubling_the_budget_keeps_trace_field_and_witnesses(hecke5, budget):
    _, gens, ctx = hecke5
    small = takeuchi_report(gens, ctx, budget=budget, product_len=2)
    large = takeuchi_report(gens, ctx, budget=2 * budget, product_len=2)
    assert small.trace_field_degree == large.trace_field_degree == 2
    assert small.totally_real and large.totally_real
    assert large.has_witness or not small.has_witness
    assert large.verdict == SEMI_ARITHMETIC
    if small.has_witness:
        assert small.verdict == large.verdict


def test_context_limits_tested_places(hecke5):
    _, gens, ctx = hecke5
    report = takeuchi_report(gens, ctx.subset([0]), budget=5, product_len=2)
    assert report.tested_places == []
    assert not report.has_witness
    assert report.verdict == ARITHMETIC
    assert takeuchi_report(gens, ctx.subset([1]), budget=5, product_len=2).tested_places == [1]


def test_factor_reports_reuse_a_given_reduction(quat_remark):
    _, gens, ctx = quat_remark
    reduced = gamma_ne(gens, ctx, 4)
    reused = factor_reports(gens, ctx, budget=4, reduced=reduced)
    fresh = factor_reports(gens, ctx, budget=4)
    assert sorted(reused) == sorted(fresh) == reduced.kept
    assert {i: r.verdict for i, r in reused.items()} == {i: r.verdict for i, r in fresh.items()}
