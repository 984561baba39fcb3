import pytest

from lcl_cli.errors import AllFactorsDropped, EmptyGeneratorSet
from lcl_cli.groups.moebius import IsometryKind, IsometryType, MoebiusElement
from lcl_cli.groups.stargroup import (
    StarContext,
    _component_violations,
    find_totally_loxodromic,
    gamma_ne,
    is_diagonal,
    jordan_projection,
    nonelementary_evidence,
    normalized_traces,
    star_embed,
    translation_direction,
)
from lcl_cli.groups.words import Word


def _word(text):
    return Word.parse(text, ["S", "T"])


def test_default_context_of_hecke_group(hecke5):
    ring, _, ctx = hecke5
    assert (ctx.q, ctx.r, ctx.size) == (0, 2, 2)
    assert ctx.factor_label(1) == "R2"
    assert ctx.to_dict() == {"q": 0, "r": 2, "places": [0, 1]}
    assert ctx.subset([1]).places == (ring.places[1],)
    with pytest.raises(ValueError):
        StarContext(ring, ())


def test_direction_of_t4s(hecke5):
    _, gens, ctx = hecke5
    word = _word("T^4 S")
    iso = star_embed(word.evaluate(gens), ctx, word)
    assert iso.is_totally_loxodromic
    assert iso.kind == "loxodromic"
    direction = translation_direction(iso)
    assert direction.interior
    assert float(direction.coords[0]) == pytest.approx(0.73212, abs=1e-4)
    assert float(direction.coords[1]) == pytest.approx(0.26788, abs=1e-4)


def test_direction_of_t5s(hecke5):
    _, gens, ctx = hecke5
    word = _word("T^5 S")
    direction = translation_direction(star_embed(word.evaluate(gens), ctx, word))
    assert direction.as_floats() == pytest.approx((0.67447, 0.32553), abs=1e-4)


def test_mixed_element_lies_on_boundary(hecke5):
    _, gens, ctx = hecke5
    word = _word("T^2 S")
    iso = star_embed(word.evaluate(gens), ctx, word)
    assert [t.kind for t in iso.types] == [IsometryKind.HYPERBOLIC, IsometryKind.ELLIPTIC_INFINITE]
    assert iso.kind == "mixed"
    direction = translation_direction(iso)
    assert direction.coords == (1, 0)
    assert not direction.interior
    projection = jordan_projection(iso)
    assert projection["tags"] == ("", "elliptic")
    assert projection["lambda"][0] == iso.lengths[0] / 2


def test_elliptic_element_has_no_direction(hecke5):
    _, gens, ctx = hecke5
    s = gens[0]
    assert translation_direction(star_embed(s, ctx)) is None


def test_component_violations():
    parabolic = IsometryType(IsometryKind.PARABOLIC)
    hyperbolic = IsometryType(IsometryKind.HYPERBOLIC)
    order3 = IsometryType(IsometryKind.ELLIPTIC_FINITE, order=3)
    order5 = IsometryType(IsometryKind.ELLIPTIC_FINITE, order=5)
    assert _component_violations([parabolic, parabolic]) == []
    assert len(_component_violations([parabolic, hyperbolic])) == 1
    assert len(_component_violations([order3, order5])) == 1
    assert len(_component_violations([order3, hyperbolic])) == 1
    assert _component_violations([order5, order5]) == []


def test_strict_embedding_accepts_honest_elements(hecke5):
    _, gens, ctx = hecke5
    s, t = gens
    for g in (s, t, t * s):
        iso = star_embed(g, ctx)
        assert iso.violations == ()


def test_truncated_order_bound_never_raises(hecke5):
    _, gens, ctx = hecke5
    s, t = gens
    iso = star_embed(t * s, ctx, order_bound=3)
    assert all(x.kind is IsometryKind.ELLIPTIC_INFINITE for x in iso.types)


def test_is_diagonal(diagonal2, hecke5):
    assert is_diagonal(diagonal2[1])
    assert not is_diagonal(hecke5[1])


def test_find_totally_loxodromic(hecke5):
    _, gens, ctx = hecke5
    iso = find_totally_loxodromic(gens, ctx, word_budget=6)
    assert iso is not None
    assert iso.is_totally_loxodromic


def test_gamma_ne_keeps_both_hecke_factors(hecke5):
    _, gens, ctx = hecke5
    report = gamma_ne(gens, ctx, evidence_budget=5)
    assert report.kept == [0, 1]
    assert report.dropped == []


def test_gamma_ne_drops_compact_factor(quat_remark):
    ring, gens, ctx = quat_remark
    assert [p.kind for p in ctx.places] == ["real", "real", "complex"]
    report = gamma_ne(gens, ctx, evidence_budget=3)
    assert report.kept == [0, 1]
    assert report.dropped == [2]
    assert report.context.size == 2


def test_gamma_ne_with_only_elliptic_generators(rationals):
    s = MoebiusElement.from_rows(rationals, [[0, 1], [-1, 0]])
    ctx = StarContext.default(rationals)
    with pytest.raises(AllFactorsDropped):
        gamma_ne([s], ctx)
    with pytest.raises(EmptyGeneratorSet):
        gamma_ne([], ctx)


def test_nonelementary_evidence_for_diagonal_group(diagonal2):
    _, gens, ctx = diagonal2
    report = nonelementary_evidence(gens, ctx, budget=5)
    assert report.all_certified
    assert report.violations == []
    assert [f.label for f in report.factors] == ["R1", "R2"]


def test_normalized_traces_are_nonnegative(diagonal2):
    _, gens, ctx = diagonal2
    s, t = gens
    traces = normalized_traces(t.inverse() * s, ctx)
    assert all(x >= 0 for x in traces)
    assert len(traces) == 2


def test_directions_survive_factor_reduction(quat_remark):
    ring, gens, ctx = quat_remark
    reduced = gamma_ne(gens, ctx, evidence_budget=3)
    word = reduced.evidence[0]
    element = word.evaluate(gens)
    full = star_embed(element, ctx, word, strict=False)
    kept = star_embed(element, reduced.context, word, strict=False)
    assert kept.lengths == tuple(full.lengths[i] for i in reduced.kept)


@pytest.mark.parametrize("text", ["T^4 S", "T^5 S", "T^4 S T^4 S"])
def test_direction_is_invariant_under_conjugation_and_powers(hecke5, text):
    _, gens, ctx = hecke5
    s, t = gens
    g = _word(text).evaluate(gens)
    reference = translation_direction(star_embed(g, ctx)).as_floats()
    for w in (s, t, t * s * t, t.inverse() * s):
        conjugated = translation_direction(star_embed(g.conjugate_by(w), ctx))
        assert conjugated.as_floats() == pytest.approx(reference, abs=1e-12)
    for n in (2, 3):
        powered = translation_direction(star_embed(g ** n, ctx))
        assert powered.as_floats() == pytest.approx(reference, abs=1e-12)


def test_nonelementary_evidence_for_hecke_group(hecke5):
    _, gens, ctx = hecke5
    report = nonelementary_evidence(gens, ctx, budget=5)
    assert [f.label for f in report.factors] == ["R1", "R2"]
    assert report.all_certified
    assert report.violations == []


def test_single_parabolic_has_no_nonelementary_evidence(rationals):
    p = MoebiusElement.from_rows(rationals, [[1, 1], [0, 1]])
    ctx = StarContext.default(rationals)
    report = nonelementary_evidence([p], ctx, budget=4)
    assert len(report.factors) == 1
    assert not report.factors[0].certified
    assert not report.all_certified
    assert report.violations == []


def test_single_involution_has_no_totally_loxodromic_element(rationals):
    s = MoebiusElement.from_rows(rationals, [[0, 1], [-1, 0]])
    ctx = StarContext.default(rationals)
    assert find_totally_loxodromic([s], ctx) is None
    with pytest.raises(EmptyGeneratorSet):
        find_totally_loxodromic([], ctx)
