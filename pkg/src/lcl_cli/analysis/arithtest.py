"""Trace-based arithmeticity tests on sampled Gamma^(2)."""

from __future__ import annotations

import itertools
import logging
from typing import Dict, List, Optional, Sequence

from mpmath import mp

from ..algebra.exactnum import (
    AnyPlace,
    Sign,
    certified_sign,
    is_algebraic_integer,
    is_real_at,
    is_totally_real_subfield,
    restriction_kind,
    subfield_generated,
    working_precision,
)
from ..groups.moebius import MoebiusElement
from ..groups.stargroup import GammaNEReport, StarContext, gamma_ne
from ..groups.words import Word, enumerate_words
from .models import RealnessReport, TraceMapReport, TraceReport, TraceWitness

logger = logging.getLogger(__name__)

WITNESS_MARGIN = 1e-9
MAX_WITNESSES_PER_PLACE = 3
PRODUCT_POOL = 12

ARITHMETIC = "arithmetic-consistent"
SEMI_ARITHMETIC = "semi-arithmetic-consistent"
NON_ARITHMETIC = "non-arithmetic"
NON_INTEGRAL = "non-integral"
INDETERMINATE = "indeterminate"


def gamma2_sample(
    gens: Sequence[MoebiusElement],
    word_budget: int,
    product_len: int = 3,
    cap: int = 20000,
) -> List[tuple[Word, MoebiusElement]]:
    """Squares of enumerated words, then products of up to ``product_len`` early squares."""
    if word_budget <= 0:
        return []
    seen = set()
    sample: List[tuple[Word, MoebiusElement]] = []

    def add(word: Word, element: MoebiusElement) -> None:
        if element.is_identity() or element.key() in seen:
            return
        seen.add(element.key())
        sample.append((word, element))

    for word, element in enumerate_words(gens, word_budget, cap):
        add(word * word, element * element)
    pool = sample[:PRODUCT_POOL]
    for size in range(2, product_len + 1):
        for combo in itertools.product(pool, repeat=size):
            word = Word()
            element = MoebiusElement.identity(gens[0].ring)
            for w, x in combo:
                word = word * w
                element = element * x
            add(word, element)
    logger.info("gamma^(2) sample: %d elements (words <= %d)", len(sample), word_budget)
    return sample


def _unique_traces(sample) -> Dict[object, Word]:
    traces: Dict[object, Word] = {}
    for word, element in sample:
        traces.setdefault(element.trace(), word)
    return traces


def _exceeds_two(t, place: AnyPlace) -> Optional[float]:
    """|phi(t)| when it certifiably exceeds 2, else None."""
    if place.is_real or is_real_at(t, place):
        if certified_sign(t * t - 4, place) is not Sign.POSITIVE:
            return None
    dps = t.ring.precision
    with working_precision(dps):
        value = abs(t.evaluate(place, dps))
    return float(value) if value > 2 + WITNESS_MARGIN else None


def _boundedness_witnesses(traces: Dict[object, Word], places: Sequence[AnyPlace]) -> List[TraceWitness]:
    witnesses = []
    for place in places:
        found = 0
        for t, word in traces.items():
            value = _exceeds_two(t, place)
            if value is not None:
                witnesses.append(TraceWitness(word, place.index, value, t))
                found += 1
                if found >= MAX_WITNESSES_PER_PLACE:
                    break
    return witnesses


def _trace_report(
    gens: Sequence[MoebiusElement],
    budget: int,
    product_len: int,
    cap: int,
    identity_place: Optional[AnyPlace],
    skip_kinds: tuple[str, ...],
    criterion: str,
    ctx: Optional[StarContext] = None,
) -> TraceReport:
    sample = gamma2_sample(gens, budget, product_len, cap)
    if not sample:
        return TraceReport(INDETERMINATE, 0, budget, criterion=criterion)
    ring = gens[0].ring
    identity_place = identity_place or ring.identity_place
    traces = _unique_traces(sample)

    non_integral = [
        TraceWitness(word, identity_place.index, 0.0, t)
        for t, word in traces.items()
        if not is_algebraic_integer(t)
    ]
    degree, basis = subfield_generated(traces)
    totally_real = is_totally_real_subfield(basis)
    candidates = ctx.places if ctx is not None else ring.places
    tested = [
        p for p in candidates
        if p != identity_place and restriction_kind(basis, p, identity_place) not in skip_kinds
    ]
    witnesses = _boundedness_witnesses(traces, tested)

    if non_integral:
        verdict = NON_INTEGRAL
    elif criterion == "takeuchi":
        if totally_real:
            verdict = SEMI_ARITHMETIC if witnesses else ARITHMETIC
        else:
            verdict = NON_ARITHMETIC if witnesses else INDETERMINATE
    else:
        if witnesses:
            verdict = NON_ARITHMETIC
        else:
            verdict = INDETERMINATE if totally_real else ARITHMETIC

    logger.info(
        "%s: %d traces, trace field degree %d, %d tested places, verdict %s",
        criterion,
        len(traces),
        degree,
        len(tested),
        verdict,
    )
    return TraceReport(
        verdict=verdict,
        sample_size=len(sample),
        budget=budget,
        trace_field_degree=degree,
        totally_real=totally_real,
        integral=not non_integral,
        non_integral=non_integral,
        witnesses=witnesses,
        tested_places=[p.index for p in tested],
        criterion=criterion,
    )


def takeuchi_report(
    gens: Sequence[MoebiusElement],
    ctx: Optional[StarContext] = None,
    budget: int = 8,
    product_len: int = 3,
    cap: int = 20000,
    identity_place: Optional[AnyPlace] = None,
) -> TraceReport:
    """Integral traces in a totally real field, bounded at every other real embedding.

    Only the places of ``ctx`` (all places when omitted) are tested for boundedness.
    """
    return _trace_report(gens, budget, product_len, cap, identity_place, ("identity",), "takeuchi", ctx)


def maclachlan_reid_report(
    gens: Sequence[MoebiusElement],
    ctx: Optional[StarContext] = None,
    budget: int = 8,
    product_len: int = 3,
    cap: int = 20000,
    identity_place: Optional[AnyPlace] = None,
) -> TraceReport:
    """Kleinian variant: embeddings equal to the identity or its conjugate are not tested."""
    return _trace_report(
        gens, budget, product_len, cap, identity_place, ("identity", "conjugation"), "maclachlan-reid", ctx
    )


def trace_realness(gens: Sequence[MoebiusElement], budget: int = 8, cap: int = 20000) -> RealnessReport:
    """Whether every sampled trace is real at the identity place, with a witness if not."""
    place = gens[0].ring.identity_place
    count = 0
    for word, element in enumerate_words(gens, budget, cap):
        count += 1
        if certified_sign(element.trace(), place, "imag") is not Sign.ZERO:
            return RealnessReport(False, word, count)
    return RealnessReport(True, None, count)


def trace_map_report(
    gens: Sequence[MoebiusElement],
    ctx: StarContext,
    budget: int = 6,
    product_len: int = 2,
    cap: int = 20000,
) -> TraceMapReport:
    """How each factor place acts on the sampled Gamma^(2) trace field."""
    sample = gamma2_sample(gens, budget, product_len, cap)
    identity = ctx.ring.identity_place
    traces = _unique_traces(sample)
    if not traces:
        return TraceMapReport({i: "identity" for i in range(ctx.size)})
    _, basis = subfield_generated(traces)
    kinds: Dict[int, str] = {}
    witnesses: Dict[int, Word] = {}
    dps = ctx.ring.precision
    for i, place in enumerate(ctx.places):
        kind = restriction_kind(basis, place, identity)
        kinds[i] = kind
        if kind != "other":
            continue
        with working_precision(dps):
            for t, word in traces.items():
                here = mp.mpc(t.evaluate(place, dps))
                there = mp.mpc(t.evaluate(identity, dps))
                if min(abs(here - there), abs(here - mp.conj(there))) > WITNESS_MARGIN:
                    witnesses[i] = word
                    break
    predicted = all(k in ("identity", "conjugation") for k in kinds.values())
    return TraceMapReport(kinds, witnesses, predicted)


def factor_reports(
    gens: Sequence[MoebiusElement],
    ctx: StarContext,
    budget: int = 6,
    product_len: int = 2,
    cap: int = 20000,
    reduced: Optional[GammaNEReport] = None,
) -> Dict[int, TraceReport]:
    """Takeuchi (real factor) or Maclachlan-Reid (complex factor) on each nonelementary projection.

    ``reduced`` reuses a factor reduction already computed for ``ctx``.
    """
    if reduced is None:
        reduced = gamma_ne(gens, ctx, budget, cap)
    reports: Dict[int, TraceReport] = {}
    for index in reduced.kept:
        place = ctx.places[index]
        run = takeuchi_report if place.is_real else maclachlan_reid_report
        reports[index] = run(gens, ctx, budget, product_len, cap, identity_place=place)
    return reports
