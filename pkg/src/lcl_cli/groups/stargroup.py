"""Star embeddings into products of hyperbolic planes and spaces.

An element g over K (or K(sqrt a)) is sent to (phi_1(g), ..., phi_{q+r}(g)),
one component per place of the context.  This module classifies the
components, reads off translation directions and collects evidence that each
factor projection is nonelementary.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Iterable, List, Optional, Sequence

from mpmath import mp

from ..algebra.exactnum import AnyPlace, working_precision
from ..errors import AllFactorsDropped, ComponentTypeViolation, EmptyGeneratorSet, NotLoxodromic, SharedFixedPoint
from .moebius import (
    DEFAULT_ORDER_BOUND,
    IsometryKind,
    IsometryType,
    MoebiusElement,
    SchottkyCertificate,
    classify,
    schottky_certificate,
    trace_normalized,
    translation_length,
)
from .words import Word, enumerate_words

logger = logging.getLogger(__name__)

INTERIOR_THRESHOLD = 1e-15


@dataclass(frozen=True)
class StarContext:
    """Ordered factor places: the identity place's block (complex or real) comes first."""

    ring: object
    places: tuple

    def __post_init__(self):
        if not self.places:
            raise ValueError("a star context needs at least one factor")

    @classmethod
    def default(cls, ring) -> "StarContext":
        return cls(ring, tuple(ring.places))

    @property
    def q(self) -> int:
        return sum(1 for p in self.places if not p.is_real)

    @property
    def r(self) -> int:
        return sum(1 for p in self.places if p.is_real)

    @property
    def size(self) -> int:
        return len(self.places)

    def subset(self, indices: Iterable[int]) -> "StarContext":
        keep = sorted(set(indices))
        return StarContext(self.ring, tuple(self.places[i] for i in keep))

    def factor_label(self, i: int) -> str:
        place = self.places[i]
        return f"{'R' if place.is_real else 'C'}{i + 1}"

    def to_dict(self) -> dict:
        return {"q": self.q, "r": self.r, "places": [p.index for p in self.places]}


@dataclass(frozen=True)
class Direction:
    """Normalized translation-length vector; interior when every entry is positive."""

    coords: tuple
    interior: bool

    def distance(self, other: "Direction"):
        return max(abs(x - y) for x, y in zip(self.coords, other.coords))

    def as_floats(self) -> tuple[float, ...]:
        return tuple(float(x) for x in self.coords)


@dataclass(frozen=True)
class ProductIsometry:
    word: Word
    element: MoebiusElement
    types: tuple[IsometryType, ...]
    lengths: tuple
    violations: tuple[str, ...] = ()

    @property
    def kind(self) -> str:
        kinds = set()
        for t in self.types:
            if t.is_loxodromic:
                kinds.add("loxodromic")
            elif t.is_elliptic:
                kinds.add("elliptic")
            else:
                kinds.add(t.kind.value)
        return kinds.pop() if len(kinds) == 1 else "mixed"

    @property
    def is_totally_loxodromic(self) -> bool:
        return all(t.is_loxodromic for t in self.types)


def _component_violations(types: Sequence[IsometryType]) -> list[str]:
    problems = []
    parabolic = [t.kind is IsometryKind.PARABOLIC for t in types]
    if any(parabolic) and not all(parabolic):
        problems.append("parabolic component next to a non-parabolic one")
    orders = {t.order for t in types if t.kind is IsometryKind.ELLIPTIC_FINITE}
    finite = [t.kind is IsometryKind.ELLIPTIC_FINITE for t in types]
    if any(finite) and (not all(finite) or len(orders) > 1):
        problems.append(f"finite-order elliptic component with mismatched factors {[t.label for t in types]}")
    return problems


def star_embed(
    g: MoebiusElement,
    ctx: StarContext,
    word: Optional[Word] = None,
    order_bound: int = DEFAULT_ORDER_BOUND,
    strict: bool = True,
) -> ProductIsometry:
    """Classify every component; component types must agree as for arithmetic subgroups."""
    types = tuple(classify(g, place, order_bound) for place in ctx.places)
    lengths = tuple(translation_length(g, place, t) for place, t in zip(ctx.places, types))
    problems = _component_violations(types)
    if problems and strict:
        raise ComponentTypeViolation(f"{word or g!r}: {'; '.join(problems)}")
    return ProductIsometry(word or Word(), g, types, lengths, tuple(problems))


def translation_direction(iso: ProductIsometry, threshold: float = INTERIOR_THRESHOLD) -> Optional[Direction]:
    with working_precision(iso.element.ring.precision):
        total = mp.fsum(iso.lengths)
        if total == 0:
            return None
        coords = tuple(x / total for x in iso.lengths)
    return Direction(coords, min(coords) > threshold)


def jordan_projection(iso: ProductIsometry) -> dict:
    """Hyperbolic Jordan parts x_i = l_i / 2 and the elliptic/parabolic components as tags."""
    return {
        "lambda": tuple(x / 2 for x in iso.lengths),
        "tags": tuple(
            "elliptic" if t.is_elliptic else "parabolic" if t.kind is IsometryKind.PARABOLIC else ""
            for t in iso.types
        ),
    }


def is_diagonal(gens: Sequence[MoebiusElement], ctx: Optional[StarContext] = None) -> bool:
    """Every generator entry is rational, so every Galois map fixes it."""
    return all(x.is_rational() for g in gens for x in g.entries)


def _embedded_words(gens, ctx, max_len, cap=20000, order_bound=DEFAULT_ORDER_BOUND, strict=True):
    for word, element in enumerate_words(gens, max_len, cap):
        yield star_embed(element, ctx, word, order_bound, strict)


def _lox_power_products(candidates: List[ProductIsometry], ctx: StarContext, order_bound: int, tries: int = 4):
    """g^m h^n over pairs loxodromic in complementary factors."""
    for i, x in enumerate(candidates):
        for y in candidates[i + 1:]:
            covered = [a.is_loxodromic or b.is_loxodromic for a, b in zip(x.types, y.types)]
            if not all(covered):
                continue
            for m in range(1, tries + 1):
                for n in range(1, tries + 1):
                    word = (x.word ** m) * (y.word ** n)
                    product = (x.element ** m) * (y.element ** n)
                    iso = star_embed(product, ctx, word, order_bound, strict=False)
                    if iso.is_totally_loxodromic:
                        return iso
    return None


def find_totally_loxodromic(
    gens: Sequence[MoebiusElement],
    ctx: StarContext,
    word_budget: int = 8,
    cap: int = 20000,
    order_bound: int = DEFAULT_ORDER_BOUND,
) -> Optional[ProductIsometry]:
    if not gens:
        raise EmptyGeneratorSet("a group needs at least one generator")
    partial: List[ProductIsometry] = []
    for iso in _embedded_words(gens, ctx, word_budget, cap, order_bound, strict=False):
        if iso.is_totally_loxodromic:
            logger.info("totally loxodromic element %s", iso.word.format())
            return iso
        if any(t.is_loxodromic for t in iso.types) and len(partial) < 24:
            partial.append(iso)
    return _lox_power_products(partial, ctx, order_bound)


@dataclass
class GammaNEReport:
    context: StarContext
    generators: List[MoebiusElement]
    kept: List[int]
    dropped: List[int]
    evidence: dict = field(default_factory=dict)


def gamma_ne(
    gens: Sequence[MoebiusElement],
    ctx: StarContext,
    evidence_budget: int = 6,
    cap: int = 20000,
    order_bound: int = DEFAULT_ORDER_BOUND,
) -> GammaNEReport:
    """Drop every factor whose projection shows no loxodromic element within the budget."""
    if not gens:
        raise EmptyGeneratorSet("a group needs at least one generator")
    evidence: dict[int, Word] = {}
    for word, element in enumerate_words(gens, evidence_budget, cap):
        for i, place in enumerate(ctx.places):
            if i not in evidence and classify(element, place, order_bound).is_loxodromic:
                evidence[i] = word
        if len(evidence) == ctx.size:
            break
    kept = sorted(evidence)
    dropped = [i for i in range(ctx.size) if i not in evidence]
    if not kept:
        raise AllFactorsDropped("no factor shows a loxodromic element within the evidence budget")
    if dropped:
        logger.info("dropping elliptic-only factors %s", [ctx.factor_label(i) for i in dropped])
    return GammaNEReport(ctx.subset(kept), list(gens), kept, dropped, evidence)


@dataclass
class FactorEvidence:
    index: int
    label: str
    certificate: Optional[SchottkyCertificate] = None
    words: tuple = ()

    @property
    def certified(self) -> bool:
        return self.certificate is not None


@dataclass
class NonelementaryReport:
    factors: List[FactorEvidence]
    violations: List[tuple[Word, str]] = field(default_factory=list)

    @property
    def all_certified(self) -> bool:
        return all(f.certified for f in self.factors)


def _certify_factor(candidates: List[tuple[Word, MoebiusElement]], place: AnyPlace, power_budget: int):
    for i, (wg, g) in enumerate(candidates):
        for wh, h in candidates[i + 1:]:
            try:
                certificate = schottky_certificate(g, h, place, power_budget)
            except (SharedFixedPoint, NotLoxodromic):
                continue
            if certificate is not None:
                return certificate, (wg, wh)
    return None, ()


def nonelementary_evidence(
    gens: Sequence[MoebiusElement],
    ctx: StarContext,
    budget: int = 6,
    power_budget: int = 8,
    cap: int = 20000,
    order_bound: int = DEFAULT_ORDER_BOUND,
    candidates_per_factor: int = 12,
) -> NonelementaryReport:
    """Per factor a ping-pong certificate or nothing, plus forbidden mixed types seen on the way."""
    if not gens:
        raise EmptyGeneratorSet("a group needs at least one generator")
    candidates: dict[int, list[tuple[Word, MoebiusElement]]] = {i: [] for i in range(ctx.size)}
    violations: list[tuple[Word, str]] = []
    for iso in _embedded_words(gens, ctx, budget, cap, order_bound, strict=False):
        for problem in iso.violations:
            violations.append((iso.word, problem))
        for i, t in enumerate(iso.types):
            if t.is_loxodromic and len(candidates[i]) < candidates_per_factor:
                candidates[i].append((iso.word, iso.element))

    factors = []
    for i, place in enumerate(ctx.places):
        certificate, words = _certify_factor(candidates[i], place, power_budget)
        factors.append(FactorEvidence(i, ctx.factor_label(i), certificate, words))
        logger.info("factor %s: %s", ctx.factor_label(i), "certified" if certificate else "no evidence")
    return NonelementaryReport(factors, violations)


def normalized_traces(g: MoebiusElement, ctx: StarContext) -> tuple:
    """Component traces after sign normalization, evaluated at each factor."""
    return tuple(trace_normalized(g, place).evaluate(place) for place in ctx.places)
