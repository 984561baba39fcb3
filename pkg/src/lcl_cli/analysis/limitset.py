"""Sampling of projective limit sets, limit cones and boundary maps."""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from typing import List, Optional, Sequence

import sympy
from mpmath import mp

from ..algebra.exactnum import working_precision
from ..errors import DegenerateSamples, EmptyCloud, NotCertified, NotLoxodromic, SharedFixedPoint
from ..groups.moebius import (
    DEFAULT_ORDER_BOUND,
    MoebiusElement,
    apply,
    fixed_points,
    is_infinite,
    length_from_trace,
    schottky_certificate,
)
from ..groups.stargroup import (
    INTERIOR_THRESHOLD,
    Direction,
    StarContext,
    star_embed,
    translation_direction,
)
from ..groups.words import enumerate_words
from .models import (
    ConvexityReport,
    DalboReport,
    DirectionCloud,
    DirectionSample,
    FittedMap,
    FurstenbergSample,
    MoebiusFit,
    OnePointVerdict,
)

logger = logging.getLogger(__name__)


def sample_directions(
    gens: Sequence[MoebiusElement],
    ctx: StarContext,
    max_len: int = 8,
    cap: int = 20000,
    labels: Optional[List[str]] = None,
    group_label: str = "",
    order_bound: int = DEFAULT_ORDER_BOUND,
    threshold: float = INTERIOR_THRESHOLD,
) -> DirectionCloud:
    """Directions of every enumerated element with some positive component length."""
    cloud = DirectionCloud(ctx, labels=list(labels or []), group_label=group_label, max_len=max_len)
    for word, element in enumerate_words(gens, max_len, cap):
        iso = star_embed(element, ctx, word, order_bound)
        direction = translation_direction(iso, threshold)
        if direction is not None:
            cloud.samples.append(DirectionSample(word, iso.lengths, direction))
    logger.info(
        "sampled %d directions (%d interior) up to length %d",
        cloud.size,
        cloud.interior_count,
        max_len,
    )
    return cloud


def one_point_test(cloud: DirectionCloud, tol: float = 1e-9, include_boundary: bool = False) -> OnePointVerdict:
    """One point iff the sup-norm diameter of the (interior) directions is at most ``tol``."""
    points = cloud.samples if include_boundary else cloud.interior_points
    if not points:
        raise EmptyCloud("no directions to test")
    diameter = mp.zero
    witnesses = ()
    for i in range(len(points[0].direction.coords)):
        lo = min(points, key=lambda s: s.direction.coords[i])
        hi = max(points, key=lambda s: s.direction.coords[i])
        spread = hi.direction.coords[i] - lo.direction.coords[i]
        if spread > diameter:
            diameter, witnesses = spread, (lo.word, hi.word)
    one_point = diameter <= tol
    return OnePointVerdict(
        one_point=bool(one_point),
        point=points[0].direction if one_point else None,
        diameter=float(diameter),
        witnesses=() if one_point else witnesses,
        sample_size=len(points),
    )


def _certified_power(g, h, ctx: StarContext, power_budget: int) -> int:
    power = 1
    for place in ctx.places:
        try:
            certificate = schottky_certificate(g, h, place, power_budget)
        except (NotLoxodromic, SharedFixedPoint) as exc:
            raise NotCertified(str(exc)) from exc
        if certificate is None:
            raise NotCertified(f"no ping-pong certificate at place {place.index}")
        power = max(power, certificate.power)
    return power


def _numeric_powers(m, count: int):
    out = [m]
    for _ in range(count - 1):
        x = out[-1]
        out.append(
            (
                x[0] * m[0] + x[1] * m[2],
                x[0] * m[1] + x[1] * m[3],
                x[2] * m[0] + x[3] * m[2],
                x[2] * m[1] + x[3] * m[3],
            )
        )
    return out


def _product_trace(x, y):
    return x[0] * y[0] + x[1] * y[2] + x[2] * y[1] + x[3] * y[3]


def dalbo_deviation(
    g: MoebiusElement,
    h: MoebiusElement,
    ctx: StarContext,
    grid_n: int = 10,
    power_budget: int = 8,
    require_certificate: bool = True,
) -> DalboReport:
    """max over 1 <= m, n <= grid_n of |l(G^m H^n) - m l(G) - n l(H)| per factor."""
    power = _certified_power(g, h, ctx, power_budget) if require_certificate else 1
    big_g, big_h = g ** power, h ** power
    dps = g.ring.precision
    per_factor, table = [], []
    for place in ctx.places:
        with working_precision(dps):
            gs = _numeric_powers(big_g.evaluate(place, dps), grid_n)
            hs = _numeric_powers(big_h.evaluate(place, dps), grid_n)
            lg = length_from_trace(gs[0][0] + gs[0][3], dps)
            lh = length_from_trace(hs[0][0] + hs[0][3], dps)
            rows = []
            for m in range(1, grid_n + 1):
                row = []
                for n in range(1, grid_n + 1):
                    length = length_from_trace(_product_trace(gs[m - 1], hs[n - 1]), dps)
                    row.append(float(abs(length - m * lg - n * lh)))
                rows.append(row)
        table.append(rows)
        per_factor.append(max(max(r) for r in rows))
    logger.info("dal'bo deviation (power %d, grid %d): %s", power, grid_n, per_factor)
    return DalboReport(power, grid_n, per_factor, table)


def _normalize(lengths) -> Direction:
    total = mp.fsum(lengths)
    coords = tuple(x / total for x in lengths)
    return Direction(coords, min(coords) > INTERIOR_THRESHOLD)


def convexity_probe(
    g: MoebiusElement,
    h: MoebiusElement,
    ctx: StarContext,
    ratio: Fraction = Fraction(1),
    k_max: int = 8,
    power_budget: int = 8,
    require_certificate: bool = True,
) -> ConvexityReport:
    """Directions of G^(k m) H^(k n) against the mixture of L(G) and (n/m) L(H)."""
    ratio = Fraction(ratio)
    if ratio < 0:
        raise ValueError("ratio must be nonnegative")
    m, n = ratio.denominator, ratio.numerator
    power = _certified_power(g, h, ctx, power_budget) if require_certificate else 1
    big_g, big_h = g ** power, h ** power
    dps = g.ring.precision
    with working_precision(dps):
        gs = [big_g.evaluate(p, dps) for p in ctx.places]
        hs = [big_h.evaluate(p, dps) for p in ctx.places]
        lg = [length_from_trace(x[0] + x[3], dps) for x in gs]
        lh = [length_from_trace(x[0] + x[3], dps) for x in hs]
        predicted = _normalize([a + ratio.numerator * b / ratio.denominator for a, b in zip(lg, lh)])
        directions, distances = [], []
        for k in range(1, k_max + 1):
            lengths = []
            for x, y in zip(gs, hs):
                gk = _numeric_powers(x, k * m)[-1]
                hk = _numeric_powers(y, k * n)[-1] if n else (1, 0, 0, 1)
                lengths.append(length_from_trace(_product_trace(gk, hk), dps))
            direction = _normalize(lengths)
            directions.append(direction)
            distances.append(float(direction.distance(predicted)))
    return ConvexityReport((n, m), predicted, distances, directions)


def furstenberg_samples(
    gens: Sequence[MoebiusElement],
    ctx: StarContext,
    max_len: int = 8,
    cap: int = 20000,
    order_bound: int = DEFAULT_ORDER_BOUND,
) -> List[FurstenbergSample]:
    """Componentwise attractive fixed points of every totally loxodromic element."""
    samples = []
    for word, element in enumerate_words(gens, max_len, cap):
        iso = star_embed(element, ctx, word, order_bound)
        if iso.is_totally_loxodromic:
            samples.append(FurstenbergSample(word, tuple(fixed_points(element, p)[0] for p in ctx.places)))
    logger.info("collected %d boundary samples", len(samples))
    return samples


def chordal_distance(z, w):
    if is_infinite(z) and is_infinite(w):
        return mp.zero
    if is_infinite(z):
        return 2 / mp.sqrt(1 + abs(w) ** 2)
    if is_infinite(w):
        return 2 / mp.sqrt(1 + abs(z) ** 2)
    return 2 * abs(z - w) / mp.sqrt((1 + abs(z) ** 2) * (1 + abs(w) ** 2))


def _to_standard(z1, z2, z3):
    """Matrix sending z1, z2, z3 to 0, 1, infinity."""
    if is_infinite(z1):
        return (0, z2 - z3, 1, -z3)
    if is_infinite(z2):
        return (1, -z1, 1, -z3)
    if is_infinite(z3):
        return (1, -z1, 0, z2 - z1)
    return (z2 - z3, -z1 * (z2 - z3), z2 - z1, -z3 * (z2 - z1))


def three_point_map(src: Sequence, dst: Sequence):
    """The fractional-linear map with src[k] -> dst[k]."""
    a, b, c, d = _to_standard(*src)
    e, f, g, h = _to_standard(*dst)
    # inverse of (e f; g h) up to scale, times (a b; c d)
    p, q, r, s = h, -f, -g, e
    return (p * a + q * c, p * b + q * d, r * a + s * c, r * b + s * d)


def _conj(z):
    return z if is_infinite(z) else mp.conj(z)


def _anchors(points: List, limit: int = 40) -> tuple[int, int, int]:
    distinct: List[int] = []
    for i, z in enumerate(points):
        if all(chordal_distance(z, points[j]) > mp.mpf(10) ** (-(mp.dps // 2)) for j in distinct):
            distinct.append(i)
        if len(distinct) >= limit:
            break
    if len(distinct) < 3:
        raise DegenerateSamples(f"only {len(distinct)} distinct anchor points")
    best, best_score = None, None
    for triple in itertools.combinations(distinct, 3):
        score = min(chordal_distance(points[i], points[j]) for i, j in itertools.combinations(triple, 2))
        if best_score is None or score > best_score:
            best, best_score = triple, score
    return best


def moebius_fit(samples: Sequence[FurstenbergSample], dps: int = 60) -> MoebiusFit:
    """Fit a boundary map from the first factor to each other factor and validate it."""
    samples = list(samples)
    if not samples:
        raise DegenerateSamples("no samples")
    with working_precision(dps):
        first = [s.points[0] for s in samples]
        anchors = _anchors(first)
        held_out = [k for k in range(len(samples)) if k not in anchors]
        maps = []
        for i in range(1, len(samples[0].points)):
            best = None
            for conjugated in (False, True):
                src = [_conj(first[k]) if conjugated else first[k] for k in anchors]
                dst = [samples[k].points[i] for k in anchors]
                matrix = three_point_map(src, dst)
                det = matrix[0] * matrix[3] - matrix[1] * matrix[2]
                if det == 0:
                    raise DegenerateSamples("fitted map is singular")
                residual = mp.zero
                for k in held_out:
                    z = _conj(first[k]) if conjugated else first[k]
                    residual = max(residual, chordal_distance(apply(matrix, z), samples[k].points[i]))
                if best is None or residual < best.residual:
                    best = FittedMap(i, matrix, conjugated, float(residual))
            maps.append(best)
            logger.info("factor %d: residual %.3e (conjugated=%s)", i, best.residual, best.conjugated)
    return MoebiusFit(maps, tuple(samples[k].word for k in anchors), len(samples))


def cone_hull(cloud: DirectionCloud) -> dict:
    """Sampled hull of the directions: interval, planar polygon, or pairwise intervals."""
    if not cloud.samples:
        raise EmptyCloud("no directions")
    size = cloud.context.size
    coords = [s.direction.as_floats() for s in cloud.samples]
    if size == 1:
        return {"kind": "point", "value": [1.0]}
    if size == 2:
        xs = [c[0] for c in coords]
        return {"kind": "interval", "min": min(xs), "max": max(xs)}
    if size == 3:
        points = {sympy.Point2D(c[1] + c[2] / 2, c[2] * 3 ** 0.5 / 2) for c in coords}
        hull = sympy.convex_hull(*points)
        vertices = getattr(hull, "vertices", None) or getattr(hull, "points", None) or [hull]
        return {"kind": "polygon", "vertices": [[float(v.x), float(v.y)] for v in vertices]}
    pairs = {}
    for i, j in itertools.combinations(range(size), 2):
        ratios = [c[i] / (c[i] + c[j]) for c in coords if c[i] + c[j] > 0]
        pairs[f"{i + 1},{j + 1}"] = [min(ratios), max(ratios)] if ratios else None
    return {"kind": "pairwise", "intervals": pairs}


def merge(a: DirectionCloud, b: DirectionCloud) -> DirectionCloud:
    """Union of two clouds over the same context, keyed by word."""
    if a.context != b.context:
        raise ValueError("clouds live in different star contexts")
    seen = {s.word for s in a.samples}
    merged = DirectionCloud(a.context, list(a.samples), a.labels or b.labels, a.group_label or b.group_label,
                            max(a.max_len, b.max_len))
    merged.samples.extend(s for s in b.samples if s.word not in seen)
    return merged
