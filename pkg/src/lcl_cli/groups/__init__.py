"""Moebius transformations, words in generators and star embeddings."""

from .moebius import (
    Disk,
    IsometryKind,
    IsometryType,
    MoebiusElement,
    SchottkyCertificate,
    classify,
    fixed_points,
    schottky_certificate,
    trace_normalized,
    translation_length,
    zariski_span_dim,
)
from .stargroup import (
    Direction,
    ProductIsometry,
    StarContext,
    find_totally_loxodromic,
    gamma_ne,
    jordan_projection,
    nonelementary_evidence,
    star_embed,
    translation_direction,
)
from .words import Word, enumerate_words

__all__ = [
    "Disk",
    "IsometryKind",
    "IsometryType",
    "MoebiusElement",
    "SchottkyCertificate",
    "classify",
    "fixed_points",
    "schottky_certificate",
    "trace_normalized",
    "translation_length",
    "zariski_span_dim",
    "Direction",
    "ProductIsometry",
    "StarContext",
    "find_totally_loxodromic",
    "gamma_ne",
    "jordan_projection",
    "nonelementary_evidence",
    "star_embed",
    "translation_direction",
    "Word",
    "enumerate_words",
]
