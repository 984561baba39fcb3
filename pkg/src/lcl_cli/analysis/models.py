"""Data models for limit-set and arithmeticity reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Optional

from ..groups.stargroup import Direction, StarContext
from ..groups.words import Word


@dataclass(frozen=True)
class DirectionSample:
    """A translation direction with the word it came from."""

    word: Word
    lengths: tuple
    direction: Direction

    @property
    def interior(self) -> bool:
        return self.direction.interior


@dataclass
class DirectionCloud:
    """Sampled translation directions of a group, keyed by word."""

    context: StarContext
    samples: List[DirectionSample] = field(default_factory=list)
    labels: List[str] = field(default_factory=list)
    group_label: str = ""
    max_len: int = 0

    @property
    def size(self) -> int:
        return len(self.samples)

    @property
    def interior_points(self) -> List[DirectionSample]:
        return [s for s in self.samples if s.interior]

    @property
    def boundary_points(self) -> List[DirectionSample]:
        return [s for s in self.samples if not s.interior]

    @property
    def interior_count(self) -> int:
        return len(self.interior_points)

    @property
    def boundary_count(self) -> int:
        return self.size - self.interior_count

    def distinct_interior(self, tol: float = 1e-9) -> List[DirectionSample]:
        """Interior samples pairwise further apart than ``tol`` (greedy, in sample order)."""
        reps: List[DirectionSample] = []
        for s in self.interior_points:
            if all(s.direction.distance(r.direction) > tol for r in reps):
                reps.append(s)
        return reps


@dataclass
class OnePointVerdict:
    one_point: bool
    point: Optional[Direction]
    diameter: float
    witnesses: tuple = ()
    sample_size: int = 0

    @property
    def label(self) -> str:
        return "one-point" if self.one_point else "multi-point"


@dataclass
class DalboReport:
    power: int
    grid_n: int
    per_factor_max: List[float]
    table: List[List[List[float]]] = field(default_factory=list)

    @property
    def max_deviation(self) -> float:
        return max(self.per_factor_max)


@dataclass
class ConvexityReport:
    ratio: tuple
    predicted: Direction
    distances: List[float]
    directions: List[Direction] = field(default_factory=list)

    @property
    def final_distance(self) -> float:
        return self.distances[-1]

    def shrinking_from(self, start: int = 3) -> bool:
        """Distances never grow from index ``start`` on."""
        tail = self.distances[start:]
        return all(b <= a for a, b in zip(tail, tail[1:]))


@dataclass(frozen=True)
class FurstenbergSample:
    """Attractive fixed points of the components of one totally loxodromic element."""

    word: Word
    points: tuple


@dataclass
class FittedMap:
    factor: int
    matrix: tuple
    conjugated: bool
    residual: float


@dataclass
class MoebiusFit:
    maps: List[FittedMap]
    anchors: tuple = ()
    sample_size: int = 0

    @property
    def max_residual(self) -> float:
        return max((m.residual for m in self.maps), default=0.0)


@dataclass
class TraceWitness:
    word: Word
    place_index: int
    abs_value: float
    trace: Optional[object] = None


@dataclass
class TraceReport:
    """Sampled Gamma^(2) traces and the verdict drawn from them."""

    verdict: str
    sample_size: int
    budget: int
    trace_field_degree: int = 0
    totally_real: Optional[bool] = None
    integral: bool = True
    non_integral: List[TraceWitness] = field(default_factory=list)
    witnesses: List[TraceWitness] = field(default_factory=list)
    tested_places: List[int] = field(default_factory=list)
    criterion: str = "takeuchi"

    @property
    def has_witness(self) -> bool:
        return bool(self.witnesses)


@dataclass
class TraceMapReport:
    kinds: Dict[int, str]
    witnesses: Dict[int, Word] = field(default_factory=dict)
    predicted_one_point: bool = True


@dataclass
class RealnessReport:
    all_real: bool
    witness: Optional[Word] = None
    sample_size: int = 0
