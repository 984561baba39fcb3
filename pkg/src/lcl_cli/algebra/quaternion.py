"""Quaternion algebras (a, b / K), their standard orders and matrix embeddings."""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, List, Optional, Sequence

import numpy as np

from ..errors import NoStandardOrder, ZeroParameter
from .exactnum import (
    FieldElement,
    NumberField,
    Place,
    Sign,
    TowerElement,
    TowerField,
    certified_sign,
    is_algebraic_integer,
)

logger = logging.getLogger(__name__)

Matrix2 = tuple[tuple[TowerElement, TowerElement], tuple[TowerElement, TowerElement]]


class QuaternionAlgebra:
    """The algebra with basis 1, i, j, k = ij and i^2 = a, j^2 = b, ij = -ji."""

    def __init__(self, field: NumberField, a, b):
        self.field = field
        self.a = field.coerce(a)
        self.b = field.coerce(b)
        if self.a.is_zero() or self.b.is_zero():
            raise ZeroParameter("quaternion parameters must be nonzero")

    @cached_property
    def tower(self) -> TowerField:
        """K(sqrt a), where the embedding into 2x2 matrices lives."""
        return TowerField(self.field, self.a)

    def element(self, x0=0, x1=0, x2=0, x3=0) -> "Quaternion":
        c = self.field.coerce
        return Quaternion(self, c(x0), c(x1), c(x2), c(x3))

    def one(self) -> "Quaternion":
        return self.element(1)

    def i(self) -> "Quaternion":
        return self.element(0, 1)

    def j(self) -> "Quaternion":
        return self.element(0, 0, 1)

    def k(self) -> "Quaternion":
        return self.element(0, 0, 0, 1)

    # ---- ramification -------------------------------------------------------

    def ramified_at_place(self, place: Place) -> bool:
        """Ramified iff the place is real and sends both a and b below zero."""
        if not place.is_real:
            return False
        sign_a = certified_sign(self.a, place)
        sign_b = certified_sign(self.b, place)
        if Sign.ZERO in (sign_a, sign_b):
            raise ZeroParameter("parameter vanishes at a place")
        return sign_a is Sign.NEGATIVE and sign_b is Sign.NEGATIVE

    def ramification(self) -> List[tuple[Place, bool]]:
        return [(p, self.ramified_at_place(p)) for p in self.field.places if p.is_real]

    def split_real_places(self) -> List[Place]:
        return [p for p, ramified in self.ramification() if not ramified]

    def factor_places(self) -> List[Place]:
        """Base places that contribute a factor to the product of hyperbolic spaces."""
        complexes = [p for p in self.field.places if not p.is_real]
        reals = self.split_real_places()
        if self.field.identity_place.is_real:
            return reals + complexes
        return complexes + reals

    def signature(self) -> tuple[int, int]:
        """(q, r): complex places and unramified real places."""
        q = sum(1 for p in self.field.places if not p.is_real)
        return q, len(self.split_real_places())

    def to_dict(self) -> dict:
        return {
            "field": self.field.to_dict(),
            "a": self.a.to_list(),
            "b": self.b.to_list(),
        }

    def __repr__(self) -> str:
        return f"QuaternionAlgebra(({self.a!r}, {self.b!r}) / {self.field.label})"


@dataclass(frozen=True)
class Quaternion:
    algebra: QuaternionAlgebra
    x0: FieldElement
    x1: FieldElement
    x2: FieldElement
    x3: FieldElement

    @property
    def coords(self) -> tuple[FieldElement, ...]:
        return (self.x0, self.x1, self.x2, self.x3)

    def __add__(self, other: "Quaternion") -> "Quaternion":
        return Quaternion(self.algebra, *(s + o for s, o in zip(self.coords, other.coords)))

    def __neg__(self) -> "Quaternion":
        return Quaternion(self.algebra, *(-s for s in self.coords))

    def __sub__(self, other: "Quaternion") -> "Quaternion":
        return self + (-other)

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        a, b = self.algebra.a, self.algebra.b
        x0, x1, x2, x3 = self.coords
        y0, y1, y2, y3 = other.coords
        ab = a * b
        return Quaternion(
            self.algebra,
            x0 * y0 + a * x1 * y1 + b * x2 * y2 - ab * x3 * y3,
            x0 * y1 + x1 * y0 - b * x2 * y3 + b * x3 * y2,
            x0 * y2 + x2 * y0 + a * x1 * y3 - a * x3 * y1,
            x0 * y3 + x3 * y0 + x1 * y2 - x2 * y1,
        )

    def conj(self) -> "Quaternion":
        return Quaternion(self.algebra, self.x0, -self.x1, -self.x2, -self.x3)

    def nrd(self) -> FieldElement:
        a, b = self.algebra.a, self.algebra.b
        x0, x1, x2, x3 = self.coords
        return x0 * x0 - a * x1 * x1 - b * x2 * x2 + a * b * x3 * x3

    def trd(self) -> FieldElement:
        return self.x0 + self.x0

    def __eq__(self, other) -> bool:
        if not isinstance(other, Quaternion):
            return NotImplemented
        return self.coords == other.coords

    def __hash__(self) -> int:
        return hash(tuple(c.key() for c in self.coords))

    def to_list(self) -> list[list[str]]:
        return [c.to_list() for c in self.coords]

    def __repr__(self) -> str:
        return "Quaternion({!r}, {!r}, {!r}, {!r})".format(*self.coords)


def nrd(x: Quaternion) -> FieldElement:
    return x.nrd()


def embed_matrix(x: Quaternion) -> Matrix2:
    """Image under 1 -> I, i -> diag(s, -s), j -> [[0, 1], [b, 0]], k -> [[0, s], [-b s, 0]], s = sqrt(a)."""
    tower = x.algebra.tower
    b = x.algebra.b
    s = tower.sqrt_a()
    x0, x1, x2, x3 = (tower.coerce(c) for c in x.coords)
    return (
        (x0 + x1 * s, x2 + x3 * s),
        (tower.coerce(b) * (x2 - x3 * s), x0 - x1 * s),
    )


def embed_unit(x: Quaternion):
    """A reduced-norm-one quaternion as a Moebius transformation over K(sqrt a)."""
    from ..groups.moebius import MoebiusElement

    if x.nrd() != 1:
        raise ValueError(f"reduced norm of {x!r} is not 1")
    (m11, m12), (m21, m22) = embed_matrix(x)
    return MoebiusElement(m11, m12, m21, m22)


class StandardOrder:
    """O_K[i, j]: quaternions whose four coordinates are algebraic integers."""

    def __init__(self, algebra: QuaternionAlgebra):
        if not (is_algebraic_integer(algebra.a) and is_algebraic_integer(algebra.b)):
            raise NoStandardOrder(f"parameters of {algebra!r} are not integral")
        self.algebra = algebra

    def contains(self, x: Quaternion) -> bool:
        return all(c.is_zero() or is_algebraic_integer(c) for c in x.coords)

    def unit_check(self, x: Quaternion) -> bool:
        """x lies in O^1: integral with reduced norm one."""
        return self.contains(x) and x.nrd() == 1

    def check_closure(self, samples: Sequence[Quaternion]) -> bool:
        """All pairwise products of integral samples stay integral."""
        for x in samples:
            for y in samples:
                if not self.contains(x * y):
                    return False
        return True

    def random_element(self, rng: Optional[np.random.Generator] = None, bound: int = 3) -> Quaternion:
        """An element with integer power-basis coordinates (always in the order)."""
        rng = rng or np.random.default_rng()
        degree = self.algebra.field.degree
        coords = []
        for _ in range(4):
            coeffs = rng.integers(-bound, bound + 1, size=degree)
            coords.append(self.algebra.field.element([int(c) for c in coeffs]))
        return Quaternion(self.algebra, *coords)

    def random_elements(self, count: int, seed: int = 0, bound: int = 3) -> List[Quaternion]:
        rng = np.random.default_rng(seed)
        return [self.random_element(rng, bound) for _ in range(count)]


def ramified_at_place(algebra: QuaternionAlgebra, place: Place) -> bool:
    return algebra.ramified_at_place(place)


def unit_check(order: StandardOrder, x: Quaternion) -> bool:
    return order.unit_check(x)


def units_from_pairs(algebra: QuaternionAlgebra, rows: Iterable[Sequence]) -> List[Quaternion]:
    """Build quaternions from coordinate rows, keeping those of reduced norm one."""
    units = []
    for row in rows:
        x = algebra.element(*row)
        if x.nrd() == 1:
            units.append(x)
        else:
            logger.warning("dropping %r: reduced norm %r", x, x.nrd())
    return units
