"""Exact unimodular 2x2 matrices and their action on the boundary sphere.

A ``MoebiusElement`` stores exact entries over a ``NumberField`` or a
``TowerField`` and represents the class of the matrix in PSL(2).  Everything
numeric (lengths, fixed points, disks) is computed at a chosen place.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence, Union

import numpy as np
from mpmath import mp

from ..algebra.exactnum import (
    DEFAULT_PRECISION,
    AnyPlace,
    ExactScalar,
    Sign,
    certified_sign,
    is_real_at,
    working_precision,
)
from ..errors import DegenerateImage, NotCertified, NotLoxodromic, SharedFixedPoint

logger = logging.getLogger(__name__)

INFINITY = mp.inf
DEFAULT_ORDER_BOUND = 120
SCALE_SCHEDULE = (0.95, 0.9, 0.8, 0.7, 0.6, 0.5, 0.4, 0.3, 0.2, 0.1, 0.05, 0.02, 0.01)


class MoebiusElement:
    """[[a, b], [c, d]] with ad - bc = 1, up to sign."""

    __slots__ = ("a", "b", "c", "d", "_key")

    def __init__(self, a: ExactScalar, b: ExactScalar, c: ExactScalar, d: ExactScalar, check: bool = True):
        ring = a.ring
        self.a, self.b, self.c, self.d = (ring.coerce(x) for x in (a, b, c, d))
        self._key = None
        if check and (self.a * self.d - self.b * self.c) != 1:
            raise ValueError(f"determinant of {self!r} is not 1")

    @classmethod
    def from_rows(cls, ring, rows: Sequence[Sequence]) -> "MoebiusElement":
        (a, b), (c, d) = rows
        return cls(ring.coerce(a), ring.coerce(b), ring.coerce(c), ring.coerce(d))

    @classmethod
    def identity(cls, ring) -> "MoebiusElement":
        return cls(ring.one(), ring.zero(), ring.zero(), ring.one(), check=False)

    @property
    def ring(self):
        return self.a.ring

    @property
    def entries(self) -> tuple[ExactScalar, ExactScalar, ExactScalar, ExactScalar]:
        return (self.a, self.b, self.c, self.d)

    # ---- group law --------------------------------------------------------

    def __mul__(self, other: "MoebiusElement") -> "MoebiusElement":
        a, b, c, d = self.entries
        e, f, g, h = other.entries
        return MoebiusElement(a * e + b * g, a * f + b * h, c * e + d * g, c * f + d * h, check=False)

    def inverse(self) -> "MoebiusElement":
        return MoebiusElement(self.d, -self.b, -self.c, self.a, check=False)

    def __pow__(self, n: int) -> "MoebiusElement":
        if n < 0:
            return self.inverse() ** (-n)
        result = MoebiusElement.identity(self.ring)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def conjugate_by(self, w: "MoebiusElement") -> "MoebiusElement":
        return w * self * w.inverse()

    def trace(self) -> ExactScalar:
        return self.a + self.d

    def is_identity(self) -> bool:
        return self.b.is_zero() and self.c.is_zero() and self.a == self.d and (self.a * self.a) == 1

    # ---- PSL equality -------------------------------------------------------

    def key(self) -> tuple:
        """Sign-normalized exact entry vector: the first nonzero coefficient is positive."""
        if self._key is None:
            flat = tuple(c for x in self.entries for c in x.vector())
            lead = next(c for c in flat if c != 0)
            self._key = flat if lead > 0 else tuple(-c for c in flat)
        return self._key

    @property
    def is_sign_normalized(self) -> bool:
        flat = tuple(c for x in self.entries for c in x.vector())
        return flat == self.key()

    def normalized(self) -> "MoebiusElement":
        if self.is_sign_normalized:
            return self
        return MoebiusElement(-self.a, -self.b, -self.c, -self.d, check=False)

    def __eq__(self, other) -> bool:
        if not isinstance(other, MoebiusElement):
            return NotImplemented
        return self.key() == other.key()

    def __hash__(self) -> int:
        return hash(self.key())

    # ---- numerics -------------------------------------------------------------

    def evaluate(self, place: AnyPlace, dps: Optional[int] = None) -> tuple:
        """Entries at ``place`` as (a, b, c, d)."""
        return tuple(x.evaluate(place, dps) for x in self.entries)

    def to_list(self) -> list:
        return [[self.a.to_list(), self.b.to_list()], [self.c.to_list(), self.d.to_list()]]

    def __repr__(self) -> str:
        return f"[[{self.a!r}, {self.b!r}], [{self.c!r}, {self.d!r}]]"


NumericMatrix = tuple  # (a, b, c, d) of mpf / mpc


# --------------------------------------------------------------------------
# Classification
# --------------------------------------------------------------------------


class IsometryKind(str, Enum):
    IDENTITY = "identity"
    ELLIPTIC_FINITE = "elliptic-finite"
    ELLIPTIC_INFINITE = "elliptic-infinite"
    PARABOLIC = "parabolic"
    HYPERBOLIC = "hyperbolic"
    LOXODROMIC = "loxodromic"


@dataclass(frozen=True)
class IsometryType:
    kind: IsometryKind
    order: Optional[int] = None
    order_bound_limited: bool = False

    @property
    def is_loxodromic(self) -> bool:
        """Hyperbolic or strictly loxodromic: positive translation length."""
        return self.kind in (IsometryKind.HYPERBOLIC, IsometryKind.LOXODROMIC)

    @property
    def is_elliptic(self) -> bool:
        return self.kind in (IsometryKind.ELLIPTIC_FINITE, IsometryKind.ELLIPTIC_INFINITE)

    @property
    def label(self) -> str:
        if self.kind is IsometryKind.ELLIPTIC_FINITE:
            return f"elliptic({self.order})"
        return self.kind.value


def _place_dps(g: MoebiusElement) -> int:
    return getattr(g.ring, "precision", DEFAULT_PRECISION)


def trace_normalized(g: MoebiusElement, place: Optional[AnyPlace] = None) -> ExactScalar:
    """The trace with the sign making its value r*e^(i theta), r >= 0, 0 <= theta < pi."""
    place = place or g.ring.identity_place
    t = g.trace()
    if t.is_zero():
        return t
    imag = certified_sign(t, place, "imag")
    if imag is Sign.NEGATIVE:
        return -t
    if imag is Sign.ZERO and certified_sign(t, place) is Sign.NEGATIVE:
        return -t
    return t


def _elliptic_order(g: MoebiusElement, t_value, order_bound: int, dps: int) -> Optional[int]:
    """Smallest n <= order_bound with g^n = +-I; numeric rotation angle screens candidates."""
    with working_precision(dps):
        ratio = mp.acos(mp.re(t_value) / 2) / mp.pi
        eps = mp.mpf(10) ** (-(dps // 3))
        for n in range(2, order_bound + 1):
            x = n * ratio
            if abs(x - mp.nint(x)) < eps and (g ** n).is_identity():
                return n
    return None


def classify(
    g: MoebiusElement, place: Optional[AnyPlace] = None, order_bound: int = DEFAULT_ORDER_BOUND
) -> IsometryType:
    place = place or g.ring.identity_place
    if g.is_identity():
        return IsometryType(IsometryKind.IDENTITY)
    t = g.trace()
    discriminant = t * t - 4
    if discriminant.is_zero():
        return IsometryType(IsometryKind.PARABOLIC)
    if not is_real_at(t, place):
        return IsometryType(IsometryKind.LOXODROMIC)
    if certified_sign(discriminant, place) is Sign.POSITIVE:
        return IsometryType(IsometryKind.HYPERBOLIC)
    dps = _place_dps(g)
    order = _elliptic_order(g, t.evaluate(place, dps), order_bound, dps)
    if order is None:
        return IsometryType(IsometryKind.ELLIPTIC_INFINITE, order_bound_limited=True)
    return IsometryType(IsometryKind.ELLIPTIC_FINITE, order=order)


def length_from_trace(t, dps: int = DEFAULT_PRECISION):
    """2 ln|lambda| for the large eigenvalue of a loxodromic trace value."""
    with working_precision(dps):
        if not isinstance(t, mp.mpc) or mp.im(t) == 0:
            x = abs(mp.re(t))
            return 2 * mp.acosh(x / 2) if x > 2 else mp.zero
        root = mp.sqrt(t * t - 4)
        lam = (t + root) / 2
        if abs(lam) < 1:
            lam = (t - root) / 2
        return 2 * mp.log(abs(lam))


def translation_length(
    g: MoebiusElement, place: Optional[AnyPlace] = None, itype: Optional[IsometryType] = None
):
    place = place or g.ring.identity_place
    itype = itype or classify(g, place)
    if not itype.is_loxodromic:
        return mp.zero
    dps = _place_dps(g)
    return length_from_trace(g.trace().evaluate(place, dps), dps)


def _numeric_fixed_points(m: NumericMatrix, c_is_zero: bool, dps: int):
    a, b, c, d = m
    with working_precision(dps):
        if c_is_zero:
            finite = b / (d - a)
            return (INFINITY, finite) if abs(a) > 1 else (finite, INFINITY)
        root = mp.sqrt((a - d) ** 2 + 4 * b * c)
        z1 = (a - d + root) / (2 * c)
        z2 = (a - d - root) / (2 * c)
        return (z1, z2) if abs(c * z1 + d) > 1 else (z2, z1)


def fixed_points(g: MoebiusElement, place: Optional[AnyPlace] = None):
    """(attractive, repulsive) boundary points; ``INFINITY`` stands for the point at infinity."""
    place = place or g.ring.identity_place
    if not classify(g, place).is_loxodromic:
        raise NotLoxodromic(f"{g!r} is not loxodromic at place {place.index}")
    dps = _place_dps(g)
    return _numeric_fixed_points(g.evaluate(place, dps), g.c.is_zero(), dps)


def is_infinite(z) -> bool:
    return mp.isinf(z)


def _same_point(z, w, tol) -> bool:
    if is_infinite(z) or is_infinite(w):
        return is_infinite(z) and is_infinite(w)
    return abs(z - w) <= tol * max(1, abs(z))


def apply(m: NumericMatrix, z):
    """Action of a numeric matrix on a boundary point."""
    a, b, c, d = m
    if is_infinite(z):
        return INFINITY if c == 0 else a / c
    denominator = c * z + d
    if denominator == 0:
        return INFINITY
    return (a * z + b) / denominator


# --------------------------------------------------------------------------
# Disks and ping-pong certificates
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class Disk:
    """|z - center| < radius, or its complement (with infinity) when ``exterior``."""

    center: object
    radius: object
    exterior: bool = False

    def __post_init__(self):
        if not self.radius > 0:
            raise ValueError("disk radius must be positive")

    @property
    def orientation(self) -> str:
        return "exterior" if self.exterior else "interior"

    def complement(self) -> "Disk":
        return Disk(self.center, self.radius, not self.exterior)

    def contains(self, z) -> bool:
        if is_infinite(z):
            return self.exterior
        inside = abs(z - self.center) < self.radius
        return inside != self.exterior

    def is_inside(self, other: "Disk", margin=0) -> bool:
        """This region lies in ``other``."""
        dist = abs(self.center - other.center)
        if not self.exterior and not other.exterior:
            return dist + self.radius + margin <= other.radius
        if not self.exterior and other.exterior:
            return dist - self.radius - margin >= other.radius
        if self.exterior and other.exterior:
            return dist + other.radius + margin <= self.radius
        return False

    def is_disjoint(self, other: "Disk", margin=0) -> bool:
        dist = abs(self.center - other.center)
        if not self.exterior and not other.exterior:
            return dist > self.radius + other.radius + margin
        if self.exterior and other.exterior:
            return False
        inner, outer = (self, other) if other.exterior else (other, self)
        return dist + inner.radius + margin < outer.radius

    def to_dict(self) -> dict:
        return {
            "center": [mp.nstr(mp.re(self.center), 15), mp.nstr(mp.im(self.center), 15)],
            "radius": mp.nstr(self.radius, 15),
            "orientation": self.orientation,
        }


def disk_image(
    g: Union[MoebiusElement, NumericMatrix],
    disk: Disk,
    place: Optional[AnyPlace] = None,
    dps: int = DEFAULT_PRECISION,
) -> Disk:
    """Image of a disk under a Moebius map, via the image of the reflected pole."""
    if isinstance(g, MoebiusElement):
        dps = _place_dps(g)
        m = g.evaluate(place or g.ring.identity_place, dps)
    else:
        m = g
    alpha, beta, gamma, delta = m
    with working_precision(dps):
        c = mp.mpc(disk.center)
        rho = mp.mpf(disk.radius)
        if gamma == 0:
            return Disk((alpha * c + beta) / delta, rho * abs(alpha / delta), disk.exterior)
        pole = -delta / gamma
        dist = abs(pole - c)
        if abs(dist - rho) <= mp.mpf(10) ** (-(dps // 2)) * rho:
            raise DegenerateImage("pole lies on the circle; the image is a line")
        if dist == 0:
            center = alpha / gamma
        else:
            reflected = c + rho ** 2 / mp.conj(pole - c)
            center = apply(m, reflected)
        radius = abs(apply(m, c + rho) - center)
        exterior = disk.exterior != (dist < rho)
        return Disk(mp.mpc(center), radius, exterior)


@dataclass(frozen=True)
class SchottkyCertificate:
    """g^n and h^n play ping-pong on four pairwise disjoint disks."""

    power: int
    scale: float
    place_index: int
    g_attracting: Disk
    g_repelling: Disk
    h_attracting: Disk
    h_repelling: Disk

    @property
    def disks(self) -> tuple[Disk, Disk, Disk, Disk]:
        return (self.g_attracting, self.g_repelling, self.h_attracting, self.h_repelling)

    def to_dict(self) -> dict:
        return {
            "power": self.power,
            "scale": self.scale,
            "place": self.place_index,
            "disks": [d.to_dict() for d in self.disks],
        }


def _disks_for(points, scale, dps):
    """One disk per fixed point: small disks around finite points, an exterior disk at infinity."""
    with working_precision(dps):
        finite = [mp.mpc(z) for z in points if not is_infinite(z)]
        delta = min(abs(z - w) for i, z in enumerate(finite) for w in finite[i + 1:])
        rho = mp.mpf(scale) * delta / 2
        far = (max(abs(z) for z in finite) + rho) / mp.mpf(scale)
        return [
            Disk(mp.mpc(0), far, exterior=True) if is_infinite(z) else Disk(mp.mpc(z), rho)
            for z in points
        ]


def _plays_ping_pong(m: NumericMatrix, attracting: Disk, repelling: Disk, margin, dps) -> bool:
    try:
        image = disk_image(m, repelling.complement(), dps=dps)
    except DegenerateImage:
        return False
    return image.is_inside(attracting, margin)


def schottky_certificate(
    g: MoebiusElement,
    h: MoebiusElement,
    place: Optional[AnyPlace] = None,
    power_budget: int = 8,
) -> Optional[SchottkyCertificate]:
    place = place or g.ring.identity_place
    for name, x in (("g", g), ("h", h)):
        if not classify(x, place).is_loxodromic:
            raise NotLoxodromic(f"{name} = {x!r} is not loxodromic at place {place.index}")
    dps = _place_dps(g)
    tol = mp.mpf(10) ** (-(dps // 2))
    g_attr, g_rep = fixed_points(g, place)
    h_attr, h_rep = fixed_points(h, place)
    for z in (g_attr, g_rep):
        for w in (h_attr, h_rep):
            if _same_point(z, w, tol):
                raise SharedFixedPoint(f"{g!r} and {h!r} share a fixed point at place {place.index}")

    points = (g_attr, g_rep, h_attr, h_rep)
    for n in range(1, power_budget + 1):
        gn = (g ** n).evaluate(place, dps)
        hn = (h ** n).evaluate(place, dps)
        for scale in SCALE_SCHEDULE:
            disks = _disks_for(points, scale, dps)
            if not all(
                disks[i].is_disjoint(disks[j], tol) for i in range(4) for j in range(i + 1, 4)
            ):
                continue
            with working_precision(dps):
                ok = _plays_ping_pong(gn, disks[0], disks[1], tol, dps) and _plays_ping_pong(
                    hn, disks[2], disks[3], tol, dps
                )
            if ok:
                logger.info("schottky certificate at place %d: power %d, scale %s", place.index, n, scale)
                return SchottkyCertificate(n, scale, place.index, *disks)
    logger.info("no schottky certificate at place %d within power %d", place.index, power_budget)
    return None


# --------------------------------------------------------------------------
# Lie brackets and the Zariski rank test
# --------------------------------------------------------------------------


def _mat_mul(x, y):
    return (
        x[0] * y[0] + x[1] * y[2],
        x[0] * y[1] + x[1] * y[3],
        x[2] * y[0] + x[3] * y[2],
        x[2] * y[1] + x[3] * y[3],
    )


def _bracket(x, y):
    xy = _mat_mul(x, y)
    yx = _mat_mul(y, x)
    return tuple(p - q for p, q in zip(xy, yx))


def sl2_log(m: NumericMatrix, dps: int = DEFAULT_PRECISION):
    """log of a diagonalizable unimodular matrix: L (2M - tr I) / (lambda - 1/lambda)."""
    a, b, c, d = m
    with working_precision(dps):
        t = mp.mpc(a + d)
        root = mp.sqrt(t * t - 4)
        lam = (t + root) / 2
        if abs(lam) < 1:
            lam = (t - root) / 2
        spread = lam - 1 / lam
        if abs(spread) < mp.mpf(10) ** (-(dps // 2)):
            raise NotLoxodromic("matrix logarithm needs distinct eigenvalues")
        factor = mp.log(lam) / spread
        return (factor * (a - d), factor * 2 * b, factor * 2 * c, factor * (d - a))


def _real_row(t, floor):
    a, b, c, _ = (mp.mpc(x) for x in t)
    vector = [a.real, a.imag, b.real, b.imag, c.real, c.imag]
    norm = mp.sqrt(sum(x * x for x in vector))
    if norm < floor:
        return None
    return [float(x / norm) for x in vector]


def _rank(rows, tol: float) -> int:
    return int(np.linalg.matrix_rank(np.array(rows, dtype=float), tol=tol)) if rows else 0


def bracket_rank(g: NumericMatrix, h: NumericMatrix, dps: int = DEFAULT_PRECISION, tol: float = 1e-9) -> int:
    """Real dimension of the Lie algebra generated by log g and log h inside sl(2, C)."""
    with working_precision(dps):
        floor = mp.mpf(10) ** (-(dps // 2))
        span, rows = [], []
        frontier = [sl2_log(g, dps), sl2_log(h, dps)]
        while frontier:
            grown = []
            for t in frontier:
                row = _real_row(t, floor)
                if row is not None and _rank(rows + [row], tol) > len(rows):
                    rows.append(row)
                    span.append(t)
                    grown.append(t)
            if len(rows) == 6:
                break
            # brackets of the new directions with everything kept so far
            frontier = [_bracket(x, y) for x in grown for y in span]
    return len(rows)


def zariski_span_dim(
    g: MoebiusElement,
    h: MoebiusElement,
    place: Optional[AnyPlace] = None,
    power_budget: int = 8,
) -> int:
    place = place or g.ring.identity_place
    try:
        certificate = schottky_certificate(g, h, place, power_budget)
    except (NotLoxodromic, SharedFixedPoint) as exc:
        raise NotCertified(str(exc)) from exc
    if certificate is None:
        raise NotCertified(f"no ping-pong certificate within power {power_budget}")
    dps = _place_dps(g)
    rank = bracket_rank(g.evaluate(place, dps), h.evaluate(place, dps), dps)
    if rank not in (3, 6):
        raise NotCertified(f"bracket span of real dimension {rank} is neither sl(2,R) nor sl(2,C)")
    logger.info("zariski span at place %d: %d", place.index, rank)
    return rank

