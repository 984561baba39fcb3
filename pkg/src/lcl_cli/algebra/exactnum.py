"""Exact arithmetic in number fields, their quadratic towers, and their archimedean places.

Elements are stored on the power basis with ``Fraction`` coefficients; all
ring operations are exact.  Numerics only enter when an element is evaluated
at a place, either as a point value at working precision (``evaluate``) or as
a certified interval enclosure (``enclose``) used by ``certified_sign``.
"""

from __future__ import annotations

import functools
import logging
from contextlib import contextmanager
from dataclasses import dataclass
from enum import IntEnum
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence, Union

import mpmath
import sympy
from mpmath import iv, mp

from ..errors import DegreeTooLarge, NonMonic, PrecisionExhausted, ReducibleMinPoly

logger = logging.getLogger(__name__)

DEFAULT_PRECISION = 60
MAX_PRECISION_FACTOR = 4
IRREDUCIBILITY_DEGREE_LIMIT = 4

_X = sympy.Symbol("x")

RationalLike = Union[int, Fraction, str]


def to_fraction(value: RationalLike) -> Fraction:
    """Parse ints, Fractions, sympy rationals and "num/den" strings."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))
    raise TypeError(f"not a rational: {value!r}")


def fraction_str(value: Fraction) -> str:
    return str(value.numerator) if value.denominator == 1 else f"{value.numerator}/{value.denominator}"


@contextmanager
def working_precision(dps: int) -> Iterator[None]:
    """Set both the point and the interval mpmath contexts to ``dps`` digits."""
    old_mp, old_iv = mp.prec, iv.prec
    mp.dps = dps
    iv.dps = dps
    try:
        yield
    finally:
        mp.prec = old_mp
        iv.prec = old_iv


def _mp_rational(c: Fraction):
    return mp.mpf(c.numerator) / c.denominator


def _iv_rational(c: Fraction):
    return iv.mpf(c.numerator) / iv.mpf(c.denominator)


class Sign(IntEnum):
    NEGATIVE = -1
    ZERO = 0
    POSITIVE = 1


@dataclass(frozen=True)
class Place:
    """An archimedean place: a real root, or one representative of a conjugate pair."""

    index: int
    kind: str  # "real" | "complex"
    root: object  # mpf for real places, mpc for complex representatives
    embedding: int
    partner: Optional[int] = None

    @property
    def is_real(self) -> bool:
        return self.kind == "real"


# --------------------------------------------------------------------------
# Number fields
# --------------------------------------------------------------------------


class NumberField:
    """Q[x]/(p) for a monic irreducible p with isolated, classified roots."""

    def __init__(
        self,
        minpoly: Sequence[RationalLike],
        precision: int = DEFAULT_PRECISION,
        assume_irreducible: bool = False,
        identity: Optional[complex] = None,
        name: str = "",
        max_precision_factor: int = MAX_PRECISION_FACTOR,
    ):
        coeffs = tuple(to_fraction(c) for c in minpoly)
        while len(coeffs) > 1 and coeffs[-1] == 0:
            coeffs = coeffs[:-1]
        if len(coeffs) < 2:
            raise NonMonic("defining polynomial must have degree >= 1")
        if coeffs[-1] != 1:
            raise NonMonic(f"leading coefficient is {coeffs[-1]}, expected 1")

        self.minpoly: tuple[Fraction, ...] = coeffs
        self.degree = len(coeffs) - 1
        self.precision = precision
        self.max_precision_factor = max_precision_factor
        self.name = name
        self._poly = sympy.Poly(
            [sympy.Rational(c.numerator, c.denominator) for c in reversed(coeffs)],
            _X,
            domain=sympy.QQ,
        )

        if not assume_irreducible:
            if self.degree > IRREDUCIBILITY_DEGREE_LIMIT:
                raise DegreeTooLarge(
                    f"degree {self.degree} > {IRREDUCIBILITY_DEGREE_LIMIT}; pass assume_irreducible=True"
                )
            if not self._poly.is_irreducible:
                raise ReducibleMinPoly(f"{self._poly.as_expr()} factors over Q")

        self._reduction = self._reduction_table()
        self.embeddings, self.places = self._isolate_places(identity)
        logger.debug(
            "field %s: degree %d, %d real, %d complex places",
            self.label,
            self.degree,
            sum(p.is_real for p in self.places),
            sum(not p.is_real for p in self.places),
        )

    # ---- construction helpers ------------------------------------------

    def _reduction_table(self) -> list[tuple[Fraction, ...]]:
        """Power-basis coordinates of x^k for k < 2n - 1."""
        n = self.degree
        table: list[tuple[Fraction, ...]] = []
        for k in range(n):
            table.append(tuple(Fraction(1) if i == k else Fraction(0) for i in range(n)))
        # x^n = -(c_0 + ... + c_{n-1} x^{n-1})
        for _ in range(n, 2 * n - 1):
            prev = table[-1]
            shifted = [Fraction(0)] + list(prev[:-1])
            top = prev[-1]
            table.append(
                tuple(shifted[i] - top * self.minpoly[i] for i in range(n))
            )
        return table

    def _isolate_places(self, identity: Optional[complex]):
        with working_precision(self.precision + 10):
            reals = []
            complexes = []
            for root in self._poly.all_roots():
                value = root.evalf(self.precision + 10)
                re_part, im_part = value.as_real_imag()
                if root.is_real:
                    reals.append(mp.mpf(str(re_part)))
                elif im_part > 0:
                    complexes.append(mp.mpc(str(re_part), str(im_part)))

            reals.sort(reverse=True)
            complexes.sort(key=lambda z: (-z.real, -z.imag))
            if identity is not None:
                hint = mp.mpc(identity)
                candidates = [(abs(r - hint), 0, i) for i, r in enumerate(reals)]
                candidates += [(abs(z - hint), 1, i) for i, z in enumerate(complexes)]
                _, block, idx = min(candidates)
                if block == 0:
                    reals.insert(0, reals.pop(idx))
                else:
                    complexes.insert(0, complexes.pop(idx))
                    # identity complex: complex block leads
                    return self._layout(complexes, reals, complex_first=True)
            return self._layout(complexes, reals, complex_first=not reals)

    def _layout(self, complexes, reals, complex_first: bool):
        embeddings = []
        places: list[Place] = []

        def add_reals():
            for r in reals:
                embeddings.append(r)
                places.append(Place(len(places), "real", r, len(embeddings) - 1))

        def add_complexes():
            for z in complexes:
                embeddings.append(z)
                embeddings.append(mp.conj(z))
                places.append(
                    Place(len(places), "complex", z, len(embeddings) - 2, len(embeddings) - 1)
                )

        if complex_first:
            add_complexes()
            add_reals()
        else:
            add_reals()
            add_complexes()
        return tuple(embeddings), tuple(places)

    # ---- element constructors -------------------------------------------

    @property
    def label(self) -> str:
        return self.name or f"Q[x]/({self._poly.as_expr()})"

    @property
    def identity_place(self) -> Place:
        return self.places[0]

    @property
    def is_totally_real(self) -> bool:
        return all(p.is_real for p in self.places)

    def element(self, coeffs: Sequence[RationalLike]) -> "FieldElement":
        values = [to_fraction(c) for c in coeffs]
        if len(values) > self.degree:
            raise ValueError(f"expected at most {self.degree} coefficients")
        values += [Fraction(0)] * (self.degree - len(values))
        return FieldElement(self, tuple(values))

    def __call__(self, value) -> "FieldElement":
        return self.coerce(value)

    def coerce(self, value) -> "FieldElement":
        if isinstance(value, FieldElement):
            if value.field is not self and value.field.minpoly != self.minpoly:
                raise ValueError("element belongs to another field")
            return value
        return self.element([to_fraction(value)])

    def zero(self) -> "FieldElement":
        return self.element([0])

    def one(self) -> "FieldElement":
        return self.element([1])

    def gen(self) -> "FieldElement":
        if self.degree == 1:
            return self.element([-self.minpoly[0]])
        return self.element([0, 1])

    def to_dict(self) -> dict:
        return {"minpoly": [fraction_str(c) for c in self.minpoly]}

    # ---- numerics -----------------------------------------------------------

    def root_at(self, place: Place, dps: int):
        """The place's root refined to ``dps`` digits and an error radius."""
        return _refined_root(self.minpoly, place.root, place.is_real, dps)

    def __repr__(self) -> str:
        return f"NumberField({self.label})"


@functools.lru_cache(maxsize=512)
def _refined_root(minpoly: tuple[Fraction, ...], seed, is_real: bool, dps: int):
    """Newton-refine ``seed`` and bound its distance to the true root by n|p/p'|."""
    n = len(minpoly) - 1
    with working_precision(dps + 10):
        coeffs = [_mp_rational(c) for c in reversed(minpoly)]
        deriv = [c * (n - i) for i, c in enumerate(coeffs[:-1])]
        f = lambda z: mp.polyval(coeffs, z)
        if n == 1:
            root = -coeffs[1]
        else:
            root = mp.findroot(f, seed, tol=mp.mpf(10) ** (-(dps + 5)), verify=False)
        if is_real:
            root = mp.re(root)
        residual = abs(mp.polyval(coeffs, root))
        slope = abs(mp.polyval(deriv, root)) if deriv else mp.one
        radius = n * residual / slope + mp.mpf(10) ** (-(dps + 8))
    return root, radius


def _root_interval(field: NumberField, place: Place, dps: int):
    root, radius = field.root_at(place, dps)
    if place.is_real:
        return iv.mpf((root - radius, root + radius))
    re_part = iv.mpf((root.real - radius, root.real + radius))
    im_part = iv.mpf((root.imag - radius, root.imag + radius))
    return iv.mpc(re_part, im_part)


# --------------------------------------------------------------------------
# Field elements
# --------------------------------------------------------------------------


class FieldElement:
    """An element of a number field on the power basis."""

    __slots__ = ("field", "coeffs", "_hash")

    def __init__(self, field: NumberField, coeffs: tuple[Fraction, ...]):
        self.field = field
        self.coeffs = coeffs
        self._hash = None

    # ---- protocol shared with TowerElement ------------------------------

    @property
    def ring(self) -> NumberField:
        return self.field

    def vector(self) -> tuple[Fraction, ...]:
        return self.coeffs

    def key(self) -> tuple:
        return self.coeffs

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def is_rational(self) -> bool:
        return not any(self.coeffs[1:])

    def rational(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return self.coeffs[0]

    # ---- arithmetic -----------------------------------------------------------

    def _lift(self, other) -> "FieldElement":
        if isinstance(other, FieldElement):
            if other.field is not self.field and other.field.minpoly != self.field.minpoly:
                raise ValueError("elements of different fields")
            return other
        return self.field.coerce(other)

    def __add__(self, other):
        if isinstance(other, TowerElement):
            return NotImplemented
        o = self._lift(other)
        return FieldElement(self.field, tuple(a + b for a, b in zip(self.coeffs, o.coeffs)))

    __radd__ = __add__

    def __neg__(self):
        return FieldElement(self.field, tuple(-a for a in self.coeffs))

    def __sub__(self, other):
        if isinstance(other, TowerElement):
            return NotImplemented
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        if isinstance(other, TowerElement):
            return NotImplemented
        if isinstance(other, (int, Fraction)):
            c = Fraction(other)
            return FieldElement(self.field, tuple(a * c for a in self.coeffs))
        o = self._lift(other)
        if self.is_rational():
            return o * self.coeffs[0]
        if o.is_rational():
            return self * o.coeffs[0]
        n = self.field.degree
        product = [Fraction(0)] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    if b:
                        product[i + j] += a * b
        out = list(product[:n])
        table = self.field._reduction
        for k in range(n, 2 * n - 1):
            c = product[k]
            if c:
                row = table[k]
                for i in range(n):
                    out[i] += c * row[i]
        return FieldElement(self.field, tuple(out))

    __rmul__ = __mul__

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        if self.is_rational():
            return self.field.element([1 / self.coeffs[0]])
        num = sympy.Poly(
            [sympy.Rational(c.numerator, c.denominator) for c in reversed(self.coeffs)],
            _X,
            domain=sympy.QQ,
        )
        inv = sympy.invert(num, self.field._poly)
        values = [to_fraction(sympy.Rational(c)) for c in reversed(inv.all_coeffs())]
        return self.field.element(values)

    def __truediv__(self, other):
        o = self._lift(other)
        return self * o.inverse()

    def __rtruediv__(self, other):
        return self._lift(other) * self.inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.is_rational() and self.coeffs[0] == other
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self.field.minpoly == other.field.minpoly and self.coeffs == other.coeffs

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.field.minpoly, self.coeffs))
        return self._hash

    # ---- numerics -------------------------------------------------------------

    def evaluate(self, place: Place, dps: Optional[int] = None):
        """Point value at ``place`` (mpf at real places, mpc at complex ones)."""
        dps = dps or self.field.precision
        with working_precision(dps):
            if self.is_rational():
                value = _mp_rational(self.coeffs[0])
                return value if place.is_real else mp.mpc(value)
            root, _ = self.field.root_at(place, dps)
            value = mp.zero
            for c in reversed(self.coeffs):
                value = value * root + _mp_rational(c)
            return +value

    def enclose(self, place: Place, dps: int):
        """Interval enclosure of the value at ``place``."""
        with working_precision(dps):
            if self.is_rational():
                value = _iv_rational(self.coeffs[0])
                return value if place.is_real else iv.mpc(value, iv.mpf(0))
            root = _root_interval(self.field, place, dps)
            value = iv.mpf(0) if place.is_real else iv.mpc(0, 0)
            for c in reversed(self.coeffs):
                value = value * root + _iv_rational(c)
            return value

    def to_list(self) -> list[str]:
        return [fraction_str(c) for c in self.coeffs]

    def __repr__(self) -> str:
        terms = []
        for i, c in enumerate(self.coeffs):
            if c:
                terms.append(fraction_str(c) + ("" if i == 0 else f"*x^{i}" if i > 1 else "*x"))
        return " + ".join(terms) or "0"


# --------------------------------------------------------------------------
# Quadratic towers K(sqrt a)
# --------------------------------------------------------------------------


@dataclass(frozen=True)
class TowerPlace:
    """A place of K(sqrt a): a base place plus a fixed branch of sqrt(phi(a))."""

    index: int
    kind: str
    base: Place
    branch: int  # +1 or -1 times the principal square root

    @property
    def is_real(self) -> bool:
        return self.kind == "real"


class TowerField:
    """K(sqrt a) as pairs (u, v) meaning u + v sqrt(a); a may be a square in K."""

    def __init__(self, base: NumberField, a: FieldElement, name: str = ""):
        if a.is_zero():
            raise ValueError("tower parameter must be nonzero")
        self.base = base
        self.a = base.coerce(a)
        self.precision = base.precision
        self.max_precision_factor = base.max_precision_factor
        self.name = name
        self.places = self._tower_places()

    def _tower_places(self) -> tuple[TowerPlace, ...]:
        real_places: list[tuple[str, Place, int]] = []
        complex_places: list[tuple[str, Place, int]] = []
        for place in self.base.places:
            if place.is_real:
                if certified_sign(self.a, place) is Sign.POSITIVE:
                    real_places.append(("real", place, 1))
                    real_places.append(("real", place, -1))
                else:
                    complex_places.append(("complex", place, 1))
            else:
                complex_places.append(("complex", place, 1))
                complex_places.append(("complex", place, -1))
        identity_real = self.base.identity_place.is_real and bool(real_places) and (
            real_places[0][1].index == self.base.identity_place.index
        )
        ordered = real_places + complex_places if identity_real else complex_places + real_places
        return tuple(TowerPlace(i, kind, base, branch) for i, (kind, base, branch) in enumerate(ordered))

    @property
    def label(self) -> str:
        return self.name or f"{self.base.label}(sqrt({self.a!r}))"

    @property
    def identity_place(self) -> TowerPlace:
        return self.places[0]

    @property
    def degree(self) -> int:
        return 2 * self.base.degree

    @property
    def is_totally_real(self) -> bool:
        return all(p.is_real for p in self.places)

    def element(self, u, v=0) -> "TowerElement":
        return TowerElement(self, self.base.coerce(u), self.base.coerce(v))

    def __call__(self, value) -> "TowerElement":
        return self.coerce(value)

    def coerce(self, value) -> "TowerElement":
        if isinstance(value, TowerElement):
            if value.tower is not self and value.tower.key() != self.key():
                raise ValueError("element belongs to another tower")
            return value
        return TowerElement(self, self.base.coerce(value), self.base.zero())

    def sqrt_a(self) -> "TowerElement":
        return TowerElement(self, self.base.zero(), self.base.one())

    def zero(self) -> "TowerElement":
        return self.coerce(0)

    def one(self) -> "TowerElement":
        return self.coerce(1)

    def key(self) -> tuple:
        return (self.base.minpoly, self.a.coeffs)

    def to_dict(self) -> dict:
        data = self.base.to_dict()
        data["sqrt_ext"] = self.a.to_list()
        return data

    def __repr__(self) -> str:
        return f"TowerField({self.label})"


class TowerElement:
    """u + v sqrt(a) over a base number field."""

    __slots__ = ("tower", "u", "v", "_hash")

    def __init__(self, tower: TowerField, u: FieldElement, v: FieldElement):
        self.tower = tower
        self.u = u
        self.v = v
        self._hash = None

    @property
    def ring(self) -> TowerField:
        return self.tower

    def vector(self) -> tuple[Fraction, ...]:
        return self.u.coeffs + self.v.coeffs

    def key(self) -> tuple:
        return self.vector()

    def is_zero(self) -> bool:
        return self.u.is_zero() and self.v.is_zero()

    def is_rational(self) -> bool:
        return self.v.is_zero() and self.u.is_rational()

    def _lift(self, other) -> "TowerElement":
        return self.tower.coerce(other)

    def __add__(self, other):
        o = self._lift(other)
        return TowerElement(self.tower, self.u + o.u, self.v + o.v)

    __radd__ = __add__

    def __neg__(self):
        return TowerElement(self.tower, -self.u, -self.v)

    def __sub__(self, other):
        return self + (-self._lift(other))

    def __rsub__(self, other):
        return self._lift(other) - self

    def __mul__(self, other):
        o = self._lift(other)
        a = self.tower.a
        return TowerElement(
            self.tower,
            self.u * o.u + a * self.v * o.v,
            self.u * o.v + self.v * o.u,
        )

    __rmul__ = __mul__

    def conjugate(self) -> "TowerElement":
        """The sqrt(a) -> -sqrt(a) involution."""
        return TowerElement(self.tower, self.u, -self.v)

    def norm(self) -> FieldElement:
        return self.u * self.u - self.tower.a * self.v * self.v

    def inverse(self) -> "TowerElement":
        n = self.norm()
        if n.is_zero():
            raise ZeroDivisionError("element is a zero divisor in a degenerate tower")
        n_inv = n.inverse()
        return TowerElement(self.tower, self.u * n_inv, -(self.v * n_inv))

    def __truediv__(self, other):
        return self * self._lift(other).inverse()

    def __pow__(self, exponent: int):
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.tower.one()
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            return self.v.is_zero() and self.u == other
        if not isinstance(other, TowerElement):
            return NotImplemented
        return self.tower.key() == other.tower.key() and self.u == other.u and self.v == other.v

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.tower.key(), self.u.coeffs, self.v.coeffs))
        return self._hash

    def evaluate(self, place: TowerPlace, dps: Optional[int] = None):
        dps = dps or self.tower.precision
        with working_precision(dps):
            u = self.u.evaluate(place.base, dps)
            if self.v.is_zero():
                return u if place.is_real else mp.mpc(u)
            v = self.v.evaluate(place.base, dps)
            root = mp.sqrt(self.tower.a.evaluate(place.base, dps)) * place.branch
            value = u + v * root
            return mp.re(value) if place.is_real else mp.mpc(value)

    def enclose(self, place: TowerPlace, dps: int):
        with working_precision(dps):
            value = self.u.enclose(place.base, dps)
            if not self.v.is_zero():
                v = self.v.enclose(place.base, dps)
                value = value + v * _sqrt_interval(self.tower.a, place, dps)
            if place.is_real or isinstance(value, iv.mpc):
                return value
            return iv.mpc(value, 0)

    def to_list(self) -> list[list[str]]:
        return [self.u.to_list(), self.v.to_list()]

    def __repr__(self) -> str:
        if self.v.is_zero():
            return repr(self.u)
        return f"({self.u!r}) + ({self.v!r})*sqrt(a)"


def _sqrt_interval(a: FieldElement, place: TowerPlace, dps: int):
    """Enclosure of branch * sqrt(phi(a)) at a tower place."""
    base = place.base
    enclosure = a.enclose(base, dps)
    if base.is_real:
        if place.is_real:
            return iv.sqrt(enclosure) * place.branch
        return iv.mpc(0, iv.sqrt(-enclosure)) * place.branch
    # complex base place: point root plus a residual bound
    with working_precision(dps + 10):
        s = mp.sqrt(a.evaluate(base, dps + 10)) * place.branch
    residual = abs(iv.mpc(s.real, s.imag) ** 2 - enclosure)
    with working_precision(dps + 10):
        radius = 2 * mp.make_mpf(residual._mpi_[1]) / abs(s) + mp.mpf(10) ** (-(dps + 5))
    return iv.mpc(
        iv.mpf((s.real - radius, s.real + radius)),
        iv.mpf((s.imag - radius, s.imag + radius)),
    )


ExactScalar = Union[FieldElement, TowerElement]
AnyPlace = Union[Place, TowerPlace]


# --------------------------------------------------------------------------
# Operations
# --------------------------------------------------------------------------


def field_create(
    minpoly: Sequence[RationalLike],
    precision: int = DEFAULT_PRECISION,
    assume_irreducible: bool = False,
    identity: Optional[complex] = None,
    name: str = "",
    max_precision_factor: int = MAX_PRECISION_FACTOR,
) -> NumberField:
    return NumberField(minpoly, precision, assume_irreducible, identity, name, max_precision_factor)


def _interval_sign(value) -> Optional[Sign]:
    positive = value > 0
    if positive is True:
        return Sign.POSITIVE
    negative = value < 0
    if negative is True:
        return Sign.NEGATIVE
    return None


def certified_sign(
    x: ExactScalar,
    place: AnyPlace,
    part: str = "real",
    max_factor: Optional[int] = None,
) -> Sign:
    """Sign of the real (or imaginary) part of x at ``place``, certified by intervals.

    Zero is only reported after an exact test; otherwise precision doubles until
    the enclosure excludes 0, up to ``max_factor`` (default: the field's
    ``max_precision_factor``) times the field precision.
    """
    max_factor = max_factor or x.ring.max_precision_factor
    if x.is_zero():
        return Sign.ZERO
    if part == "imag":
        if place.is_real or is_real_at(x, place):
            return Sign.ZERO
    elif not place.is_real and not is_real_at(x, place):
        # a purely imaginary value has a real square that is negative
        square = x * x
        if is_real_at(square, place) and certified_sign(square, place, "real", max_factor) is Sign.NEGATIVE:
            return Sign.ZERO

    base_dps = x.ring.precision
    dps = base_dps
    while dps <= max_factor * base_dps:
        enclosure = x.enclose(place, dps)
        if isinstance(enclosure, iv.mpc):
            enclosure = enclosure.imag if part == "imag" else enclosure.real
        sign = _interval_sign(enclosure)
        if sign is not None:
            return sign
        logger.debug("certified_sign: enclosure straddles 0 at %d digits, escalating", dps)
        dps *= 2
    raise PrecisionExhausted(f"sign of {x!r} undecided at {max_factor * base_dps} digits")


def min_poly(x: ExactScalar) -> tuple[Fraction, ...]:
    """Monic minimal polynomial over Q, coefficients from constant term up."""
    return _min_poly_cached(x)


@functools.lru_cache(maxsize=8192)
def _min_poly_cached(x: ExactScalar) -> tuple[Fraction, ...]:
    if x.is_rational():
        c = x.vector()[0]
        return (-c, Fraction(1))
    one = x.ring.one()
    powers = [one.vector()]
    current = one
    dim = len(one.vector())
    for k in range(1, dim + 1):
        current = current * x
        powers.append(current.vector())
        matrix = sympy.Matrix(
            [[sympy.Rational(p[i].numerator, p[i].denominator) for p in powers] for i in range(dim)]
        )
        kernel = matrix.nullspace()
        if kernel:
            relation = kernel[0]
            lead = relation[k]
            return tuple(to_fraction(sympy.Rational(c / lead)) for c in relation)
    raise AssertionError("powers never became dependent")  # pragma: no cover


def is_algebraic_integer(x: ExactScalar) -> bool:
    return all(c.denominator == 1 for c in min_poly(x))


def _rank(vectors: Sequence[Sequence[Fraction]]) -> int:
    if not vectors:
        return 0
    matrix = sympy.Matrix(
        [[sympy.Rational(c.numerator, c.denominator) for c in v] for v in vectors]
    )
    return matrix.rank()


def subfield_generated(xs: Iterable[ExactScalar]) -> tuple[int, list[ExactScalar]]:
    """Degree and Q-basis of the subring (= subfield) generated by 1 and ``xs``."""
    xs = list(dict.fromkeys(xs))
    if not xs:
        raise ValueError("need at least one element")
    one = xs[0].ring.one()
    full = len(one.vector())
    basis: list[ExactScalar] = [one]

    def absorb(candidate: ExactScalar) -> bool:
        if len(basis) == 1 and candidate.is_rational():
            return False
        if _rank([b.vector() for b in basis] + [candidate.vector()]) > len(basis):
            basis.append(candidate)
            return True
        return False

    for x in xs:
        if len(basis) == full:
            break
        absorb(x)

    grown = True
    while grown and len(basis) < full:
        grown = False
        for i in range(len(basis)):
            for j in range(i, len(basis)):
                if absorb(basis[i] * basis[j]):
                    grown = True
                if len(basis) == full:
                    break
    return len(basis), basis


# --------------------------------------------------------------------------
# Exact realness and restrictions of places to subfields
# --------------------------------------------------------------------------


@functools.lru_cache(maxsize=512)
def _poly_roots(poly: tuple[Fraction, ...], dps: int):
    """Numeric roots of a rational polynomial with their exact realness."""
    p = sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(poly)], _X, domain=sympy.QQ
    )
    out = []
    with working_precision(dps):
        for factor, _ in p.factor_list()[1]:
            for root in factor.all_roots():
                re_part, im_part = root.evalf(dps).as_real_imag()
                out.append((mp.mpc(str(re_part), str(im_part)), bool(root.is_real)))
    return tuple(out)


def _nearest_root(poly: tuple[Fraction, ...], value, dps: int):
    roots = _poly_roots(poly, dps)
    with working_precision(dps):
        return min(roots, key=lambda item: abs(item[0] - value))


def is_real_at(x: ExactScalar, place: AnyPlace) -> bool:
    """Whether x evaluates to a real number at ``place`` (exact decision)."""
    if place.is_real or x.is_rational():
        return True
    return _is_real_cached(x, place)


@functools.lru_cache(maxsize=16384)
def _is_real_cached(x: ExactScalar, place: AnyPlace) -> bool:
    dps = x.ring.precision
    value = x.evaluate(place)
    with working_precision(dps):
        if abs(mp.im(value)) > mp.mpf(10) ** (-(dps // 2)):
            return False
    _, real = _nearest_root(min_poly(x), value, dps)
    return real


def primitive_element(basis: Sequence[ExactScalar]) -> ExactScalar:
    """An integer combination of ``basis`` whose minimal polynomial has full degree."""
    dim = len(basis)
    if dim == 1:
        return basis[0]
    for c in range(1, 50):
        theta = basis[0].ring.zero()
        for k, b in enumerate(basis):
            theta = theta + b * (c ** k)
        if len(min_poly(theta)) - 1 == dim:
            return theta
    raise AssertionError("no primitive element among small combinations")  # pragma: no cover


def is_totally_real_subfield(basis: Sequence[ExactScalar]) -> bool:
    theta = primitive_element(basis)
    poly = min_poly(theta)
    p = sympy.Poly(
        [sympy.Rational(c.numerator, c.denominator) for c in reversed(poly)], _X, domain=sympy.QQ
    )
    return p.count_roots() == p.degree()


def restriction_kind(
    basis: Sequence[ExactScalar], place: AnyPlace, identity_place: AnyPlace
) -> str:
    """How ``place`` acts on the subfield spanned by ``basis``: identity, conjugation or other."""
    if len(basis) == 1:
        return "identity"
    theta = primitive_element(basis)
    dps = theta.ring.precision
    roots = [r for r, _ in _poly_roots(min_poly(theta), dps)]
    with working_precision(dps):
        separation = min(abs(r1 - r2) for i, r1 in enumerate(roots) for r2 in roots[i + 1:])
        here = mp.mpc(theta.evaluate(place))
        there = mp.mpc(theta.evaluate(identity_place))
        if abs(here - there) < separation / 2:
            return "identity"
        if abs(here - mp.conj(there)) < separation / 2:
            return "conjugation"
    return "other"
