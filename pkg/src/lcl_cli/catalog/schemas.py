"""GroupSpec: the JSON description of a group, its field and its factors."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import List, Optional

from ..algebra.exactnum import (
    DEFAULT_PRECISION,
    MAX_PRECISION_FACTOR,
    NumberField,
    TowerField,
    fraction_str,
    to_fraction,
)
from ..algebra.quaternion import QuaternionAlgebra
from ..errors import LclError, SpecParseError
from ..groups.moebius import MoebiusElement
from ..groups.stargroup import StarContext
from ..groups.words import default_labels


def _rationals(values, what: str) -> List[str]:
    if not isinstance(values, list):
        values = [values]
    try:
        return [fraction_str(to_fraction(v)) for v in values]
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise SpecParseError(f"{what}: {values!r} is not a list of rationals") from exc


def _padded(values, degree: int, what: str) -> List[str]:
    coeffs = _rationals(values, what)
    if len(coeffs) > degree:
        raise SpecParseError(f"{what}: {len(coeffs)} coefficients for a degree {degree} field")
    return coeffs + ["0"] * (degree - len(coeffs))


@dataclass
class FieldSpec:
    """Defining polynomial (constant term first), optional identity hint and tower parameter."""

    minpoly: List[str]
    identity: Optional[List[str]] = None
    sqrt_ext: Optional[List[str]] = None
    assume_irreducible: bool = False

    @property
    def degree(self) -> int:
        return len(self.minpoly) - 1

    def to_dict(self) -> dict:
        result = {"minpoly": self.minpoly}
        if self.identity is not None:
            result["identity"] = self.identity
        if self.sqrt_ext is not None:
            result["sqrt_ext"] = self.sqrt_ext
        if self.assume_irreducible:
            result["assume_irreducible"] = True
        return result

    @classmethod
    def from_dict(cls, data: dict) -> "FieldSpec":
        if not isinstance(data, dict) or "minpoly" not in data:
            raise SpecParseError("field needs a 'minpoly' coefficient list")
        minpoly = _rationals(data["minpoly"], "field.minpoly")
        if len(minpoly) < 2:
            raise SpecParseError("field.minpoly must have degree >= 1")
        identity = data.get("identity")
        if identity is not None:
            if not isinstance(identity, list) or len(identity) != 2:
                raise SpecParseError("field.identity must be [re, im]")
            try:
                identity = [repr(float(x)) for x in identity]
            except (TypeError, ValueError) as exc:
                raise SpecParseError(f"field.identity: {identity!r}") from exc
        sqrt_ext = data.get("sqrt_ext")
        if sqrt_ext is not None:
            sqrt_ext = _padded(sqrt_ext, len(minpoly) - 1, "field.sqrt_ext")
        return cls(minpoly, identity, sqrt_ext, bool(data.get("assume_irreducible", False)))

    def build(self, precision: int = DEFAULT_PRECISION, max_precision_factor: int = MAX_PRECISION_FACTOR):
        hint = complex(float(self.identity[0]), float(self.identity[1])) if self.identity else None
        base = NumberField(
            self.minpoly, precision, self.assume_irreducible, hint, max_precision_factor=max_precision_factor
        )
        if self.sqrt_ext is None:
            return base
        return TowerField(base, base.element(self.sqrt_ext))


@dataclass
class GroupSpec:
    """A finitely generated group over a number field (or a quadratic tower over one)."""

    label: str
    field: FieldSpec
    generators: List[list]
    factors: Optional[List[int]] = None
    labels: List[str] = field(default_factory=list)
    quaternion: Optional[dict] = None

    def to_dict(self) -> dict:
        result = {
            "label": self.label,
            "field": self.field.to_dict(),
            "generators": self.generators,
            "labels": self.labels,
        }
        if self.factors is not None:
            result["factors"] = self.factors
        if self.quaternion is not None:
            result["quaternion"] = self.quaternion
        return result

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: dict) -> "GroupSpec":
        if not isinstance(data, dict):
            raise SpecParseError("a group spec must be a JSON object")
        for key in ("field", "generators"):
            if key not in data:
                raise SpecParseError(f"missing key {key!r}")
        field_spec = FieldSpec.from_dict(data["field"])
        degree = field_spec.degree
        tower = field_spec.sqrt_ext is not None

        def entry(value, where: str):
            if tower:
                if isinstance(value, list) and value and isinstance(value[0], list):
                    if len(value) != 2:
                        raise SpecParseError(f"{where}: tower entries are [u, v]")
                    return [_padded(value[0], degree, where), _padded(value[1], degree, where)]
                return [_padded(value, degree, where), ["0"] * degree]
            return _padded(value, degree, where)

        raw = data["generators"]
        if not isinstance(raw, list) or not raw:
            raise SpecParseError("generators must be a non-empty list")
        generators = []
        for n, matrix in enumerate(raw):
            if not (isinstance(matrix, list) and len(matrix) == 2 and all(len(row) == 2 for row in matrix)):
                raise SpecParseError(f"generator {n + 1} is not a 2x2 matrix")
            generators.append([[entry(x, f"generator {n + 1}") for x in row] for row in matrix])

        factors = data.get("factors")
        if factors is not None:
            if not isinstance(factors, list) or not all(isinstance(i, int) for i in factors):
                raise SpecParseError("factors must be a list of place indices")
            factors = sorted(set(factors))
        labels = data.get("labels") or default_labels(len(generators))
        if len(labels) != len(generators):
            raise SpecParseError(f"{len(labels)} labels for {len(generators)} generators")

        quaternion = data.get("quaternion")
        if quaternion is not None:
            if not isinstance(quaternion, dict) or "a" not in quaternion or "b" not in quaternion:
                raise SpecParseError("quaternion needs 'a' and 'b'")
            quaternion = {
                "a": _padded(quaternion["a"], degree, "quaternion.a"),
                "b": _padded(quaternion["b"], degree, "quaternion.b"),
            }
        return cls(str(data.get("label", "custom")), field_spec, generators, factors, list(labels), quaternion)

    @classmethod
    def from_json(cls, json_str: str) -> "GroupSpec":
        try:
            data = json.loads(json_str)
        except json.JSONDecodeError as exc:
            raise SpecParseError(f"invalid JSON: {exc}") from exc
        return cls.from_dict(data)

    @classmethod
    def from_file(cls, path: Path) -> "GroupSpec":
        try:
            text = Path(path).read_text(encoding="utf-8")
        except OSError as exc:
            raise SpecParseError(f"cannot read {path}: {exc}") from exc
        spec = cls.from_json(text)
        if spec.label == "custom":
            spec.label = f"custom:{Path(path).name}"
        return spec

    @classmethod
    def from_group(
        cls,
        label: str,
        ring,
        gens,
        labels: Optional[List[str]] = None,
        factors: Optional[List[int]] = None,
        identity: Optional[complex] = None,
        algebra: Optional[QuaternionAlgebra] = None,
    ) -> "GroupSpec":
        """Serialize exact generators; ``identity`` is only needed when the default place is wrong."""
        data = {
            "label": label,
            "field": ring.to_dict(),
            "generators": [g.to_list() for g in gens],
            "labels": labels or default_labels(len(gens)),
        }
        if identity is not None:
            data["field"]["identity"] = [identity.real, identity.imag]
        if factors is not None:
            data["factors"] = factors
        if algebra is not None:
            data["quaternion"] = {"a": algebra.a.to_list(), "b": algebra.b.to_list()}
        return cls.from_dict(data)

    def build(self, precision: int = DEFAULT_PRECISION, max_precision_factor: int = MAX_PRECISION_FACTOR):
        """(ring, generators, star context) with exact entries."""
        try:
            ring = self.field.build(precision, max_precision_factor)
        except ValueError as exc:
            raise SpecParseError(f"{self.label}: {exc}") from exc
        tower = isinstance(ring, TowerField)

        def scalar(value):
            if tower:
                return ring.element(ring.base.element(value[0]), ring.base.element(value[1]))
            return ring.element(value)

        gens = []
        for n, matrix in enumerate(self.generators):
            try:
                gens.append(MoebiusElement.from_rows(ring, [[scalar(x) for x in row] for row in matrix]))
            except ValueError as exc:
                raise SpecParseError(f"{self.label}: generator {n + 1}: {exc}") from exc

        if self.factors is None:
            ctx = StarContext.default(ring)
        else:
            bad = [i for i in self.factors if not 0 <= i < len(ring.places)]
            if bad or not self.factors:
                raise SpecParseError(f"{self.label}: factor indices {self.factors} outside 0..{len(ring.places) - 1}")
            ctx = StarContext.default(ring).subset(self.factors)
        return ring, gens, ctx

    def algebra(self, precision: int = DEFAULT_PRECISION) -> Optional[QuaternionAlgebra]:
        if self.quaternion is None:
            return None
        ring = self.field.build(precision)
        base = ring.base if isinstance(ring, TowerField) else ring
        try:
            return QuaternionAlgebra(base, base.element(self.quaternion["a"]), base.element(self.quaternion["b"]))
        except LclError as exc:
            raise SpecParseError(f"{self.label}: {exc}") from exc


def normalize(data: dict) -> dict:
    """Canonical form of a spec document: parse, then serialize."""
    return GroupSpec.from_dict(data).to_dict()
