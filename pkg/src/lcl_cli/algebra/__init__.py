"""Exact algebra: number fields, quadratic towers, quaternion algebras."""

from .exactnum import (
    FieldElement,
    NumberField,
    Place,
    Sign,
    TowerElement,
    TowerField,
    TowerPlace,
    certified_sign,
    field_create,
    is_algebraic_integer,
    is_real_at,
    min_poly,
    restriction_kind,
    subfield_generated,
    working_precision,
)
from .quaternion import Quaternion, QuaternionAlgebra, StandardOrder

__all__ = [
    "FieldElement",
    "NumberField",
    "Place",
    "Sign",
    "TowerElement",
    "TowerField",
    "TowerPlace",
    "certified_sign",
    "field_create",
    "is_algebraic_integer",
    "is_real_at",
    "min_poly",
    "restriction_kind",
    "subfield_generated",
    "working_precision",
    "Quaternion",
    "QuaternionAlgebra",
    "StandardOrder",
]
