"""Catalog of ready-made groups: Hecke, diagonal PSL(2,Z), a Hilbert modular sample, a quaternion unit group."""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Callable, Dict, Optional

from ..algebra.exactnum import DEFAULT_PRECISION, NumberField, is_algebraic_integer
from ..algebra.quaternion import QuaternionAlgebra, embed_unit
from ..errors import SpecParseError, UnsupportedParameter
from ..groups.moebius import MoebiusElement
from .schemas import GroupSpec

logger = logging.getLogger(__name__)

# Minimal polynomials of 2cos(pi/m), constant term first.
HECKE_MINPOLYS: Dict[int, tuple] = {
    3: (-1, 1),
    4: (-2, 0, 1),
    5: (-1, -1, 1),
    6: (-3, 0, 1),
    7: (1, -2, -1, 1),
    8: (2, 0, -4, 0, 1),
    10: (5, 0, -5, 0, 1),
    12: (1, 0, -4, 0, 1),
}

# Totally real fields of degree r used to embed PSL(2,Z) diagonally into r factors.
DIAGONAL_FIELDS: Dict[int, tuple] = {
    1: (0, 1),
    2: (-2, 0, 1),
    3: (-1, -2, 1, 1),
    4: (2, 0, -4, 0, 1),
}

# Q(sqrt 5), the golden ratio as generator.
HILBERT_MINPOLY = (-1, -1, 1)

# (sqrt 2, -1 / Q(sqrt 2)) and units of its standard order: (x0, x1) with x0^2 - sqrt2 x1^2 = 1.
QUAT_REMARK_MINPOLY = (-2, 0, 1)
QUAT_REMARK_UNIT = ((3, 2), (2, 2))


def _int_param(name: str, params, allowed) -> int:
    try:
        value = int(params)
    except (TypeError, ValueError):
        raise UnsupportedParameter(f"{name} expects an integer parameter, got {params!r}")
    if value not in allowed:
        raise UnsupportedParameter(f"{name}:{value} is not supported (choose from {sorted(allowed)})")
    return value


def _generators_st(field: NumberField, translation) -> list[MoebiusElement]:
    s = MoebiusElement.from_rows(field, [[0, 1], [-1, 0]])
    t = MoebiusElement.from_rows(field, [[1, translation], [0, 1]])
    return [s, t]


def hecke(m, precision: int = DEFAULT_PRECISION) -> GroupSpec:
    """The (2, m, infinity) Hecke group generated by S and T = [[1, 2cos(pi/m)], [0, 1]]."""
    m = _int_param("hecke", m, HECKE_MINPOLYS)
    field = NumberField(HECKE_MINPOLYS[m], precision)
    algebra = QuaternionAlgebra(field, 1, 1)
    return GroupSpec.from_group(
        f"hecke:{m}", field, _generators_st(field, field.gen()), ["S", "T"], algebra=algebra
    )


def psl2z_diag(r, precision: int = DEFAULT_PRECISION) -> GroupSpec:
    """PSL(2,Z) placed diagonally in r real factors through a totally real field of degree r."""
    r = _int_param("psl2z-diag", r, DIAGONAL_FIELDS)
    field = NumberField(DIAGONAL_FIELDS[r], precision)
    return GroupSpec.from_group(f"psl2z-diag:{r}", field, _generators_st(field, 1), ["S", "T"])


def hilbert_sample(params=None, precision: int = DEFAULT_PRECISION) -> GroupSpec:
    """S, T and T_phi in PSL(2, O_F) for F = Q(sqrt 5); a generating sample, not a full presentation."""
    field = NumberField(HILBERT_MINPOLY, precision)
    gens = _generators_st(field, 1)
    gens.append(MoebiusElement.from_rows(field, [[1, field.gen()], [0, 1]]))
    algebra = QuaternionAlgebra(field, 1, 1)
    return GroupSpec.from_group("hilbert-sample", field, gens, ["S", "T", "U"], algebra=algebra)


def quat_remark(params=None, precision: int = DEFAULT_PRECISION) -> GroupSpec:
    """Norm-one units u = x0 + x1 i, v = x0 + x1 k and j of the standard order of (sqrt 2, -1 / Q(sqrt 2))."""
    field = NumberField(QUAT_REMARK_MINPOLY, precision)
    algebra = QuaternionAlgebra(field, field.gen(), -1)
    x0, x1 = (field.element(c) for c in QUAT_REMARK_UNIT)
    units = [algebra.element(x0, x1), algebra.element(x0, 0, 0, x1), algebra.j()]
    gens = [embed_unit(x) for x in units]
    return GroupSpec.from_group("quat-remark", algebra.tower, gens, ["u", "v", "j"], algebra=algebra)


def custom(path, precision: int = DEFAULT_PRECISION) -> GroupSpec:
    if not path:
        raise SpecParseError("custom needs a spec file: custom:<path>")
    return GroupSpec.from_file(Path(path))


CATALOG: Dict[str, tuple[Callable[..., GroupSpec], str, str]] = {
    "hecke": (hecke, "m in {3,4,5,6,7,8,10,12}", "Hecke group of type (2, m, oo) over Q(2cos(pi/m))"),
    "psl2z-diag": (psl2z_diag, "r in {1,2,3,4}", "PSL(2,Z) embedded diagonally in r real factors"),
    "hilbert-sample": (hilbert_sample, "-", "S, T, T_phi in the Hilbert modular group of Q(sqrt 5)"),
    "quat-remark": (quat_remark, "-", "unit group sample of (sqrt 2, -1 / Q(sqrt 2)), real x real x complex"),
    "custom": (custom, "path", "group read from a GroupSpec JSON file"),
}


def catalog(name: str, params=None, precision: int = DEFAULT_PRECISION) -> GroupSpec:
    if name not in CATALOG:
        raise UnsupportedParameter(f"unknown catalog group {name!r} (choose from {', '.join(CATALOG)})")
    builder = CATALOG[name][0]
    spec = builder(params, precision=precision)
    logger.info("catalog %s: %d generators", spec.label, len(spec.generators))
    return spec


def parse_group(text: str, precision: int = DEFAULT_PRECISION) -> GroupSpec:
    """``name`` or ``name:params`` as given to ``--group``."""
    name, _, params = text.partition(":")
    return catalog(name.strip(), params.strip() or None, precision)


def in_psl2_ok(g: MoebiusElement, field) -> bool:
    """Unit determinant and integral entries over ``field``."""
    ring = g.ring
    if ring is not field and getattr(ring, "minpoly", None) != getattr(field, "minpoly", ()):
        return False
    if (g.a * g.d - g.b * g.c) != 1:
        return False
    return all(x.is_zero() or is_algebraic_integer(x) for x in g.entries)


def group_spec(group: Optional[str] = None, spec_file: Optional[str] = None, precision: int = DEFAULT_PRECISION) -> GroupSpec:
    if spec_file:
        return GroupSpec.from_file(Path(spec_file))
    if group:
        return parse_group(group, precision)
    raise SpecParseError("pass --group name:params or --spec file.json")
