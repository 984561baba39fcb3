"""Group catalog: GroupSpec documents and preset builders."""

from .presets import CATALOG, catalog, group_spec, in_psl2_ok, parse_group
from .schemas import FieldSpec, GroupSpec, normalize

__all__ = [
    "CATALOG",
    "catalog",
    "group_spec",
    "in_psl2_ok",
    "parse_group",
    "FieldSpec",
    "GroupSpec",
    "normalize",
]
