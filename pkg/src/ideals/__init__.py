from .arith import (
    annihilator,
    canonicalize,
    colon,
    component_projection,
    coordinate_colon,
    ideal_contains,
    ideal_equal,
    ideal_sum,
    intersect,
    is_member,
    member,
    scale,
    submodule_colon,
    to_structured,
    unit_ideal,
    vector_annihilator,
    zero_ideal,
)
from .models import FinIdeal, FreeSubmodule, SplitIdeal, StructuredIdeal, Subquotient, Target, split_ideal

__all__ = [
    "annihilator",
    "canonicalize",
    "colon",
    "component_projection",
    "coordinate_colon",
    "ideal_contains",
    "ideal_equal",
    "ideal_sum",
    "intersect",
    "is_member",
    "member",
    "scale",
    "submodule_colon",
    "to_structured",
    "unit_ideal",
    "vector_annihilator",
    "zero_ideal",
    "FinIdeal",
    "FreeSubmodule",
    "SplitIdeal",
    "StructuredIdeal",
    "Subquotient",
    "Target",
    "split_ideal",
]
