import math
from functools import reduce
from typing import Sequence

from loguru import logger

from src.rings.descriptors import IdealizationZF2, Ring
from src.rings.elements import Element, Vector
from src.core.exceptions import RingMismatchError
from src.rings.operations import LinSolveWitness, ring_of
from src.ideals import modules
from src.ideals.models import FinIdeal, FreeSubmodule, SplitIdeal, StructuredIdeal, split_ideal
from src.ideals.printing import format_ideal


def to_structured(module: FreeSubmodule) -> StructuredIdeal:
    """Read a submodule of R¹ back as an ideal descriptor."""
    if module.rank != 1:
        raise ValueError(f"Expected a submodule of R¹, got rank {module.rank}")
    ring = module.ring
    if module.nil_span:
        assert isinstance(ring, IdealizationZF2)
        return split_ideal(ring, reduce(math.gcd, (g[0].a for g in module.gens), 0))  # type: ignore[union-attr]
    return FinIdeal(ring, tuple(g[0] for g in module.gens))


def zero_ideal(ring: Ring) -> FinIdeal:
    return FinIdeal(ring)


def unit_ideal(ring: Ring) -> FinIdeal:
    return FinIdeal(ring, (ring.one,))


def member(ideal: StructuredIdeal, x: Element) -> LinSolveWitness | bool | None:
    """
    FinIdeal: a witness over the canonical generators, or None.
    SplitIdeal: a plain boolean, since membership is read off the descriptor.
    """
    ideal.ring.check(x)
    if isinstance(ideal, SplitIdeal):
        return x.a % ideal.z_part == 0 if ideal.z_part else x.a == 0  # type: ignore[union-attr]
    coefficients = ideal.ring.lin_solve([(g,) for g in ideal.gens], (x,))  # type: ignore[arg-type]
    return None if coefficients is None else LinSolveWitness(tuple(coefficients))


def is_member(ideal: StructuredIdeal, x: Element) -> bool:
    found = member(ideal, x)
    return found if isinstance(found, bool) else found is not None


def ideal_contains(outer: StructuredIdeal, inner: StructuredIdeal) -> bool:
    """inner ⊆ outer."""
    return modules.contains(modules.ideal_module(outer), modules.ideal_module(inner))


def ideal_equal(left: StructuredIdeal, right: StructuredIdeal) -> bool:
    return left == right or (ideal_contains(left, right) and ideal_contains(right, left))


def intersect(left: StructuredIdeal, right: StructuredIdeal) -> StructuredIdeal:
    _same_ring(left.ring, right.ring)
    out = to_structured(modules.intersect_modules(modules.ideal_module(left), modules.ideal_module(right)))
    logger.debug(f"Intersection over {left.ring.spec}: {format_ideal(out)}")
    return out


def colon(ideal: StructuredIdeal, a: Element) -> StructuredIdeal:
    """{r : r·a ∈ ideal}."""
    ideal.ring.check(a)
    return to_structured(modules.kernel_of([(a,)], modules.ideal_module(ideal)))


def annihilator(x: Sequence[Element]) -> StructuredIdeal:
    """(0 : x) as the intersection of the coordinate annihilators."""
    if not x:
        raise ValueError("Annihilator of an empty vector")
    ring = ring_of(x[0])
    ring.check(*x)
    zero = zero_ideal(ring)
    return reduce(intersect, (colon(zero, xi) for xi in x))


def vector_annihilator(x: Vector) -> StructuredIdeal:
    """(0 : x) computed in one step as the kernel of r ↦ r·x."""
    ring = ring_of(x[0])
    return to_structured(modules.kernel_of([tuple(x)], FreeSubmodule.zero(ring, len(x))))


def submodule_colon(module: FreeSubmodule, m: Vector) -> StructuredIdeal:
    """{r : r·m ∈ module}."""
    if len(m) != module.rank:
        raise ValueError(f"Vector of length {len(m)} against a submodule of rank {module.rank}")
    module.ring.check(*m)
    return to_structured(modules.kernel_of([tuple(m)], module))


def component_projection(module: FreeSubmodule, i: int) -> FinIdeal:
    """Ideal generated by the i-th coordinates (1-based) of the generators."""
    if not 1 <= i <= module.rank:
        raise IndexError(f"Component {i} out of range 1..{module.rank}")
    return FinIdeal(module.ring, tuple(g[i - 1] for g in module.gens))


def coordinate_colon(module: FreeSubmodule, m: Vector) -> StructuredIdeal:
    """
    ⋂_i (proj_i(module) : m_i).

    Always contains `submodule_colon(module, m)` but may be strictly larger,
    for instance ⟨(1, 2)⟩ ⊆ ℤ² with m = (1, 1) gives ⟨2⟩ against ⟨0⟩.
    """
    if len(m) != module.rank:
        raise ValueError(f"Vector of length {len(m)} against a submodule of rank {module.rank}")
    parts = (colon(component_projection(module, i + 1), m[i]) for i in range(module.rank))
    return reduce(intersect, parts)


def ideal_sum(left: StructuredIdeal, right: StructuredIdeal) -> StructuredIdeal:
    _same_ring(left.ring, right.ring)
    if isinstance(left, FinIdeal) and isinstance(right, FinIdeal):
        return FinIdeal(left.ring, left.gens + right.gens)
    return to_structured(modules.module_sum(modules.ideal_module(left), modules.ideal_module(right)))


def scale(ideal: StructuredIdeal, s: Element) -> StructuredIdeal:
    """s·ideal; for Split descriptors the nil part survives only when s has odd ℤ-part."""
    ideal.ring.check(s)
    if isinstance(ideal, FinIdeal):
        return FinIdeal(ideal.ring, tuple(ideal.ring.mul(s, g) for g in ideal.gens))  # type: ignore[arg-type]
    return to_structured(modules.scale_module(modules.ideal_module(ideal), s))


def canonicalize(ideal: StructuredIdeal) -> StructuredIdeal:
    return to_structured(modules.ideal_module(ideal))


def _same_ring(left: Ring, right: Ring) -> None:
    if left != right:
        raise RingMismatchError(left.spec, right.spec)
