from typing import Optional

from loguru import logger

from src.config import budget_settings
from src.core.exceptions import InconclusiveError
from src.certificates.models import CSFPCert, SFiniteCert, USFPCert
from src.certificates.mult_set import MultSet
from src.certificates.verify import ensure_verified
from src.ideals import modules
from src.ideals.models import FreeSubmodule, Subquotient, Target
from src.ideals.printing import format_element, format_target


def trivial_s_finite(target: Target, mult_set: MultSet) -> SFiniteCert:
    """s = 1 and J = the target's own generators; valid whenever the target is finitely generated."""
    module = modules.as_subquotient(target)
    return SFiniteCert(
        mult_set=mult_set,
        s=mult_set.ring.one,
        s_exponents=(0,) * len(mult_set.gens),
        j_gens=module.gens,
        target=target,
    )


def _zero_exponents(mult_set: MultSet, budget: int) -> Optional[tuple[int, ...]]:
    if not mult_set.contains_zero:
        return None
    return mult_set.contains(mult_set.ring.zero, max(budget, getattr(mult_set.ring, "modulus", 0)))


def find_s_finite(target: Target, mult_set: MultSet, budget: Optional[int] = None) -> SFiniteCert:
    """
    Search for s ∈ S and finitely many J with s·target ⊆ ⟨J⟩ ⊆ target.

    Order: s = 1 with the target's generators when it is finitely generated;
    s = 0 when 0 ∈ S; then elements of S by ascending degree until s·target
    loses its nil part, in which case J = the generators of s·target.
    """
    budget = budget if budget is not None else budget_settings.EXPONENT_BUDGET
    if budget < 1:
        raise ValueError(f"Budget must be at least 1, got {budget}")
    ring = mult_set.ring
    module = modules.as_subquotient(target)
    if module.sub.finitely_generated:
        return ensure_verified(trivial_s_finite(target, mult_set))

    zero_exponents = _zero_exponents(mult_set, budget)
    if zero_exponents is not None:
        cert = SFiniteCert(mult_set, ring.zero, zero_exponents, (), target, (ring.zero,))
        logger.debug(f"Degenerate certificate s = 0 for {format_target(target)}")
        return ensure_verified(cert)

    for exponents, s in mult_set.elements(budget):
        scaled = modules.scale_module(module.sub, s)
        if scaled.finitely_generated:
            cert = SFiniteCert(mult_set, s, exponents, scaled.gens, target, (s,))
            logger.debug(f"Found s = {format_element(s)} for {format_target(target)}")
            return ensure_verified(cert)
    raise InconclusiveError(f"S-finite certificate for {format_target(target)}", budget)


def find_csfp(module: Subquotient, mult_set: MultSet, budget: Optional[int] = None) -> CSFPCert:
    """
    Search for a finitely presented N with s·M ⊆ N ⊆ M.

    Tries N = M with s = 1 first, then N = s·M for s ∈ S by ascending degree;
    N qualifies when the relations among its generators are finitely generated.
    """
    budget = budget if budget is not None else budget_settings.EXPONENT_BUDGET
    for exponents, s in mult_set.elements(budget):
        n_module = modules.scale_module(module.sub, s)
        if not n_module.finitely_generated:
            continue
        n_gens = n_module.gens
        relations = modules.kernel_of(n_gens, module.relations)
        if relations.finitely_generated:
            cert = CSFPCert(
                module=module,
                mult_set=mult_set,
                s=s,
                s_exponents=exponents,
                n_gens=tuple(n_gens),
                syzygies=relations.gens,
                factors=(s,),
            )
            logger.debug(f"Found c-S witness with s = {format_element(s)} and {len(n_gens)} generators")
            return ensure_verified(cert)
    raise InconclusiveError(f"c-S-finitely presented witness for {format_target(module)}", budget)


def find_usfp(module: Subquotient, mult_set: MultSet) -> USFPCert:
    """u-S certificate through F = R^k → M on the module's own generators, when M is finitely presented."""
    kernel = modules.presentation_kernel(module)
    if not kernel.finitely_generated:
        raise InconclusiveError(f"u-S-finitely presented witness for {format_target(module)}", 1)
    ring = module.ring
    k = len(module.gens)
    cokernel = tuple(tuple(ring.one if j == i else ring.zero for j in range(k)) for i in range(k))
    cert = USFPCert(
        module=module,
        mult_set=mult_set,
        s=ring.one,
        s_exponents=(0,) * len(mult_set.gens),
        images=module.gens,
        source_relations=FreeSubmodule(ring, k, kernel.gens),
        kernel_gens=kernel.gens,
        cokernel_coefficients=cokernel,  # type: ignore[arg-type]
    )
    return ensure_verified(cert)
