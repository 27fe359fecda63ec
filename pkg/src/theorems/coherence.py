"""
S-finitely presented certificates for finitely generated submodules of free
modules and of finitely presented modules.
"""
from typing import Optional, Sequence

from loguru import logger

from src.core.exceptions import InvalidClaimError
from src.certificates.models import SFPCert
from src.certificates.mult_set import MultSet
from src.certificates.search import find_s_finite, trivial_s_finite
from src.certificates.verify import ensure_verified
from src.ideals import arith, modules
from src.ideals.models import FreeSubmodule, Subquotient
from src.ideals.printing import format_element, format_ideal, format_module
from src.rings.elements import Vector
from src.theorems.extensions import ExtensionData, PullbackData
from src.theorems.lemmas import compose_sfp, quotient_sfp


def _cyclic_cert(module: Subquotient, x: Vector, colon: FreeSubmodule, mult_set: MultSet, budget: Optional[int]) -> SFPCert:
    """R → module, 1 ↦ x, with kernel `colon`."""
    kernel_cert = find_s_finite(colon, mult_set, budget)
    return ensure_verified(SFPCert(module, (x,), colon, kernel_cert))


def free_scoherent_cert(module: FreeSubmodule, mult_set: MultSet, budget: Optional[int] = None) -> SFPCert:
    """
    SFP certificate for a finitely generated N ⊆ Rⁿ by induction on the number
    of generators.

    One generator: R/(0 : x₁) ≅ ⟨x₁⟩. Then each step is the extension
    0 → M_k → M_{k+1} → M_{k+1}/M_k → 0, where the quotient is cyclic with
    annihilator (M_k : x_{k+1}).
    """
    if not module.finitely_generated:
        raise InvalidClaimError(format_module(module), "the submodule must be finitely generated")
    if module.ring != mult_set.ring:
        raise InvalidClaimError("multiplicative set", f"S lives over '{mult_set.ring.spec}', N over '{module.ring.spec}'")
    ring, n = module.ring, module.rank
    gens = module.gens
    if not gens:
        zero = ring.zero_vector(n)
        target = Subquotient.of(module)
        kernel = modules.kernel_of([zero], target.relations)
        return ensure_verified(SFPCert(target, (zero,), kernel, trivial_s_finite(kernel, mult_set)))

    annihilator = arith.vector_annihilator(gens[0])
    logger.debug(f"(0 : {format_module(FreeSubmodule(ring, n, gens[:1]))}) = {format_ideal(annihilator)}")
    cert = _cyclic_cert(
        Subquotient.of(FreeSubmodule(ring, n, gens[:1])), gens[0], modules.ideal_module(annihilator), mult_set, budget
    )
    eye = tuple(modules.identity(ring, n))
    for k in range(1, len(gens)):
        current = FreeSubmodule(ring, n, gens[:k])
        x = gens[k]
        colon = arith.submodule_colon(current, x)
        quotient = Subquotient(FreeSubmodule(ring, n, (x,)), current)
        quotient_cert = _cyclic_cert(quotient, x, modules.ideal_module(colon), mult_set, budget)
        ext = ExtensionData(
            Subquotient.of(current), Subquotient.of(FreeSubmodule(ring, n, gens[: k + 1])), quotient, eye, eye
        )
        cert = compose_sfp(ext, cert, quotient_cert, lifts=[x], validate=False)
        logger.debug(f"Step {k + 1}: (M_k : x) = {format_ideal(colon)}, s = {format_element(cert.s)}")
    return cert


def fp_scoherent_cert(
    relations: FreeSubmodule,
    lifts: Sequence[Vector],
    mult_set: MultSet,
    budget: Optional[int] = None,
) -> SFPCert:
    """
    SFP certificate for L ⊆ M = F/K, L given by lifts to F.

    X = K + ⟨lifts⟩ is a finitely generated submodule of F, so it has a
    certificate by `free_scoherent_cert`; L = X/K then follows from the
    quotient step with K finitely generated.
    """
    pullback = PullbackData(relations.ring, relations.rank, relations, tuple(lifts))
    logger.debug(f"Pull-back: {pullback.describe()}")
    free_cert = free_scoherent_cert(pullback.x, mult_set, budget)
    ext = pullback.kernel_sequence()
    left_cert = trivial_s_finite(ext.left, mult_set)
    return quotient_sfp(ext, left_cert, free_cert, validate=False)
