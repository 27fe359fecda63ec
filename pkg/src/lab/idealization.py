"""
Ideal theory of ℤ(+)(ℤ/2ℤ)^(ℕ) with S = {(2, 0)ⁿ}: the ideals inside
⟨(2, 0)⟩ and counterexample generators showing that ⟨(2m, ∅)⟩ is not
finitely presented and that ⟨(2, 0)⟩ has no c-S witness.

Every refutation re-checks its witness through the ring operations and the
membership oracle, not through the construction that produced it.
"""
from random import Random
from typing import Optional, Sequence

from loguru import logger

from src.config import settings
from src.core.exceptions import InvalidClaimError
from src.core.schemas.reports import Obligation, RefutationTrace
from src.core.utils import trial_rng
from src.ideals import arith
from src.ideals.models import FinIdeal, SplitIdeal, StructuredIdeal
from src.ideals.printing import format_element, format_ideal
from src.rings.descriptors import IdealizationZF2
from src.rings.elements import Pair
from src.rings.operations import ElemOp, elem_op
from src.theorems.sampling import SamplerConfig, sample_element, sample_ideal

RING = IdealizationZF2()
TWO = Pair(2)
PRONG_NOT_FP = "not-finitely-presented"
PRONG_POWER = "power-escapes"


def principal_2_0() -> FinIdeal:
    """⟨(2, 0)⟩ = {(2m, 0) : m ∈ ℤ}."""
    return FinIdeal(RING, (TWO,))


def _is_even_principal(ideal: StructuredIdeal) -> bool:
    """⟨0⟩ or ⟨(2m, ∅)⟩."""
    if not isinstance(ideal, FinIdeal):
        return False
    if ideal.is_zero:
        return True
    if len(ideal.gens) != 1:
        return False
    g = ideal.gens[0]
    return isinstance(g, Pair) and not g.support and g.a % 2 == 0


def _inside_2_0(ideal: StructuredIdeal) -> bool:
    return arith.ideal_contains(principal_2_0(), ideal)


def classify_ideals_inside_2_0(
    bound: int,
    samples: int = 200,
    seed: Optional[int] = None,
    config: Optional[SamplerConfig] = None,
) -> list[StructuredIdeal]:
    """
    [⟨0⟩, ⟨(2, ∅)⟩, ..., ⟨(2·bound, ∅)⟩].

    Each listed ideal is checked to lie inside ⟨(2, 0)⟩. The classification is
    then tested on `samples` ideals inside ⟨(2, 0)⟩, built as (2, 0)·I and as
    I ∩ ⟨(2, 0)⟩ for sampled I; one outside the form ⟨(2m, ∅)⟩ raises
    InvalidClaimError.
    """
    if bound < 1:
        raise ValueError(f"Bound must be at least 1, got {bound}")
    seed = seed if seed is not None else settings.SEED
    config = config or SamplerConfig()
    ideals: list[StructuredIdeal] = [FinIdeal(RING)]
    ideals += [FinIdeal(RING, (Pair(2 * m),)) for m in range(1, bound + 1)]
    for ideal in ideals:
        if not _inside_2_0(ideal):
            raise InvalidClaimError(format_ideal(ideal), "not contained in ⟨(2, 0)⟩")

    for i in range(samples):
        rng = trial_rng(seed, i)
        ideal = sample_ideal(RING, rng, config)
        for inside in (arith.scale(ideal, TWO), arith.intersect(ideal, principal_2_0())):
            canonical = arith.canonicalize(inside)
            if not _inside_2_0(canonical) or not _is_even_principal(canonical):
                raise InvalidClaimError(
                    "ideals inside ⟨(2, 0)⟩ are ⟨(2m, ∅)⟩",
                    f"sample {i} gives {format_ideal(canonical)} from {format_ideal(ideal)}",
                )
    logger.debug(f"Classified {len(ideals)} ideals inside ⟨(2, 0)⟩ against {samples} samples")
    return ideals


def _max_support(claimed: Sequence[Pair]) -> int:
    return max((max(z.support, default=0) for z in claimed), default=0)


def refute_finitely_presented(m: int, claimed: Sequence[Pair]) -> RefutationTrace:
    """
    Against any finite list of relations on the generator (2m, ∅), produce a
    relation outside their span.

    All relations lie in 0(+)F₂^(ℕ), so with B the largest index used by the
    claimed list, (0, e_{B+1}) kills (2m, ∅) and is not a combination of them.
    """
    if m < 1:
        raise ValueError(f"m must be positive, got {m}")
    generator = Pair(2 * m)
    claimed = list(claimed)
    RING.check(*claimed)
    for z in claimed:
        if not RING.is_zero(RING.mul(z, generator)):
            raise InvalidClaimError(
                f"{format_element(z)} is a relation on {format_element(generator)}",
                f"the product is {format_element(RING.mul(z, generator))}",
            )
    bound = _max_support(claimed)
    witness = Pair(0, frozenset({bound + 1}))
    span = FinIdeal(RING, tuple(claimed))
    annihilator = arith.annihilator((generator,))
    checks = [
        Obligation(
            name="is-relation",
            passed=elem_op(ElemOp.MUL, witness, generator) == RING.zero,
            detail=f"{format_element(witness)}·{format_element(generator)}",
        ),
        Obligation(
            name="outside-claimed-span",
            passed=not arith.is_member(span, witness),
            detail=f"{format_element(witness)} ∉ {format_ideal(span)}",
        ),
        Obligation(
            name="annihilator-not-finitely-generated",
            passed=isinstance(annihilator, SplitIdeal) and annihilator.z_part == 0,
            detail=f"(0 : {format_element(generator)}) = {format_ideal(annihilator)}",
        ),
    ]
    trace = RefutationTrace.from_checks(
        claim=f"relations of {format_element(generator)} generated by {format_ideal(span)}",
        witness=format_element(witness),
        checks=checks,
    )
    logger.debug(f"Refuted finite presentation of ⟨{format_element(generator)}⟩ with {trace.witness}")
    return trace


def sample_claimed_syzygies(m: int, rng: Random, count: int, config: Optional[SamplerConfig] = None) -> list[Pair]:
    """`count` genuine relations (0, w) on (2m, ∅), w read off sampled elements."""
    out = []
    for _ in range(count):
        x = sample_element(RING, rng, config)
        out.append(Pair(0, x.support))  # type: ignore[union-attr]
    logger.debug(f"Claimed syzygies for m = {m}: {', '.join(format_element(z) for z in out) or 'none'}")
    return out


def _power(s: Pair, n: int) -> Pair:
    out = RING.one
    for _ in range(n):
        out = elem_op(ElemOp.MUL, out, s)  # type: ignore[assignment]
    return out  # type: ignore[return-value]


def refute_csfp(candidate: StructuredIdeal, n: int, claimed: Sequence[Pair] = ()) -> RefutationTrace:
    """
    Show that N = `candidate` does not witness ⟨(2, 0)⟩ as c-S-finitely
    presented with s = (2, 0)ⁿ.

    N = ⟨(2m, ∅)⟩ is not finitely presented (`claimed` is the finite list of
    relations it is refuted against). N = ⟨0⟩ misses (2, 0)ⁿ·(2, ∅) = (2ⁿ⁺¹, ∅).
    """
    if n < 1:
        raise ValueError(f"Exponent must be at least 1, got {n}")
    candidate = arith.canonicalize(candidate)
    if not _inside_2_0(candidate):
        raise InvalidClaimError(format_ideal(candidate), "not contained in ⟨(2, 0)⟩")
    assert isinstance(candidate, FinIdeal)

    if not candidate.is_zero:
        generator = candidate.gens[0]
        inner = refute_finitely_presented(generator.a // 2, claimed)  # type: ignore[union-attr]
        return RefutationTrace.from_checks(
            claim=f"N = {format_ideal(candidate)} with s = (2, 0)^{n}",
            witness=inner.witness,
            checks=inner.checks,
            prong=PRONG_NOT_FP,
        )

    s_n = _power(TWO, n)
    witness = elem_op(ElemOp.MUL, s_n, TWO)
    expected = Pair(2 ** (n + 1))
    checks = [
        Obligation(
            name="closed-form",
            passed=witness == expected,
            detail=f"(2, 0)^{n}·(2, ∅) = {format_element(witness)}",  # type: ignore[arg-type]
        ),
        Obligation(name="nonzero", passed=witness != RING.zero, detail=format_element(witness)),  # type: ignore[arg-type]
        Obligation(
            name="in-s-multiple",
            passed=arith.is_member(arith.scale(principal_2_0(), s_n), witness),  # type: ignore[arg-type]
            detail=f"{format_element(witness)} ∈ (2, 0)^{n}·⟨(2, 0)⟩",  # type: ignore[arg-type]
        ),
        Obligation(
            name="outside-candidate",
            passed=not arith.is_member(candidate, witness),  # type: ignore[arg-type]
            detail=f"{format_element(witness)} ∉ {format_ideal(candidate)}",  # type: ignore[arg-type]
        ),
    ]
    return RefutationTrace.from_checks(
        claim=f"N = {format_ideal(candidate)} with s = (2, 0)^{n}",
        witness=format_element(witness),  # type: ignore[arg-type]
        checks=checks,
        prong=PRONG_POWER,
    )
