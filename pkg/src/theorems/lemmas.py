"""
Certificate transformers for short exact sequences, intersections and the
c-S to S passage.

Each transformer multiplies the s-values of its inputs instead of searching
for a smaller one; `shrink_s` is the optional bounded pass that tries to
undo that afterwards.
"""
from dataclasses import replace
from functools import reduce
from typing import Optional, Sequence

from loguru import logger

from src.config import budget_settings
from src.core.exceptions import CertificateError, InvalidClaimError, NotExactError
from src.certificates.models import CSFPCert, SFiniteCert, SFPCert, USFPCert
from src.certificates.mult_set import MultSet
from src.certificates.search import find_s_finite
from src.certificates.verify import ensure_verified, verify, verify_csfp, verify_s_finite, verify_sfp
from src.ideals import arith, modules
from src.ideals.models import FinIdeal, FreeSubmodule, SplitIdeal, Subquotient, Target
from src.ideals.printing import format_element, format_target
from src.rings.descriptors import Ring
from src.rings.elements import Element, Vector
from src.theorems.extensions import ExtensionData, lift_all


def provenance(cert: SFiniteCert | CSFPCert) -> tuple[Element, ...]:
    """The recorded s-factors, or s itself when nothing was recorded."""
    if cert.factors:
        return cert.factors
    return () if cert.s == cert.ring.one else (cert.s,)


def same_module(left: Target, right: Target) -> bool:
    a, b = modules.as_subquotient(left), modules.as_subquotient(right)
    return (
        a.rank == b.rank
        and modules.equal(a.relations, b.relations)
        and modules.equal(modules.ambient(a), modules.ambient(b))
    )


def _require(report_ok: bool, failures: Sequence[str], what: str) -> None:
    if not report_ok:
        raise InvalidClaimError(what, f"input certificate does not verify ({', '.join(failures)})")


def _check_sfp(cert: SFPCert, module: Subquotient, what: str) -> None:
    report = verify_sfp(cert, module)
    _require(report.ok, report.failures, what)


def _check_s_finite(cert: SFiniteCert, module: Subquotient, what: str) -> None:
    report = verify_s_finite(cert)
    _require(report.ok, report.failures, what)
    if not same_module(cert.target, module):
        raise InvalidClaimError(what, f"certificate targets {format_target(cert.target)}, not {format_target(module)}")


def _shared_mult_set(*certs: SFiniteCert | CSFPCert) -> MultSet:
    mult_set = certs[0].mult_set
    for cert in certs[1:]:
        if cert.mult_set.ring != mult_set.ring or cert.mult_set.gens != mult_set.gens:
            raise InvalidClaimError("multiplicative set", "certificates over different multiplicative sets")
    return mult_set


def _product(mult_set: MultSet, *certs: SFiniteCert | CSFPCert) -> tuple[Element, tuple[int, ...], tuple[Element, ...]]:
    """s, exponent vector and factors of the product of the certificates' s-values."""
    ring = mult_set.ring
    s = reduce(ring.mul, (c.s for c in certs), ring.one)  # type: ignore[arg-type]
    exponents = tuple(sum(e) for e in zip(*(c.s_exponents for c in certs)))
    factors = tuple(f for c in certs for f in provenance(c))
    return s, exponents, factors


def _nonzero(ring: Ring, vectors: Sequence[Vector]) -> tuple[Vector, ...]:
    out: list[Vector] = []
    for v in vectors:
        if any(not ring.is_zero(x) for x in v) and v not in out:  # type: ignore[arg-type]
            out.append(v)
    return tuple(out)


def _is_zero_module(module: Subquotient) -> bool:
    return modules.contains(module.relations, module.sub)


def compose_sfp(
    ext: ExtensionData,
    cert_left: SFPCert,
    cert_right: SFPCert,
    lifts: Optional[Sequence[Vector]] = None,
    validate: bool = True,
) -> SFPCert:
    """
    M is S-finitely presented when M' and M'' are.

    The presentation of M is ι(p') followed by lifts of the presentation of
    M''. Kernel generators are (j', 0) for j' in J' and (−d, j'') for j'' in
    J'', where d writes Σ j''·lifts back over ι(p'). s = s'·s''.
    """
    if validate:
        _check_sfp(cert_left, ext.left, "certificate for M'")
        _check_sfp(cert_right, ext.right, "certificate for M''")
    ring = ext.ring
    mult_set = _shared_mult_set(cert_left.kernel_cert, cert_right.kernel_cert)
    if lifts is None:
        lifted = lift_all(ext.projection, cert_right.presentation)
    else:
        lifted = [tuple(v) for v in lifts]
        if len(lifted) != len(cert_right.presentation):
            raise InvalidClaimError("lifts", f"expected {len(cert_right.presentation)} lifts, got {len(lifted)}")
        for v, h in zip(lifted, cert_right.presentation):
            diff = ring.add_vectors(ext.projection(v), tuple(ring.neg(x) for x in h))  # type: ignore[arg-type]
            if not modules.in_subquotient(ext.middle, v) or not modules.has_vector(ext.right.relations, diff):
                raise InvalidClaimError("lifts", "a lift does not map onto its presentation vector")
    head = [ext.inclusion(p) for p in cert_left.presentation]
    presentation = head + lifted
    kernel = modules.kernel_of(presentation, ext.middle.relations)

    padding = ring.zero_vector(len(lifted))
    j_gens = [tuple(j) + padding for j in cert_left.kernel_cert.j_gens]
    for z in cert_right.kernel_cert.j_gens:
        x = ring.combine(z, lifted, ext.middle.rank)  # type: ignore[arg-type]
        d = modules.express(ext.middle, x, head)
        if d is None:
            raise NotExactError("a relation of M'' does not come from M'")
        j_gens.append(tuple(ring.neg(v) for v in d) + tuple(z))  # type: ignore[arg-type]

    s, exponents, factors = _product(mult_set, cert_left.kernel_cert, cert_right.kernel_cert)
    kernel_cert = SFiniteCert(mult_set, s, exponents, _nonzero(ring, j_gens), kernel, factors)
    logger.debug(f"Composed presentation on {len(presentation)} generators with s = {format_element(s)}")
    return ensure_verified(SFPCert(ext.middle, tuple(presentation), kernel, kernel_cert))


def quotient_sfp(ext: ExtensionData, s_finite_left: SFiniteCert, cert_middle: SFPCert, validate: bool = True) -> SFPCert:
    """
    M'' is S-finitely presented when M' is S-finite and M is S-finitely presented.

    The presentation of M'' is π(p). Kernel generators are those of M together
    with the coefficients writing ι(j') over p, for j' in J'. s = s'·s_M.
    """
    if validate:
        _check_s_finite(s_finite_left, ext.left, "S-finite certificate for M'")
        _check_sfp(cert_middle, ext.middle, "certificate for M")
    ring = ext.ring
    presentation = tuple(ext.projection(p) for p in cert_middle.presentation)
    kernel = modules.kernel_of(presentation, ext.right.relations)
    inner = cert_middle.kernel_cert

    if _is_zero_module(ext.left):
        # π is an isomorphism, so the kernel and its certificate carry over
        if modules.equal(kernel, cert_middle.kernel):
            kernel, kernel_cert = cert_middle.kernel, inner
        else:
            kernel_cert = replace(inner, target=kernel)
        return ensure_verified(SFPCert(ext.right, presentation, kernel, kernel_cert))

    mult_set = _shared_mult_set(s_finite_left, inner)
    extra = []
    for j in s_finite_left.j_gens:
        e = modules.express(ext.middle, ext.inclusion(j), cert_middle.presentation)
        if e is None:
            raise NotExactError("an element of M' is not reached by the presentation of M")
        extra.append(tuple(e))
    s, exponents, factors = _product(mult_set, s_finite_left, inner)
    kernel_cert = SFiniteCert(mult_set, s, exponents, _nonzero(ring, list(inner.j_gens) + extra), kernel, factors)
    logger.debug(f"Quotient presentation with s = {format_element(s)}")
    return ensure_verified(SFPCert(ext.right, presentation, kernel, kernel_cert))


def kernel_s_finite(ext: ExtensionData, cert_right: SFPCert, s_finite_middle: SFiniteCert, validate: bool = True) -> SFiniteCert:
    """
    M' is S-finite when M'' is S-finitely presented and M is S-finite.

    With λ lifting the presentation h of M'', every j in J_M splits as
    u + Σ γ·λ where π(j) = Σ γ·h, and u lies in ι(M'). The generators of M'
    are the preimages of these u and of Σ z·λ for z in J''. s = s_M·s''.
    """
    if validate:
        _check_sfp(cert_right, ext.right, "certificate for M''")
        _check_s_finite(s_finite_middle, ext.middle, "S-finite certificate for M")
    ring = ext.ring

    if _is_zero_module(ext.right):
        images = list(s_finite_middle.j_gens)
        mult_set = s_finite_middle.mult_set
        s, exponents, factors = s_finite_middle.s, s_finite_middle.s_exponents, s_finite_middle.factors
    else:
        mult_set = _shared_mult_set(s_finite_middle, cert_right.kernel_cert)
        lifted = lift_all(ext.projection, cert_right.presentation)
        images = []
        for j in s_finite_middle.j_gens:
            gamma = modules.express(ext.right, ext.projection(j), cert_right.presentation)
            if gamma is None:
                raise NotExactError("the presentation of M'' misses the image of a generator of M")
            back = ring.combine(gamma, lifted, ext.middle.rank)  # type: ignore[arg-type]
            images.append(ring.add_vectors(j, tuple(ring.neg(x) for x in back)))  # type: ignore[arg-type]
        for z in cert_right.kernel_cert.j_gens:
            images.append(ring.combine(z, lifted, ext.middle.rank))  # type: ignore[arg-type]
        s, exponents, factors = _product(mult_set, s_finite_middle, cert_right.kernel_cert)

    j_gens = []
    for u in images:
        y = ext.inclusion.lift(u)
        if y is None:
            raise NotExactError("an element of ker(π) is not in the image of ι")
        j_gens.append(y)
    cert = SFiniteCert(mult_set, s, exponents, _nonzero(ring, j_gens), ext.left, factors)
    logger.debug(f"Kernel certificate with {len(cert.j_gens)} generators and s = {format_element(s)}")
    return ensure_verified(cert)


def _meet_targets(left: Target, right: Target) -> Target:
    if isinstance(left, (FinIdeal, SplitIdeal)) and isinstance(right, (FinIdeal, SplitIdeal)):
        return arith.intersect(left, right)
    a, b = modules.as_subquotient(left), modules.as_subquotient(right)
    if not (a.relations.is_zero and b.relations.is_zero) or a.rank != b.rank:
        raise InvalidClaimError("intersection", "targets must be submodules of one free module")
    return modules.intersect_modules(a.sub, b.sub)


def _cap_pair(left: SFiniteCert, right: SFiniteCert, budget: Optional[int]) -> SFiniteCert:
    mult_set = _shared_mult_set(left, right)
    ring = mult_set.ring
    target = _meet_targets(left.target, right.target)
    rank = modules.as_subquotient(target).rank
    meet = modules.intersect_modules(
        FreeSubmodule(ring, rank, left.j_gens), FreeSubmodule(ring, rank, right.j_gens)
    )
    parts: list[SFiniteCert] = [left, right]
    if meet.finitely_generated:
        j_gens = meet.gens
    else:
        # J₁ ∩ J₂ need not be finitely generated; one more factor from S covers it
        extra = find_s_finite(meet, mult_set, budget)
        parts.append(extra)
        j_gens = extra.j_gens
        logger.debug(f"Intersection of J's needed extra factor {format_element(extra.s)}")
    s, exponents, factors = _product(mult_set, *parts)
    return SFiniteCert(mult_set, s, exponents, _nonzero(ring, j_gens), target, factors)


def cap_compose(certs: Sequence[SFiniteCert], budget: Optional[int] = None, validate: bool = True) -> SFiniteCert:
    """
    S-finite certificate for the intersection of the targets, folding from the
    left with s = s₁·s₂ and J = J₁ ∩ J₂.
    """
    if not certs:
        raise ValueError("cap_compose needs at least one certificate")
    if validate:
        for i, cert in enumerate(certs):
            report = verify_s_finite(cert)
            _require(report.ok, report.failures, f"certificate {i + 1}")
    out = certs[0]
    for cert in certs[1:]:
        out = ensure_verified(_cap_pair(out, cert, budget))
    return out


def usfp_from_csfp(module: Subquotient, csfp: CSFPCert) -> USFPCert:
    """
    The u-S presentation R^|N| / syzygies → M through the generators of N:
    T₁ = 0 and s·T₂ = 0 because s·M ⊆ N.
    """
    ring = module.ring
    cokernel = []
    for g in module.gens:
        b = modules.express(module, ring.scale_vector(csfp.s, g), csfp.n_gens)  # type: ignore[arg-type]
        if b is None:
            raise InvalidClaimError("c-S certificate", "s·M is not inside N")
        cokernel.append(tuple(b))
    k = len(csfp.n_gens)
    cert = USFPCert(
        module=module,
        mult_set=csfp.mult_set,
        s=csfp.s,
        s_exponents=csfp.s_exponents,
        images=csfp.n_gens,
        source_relations=FreeSubmodule(ring, k, csfp.syzygies),
        kernel_gens=csfp.syzygies,
        cokernel_coefficients=tuple(cokernel),
    )
    return ensure_verified(cert)


def exccs_kernel_cert(
    module: Subquotient,
    csfp: CSFPCert,
    presentation: Optional[Sequence[Vector]] = None,
    validate: bool = True,
) -> SFiniteCert:
    """
    S-finite certificate for K in 0 → K → R^k → M → 0 from a c-S certificate.

    With a_i writing n_i over the presentation and α(z) = Σ z_i·a_i, the
    generators are α(z) for every syzygy z of N and s·e_j − α(b_j), where b_j
    writes s·g_j over N. The s of the c-S certificate is kept.
    """
    if validate:
        report = verify_csfp(csfp, module)
        _require(report.ok, report.failures, "c-S certificate")
    ring = module.ring
    gens = [tuple(g) for g in (presentation if presentation is not None else module.gens)]
    generated = FreeSubmodule(ring, module.rank, tuple(gens))
    if not modules.contains(modules.module_sum(generated, module.relations), module.sub):
        raise InvalidClaimError("presentation", "the given vectors do not generate the module")
    k = len(gens)
    kernel = modules.kernel_of(gens, module.relations)

    coefficients = []
    for n in csfp.n_gens:
        a = modules.express(module, n, gens)
        if a is None:
            raise InvalidClaimError("c-S certificate", "a generator of N lies outside the module")
        coefficients.append(tuple(a))

    def alpha(z: Sequence[Element]) -> Vector:
        return ring.combine(z, coefficients, k)  # type: ignore[arg-type]

    if presentation is None or tuple(gens) == module.gens:
        usfp = usfp_from_csfp(module, csfp)
        scaled = list(usfp.cokernel_coefficients)
    else:
        scaled = []
        for g in gens:
            b = modules.express(module, ring.scale_vector(csfp.s, g), csfp.n_gens)  # type: ignore[arg-type]
            if b is None:
                raise InvalidClaimError("c-S certificate", "s·M is not inside N")
            scaled.append(tuple(b))

    j_gens = [alpha(z) for z in csfp.syzygies]
    for j, b in enumerate(scaled):
        e = ring.scale_vector(csfp.s, ring.unit_vector(k, j))  # type: ignore[arg-type]
        j_gens.append(ring.add_vectors(e, tuple(ring.neg(x) for x in alpha(b))))  # type: ignore[arg-type]
    cert = SFiniteCert(csfp.mult_set, csfp.s, csfp.s_exponents, _nonzero(ring, j_gens), kernel, provenance(csfp))
    return ensure_verified(cert)


def cs_implies_s_derivation(ideal: FinIdeal, a: Element, csfp: CSFPCert, validate: bool = True) -> SFiniteCert:
    """
    S-finite certificate for (I : a) from a c-S certificate for J = I + Ra.

    The kernel of R^{n+1} → J sending e_i to the generators of I and the
    last basis vector to a projects onto (I : a) along its last coordinate.
    """
    ring = ideal.ring
    ring.check(a)
    gens = [(g,) for g in ideal.gens] + [(a,)]
    joined = Subquotient.of(FreeSubmodule(ring, 1, tuple(gens)))
    if not same_module(csfp.module, joined):
        raise InvalidClaimError("c-S certificate", f"targets {format_target(csfp.module)}, not I + Ra")
    kernel_cert = exccs_kernel_cert(csfp.module, csfp, gens, validate=validate)
    last = len(gens) - 1
    target = arith.colon(ideal, a)
    kernel = modules.as_subquotient(kernel_cert.target).sub
    projection = [tuple(ring.one if i == last else ring.zero for i in range(len(gens)))]
    projected = arith.to_structured(modules.push_forward(kernel, projection))
    if not arith.ideal_equal(projected, target):
        logger.warning(f"Projected kernel {format_target(projected)} differs from (I : a) = {format_target(target)}")
        raise CertificateError("s-finite", ["colon-cross-check"])
    j_gens = _nonzero(ring, [(v[last],) for v in kernel_cert.j_gens])
    cert = SFiniteCert(kernel_cert.mult_set, kernel_cert.s, kernel_cert.s_exponents, j_gens, target, kernel_cert.factors)
    return ensure_verified(cert)


def shrink_s(cert: SFiniteCert, budget: Optional[int] = None) -> SFiniteCert:
    """
    Try the elements of S of lower degree than the certificate's s, keeping J.

    Returns the first smaller s that still verifies, or the input.
    """
    budget = budget if budget is not None else budget_settings.EXPONENT_BUDGET
    degree = sum(cert.s_exponents)
    ring = cert.ring
    for exponents, s in cert.mult_set.elements(budget):
        if sum(exponents) >= degree:
            break
        candidate = replace(cert, s=s, s_exponents=exponents, factors=() if s == ring.one else (s,))
        if verify(candidate).ok:
            logger.debug(f"Shrunk s from {format_element(cert.s)} to {format_element(s)}")
            return candidate
    return cert
