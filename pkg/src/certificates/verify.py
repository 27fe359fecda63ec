"""
Certificate verifiers.

Every check is decided exactly (kernels over the supported rings always have
closed forms), so reports are either `verified` or `failed`. Failed
obligations are report entries, never exceptions.
"""
from functools import reduce
from typing import Callable, Optional, Sequence, TypeVar

from loguru import logger

from src.config import settings
from src.core.exceptions import AlgebraError, CertificateError
from src.core.schemas.reports import Obligation, VerifyReport
from src.certificates.models import Certificate, CSFPCert, SFiniteCert, SFPCert, USFPCert
from src.certificates.mult_set import MultSet
from src.ideals import modules
from src.ideals.models import FreeSubmodule, Subquotient
from src.ideals.printing import format_element, format_exponents, format_module, format_vector
from src.rings.descriptors import Ring
from src.rings.elements import Element, Vector

C = TypeVar("C", SFiniteCert, SFPCert, CSFPCert, USFPCert)


def matrix_of(vectors: Sequence[Vector], rank: int) -> list[Vector]:
    """Rows of the rank × k matrix whose columns are `vectors`."""
    return [tuple(v[i] for v in vectors) for i in range(rank)]


def _check(name: str, test: Callable[[], bool], detail: str = "") -> Obligation:
    try:
        passed = test()
    except (AlgebraError, ValueError) as e:
        return Obligation(name=name, passed=False, detail=str(e))
    return Obligation(name=name, passed=passed, detail="" if passed else detail)


def _s_obligations(mult_set: MultSet, s: Element, exponents: Sequence[int], factors: Sequence[Element]) -> list[Obligation]:
    ring = mult_set.ring
    out = [
        _check(
            "s-in-S",
            lambda: mult_set.power(exponents) == s,
            f"exponents {format_exponents(exponents)} do not give s = {format_element(s)}",
        )
    ]
    if factors:
        out.append(
            _check(
                "s-factors",
                lambda: reduce(ring.mul, factors, ring.one) == s,  # type: ignore[arg-type]
                f"recorded factors do not multiply to s = {format_element(s)}",
            )
        )
    return out


def _same_ring(ring_a: Ring, ring_b: Ring) -> Obligation:
    return _check("ring", lambda: ring_a == ring_b, f"certificate over '{ring_a.spec}' but module over '{ring_b.spec}'")


def verify_s_finite(cert: SFiniteCert) -> VerifyReport:
    target = modules.as_subquotient(cert.target)
    obligations = [_same_ring(cert.ring, target.ring)]
    obligations += _s_obligations(cert.mult_set, cert.s, cert.s_exponents, cert.factors)
    obligations.append(
        _check("j-shape", lambda: all(len(j) == target.rank for j in cert.j_gens), f"generators must have length {target.rank}")
    )
    if not obligations[-1].passed:
        return VerifyReport.from_obligations(cert.kind.value, obligations)
    j_module = FreeSubmodule(target.ring, target.rank, cert.j_gens)
    outside = [j for j in cert.j_gens if not modules.in_subquotient(target, j)]
    obligations.append(
        Obligation(
            name="j-inside-target",
            passed=not outside,
            detail=", ".join(format_vector(j) for j in outside),
        )
    )
    scaled = modules.scale_module(target.sub, cert.s)
    obligations.append(
        _check(
            "s-target-inside-j",
            lambda: modules.contains(modules.module_sum(j_module, target.relations), scaled),
            f"s·target = {format_module(scaled)} is not inside ⟨J⟩",
        )
    )
    return VerifyReport.from_obligations(cert.kind.value, obligations)


def verify_sfp(cert: SFPCert, module: Optional[Subquotient] = None) -> VerifyReport:
    module = module if module is not None else cert.module
    obligations = [_same_ring(cert.ring, module.ring)]
    presentation = list(cert.presentation)
    k = len(presentation)
    obligations.append(
        _check(
            "presentation-inside-module",
            lambda: all(modules.in_subquotient(module, p) for p in presentation),
            "a presentation vector lies outside the module",
        )
    )
    generated = FreeSubmodule(module.ring, module.rank, tuple(presentation))
    obligations.append(
        _check(
            "presentation-generates",
            lambda: modules.contains(modules.module_sum(generated, module.relations), module.sub),
            "the presentation does not reach every module generator",
        )
    )
    matrix = matrix_of(presentation, module.rank)
    obligations.append(
        _check(
            "kernel-maps-to-zero",
            lambda: cert.kernel.rank == k
            and modules.contains(module.relations, modules.push_forward(cert.kernel, matrix)),
            "a kernel generator does not map to zero",
        )
    )
    obligations.append(
        _check(
            "kernel-complete",
            lambda: modules.contains(cert.kernel, modules.presentation_kernel(module, presentation)),
            "the kernel description misses relations",
        )
    )
    kernel_target = modules.as_subquotient(cert.kernel_cert.target)
    obligations.append(
        _check(
            "kernel-cert-target",
            lambda: kernel_target.relations.is_zero and modules.equal(kernel_target.sub, cert.kernel),
            "the kernel certificate targets a different module",
        )
    )
    inner = verify_s_finite(cert.kernel_cert)
    obligations += [
        Obligation(name=f"kernel-cert.{o.name}", passed=o.passed, detail=o.detail) for o in inner.obligations
    ]
    return VerifyReport.from_obligations(cert.kind.value, obligations)


def verify_csfp(cert: CSFPCert, module: Optional[Subquotient] = None) -> VerifyReport:
    module = module if module is not None else cert.module
    obligations = [_same_ring(cert.ring, module.ring)]
    obligations += _s_obligations(cert.mult_set, cert.s, cert.s_exponents, cert.factors)
    n_gens = list(cert.n_gens)
    obligations.append(
        _check(
            "n-inside-module",
            lambda: all(modules.in_subquotient(module, n) for n in n_gens),
            "a generator of N lies outside the module",
        )
    )
    syzygies = FreeSubmodule(module.ring, len(n_gens), cert.syzygies)
    matrix = matrix_of(n_gens, module.rank)
    obligations.append(
        _check(
            "syzygies-are-relations",
            lambda: modules.contains(module.relations, modules.push_forward(syzygies, matrix)),
            "a claimed syzygy is not a relation among the generators of N",
        )
    )
    obligations.append(
        _check(
            "syzygies-complete",
            lambda: modules.contains(syzygies, modules.kernel_of(n_gens, module.relations)),
            "the claimed syzygies do not generate every relation of N",
        )
    )
    n_module = FreeSubmodule(module.ring, module.rank, tuple(n_gens))
    obligations.append(
        _check(
            "s-module-inside-n",
            lambda: modules.contains(
                modules.module_sum(n_module, module.relations), modules.scale_module(module.sub, cert.s)
            ),
            "s·M is not inside N",
        )
    )
    return VerifyReport.from_obligations(cert.kind.value, obligations)


def verify_usfp(cert: USFPCert, module: Optional[Subquotient] = None) -> VerifyReport:
    module = module if module is not None else cert.module
    ring = module.ring
    obligations = [_same_ring(cert.ring, ring)]
    obligations += _s_obligations(cert.mult_set, cert.s, cert.s_exponents, ())
    images = list(cert.images)
    k = len(images)
    source = cert.source_relations
    obligations.append(
        _check(
            "source-finitely-presented",
            lambda: source.rank == k and source.finitely_generated,
            "F must be R^k modulo finitely many relations",
        )
    )
    matrix = matrix_of(images, module.rank)
    obligations.append(
        _check(
            "images-inside-module",
            lambda: all(modules.in_subquotient(module, x) for x in images),
            "an image vector lies outside the module",
        )
    )
    obligations.append(
        _check(
            "map-well-defined",
            lambda: modules.contains(module.relations, modules.push_forward(source, matrix)),
            "a relation of F does not map to zero",
        )
    )
    claimed = FreeSubmodule(ring, k, cert.kernel_gens)
    kernel = modules.kernel_of(images, module.relations)
    obligations.append(
        _check(
            "t1-witness",
            lambda: modules.contains(kernel, claimed)
            and modules.contains(modules.module_sum(claimed, source), kernel),
            "kernel generators do not describe ker(f)",
        )
    )
    obligations.append(
        _check(
            "s-kills-t1",
            lambda: modules.contains(source, modules.scale_module(kernel, cert.s)),
            "s·T₁ ≠ 0",
        )
    )

    def _cokernel() -> bool:
        if len(cert.cokernel_coefficients) != len(module.gens):
            return False
        for g, coeffs in zip(module.gens, cert.cokernel_coefficients):
            lhs = ring.combine(coeffs, images, module.rank)  # type: ignore[arg-type]
            diff = ring.add_vectors(lhs, tuple(ring.neg(x) for x in ring.scale_vector(cert.s, g)))  # type: ignore[arg-type]
            if not modules.has_vector(module.relations, diff):
                return False
        return True

    obligations.append(_check("s-kills-t2", _cokernel, "s·T₂ ≠ 0"))
    return VerifyReport.from_obligations(cert.kind.value, obligations)


def verify(cert: Certificate, module: Optional[Subquotient] = None) -> VerifyReport:
    if isinstance(cert, SFiniteCert):
        return verify_s_finite(cert)
    if isinstance(cert, SFPCert):
        return verify_sfp(cert, module)
    if isinstance(cert, CSFPCert):
        return verify_csfp(cert, module)
    return verify_usfp(cert, module)


def ensure_verified(cert: C) -> C:
    """Re-verify an emitted certificate when VERIFY_EMITTED is on."""
    if not settings.VERIFY_EMITTED:
        return cert
    report = verify(cert)
    if not report.ok:
        logger.warning(f"Emitted {cert.kind.value} certificate failed: {report.failures}")
        raise CertificateError(cert.kind.value, report.failures)
    return cert
