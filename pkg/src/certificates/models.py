"""
Certificates: finite witnesses whose verification establishes S-finiteness
and the three S-variants of finite presentation for a concrete module.

Every certificate carries the exponent vector proving s ∈ S, so checking it
never searches S again, and the list of s-values (`factors`) whose product is
its s, so composed certificates keep their provenance.
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import ClassVar

from src.certificates.mult_set import MultSet
from src.ideals.models import FreeSubmodule, Subquotient, Target
from src.rings.descriptors import Ring
from src.rings.elements import Element, Vector


class CertificateKind(str, Enum):
    """Enum for certificate kinds"""
    S_FINITE = "s-finite"
    SFP = "sfp"
    CSFP = "csfp"
    USFP = "usfp"


@dataclass(frozen=True)
class SFiniteCert:
    """s·target ⊆ ⟨j_gens⟩ ⊆ target (modulo the target's relations)."""
    mult_set: MultSet
    s: Element
    s_exponents: tuple[int, ...]
    j_gens: tuple[Vector, ...]
    target: Target
    factors: tuple[Element, ...] = field(default=())
    kind: ClassVar[CertificateKind] = CertificateKind.S_FINITE

    @property
    def ring(self) -> Ring:
        return self.mult_set.ring


@dataclass(frozen=True)
class SFPCert:
    """
    0 → kernel → R^k → module → 0 with R^k sending e_j to presentation[j],
    and an S-finite certificate for the kernel.
    """
    module: Subquotient
    presentation: tuple[Vector, ...]
    kernel: FreeSubmodule
    kernel_cert: SFiniteCert
    kind: ClassVar[CertificateKind] = CertificateKind.SFP

    @property
    def ring(self) -> Ring:
        return self.module.ring

    @property
    def s(self) -> Element:
        return self.kernel_cert.s


@dataclass(frozen=True)
class CSFPCert:
    """A finitely presented N = ⟨n_gens⟩ with s·module ⊆ N ⊆ module; `syzygies` present N."""
    module: Subquotient
    mult_set: MultSet
    s: Element
    s_exponents: tuple[int, ...]
    n_gens: tuple[Vector, ...]
    syzygies: tuple[Vector, ...]
    factors: tuple[Element, ...] = field(default=())
    kind: ClassVar[CertificateKind] = CertificateKind.CSFP

    @property
    def ring(self) -> Ring:
        return self.module.ring


@dataclass(frozen=True)
class USFPCert:
    """
    0 → T₁ → F → module → T₂ → 0 with F = R^k / source_relations finitely
    presented, f(e_j) = images[j], and s·T₁ = s·T₂ = 0.

    `kernel_gens` generate ker(R^k → module) and `cokernel_coefficients[i]`
    writes s·module.gens[i] over the images.
    """
    module: Subquotient
    mult_set: MultSet
    s: Element
    s_exponents: tuple[int, ...]
    images: tuple[Vector, ...]
    source_relations: FreeSubmodule
    kernel_gens: tuple[Vector, ...]
    cokernel_coefficients: tuple[tuple[Element, ...], ...]
    kind: ClassVar[CertificateKind] = CertificateKind.USFP

    @property
    def ring(self) -> Ring:
        return self.module.ring


Certificate = SFiniteCert | SFPCert | CSFPCert | USFPCert
