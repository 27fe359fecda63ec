"""
JSON wire format for certificates.

Field order is the serialized order. Elements, vectors and ideals travel as
literals of the shared text grammar; the ring named in `ring` reads them back.
"""
from typing import Annotated, Literal, Optional, Sequence, Union

from pydantic import Field, TypeAdapter

from src.core.schemas.base import CamelModel
from src.custom_types import ElementLiteral
from src.certificates.models import Certificate, CSFPCert, SFiniteCert, SFPCert, USFPCert
from src.certificates.mult_set import MultSet
from src.ideals.models import FinIdeal, FreeSubmodule, SplitIdeal, Subquotient, Target, split_ideal
from src.ideals.parsing import parse_element, parse_ideal, parse_vector_or_element
from src.ideals.printing import format_element, format_ideal, format_vector_or_element
from src.rings.descriptors import IdealizationZF2, Ring, ring_from_spec
from src.rings.elements import Element, Vector


class IdealTarget(CamelModel):
    type: Literal["ideal"] = "ideal"
    ideal: str


class SplitTarget(CamelModel):
    type: Literal["split"] = "split"
    z_part: int
    f2_part: Union[Literal["full"], list[list[int]]] = "full"


class ModuleTarget(CamelModel):
    type: Literal["module"] = "module"
    rank: int = Field(ge=1)
    gens: list[ElementLiteral] = []
    nil_span: list[list[int]] = []
    relations: Optional["ModuleTarget"] = None


TargetSchema = Annotated[Union[IdealTarget, SplitTarget, ModuleTarget], Field(discriminator="type")]


class SFiniteCertSchema(CamelModel):
    kind: Literal["s-finite"] = "s-finite"
    ring: str
    sset: list[ElementLiteral] = []
    allow_zero: bool = False
    s: ElementLiteral
    s_exponents: list[int]
    factors: list[ElementLiteral] = []
    target: TargetSchema
    j_gens: list[ElementLiteral] = []


class SFPCertSchema(CamelModel):
    kind: Literal["sfp"] = "sfp"
    ring: str
    module: ModuleTarget
    presentation: list[ElementLiteral]
    kernel: ModuleTarget
    kernel_cert: SFiniteCertSchema


class CSFPCertSchema(CamelModel):
    kind: Literal["csfp"] = "csfp"
    ring: str
    sset: list[ElementLiteral] = []
    allow_zero: bool = False
    s: ElementLiteral
    s_exponents: list[int]
    factors: list[ElementLiteral] = []
    module: ModuleTarget
    n_gens: list[ElementLiteral]
    syzygies: list[ElementLiteral] = []


class USFPCertSchema(CamelModel):
    kind: Literal["usfp"] = "usfp"
    ring: str
    sset: list[ElementLiteral] = []
    allow_zero: bool = False
    s: ElementLiteral
    s_exponents: list[int]
    module: ModuleTarget
    images: list[ElementLiteral]
    source_relations: ModuleTarget
    kernel_gens: list[ElementLiteral] = []
    cokernel_coefficients: list[list[ElementLiteral]] = []


CertificateSchema = Annotated[
    Union[SFiniteCertSchema, SFPCertSchema, CSFPCertSchema, USFPCertSchema],
    Field(discriminator="kind"),
]
certificate_adapter: TypeAdapter[CertificateSchema] = TypeAdapter(CertificateSchema)


def _vectors(vectors: Sequence[Vector]) -> list[str]:
    return [format_vector_or_element(v) for v in vectors]


def _elements(values: Sequence[Element]) -> list[str]:
    return [format_element(x) for x in values]


def _bits(mask: int, rank: int) -> list[int]:
    return [(mask >> i) & 1 for i in range(rank)]


def module_schema(module: FreeSubmodule | Subquotient) -> ModuleTarget:
    if isinstance(module, Subquotient):
        inner = module_schema(module.sub)
        if module.relations.is_zero:
            return inner
        return inner.model_copy(update={"relations": module_schema(module.relations)})
    return ModuleTarget(
        rank=module.rank,
        gens=_vectors(module.gens),
        nil_span=[_bits(c, module.rank) for c in module.nil_span],
    )


def target_schema(target: Target) -> IdealTarget | SplitTarget | ModuleTarget:
    if isinstance(target, SplitIdeal):
        return SplitTarget(z_part=target.z_part)
    if isinstance(target, FinIdeal):
        return IdealTarget(ideal=format_ideal(target))
    return module_schema(target)


def _mult_set_fields(mult_set: MultSet) -> dict:
    return {"sset": _elements(mult_set.gens), "allow_zero": mult_set.allow_zero}


def to_schema(cert: Certificate) -> SFiniteCertSchema | SFPCertSchema | CSFPCertSchema | USFPCertSchema:
    ring = cert.ring.spec
    if isinstance(cert, SFiniteCert):
        return SFiniteCertSchema(
            ring=ring,
            **_mult_set_fields(cert.mult_set),
            s=format_element(cert.s),
            s_exponents=list(cert.s_exponents),
            factors=_elements(cert.factors),
            target=target_schema(cert.target),
            j_gens=_vectors(cert.j_gens),
        )
    if isinstance(cert, SFPCert):
        return SFPCertSchema(
            ring=ring,
            module=module_schema(cert.module),
            presentation=_vectors(cert.presentation),
            kernel=module_schema(cert.kernel),
            kernel_cert=to_schema(cert.kernel_cert),  # type: ignore[arg-type]
        )
    if isinstance(cert, CSFPCert):
        return CSFPCertSchema(
            ring=ring,
            **_mult_set_fields(cert.mult_set),
            s=format_element(cert.s),
            s_exponents=list(cert.s_exponents),
            factors=_elements(cert.factors),
            module=module_schema(cert.module),
            n_gens=_vectors(cert.n_gens),
            syzygies=_vectors(cert.syzygies),
        )
    return USFPCertSchema(
        ring=ring,
        **_mult_set_fields(cert.mult_set),
        s=format_element(cert.s),
        s_exponents=list(cert.s_exponents),
        module=module_schema(cert.module),
        images=_vectors(cert.images),
        source_relations=module_schema(cert.source_relations),
        kernel_gens=_vectors(cert.kernel_gens),
        cokernel_coefficients=[_elements(row) for row in cert.cokernel_coefficients],
    )


def _read_vectors(texts: Sequence[str], ring: Ring) -> tuple[Vector, ...]:
    return tuple(parse_vector_or_element(t, ring) for t in texts)


def _read_elements(texts: Sequence[str], ring: Ring) -> tuple[Element, ...]:
    return tuple(parse_element(t, ring) for t in texts)


def read_module(schema: ModuleTarget, ring: Ring) -> FreeSubmodule:
    nil = tuple(sum(b << i for i, b in enumerate(bits)) for bits in schema.nil_span)
    return FreeSubmodule(ring, schema.rank, _read_vectors(schema.gens, ring), nil)


def read_subquotient(schema: ModuleTarget, ring: Ring) -> Subquotient:
    relations = read_module(schema.relations, ring) if schema.relations is not None else None
    return Subquotient.of(read_module(schema, ring), relations)


def read_target(schema: IdealTarget | SplitTarget | ModuleTarget, ring: Ring) -> Target:
    if isinstance(schema, IdealTarget):
        return parse_ideal(schema.ideal, ring)
    if isinstance(schema, SplitTarget):
        if not isinstance(ring, IdealizationZF2):
            raise ValueError(f"Split targets exist over the idealization only, not '{ring.spec}'")
        f2 = None if schema.f2_part == "full" else [frozenset(i for i in w) for w in schema.f2_part]
        return split_ideal(ring, schema.z_part, f2)
    if schema.relations is not None:
        return read_subquotient(schema, ring)
    return read_module(schema, ring)


def _read_mult_set(
    schema: SFiniteCertSchema | CSFPCertSchema | USFPCertSchema, ring: Ring
) -> MultSet:
    return MultSet(ring, _read_elements(schema.sset, ring), allow_zero=schema.allow_zero)


def from_schema(schema: SFiniteCertSchema | SFPCertSchema | CSFPCertSchema | USFPCertSchema) -> Certificate:
    ring = ring_from_spec(schema.ring)
    if isinstance(schema, SFiniteCertSchema):
        return SFiniteCert(
            mult_set=_read_mult_set(schema, ring),
            s=parse_element(schema.s, ring),
            s_exponents=tuple(schema.s_exponents),
            j_gens=_read_vectors(schema.j_gens, ring),
            target=read_target(schema.target, ring),
            factors=_read_elements(schema.factors, ring),
        )
    if isinstance(schema, SFPCertSchema):
        kernel_cert = from_schema(schema.kernel_cert)
        assert isinstance(kernel_cert, SFiniteCert)
        return SFPCert(
            module=read_subquotient(schema.module, ring),
            presentation=_read_vectors(schema.presentation, ring),
            kernel=read_module(schema.kernel, ring),
            kernel_cert=kernel_cert,
        )
    if isinstance(schema, CSFPCertSchema):
        return CSFPCert(
            module=read_subquotient(schema.module, ring),
            mult_set=_read_mult_set(schema, ring),
            s=parse_element(schema.s, ring),
            s_exponents=tuple(schema.s_exponents),
            n_gens=_read_vectors(schema.n_gens, ring),
            syzygies=_read_vectors(schema.syzygies, ring),
            factors=_read_elements(schema.factors, ring),
        )
    return USFPCert(
        module=read_subquotient(schema.module, ring),
        mult_set=_read_mult_set(schema, ring),
        s=parse_element(schema.s, ring),
        s_exponents=tuple(schema.s_exponents),
        images=_read_vectors(schema.images, ring),
        source_relations=read_module(schema.source_relations, ring),
        kernel_gens=_read_vectors(schema.kernel_gens, ring),
        cokernel_coefficients=tuple(_read_elements(row, ring) for row in schema.cokernel_coefficients),
    )


def dump_certificate(cert: Certificate) -> str:
    return to_schema(cert).to_json()


def load_certificate(text: str) -> Certificate:
    """Parse certificate JSON; raises pydantic's ValidationError or LiteralParseError on bad input."""
    return from_schema(certificate_adapter.validate_json(text))
