"""
Short exact sequences 0 → M' → M → M'' → 0 and the pull-back diagram used
for finitely presented modules.

Modules are subquotients of free modules and maps are given by ambient
matrices (lists of rows). Exactness is checked on construction.
"""
from dataclasses import dataclass, field
from typing import Optional, Sequence

from loguru import logger

from src.core.exceptions import InvalidClaimError, NotExactError
from src.ideals import modules
from src.ideals.models import FreeSubmodule, Subquotient
from src.ideals.printing import format_module, format_target
from src.rings.descriptors import Ring
from src.rings.elements import Vector


@dataclass(frozen=True)
class ModuleMap:
    """The map source → target induced by x ↦ matrix·x on the ambient free modules."""
    source: Subquotient
    target: Subquotient
    matrix: tuple[Vector, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "matrix", tuple(tuple(row) for row in self.matrix))
        if len(self.matrix) != self.target.rank or any(len(row) != self.source.rank for row in self.matrix):
            raise ValueError(
                f"Matrix must be {self.target.rank} × {self.source.rank} to map rank {self.source.rank} "
                f"to rank {self.target.rank}"
            )

    @property
    def ring(self) -> Ring:
        return self.source.ring

    def __call__(self, x: Vector) -> Vector:
        return modules.apply(self.ring, self.matrix, x)

    def image(self) -> FreeSubmodule:
        return modules.push_forward(self.source.sub, self.matrix)

    def well_defined(self) -> bool:
        """Generators land in the target and relations land in its relations."""
        return modules.subquotient_contains(self.target, self.image()) and modules.contains(
            self.target.relations, modules.push_forward(self.source.relations, self.matrix)
        )

    def kernel(self) -> FreeSubmodule:
        """Coefficient vectors over source.gens whose image vanishes in the target."""
        return modules.kernel_of([self(g) for g in self.source.gens], self.target.relations)

    def lift(self, y: Vector) -> Optional[Vector]:
        """A source vector mapping to y modulo the target relations."""
        return modules.lift_through(self.source, self.matrix, self.target.relations, y)


def _check(condition: bool, reason: str) -> None:
    if not condition:
        logger.debug(f"Extension rejected: {reason}")
        raise NotExactError(reason)


@dataclass(frozen=True)
class ExtensionData:
    """0 → left → middle → right → 0 with the two maps given by matrices."""
    left: Subquotient
    middle: Subquotient
    right: Subquotient
    injection: tuple[Vector, ...]
    surjection: tuple[Vector, ...]
    inclusion: ModuleMap = field(init=False, repr=False, compare=False)
    projection: ModuleMap = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        if not self.left.ring == self.middle.ring == self.right.ring:
            raise InvalidClaimError("extension", "all three modules must live over one ring")
        try:
            inclusion = ModuleMap(self.left, self.middle, self.injection)
            projection = ModuleMap(self.middle, self.right, self.surjection)
        except ValueError as e:
            raise NotExactError(str(e)) from e
        object.__setattr__(self, "injection", inclusion.matrix)
        object.__setattr__(self, "surjection", projection.matrix)
        object.__setattr__(self, "inclusion", inclusion)
        object.__setattr__(self, "projection", projection)
        self._validate()

    def _validate(self) -> None:
        inclusion, projection = self.inclusion, self.projection
        _check(inclusion.well_defined(), "the injection is not a well-defined map into the middle module")
        _check(projection.well_defined(), "the surjection is not a well-defined map into the right module")
        composite = modules.push_forward(inclusion.image(), self.surjection)
        _check(modules.contains(self.right.relations, composite), "the composite of the two maps is not zero")
        mapped = modules.kernel_of([inclusion(g) for g in self.left.gens], self.middle.relations)
        _check(
            modules.contains(modules.presentation_kernel(self.left), mapped),
            "the injection has a nontrivial kernel",
        )
        _check(
            modules.contains(modules.module_sum(projection.image(), self.right.relations), self.right.sub),
            "the surjection misses part of the right module",
        )
        vanishing = modules.preimage(self.right.relations, self.surjection, self.middle.rank)
        in_middle = modules.intersect_modules(modules.ambient(self.middle), vanishing)
        _check(
            modules.contains(modules.module_sum(inclusion.image(), self.middle.relations), in_middle),
            "the kernel of the surjection is larger than the image of the injection",
        )
        logger.debug(
            f"Exact: 0 → {format_target(self.left)} → {format_target(self.middle)} → {format_target(self.right)} → 0"
        )

    @property
    def ring(self) -> Ring:
        return self.middle.ring

    @classmethod
    def quotient_sequence(cls, module: Subquotient, sub: FreeSubmodule) -> "ExtensionData":
        """0 → sub → module → module/sub → 0 inside one ambient free module."""
        ring, n = module.ring, module.rank
        eye = tuple(modules.identity(ring, n))
        left = Subquotient(sub, module.relations)
        right = Subquotient(module.sub, modules.module_sum(module.relations, sub))
        return cls(left, module, right, eye, eye)

    @classmethod
    def direct_sum(cls, left: Subquotient, right: Subquotient) -> "ExtensionData":
        """0 → left → left ⊕ right → right → 0 on block coordinates."""
        ring, a, b = left.ring, left.rank, right.rank
        zeros_a, zeros_b = ring.zero_vector(a), ring.zero_vector(b)
        sub = FreeSubmodule(
            ring,
            a + b,
            tuple(g + zeros_b for g in left.gens) + tuple(zeros_a + g for g in right.gens),
            tuple(left.sub.nil_span) + tuple(c << a for c in right.sub.nil_span),
        )
        relations = FreeSubmodule(
            ring,
            a + b,
            tuple(g + zeros_b for g in left.relations.gens) + tuple(zeros_a + g for g in right.relations.gens),
            tuple(left.relations.nil_span) + tuple(c << a for c in right.relations.nil_span),
        )
        injection = tuple(e for e in modules.identity(ring, a)) + tuple(ring.zero_vector(a) for _ in range(b))
        surjection = tuple(zeros_a + e for e in modules.identity(ring, b))
        return cls(left, Subquotient(sub, relations), right, injection, surjection)


@dataclass(frozen=True)
class PullbackData:
    """
    F = R^rank, K ⊆ F, M = F/K and L ⊆ M given by lifts to F, with
    X = K + ⟨lifts⟩ the preimage of L and Y = M/L = F/X.
    """
    ring: Ring
    rank: int
    relations: FreeSubmodule
    lifts: tuple[Vector, ...]

    def __post_init__(self) -> None:
        if self.relations.rank != self.rank:
            raise InvalidClaimError("pull-back", f"relations of rank {self.relations.rank} inside F = R^{self.rank}")
        if not self.relations.finitely_generated:
            raise InvalidClaimError("pull-back", "K must be finitely generated for M = F/K to be finitely presented")
        object.__setattr__(self, "lifts", tuple(tuple(v) for v in self.lifts))
        if any(len(v) != self.rank for v in self.lifts):
            raise InvalidClaimError("pull-back", f"every lift must have length {self.rank}")
        self.ring.check(*(x for v in self.lifts for x in v))
        if not modules.contains(self.x, self.relations):
            raise InvalidClaimError("pull-back", "X does not contain K")
        if not modules.equal(modules.ambient(self.submodule), self.x):
            raise InvalidClaimError("pull-back", "the image of X in M differs from L")

    @property
    def free(self) -> FreeSubmodule:
        return FreeSubmodule.full(self.ring, self.rank)

    @property
    def x(self) -> FreeSubmodule:
        ring = self.ring
        kept = tuple(g for g in self.relations.gens if any(not ring.is_zero(v) for v in g))  # type: ignore[arg-type]
        return FreeSubmodule(ring, self.rank, kept + self.lifts)

    @property
    def module(self) -> Subquotient:
        """M = F/K."""
        return Subquotient(self.free, self.relations)

    @property
    def submodule(self) -> Subquotient:
        """L ⊆ M."""
        return Subquotient(FreeSubmodule(self.ring, self.rank, self.lifts), self.relations)

    @property
    def cokernel(self) -> Subquotient:
        """Y = M/L."""
        return Subquotient(self.free, self.x)

    def kernel_sequence(self) -> ExtensionData:
        """0 → K → X → L → 0."""
        eye = tuple(modules.identity(self.ring, self.rank))
        return ExtensionData(Subquotient.of(self.relations), Subquotient.of(self.x), self.submodule, eye, eye)

    def describe(self) -> str:
        return f"F = R^{self.rank}, K = {format_module(self.relations)}, X = {format_module(self.x)}"


def lift_all(projection: ModuleMap, targets: Sequence[Vector]) -> list[Vector]:
    """Lift every target vector through a surjection; NotExactError if one has no preimage."""
    out = []
    for y in targets:
        lifted = projection.lift(y)
        if lifted is None:
            raise NotExactError(f"no preimage for a generator of {format_target(projection.target)}")
        out.append(lifted)
    return out
