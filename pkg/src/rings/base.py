from abc import ABC, abstractmethod
from dataclasses import dataclass, field
from enum import Enum
from random import Random
from typing import ClassVar, Generic, Optional, Sequence, TypeVar

from src.core.exceptions import RingMismatchError, UnsupportedRingError
from src.rings.elements import Element, Int, Pair, Res, Vector

E = TypeVar("E", bound=Element)


class RingKind(str, Enum):
    """Enum for the supported ring families"""
    INTEGERS = "z"
    MODULAR = "zmod"
    IDEALIZATION = "idealization"


@dataclass(frozen=True)
class SyzygyBasis:
    """
    Generators of the relation module of a list of k vectors.

    `vectors` are relation vectors of length k. `nil_span` is a list of F₂
    vectors c (bitmasks over the k positions); when it is non-empty the
    relation module additionally contains every (0, y·c) for y in
    (ℤ/2ℤ)^(ℕ) and is not finitely generated.
    """
    vectors: tuple[Vector, ...]
    nil_span: tuple[int, ...] = field(default=())

    @property
    def finitely_generated(self) -> bool:
        return not self.nil_span


class BaseRing(Generic[E], ABC):
    """
    Base class for computable commutative rings.

    Subclasses must provide exact arithmetic, a decision procedure for
    linear systems over the ring and generators of relation modules.
    """
    kind: ClassVar[RingKind]

    @property
    @abstractmethod
    def spec(self) -> str:
        """The `--ring` spelling of this ring."""
        ...

    @property
    @abstractmethod
    def zero(self) -> E:
        ...

    @property
    @abstractmethod
    def one(self) -> E:
        ...

    @abstractmethod
    def owns(self, x: Element) -> bool:
        ...

    @abstractmethod
    def from_int(self, n: int) -> E:
        ...

    @abstractmethod
    def add(self, x: E, y: E) -> E:
        ...

    @abstractmethod
    def mul(self, x: E, y: E) -> E:
        ...

    @abstractmethod
    def neg(self, x: E) -> E:
        ...

    @abstractmethod
    def random_element(self, rng: Random, int_bound: int, support_bound: int) -> E:
        ...

    @abstractmethod
    def lin_solve(
        self, gens: Sequence[Vector], target: Vector, nil: Sequence[int] = ()
    ) -> Optional[list[E]]:
        """
        Coefficients c with Σ c_j·gens_j = target, or None if target is not in the span.

        `nil` lists F₂ directions (bitmasks over the coordinates): when given, the
        equation only has to hold up to an element of 0(+)(F₂^(ℕ) ⊗ span(nil)).
        Rings without a nilpotent part reject a non-empty `nil`.
        """
        ...

    @abstractmethod
    def syzygies(self, gens: Sequence[Vector], rank: int, nil: Sequence[int] = ()) -> SyzygyBasis:
        """Relations among `gens`, modulo 0(+)(F₂^(ℕ) ⊗ span(nil)) when `nil` is given."""
        ...

    @abstractmethod
    def canonical_ideal(self, gens: Sequence[E]) -> tuple[E, ...]:
        """Canonical generators of the ideal ⟨gens⟩; equal ideals get equal tuples."""
        ...

    @property
    def has_nil(self) -> bool:
        """True when the ring has a non-finitely-generated nilpotent ideal 0(+)F₂^(ℕ)."""
        return False

    def parity(self, x: E) -> int:
        """Parity of the ℤ-part; only rings with a nilpotent F₂ part define it."""
        raise UnsupportedRingError(self.spec, "parity")

    def _reject_nil(self, nil: Sequence[int]) -> None:
        if nil:
            raise UnsupportedRingError(self.spec, "nil directions")

    def sub(self, x: E, y: E) -> E:
        return self.add(x, self.neg(y))

    def is_zero(self, x: E) -> bool:
        return x == self.zero

    def is_unit_ideal(self, gens: Sequence[E]) -> bool:
        return self.canonical_ideal(gens) == (self.one,)

    def check(self, *values: Element) -> None:
        for x in values:
            if not self.owns(x):
                raise RingMismatchError(self.spec, describe(x))

    def scale_vector(self, r: E, v: Vector) -> Vector:
        return tuple(self.mul(r, x) for x in v)  # type: ignore[arg-type]

    def add_vectors(self, v: Vector, w: Vector) -> Vector:
        return tuple(self.add(x, y) for x, y in zip(v, w))  # type: ignore[arg-type]

    def combine(self, coefficients: Sequence[E], vectors: Sequence[Vector], rank: int) -> Vector:
        """Σ coefficients_j·vectors_j in R^rank."""
        out: list[E] = [self.zero] * rank
        for c, v in zip(coefficients, vectors):
            if self.is_zero(c):
                continue
            for i in range(rank):
                out[i] = self.add(out[i], self.mul(c, v[i]))  # type: ignore[arg-type]
        return tuple(out)

    def zero_vector(self, rank: int) -> Vector:
        return (self.zero,) * rank

    def unit_vector(self, rank: int, i: int) -> Vector:
        return tuple(self.one if j == i else self.zero for j in range(rank))

    def __str__(self) -> str:
        return self.spec


def describe(x: Element) -> str:
    if isinstance(x, Int):
        return "z"
    if isinstance(x, Res):
        return f"zmod:{x.modulus}"
    if isinstance(x, Pair):
        return "idealization"
    return type(x).__name__
