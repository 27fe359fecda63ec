"""
Immutable descriptors for ideals and submodules.

A `FreeSubmodule` of Rⁿ is the span of finitely many vectors plus, over the
idealization, a "nil span" C of F₂ directions: the descriptor then denotes
⟨gens⟩ + 0(+)(F₂^(ℕ) ⊗ span C), which is how relation modules and colon
ideals that are not finitely generated are carried around.
"""
from dataclasses import dataclass, field
from typing import Optional, Sequence, TypeAlias

from src.core.exceptions import InvalidClaimError
from src.rings import gf2
from src.rings.descriptors import IdealizationZF2, Ring
from src.rings.elements import Element, Pair, Vector


def parity_mask(ring: Ring, v: Vector) -> int:
    mask = 0
    for i, x in enumerate(v):
        if ring.parity(x):  # type: ignore[arg-type]
            mask |= 1 << i
    return mask


@dataclass(frozen=True)
class FreeSubmodule:
    ring: Ring
    rank: int
    gens: tuple[Vector, ...] = ()
    nil_span: tuple[int, ...] = field(default=())

    def __post_init__(self) -> None:
        gens = tuple(tuple(g) for g in self.gens)
        for g in gens:
            if len(g) != self.rank:
                raise ValueError(f"Vector of length {len(g)} in a submodule of rank {self.rank}")
            self.ring.check(*g)
        object.__setattr__(self, "gens", gens)
        if not self.nil_span:
            return
        if not self.ring.has_nil:
            raise ValueError(f"Ring '{self.ring.spec}' has no nil directions")
        low = (1 << self.rank) - 1
        nil = gf2.echelon([c & low for c in self.nil_span])
        # N ⊗ C already lies in ⟨gens⟩ when C is spanned by the gens' parities
        spanned = gf2.echelon([parity_mask(self.ring, g) for g in gens])
        if all(gf2.in_span(c, spanned) for c in nil):
            nil = []
        object.__setattr__(self, "nil_span", tuple(nil))

    @property
    def finitely_generated(self) -> bool:
        return not self.nil_span

    @property
    def is_zero(self) -> bool:
        return not self.nil_span and all(self.ring.is_zero(x) for g in self.gens for x in g)  # type: ignore[arg-type]

    @classmethod
    def zero(cls, ring: Ring, rank: int) -> "FreeSubmodule":
        return cls(ring, rank)

    @classmethod
    def full(cls, ring: Ring, rank: int) -> "FreeSubmodule":
        return cls(ring, rank, tuple(ring.unit_vector(rank, i) for i in range(rank)))


@dataclass(frozen=True)
class Subquotient:
    """(sub + relations) / relations inside Rⁿ / relations."""
    sub: FreeSubmodule
    relations: FreeSubmodule

    def __post_init__(self) -> None:
        if self.sub.rank != self.relations.rank:
            raise ValueError(f"Submodule of rank {self.sub.rank} over relations of rank {self.relations.rank}")
        if self.sub.ring != self.relations.ring:
            raise ValueError(f"Ring mismatch: '{self.sub.ring.spec}' and '{self.relations.ring.spec}'")

    @property
    def ring(self) -> Ring:
        return self.sub.ring

    @property
    def rank(self) -> int:
        return self.sub.rank

    @property
    def gens(self) -> tuple[Vector, ...]:
        return self.sub.gens

    @classmethod
    def of(cls, sub: FreeSubmodule, relations: Optional[FreeSubmodule] = None) -> "Subquotient":
        return cls(sub, relations if relations is not None else FreeSubmodule.zero(sub.ring, sub.rank))

    @classmethod
    def cyclic(cls, ring: Ring, relations: Sequence[Element]) -> "Subquotient":
        """R/⟨relations⟩ generated by 1, for example ℤ/2 = ℤ/⟨2⟩."""
        return cls(
            FreeSubmodule(ring, 1, ((ring.one,),)),
            FreeSubmodule(ring, 1, tuple((r,) for r in relations)),
        )


@dataclass(frozen=True)
class FinIdeal:
    """A finitely generated ideal, stored by canonical generators."""
    ring: Ring
    gens: tuple[Element, ...] = ()

    def __post_init__(self) -> None:
        self.ring.check(*self.gens)
        object.__setattr__(self, "gens", self.ring.canonical_ideal(list(self.gens)))  # type: ignore[arg-type]

    @property
    def is_zero(self) -> bool:
        return not self.gens

    @property
    def is_unit(self) -> bool:
        return self.gens == (self.ring.one,)


@dataclass(frozen=True)
class SplitIdeal:
    """
    {(a, w) : a ∈ z_part·ℤ, w ∈ F₂^(ℕ)} over the idealization.

    Only even (or zero) z_part is stored; with an odd z_part the same set is
    the principal ideal ⟨(z_part, ∅)⟩, see `split_ideal`.
    """
    ring: IdealizationZF2
    z_part: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "z_part", abs(int(self.z_part)))
        if self.z_part & 1:
            raise ValueError(f"Split ideal with odd z-part {self.z_part} is principal")


StructuredIdeal: TypeAlias = FinIdeal | SplitIdeal
Target: TypeAlias = FinIdeal | SplitIdeal | FreeSubmodule | Subquotient


def split_ideal(
    ring: IdealizationZF2, z_part: int, f2_part: Optional[Sequence[frozenset[int]]] = None
) -> StructuredIdeal:
    """
    Build Split(z_part, f2_part); `f2_part=None` means all of F₂^(ℕ).

    Results that are finitely generated come back as FinIdeal: an odd z_part
    with the full F₂ part is ⟨(z_part, ∅)⟩, and a finite span W with even
    z_part is ⟨(z_part, ∅), (0, w) for w in W⟩.
    """
    d = abs(int(z_part))
    if f2_part is None:
        return FinIdeal(ring, (Pair(d),)) if d & 1 else SplitIdeal(ring, d)
    if d & 1:
        raise InvalidClaimError(
            f"Split({d}, span)", "an odd z-part forces the F₂ part to be everything (ideal closure)"
        )
    return FinIdeal(ring, (Pair(d),) + tuple(Pair(0, frozenset(w)) for w in f2_part))
