"""
Exact ring elements.

Elements are canonical on construction, so structural equality (the
dataclass `__eq__`) is ring equality.
"""
from dataclasses import dataclass
from typing import TypeAlias


@dataclass(frozen=True, slots=True)
class Int:
    """An element of ℤ."""
    value: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "value", int(self.value))


@dataclass(frozen=True, slots=True)
class Res:
    """A residue class of ℤ/modulus, stored by its representative in [0, modulus)."""
    value: int
    modulus: int

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"Modulus must be at least 2, got {self.modulus}")
        object.__setattr__(self, "value", int(self.value) % self.modulus)


@dataclass(frozen=True, slots=True)
class Pair:
    """
    An element (a, Σ e_i) of ℤ(+)(ℤ/2ℤ)^(ℕ).

    `support` is the set of indices i with a nonzero i-th F₂ coordinate.
    """
    a: int
    support: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "a", int(self.a))
        support = frozenset(int(i) for i in self.support)
        if any(i < 0 for i in support):
            raise ValueError(f"Support indices must be natural numbers, got {sorted(support)}")
        object.__setattr__(self, "support", support)

    @property
    def mask(self) -> int:
        """The support as a bitmask (bit i set iff i is in the support)."""
        return support_to_mask(self.support)

    @classmethod
    def from_mask(cls, a: int, mask: int) -> "Pair":
        return cls(a, mask_to_support(mask))


Element: TypeAlias = Int | Res | Pair
Vector: TypeAlias = tuple[Element, ...]


def support_to_mask(support: frozenset[int] | set[int]) -> int:
    mask = 0
    for i in support:
        mask |= 1 << i
    return mask


def mask_to_support(mask: int) -> frozenset[int]:
    indices = []
    i = 0
    while mask:
        if mask & 1:
            indices.append(i)
        mask >>= 1
        i += 1
    return frozenset(indices)
