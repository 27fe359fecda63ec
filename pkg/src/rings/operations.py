from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

from src.core.exceptions import RingMismatchError
from src.rings.base import SyzygyBasis, describe
from src.rings.descriptors import IdealizationZF2, Integers, ModularIntegers, Ring
from src.rings.elements import Element, Int, Pair, Res, Vector


class ElemOp(str, Enum):
    """Enum for element operations"""
    ADD = "add"
    MUL = "mul"
    NEG = "neg"
    EQ = "eq"


@dataclass(frozen=True)
class LinSolveWitness:
    """Coefficients recombining the generators into the target."""
    coefficients: tuple[Element, ...]

    def recombine(self, ring: Ring, gens: Sequence[Vector]) -> Vector:
        rank = len(gens[0]) if gens else 0
        return ring.combine(self.coefficients, gens, rank)  # type: ignore[arg-type]


def ring_of(x: Element) -> Ring:
    if isinstance(x, Int):
        return Integers()
    if isinstance(x, Res):
        return ModularIntegers(x.modulus)
    if isinstance(x, Pair):
        return IdealizationZF2()
    raise TypeError(f"Not a ring element: {x!r}")


def elem_op(op: ElemOp, x: Element, y: Optional[Element] = None) -> Element | bool:
    ring = ring_of(x)
    if op == ElemOp.NEG:
        return ring.neg(x)  # type: ignore[arg-type]
    if y is None:
        raise ValueError(f"Operation '{op.value}' needs two operands")
    if not ring.owns(y):
        raise RingMismatchError(ring.spec, describe(y))
    if op == ElemOp.ADD:
        return ring.add(x, y)  # type: ignore[arg-type]
    if op == ElemOp.MUL:
        return ring.mul(x, y)  # type: ignore[arg-type]
    return x == y


def as_vector(x: Element | Vector) -> Vector:
    return x if isinstance(x, tuple) else (x,)


def lin_solve(ring: Ring, gens: Sequence[Element | Vector], target: Element | Vector) -> Optional[LinSolveWitness]:
    """
    Decide whether `target` lies in the span of `gens`.

    Single elements are treated as vectors of length one. Returns a witness
    whose recombination equals `target` exactly, or None.
    """
    vectors = [as_vector(g) for g in gens]
    goal = as_vector(target)
    for v in vectors:
        if len(v) != len(goal):
            raise ValueError(f"Generator of length {len(v)} does not match target of length {len(goal)}")
        ring.check(*v)
    ring.check(*goal)
    coefficients = ring.lin_solve(vectors, goal)
    if coefficients is None:
        return None
    return LinSolveWitness(tuple(coefficients))


def syzygy_basis(ring: Ring, gens: Sequence[Element | Vector]) -> SyzygyBasis:
    """Generators of {r : Σ r_i·gens_i = 0}; over the idealization possibly with a nil span."""
    vectors = [as_vector(g) for g in gens]
    rank = len(vectors[0]) if vectors else 0
    for v in vectors:
        if len(v) != rank:
            raise ValueError(f"Generators have mixed lengths {len(v)} and {rank}")
        ring.check(*v)
    return ring.syzygies(vectors, rank)
