from .base import BaseRing, RingKind, SyzygyBasis
from .descriptors import IdealizationZF2, Integers, ModularIntegers, Ring, ring_from_spec
from .elements import Element, Int, Pair, Res, Vector
from .operations import ElemOp, LinSolveWitness, as_vector, elem_op, lin_solve, ring_of, syzygy_basis

__all__ = [
    "BaseRing",
    "RingKind",
    "SyzygyBasis",
    "IdealizationZF2",
    "Integers",
    "ModularIntegers",
    "Ring",
    "ring_from_spec",
    "Element",
    "Int",
    "Pair",
    "Res",
    "Vector",
    "ElemOp",
    "LinSolveWitness",
    "as_vector",
    "elem_op",
    "lin_solve",
    "ring_of",
    "syzygy_basis",
]
