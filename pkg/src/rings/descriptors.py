"""
The three concrete rings: ℤ, ℤ/n and the idealization ℤ(+)(ℤ/2ℤ)^(ℕ).

Linear systems over ℤ/n are lifted to ℤ with one extra modulus column per
coordinate. Over the idealization the ℤ-part is solved first and the F₂
condition is then decided over the coset of integer solutions: only the
parities of the coefficients reach the F₂ part, and those form an affine
F₂ space spanned by the parities of a kernel basis.
"""
import math
from dataclasses import dataclass
from random import Random
from typing import ClassVar, Optional, Sequence

from loguru import logger

from src.core.exceptions import LiteralParseError
from src.rings import gf2, lattice
from src.rings.base import BaseRing, RingKind, SyzygyBasis
from src.rings.elements import Element, Int, Pair, Res, Vector, mask_to_support


@dataclass(frozen=True)
class Integers(BaseRing[Int]):
    kind: ClassVar[RingKind] = RingKind.INTEGERS

    @property
    def spec(self) -> str:
        return "z"

    @property
    def zero(self) -> Int:
        return Int(0)

    @property
    def one(self) -> Int:
        return Int(1)

    def owns(self, x: Element) -> bool:
        return isinstance(x, Int)

    def from_int(self, n: int) -> Int:
        return Int(n)

    def add(self, x: Int, y: Int) -> Int:
        return Int(x.value + y.value)

    def mul(self, x: Int, y: Int) -> Int:
        return Int(x.value * y.value)

    def neg(self, x: Int) -> Int:
        return Int(-x.value)

    def random_element(self, rng: Random, int_bound: int, support_bound: int) -> Int:
        return Int(rng.randint(-int_bound, int_bound))

    def lin_solve(self, gens: Sequence[Vector], target: Vector, nil: Sequence[int] = ()) -> Optional[list[Int]]:
        self._reject_nil(nil)
        matrix = [[g[i].value for g in gens] for i in range(len(target))]  # type: ignore[union-attr]
        x = lattice.solve(matrix, len(gens), [t.value for t in target])  # type: ignore[union-attr]
        return None if x is None else [Int(v) for v in x]

    def syzygies(self, gens: Sequence[Vector], rank: int, nil: Sequence[int] = ()) -> SyzygyBasis:
        self._reject_nil(nil)
        matrix = [[g[i].value for g in gens] for i in range(rank)]  # type: ignore[union-attr]
        basis = lattice.kernel(matrix, len(gens))
        return SyzygyBasis(tuple(tuple(Int(v) for v in vec) for vec in basis))

    def canonical_ideal(self, gens: Sequence[Int]) -> tuple[Int, ...]:
        g = math.gcd(*(x.value for x in gens)) if gens else 0
        return (Int(g),) if g else ()


@dataclass(frozen=True)
class ModularIntegers(BaseRing[Res]):
    modulus: int
    kind: ClassVar[RingKind] = RingKind.MODULAR

    def __post_init__(self) -> None:
        if self.modulus < 2:
            raise ValueError(f"Modulus must be at least 2, got {self.modulus}")

    @property
    def spec(self) -> str:
        return f"zmod:{self.modulus}"

    @property
    def zero(self) -> Res:
        return Res(0, self.modulus)

    @property
    def one(self) -> Res:
        return Res(1, self.modulus)

    def owns(self, x: Element) -> bool:
        return isinstance(x, Res) and x.modulus == self.modulus

    def from_int(self, n: int) -> Res:
        return Res(n, self.modulus)

    def add(self, x: Res, y: Res) -> Res:
        return Res(x.value + y.value, self.modulus)

    def mul(self, x: Res, y: Res) -> Res:
        return Res(x.value * y.value, self.modulus)

    def neg(self, x: Res) -> Res:
        return Res(-x.value, self.modulus)

    def random_element(self, rng: Random, int_bound: int, support_bound: int) -> Res:
        return Res(rng.randrange(self.modulus), self.modulus)

    def _lifted(self, gens: Sequence[Vector], rank: int) -> list[list[int]]:
        # [A | n·I]: the extra columns absorb multiples of the modulus
        return [
            [g[i].value for g in gens] + [self.modulus if j == i else 0 for j in range(rank)]  # type: ignore[union-attr]
            for i in range(rank)
        ]

    def lin_solve(self, gens: Sequence[Vector], target: Vector, nil: Sequence[int] = ()) -> Optional[list[Res]]:
        self._reject_nil(nil)
        rank = len(target)
        x = lattice.solve(self._lifted(gens, rank), len(gens) + rank, [t.value for t in target])  # type: ignore[union-attr]
        if x is None:
            return None
        return [Res(v, self.modulus) for v in x[: len(gens)]]

    def syzygies(self, gens: Sequence[Vector], rank: int, nil: Sequence[int] = ()) -> SyzygyBasis:
        self._reject_nil(nil)
        k = len(gens)
        basis = lattice.kernel(self._lifted(gens, rank), k + rank)
        vectors: list[Vector] = []
        for vec in basis:
            v = tuple(Res(x, self.modulus) for x in vec[:k])
            if any(r.value for r in v) and v not in vectors:
                vectors.append(v)
        return SyzygyBasis(tuple(vectors))

    def canonical_ideal(self, gens: Sequence[Res]) -> tuple[Res, ...]:
        g = math.gcd(self.modulus, *(x.value for x in gens))
        return () if g == self.modulus else (Res(g, self.modulus),)


@dataclass(frozen=True)
class IdealizationZF2(BaseRing[Pair]):
    """ℤ(+)(ℤ/2ℤ)^(ℕ) with (a, v)(c, w) = (ac, a·w + c·v)."""
    kind: ClassVar[RingKind] = RingKind.IDEALIZATION

    @property
    def spec(self) -> str:
        return "idealization"

    @property
    def zero(self) -> Pair:
        return Pair(0)

    @property
    def one(self) -> Pair:
        return Pair(1)

    @property
    def has_nil(self) -> bool:
        return True

    def owns(self, x: Element) -> bool:
        return isinstance(x, Pair)

    def from_int(self, n: int) -> Pair:
        return Pair(n)

    def parity(self, x: Pair) -> int:
        return x.a & 1

    def add(self, x: Pair, y: Pair) -> Pair:
        return Pair(x.a + y.a, x.support ^ y.support)

    def mul(self, x: Pair, y: Pair) -> Pair:
        support: frozenset[int] = frozenset()
        if x.a & 1:
            support ^= y.support
        if y.a & 1:
            support ^= x.support
        return Pair(x.a * y.a, support)

    def neg(self, x: Pair) -> Pair:
        return Pair(-x.a, x.support)

    def random_element(self, rng: Random, int_bound: int, support_bound: int) -> Pair:
        a = rng.randint(-int_bound, int_bound)
        return Pair(a, frozenset(i for i in range(1, support_bound + 1) if rng.randrange(2)))

    def nil_element(self, index: int) -> Pair:
        """The element (0, e_index)."""
        return Pair(0, frozenset({index}))

    def fresh_index(self, *vectors: Sequence[Element]) -> int:
        """An index outside the support of every given element."""
        top = -1
        for v in vectors:
            for x in v:
                if isinstance(x, Pair) and x.support:
                    top = max(top, max(x.support))
        return top + 1

    def _parity_rows(self, gens: Sequence[Vector], rank: int, nil: Sequence[int]) -> list[int]:
        # row i of [A mod 2 | nil]: bit j < k is a_ij mod 2, bit k + l is bit i of nil_l
        k = len(gens)
        rows = []
        for i in range(rank):
            row = 0
            for j, g in enumerate(gens):
                if g[i].a & 1:  # type: ignore[union-attr]
                    row |= 1 << j
            for l, c in enumerate(nil):
                if (c >> i) & 1:
                    row |= 1 << (k + l)
            rows.append(row)
        return rows

    @staticmethod
    def _support_rows(gens: Sequence[Vector], rank: int, p: int) -> list[int]:
        # row i: bit j set iff p lies in the support of gens[j][i]
        rows = []
        for i in range(rank):
            row = 0
            for j, g in enumerate(gens):
                if p in g[i].support:  # type: ignore[union-attr]
                    row |= 1 << j
            rows.append(row)
        return rows

    @staticmethod
    def _support_column(target: Vector, p: int) -> int:
        col = 0
        for i, t in enumerate(target):
            if p in t.support:  # type: ignore[union-attr]
                col |= 1 << i
        return col

    @staticmethod
    def _parities(vec: Sequence[int]) -> int:
        mask = 0
        for j, x in enumerate(vec):
            if x & 1:
                mask |= 1 << j
        return mask

    @staticmethod
    def _indices(*vectors: Sequence[Element]) -> list[int]:
        out: set[int] = set()
        for v in vectors:
            for x in v:
                out |= x.support  # type: ignore[union-attr]
        return sorted(out)

    def _coefficients(
        self,
        r: Sequence[int],
        rows: Sequence[int],
        width: int,
        gens: Sequence[Vector],
        rank: int,
        indices: Sequence[int],
        rhs_at: dict[int, int],
    ) -> Optional[list[Pair]]:
        # solve (A mod 2 | nil)·u[p] = rhs_p + V[p]·ρ(r) index by index
        k = len(gens)
        rho = self._parities(r)
        supports: list[set[int]] = [set() for _ in range(k)]
        for p in indices:
            rhs = rhs_at.get(p, 0) ^ gf2.mat_vec(self._support_rows(gens, rank, p), rho)
            u = gf2.solve(rows, width, rhs)
            if u is None:
                return None
            for j in range(k):
                if (u >> j) & 1:
                    supports[j].add(p)
        return [Pair(r[j], frozenset(supports[j])) for j in range(k)]

    def lin_solve(self, gens: Sequence[Vector], target: Vector, nil: Sequence[int] = ()) -> Optional[list[Pair]]:
        k, rank = len(gens), len(target)
        a = [[g[i].a for g in gens] for i in range(rank)]  # type: ignore[union-attr]
        r0 = lattice.solve(a, k, [t.a for t in target])  # type: ignore[union-attr]
        if r0 is None:
            return None
        kernel = lattice.kernel(a, k)
        rows = self._parity_rows(gens, rank, nil)
        width = k + len(nil)
        checks = gf2.null_space(gf2.transpose(rows, width), rank)
        indices = self._indices(target, *gens)
        rho0 = self._parities(r0)
        rho = [self._parities(vec) for vec in kernel]

        # one F₂ equation in ζ per (index, left-null vector) pair
        constraints: list[int] = []
        rhs = 0
        for p in indices:
            vp = self._support_rows(gens, rank, p)
            wp = self._support_column(target, p)
            images = [gf2.mat_vec(vp, x) for x in rho]
            base = wp ^ gf2.mat_vec(vp, rho0)
            for q in checks:
                row = 0
                for l, img in enumerate(images):
                    if gf2.dot(q, img):
                        row |= 1 << l
                if gf2.dot(q, base):
                    rhs |= 1 << len(constraints)
                constraints.append(row)
        zeta = gf2.solve(constraints, len(kernel), rhs)
        if zeta is None:
            return None
        r = list(r0)
        for l, vec in enumerate(kernel):
            if (zeta >> l) & 1:
                r = [x + y for x, y in zip(r, vec)]
        rhs_at = {p: self._support_column(target, p) for p in indices}
        return self._coefficients(r, rows, width, gens, rank, indices, rhs_at)

    def syzygies(self, gens: Sequence[Vector], rank: int, nil: Sequence[int] = ()) -> SyzygyBasis:
        k = len(gens)
        if k == 0:
            return SyzygyBasis(())
        a = [[g[i].a for g in gens] for i in range(rank)]  # type: ignore[union-attr]
        kernel = lattice.kernel(a, k)
        rows = self._parity_rows(gens, rank, nil)
        width = k + len(nil)
        checks = gf2.null_space(gf2.transpose(rows, width), rank)
        indices = self._indices(*gens)
        rho = [self._parities(vec) for vec in kernel]

        # parities of kernel vectors whose F₂ equations are solvable at every index
        constraints: list[int] = []
        for p in indices:
            vp = self._support_rows(gens, rank, p)
            images = [gf2.mat_vec(vp, x) for x in rho]
            for q in checks:
                row = 0
                for l, img in enumerate(images):
                    if gf2.dot(q, img):
                        row |= 1 << l
                constraints.append(row)
        admissible = gf2.null_space(constraints, len(kernel))

        spanning = [[2 * x for x in vec] for vec in kernel]
        for zeta in admissible:
            lift = [0] * k
            for l, vec in enumerate(kernel):
                if (zeta >> l) & 1:
                    lift = [x + y for x, y in zip(lift, vec)]
            spanning.append(lift)
        vectors: list[Vector] = []
        parities: list[int] = []
        for b in lattice.lattice_basis(spanning, k):
            coeffs = self._coefficients(b, rows, width, gens, rank, indices, {})
            if coeffs is None:
                raise ArithmeticError(f"Admissible parity vector has no F₂ completion: {b}")
            vectors.append(tuple(coeffs))
            parities.append(self._parities(b))

        low = (1 << k) - 1
        free = gf2.echelon([c & low for c in gf2.null_space(rows, width)])
        spanned = gf2.echelon(parities)
        nil_span: tuple[int, ...] = ()
        if any(not gf2.in_span(c, spanned) for c in free):
            nil_span = tuple(free)
            logger.debug(f"Relation module of {k} generators is not finitely generated, nil span {nil_span}")
        return SyzygyBasis(tuple(vectors), nil_span)

    def canonical_ideal(self, gens: Sequence[Pair]) -> tuple[Pair, ...]:
        gens = [g for g in gens if g != self.zero]
        if not gens:
            return ()
        d = math.gcd(*(g.a for g in gens))
        if d & 1:
            # an odd generator puts all of 0(+)F₂^(ℕ) in the ideal
            return (Pair(d),)
        row = [[g.a for g in gens]]
        torsion = []
        for vec in lattice.kernel(row, len(gens)):
            t = 0
            for j, x in enumerate(vec):
                if x & 1:
                    t ^= gens[j].mask
            torsion.append(t)
        torsion = gf2.echelon(torsion)
        out: list[Pair] = []
        if d:
            coeffs = lattice.solve(row, len(gens), [d])
            assert coeffs is not None
            v = 0
            for j, x in enumerate(coeffs):
                if x & 1:
                    v ^= gens[j].mask
            out.append(Pair(d, mask_to_support(gf2.reduce(v, torsion))))
        out.extend(Pair(0, mask_to_support(t)) for t in torsion)
        return tuple(out)


Ring = Integers | ModularIntegers | IdealizationZF2


def ring_from_spec(text: str) -> Ring:
    """Parse the `--ring` spelling: `z`, `zmod:N` or `idealization`."""
    spec = text.strip().lower()
    if spec == "z":
        return Integers()
    if spec == "idealization":
        return IdealizationZF2()
    if spec.startswith("zmod:"):
        digits = spec[len("zmod:"):]
        if digits.isdigit() and int(digits) >= 2:
            return ModularIntegers(int(digits))
        raise LiteralParseError(text, len("zmod:"), "a modulus of at least 2")
    raise LiteralParseError(text, 0, "ring 'z', 'zmod:N' or 'idealization'")
