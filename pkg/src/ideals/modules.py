"""
Membership, containment, images, preimages and kernels for module descriptors.

Everything reduces to the ring's two primitives, `lin_solve` and `syzygies`,
both of which accept nil directions, so descriptors that are not finitely
generated are handled exactly.
"""
from typing import Optional, Sequence

from loguru import logger

from src.rings import gf2
from src.rings.descriptors import IdealizationZF2, Ring
from src.rings.elements import Element, Vector
from src.ideals.models import FinIdeal, FreeSubmodule, SplitIdeal, Subquotient, Target

Matrix = Sequence[Vector]


def ideal_module(ideal: FinIdeal | SplitIdeal) -> FreeSubmodule:
    """An ideal as a submodule of R¹."""
    if isinstance(ideal, SplitIdeal):
        gens = ((ideal.ring.from_int(ideal.z_part),),) if ideal.z_part else ()
        return FreeSubmodule(ideal.ring, 1, gens, (1,))
    return FreeSubmodule(ideal.ring, 1, tuple((g,) for g in ideal.gens))


def as_subquotient(target: Target) -> Subquotient:
    if isinstance(target, Subquotient):
        return target
    if isinstance(target, FreeSubmodule):
        return Subquotient.of(target)
    return Subquotient.of(ideal_module(target))


def module_sum(left: FreeSubmodule, right: FreeSubmodule) -> FreeSubmodule:
    return FreeSubmodule(left.ring, left.rank, left.gens + right.gens, left.nil_span + right.nil_span)


def ambient(module: Subquotient) -> FreeSubmodule:
    """sub + relations, the preimage of the module in Rⁿ."""
    return module_sum(module.sub, module.relations)


def solve_in(module: FreeSubmodule, x: Vector) -> Optional[list[Element]]:
    """Coefficients over `module.gens` reaching x up to the nil part, or None."""
    return module.ring.lin_solve(module.gens, tuple(x), module.nil_span)  # type: ignore[arg-type]


def has_vector(module: FreeSubmodule, x: Vector) -> bool:
    return solve_in(module, x) is not None


def nil_probes(ring: Ring, nil_span: Sequence[int], rank: int, *context: Sequence[Vector]) -> list[Vector]:
    """
    One representative (0, e_p)·c per nil direction c, with p a fresh index.

    Index permutations fixing the supports in `context` are module
    automorphisms, so N ⊗ C lies in a module iff these probes do.
    """
    if not nil_span:
        return []
    assert isinstance(ring, IdealizationZF2)
    p = ring.fresh_index(*(x for vectors in context for x in vectors))
    return [
        tuple(ring.nil_element(p) if (c >> i) & 1 else ring.zero for i in range(rank))
        for c in nil_span
    ]


def contains(outer: FreeSubmodule, inner: FreeSubmodule) -> bool:
    """inner ⊆ outer."""
    if any(not has_vector(outer, g) for g in inner.gens):
        return False
    probes = nil_probes(inner.ring, inner.nil_span, inner.rank, outer.gens, inner.gens)
    return all(has_vector(outer, x) for x in probes)


def equal(left: FreeSubmodule, right: FreeSubmodule) -> bool:
    return contains(left, right) and contains(right, left)


def apply(ring: Ring, matrix: Matrix, x: Vector) -> Vector:
    """matrix·x, where `matrix` is a list of rows."""
    out = []
    for row in matrix:
        acc = ring.zero
        for a, b in zip(row, x):
            acc = ring.add(acc, ring.mul(a, b))  # type: ignore[arg-type]
        out.append(acc)
    return tuple(out)


def columns(matrix: Matrix, ncols: int) -> list[Vector]:
    return [tuple(row[j] for row in matrix) for j in range(ncols)]


def identity(ring: Ring, rank: int) -> list[Vector]:
    return [ring.unit_vector(rank, i) for i in range(rank)]


def nil_image(ring: Ring, matrix: Matrix, c: int) -> int:
    """Parity image of the nil direction c under `matrix`."""
    image = 0
    for r, row in enumerate(matrix):
        bit = 0
        for i, a in enumerate(row):
            if (c >> i) & 1 and ring.parity(a):  # type: ignore[arg-type]
                bit ^= 1
        image |= bit << r
    return image


def push_forward(module: FreeSubmodule, matrix: Matrix) -> FreeSubmodule:
    """Image of the module under x ↦ matrix·x."""
    ring = module.ring
    gens = tuple(apply(ring, matrix, g) for g in module.gens)
    nil = tuple(nil_image(ring, matrix, c) for c in module.nil_span)
    return FreeSubmodule(ring, len(matrix), gens, nil)


def scale_module(module: FreeSubmodule, s: Element) -> FreeSubmodule:
    ring = module.ring
    diagonal = [ring.scale_vector(s, ring.unit_vector(module.rank, i)) for i in range(module.rank)]  # type: ignore[arg-type]
    return push_forward(module, diagonal)


def kernel_of(gens: Sequence[Vector], relations: FreeSubmodule) -> FreeSubmodule:
    """{x ∈ R^k : Σ x_j·gens_j ∈ relations}, for k = len(gens)."""
    ring = relations.ring
    k = len(gens)
    basis = ring.syzygies(list(gens) + list(relations.gens), relations.rank, relations.nil_span)  # type: ignore[arg-type]
    vectors: list[Vector] = []
    for v in basis.vectors:
        head = tuple(v[:k])
        if any(not ring.is_zero(x) for x in head) and head not in vectors:  # type: ignore[arg-type]
            vectors.append(head)
    low = (1 << k) - 1
    nil = tuple(c for c in gf2.echelon([c & low for c in basis.nil_span]))
    kernel = FreeSubmodule(ring, k, tuple(vectors), nil)
    if not kernel.finitely_generated:
        logger.debug(f"Kernel of {k} generators carries nil span {kernel.nil_span}")
    return kernel


def preimage(module: FreeSubmodule, matrix: Matrix, ncols: int) -> FreeSubmodule:
    """{x ∈ R^ncols : matrix·x ∈ module}."""
    return kernel_of(columns(matrix, ncols), module)


def intersect_modules(left: FreeSubmodule, right: FreeSubmodule) -> FreeSubmodule:
    """
    left ∩ right, read off as {x : (x, 0) ∈ W} for W = {(g, g)} + {(0, h)}
    with g over left and h over right.
    """
    ring, n = left.ring, left.rank
    zeros = ring.zero_vector(n)
    gens = tuple(g + g for g in left.gens) + tuple(zeros + h for h in right.gens)
    nil = tuple(c | (c << n) for c in left.nil_span) + tuple(c << n for c in right.nil_span)
    stacked = FreeSubmodule(ring, 2 * n, gens, nil)
    return kernel_of([e + zeros for e in identity(ring, n)], stacked)


def presentation_kernel(module: Subquotient, presentation: Optional[Sequence[Vector]] = None) -> FreeSubmodule:
    """Kernel of R^k → module sending e_j to the j-th presentation vector."""
    return kernel_of(presentation if presentation is not None else module.gens, module.relations)


def express(module: Subquotient, x: Vector, presentation: Optional[Sequence[Vector]] = None) -> Optional[list[Element]]:
    """Coefficients writing x as a combination of the presentation modulo the relations."""
    gens = list(presentation if presentation is not None else module.gens)
    rel = module.relations
    coeffs = module.ring.lin_solve(gens + list(rel.gens), tuple(x), rel.nil_span)  # type: ignore[arg-type]
    return None if coeffs is None else coeffs[: len(gens)]


def in_subquotient(module: Subquotient, x: Vector) -> bool:
    return has_vector(ambient(module), x)


def subquotient_contains(outer: Subquotient, inner: FreeSubmodule) -> bool:
    """inner ⊆ outer.sub + outer.relations."""
    return contains(ambient(outer), inner)


def lift_through(source: Subquotient, matrix: Matrix, relations: FreeSubmodule, x: Vector) -> Optional[Vector]:
    """
    A vector y of source.sub + source.relations with matrix·y − x in
    `relations`, or None.

    Nil directions of the source are realized explicitly: the F₂ residue left
    by the solver is split index by index over the images of those directions.
    """
    ring = relations.ring
    space = ambient(source)
    images = [apply(ring, matrix, g) for g in space.gens]
    pushed = [nil_image(ring, matrix, c) for c in space.nil_span]
    nil = pushed + list(relations.nil_span)
    coefficients = ring.lin_solve(images + list(relations.gens), tuple(x), nil)  # type: ignore[arg-type]
    if coefficients is None:
        return None
    k = len(space.gens)
    y = ring.combine(coefficients[:k], space.gens, source.rank)  # type: ignore[arg-type]
    if not space.nil_span:
        return y
    reached = ring.add_vectors(apply(ring, matrix, y), ring.combine(coefficients[k:], relations.gens, relations.rank))  # type: ignore[arg-type]
    residue = ring.add_vectors(tuple(x), tuple(ring.neg(v) for v in reached))  # type: ignore[arg-type]
    rows = gf2.transpose(nil, relations.rank)
    indices = sorted({i for v in residue for i in v.support})  # type: ignore[union-attr]
    y_list = list(y)
    for p in indices:
        target = sum(1 << r for r, v in enumerate(residue) if p in v.support)  # type: ignore[union-attr]
        choice = gf2.solve(rows, len(nil), target)
        if choice is None:
            logger.warning(f"Nil residue at index {p} is outside the pushed nil span")
            return None
        for t, c in enumerate(space.nil_span):
            if (choice >> t) & 1:
                for i in range(source.rank):
                    if (c >> i) & 1:
                        y_list[i] = ring.add(y_list[i], ring.nil_element(p))  # type: ignore[union-attr, arg-type]
    return tuple(y_list)
