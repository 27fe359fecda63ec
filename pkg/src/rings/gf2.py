"""
Linear algebra over the two-element field.

Vectors are Python ints used as bitmasks (bit j is coordinate j). A matrix
is a list of row bitmasks. Supports of idealization elements use the same
encoding, so F₂^(ℕ) computations and F₂^k computations share these helpers.
"""
from typing import Optional, Sequence


def parity(x: int) -> int:
    return bin(x).count("1") & 1


def dot(x: int, y: int) -> int:
    return parity(x & y)


def mat_vec(rows: Sequence[int], x: int) -> int:
    """Return the bitmask of M·x where M is given by its rows."""
    out = 0
    for i, row in enumerate(rows):
        if dot(row, x):
            out |= 1 << i
    return out


def transpose(rows: Sequence[int], ncols: int) -> list[int]:
    cols = []
    for j in range(ncols):
        col = 0
        for i, row in enumerate(rows):
            if (row >> j) & 1:
                col |= 1 << i
        cols.append(col)
    return cols


def echelon(vectors: Sequence[int]) -> list[int]:
    """
    Reduced echelon basis of the span of `vectors`.

    Each basis vector owns its highest set bit, which no other basis vector
    contains. The result is sorted by that leading bit, so two spans are
    equal iff their echelon bases are equal.
    """
    basis: dict[int, int] = {}
    for v in vectors:
        v = reduce(v, basis)
        if not v:
            continue
        lead = v.bit_length() - 1
        for key in list(basis):
            if (basis[key] >> lead) & 1:
                basis[key] ^= v
        basis[lead] = v
    return [basis[k] for k in sorted(basis)]


def reduce(v: int, basis: dict[int, int] | Sequence[int]) -> int:
    """Reduce `v` modulo an echelon basis (leading bit -> vector or a list)."""
    if not isinstance(basis, dict):
        basis = {b.bit_length() - 1: b for b in basis}
    for lead in sorted(basis, reverse=True):
        if (v >> lead) & 1:
            v ^= basis[lead]
    return v


def in_span(v: int, basis: Sequence[int]) -> bool:
    return reduce(v, basis) == 0


def rank(vectors: Sequence[int]) -> int:
    return len(echelon(vectors))


def solve(rows: Sequence[int], ncols: int, rhs: int) -> Optional[int]:
    """
    A particular solution x of M·x = rhs, or None when the system is
    inconsistent. `rows` are the rows of M (ncols columns), `rhs` has one
    bit per row.
    """
    pivots: list[tuple[int, int, int]] = []  # (pivot column, row, rhs bit)
    for i, row in enumerate(rows):
        b = (rhs >> i) & 1
        for col, prow, pb in pivots:
            if (row >> col) & 1:
                row ^= prow
                b ^= pb
        if row == 0:
            if b:
                return None
            continue
        col = (row & -row).bit_length() - 1
        pivots = [
            (c, pr ^ row, pb ^ b) if (pr >> col) & 1 else (c, pr, pb)
            for c, pr, pb in pivots
        ]
        pivots.append((col, row, b))
    x = 0
    for col, _, b in pivots:
        if b:
            x |= 1 << col
    return x


def null_space(rows: Sequence[int], ncols: int) -> list[int]:
    """Basis of {x in F₂^ncols : M·x = 0}."""
    pivots: dict[int, int] = {}  # pivot column -> fully reduced row
    for row in rows:
        for col, prow in pivots.items():
            if (row >> col) & 1:
                row ^= prow
        if row == 0:
            continue
        col = (row & -row).bit_length() - 1
        for c in list(pivots):
            if (pivots[c] >> col) & 1:
                pivots[c] ^= row
        pivots[col] = row
    basis = []
    for free in range(ncols):
        if free in pivots:
            continue
        x = 1 << free
        for col, prow in pivots.items():
            if (prow >> free) & 1:
                x |= 1 << col
        basis.append(x)
    return basis
