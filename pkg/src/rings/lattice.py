"""
Integer linear algebra with unimodular transforms.

Matrices are lists of rows of Python ints. The column echelon form here is
the column-operation analogue of the Hermite normal form: A·U = H with U
unimodular and H lower echelon, which gives both a solver for A·x = t and a
basis of the integer kernel of A.
"""
from dataclasses import dataclass
from typing import Optional, Sequence

from sympy.core.intfunc import igcdex


@dataclass(frozen=True)
class ColumnEchelon:
    """A·U = H; `pivots` lists (row, column) of the pivot entries of H."""
    h: list[list[int]]
    u: list[list[int]]
    pivots: list[tuple[int, int]]

    @property
    def rank(self) -> int:
        return len(self.pivots)


def _combine_columns(m: list[list[int]], i: int, j: int, a: int, b: int, c: int, d: int) -> None:
    # replace m[:, i] by a*m[:, i] + b*m[:, j]
    # and m[:, j] by c*m[:, i] + d*m[:, j]
    for row in m:
        e = row[i]
        row[i] = a * e + b * row[j]
        row[j] = c * e + d * row[j]


def _negate_column(m: list[list[int]], j: int) -> None:
    for row in m:
        row[j] = -row[j]


def column_echelon(matrix: Sequence[Sequence[int]], ncols: int) -> ColumnEchelon:
    h = [list(map(int, row)) for row in matrix]
    u = [[int(i == j) for j in range(ncols)] for i in range(ncols)]
    pivots: list[tuple[int, int]] = []
    col = 0
    for i, row in enumerate(h):
        if col >= ncols:
            break
        for j in range(col + 1, ncols):
            if row[j] == 0:
                continue
            a, b = row[col], row[j]
            x, y, g = (int(v) for v in igcdex(a, b))
            _combine_columns(h, col, j, x, y, -b // g, a // g)
            _combine_columns(u, col, j, x, y, -b // g, a // g)
        if row[col] != 0:
            if row[col] < 0:
                _negate_column(h, col)
                _negate_column(u, col)
            pivots.append((i, col))
            col += 1
    return ColumnEchelon(h=h, u=u, pivots=pivots)


def _column(m: list[list[int]], j: int) -> list[int]:
    return [row[j] for row in m]


def _normalize_sign(v: list[int]) -> list[int]:
    for x in v:
        if x != 0:
            return v if x > 0 else [-y for y in v]
    return v


def solve(matrix: Sequence[Sequence[int]], ncols: int, target: Sequence[int]) -> Optional[list[int]]:
    """An integer solution x of A·x = target, or None."""
    if ncols == 0:
        return [] if all(t == 0 for t in target) else None
    ech = column_echelon(matrix, ncols)
    residual = [int(t) for t in target]
    y = [0] * ncols
    pivot_rows = dict(ech.pivots)
    for i in range(len(residual)):
        if residual[i] == 0:
            continue
        col = pivot_rows.get(i)
        if col is None:
            return None
        q, r = divmod(residual[i], ech.h[i][col])
        if r:
            return None
        y[col] = q
        for k in range(i, len(residual)):
            residual[k] -= q * ech.h[k][col]
    return [sum(ech.u[i][j] * y[j] for j in range(ncols)) for i in range(ncols)]


def kernel(matrix: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    """A basis of {x in ℤ^ncols : A·x = 0}."""
    ech = column_echelon(matrix, ncols)
    return [_normalize_sign(_column(ech.u, j)) for j in range(ech.rank, ncols)]


def lattice_basis(vectors: Sequence[Sequence[int]], dim: int) -> list[list[int]]:
    """A basis of the ℤ-span of `vectors` (each of length `dim`)."""
    if not vectors:
        return []
    columns = [[int(v[i]) for v in vectors] for i in range(dim)]
    ech = column_echelon(columns, len(vectors))
    return [_normalize_sign(_column(ech.h, j)) for j in range(ech.rank)]
