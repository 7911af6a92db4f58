"""Exact integer linear algebra.

Small dense matrices over Z with arbitrary-precision entries: Bareiss
determinants, Smith normal form with unimodular transforms, and membership
tests for integer row spans.  Everything here is exact; no floats.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence


class ShapeError(ValueError):
    """Matrix dimensions do not fit the requested operation."""


class InvalidSignature(ValueError):
    """A parameter vector k fails its validity requirements."""


@dataclass(frozen=True)
class IntMatrix:
    """Immutable row-major integer matrix."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows < 0 or self.cols < 0:
            raise ShapeError("negative dimensions")
        if len(self.entries) != self.rows * self.cols:
            raise ShapeError("entry count does not match rows x cols")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[int]]) -> "IntMatrix":
        rows = [tuple(int(x) for x in r) for r in rows]
        if not rows:
            return cls(0, 0, ())
        width = len(rows[0])
        if any(len(r) != width for r in rows):
            raise ShapeError("ragged rows")
        return cls(len(rows), width, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def row_list(self) -> list[tuple[int, ...]]:
        return [self.row(i) for i in range(self.rows)]

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows(
            [tuple(self[i, j] for i in range(self.rows)) for j in range(self.cols)]
        )

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise ShapeError("inner dimensions differ")
        out = []
        for i in range(self.rows):
            ri = self.row(i)
            out.append(
                tuple(
                    sum(ri[t] * other[t, j] for t in range(self.cols))
                    for j in range(other.cols)
                )
            )
        return IntMatrix.from_rows(out) if out else IntMatrix(0, other.cols, ())

    def diagonal(self) -> tuple[int, ...]:
        return tuple(self[i, i] for i in range(min(self.rows, self.cols)))


def build_mk(k: Sequence[int]) -> IntMatrix:
    """Banded circulant-like matrix of a signature k.

    Row i carries k_i+1 on the diagonal and -k_{i+1} one step to the right,
    wrapping in the last row.  The row sum is always the all-ones vector.
    """
    k = tuple(int(x) for x in k)
    n = len(k)
    if n < 2:
        raise InvalidSignature("signature needs at least two entries")
    if any(x < 0 for x in k):
        raise InvalidSignature("signature entries must be nonnegative")
    rows = []
    for i in range(n):
        r = [0] * n
        r[i] = k[i] + 1
        r[(i + 1) % n] -= k[(i + 1) % n]
        rows.append(r)
    return IntMatrix.from_rows(rows)


def closed_form_dk(k: Sequence[int]) -> int:
    """Product of (k_i+1) minus product of k_i."""
    a = b = 1
    for x in k:
        a *= x + 1
        b *= x
    return a - b


def det(m: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if m.rows != m.cols:
        raise ShapeError("determinant of non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    a = [list(m.row(i)) for i in range(n)]
    sign = 1
    prev = 1
    for t in range(n - 1):
        if a[t][t] == 0:
            for i in range(t + 1, n):
                if a[i][t] != 0:
                    a[t], a[i] = a[i], a[t]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(t + 1, n):
            for j in range(t + 1, n):
                a[i][j] = (a[i][j] * a[t][t] - a[i][t] * a[t][j]) // prev
            a[i][t] = 0
        prev = a[t][t]
    return sign * a[n - 1][n - 1]


@dataclass(frozen=True)
class SnfResult:
    """Smith normal form s = u @ input @ v with unimodular u, v."""

    s: IntMatrix
    u: IntMatrix
    v: IntMatrix

    def diagonal(self) -> tuple[int, ...]:
        return self.s.diagonal()


def smith_normal_form(m: IntMatrix) -> SnfResult:
    """Diagonalize over Z by elementary row/column operations.

    Pivots are chosen as the smallest nonzero entry in the working block,
    which keeps intermediate growth tame at these sizes.  The diagonal is
    made nonnegative and repaired into a divisibility chain.
    """
    R, C = m.rows, m.cols
    a = [list(m.row(i)) for i in range(R)]
    u = [[1 if i == j else 0 for j in range(R)] for i in range(R)]
    v = [[1 if i == j else 0 for j in range(C)] for i in range(C)]

    def swap_rows(i, j):
        a[i], a[j] = a[j], a[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for r in a:
            r[i], r[j] = r[j], r[i]
        for r in v:
            r[i], r[j] = r[j], r[i]

    def add_row(dst, src, c):
        # row dst += c * row src
        ad, asrc = a[dst], a[src]
        for j in range(C):
            ad[j] += c * asrc[j]
        ud, usrc = u[dst], u[src]
        for j in range(R):
            ud[j] += c * usrc[j]

    def add_col(dst, src, c):
        for r in a:
            r[dst] += c * r[src]
        for r in v:
            r[dst] += c * r[src]

    def negate_row(i):
        a[i] = [-x for x in a[i]]
        u[i] = [-x for x in u[i]]

    t = 0
    while t < min(R, C):
        # locate the smallest nonzero entry of the trailing block
        pivot = None
        for i in range(t, R):
            for j in range(t, C):
                if a[i][j] != 0 and (pivot is None or abs(a[i][j]) < abs(a[pivot[0]][pivot[1]])):
                    pivot = (i, j)
        if pivot is None:
            break
        swap_rows(t, pivot[0])
        swap_cols(t, pivot[1])

        while True:
            # clear column t; remainders become new, smaller pivots
            dirty = False
            for i in range(t + 1, R):
                if a[i][t] != 0:
                    q = a[i][t] // a[t][t]
                    add_row(i, t, -q)
                    if a[i][t] != 0:
                        swap_rows(t, i)
                        dirty = True
            for j in range(t + 1, C):
                if a[t][j] != 0:
                    q = a[t][j] // a[t][t]
                    add_col(j, t, -q)
                    if a[t][j] != 0:
                        swap_cols(t, j)
                        dirty = True
            if not dirty:
                # pivot must divide the whole trailing block for the chain
                offender = None
                for i in range(t + 1, R):
                    for j in range(t + 1, C):
                        if a[i][j] % a[t][t] != 0:
                            offender = i
                            break
                    if offender is not None:
                        break
                if offender is None:
                    break
                add_row(t, offender, 1)
        if a[t][t] < 0:
            negate_row(t)
        t += 1

    return SnfResult(
        s=IntMatrix.from_rows([tuple(r) for r in a]) if a else IntMatrix(0, C, ()),
        u=IntMatrix.from_rows([tuple(r) for r in u]) if u else IntMatrix(0, 0, ()),
        v=IntMatrix.from_rows([tuple(r) for r in v]) if v else IntMatrix(0, 0, ()),
    )


def integer_span_contains(rows: IntMatrix, target: Sequence[int]) -> bool:
    """Is target an integer linear combination of the rows?

    With s = u @ rows @ v, the row span of rows @ v is spanned by the
    diagonal rows of s, so target @ v must be divisible entrywise by the
    diagonal (and vanish past the rank).
    """
    target = tuple(int(x) for x in target)
    if len(target) != rows.cols:
        raise ShapeError("target length does not match column count")
    snf = smith_normal_form(rows)
    z = [
        sum(target[i] * snf.v[i, j] for i in range(rows.cols))
        for j in range(rows.cols)
    ]
    diag = snf.s.diagonal()
    for j in range(rows.cols):
        s_j = diag[j] if j < len(diag) else 0
        if s_j == 0:
            if z[j] != 0:
                return False
        elif z[j] % s_j != 0:
            return False
    return True


def inverse_unimodular(m: IntMatrix) -> IntMatrix:
    """Exact inverse of a matrix with determinant +-1, via the adjugate."""
    if m.rows != m.cols:
        raise ShapeError("inverse of non-square matrix")
    n = m.rows
    d = det(m)
    if d not in (1, -1):
        raise ShapeError("matrix is not unimodular")
    rows = []
    for i in range(n):
        row = []
        for j in range(n):
            minor = IntMatrix.from_rows(
                [
                    [m[r, c] for c in range(n) if c != i]
                    for r in range(n)
                    if r != j
                ]
            )
            row.append((-1) ** (i + j) * det(minor) * d)
        rows.append(row)
    return IntMatrix.from_rows(rows)
