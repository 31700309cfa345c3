"""Smith normal form over the integers, with unimodular transforms."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


@dataclass(frozen=True)
class IntegerMatrix:
    rows: tuple[tuple[int, ...], ...]
    ncols: int

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], ncols: int | None = None) -> "IntegerMatrix":
        rows = tuple(tuple(int(x) for x in r) for r in rows)
        if ncols is None:
            if not rows:
                raise ValueError("ncols is required for a matrix without rows")
            ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged integer matrix")
        return cls(rows, ncols)

    @classmethod
    def identity(cls, n: int) -> "IntegerMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], n)

    @property
    def nrows(self) -> int:
        return len(self.rows)

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.ncols != other.nrows:
            raise ValueError("shape mismatch")
        cols = list(zip(*other.rows)) if other.rows else [()] * other.ncols
        return IntegerMatrix.from_rows(
            [[sum(x * y for x, y in zip(r, c)) for c in cols] for r in self.rows], other.ncols
        )

    def vstack(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.ncols != other.ncols:
            raise ValueError("shape mismatch")
        return IntegerMatrix(self.rows + other.rows, self.ncols)

    def det(self) -> int:
        """Bareiss fraction-free determinant."""
        n = self.nrows
        if n != self.ncols:
            raise ValueError("determinant of a non-square matrix")
        m = [list(r) for r in self.rows]
        sign, prev = 1, 1
        for i in range(n - 1):
            if m[i][i] == 0:
                for j in range(i + 1, n):
                    if m[j][i] != 0:
                        m[i], m[j] = m[j], m[i]
                        sign = -sign
                        break
                else:
                    return 0
            for j in range(i + 1, n):
                for t in range(i + 1, n):
                    m[j][t] = (m[j][t] * m[i][i] - m[j][i] * m[i][t]) // prev
            prev = m[i][i]
        return sign * m[n - 1][n - 1] if n else 1

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.rows]


@dataclass(frozen=True)
class SmithForm:
    """U @ M @ V == D with U, V unimodular and d_1 | d_2 | ... on the diagonal."""

    U: IntegerMatrix
    D: IntegerMatrix
    V: IntegerMatrix

    @property
    def diagonal(self) -> list[int]:
        return [self.D.rows[i][i] for i in range(min(self.D.nrows, self.D.ncols))]

    def to_json(self) -> dict:
        return {"diagonal": self.diagonal, "U": self.U.to_json(), "D": self.D.to_json(), "V": self.V.to_json()}


def smith_normal_form(M: IntegerMatrix) -> SmithForm:
    m, n = M.nrows, M.ncols
    A = [list(r) for r in M.rows]
    U = [[int(i == j) for j in range(m)] for i in range(m)]
    V = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        A[i], A[j] = A[j], A[i]
        U[i], U[j] = U[j], U[i]

    def swap_cols(i, j):
        for row in A:
            row[i], row[j] = row[j], row[i]
        for row in V:
            row[i], row[j] = row[j], row[i]

    def add_row(src, dst, q):  # row_dst += q * row_src
        A[dst] = [x + q * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + q * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, q):  # col_dst += q * col_src
        for row in A:
            row[dst] += q * row[src]
        for row in V:
            row[dst] += q * row[src]

    def negate_row(i):
        A[i] = [-x for x in A[i]]
        U[i] = [-x for x in U[i]]

    for t in range(min(m, n)):
        nz = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
        if not nz:
            break
        _, i, j = min(nz)
        swap_rows(t, i)
        swap_cols(t, j)
        while True:
            done = True
            for i in range(t + 1, m):
                if A[i][t]:
                    q = A[i][t] // A[t][t]
                    add_row(t, i, -q)
                    if A[i][t]:
                        swap_rows(t, i)
                        done = False
            for j in range(t + 1, n):
                if A[t][j]:
                    q = A[t][j] // A[t][t]
                    add_col(t, j, -q)
                    if A[t][j]:
                        swap_cols(t, j)
                        done = False
            if not done:
                continue
            # divisibility: fold any entry the pivot fails to divide into row t
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % A[t][t]),
                None,
            )
            if bad is None:
                break
            add_row(bad[0], t, 1)
        if A[t][t] < 0:
            negate_row(t)

    return SmithForm(
        IntegerMatrix.from_rows(U, m),
        IntegerMatrix.from_rows(A, n),
        IntegerMatrix.from_rows(V, n),
    )


def abelian_invariants(M: IntegerMatrix) -> tuple[int, list[int]]:
    """(free rank, torsion coefficients > 1) of Z^ncols / rowspace(M)."""
    d = [x for x in smith_normal_form(M).diagonal if x] if M.nrows else []
    return M.ncols - len(d), [x for x in d if x > 1]
