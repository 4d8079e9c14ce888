"""Integer matrices, Smith and Hermite normal forms, finitely generated abelian groups."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Sequence

from ..errors import DomainError


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0 or len(self.entries) != self.rows * self.cols:
            raise DomainError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        if not all(isinstance(x, int) for x in self.entries):
            raise DomainError("IntMatrix entries must be integers")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], cols: int | None = None) -> "IntMatrix":
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise DomainError("column count needed for a matrix with no rows")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise DomainError("ragged rows")
        return cls(len(rows), cols, tuple(int(x) for r in rows for x in r))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], cols=n)

    def to_rows(self) -> list[list[int]]:
        c = self.cols
        return [list(self.entries[i * c:(i + 1) * c]) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.cols + j]

    def __matmul__(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DomainError("dimension mismatch in matrix product")
        a, b = self.to_rows(), other.to_rows()
        cols = list(zip(*b)) if b else [()] * other.cols
        return IntMatrix.from_rows(
            [[sum(x * y for x, y in zip(r, c)) for c in cols] for r in a], cols=other.cols
        )

    def transpose(self) -> "IntMatrix":
        return IntMatrix.from_rows([list(c) for c in zip(*self.to_rows())], cols=self.rows) \
            if self.rows else IntMatrix(self.cols, 0, ())

    def det(self) -> int:
        """Exact determinant by Bareiss fraction-free elimination."""
        if self.rows != self.cols:
            raise DomainError("determinant of a non-square matrix")
        n = self.rows
        A = self.to_rows()
        sign, prev = 1, 1
        for k in range(n - 1):
            if A[k][k] == 0:
                swap = next((r for r in range(k + 1, n) if A[r][k]), None)
                if swap is None:
                    return 0
                A[k], A[swap] = A[swap], A[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
            prev = A[k][k]
        return sign * A[n - 1][n - 1] if n else 1


def smith_normal_form(M: IntMatrix) -> tuple[list[int], IntMatrix, IntMatrix]:
    """Smith normal form with transforms.

    Returns ``(factors, U, V)`` with ``U @ M @ V`` diagonal, diagonal entries
    ``factors`` (length ``min(rows, cols)``), nonnegative, each dividing the
    next, zeros last.  ``U`` and ``V`` are unimodular.  Pivots are chosen of
    smallest magnitude to keep entries small.
    """
    m, n = M.rows, M.cols
    A = M.to_rows()
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

    def add_row(src, dst, f):  # row dst += f * row src
        A[dst] = [x + f * y for x, y in zip(A[dst], A[src])]
        U[dst] = [x + f * y for x, y in zip(U[dst], U[src])]

    def add_col(src, dst, f):  # col dst += f * col src
        for row in A:
            row[dst] += f * row[src]
        for row in V:
            row[dst] += f * row[src]

    for t in range(min(m, n)):
        while True:
            nonzero = [(abs(A[i][j]), i, j) for i in range(t, m) for j in range(t, n) if A[i][j]]
            if not nonzero:
                break
            _, pi, pj = min(nonzero)
            swap_rows(t, pi)
            swap_cols(t, pj)
            p = A[t][t]
            dirty = False
            for i in range(t + 1, m):
                if A[i][t]:
                    add_row(t, i, -(A[i][t] // p))
                    dirty |= A[i][t] != 0
            for j in range(t + 1, n):
                if A[t][j]:
                    add_col(t, j, -(A[t][j] // p))
                    dirty |= A[t][j] != 0
            if dirty:
                continue
            bad = next(
                (i for i in range(t + 1, m) for j in range(t + 1, n) if A[i][j] % p), None
            )
            if bad is None:
                break
            add_row(bad, t, 1)
        if A[t][t] < 0:
            A[t] = [-x for x in A[t]]
            U[t] = [-x for x in U[t]]

    factors = [A[i][i] for i in range(min(m, n))]
    return factors, IntMatrix.from_rows(U, cols=m), IntMatrix.from_rows(V, cols=n)


def hermite_normal_form(M: IntMatrix) -> IntMatrix:
    """Row-style Hermite normal form of the row lattice of ``M`` (zero rows dropped).

    Upper triangular, positive pivots, entries above each pivot reduced into
    ``[0, pivot)``.
    """
    A = [list(r) for r in M.to_rows()]
    out: list[list[int]] = []
    col = 0
    while A and col < M.cols:
        A = [r for r in A if any(r)]
        active = [r for r in A if r[col]]
        if not active:
            col += 1
            continue
        while len([r for r in A if r[col]]) > 1:
            active = sorted((r for r in A if r[col]), key=lambda r: abs(r[col]))
            piv = active[0]
            for r in active[1:]:
                q = r[col] // piv[col]
                for j in range(M.cols):
                    r[j] -= q * piv[j]
        piv = next(r for r in A if r[col])
        A.remove(piv)
        if piv[col] < 0:
            piv = [-x for x in piv]
        out.append(piv)
        col += 1
    for i, row in enumerate(out):
        c = next(j for j, x in enumerate(row) if x)
        for above in out[:i]:
            q = above[c] // row[c]
            for j in range(M.cols):
                above[j] -= q * row[j]
    return IntMatrix.from_rows(out, cols=M.cols)


@dataclass(frozen=True)
class AbelianPresentation:
    """The group Z^generator_count / rowspan(relations)."""

    generator_count: int
    relations: IntMatrix
    invariant_factors: tuple[int, ...] = field(init=False)
    free_rank: int = field(init=False)

    def __post_init__(self):
        if self.relations.cols != self.generator_count:
            raise DomainError(
                f"relation matrix has {self.relations.cols} columns, "
                f"expected {self.generator_count}"
            )
        if self.relations.rows:
            diag, _, _ = smith_normal_form(self.relations)
        else:
            diag = []
        nonzero = [d for d in diag if d]
        object.__setattr__(self, "invariant_factors", tuple(d for d in nonzero if d > 1))
        object.__setattr__(self, "free_rank", self.generator_count - len(nonzero))

    @cached_property
    def order(self) -> int | None:
        """Group order, or None when the group is infinite."""
        if self.free_rank:
            return None
        return math.prod(self.invariant_factors)

    @property
    def is_cyclic(self) -> bool:
        return len(self.invariant_factors) + self.free_rank <= 1

    def describe(self) -> str:
        parts = [f"Z/{d}" for d in self.invariant_factors] + ["Z"] * self.free_rank
        return " x ".join(parts) if parts else "0"


def group_from_relations(g: int, R: IntMatrix | Sequence[Sequence[int]]) -> AbelianPresentation:
    if not isinstance(R, IntMatrix):
        R = IntMatrix.from_rows(R, cols=g)
    if R.cols != g:
        raise DomainError(f"relation matrix has {R.cols} columns, expected {g}")
    return AbelianPresentation(g, R)
