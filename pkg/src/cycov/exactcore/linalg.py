"""Dense matrices over a field: determinant, inverse, rank.

Matrices are lists of rows.  Entries may be ints, Fractions, or finite
field elements; pass ``field`` so that integer input is coerced first.
"""

from __future__ import annotations

from ..errors import DomainError


def _coerce(M, field):
    return [[field(x) for x in row] for row in M]


def det(M, field):
    A = _coerce(M, field)
    n = len(A)
    if any(len(row) != n for row in A):
        raise DomainError("determinant of a non-square matrix")
    result = field.one
    for c in range(n):
        piv = next((r for r in range(c, n) if A[r][c]), None)
        if piv is None:
            return field.zero
        if piv != c:
            A[c], A[piv] = A[piv], A[c]
            result = -result
        result = result * A[c][c]
        inv = 1 / A[c][c]
        for r in range(c + 1, n):
            f = A[r][c] * inv
            if f:
                A[r] = [x - f * y for x, y in zip(A[r], A[c])]
    return result


def inverse(M, field):
    A = _coerce(M, field)
    n = len(A)
    if any(len(row) != n for row in A):
        raise DomainError("non-invertible matrix")
    aug = [row + [field.one if i == j else field.zero for j in range(n)] for i, row in enumerate(A)]
    for c in range(n):
        piv = next((r for r in range(c, n) if aug[r][c]), None)
        if piv is None:
            raise DomainError("non-invertible matrix")
        aug[c], aug[piv] = aug[piv], aug[c]
        inv = 1 / aug[c][c]
        aug[c] = [x * inv for x in aug[c]]
        for r in range(n):
            if r != c and aug[r][c]:
                f = aug[r][c]
                aug[r] = [x - f * y for x, y in zip(aug[r], aug[c])]
    return [row[n:] for row in aug]


def rank(M, field) -> int:
    A = _coerce(M, field)
    if not A:
        return 0
    rows, cols = len(A), len(A[0])
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        inv = 1 / A[r][c]
        for i in range(r + 1, rows):
            f = A[i][c] * inv
            if f:
                A[i] = [x - f * y for x, y in zip(A[i], A[r])]
        r += 1
        if r == rows:
            break
    return r


def matmul(A, B):
    return [[sum((a * b for a, b in zip(row, col)), start=row[0] * 0) for col in zip(*B)] for row in A]


def identity(n: int, field):
    return [[field.one if i == j else field.zero for j in range(n)] for i in range(n)]
