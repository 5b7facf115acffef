"""Exact dense linear algebra over any field whose elements support + - * /.

Works for both :class:`fractions.Fraction` and :class:`qtoric.exactnum.Scalar`
entries.  Matrices are lists of rows.
"""

from __future__ import annotations

from typing import Sequence, TypeVar

T = TypeVar("T")

__all__ = ["rref", "rank", "nullspace", "solve", "transpose", "matvec", "dot"]


def transpose(m: Sequence[Sequence[T]]) -> list[list[T]]:
    return [list(col) for col in zip(*m)]


def dot(u: Sequence[T], v: Sequence[T]) -> T:
    it = iter(zip(u, v))
    x, y = next(it)
    acc = x * y
    for x, y in it:
        acc = acc + x * y
    return acc


def matvec(m: Sequence[Sequence[T]], v: Sequence[T]) -> list[T]:
    return [dot(row, v) for row in m]


def rref(m: Sequence[Sequence[T]]) -> tuple[list[list[T]], list[int]]:
    """Reduced row echelon form and the list of pivot columns."""
    a = [list(row) for row in m]
    if not a:
        return a, []
    nrows, ncols = len(a), len(a[0])
    pivots = []
    r = 0
    for c in range(ncols):
        if r == nrows:
            break
        p = next((i for i in range(r, nrows) if a[i][c]), None)
        if p is None:
            continue
        a[r], a[p] = a[p], a[r]
        inv = 1 / a[r][c]
        a[r] = [x * inv for x in a[r]]
        for i in range(nrows):
            if i != r and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[r])]
        pivots.append(c)
        r += 1
    return a, pivots


def rank(m: Sequence[Sequence[T]]) -> int:
    return len(rref(m)[1])


def nullspace(m: Sequence[Sequence[T]], zero: T, one: T) -> list[list[T]]:
    """Basis of ``{x : m x = 0}``, one vector per free column."""
    ncols = len(m[0])
    r, pivots = rref(m)
    free = [c for c in range(ncols) if c not in pivots]
    basis = []
    for fc in free:
        v = [zero] * ncols
        v[fc] = one
        for row, pc in zip(r, pivots):
            v[pc] = -row[fc]
        basis.append(v)
    return basis


def solve(a: Sequence[Sequence[T]], b: Sequence[T]) -> list[T] | None:
    """Unique solution of the square system ``a x = b``; None if singular."""
    n = len(a)
    aug = [list(row) + [bi] for row, bi in zip(a, b)]
    r, pivots = rref(aug)
    if pivots != list(range(n)):
        return None
    return [r[i][n] for i in range(n)]
