"""Small exact linear algebra over Fraction: row reduction, kernels,
inverses, and primitive normalization of rational vectors."""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

Vec = tuple[Fraction, ...]


def vec(values) -> Vec:
    return tuple(Fraction(v) for v in values)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def add(a: Vec, b: Vec) -> Vec:
    return tuple(x + y for x, y in zip(a, b))


def scale(s, a: Vec) -> Vec:
    s = Fraction(s)
    return tuple(s * x for x in a)


def is_zero(a: Sequence[Fraction]) -> bool:
    return all(x == 0 for x in a)


def rref(rows: Sequence[Sequence[Fraction]]) -> tuple[list[Vec], list[int]]:
    """Reduced row echelon form; returns (nonzero rows, pivot columns)."""
    mat = [list(Fraction(x) for x in row) for row in rows]
    if not mat:
        return [], []
    ncols = len(mat[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        pivot_row = next((i for i in range(r, len(mat)) if mat[i][c] != 0), None)
        if pivot_row is None:
            continue
        mat[r], mat[pivot_row] = mat[pivot_row], mat[r]
        pv = mat[r][c]
        mat[r] = [x / pv for x in mat[r]]
        for i in range(len(mat)):
            if i != r and mat[i][c] != 0:
                f = mat[i][c]
                mat[i] = [x - f * y for x, y in zip(mat[i], mat[r])]
        pivots.append(c)
        r += 1
        if r == len(mat):
            break
    return [tuple(row) for row in mat[:r]], pivots


def rank(rows: Sequence[Sequence[Fraction]]) -> int:
    return len(rref(rows)[0])


def nullspace(rows: Sequence[Sequence[Fraction]], dim: int) -> list[Vec]:
    """Basis of {x : row . x = 0 for every row}."""
    reduced, pivots = rref(rows)
    free = [c for c in range(dim) if c not in pivots]
    basis = []
    for f in free:
        v = [Fraction(0)] * dim
        v[f] = Fraction(1)
        for row, p in zip(reduced, pivots):
            v[p] = -row[f]
        basis.append(tuple(v))
    return basis


def invert(rows: Sequence[Sequence[Fraction]]) -> list[Vec] | None:
    """Inverse of a square matrix, or None if singular."""
    n = len(rows)
    aug = [list(Fraction(x) for x in row) + [Fraction(int(i == j)) for j in range(n)]
           for i, row in enumerate(rows)]
    reduced, pivots = rref(aug)
    if pivots[:n] != list(range(n)):
        return None
    return [tuple(row[n:]) for row in reduced]


def solve(rows: Sequence[Sequence[Fraction]], rhs: Sequence[Fraction]) -> Vec | None:
    """One exact solution of rows . x = rhs, or None if inconsistent."""
    n = len(rows[0]) if rows else 0
    aug = [list(row) + [b] for row, b in zip(rows, rhs)]
    reduced, pivots = rref(aug)
    for row, p in zip(reduced, pivots):
        if p == n:
            return None
    x = [Fraction(0)] * n
    for row, p in zip(reduced, pivots):
        x[p] = row[n]
    return tuple(x)


def primitive(v: Sequence[Fraction]) -> Vec:
    """Positive rescale making the entries integral with gcd 1."""
    if is_zero(v):
        return tuple(Fraction(0) for _ in v)
    denom = lcm(*(Fraction(x).denominator for x in v))
    ints = [int(Fraction(x) * denom) for x in v]
    g = 0
    for x in ints:
        g = gcd(g, abs(x))
    return tuple(Fraction(x, g) for x in ints)


def sign_normalized(v: Vec) -> Vec:
    """Flip sign so the first nonzero entry is positive (for line directions)."""
    for x in v:
        if x != 0:
            return v if x > 0 else tuple(-y for y in v)
    return v
