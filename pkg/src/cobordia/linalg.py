"""Exact small-matrix helpers over the rationals (lists of rows of ``Fraction``)."""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Sequence

Matrix = list[list[Fraction]]


def as_fraction_matrix(rows: Sequence[Sequence]) -> Matrix:
    return [[Fraction(x) for x in row] for row in rows]


def identity_matrix(n: int) -> Matrix:
    return [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]


def transpose(a: Sequence[Sequence]) -> list[list]:
    return [list(col) for col in zip(*a)] if a else []


def matmul(a: Sequence[Sequence], b: Sequence[Sequence]) -> list[list]:
    bt = transpose(b)
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def _row_reduce(a: Matrix, augment: Matrix | None = None) -> tuple[Matrix, Matrix | None, int]:
    a = [row[:] for row in a]
    aug = [row[:] for row in augment] if augment is not None else None
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, nrows) if a[r][col] != 0), None)
        if pivot is None:
            continue
        a[rank], a[pivot] = a[pivot], a[rank]
        if aug is not None:
            aug[rank], aug[pivot] = aug[pivot], aug[rank]
        scale = a[rank][col]
        a[rank] = [x / scale for x in a[rank]]
        if aug is not None:
            aug[rank] = [x / scale for x in aug[rank]]
        for r in range(nrows):
            if r != rank and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[rank])]
                if aug is not None:
                    aug[r] = [x - factor * y for x, y in zip(aug[r], aug[rank])]
        rank += 1
    return a, aug, rank


def rank(a: Sequence[Sequence]) -> int:
    return _row_reduce(as_fraction_matrix(a))[2]


def inverse(a: Sequence[Sequence]) -> Matrix:
    """Gauss-Jordan inverse; raises ``ValueError`` for singular input."""
    m = as_fraction_matrix(a)
    n = len(m)
    if any(len(row) != n for row in m):
        raise ValueError("inverse needs a square matrix")
    _, inv, r = _row_reduce(m, identity_matrix(n))
    if r < n:
        raise ValueError("matrix is singular")
    return inv


def random_rational_matrix(rng: random.Random, n: int, bound: int = 5) -> Matrix:
    return [[Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(n)] for _ in range(n)]


def random_invertible(rng: random.Random, n: int, bound: int = 5) -> Matrix:
    while True:
        m = random_rational_matrix(rng, n, bound)
        if rank(m) == n:
            return m


def random_singular(rng: random.Random, n: int, bound: int = 5) -> Matrix:
    """A random matrix of rank ``< n``: one row is a combination of the others (zero when ``n == 1``)."""
    m = random_rational_matrix(rng, n, bound)
    if n == 1:
        return [[Fraction(0)]]
    target = rng.randrange(n)
    coeffs = [Fraction(rng.randint(-bound, bound), rng.randint(1, bound)) for _ in range(n)]
    m[target] = [sum((coeffs[r] * m[r][c] for r in range(n) if r != target), Fraction(0)) for c in range(n)]
    return m
