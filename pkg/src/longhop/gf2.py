"""Bit-packed linear algebra over GF(2).

Vectors are Python ints (bit i = coordinate i) and a matrix is a list of
row ints.  Everything here is exact and allocation-light; dimensions in
this package never exceed 24 so dense elimination is always cheap.
"""
from __future__ import annotations

import random

from .errors import DomainError


def rank(vectors) -> int:
    """Rank of the span of `vectors` (any iterable of nonnegative ints)."""
    basis: dict[int, int] = {}
    for v in vectors:
        if v < 0:
            raise DomainError("GF(2) vectors must be nonnegative integers")
        while v:
            top = v.bit_length() - 1
            if top not in basis:
                basis[top] = v
                break
            v ^= basis[top]
    return len(basis)


def spans(vectors, d: int) -> bool:
    """True when `vectors` generate all of GF(2)^d."""
    return rank(vectors) == d


def invert(rows: list[int], d: int) -> list[int]:
    """Inverse of a d x d matrix given as d row ints.

    Rows are images of the unit vectors: the map sends x to the XOR of
    rows[i] over the set bits i of x, and the inverse undoes that.
    Raises DomainError when the matrix is singular.
    """
    if len(rows) != d:
        raise DomainError(f"expected {d} rows, got {len(rows)}")
    # Augment each row with an identity tag in the high bits, eliminate,
    # and read the inverse back out of the tags.
    aug = [(rows[i] & ((1 << d) - 1)) | (1 << (d + i)) for i in range(d)]
    perm: list[int] = []
    for col in range(d):
        pivot = next(
            (r for r in range(len(aug)) if r not in perm and aug[r] >> col & 1),
            None,
        )
        if pivot is None:
            raise DomainError("matrix is singular over GF(2)")
        for r in range(d):
            if r != pivot and aug[r] >> col & 1:
                aug[r] ^= aug[pivot]
        perm.append(pivot)
    out = [0] * d
    for col, pivot in enumerate(perm):
        out[col] = aug[pivot] >> d
    return out


def random_invertible(d: int, rng: random.Random) -> list[int]:
    """Draw a uniformly random invertible d x d matrix by rejection."""
    if d <= 0:
        raise DomainError("dimension must be positive")
    while True:
        rows = [rng.getrandbits(d) for _ in range(d)]
        if rank(rows) == d:
            return rows
