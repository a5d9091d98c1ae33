"""Walsh functions on the Boolean cube and the fast transform.

Indices and arguments are integers in [0, 2^d) interpreted as bit
vectors over GF(2).  The Walsh function with index k evaluated at x is
the parity of the AND of the two words; the algebraic form maps that
bit through b -> (-1)^b.  All transform arithmetic is exact int64.
"""
from __future__ import annotations

import numpy as np

from .errors import DomainError

# Largest supported cube dimension.  2^24 int64 eigenvalues is 128 MiB,
# which is as much as a single in-memory spectrum should ever need.
MAX_DIM = 24


def parity(x: int) -> int:
    """Return popcount(x) mod 2 via the folding trick.

    Valid for 0 <= x < 2^32, which covers every value the package
    produces (node ids are below 2^24).
    """
    if x < 0:
        raise DomainError("parity is defined for nonnegative integers")
    x ^= x >> 16
    x ^= x >> 8
    x ^= x >> 4
    x ^= x >> 2
    return (x ^ (x >> 1)) & 1


def walsh_binary(k: int, x: int) -> int:
    """W_k(x) in {0, 1}: the parity of the overlap of k and x."""
    if k < 0 or x < 0:
        raise DomainError("walsh indices and arguments must be nonnegative")
    return parity(k & x)


def walsh_algebraic(k: int, x: int) -> int:
    """U_k(x) in {+1, -1}, equal to (-1)**walsh_binary(k, x)."""
    return 1 - 2 * walsh_binary(k, x)


def parity_u32(values: np.ndarray) -> np.ndarray:
    """Vectorized parity for an array of nonnegative ints below 2^32."""
    v = np.asarray(values).astype(np.uint32)
    v ^= v >> 16
    v ^= v >> 8
    v ^= v >> 4
    v ^= v >> 2
    return ((v ^ (v >> 1)) & 1).astype(np.int64)


def walsh_values(k: int, n: int) -> np.ndarray:
    """Row k of the n x n Sylvester-ordered Hadamard matrix (+1/-1)."""
    if n <= 0 or n & (n - 1):
        raise DomainError(f"n must be a power of two, got {n}")
    if not 0 <= k < n:
        raise DomainError(f"walsh index {k} out of range for n={n}")
    x = np.arange(n, dtype=np.uint32)
    return 1 - 2 * parity_u32(x & np.uint32(k))


def fwht(values) -> np.ndarray:
    """Walsh-Hadamard transform of an integer vector, exactly, in place order.

    The input length must be a power of two no larger than 2^MAX_DIM.
    Returns H_n @ values as int64 (Sylvester / natural ordering, no
    normalization), so applying it twice multiplies by n.
    """
    arr = np.asarray(values)
    if arr.ndim != 1:
        raise DomainError("fwht expects a one-dimensional vector")
    if not np.issubdtype(arr.dtype, np.integer):
        raise DomainError("fwht operates on integer vectors only")
    n = arr.size
    if n == 0 or n & (n - 1):
        raise DomainError(f"fwht length must be a power of two, got {n}")
    if n > 1 << MAX_DIM:
        raise DomainError(f"fwht length {n} exceeds 2^{MAX_DIM}")
    out = arr.astype(np.int64, copy=True)
    h = 1
    while h < n:
        blocks = out.reshape(-1, 2 * h)
        left = blocks[:, :h].copy()
        right = blocks[:, h:]
        blocks[:, :h] = left + right
        blocks[:, h:] = left - right
        h *= 2
    return out
