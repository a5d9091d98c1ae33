"""Exact bisection bandwidth of hop graphs via the Walsh spectrum.

The adjacency eigenvalues of a Cayley graph on Z_2^d are the Walsh
transform of the hop indicator vector, and every Walsh function with a
nonzero index splits the node set into two equal halves.  Such a split
cuts C_k = (m - lambda_k) / 2 links per node pair, i.e. C_k * n/2 links
in total, and no balanced split does better, so scanning the spectrum
yields the exact bisection.  Two engines compute the same scan: a
direct per-index parity sum and the fast transform; an enumeration
oracle for tiny n keeps both honest.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from math import comb

import numpy as np

from .errors import BudgetExceeded, DisconnectedGraph, DomainError
from .graph import GeneratorSet, distance_profile
from .walsh import fwht, parity_u32, walsh_values

_SCAN_CHUNK = 1 << 18


def eigenvalues(gens: GeneratorSet) -> np.ndarray:
    """All n adjacency eigenvalues, indexed by Walsh index k."""
    indicator = np.zeros(gens.n, dtype=np.int64)
    indicator[list(gens.hops)] = 1
    return fwht(indicator)


def cut_counts(gens: GeneratorSet) -> np.ndarray:
    """C_k for every k: hops with odd overlap against k.

    C_k * n/2 is the link count across the Walsh-k bisection.
    """
    lam = eigenvalues(gens)
    diff = gens.m - lam
    assert not (diff & 1).any(), "spectrum parity broke; fwht is miscounting"
    return diff >> 1


@dataclass(frozen=True)
class PartitionVector:
    """A +1/-1 labeling of the n nodes with equal halves, +1 at node 0."""

    signs: np.ndarray = field(repr=False)

    def __post_init__(self):
        s = np.asarray(self.signs, dtype=np.int8)
        if s.ndim != 1 or s.size == 0 or s.size & (s.size - 1):
            raise DomainError("partition length must be a power of two")
        if not np.isin(s, (-1, 1)).all():
            raise DomainError("partition entries must be +1 or -1")
        if int(s.sum()) != 0:
            raise DomainError("partition must split nodes into equal halves")
        if s[0] != 1:
            raise DomainError("node 0 belongs to the +1 side by convention")
        object.__setattr__(self, "signs", s)

    @property
    def n(self) -> int:
        return int(self.signs.size)

    def plus_side(self) -> np.ndarray:
        """Node ids on the +1 side."""
        return np.flatnonzero(self.signs == 1)

    def side_mask(self) -> int:
        """Bit v set when node v is on the +1 side."""
        mask = 0
        for v in self.plus_side():
            mask |= 1 << int(v)
        return mask


def walsh_partition(d: int, k: int) -> PartitionVector:
    """The equipartition cut out by Walsh function k (k >= 1)."""
    if k <= 0:
        raise DomainError("walsh index 0 does not bisect")
    return PartitionVector(walsh_values(k, 1 << d).astype(np.int8))


def cut_value(gens: GeneratorSet, partition) -> int:
    """Links with endpoints on opposite sides of a balanced partition."""
    signs = partition.signs if isinstance(partition, PartitionVector) else (
        np.asarray(partition, dtype=np.int8)
    )
    if signs.size != gens.n:
        raise DomainError(
            f"partition has {signs.size} entries for n={gens.n} nodes"
        )
    if not np.isin(signs, (-1, 1)).all():
        raise DomainError("partition entries must be +1 or -1")
    if int(signs.sum()) != 0:
        raise DomainError("cut_value expects a balanced partition")
    x = np.arange(gens.n)
    crossings = 0
    for h in gens.hops:
        crossings += int(np.count_nonzero(signs != signs[x ^ h]))
    assert crossings % 2 == 0
    return crossings // 2


@dataclass(frozen=True)
class BisectionReport:
    """Outcome of a bisection scan over all Walsh indices."""

    d: int
    b: int
    t: int
    counts: np.ndarray = field(repr=False)

    @property
    def n(self) -> int:
        return 1 << self.d

    @property
    def B(self) -> int:
        """Total links across the optimal bisection, b * n/2."""
        return self.b * (self.n // 2)

    @property
    def max_cut(self) -> int:
        """Largest Walsh cut count; diagnostic only."""
        return int(self.counts[1:].max())

    @property
    def partition(self) -> PartitionVector:
        """A partition achieving the optimum: the Walsh-t split."""
        return walsh_partition(self.d, self.t)


def _report(gens: GeneratorSet, counts: np.ndarray) -> BisectionReport:
    t = int(np.argmin(counts[1:])) + 1
    b = int(counts[t])
    if b == 0:
        raise DisconnectedGraph(
            f"hops do not span Z_2^{gens.d}; bisection is undefined"
        )
    return BisectionReport(d=gens.d, b=b, t=t, counts=counts)


def bisection_fwht(gens: GeneratorSet) -> BisectionReport:
    """Exact bisection via one transform, O(n log n)."""
    return _report(gens, cut_counts(gens))


def bisection_direct(gens: GeneratorSet) -> BisectionReport:
    """Exact bisection by summing parities per index, O(m n).

    Same report as bisection_fwht, computed without the transform.
    """
    n = gens.n
    hops = np.array(gens.hops, dtype=np.uint32)
    counts = np.empty(n, dtype=np.int64)
    for lo in range(0, n, _SCAN_CHUNK):
        block = np.arange(lo, min(lo + _SCAN_CHUNK, n), dtype=np.uint32)
        counts[lo : lo + block.size] = parity_u32(
            block[:, None] & hops[None, :]
        ).sum(axis=1)
    return _report(gens, counts)


def brute_force_bisection(gens: GeneratorSet, max_nodes: int = 16):
    """Minimum cut over every balanced partition, by sheer enumeration.

    Independent of all Walsh machinery, so it can referee the other two
    engines.  Only sensible for tiny graphs; refuses n > max_nodes.
    Returns (B, achieving PartitionVector), the partition being the
    first optimum in lexicographic order of the +1 side.
    """
    n = gens.n
    if n > max_nodes:
        raise DomainError(f"brute force capped at {max_nodes} nodes, got {n}")
    if not gens.spans():
        raise DisconnectedGraph("hops do not span; bisection is undefined")
    best_cut = None
    best_side = None
    for extra in combinations(range(1, n), n // 2 - 1):
        side = frozenset((0, *extra))
        cut = 0
        for v in side:
            for h in gens.hops:
                if v ^ h not in side:
                    cut += 1
        if best_cut is None or cut < best_cut:
            best_cut = cut
            best_side = side
    signs = np.full(n, -1, dtype=np.int8)
    signs[sorted(best_side)] = 1
    return best_cut, PartitionVector(signs)


def optimize_direct(d: int, m: int, budget: int = 100_000):
    """Exhaustively search all m-subsets of Z_2^d \\ {0} for the best b.

    Ties go to the smaller diameter, then to the lexicographically
    first hop list.  Returns (GeneratorSet, BisectionReport).  Only
    feasible for toy sizes; refuses n > 64 or more candidates than the
    budget allows.
    """
    n = 1 << d
    if n > 64:
        raise DomainError("exhaustive search is capped at n=64")
    if not d <= m <= n - 1:
        raise DomainError(f"m must be in [{d}, {n - 1}] for d={d}")
    total = comb(n - 1, m)
    if total > budget:
        raise BudgetExceeded(
            f"{total} candidate sets exceed the budget of {budget}"
        )
    best = None
    best_key = None
    for hops in combinations(range(1, n), m):
        cand = GeneratorSet(d, hops)
        counts = cut_counts(cand)
        b = int(counts[1:].min())
        if b == 0:
            continue
        if best_key is not None and b < best_key[0]:
            continue
        diam = distance_profile(cand).diameter
        key = (b, -diam)
        if best_key is None or key > best_key:
            best, best_key = cand, key
    if best is None:
        raise DomainError("no spanning hop set exists for these parameters")
    return best, bisection_fwht(best)
