"""Translation between hop sets and binary linear block codes.

A d x m generator matrix over GF(2) and an m-hop set in Z_2^d are the
same object viewed sideways: hop s is the (m - s)'th matrix column read
top-to-bottom as a d-bit word (top row = most significant bit).  Under
that correspondence the minimum codeword weight equals the per-node
bisection b of the hop graph, so code tables double as network designs.
"""
from __future__ import annotations

import random
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from . import gf2
from .errors import DomainError, FormatError
from .graph import GeneratorSet
from .walsh import MAX_DIM


@dataclass(frozen=True)
class LinearCode:
    """Generator matrix: `rows` are width-bit ints, leftmost column = MSB."""

    width: int
    rows: tuple[int, ...]

    def __post_init__(self):
        if not 1 <= self.width <= 63:
            raise DomainError(f"code width must be in [1, 63], got {self.width}")
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        if not self.rows:
            raise DomainError("a code needs at least one generator row")
        for r in self.rows:
            if not 0 <= r < 1 << self.width:
                raise DomainError(f"row {r:#x} wider than {self.width} bits")

    @property
    def k(self) -> int:
        return len(self.rows)

    def column(self, j: int) -> int:
        """Column j (0 = leftmost) as a k-bit word, top row = MSB."""
        word = 0
        for i, r in enumerate(self.rows):
            bit = (r >> (self.width - 1 - j)) & 1
            word |= bit << (self.k - 1 - i)
        return word


def format_code(code: LinearCode) -> str:
    """One generator row per line as 0/1 characters."""
    return "\n".join(f"{r:0{code.width}b}" for r in code.rows) + "\n"


def parse_code(text: str) -> LinearCode:
    """Parse 0/1 rows; blank lines and `#` comments are ignored."""
    rows = []
    width = None
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if set(line) - {"0", "1"}:
            raise FormatError(f"bad matrix row: {line!r}")
        if width is None:
            width = len(line)
        elif len(line) != width:
            raise FormatError("matrix rows differ in length")
        rows.append(int(line, 2))
    if not rows:
        raise FormatError("empty code matrix")
    try:
        return LinearCode(width, tuple(rows))
    except DomainError as exc:
        raise FormatError(str(exc)) from None


def load_code(path) -> LinearCode:
    return parse_code(Path(path).read_text())


def save_code(code: LinearCode, path) -> None:
    Path(path).write_text(format_code(code))


def code_to_hops(code: LinearCode) -> GeneratorSet:
    """Read the columns right-to-left as hops over Z_2^k."""
    k = code.k
    if k > MAX_DIM:
        raise DomainError(f"code has {k} rows; dimensions above {MAX_DIM} unsupported")
    if gf2.rank(code.rows) != k:
        raise DomainError("generator rows are linearly dependent")
    hops = tuple(code.column(code.width - 1 - s) for s in range(code.width))
    if 0 in hops:
        raise DomainError("a zero matrix column would be a zero hop")
    if len(set(hops)) != len(hops):
        raise DomainError("equal matrix columns would duplicate a hop")
    return GeneratorSet(k, hops)


def hops_to_code(gens: GeneratorSet) -> LinearCode:
    """Inverse of code_to_hops: hop s becomes column m-1-s."""
    if not gens.spans():
        raise DomainError("hops do not span; the matrix would be rank-deficient")
    d, m = gens.d, gens.m
    rows = [0] * d
    for s, h in enumerate(gens.hops):
        j = m - 1 - s
        for i in range(d):
            bit = (h >> (d - 1 - i)) & 1
            rows[i] |= bit << (m - 1 - j)
    return LinearCode(m, tuple(rows))


def _popcount64(words: np.ndarray) -> np.ndarray:
    v = words.astype(np.uint64)
    m1 = np.uint64(0x5555555555555555)
    m2 = np.uint64(0x3333333333333333)
    m4 = np.uint64(0x0F0F0F0F0F0F0F0F)
    v = v - ((v >> np.uint64(1)) & m1)
    v = (v & m2) + ((v >> np.uint64(2)) & m2)
    v = (v + (v >> np.uint64(4))) & m4
    return (v * np.uint64(0x0101010101010101)) >> np.uint64(56)


def codewords(code: LinearCode) -> np.ndarray:
    """All 2^k codewords as ints (with repetition if rows are dependent)."""
    if code.k > MAX_DIM:
        raise DomainError(f"2^{code.k} codewords is past the supported limit")
    words = np.zeros(1, dtype=np.int64)
    for r in code.rows:
        words = np.concatenate([words, words ^ r])
    return words


def min_weight(code: LinearCode) -> int:
    """Smallest Hamming weight over the nonzero codewords.

    This equals bisection_fwht(code_to_hops(code)).b whenever the rows
    are independent.
    """
    words = codewords(code)
    weights = _popcount64(words)
    nonzero = weights[words != 0]
    if nonzero.size == 0:
        raise DomainError("code has no nonzero codeword")
    return int(nonzero.min())


def verify_duality(code: LinearCode) -> bool:
    """Check the central identity: min codeword weight == graph bisection b.

    Enumerates the codewords on one side and runs the spectral scan on
    the translated hop graph on the other; the two never communicate.
    """
    from .bisection import bisection_fwht

    return min_weight(code) == bisection_fwht(code_to_hops(code)).b


@dataclass(frozen=True)
class EquivalenceMap:
    """An invertible linear map on Z_2^d, stored as images of the units."""

    d: int
    rows: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(int(r) for r in self.rows))
        if len(self.rows) != self.d:
            raise DomainError(f"need {self.d} rows, got {len(self.rows)}")
        for r in self.rows:
            if not 0 <= r < 1 << self.d:
                raise DomainError(f"row {r:#x} out of range for d={self.d}")
        if gf2.rank(self.rows) != self.d:
            raise DomainError("equivalence map must be invertible")

    @classmethod
    def identity(cls, d: int) -> "EquivalenceMap":
        return cls(d, tuple(1 << i for i in range(d)))

    def apply(self, x: int) -> int:
        out = 0
        rows = self.rows
        i = 0
        while x:
            if x & 1:
                out ^= rows[i]
            x >>= 1
            i += 1
        return out

    def apply_to(self, gens: GeneratorSet) -> GeneratorSet:
        if gens.d != self.d:
            raise DomainError("dimension mismatch")
        return GeneratorSet(self.d, tuple(self.apply(h) for h in gens.hops))

    def then(self, other: "EquivalenceMap") -> "EquivalenceMap":
        """The composite map: apply self first, then `other`."""
        if other.d != self.d:
            raise DomainError("dimension mismatch")
        return EquivalenceMap(self.d, tuple(other.apply(r) for r in self.rows))

    def inverse(self) -> "EquivalenceMap":
        return EquivalenceMap(self.d, tuple(gf2.invert(list(self.rows), self.d)))


def apply_equivalence(gens: GeneratorSet, emap: EquivalenceMap) -> GeneratorSet:
    """Relabel every hop through an invertible map.

    Preserves b, the whole cut multiset, and the distance histogram;
    only the node naming changes.
    """
    return emap.apply_to(gens)


def diagonalize(gens: GeneratorSet):
    """Rewrite an equivalent hop set whose first d hops are the units.

    Returns (new_gens, emap) where emap carries the old hop values onto
    the new ones (the list order additionally moves pivots forward).
    Pivots are chosen lightest-first so the tail keeps low weight.
    """
    d = gens.d
    if not gens.spans():
        raise DomainError("cannot diagonalize: hops do not span Z_2^d")
    hops = list(gens.hops)
    rows = [1 << i for i in range(d)]

    def transvect(src: int, dst: int):
        nonlocal hops, rows
        hops = [h ^ ((h >> src & 1) << dst) for h in hops]
        rows = [r ^ ((r >> src & 1) << dst) for r in rows]

    for c in range(d):
        cands = [i for i, h in enumerate(hops) if h >> c & 1]
        pivot = min(cands, key=lambda i: (hops[i].bit_count(), i))
        for c2 in range(d):
            if c2 != c and hops[pivot] >> c2 & 1:
                transvect(c, c2)
        hops[pivot], hops[c] = hops[c], hops[pivot]
    return GeneratorSet(d, tuple(hops)), EquivalenceMap(d, tuple(rows))


@dataclass(frozen=True)
class MinChangeResult:
    emap: EquivalenceMap
    gens: GeneratorSet
    rewired: int


def min_change_expansion(
    old: GeneratorSet,
    new: GeneratorSet,
    budget: int = 2000,
    seed: int = 0,
) -> MinChangeResult:
    """Re-encode `new` to reuse as many of `old`'s hops as possible.

    Searches invertible maps M on Z_2^{new.d} minimizing how many hops
    of M(new) are absent from `old` (old hops are read zero-extended
    when old.d < new.d).  Greedy over elementary column additions with
    random restarts; `budget` caps candidate evaluations, so the result
    is the best map seen, not a certified optimum.
    """
    if old.d > new.d:
        raise DomainError("the old network cannot be wider than the new one")
    d = new.d
    old_set = set(old.hops)
    rng = random.Random(seed)

    def cost(rows: list[int]) -> int:
        emap = EquivalenceMap(d, tuple(rows))
        return sum(1 for h in new.hops if emap.apply(h) not in old_set)

    current = [1 << i for i in range(d)]
    current_cost = cost(current)
    budget -= 1
    best_rows, best_cost = list(current), current_cost

    while budget > 0 and best_cost > 0:
        step = None
        for src in range(d):
            for dst in range(d):
                if src == dst:
                    continue
                cand = [r ^ ((r >> src & 1) << dst) for r in current]
                c = cost(cand)
                budget -= 1
                if c < current_cost and (step is None or c < step[0]):
                    step = (c, cand)
                if budget <= 0:
                    break
            if budget <= 0:
                break
        if step is not None:
            current_cost, current = step
            if current_cost < best_cost:
                best_cost, best_rows = current_cost, list(current)
        else:
            current = gf2.random_invertible(d, rng)
            current_cost = cost(current)
            budget -= 1
            if current_cost < best_cost:
                best_cost, best_rows = current_cost, list(current)

    emap = EquivalenceMap(d, tuple(best_rows))
    return MinChangeResult(emap=emap, gens=emap.apply_to(new), rewired=best_cost)
