"""Integer polymatroids stored as dense rank tables over subset bitmasks.

Element ``i`` of a ground set of size ``n`` is bit ``1 << i``; a subset is an
int whose low ``n`` bits are the members.  Rank tables have ``2**n`` entries
indexed by mask.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Callable, Iterable, Iterator, Sequence

import numpy as np

MAX_ELEMENTS = 16


def popcount_table(n: int) -> np.ndarray:
    """``table[mask] == bin(mask).count('1')`` for all masks below ``2**n``."""
    pc = np.zeros(1 << n, dtype=np.int64)
    for i in range(n):
        pc[1 << i : 1 << (i + 1)] = pc[: 1 << i] + 1
    return pc


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def elements_of(mask: int) -> list[int]:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def submasks(mask: int) -> Iterator[int]:
    """All subsets of ``mask``, in increasing numeric order."""
    sub = 0
    while True:
        yield sub
        if sub == mask:
            return
        sub = (sub - mask) & mask


@dataclass(frozen=True)
class Polymatroid:
    """A set function on ``{0..n-1}`` given by its full rank table.

    Construction only checks the table shape; use :func:`validate` for the
    polymatroid axioms.  ``k`` is an optional recorded bound on singleton
    ranks and takes no part in equality.
    """

    n: int
    rank: tuple[int, ...]
    k: int | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ELEMENTS:
            raise ValueError(f"ground set size {self.n} outside 0..{MAX_ELEMENTS}")
        table = tuple(int(v) for v in self.rank)
        if len(table) != 1 << self.n:
            raise ValueError(
                f"rank table has {len(table)} entries, expected {1 << self.n}"
            )
        object.__setattr__(self, "rank", table)

    @classmethod
    def from_function(
        cls, n: int, f: Callable[[int], int], k: int | None = None
    ) -> "Polymatroid":
        return cls(n, tuple(f(m) for m in range(1 << n)), k)

    @classmethod
    def from_array(cls, n: int, arr: np.ndarray, k: int | None = None) -> "Polymatroid":
        return cls(n, tuple(arr.tolist()), k)

    def __call__(self, mask: int) -> int:
        return self.rank[mask]

    @property
    def full(self) -> int:
        return (1 << self.n) - 1

    @property
    def total(self) -> int:
        """Rank of the whole ground set."""
        return self.rank[self.full]

    @cached_property
    def array(self) -> np.ndarray:
        return np.asarray(self.rank, dtype=np.int64)

    def r1(self, i: int) -> int:
        return self.rank[1 << i]

    @property
    def singleton_ranks(self) -> tuple[int, ...]:
        return tuple(self.rank[1 << i] for i in range(self.n))

    @property
    def max_singleton(self) -> int:
        return max(self.singleton_ranks, default=0)

    def is_matroid(self) -> bool:
        return self.max_singleton <= 1

    def is_k_polymatroid(self, k: int) -> bool:
        return self.max_singleton <= k

    def with_k(self, k: int | None) -> "Polymatroid":
        return Polymatroid(self.n, self.rank, k)

    def __repr__(self) -> str:
        if self.n <= 4:
            return f"Polymatroid(n={self.n}, rank={self.rank})"
        return f"Polymatroid(n={self.n}, ranks={self.singleton_ranks}, total={self.total})"


def permute(p: Polymatroid, perm: Sequence[int]) -> Polymatroid:
    """Relabel so that old element ``i`` becomes new element ``perm[i]``."""
    if sorted(perm) != list(range(p.n)):
        raise ValueError("perm is not a permutation of the ground set")
    masks = np.arange(1 << p.n, dtype=np.int64)
    image = np.zeros_like(masks)
    for i, j in enumerate(perm):
        image |= ((masks >> i) & 1) << j
    out = np.empty_like(p.array)
    out[image] = p.array
    return Polymatroid.from_array(p.n, out, p.k)


@dataclass(frozen=True)
class AxiomReport:
    ok: bool
    axiom: str | None = None
    witness: tuple[int, int] | None = None
    message: str = ""

    def __bool__(self) -> bool:
        return self.ok


def validate(p: Polymatroid, mode: str = "reference") -> AxiomReport:
    """Check normalization, monotonicity, submodularity and the k bound.

    ``mode="reference"`` tests monotonicity and submodularity on every pair
    of subsets.  ``mode="fast"`` tests covering pairs and the local exchange
    inequality ``r(A+i) + r(A+j) >= r(A+i+j) + r(A)``, which is equivalent.
    Witnesses are ``(A, B)`` mask pairs.
    """
    if mode not in ("reference", "fast"):
        raise ValueError(f"unknown validation mode {mode!r}")
    r = p.array
    size = 1 << p.n
    if r[0] != 0:
        return AxiomReport(False, "normalized", (0, 0), f"rank(empty) = {r[0]}")
    if (r < 0).any():
        bad = int(np.argmax(r < 0))
        return AxiomReport(False, "nondecreasing", (0, bad), "negative rank")
    masks = np.arange(size, dtype=np.int64)

    if mode == "reference":
        for a in range(size):
            sup = masks[(masks & a) == a]
            bad = sup[r[sup] < r[a]]
            if bad.size:
                return AxiomReport(
                    False, "nondecreasing", (a, int(bad[0])),
                    f"rank({a}) = {r[a]} > rank({int(bad[0])}) = {r[bad[0]]}",
                )
        for a in range(size):
            lhs = r[masks | a] + r[masks & a]
            rhs = r[a] + r
            bad = np.nonzero(lhs > rhs)[0]
            if bad.size:
                b = int(bad[0])
                return AxiomReport(
                    False, "submodular", (a, b),
                    f"rank({a | b}) + rank({a & b}) > rank({a}) + rank({b})",
                )
    else:
        for i in range(p.n):
            bit = 1 << i
            low = masks[(masks & bit) == 0]
            bad = low[r[low] > r[low | bit]]
            if bad.size:
                a = int(bad[0])
                return AxiomReport(False, "nondecreasing", (a, a | bit), "cover violation")
        for i in range(p.n):
            for j in range(i + 1, p.n):
                bi, bj = 1 << i, 1 << j
                base = masks[(masks & (bi | bj)) == 0]
                bad = base[r[base | bi] + r[base | bj] < r[base | bi | bj] + r[base]]
                if bad.size:
                    a = int(bad[0])
                    return AxiomReport(False, "submodular", (a | bi, a | bj), "local exchange")

    if p.k is not None:
        for i in range(p.n):
            if p.r1(i) > p.k:
                return AxiomReport(False, "k-bound", (1 << i, 1 << i), f"rank({{{i}}}) > {p.k}")
    return AxiomReport(True, message="ok")


def require_valid(p: Polymatroid) -> Polymatroid:
    rep = validate(p, "fast")
    if not rep:
        raise ValueError(f"not a polymatroid: {rep.axiom} violated at {rep.witness}")
    return p


def closure(p: Polymatroid, X: int) -> int:
    rx = p.rank[X]
    cl = 0
    for e in range(p.n):
        if p.rank[X | (1 << e)] == rx:
            cl |= 1 << e
    return cl


def relation(p: Polymatroid, e: int, f: int) -> str | tuple[str, int, int]:
    """Classify a pair of elements.

    Returns ``"parallel"``, ``"skew"``, ``("lies_on", x, y)`` meaning ``x``
    lies on ``y``, or ``"other"``.
    """
    if e == f:
        raise ValueError("relation needs two distinct elements")
    re_, rf = p.r1(e), p.r1(f)
    ref = p.rank[(1 << e) | (1 << f)]
    if 0 < re_ == rf == ref:
        return "parallel"
    if re_ > 0 and rf > 0 and re_ + rf == ref:
        return "skew"
    if 0 < re_ < rf == ref:
        return ("lies_on", e, f)
    if 0 < rf < re_ == ref:
        return ("lies_on", f, e)
    return "other"


def is_independent_set(p: Polymatroid, X: int) -> bool:
    total = 0
    for e in elements_of(X):
        r = p.r1(e)
        if r <= 0:
            return False
        total += r
    return p.rank[X] == total


def separators(p: Polymatroid) -> list[int]:
    """Masks S with rank(S) + rank(E - S) = rank(E)."""
    full = p.full
    r = p.array
    masks = np.arange(1 << p.n, dtype=np.int64)
    hit = r + r[full ^ masks] == r[full]
    return [int(m) for m in masks[hit]]


def components(p: Polymatroid) -> list[int]:
    """The connected components as masks, ordered by least element.

    Separators are closed under intersection, so the component of ``e`` is
    the intersection of all separators containing ``e``.
    """
    seps = separators(p)
    blocks: list[int] = []
    seen = 0
    for e in range(p.n):
        bit = 1 << e
        if seen & bit:
            continue
        block = p.full
        for s in seps:
            if s & bit:
                block &= s
        blocks.append(block)
        seen |= block
    _check_direct_sum(p, blocks)
    return blocks


def _check_direct_sum(p: Polymatroid, blocks: list[int]) -> None:
    r = p.array
    masks = np.arange(1 << p.n, dtype=np.int64)
    acc = np.zeros_like(r)
    for b in blocks:
        acc += r[masks & b]
    if not np.array_equal(acc, r):
        raise AssertionError("component blocks do not decompose the rank function")


def is_connected(p: Polymatroid) -> bool:
    return len(components(p)) <= 1
