"""Deletion, contraction, direct sums, k-duality, compression and principal
extension.

Deletion and contraction renumber the surviving elements densely in their
original order; :func:`kept_elements` gives the index map (new ``j`` is old
``kept[j]``).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .core import MAX_ELEMENTS, Polymatroid, popcount_table


@dataclass(frozen=True)
class MinorSpec:
    delete: int = 0
    contract: int = 0

    def __post_init__(self) -> None:
        if self.delete & self.contract:
            raise ValueError("delete and contract sets must be disjoint")


def kept_elements(n: int, removed: int) -> list[int]:
    return [i for i in range(n) if not removed >> i & 1]


def _expand(kept: list[int]) -> np.ndarray:
    """Map each mask over the kept elements to the original mask."""
    masks = np.arange(1 << len(kept), dtype=np.int64)
    out = np.zeros_like(masks)
    for j, old in enumerate(kept):
        out |= ((masks >> j) & 1) << old
    return out


def _check_mask(p: Polymatroid, X: int) -> None:
    if X < 0 or X >> p.n:
        raise ValueError(f"mask {X} is not a subset of a {p.n}-element ground set")


def delete(p: Polymatroid, X: int) -> Polymatroid:
    _check_mask(p, X)
    if X == 0:
        return p
    kept = kept_elements(p.n, X)
    return Polymatroid.from_array(len(kept), p.array[_expand(kept)], p.k)


def restrict(p: Polymatroid, Y: int) -> Polymatroid:
    return delete(p, p.full & ~Y)


def contract(p: Polymatroid, X: int) -> Polymatroid:
    _check_mask(p, X)
    if X == 0:
        return p
    kept = kept_elements(p.n, X)
    arr = p.array[_expand(kept) | X] - p.rank[X]
    return Polymatroid.from_array(len(kept), arr, p.k)


def minor(p: Polymatroid, spec: MinorSpec) -> Polymatroid:
    """``(p / contract) \\ delete`` with survivors renumbered densely."""
    _check_mask(p, spec.delete | spec.contract)
    removed = spec.delete | spec.contract
    kept = kept_elements(p.n, removed)
    arr = p.array[_expand(kept) | spec.contract] - p.rank[spec.contract]
    return Polymatroid.from_array(len(kept), arr, p.k)


def direct_sum(p1: Polymatroid, p2: Polymatroid) -> Polymatroid:
    n = p1.n + p2.n
    if n > MAX_ELEMENTS:
        raise ValueError(f"direct sum would have {n} > {MAX_ELEMENTS} elements")
    arr = (p2.array[:, None] + p1.array[None, :]).reshape(-1)
    k = None
    if p1.k is not None and p2.k is not None:
        k = max(p1.k, p2.k)
    return Polymatroid.from_array(n, arr, k)


def k_dual(p: Polymatroid, k: int) -> Polymatroid:
    if p.max_singleton > k:
        raise ValueError(f"not a {k}-polymatroid (max singleton rank {p.max_singleton})")
    size = 1 << p.n
    masks = np.arange(size, dtype=np.int64)
    arr = k * popcount_table(p.n) - p.total + p.array[p.full ^ masks]
    return Polymatroid.from_array(p.n, arr, k)


def matroid_dual(m: Polymatroid) -> Polymatroid:
    """The ordinary matroid dual; the 1-dual."""
    return k_dual(m, 1)


def compress(p: Polymatroid, e: int) -> Polymatroid:
    """Compression by ``e``: subtract one on the sets that span ``e``."""
    if not 0 <= e < p.n:
        raise ValueError(f"element {e} not in ground set")
    bit = 1 << e
    if p.r1(e) == 0:
        return delete(p, bit)
    kept = kept_elements(p.n, bit)
    ex = _expand(kept)
    spans = p.array[ex | bit] == p.array[ex]
    return Polymatroid.from_array(len(kept), p.array[ex] - spans, p.k)


def compress_by_extension(p: Polymatroid, e: int) -> Polymatroid:
    """Compression from its definition: freely add a point to ``e``,
    contract that point, delete ``e``."""
    if p.r1(e) == 0:
        return delete(p, 1 << e)
    ext = principal_extension_polymatroid(p, 1 << e, 1)
    x = ext.n - 1
    return minor(ext, MinorSpec(delete=1 << e, contract=1 << x))


def _extend_once(arr: np.ndarray, n: int, X: int) -> np.ndarray:
    masks = np.arange(1 << n, dtype=np.int64)
    spans = arr[masks | X] == arr
    return np.concatenate([arr, arr + (~spans).astype(np.int64)])


def principal_extension_matroid(m: Polymatroid, X: int, count: int = 1) -> Polymatroid:
    """Freely add ``count`` new elements to the set ``X``.

    New elements take the indices ``m.n .. m.n + count - 1``.
    """
    if not m.is_matroid():
        raise ValueError("principal_extension_matroid needs a matroid")
    _check_mask(m, X)
    if count < 0:
        raise ValueError("count must be nonnegative")
    if m.n + count > MAX_ELEMENTS:
        raise ValueError(f"extension would have {m.n + count} > {MAX_ELEMENTS} elements")
    arr = m.array
    n = m.n
    for _ in range(count):
        arr = _extend_once(arr, n, X)
        n += 1
    return Polymatroid.from_array(n, arr, m.k)


def principal_extension_polymatroid(p: Polymatroid, F: int, krank: int) -> Polymatroid:
    """Freely add a new element of rank ``krank`` to ``F``.

    Built in the natural matroid: the group of the new element is freely
    added to the union of the groups of ``F``.  The new element gets index
    ``p.n``.
    """
    from .natural import natural_matroid

    _check_mask(p, F)
    if krank < 0:
        raise ValueError("krank must be nonnegative")
    if p.rank[F] < krank:
        raise ValueError(f"rank(F) = {p.rank[F]} < {krank}")
    if p.n + 1 > MAX_ELEMENTS:
        raise ValueError("extension exceeds the element cap")
    lm = natural_matroid(p)
    XF = lm.group_mask(F)
    big = principal_extension_matroid(lm.matroid, XF, krank)
    groups = list(lm.groups) + [tuple(range(lm.matroid.n, lm.matroid.n + krank))]
    group_masks = [sum(1 << x for x in g) for g in groups]
    n = p.n + 1
    masks = np.arange(1 << n, dtype=np.int64)
    image = np.zeros_like(masks)
    for i, gm in enumerate(group_masks):
        image |= np.where((masks >> i) & 1, gm, 0)
    return Polymatroid.from_array(n, big.array[image], p.k)
