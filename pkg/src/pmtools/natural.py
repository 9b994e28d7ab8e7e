"""Natural and k-natural matroids of a polymatroid, with their element groups.

Each source element ``e`` of rank ``r(e)`` becomes a group of ``r(e)`` (or
``k``) matroid elements; groups are laid out contiguously in source order.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product

import numpy as np

from .core import MAX_ELEMENTS, Polymatroid, permute, popcount_table
from .ops import contract, delete, k_dual, kept_elements, matroid_dual, principal_extension_matroid


TypeVector = tuple[int, ...]


@dataclass(frozen=True)
class LabeledMatroid:
    matroid: Polymatroid
    groups: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        seen = 0
        for g in self.groups:
            for x in g:
                if seen >> x & 1:
                    raise ValueError(f"element {x} in two groups")
                seen |= 1 << x
        if seen != self.matroid.full:
            raise ValueError("groups do not cover the matroid ground set")

    @property
    def n_groups(self) -> int:
        return len(self.groups)

    def group_mask(self, A: int) -> int:
        """Union of the groups of the source elements in ``A``."""
        m = 0
        for i, g in enumerate(self.groups):
            if A >> i & 1:
                for x in g:
                    m |= 1 << x
        return m

    def representative(self, t: TypeVector) -> int:
        """The subset taking the first ``t[i]`` members of each group."""
        m = 0
        for g, c in zip(self.groups, t):
            for x in g[:c]:
                m |= 1 << x
        return m

    def type_of(self, V: int) -> TypeVector:
        return tuple(sum(V >> x & 1 for x in g) for g in self.groups)

    def types(self):
        return product(*(range(len(g) + 1) for g in self.groups))

    def dual(self) -> "LabeledMatroid":
        return LabeledMatroid(matroid_dual(self.matroid), self.groups)

    def remove(self, removed: int, contract_mask: int = 0) -> "LabeledMatroid":
        """Delete ``removed & ~contract_mask`` and contract ``contract_mask``;
        groups are renumbered and empty groups kept."""
        m = self.matroid
        gone = removed | contract_mask
        out = contract(m, contract_mask) if contract_mask else m
        # contract() already renumbered; delete the rest in the new numbering
        kept_after_c = kept_elements(m.n, contract_mask)
        pos = {old: j for j, old in enumerate(kept_after_c)}
        del_mask = 0
        for old in range(m.n):
            if (removed & ~contract_mask) >> old & 1:
                del_mask |= 1 << pos[old]
        out = delete(out, del_mask)
        survivors = kept_elements(m.n, gone)
        new_index = {old: j for j, old in enumerate(survivors)}
        groups = tuple(tuple(new_index[x] for x in g if x in new_index) for g in self.groups)
        return LabeledMatroid(out, groups)

    def drop_groups(self, A: int) -> "LabeledMatroid":
        """Remove the groups of the source elements in ``A`` entirely."""
        lm = self.remove(self.group_mask(A))
        return LabeledMatroid(lm.matroid, tuple(g for i, g in enumerate(lm.groups) if not A >> i & 1))


def _natural_rank(p: Polymatroid, sizes: list[int]) -> tuple[np.ndarray, tuple[tuple[int, ...], ...]]:
    N = sum(sizes)
    if N > MAX_ELEMENTS:
        raise ValueError(f"natural matroid would have {N} > {MAX_ELEMENTS} elements")
    groups = []
    start = 0
    for s in sizes:
        groups.append(tuple(range(start, start + s)))
        start += s
    gmask = [sum(1 << x for x in g) for g in groups]
    pc = popcount_table(N)
    X = np.arange(1 << N, dtype=np.int64)
    best = pc.copy()
    for A in range(1, 1 << p.n):
        XA = 0
        for i in range(p.n):
            if A >> i & 1:
                XA |= gmask[i]
        np.minimum(best, p.rank[A] + pc[X & ~XA], out=best)
    return best, tuple(groups)


def natural_matroid(p: Polymatroid) -> LabeledMatroid:
    """``r(X) = min over A of rank(A) + |X - X_A|``."""
    arr, groups = _natural_rank(p, list(p.singleton_ranks))
    return LabeledMatroid(Polymatroid.from_array(sum(p.singleton_ranks), arr, 1), groups)


def k_natural_matroid(p: Polymatroid, k: int) -> LabeledMatroid:
    """Pad each group to size ``k`` by free extension into the group."""
    if not p.is_k_polymatroid(k):
        raise ValueError(f"not a {k}-polymatroid")
    if k * p.n > MAX_ELEMENTS:
        raise ValueError(f"k-natural matroid would have {k * p.n} > {MAX_ELEMENTS} elements")
    lm = natural_matroid(p)
    m = lm.matroid
    added: list[list[int]] = []
    for i, g in enumerate(lm.groups):
        pad = k - len(g)
        first = m.n
        m = principal_extension_matroid(m, sum(1 << x for x in g), pad)
        added.append(list(range(first, first + pad)))
    # lay out Y_e = X_e + U_e contiguously
    perm = [0] * m.n
    groups = []
    pos = 0
    for g, extra in zip(lm.groups, added):
        members = list(g) + extra
        for x in members:
            perm[x] = pos
            pos += 1
        groups.append(tuple(range(pos - len(members), pos)))
    return LabeledMatroid(permute(m, perm), tuple(groups))


def k_natural_closed_form(p: Polymatroid, k: int) -> LabeledMatroid:
    """Same matroid from the rank formula with every group of size ``k``."""
    if not p.is_k_polymatroid(k):
        raise ValueError(f"not a {k}-polymatroid")
    arr, groups = _natural_rank(p, [k] * p.n)
    return LabeledMatroid(Polymatroid.from_array(k * p.n, arr, 1), groups)


def basis_types(lm: LabeledMatroid) -> frozenset[TypeVector]:
    r = lm.matroid.rank
    top = lm.matroid.total
    return frozenset(t for t in lm.types() if sum(t) == top and r[lm.representative(t)] == top)


def independent_types(lm: LabeledMatroid) -> frozenset[TypeVector]:
    r = lm.matroid.rank
    return frozenset(t for t in lm.types() if r[lm.representative(t)] == sum(t))


def circuit_types(lm: LabeledMatroid) -> frozenset[TypeVector]:
    indep = independent_types(lm)
    out = set()
    for t in lm.types():
        if t in indep or not any(t):
            continue
        if all(t[:i] + (t[i] - 1,) + t[i + 1:] in indep for i in range(len(t)) if t[i]):
            out.add(t)
    return frozenset(out)


def flat_types(lm: LabeledMatroid) -> frozenset[TypeVector]:
    r = lm.matroid.rank
    out = set()
    for t in lm.types():
        rep = lm.representative(t)
        closed = True
        for i, g in enumerate(lm.groups):
            if t[i] < len(g) and r[rep | (1 << g[t[i]])] == r[rep]:
                closed = False
                break
        if closed:
            out.add(t)
    return frozenset(out)


def hyperplane_types(lm: LabeledMatroid) -> frozenset[TypeVector]:
    r = lm.matroid.rank
    top = lm.matroid.total
    return frozenset(t for t in flat_types(lm) if r[lm.representative(t)] == top - 1)


def k_complement(t: TypeVector, k: int) -> TypeVector:
    return tuple(k - x for x in t)


def swap_table(m: Polymatroid, a: int, b: int) -> np.ndarray:
    masks = np.arange(1 << m.n, dtype=np.int64)
    ba, bb = 1 << a, 1 << b
    has_a = (masks & ba) != 0
    has_b = (masks & bb) != 0
    swapped = (masks & ~(ba | bb)) | np.where(has_a, bb, 0) | np.where(has_b, ba, 0)
    return m.array[swapped]


def is_clone_pair(m: Polymatroid, a: int, b: int) -> bool:
    if a == b:
        raise ValueError("clone test needs two distinct elements")
    return bool(np.array_equal(swap_table(m, a, b), m.array))


def clone_classes(m: Polymatroid) -> list[tuple[int, ...]]:
    """Partition of the ground set into maximal sets of pairwise clones."""
    classes: list[list[int]] = []
    for x in range(m.n):
        for c in classes:
            if is_clone_pair(m, c[0], x):
                c.append(x)
                break
        else:
            classes.append([x])
    return [tuple(c) for c in classes]


def _group_clones(m: Polymatroid, g: tuple[int, ...]) -> bool:
    return all(is_clone_pair(m, g[0], x) for x in g[1:])


def check_natural_characterization(lm: LabeledMatroid, p: Polymatroid, k: int | None = None) -> bool:
    """Groups are clone sets and the union of the groups of ``A`` has rank
    ``rank(A)`` for every ``A``."""
    if lm.n_groups != p.n:
        raise ValueError("group count differs from ground-set size")
    for i, g in enumerate(lm.groups):
        want = k if k is not None else p.r1(i)
        if len(g) != want:
            raise ValueError(f"group {i} has size {len(g)}, expected {want}")
    if not all(_group_clones(lm.matroid, g) for g in lm.groups):
        return False
    r = lm.matroid.rank
    return all(r[lm.group_mask(A)] == p.rank[A] for A in range(1 << p.n))


def natural_of_deletion(lm: LabeledMatroid, e: int) -> LabeledMatroid:
    return lm.drop_groups(1 << e)


def natural_of_contraction(lm: LabeledMatroid, p: Polymatroid, e: int) -> LabeledMatroid:
    """``M / X_e`` restricted to the first ``rank_{/e}(f)`` members of each
    other group."""
    pc = contract(p, 1 << e)
    Xe = lm.group_mask(1 << e)
    keep = 0
    others = [g for i, g in enumerate(lm.groups) if i != e]
    for j, g in enumerate(others):
        for x in g[: pc.r1(j)]:
            keep |= 1 << x
    drop = lm.matroid.full & ~(keep | Xe)
    out = lm.remove(drop, contract_mask=Xe)
    return LabeledMatroid(out.matroid, tuple(g for i, g in enumerate(out.groups) if i != e))


def natural_of_minor_check(p: Polymatroid, e: int, k: int | None = None) -> bool:
    """Check that the natural (or k-natural) matroid commutes with deleting
    and contracting ``e``."""
    if k is None:
        lm = natural_matroid(p)
        ok_del = natural_of_deletion(lm, e) == natural_matroid(delete(p, 1 << e))
        ok_con = natural_of_contraction(lm, p, e) == natural_matroid(contract(p, 1 << e))
        return ok_del and ok_con
    lm = k_natural_matroid(p, k)
    ok_del = natural_of_deletion(lm, e) == k_natural_matroid(delete(p, 1 << e), k)
    Ye = lm.group_mask(1 << e)
    con = lm.remove(0, contract_mask=Ye)
    con = LabeledMatroid(con.matroid, tuple(g for i, g in enumerate(con.groups) if i != e))
    ok_con = con == k_natural_matroid(contract(p, 1 << e), k)
    return ok_del and ok_con


def dual_pair_check(p: Polymatroid, k: int) -> bool:
    """``(M^k_p)* == M^k_{p*}`` with identical group layout."""
    return k_natural_matroid(p, k).dual() == k_natural_matroid(k_dual(p, k), k)
