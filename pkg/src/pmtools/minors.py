"""Isomorphism, canonical forms, minor search with replayable certificates,
and the binary / M(K4) / series-parallel tests for matroids.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from collections import Counter
from itertools import combinations

import numpy as np

from .catalog import mk4, uniform
from .core import Polymatroid, components, elements_of
from .ops import MinorSpec, contract, delete, matroid_dual, minor, restrict
from .natural import clone_classes


class BudgetExceeded(RuntimeError):
    pass


# ---------------------------------------------------------------- canonical form


@dataclass(frozen=True)
class CanonicalForm:
    bytes: bytes
    invariant_key: tuple
    labeling: tuple[int, ...] = field(compare=False, default=())

    def __hash__(self) -> int:
        return hash(self.bytes)

    def __eq__(self, other) -> bool:
        return isinstance(other, CanonicalForm) and self.bytes == other.bytes


def invariant_key(p: Polymatroid) -> tuple:
    pairs = sorted(p.rank[(1 << i) | (1 << j)] for i, j in combinations(range(p.n), 2))
    return (p.n, tuple(sorted(p.singleton_ranks)), tuple(pairs))


def _element_invariants(p: Polymatroid) -> list[tuple]:
    out = []
    for i in range(p.n):
        pairs = sorted(
            (p.r1(j), p.rank[(1 << i) | (1 << j)]) for j in range(p.n) if j != i
        )
        out.append((p.r1(i), p.total - p.rank[p.full ^ (1 << i)], tuple(pairs)))
    return out


def canonical_form(p: Polymatroid, budget: int = 2_000_000) -> CanonicalForm:
    """Lexicographically least rank table over all relabelings that list
    elements in increasing invariant order.

    Masks below ``2**j`` only involve the first ``j`` positions, so the table
    prefix is fixed one position at a time and only branches tying the best
    prefix survive.  ``budget`` bounds the number of partial labelings kept.
    """
    n = p.n
    inv = _element_invariants(p)
    order = sorted(range(n), key=lambda i: inv[i])
    slots = [inv[i] for i in order]
    # clones are interchangeable: try one unused member per clone class
    cls_id = [0] * n
    for c, members in enumerate(clone_classes(p)):
        for x in members:
            cls_id[x] = c
    rank = p.rank
    # frontier entries: (used_mask, images) with images[S] = host mask of S
    frontier: list[tuple[int, list[int]]] = [(0, [0])]
    prefix = [0]
    work = 0
    for pos in range(n):
        best: list[int] | None = None
        nxt: list[tuple[int, list[int]]] = []
        for used, images in frontier:
            tried = set()
            for x in range(n):
                if used >> x & 1 or inv[x] != slots[pos] or cls_id[x] in tried:
                    continue
                tried.add(cls_id[x])
                xb = 1 << x
                block = [rank[im | xb] for im in images]
                work += len(block)
                if best is None or block < best:
                    best = block
                    nxt = [(used | xb, images + [im | xb for im in images])]
                elif block == best:
                    nxt.append((used | xb, images + [im | xb for im in images]))
            if len(nxt) > budget or work > 50 * budget:
                raise BudgetExceeded(f"canonical form of n={n} exceeded budget")
        prefix.extend(best or [])
        frontier = nxt
    labeling = tuple(elements_of(0))
    if frontier:
        # recover the position -> element order from the first surviving branch
        images = frontier[0][1]
        labeling = tuple((images[1 << j]).bit_length() - 1 for j in range(n))
    return CanonicalForm(bytes(prefix) if max(prefix, default=0) < 256 else repr(prefix).encode(),
                         invariant_key(p), labeling)


def canonical_polymatroid(p: Polymatroid) -> Polymatroid:
    cf = canonical_form(p)
    if max(p.rank, default=0) < 256:
        return Polymatroid(p.n, tuple(cf.bytes), p.k)
    return Polymatroid(p.n, tuple(eval(cf.bytes.decode())), p.k)


# ---------------------------------------------------------------- embedding


def _embed(host: Polymatroid, C: int, candidates: int, pattern: Polymatroid,
           sing_host: list[int] | None = None) -> list[int] | None:
    """Find host elements ``phi[0..m-1]`` inside ``candidates`` with
    ``rank(phi(S) | C) - rank(C) == pattern(S)`` for every ``S``."""
    m = pattern.n
    hr = host.rank
    pr = pattern.rank
    base = hr[C]
    cand = elements_of(candidates)
    if sing_host is None:
        sing_host = [hr[C | (1 << x)] - base for x in range(host.n)]
    by_rank: dict[int, list[int]] = {}
    for x in cand:
        by_rank.setdefault(sing_host[x], []).append(x)
    phi: list[int] = []
    images = [C]

    def rec(k: int, used: int) -> bool:
        if k == m:
            return True
        want = pr[1 << k]
        kb = 1 << k
        for x in by_rank.get(want, ()):
            if used >> x & 1:
                continue
            xb = 1 << x
            ok = True
            for S, im in enumerate(images):
                if hr[im | xb] - base != pr[S | kb]:
                    ok = False
                    break
            if ok:
                phi.append(x)
                old = len(images)
                images.extend(im | xb for im in images[:old])
                if rec(k + 1, used | xb):
                    return True
                del images[old:]
                phi.pop()
        return False

    if rec(0, 0):
        return list(phi)
    return None


def find_isomorphism(p: Polymatroid, q: Polymatroid) -> list[int] | None:
    """``phi`` with ``p.rank[phi(S)] == q.rank[S]``; ``phi[j]`` is the element
    of ``p`` playing element ``j`` of ``q``."""
    if p.n != q.n or p.total != q.total or invariant_key(p) != invariant_key(q):
        return None
    return _embed(p, 0, p.full, q)


def are_isomorphic(p: Polymatroid, q: Polymatroid) -> bool:
    return find_isomorphism(p, q) is not None


# ---------------------------------------------------------------- minors


@dataclass(frozen=True)
class Certificate:
    """Contract, then delete, then read element ``mapping[j]`` of the host as
    element ``j`` of the pattern."""

    contract: int
    delete: int
    mapping: tuple[int, ...]

    def to_json(self) -> dict:
        return {
            "contract": elements_of(self.contract),
            "delete": elements_of(self.delete),
            "map": {str(h): j for j, h in enumerate(self.mapping)},
        }

    @classmethod
    def from_json(cls, d: dict) -> "Certificate":
        mapping = [0] * len(d["map"])
        for h, j in d["map"].items():
            mapping[j] = int(h)
        return cls(sum(1 << x for x in d["contract"]), sum(1 << x for x in d["delete"]), tuple(mapping))


def replay(host: Polymatroid, pattern: Polymatroid, cert: Certificate) -> bool:
    """Apply the certificate to the host and compare with the pattern."""
    if cert.contract & cert.delete:
        return False
    used = 0
    for h in cert.mapping:
        used |= 1 << h
    if used & (cert.contract | cert.delete) or (used | cert.contract | cert.delete) != host.full:
        return False
    if len(cert.mapping) != pattern.n:
        return False
    got = minor(host, MinorSpec(delete=cert.delete, contract=cert.contract))
    survivors = [i for i in range(host.n) if not (cert.contract | cert.delete) >> i & 1]
    pos = {old: j for j, old in enumerate(survivors)}
    for S in range(1 << pattern.n):
        img = 0
        for j in range(pattern.n):
            if S >> j & 1:
                img |= 1 << pos[cert.mapping[j]]
        if got.rank[img] != pattern.rank[S]:
            return False
    return True


def _typed_subsets(classes: list[tuple[int, ...]], size: int):
    """One subset per multiset of per-class counts summing to ``size``; clone
    classes make the choice of members within a class irrelevant."""
    caps = [len(c) for c in classes]

    def rec(i: int, left: int):
        if i == len(caps):
            if left == 0:
                yield ()
            return
        for c in range(min(caps[i], left), -1, -1):
            for rest in rec(i + 1, left - c):
                yield (c,) + rest

    for counts in rec(0, size):
        m = 0
        for cls, c in zip(classes, counts):
            for x in cls[:c]:
                m |= 1 << x
        yield m


def find_minor(host: Polymatroid, pattern: Polymatroid, use_clones: bool = True) -> Certificate | None:
    """Search for ``pattern`` as a minor of ``host``, contraction sets first.

    For matroid hosts the contraction set may be taken independent with
    exactly ``r(host) - r(pattern)`` elements.  Contraction sets are drawn
    one per clone-type, since clones give isomorphic minors.
    """
    n, m = host.n, pattern.n
    if m > n:
        return None
    classes = clone_classes(host) if use_clones else [(x,) for x in range(n)]
    hr = host.rank
    target = pattern.total
    psing = sorted(pattern.singleton_ranks)
    matroid = host.is_matroid() and pattern.is_matroid()
    if matroid:
        sizes = [host.total - target] if 0 <= host.total - target <= n - m else []
    else:
        sizes = list(range(0, n - m + 1))
    for size in sizes:
        for C in _typed_subsets(classes, size):
            if matroid and hr[C] != size:
                continue
            if hr[host.full] - hr[C] < target:
                continue
            base = hr[C]
            free = host.full & ~C
            sing = [hr[C | (1 << x)] - base for x in range(n)]
            avail = sorted(sing[x] for x in elements_of(free))
            if not _multiset_covers(avail, psing):
                continue
            phi = _embed(host, C, free, pattern, sing)
            if phi is not None:
                used = sum(1 << x for x in phi)
                cert = Certificate(C, free & ~used, tuple(phi))
                if not replay(host, pattern, cert):
                    raise AssertionError("minor certificate failed to replay")
                return cert
    return None


def _multiset_covers(avail: list[int], need: list[int]) -> bool:
    a, b = Counter(avail), Counter(need)
    return all(a[v] >= c for v, c in b.items())


def has_minor(host: Polymatroid, pattern: Polymatroid) -> bool:
    return find_minor(host, pattern) is not None


# ---------------------------------------------------------------- binary


def _require_matroid(m: Polymatroid) -> None:
    if not m.is_matroid():
        raise ValueError("expected a matroid (all singleton ranks <= 1)")


def binary_representation(m: Polymatroid) -> tuple[list[int], list[int]]:
    """Columns of the fundamental-circuit matrix for a greedy basis.

    Returns ``(basis, columns)``; ``columns[e]`` is a bitmask over basis
    positions.
    """
    _require_matroid(m)
    r = m.rank
    basis: list[int] = []
    B = 0
    for e in range(m.n):
        if r[B | (1 << e)] > r[B]:
            basis.append(e)
            B |= 1 << e
    cols = [0] * m.n
    for pos, b in enumerate(basis):
        cols[b] = 1 << pos
    for e in range(m.n):
        if B >> e & 1 or r[1 << e] == 0:
            continue
        col = 0
        for pos, b in enumerate(basis):
            if r[(B & ~(1 << b)) | (1 << e)] == len(basis):
                col |= 1 << pos
        cols[e] = col
    return basis, cols


def gf2_rank_table(n: int, cols: list[int], width: int) -> np.ndarray:
    """GF(2) rank of every subset of the columns, by Gaussian elimination
    run in parallel over all masks."""
    masks = np.arange(1 << n, dtype=np.int64)
    V = np.zeros((1 << n, max(n, 1)), dtype=np.int64)
    for j in range(n):
        V[:, j] = np.where((masks >> j) & 1, cols[j], 0)
    rank = np.zeros(1 << n, dtype=np.int64)
    rows = np.arange(1 << n)
    for bit in range(width):
        has = ((V >> bit) & 1).astype(bool)
        anyp = has.any(axis=1)
        piv = has.argmax(axis=1)
        pivrow = V[rows, piv]
        V = np.where(has, V ^ pivrow[:, None], V)
        rank += anyp
    return rank


def is_binary_by_representation(m: Polymatroid) -> bool:
    basis, cols = binary_representation(m)
    return bool(np.array_equal(gf2_rank_table(m.n, cols, len(basis)), m.array))


U24 = uniform(2, 4)


def find_u24_minor(m: Polymatroid) -> Certificate | None:
    _require_matroid(m)
    return find_minor(m, U24)


def is_binary(m: Polymatroid, check: bool = False) -> bool:
    """Binary test by GF(2) representation; ``check=True`` also runs the
    U(2,4)-minor search and raises if the two disagree."""
    _require_matroid(m)
    rep = is_binary_by_representation(m)
    if check:
        by_minor = find_u24_minor(m) is None
        if by_minor != rep:
            raise AssertionError(f"binary tests disagree: representation={rep}, minor search={by_minor}")
    return rep


# ---------------------------------------------------------------- M(K4), series-parallel


MK4 = mk4()


def find_mk4_minor(m: Polymatroid) -> Certificate | None:
    _require_matroid(m)
    return find_minor(m, MK4)


def has_MK4_minor(m: Polymatroid) -> bool:
    return find_mk4_minor(m) is not None


def _reduces_to_single(m: Polymatroid) -> bool:
    """Series/parallel reduction of a connected matroid."""
    while m.n > 1:
        r = m.rank
        step = None
        for i in range(m.n):
            for j in range(i + 1, m.n):
                if r[(1 << i) | (1 << j)] == 1 and r[1 << i] == 1 and r[1 << j] == 1:
                    step = ("delete", j)
                    break
            if step:
                break
        if step is None:
            d = matroid_dual(m).rank
            for i in range(m.n):
                for j in range(i + 1, m.n):
                    if d[(1 << i) | (1 << j)] == 1 and d[1 << i] == 1 and d[1 << j] == 1:
                        step = ("contract", j)
                        break
                if step:
                    break
        if step is None:
            return False
        op, x = step
        m = delete(m, 1 << x) if op == "delete" else contract(m, 1 << x)
    return True


def is_series_parallel_by_reduction(m: Polymatroid) -> bool:
    _require_matroid(m)
    loops = sum(1 << i for i in range(m.n) if m.r1(i) == 0)
    m = delete(m, loops)
    return all(_reduces_to_single(restrict(m, block)) for block in components(m))


def is_series_parallel_by_exclusion(m: Polymatroid) -> bool:
    _require_matroid(m)
    return is_binary(m) and not has_MK4_minor(m)


def is_series_parallel(m: Polymatroid, check: bool = False) -> bool:
    red = is_series_parallel_by_reduction(m)
    if check:
        exc = is_series_parallel_by_exclusion(m)
        if exc != red:
            raise AssertionError(f"series-parallel tests disagree: reduction={red}, exclusion={exc}")
    return red
