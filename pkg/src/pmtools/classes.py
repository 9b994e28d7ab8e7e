"""Membership in the binary-natural, M(K4)-free-natural and
series-parallel-natural classes of 2-polymatroids, excluded minors,
compression sets, c-minors and decompression search.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .core import Polymatroid, elements_of, is_independent_set
from .minors import (
    BudgetExceeded,
    CanonicalForm,
    Certificate,
    are_isomorphic,
    canonical_form,
    find_mk4_minor,
    find_u24_minor,
    is_binary,
    is_series_parallel,
    has_MK4_minor,
)
from .natural import LabeledMatroid, natural_matroid
from .ops import compress, contract, delete


class ClassId(enum.Enum):
    BINARY_NATURAL = "binary-natural"
    NO_MK4_NATURAL = "no-mk4"
    SP_NATURAL = "sp"

    @classmethod
    def parse(cls, text: str) -> "ClassId":
        for c in cls:
            if text in (c.value, c.name, c.name.lower()):
                return c
        raise ValueError(f"unknown class {text!r}; expected one of {[c.value for c in cls]}")


def _require_2poly(p: Polymatroid) -> None:
    if p.max_singleton > 2:
        raise ValueError(f"expected a 2-polymatroid (max singleton rank {p.max_singleton})")


def _natural_in_class(m: Polymatroid, c: ClassId) -> bool:
    if c is ClassId.BINARY_NATURAL:
        return is_binary(m)
    if c is ClassId.NO_MK4_NATURAL:
        return not has_MK4_minor(m)
    return is_series_parallel(m)


_cache: dict[tuple[ClassId, object], bool] = {}


def _cache_key(p: Polymatroid) -> object:
    if p.n <= 8:
        try:
            return canonical_form(p, budget=20_000)
        except BudgetExceeded:
            pass
    return (p.n, p.rank)


def in_class(p: Polymatroid, c: ClassId, cache: bool = True) -> bool:
    _require_2poly(p)
    if not cache:
        return _natural_in_class(natural_matroid(p).matroid, c)
    key = (c, _cache_key(p))
    hit = _cache.get(key)
    if hit is None:
        hit = _natural_in_class(natural_matroid(p).matroid, c)
        _cache[key] = hit
    return hit


def clear_cache() -> None:
    _cache.clear()


def outside_certificate(p: Polymatroid, c: ClassId) -> Certificate | None:
    """Minor certificate inside the natural matroid showing ``p`` is outside ``c``."""
    m = natural_matroid(p).matroid
    if c is ClassId.BINARY_NATURAL:
        return find_u24_minor(m)
    if c is ClassId.NO_MK4_NATURAL:
        return find_mk4_minor(m)
    return find_u24_minor(m) or find_mk4_minor(m)


@dataclass
class ExcludedMinorReport:
    cls: ClassId
    in_class: bool
    failing_minors: list[str] = field(default_factory=list)
    certificate: Certificate | None = None

    @property
    def is_excluded(self) -> bool:
        return not self.in_class and not self.failing_minors

    def to_json(self) -> dict:
        return {
            "class": self.cls.value,
            "in_class": self.in_class,
            "excluded_minor": self.is_excluded,
            "failing_minors": self.failing_minors,
            "certificate": self.certificate.to_json() if self.certificate else None,
        }


def single_element_minors(p: Polymatroid):
    for e in range(p.n):
        yield f"delete {e}", delete(p, 1 << e)
        yield f"contract {e}", contract(p, 1 << e)


def excluded_minor_report(p: Polymatroid, c: ClassId, with_certificate: bool = True) -> ExcludedMinorReport:
    """One-element deletions and contractions suffice because each class is
    minor-closed."""
    _require_2poly(p)
    inside = in_class(p, c)
    rep = ExcludedMinorReport(c, inside)
    for label, q in single_element_minors(p):
        if not in_class(q, c):
            rep.failing_minors.append(label)
    if not inside and with_certificate:
        rep.certificate = outside_certificate(p, c)
    return rep


def is_excluded_minor(p: Polymatroid, c: ClassId) -> bool:
    return excluded_minor_report(p, c, with_certificate=False).is_excluded


def lines(p: Polymatroid) -> list[int]:
    return [e for e in range(p.n) if p.r1(e) == 2]


def in_R_set(p: Polymatroid, c: ClassId) -> bool:
    """Every compression of an excluded minor by a line lies in ``c``."""
    if not is_excluded_minor(p, c):
        raise ValueError("in_R_set needs an excluded minor for the class")
    return all(in_class(compress(p, e), c) for e in lines(p))


# ---------------------------------------------------------------- c-minors


def c_moves(p: Polymatroid):
    """All one-step c-minors; compressing a loop or point repeats a minor."""
    for e in range(p.n):
        yield delete(p, 1 << e)
        yield contract(p, 1 << e)
        if p.r1(e) == 2:
            yield compress(p, e)


def has_c_minor(host: Polymatroid, pattern: Polymatroid) -> bool:
    """Breadth-first over deletions, contractions and compressions,
    one element at a time, with states merged by canonical form."""
    if pattern.n > host.n:
        return False
    target = canonical_form(pattern)
    level = {canonical_form(host): host}
    while level:
        some = next(iter(level.values()))
        if some.n == pattern.n:
            return target in level
        nxt: dict[CanonicalForm, Polymatroid] = {}
        for q in level.values():
            for r in c_moves(q):
                if r.total < pattern.total:
                    continue
                cf = canonical_form(r)
                if cf not in nxt:
                    nxt[cf] = r
        level = nxt
    return False


def is_excluded_c_minor(p: Polymatroid, c: ClassId) -> bool:
    if in_class(p, c):
        return False
    return all(in_class(q, c) for q in c_moves(p))


# ---------------------------------------------------------------- checks used by the suites


def nullity_inequality(p: Polymatroid) -> bool:
    return sum(p.singleton_ranks) >= p.total + 2


def compression_excluded_iff_outside(p: Polymatroid, c: ClassId) -> bool:
    """For each line ``e`` of an excluded minor, ``compress(p, e)`` is an
    excluded minor exactly when it lies outside ``c``."""
    for e in lines(p):
        q = compress(p, e)
        if is_excluded_minor(q, c) != (not in_class(q, c)):
            return False
    return True


def normalize_certificate(lm: LabeledMatroid, cert: Certificate) -> Certificate:
    """Reassign roles inside each group so contracted members come first,
    then mapped members, then deleted ones.  Group members are clones, so
    the result is still a valid certificate."""
    role: dict[int, tuple] = {}
    for x in elements_of(cert.contract):
        role[x] = ("c",)
    for j, x in enumerate(cert.mapping):
        role[x] = ("m", j)
    for x in elements_of(cert.delete):
        role[x] = ("d",)
    order = {"c": 0, "m": 1, "d": 2}
    for g in lm.groups:
        roles = sorted((role[x] for x in g), key=lambda r: order[r[0]])
        for x, r in zip(g, roles):
            role[x] = r
    contract_mask = sum(1 << x for x, r in role.items() if r[0] == "c")
    delete_mask = sum(1 << x for x, r in role.items() if r[0] == "d")
    mapping = [0] * len(cert.mapping)
    for x, r in role.items():
        if r[0] == "m":
            mapping[r[1]] = x
    return Certificate(contract_mask, delete_mask, tuple(mapping))


def contracts_one_per_line(lm: LabeledMatroid, cert: Certificate) -> bool:
    """Each two-element group meets the contract set once and the delete set
    never; one-element groups are untouched."""
    for g in lm.groups:
        gm = sum(1 << x for x in g)
        want = 1 if len(g) == 2 else 0
        if (cert.contract & gm).bit_count() != want or cert.delete & gm:
            return False
    return True


def mk4_independence_criterion(lm: LabeledMatroid, p: Polymatroid, m_base: Polymatroid) -> bool:
    """``S`` is independent in the natural matroid iff the set of source
    elements whose whole group lies in ``S`` is independent in ``m_base``."""
    r = lm.matroid.rank
    gms = [sum(1 << x for x in g) for g in lm.groups]
    for S in range(1 << lm.matroid.n):
        full = sum(1 << i for i, gm in enumerate(gms) if S & gm == gm and p.r1(i) > 0)
        indep = r[S] == S.bit_count()
        if indep != (m_base.rank[full] == full.bit_count()):
            return False
    return True


def independence_lifts(rho: Polymatroid, g: int) -> bool:
    """Independent sets of ``compress(rho, g)`` whose singleton ranks did not
    drop are independent in ``rho``."""
    q = compress(rho, g)
    kept = [i for i in range(rho.n) if i != g]
    for X in range(1 << q.n):
        old = 0
        same = True
        for j in elements_of(X):
            old |= 1 << kept[j]
            if q.r1(j) != rho.r1(kept[j]):
                same = False
        if same and is_independent_set(q, X) and not is_independent_set(rho, old):
            return False
    return True


# ---------------------------------------------------------------- decompressions


@dataclass
class DecompressionStats:
    nodes: int = 0
    leaves: int = 0
    candidates: int = 0


def _spans_prefix_ok(t: list[int], n: int, X: int, g: int) -> bool:
    """Covering monotonicity and local submodularity at ``X`` and ``X | g``."""
    els = elements_of(X)
    tx = t[X]
    txg = t[X | g]
    if txg < tx:
        return False
    for a, i in enumerate(els):
        bi = 1 << i
        if t[X ^ bi] > tx or t[(X ^ bi) | g] > txg:
            return False
        # pair (i, g) with top X | g
        if txg + t[X ^ bi] > tx + t[(X ^ bi) | g]:
            return False
        for j in els[a + 1:]:
            bj = 1 << j
            Y = X ^ bi ^ bj
            if tx + t[Y] > t[X ^ bi] + t[X ^ bj]:
                return False
            if txg + t[Y | g] > t[(X ^ bi) | g] + t[(X ^ bj) | g]:
                return False
    return True


def decompression_candidates(p: Polymatroid, restriction_test=None, stats: DecompressionStats | None = None):
    """Every 2-polymatroid ``r`` on ``E + g`` (``g`` = index ``n``) with
    ``r({g}) = 2`` and ``compress(r, g) == p``.

    For ``X`` inside ``E`` the step ``d = r(X | g) - r(X)`` fixes both
    entries: ``r(X) = p(X) + [d == 0]``.  Masks are assigned in increasing
    order, so after ``X = 2**j - 1`` the restriction to the first ``j``
    elements plus ``g`` is complete; ``restriction_test`` may reject it.
    """
    n = p.n
    if n + 1 > 16:
        raise ValueError("decompression would exceed the element cap")
    g = 1 << n
    size = 1 << (n + 1)
    t = [0] * size
    pr = p.rank
    stats = stats or DecompressionStats()

    def rec(X: int):
        stats.nodes += 1
        if X == g:
            stats.leaves += 1
            yield Polymatroid(n + 1, tuple(t), 2)
            return
        choices = (2,) if X == 0 else (0, 1, 2)
        for d in choices:
            tx = pr[X] + (d == 0)
            if X.bit_count() == 1 and tx > 2:
                continue
            t[X] = tx
            t[X | g] = tx + d
            if not _spans_prefix_ok(t, n, X, g):
                continue
            nxt = X + 1
            if restriction_test is not None and nxt & X == 0 and 0 < nxt < g:
                j = nxt.bit_length() - 1
                if j < n and not restriction_test(_restriction(t, j, n)):
                    continue
            yield from rec(nxt)

    yield from rec(0)


def _restriction(t: list[int], j: int, n: int) -> Polymatroid:
    """Restriction of a table on ``n + 1`` elements to elements ``0..j-1``
    and ``n``, with ``n`` renumbered to ``j``."""
    g = 1 << n
    half = 1 << j
    return Polymatroid(j + 1, tuple(t[X] for X in range(half)) + tuple(t[X | g] for X in range(half)), 2)


def decompressions(p: Polymatroid, c: ClassId, stats: DecompressionStats | None = None) -> list[Polymatroid]:
    """Excluded minors for ``c`` that compress to ``p`` by a new line, one per
    isomorphism class, sorted by canonical form.  Both the spanning and the
    non-spanning branch are searched."""
    _require_2poly(p)
    stats = stats or DecompressionStats()
    found: dict[CanonicalForm, Polymatroid] = {}
    # proper restrictions of an excluded minor are in the class
    for r in decompression_candidates(p, lambda q: in_class(q, c), stats):
        stats.candidates += 1
        cf = canonical_form(r)
        if cf in found:
            continue
        if is_excluded_minor(r, c):
            found[cf] = r
    return [found[k] for k in sorted(found, key=lambda f: f.bytes)]


def same_classes(ps: list[Polymatroid], qs: list[Polymatroid]) -> bool:
    if len(ps) != len(qs):
        return False
    left = list(qs)
    for p in ps:
        for i, q in enumerate(left):
            if are_isomorphic(p, q):
                del left[i]
                break
        else:
            return False
    return True
