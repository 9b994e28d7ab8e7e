"""Isomorph-free generation of small 2-polymatroids and excluded-minor
search over the generated lists.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import product

from .classes import ClassId, excluded_minor_report, nullity_inequality
from .core import Polymatroid, elements_of, is_connected, validate
from .minors import BudgetExceeded, CanonicalForm, canonical_form

MAX_ENUM_N = 4

FILTER_REASONS = {
    "connected": "an excluded minor is connected",
    "loopless": "an excluded minor has no loops",
    "no_parallel_points": "an excluded minor has no two parallel points",
}


@dataclass(frozen=True)
class GenConfig:
    n: int
    connected: bool = False
    loopless: bool = False
    no_parallel_points: bool = False
    budget: int = 50_000_000

    def __post_init__(self) -> None:
        if not 0 <= self.n <= MAX_ENUM_N:
            raise ValueError(f"enumeration supports n <= {MAX_ENUM_N}")

    @classmethod
    def structural(cls, n: int, budget: int = 50_000_000) -> "GenConfig":
        return cls(n, connected=True, loopless=True, no_parallel_points=True, budget=budget)

    @property
    def filters(self) -> list[str]:
        return [name for name in FILTER_REASONS if getattr(self, name)]


@dataclass
class EnumerationResult:
    config: GenConfig
    polymatroids: list[Polymatroid]
    nodes: int
    complete: bool

    def __len__(self) -> int:
        return len(self.polymatroids)

    def __iter__(self):
        return iter(self.polymatroids)


def rank_tables(n: int, singletons=None, kmax: int | None = 2, sorted_singletons: bool = True,
                budget: int | None = None, counter: list[int] | None = None):
    """Every polymatroid table on ``n`` elements, labeled.

    Masks are filled in increasing order; each entry ranges between the
    largest rank of a one-smaller subset and the smallest submodular bound
    ``r(X-i) + r(X-j) - r(X-i-j)``.  ``singletons`` fixes the singleton
    ranks; otherwise they range over ``0..kmax`` (nondecreasing when
    ``sorted_singletons``).
    """
    size = 1 << n
    t = [0] * size
    counter = counter if counter is not None else [0]

    def rec(X: int):
        counter[0] += 1
        if budget is not None and counter[0] > budget:
            raise BudgetExceeded(f"enumeration of n={n} exceeded {budget} nodes")
        if X == size:
            yield tuple(t)
            return
        els = elements_of(X)
        if len(els) == 1:
            i = els[0]
            if singletons is not None:
                values = [singletons[i]]
            else:
                lo = t[1 << (i - 1)] if sorted_singletons and i > 0 else 0
                values = range(lo, kmax + 1)
        else:
            lo = max(t[X ^ (1 << i)] for i in els)
            hi = min(
                t[X ^ (1 << i)] + t[X ^ (1 << j)] - t[X ^ (1 << i) ^ (1 << j)]
                for a, i in enumerate(els)
                for j in els[a + 1:]
            )
            values = range(lo, hi + 1)
        for v in values:
            t[X] = v
            yield from rec(X + 1)
        t[X] = 0

    yield from rec(1) if size > 1 else iter([tuple(t)])


def _passes_filters(p: Polymatroid, cfg: GenConfig) -> bool:
    if cfg.loopless and 0 in p.singleton_ranks:
        return False
    if cfg.no_parallel_points:
        for i in range(p.n):
            for j in range(i + 1, p.n):
                if p.r1(i) == p.r1(j) == 1 and p.rank[(1 << i) | (1 << j)] == 1:
                    return False
    if cfg.connected and not is_connected(p):
        return False
    return True


def _dedupe(tables, n: int, keep) -> dict[CanonicalForm, Polymatroid]:
    seen: dict[CanonicalForm, Polymatroid] = {}
    for table in tables:
        p = Polymatroid(n, table, 2)
        if not keep(p):
            continue
        cf = canonical_form(p)
        if cf not in seen:
            seen[cf] = Polymatroid(n, tuple(cf.bytes), 2)
    return seen


def enumerate_2polymatroids(cfg: GenConfig) -> EnumerationResult:
    """One representative per isomorphism class, in canonical order.  A
    budget overrun returns what was found with ``complete=False``."""
    counter = [0]
    seen: dict[CanonicalForm, Polymatroid] = {}
    complete = True
    try:
        for table in rank_tables(cfg.n, budget=cfg.budget, counter=counter):
            p = Polymatroid(cfg.n, table, 2)
            if not _passes_filters(p, cfg):
                continue
            cf = canonical_form(p)
            if cf not in seen:
                seen[cf] = Polymatroid(cfg.n, tuple(cf.bytes), 2)
    except BudgetExceeded:
        complete = False
    out = [seen[k] for k in sorted(seen, key=lambda f: f.bytes)]
    return EnumerationResult(cfg, out, counter[0], complete)


def brute_force_2polymatroids(n: int) -> list[Polymatroid]:
    """Every table with singleton entries in ``0..2`` and ``r(X)`` in
    ``0..2|X|``, filtered by the reference axiom check, one per class."""
    masks = list(range(1, 1 << n))
    ranges = [range(3) if X.bit_count() == 1 else range(2 * X.bit_count() + 1) for X in masks]
    seen: dict[CanonicalForm, Polymatroid] = {}
    for values in product(*ranges):
        p = Polymatroid(n, (0,) + values, 2)
        if not validate(p, mode="reference"):
            continue
        cf = canonical_form(p)
        if cf not in seen:
            seen[cf] = Polymatroid(n, tuple(cf.bytes), 2)
    return [seen[k] for k in sorted(seen, key=lambda f: f.bytes)]


def polymatroids_with_singletons(singletons: tuple[int, ...]) -> list[Polymatroid]:
    """All polymatroids with the given singleton ranks, one per class."""
    n = len(singletons)
    k = max(singletons, default=0)
    seen = _dedupe(rank_tables(n, singletons=singletons, kmax=None), n, lambda p: True)
    return [Polymatroid(n, v.rank, k) for _, v in sorted(seen.items(), key=lambda kv: kv[0].bytes)]


def singleton_partitions(total: int, positive: bool = True):
    """Nondecreasing tuples of singleton ranks summing to ``total``."""

    def rec(left: int, lo: int):
        if left == 0:
            yield ()
            return
        for v in range(lo, left + 1):
            for rest in rec(left - v, v):
                yield (v,) + rest

    yield from rec(total, 1 if positive else 0)


@dataclass
class ExcludedMinorSearch:
    cls: ClassId
    n_max: int
    filters: dict[int, list[str]] = field(default_factory=dict)
    found: list[tuple[Polymatroid, dict]] = field(default_factory=list)
    counts: dict[int, int] = field(default_factory=dict)
    complete: bool = True

    @property
    def conditional_on(self) -> list[str]:
        names = sorted({f for fs in self.filters.values() for f in fs})
        return [f"{nm}: {FILTER_REASONS[nm]}" for nm in names]

    def to_json(self) -> dict:
        return {
            "class": self.cls.value,
            "n_max": self.n_max,
            "enumerated_classes": {str(k): v for k, v in sorted(self.counts.items())},
            "filters_by_n": {str(k): v for k, v in sorted(self.filters.items())},
            "complete": self.complete,
            "conditional_on": self.conditional_on,
            "excluded_minors": [
                {"n": p.n, "rank": list(p.rank), "report": rep} for p, rep in self.found
            ],
        }


def find_excluded_minors(c: ClassId, n_max: int, structural_from: int | None = 4,
                         budget: int = 50_000_000) -> ExcludedMinorSearch:
    """Excluded minors for ``c`` with at most ``n_max`` elements.

    Ground-set sizes at or above ``structural_from`` are generated with the
    connected / loopless / no-parallel-points filters, and the result then
    says that completeness is conditional on them.
    """
    if n_max > MAX_ENUM_N:
        raise ValueError(f"n_max must be at most {MAX_ENUM_N}")
    out = ExcludedMinorSearch(c, n_max)
    for n in range(1, n_max + 1):
        if structural_from is not None and n >= structural_from:
            cfg = GenConfig.structural(n, budget)
        else:
            cfg = GenConfig(n, budget=budget)
        res = enumerate_2polymatroids(cfg)
        out.counts[n] = len(res)
        out.filters[n] = cfg.filters
        out.complete &= res.complete
        for p in res:
            rep = excluded_minor_report(p, c)
            if rep.is_excluded:
                data = rep.to_json()
                data["nullity_inequality"] = nullity_inequality(p)
                out.found.append((p, data))
    return out
