"""Verification suites: each runs a fixed list of exact checks and reports
pass/fail per check.  Reports are deterministic apart from the single
``timing`` field.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field

from .catalog import (
    RHO_A_REPRESENTATIVES,
    THEOREM_6_1_FIXED,
    build,
    catalog_all,
    mk4,
    rho_A,
    spike_like,
    uniform,
)
from .classes import (
    ClassId,
    contracts_one_per_line,
    decompressions,
    excluded_minor_report,
    has_c_minor,
    in_class,
    in_R_set,
    independence_lifts,
    is_excluded_c_minor,
    is_excluded_minor,
    mk4_independence_criterion,
    normalize_certificate,
    nullity_inequality,
    compression_excluded_iff_outside,
    decompression_candidates,
)
from .core import Polymatroid, validate
from .enumerate import (
    GenConfig,
    brute_force_2polymatroids,
    enumerate_2polymatroids,
    find_excluded_minors,
    polymatroids_with_singletons,
    singleton_partitions,
)
from .minors import (
    MK4,
    U24,
    are_isomorphic,
    canonical_form,
    find_isomorphism,
    is_binary,
    is_series_parallel,
    replay,
)
from .natural import (
    LabeledMatroid,
    basis_types,
    circuit_types,
    hyperplane_types,
    k_complement,
    k_natural_matroid,
    natural_matroid,
)
from .ops import compress, compress_by_extension, contract, delete, k_dual, matroid_dual

REPORT_SCHEMA = "pmtools.verify/1"
MAX_SPIKE = 7

B = ClassId.BINARY_NATURAL
NK4 = ClassId.NO_MK4_NATURAL
SP = ClassId.SP_NATURAL


@dataclass
class Check:
    name: str
    ok: bool
    detail: object = None

    def to_json(self) -> dict:
        return {"name": self.name, "status": "pass" if self.ok else "fail", "detail": self.detail}


@dataclass
class SuiteReport:
    name: str
    checks: list[Check] = field(default_factory=list)
    seconds: float = 0.0
    certificates: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "status": "pass" if self.passed else "fail",
            "checks": [c.to_json() for c in sorted(self.checks, key=lambda c: c.name)],
            "certificates": self.certificates,
        }


def identify(p: Polymatroid, names) -> list[str]:
    return [nm for nm in names if are_isomorphic(p, build(nm))]


def _spikes(lo: int = 2, hi: int = MAX_SPIKE) -> list[str]:
    return [f"S:{n}" for n in range(lo, hi + 1)]


EXCLUDED_BINARY = list(THEOREM_6_1_FIXED) + _spikes()


# ---------------------------------------------------------------- axioms


def _perturbations(count: int, seed: int = 0) -> list[tuple[str, Polymatroid]]:
    """Single-entry changes that break an axiom by construction: an entry
    below a subset's rank, or above the sum of its parts."""
    rng = random.Random(seed)
    members = catalog_all(MAX_SPIKE)
    out = []
    while len(out) < count:
        nm, p = members[rng.randrange(len(members))]
        if p.n == 0:
            continue
        X = rng.randrange(1, 1 << p.n)
        i = rng.choice([j for j in range(p.n) if X >> j & 1])
        table = list(p.rank)
        if len(out) % 2 == 0:
            table[X] = p.rank[X ^ (1 << i)] - 1
            kind = "below subset"
        elif X.bit_count() >= 2:
            table[X] = p.rank[X ^ (1 << i)] + p.r1(i) + 1
            kind = "above parts"
        else:
            continue
        out.append((f"{nm} mask {X} {kind}", Polymatroid(p.n, tuple(table), p.k)))
    return out


def check_catalog_axioms() -> list[Check]:
    members = catalog_all(MAX_SPIKE)
    bad = [nm for nm, p in members if not validate(p, mode="reference")]
    perturbed = _perturbations(100)
    missed = [label for label, q in perturbed if validate(q, mode="reference")]
    return [
        Check("catalog members satisfy the axioms", not bad, {"members": len(members), "failing": bad}),
        Check("perturbed tables are rejected", not missed, {"perturbations": len(perturbed), "accepted": missed}),
    ]


# ---------------------------------------------------------------- natural matroids


def check_z3_z22() -> list[Check]:
    z3, z22 = natural_matroid(build("Z3")), natural_matroid(build("Z22"))
    return [Check("natural matroids of Z3 and Z22 are isomorphic", are_isomorphic(z3.matroid, z22.matroid))]


def check_u24_natural_sources() -> list[Check]:
    """Loopless polymatroids with singleton ranks summing to 4 whose natural
    matroid is U(2,4)."""
    found = []
    for sing in singleton_partitions(4):
        for p in polymatroids_with_singletons(sing):
            if are_isomorphic(natural_matroid(p).matroid, U24):
                found.append(p)
    names = sorted(nm for p in found for nm in identify(p, ["U24", "L2", "S:2"]))
    ok = len(found) == 3 and names == ["L2", "S:2", "U24"]
    return [Check("exactly three polymatroids have natural matroid U(2,4)", ok,
                  {"classes": len(found), "identified": names})]


def check_natural_constructions() -> list[Check]:
    from .natural import check_natural_characterization, k_natural_closed_form, natural_of_minor_check

    members = catalog_all(MAX_SPIKE)
    char_bad = [nm for nm, p in members if not check_natural_characterization(natural_matroid(p), p)]
    kn_bad = [nm for nm, p in members if k_natural_matroid(p, 2) != k_natural_closed_form(p, 2)]
    minor_bad = []
    for nm, p in members:
        if p.n > 7:
            continue
        for e in range(p.n):
            if not natural_of_minor_check(p, e) or not natural_of_minor_check(p, e, k=2):
                minor_bad.append(f"{nm}:{e}")
    return [
        Check("natural matroids satisfy the clone characterization", not char_bad, char_bad),
        Check("2-natural matroid matches its closed form", not kn_bad, kn_bad),
        Check("natural matroids of one-element minors", not minor_bad, minor_bad),
    ]


# ---------------------------------------------------------------- duality

L2_BASIS_TYPES = {(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)}
A4_BASIS_TYPES = {(0, 2, 2), (1, 1, 2), (1, 2, 1), (2, 1, 1)}
L2_CIRCUIT_TYPES = {(2, 1, 0), (2, 0, 1), (1, 1, 1)}
A4_HYPERPLANE_TYPES = {(2, 2, 0), (2, 0, 2), (0, 1, 2), (0, 2, 1), (1, 1, 1)}
L2_EXTRA_2NATURAL_CIRCUIT_TYPES = {(0, 0, 2), (0, 2, 0)}


def check_duality() -> list[Check]:
    members = catalog_all(MAX_SPIKE)
    checks = []
    inv_bad = [nm for nm, p in members if k_dual(k_dual(p, 2), 2) != p]
    checks.append(Check("2-dual is an involution", not inv_bad, inv_bad))
    for src, dst in (("L2", "A4"), ("B3", "A5"), ("U24", "A6")):
        checks.append(Check(f"2-dual of {src} is {dst}", are_isomorphic(k_dual(build(src), 2), build(dst))))
    self_dual = _spikes() + ["A3", "B4"]
    sd_bad = [nm for nm in self_dual if not are_isomorphic(k_dual(build(nm), 2), build(nm))]
    checks.append(Check("S(n), A3, B4 are self-2-dual", not sd_bad, sd_bad))
    spikes_equal = all(k_dual(build(nm), 2) == build(nm) for nm in _spikes())
    checks.append(Check("S(n) equals its 2-dual table", spikes_equal))

    pair_bad, comp_bad, nat_bad = [], [], []
    for nm, p in members:
        d = k_dual(p, 2)
        kp, kd = k_natural_matroid(p, 2), k_natural_matroid(d, 2)
        if kp.dual() != kd:
            pair_bad.append(nm)
        if {k_complement(t, 2) for t in basis_types(kp)} != basis_types(kd):
            comp_bad.append(nm)
        if {k_complement(t, 2) for t in basis_types(natural_matroid(p))} != basis_types(natural_matroid(d)):
            nat_bad.append(nm)
    checks.append(Check("dual of the 2-natural matroid is the 2-natural matroid of the 2-dual", not pair_bad, pair_bad))
    checks.append(Check("2-natural basis types of the 2-dual are 2-complements", not comp_bad, comp_bad))
    checks.append(Check("natural basis types of the 2-dual are 2-complements", not nat_bad, nat_bad))

    l2, a4 = build("L2"), build("A4")
    nl2, na4 = natural_matroid(l2), natural_matroid(a4)
    extra = circuit_types(k_natural_matroid(l2, 2)) - circuit_types(nl2)
    explicit = {
        "L2 basis types": basis_types(nl2) == L2_BASIS_TYPES,
        "A4 basis types": basis_types(na4) == A4_BASIS_TYPES,
        "L2 circuit types": circuit_types(nl2) == L2_CIRCUIT_TYPES,
        "A4 hyperplane types": hyperplane_types(na4) == A4_HYPERPLANE_TYPES,
        "extra circuit types of the 2-natural matroid of L2": extra == L2_EXTRA_2NATURAL_CIRCUIT_TYPES,
        "A4 2-natural equals natural": k_natural_matroid(a4, 2) == na4,
    }
    checks.append(Check("explicit type sets of L2 and A4", all(explicit.values()), explicit))
    return checks


# ---------------------------------------------------------------- compression


def _k2_compression_identity(p: Polymatroid, e: int) -> bool:
    lm = k_natural_matroid(p, 2)
    e1, e2 = lm.groups[e]
    got = lm.remove(1 << e2, contract_mask=1 << e1)
    got = LabeledMatroid(got.matroid, tuple(g for i, g in enumerate(got.groups) if i != e))
    return got == k_natural_matroid(compress(p, e), 2)


def _natural_compression_identity(p: Polymatroid, e: int) -> bool:
    """Contract one member of ``X_e``, delete the rest of ``X_e`` and one
    member of every group whose element spans ``e``."""
    lm = natural_matroid(p)
    ge = lm.groups[e]
    drop = 0
    for x in ge[1:]:
        drop |= 1 << x
    for f, g in enumerate(lm.groups):
        if f != e and g and p.rank[(1 << e) | (1 << f)] == p.r1(f):
            drop |= 1 << g[-1]
    got = lm.remove(drop, contract_mask=1 << ge[0])
    got = LabeledMatroid(got.matroid, tuple(g for i, g in enumerate(got.groups) if i != e))
    return got == natural_matroid(compress(p, e))


def _parallel_line(p: Polymatroid, e: int) -> bool:
    return any(
        f != e and p.r1(f) == 2 and p.rank[(1 << e) | (1 << f)] == 2 for f in range(p.n)
    )


def check_compression() -> list[Check]:
    members = catalog_all(MAX_SPIKE)
    checks = []
    spike_bad = []
    for n in range(2, MAX_SPIKE):
        s = spike_like(n + 1)
        if not all(are_isomorphic(compress(s, e), spike_like(n)) for e in range(n + 1)):
            spike_bad.append(n)
    checks.append(Check("compressing S(n+1) gives S(n)", not spike_bad, spike_bad))

    oracle_bad, k2_bad, nat_bad, comm_bad = [], [], [], []
    for nm, p in members:
        d = k_dual(p, 2)
        for e in range(p.n):
            if compress(p, e) != compress_by_extension(p, e):
                oracle_bad.append(f"{nm}:{e}")
            if p.r1(e) != 2:
                continue
            if not _k2_compression_identity(p, e):
                k2_bad.append(f"{nm}:{e}")
            if not _parallel_line(p, e) and not _natural_compression_identity(p, e):
                nat_bad.append(f"{nm}:{e}")
            if d.r1(e) == 2 and k_dual(compress(p, e), 2) != compress(d, e):
                comm_bad.append(f"{nm}:{e}")
    checks.append(Check("closed-form compression matches extend/contract/delete", not oracle_bad, oracle_bad))
    checks.append(Check("2-natural matroid of a compression by a line", not k2_bad, k2_bad))
    checks.append(Check("natural matroid of a compression by a line with no parallel line", not nat_bad, nat_bad))
    checks.append(Check("compression commutes with 2-duality on lines of dual rank 2", not comm_bad, comm_bad))

    y_bad = []
    for nm in ("A3", "B3", "rhoA:0b000111"):
        p = build(nm)
        for e in range(p.n):
            if p.r1(e) > 0 and not _natural_compression_identity(p, e):
                y_bad.append(f"{nm}:{e}")
    checks.append(Check("natural matroid of a compression with explicit spanning groups", not y_bad, y_bad))
    return checks


# ---------------------------------------------------------------- binary-natural excluded minors


def check_binary_excluded_minors() -> tuple[list[Check], list[dict]]:
    checks, certs = [], []
    not_excluded, bad_certs, r_wrong, comp_bad = [], [], [], []
    for nm in EXCLUDED_BINARY:
        p = build(nm)
        rep = excluded_minor_report(p, B)
        if not rep.is_excluded:
            not_excluded.append({"name": nm, "failing": rep.failing_minors, "in_class": rep.in_class})
        m = natural_matroid(p).matroid
        if rep.certificate is None or not replay(m, U24, rep.certificate):
            bad_certs.append(nm)
        else:
            certs.append({"name": nm, "pattern": "U24", "certificate": rep.certificate.to_json()})
        expect_r = not (nm.startswith("S:") and int(nm[2:]) >= 3)
        if rep.is_excluded and in_R_set(p, B) != expect_r:
            r_wrong.append(nm)
        if rep.is_excluded and not compression_excluded_iff_outside(p, B):
            comp_bad.append(nm)
    checks.append(Check("listed polymatroids are excluded minors for binary-natural", not not_excluded, not_excluded))
    checks.append(Check("U(2,4)-minor certificates replay", not bad_certs, bad_certs))
    checks.append(Check("compression set membership holds exactly off S(n), n >= 3", not r_wrong, r_wrong))
    checks.append(Check("a line compression is an excluded minor iff it is outside the class",
                        not comp_bad, comp_bad))
    return checks, certs


def check_c_minors() -> list[Check]:
    expected = sorted(list(THEOREM_6_1_FIXED) + ["S:2"])
    got = sorted(nm for nm, p in catalog_all(MAX_SPIKE) if is_excluded_c_minor(p, B))
    checks = [Check("excluded c-minors among the catalog", got == expected, {"found": got, "expected": expected})]
    checks.append(Check("S(4) has an S(2) c-minor", has_c_minor(build("S:4"), build("S:2"))))
    return checks


# ---------------------------------------------------------------- enumeration


def check_enumeration() -> list[Check]:
    checks = []
    small = find_excluded_minors(B, 3, structural_from=None)
    names3 = sorted(nm for p, _ in small.found for nm in identify(p, ["S:2", "S:3", "L2", "A3", "A4"]))
    checks.append(Check(
        "binary-natural excluded minors on at most 3 elements",
        len(small.found) == 5 and names3 == sorted(["S:2", "S:3", "L2", "A3", "A4"]),
        {"found": len(small.found), "identified": names3, "counts": small.counts},
    ))
    four = find_excluded_minors(B, 4, structural_from=4)
    new4 = [p for p, _ in four.found if p.n == 4]
    want4 = ["U24", "B3", "S:4", "B4", "A5", "A6"]
    names4 = sorted(nm for p in new4 for nm in identify(p, want4))
    checks.append(Check(
        "binary-natural excluded minors on 4 elements with structural filters",
        len(new4) == 6 and names4 == sorted(want4),
        {"found": len(new4), "identified": names4, "conditional_on": four.conditional_on},
    ))
    unfiltered = find_excluded_minors(B, 4, structural_from=None)
    checks.append(Check(
        "unfiltered 4-element run finds the same excluded minors",
        sorted(canonical_form(p).bytes for p, _ in unfiltered.found)
        == sorted(canonical_form(p).bytes for p, _ in four.found),
        {"found": len(unfiltered.found), "counts": unfiltered.counts},
    ))
    checks.append(Check(
        "excluded minors found satisfy the nullity inequality",
        all(nullity_inequality(p) for p, _ in unfiltered.found),
    ))
    dual_closed = all(
        any(are_isomorphic(k_dual(p, 2), q) for q, _ in unfiltered.found) for p, _ in unfiltered.found
    )
    checks.append(Check("excluded-minor list is closed under 2-duality", dual_closed))
    none_k4 = find_excluded_minors(NK4, 3, structural_from=None)
    checks.append(Check("no M(K4)-free-natural excluded minors on at most 3 elements", not none_k4.found))
    oracle_bad = []
    for n in range(1, 4):
        gen = [p.rank for p in enumerate_2polymatroids(GenConfig(n))]
        brute = [p.rank for p in brute_force_2polymatroids(n)]
        if gen != brute:
            oracle_bad.append(n)
    checks.append(Check("generation agrees with the brute-force filter for n <= 3", not oracle_bad, oracle_bad))
    return checks


# ---------------------------------------------------------------- rho_A


def _mk4_contraction(A: int) -> bool:
    lm = natural_matroid(rho_A(A))
    A1 = 0
    for e in range(6):
        if A >> e & 1:
            A1 |= 1 << lm.groups[e][0]
    return are_isomorphic(contract(lm.matroid, A1), MK4)


def check_rho_a() -> tuple[list[Check], list[dict]]:
    checks, certs = [], []
    classes: dict[bytes, set[int]] = {}
    for A in range(64):
        classes.setdefault(canonical_form(rho_A(A)).bytes, set()).add(A)
    by_size = [0] * 7
    for members in classes.values():
        by_size[next(iter(members)).bit_count()] += 1
    checks.append(Check("64 rho_A fall into 11 classes split 1/1/2/3/2/1/1 by |A|",
                        len(classes) == 11 and by_size == [1, 1, 2, 3, 2, 1, 1],
                        {"classes": len(classes), "by_size": by_size}))
    rep_forms = {canonical_form(rho_A(A)).bytes for A in RHO_A_REPRESENTATIVES.values()}
    checks.append(Check("catalog representatives cover the 11 classes", rep_forms == set(classes)))

    dual_bad = [A for A in range(64) if not are_isomorphic(k_dual(rho_A(A), 2), rho_A(0b111111 ^ A))]
    checks.append(Check("2-dual of rho_A is rho_(E-A)", not dual_bad, dual_bad))
    # the dual of M(K4) is M(K4) only after relabeling by sigma
    sigma = find_isomorphism(MK4, matroid_dual(MK4))
    moved = [A for A in range(64)
             if not are_isomorphic(k_dual(rho_A(A), 2), rho_A(sum(1 << sigma[i] for i in range(6) if not A >> i & 1)))]
    checks.append(Check("2-dual of rho_A is rho_(sigma(E-A)) for the self-duality map sigma of M(K4)",
                        not moved, {"sigma": list(sigma), "failing": moved}))
    dual_classes = {canonical_form(k_dual(rho_A(A), 2)).bytes for A in range(64)}
    checks.append(Check("rho_A classes are closed under 2-duality", dual_classes == set(classes)))
    mk4_bad = [A for A in range(64) if not _mk4_contraction(A)]
    checks.append(Check("contracting one point per line of rho_A gives M(K4)", not mk4_bad, mk4_bad))

    not_ex, not_r, decomp, lemma_bad = [], [], {}, []
    for desc, A in RHO_A_REPRESENTATIVES.items():
        p = rho_A(A)
        rep = excluded_minor_report(p, NK4)
        if not rep.is_excluded:
            not_ex.append(desc)
            continue
        lm = natural_matroid(p)
        cert = normalize_certificate(lm, rep.certificate)
        if not replay(lm.matroid, MK4, cert) or not contracts_one_per_line(lm, cert):
            lemma_bad.append(desc)
        certs.append({"name": f"rhoA:{A:#08b}", "pattern": "MK4", "certificate": cert.to_json()})
        if not in_R_set(p, NK4):
            not_r.append(desc)
        found = decompressions(p, NK4)
        if found:
            decomp[desc] = len(found)
    checks.append(Check("each rho_A class is an excluded minor for M(K4)-free-natural", not not_ex, not_ex))
    checks.append(Check("each rho_A class has all line compressions in the class", not not_r, not_r))
    checks.append(Check("M(K4) certificates contract exactly one point per line", not lemma_bad, lemma_bad))
    checks.append(Check("no rho_A class has an excluded-minor decompression", not decomp, decomp))
    return checks, certs


def check_rho_a_independence() -> list[Check]:
    out = []
    for A in (0, 0b000111):
        p = rho_A(A)
        out.append(Check(f"independent sets of the natural matroid of rhoA:{A:#08b}",
                         mk4_independence_criterion(natural_matroid(p), p, mk4())))
    return out


# ---------------------------------------------------------------- series-parallel


def check_series_parallel() -> list[Check]:
    checks = []
    tested = [(nm, build(nm)) for nm in EXCLUDED_BINARY]
    tested += [(f"rhoA[{d}]", rho_A(A)) for d, A in RHO_A_REPRESENTATIVES.items()]
    not_sp_ex = [nm for nm, p in tested if not is_excluded_minor(p, SP)]
    checks.append(Check("binary-natural and M(K4)-free-natural excluded minors are excluded for SP-natural",
                        not not_sp_ex, not_sp_ex))
    u_bad = [n for n in range(2, MAX_SPIKE + 1)
             if not all(are_isomorphic(contract(spike_like(n), 1 << e), uniform(n - 2, n - 1)) for e in range(n))]
    checks.append(Check("contracting an element of S(n) gives U(n-2,n-1)", not u_bad, u_bad))
    rb = [d for d, A in RHO_A_REPRESENTATIVES.items() if not in_class(rho_A(A), B)]
    checks.append(Check("rho_A is binary-natural", not rb, rb))
    return checks


# ---------------------------------------------------------------- cross-checks


def _corpus_matroids() -> list[tuple[str, Polymatroid]]:
    out = []
    tested = [(nm, build(nm)) for nm in EXCLUDED_BINARY]
    tested += [(f"rhoA[{d}]", rho_A(A)) for d, A in RHO_A_REPRESENTATIVES.items()]
    tested += [(nm, build(nm)) for nm in ("Z3", "Z22", "MK4")]
    for nm, p in tested:
        out.append((nm, natural_matroid(p).matroid))
        for e in range(p.n):
            out.append((f"{nm}\\{e}", natural_matroid(delete(p, 1 << e)).matroid))
            out.append((f"{nm}/{e}", natural_matroid(contract(p, 1 << e)).matroid))
    for n in range(1, 4):
        for i, p in enumerate(enumerate_2polymatroids(GenConfig(n))):
            out.append((f"enum{n}#{i}", natural_matroid(p).matroid))
            if p.is_matroid():
                out.append((f"enum{n}#{i}:matroid", p))
    return out


def check_algorithm_agreement() -> list[Check]:
    bin_bad, sp_bad = [], []
    corpus = _corpus_matroids()
    for nm, m in corpus:
        try:
            is_binary(m, check=True)
        except AssertionError:
            bin_bad.append(nm)
        try:
            is_series_parallel(m, check=True)
        except AssertionError:
            sp_bad.append(nm)
    return [
        Check("binary tests agree", not bin_bad, {"matroids": len(corpus), "disagree": bin_bad}),
        Check("series-parallel tests agree", not sp_bad, {"matroids": len(corpus), "disagree": sp_bad}),
    ]


def check_independence_under_compression() -> list[Check]:
    bad = []
    for nm in ("S:3", "B4", "A4"):
        for r in decompression_candidates(build(nm)):
            if not independence_lifts(r, r.n - 1):
                bad.append(nm)
                break
    return [Check("independent sets lift through compression", not bad, bad)]


# ---------------------------------------------------------------- suites


def _axioms(rep: SuiteReport) -> None:
    rep.checks += check_catalog_axioms()


def _natural(rep: SuiteReport) -> None:
    rep.checks += check_z3_z22() + check_u24_natural_sources() + check_natural_constructions()


def _duality(rep: SuiteReport) -> None:
    rep.checks += check_duality()


def _compression(rep: SuiteReport) -> None:
    rep.checks += check_compression()


def _theorem6(rep: SuiteReport) -> None:
    checks, certs = check_binary_excluded_minors()
    rep.checks += checks + check_c_minors()
    rep.certificates += [c["name"] for c in certs]


def _theorem7(rep: SuiteReport) -> None:
    checks, certs = check_rho_a()
    rep.checks += checks + check_rho_a_independence() + check_independence_under_compression()
    rep.certificates += [c["name"] for c in certs]


def _sp(rep: SuiteReport) -> None:
    rep.checks += check_series_parallel()


def _enumeration(rep: SuiteReport) -> None:
    rep.checks += check_enumeration()


def _crosscheck(rep: SuiteReport) -> None:
    rep.checks += check_algorithm_agreement()


SUITES = {
    "axioms": _axioms,
    "natural": _natural,
    "duality": _duality,
    "compression": _compression,
    "theorem6": _theorem6,
    "theorem7": _theorem7,
    "sp": _sp,
    "enumeration": _enumeration,
    "crosscheck": _crosscheck,
}


def run_suite(name: str) -> SuiteReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {', '.join(SUITES)}")
    rep = SuiteReport(name)
    t0 = time.perf_counter()
    SUITES[name](rep)
    rep.seconds = time.perf_counter() - t0
    return rep


def report_json(reports: list[SuiteReport]) -> dict:
    return {
        "schema": REPORT_SCHEMA,
        "status": "pass" if all(r.passed for r in reports) else "fail",
        "suites": [r.to_json() for r in reports],
        "timing": {r.name: round(r.seconds, 3) for r in reports},
    }
