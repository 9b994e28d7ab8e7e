from __future__ import annotations

import random

import pytest
from hypothesis import given, settings

from pmtools.catalog import build, catalog_all, mk4, rho_A, spike_like, uniform
from pmtools.core import permute
from pmtools.minors import (
    MK4,
    U24,
    BudgetExceeded,
    Certificate,
    are_isomorphic,
    binary_representation,
    canonical_form,
    find_isomorphism,
    find_minor,
    has_minor,
    has_MK4_minor,
    is_binary,
    is_binary_by_representation,
    is_series_parallel,
    is_series_parallel_by_exclusion,
    is_series_parallel_by_reduction,
    replay,
)
from pmtools.natural import natural_matroid
from pmtools.ops import contract, delete, k_dual, principal_extension_matroid

from conftest import polymatroids


def test_canonical_form_examples():
    s3 = build("S:3")
    assert canonical_form(s3) == canonical_form(permute(s3, [2, 0, 1]))
    assert canonical_form(build("Z3")) != canonical_form(build("Z22"))
    assert len({canonical_form(rho_A(A)) for A in range(64)}) == 11


def test_canonical_form_random_permutations():
    rng = random.Random(1)
    members = [p for nm, p in catalog_all(7)]
    for _ in range(200):
        p = rng.choice(members)
        perm = list(range(p.n))
        rng.shuffle(perm)
        assert canonical_form(p) == canonical_form(permute(p, perm))
    # rho_A with A empty is M(K4) itself
    forms = [canonical_form(p) for nm, p in catalog_all(7) if nm != "rhoA[|A|=0]"]
    assert len(set(forms)) == len(forms)


def test_canonical_form_budget():
    with pytest.raises(BudgetExceeded):
        canonical_form(natural_matroid(spike_like(7)).matroid, budget=10)


@settings(max_examples=40, deadline=None)
@given(polymatroids(max_n=5))
def test_isomorphic_iff_same_canonical_form(p):
    perm = list(range(p.n))[::-1]
    q = permute(p, perm)
    assert are_isomorphic(p, q)
    phi = find_isomorphism(p, q)
    assert all(p.rank[sum(1 << phi[j] for j in range(p.n) if S >> j & 1)] == q.rank[S] for S in range(1 << p.n))


def test_isomorphism_examples():
    assert are_isomorphic(k_dual(build("B3"), 2), build("A5"))
    assert are_isomorphic(k_dual(build("U24"), 2), build("A6"))
    assert not are_isomorphic(build("L2"), U24)


def test_minor_examples():
    assert not has_minor(build("S:4"), build("S:3"))
    p = build("A4")
    cert = find_minor(p, p)
    assert cert.contract == 0 and cert.delete == 0
    assert has_minor(natural_matroid(build("S:2")).matroid, U24)


def test_certificates_replay_and_serialize():
    host = natural_matroid(rho_A(0b000111)).matroid
    cert = find_minor(host, MK4)
    assert replay(host, MK4, cert)
    again = Certificate.from_json(cert.to_json())
    assert again == cert
    broken = Certificate(cert.contract, cert.delete, tuple(reversed(cert.mapping)))
    assert not replay(host, MK4, broken)


def test_minors_persist_under_extension():
    for nm, p in catalog_all(5):
        m = natural_matroid(p).matroid
        if m.n > 11 or not has_minor(m, U24):
            continue
        for X in (m.full, 1, m.full >> 1):
            assert has_minor(principal_extension_matroid(m, X, 1), U24), nm


def test_binary_examples():
    assert is_binary(mk4(), check=True)
    assert not is_binary(U24, check=True)
    for n in range(3, 7):
        m = natural_matroid(delete(spike_like(n), 1)).matroid
        assert is_binary(m, check=True)
    with pytest.raises(ValueError):
        is_binary(build("L2"))


def test_binary_representation_shape():
    basis, cols = binary_representation(mk4())
    assert len(basis) == 3 and len(cols) == 6
    assert is_binary_by_representation(mk4())


def test_mk4_examples():
    assert has_MK4_minor(mk4())
    for A in (0, 0b000111, 0b111111):
        assert has_MK4_minor(natural_matroid(rho_A(A)).matroid)
    for r, n in ((2, 4), (3, 6), (2, 6), (4, 7)):
        assert not has_MK4_minor(uniform(r, n))


def test_series_parallel_examples():
    assert is_series_parallel(uniform(2, 3), check=True)
    assert not is_series_parallel(mk4(), check=True)
    for A in range(0, 64, 7):
        assert not is_series_parallel(natural_matroid(rho_A(A)).matroid, check=True)
    assert is_series_parallel_by_reduction(uniform(0, 3))
    assert not is_series_parallel_by_exclusion(U24)


def test_algorithms_agree_on_catalog():
    for nm, p in catalog_all(7):
        m = natural_matroid(p).matroid
        is_binary(m, check=True)
        is_series_parallel(m, check=True)
        for e in range(p.n):
            is_series_parallel(natural_matroid(contract(p, 1 << e)).matroid, check=True)
