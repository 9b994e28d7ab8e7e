from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pmtools.catalog import build, catalog_all, rho_A, spike_like, uniform
from pmtools.core import Polymatroid, closure, validate
from pmtools.minors import are_isomorphic
from pmtools.ops import (
    MinorSpec,
    compress,
    compress_by_extension,
    contract,
    delete,
    direct_sum,
    k_dual,
    kept_elements,
    matroid_dual,
    minor,
    principal_extension_matroid,
    principal_extension_polymatroid,
    restrict,
)

from conftest import polymatroids

EMPTY = Polymatroid(0, (0,))


def test_minor_spec_disjoint():
    with pytest.raises(ValueError):
        MinorSpec(delete=0b01, contract=0b01)


def test_delete_examples():
    d = delete(spike_like(3), 0b100)
    assert d.rank == (0, 2, 2, 3)
    p = build("L2")
    assert delete(p, 0) == p
    A = 0b000111
    q = delete(rho_A(A), 1 << 5)
    kept = kept_elements(6, 1 << 5)
    for X in range(1 << 5):
        old = sum(1 << kept[j] for j in range(5) if X >> j & 1)
        assert q.rank[X] == rho_A(A).rank[old]


def test_contract_examples():
    for n in range(3, 8):
        assert are_isomorphic(contract(spike_like(n), 1), uniform(n - 2, n - 1))
    p = build("L2")
    assert contract(p, 0) == p
    # computed, not asserted from prose: the line drops to rank 1 over point b
    c = contract(build("L2"), 0b010)
    assert c.rank == (0, 1, 1, 1)


def test_direct_sum():
    p = build("L2")
    assert direct_sum(p, EMPTY) == p
    q = direct_sum(p, build("S:2"))
    assert q.total == p.total + build("S:2").total
    with pytest.raises(ValueError):
        direct_sum(spike_like(7), uniform(5, 10))


def test_k_dual_examples():
    assert are_isomorphic(k_dual(build("L2"), 2), build("A4"))
    for n in range(2, 8):
        assert k_dual(spike_like(n), 2) == spike_like(n)
    assert k_dual(Polymatroid(1, (0, 2)), 2).rank == (0, 0)
    with pytest.raises(ValueError):
        k_dual(build("L2"), 1)


def test_matroid_dual_of_uniform():
    assert matroid_dual(uniform(2, 4)) == uniform(2, 4)
    assert matroid_dual(uniform(1, 3)) == uniform(2, 3)


@settings(max_examples=60, deadline=None)
@given(polymatroids(max_n=5), st.data())
def test_deletion_contraction_commute(p, data):
    X = data.draw(st.integers(0, p.full))
    Y = data.draw(st.integers(0, p.full)) & ~X
    a = contract(restrict(p, p.full & ~X), _squeeze(Y, p.full & ~X))
    b = delete(contract(p, Y), _squeeze(X, p.full & ~Y))
    assert a == b == minor(p, MinorSpec(delete=X, contract=Y))
    assert validate(a)


def _squeeze(mask: int, within: int) -> int:
    """Renumber ``mask`` inside the kept set ``within``."""
    out, j = 0, 0
    for i in range(within.bit_length()):
        if within >> i & 1:
            if mask >> i & 1:
                out |= 1 << j
            j += 1
    return out


@settings(max_examples=60, deadline=None)
@given(polymatroids(max_n=5, max_singleton=2), st.data())
def test_dual_is_involution_and_swaps_minors(p, data):
    d = k_dual(p, 2)
    assert validate(d)
    assert k_dual(d, 2) == p
    if p.n:
        e = data.draw(st.integers(0, p.n - 1))
        assert k_dual(delete(p, 1 << e), 2) == contract(d, 1 << e)
        assert k_dual(contract(p, 1 << e), 2) == delete(d, 1 << e)


def test_compression_cases():
    loops = Polymatroid(2, (0, 0, 1, 1))
    assert compress(loops, 0) == delete(loops, 1)
    b3 = build("B3")
    assert compress(b3, 1) == contract(b3, 0b10)
    for n in range(2, 7):
        for e in range(n + 1):
            assert are_isomorphic(compress(spike_like(n + 1), e), spike_like(n))


@settings(max_examples=40, deadline=None)
@given(polymatroids(max_n=4, max_singleton=2), st.data())
def test_compression_matches_its_definition(p, data):
    if p.n == 0:
        return
    e = data.draw(st.integers(0, p.n - 1))
    assert compress(p, e) == compress_by_extension(p, e)
    assert validate(compress(p, e))


def test_compression_matches_definition_on_catalog():
    for nm, p in catalog_all(5):
        for e in range(p.n):
            assert compress(p, e) == compress_by_extension(p, e), (nm, e)


def test_principal_extension_matroid():
    u23 = uniform(2, 3)
    assert principal_extension_matroid(u23, 0b111, 0) == u23
    assert principal_extension_matroid(u23, 0b111, 1) == uniform(2, 4)
    mk4 = build("MK4")
    for X in (0b000011, 0b011001, 0b100001):
        ext = principal_extension_matroid(mk4, X, 1)
        flat = closure(mk4, X) | (1 << 6)
        assert closure(ext, flat) == flat
        assert delete(ext, 1 << 6) == mk4


@settings(max_examples=30, deadline=None)
@given(st.data())
def test_principal_extension_order_independent(data):
    m = data.draw(st.sampled_from([uniform(2, 4), build("MK4"), uniform(3, 5)]))
    X = data.draw(st.integers(1, m.full))
    Y = data.draw(st.integers(1, m.full))
    a = principal_extension_matroid(principal_extension_matroid(m, X, 1), Y, 1)
    b = principal_extension_matroid(principal_extension_matroid(m, Y, 1), X, 1)
    # b has the two new elements in the other order
    n = m.n
    swap = list(range(n)) + [n + 1, n]
    from pmtools.core import permute

    assert a == permute(b, swap)


def test_principal_extension_polymatroid():
    s2 = build("S:2")
    loop = principal_extension_polymatroid(s2, 0b11, 0)
    assert loop.r1(2) == 0 and delete(loop, 0b100) == s2
    free = principal_extension_polymatroid(s2, 0b11, 1)
    assert free.r1(2) == 1
    for X in range(4):
        if s2.rank[X] < s2.total:
            assert free.rank[X | 0b100] == s2.rank[X] + 1
    with pytest.raises(ValueError):
        principal_extension_polymatroid(s2, 0, 1)


def test_z3_from_z22_by_extension():
    z22 = build("Z22")
    ext = principal_extension_polymatroid(z22, 0b1100, 2)
    assert are_isomorphic(delete(ext, 0b1100), build("Z3"))


def test_compression_commutes_with_dual_on_lines():
    for nm, p in catalog_all(6):
        d = k_dual(p, 2)
        for e in range(p.n):
            if p.r1(e) == 2 == d.r1(e):
                assert k_dual(compress(p, e), 2) == compress(d, e), (nm, e)
