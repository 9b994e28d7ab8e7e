from __future__ import annotations

import pytest

from pmtools.catalog import build, catalog_all, spike_like, uniform
from pmtools.core import Polymatroid
from pmtools.minors import U24, are_isomorphic, find_isomorphism
from pmtools.natural import (
    LabeledMatroid,
    basis_types,
    check_natural_characterization,
    circuit_types,
    dual_pair_check,
    hyperplane_types,
    is_clone_pair,
    k_complement,
    k_natural_closed_form,
    k_natural_matroid,
    natural_matroid,
    natural_of_minor_check,
)


def test_natural_of_l2_is_u24():
    assert are_isomorphic(natural_matroid(build("L2")).matroid, U24)


def test_natural_of_loopless_matroid_is_itself():
    for m in (build("MK4"), uniform(2, 4), uniform(3, 5)):
        assert natural_matroid(m).matroid == m


def test_natural_z3_z22():
    assert are_isomorphic(natural_matroid(build("Z3")).matroid, natural_matroid(build("Z22")).matroid)


def test_z22_grouping_on_natural_of_z3():
    z3 = natural_matroid(build("Z3")).matroid
    z22 = build("Z22")
    own = natural_matroid(z22)
    phi = find_isomorphism(z3, own.matroid)
    groups = tuple(tuple(phi[x] for x in g) for g in own.groups)
    assert check_natural_characterization(LabeledMatroid(z3, groups), z22)


def test_k_natural_examples():
    a4 = build("A4")
    assert k_natural_matroid(a4, 2) == natural_matroid(a4)
    lm = k_natural_matroid(build("L2"), 2)
    r = lm.matroid.rank
    for g in lm.groups[1:]:
        assert r[(1 << g[0]) | (1 << g[1])] == 1  # added point parallel to the original
    m = build("MK4")
    assert k_natural_matroid(m, 1).matroid == m


def test_k_natural_matches_closed_form():
    for nm, p in catalog_all(7):
        assert k_natural_matroid(p, 2) == k_natural_closed_form(p, 2), nm


def test_k_natural_errors():
    with pytest.raises(ValueError):
        k_natural_matroid(build("L2"), 1)
    with pytest.raises(ValueError):
        k_natural_matroid(spike_like(7), 3)


def test_basis_types_examples():
    assert basis_types(natural_matroid(build("L2"))) == {(2, 0, 0), (1, 1, 0), (1, 0, 1), (0, 1, 1)}
    assert basis_types(natural_matroid(build("A4"))) == {(0, 2, 2), (1, 1, 2), (1, 2, 1), (2, 1, 1)}
    assert basis_types(natural_matroid(Polymatroid(1, (0, 1)))) == {(1,)}


def test_circuit_and_hyperplane_types():
    l2 = build("L2")
    assert circuit_types(natural_matroid(l2)) == {(2, 1, 0), (2, 0, 1), (1, 1, 1)}
    extra = circuit_types(k_natural_matroid(l2, 2)) - circuit_types(natural_matroid(l2))
    assert extra == {(0, 0, 2), (0, 2, 0)}
    assert hyperplane_types(natural_matroid(build("A4"))) == {(2, 2, 0), (2, 0, 2), (0, 1, 2), (0, 2, 1), (1, 1, 1)}
    loop = Polymatroid(2, (0, 0, 1, 1))
    assert (1, 0) in circuit_types(LabeledMatroid(loop, ((0,), (1,))))


def test_k_natural_circuit_types_add_unit_vectors():
    for nm, p in catalog_all(6):
        nat = circuit_types(natural_matroid(p))
        extra = {tuple(p.r1(i) + 1 if j == i else 0 for j in range(p.n)) for i in range(p.n) if p.r1(i) < 2}
        assert circuit_types(k_natural_matroid(p, 2)) == nat | extra, nm


def test_clone_pairs():
    u = uniform(2, 4)
    assert all(is_clone_pair(u, a, b) for a in range(4) for b in range(4) if a != b)
    m = build("MK4")
    assert not any(is_clone_pair(m, a, b) for a in range(6) for b in range(6) if a != b)
    lm = natural_matroid(spike_like(3))
    for g in lm.groups:
        assert is_clone_pair(lm.matroid, g[0], g[1])
    with pytest.raises(ValueError):
        is_clone_pair(u, 1, 1)


def test_characterization():
    for nm, p in catalog_all(7):
        assert check_natural_characterization(natural_matroid(p), p), nm
        assert check_natural_characterization(k_natural_matroid(p, 2), p, k=2), nm
    lm = natural_matroid(build("A4"))
    t = list(lm.matroid.rank)
    t[-1] -= 1
    bad = LabeledMatroid(Polymatroid(lm.matroid.n, tuple(t), 1), lm.groups)
    assert not check_natural_characterization(bad, build("A4"))
    with pytest.raises(ValueError):
        check_natural_characterization(lm, build("L2"))


def test_natural_of_minors():
    for nm, p in catalog_all(5):
        if p.n > 6:
            continue
        for e in range(p.n):
            assert natural_of_minor_check(p, e), (nm, e)
            assert natural_of_minor_check(p, e, k=2), (nm, e)
    loop = Polymatroid(2, (0, 0, 2, 2))
    assert natural_of_minor_check(loop, 0)


def test_dual_pairs_and_complements():
    for nm, p in catalog_all(6):
        assert dual_pair_check(p, 2), nm
        from pmtools.ops import k_dual

        comp = {k_complement(t, 2) for t in basis_types(natural_matroid(p))}
        assert comp == basis_types(natural_matroid(k_dual(p, 2))), nm
        assert basis_types(natural_matroid(p)) == basis_types(k_natural_matroid(p, 2)), nm


def test_natural_of_spike_is_tipless_free_spike():
    for n in range(3, 8):
        lm = natural_matroid(spike_like(n))
        m = lm.matroid
        assert m.n == 2 * n and m.total == n
        gm = [(1 << g[0]) | (1 << g[1]) for g in lm.groups]
        for A in range(1, (1 << n) - 1):
            X = sum(gm[i] for i in range(n) if A >> i & 1)
            assert m.rank[X] == A.bit_count() + 1
        for g in gm:
            assert m.rank[g] == 2
