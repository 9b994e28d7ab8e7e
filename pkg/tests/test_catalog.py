from __future__ import annotations

import pytest

from pmtools.catalog import (
    RHO_A_REPRESENTATIVES,
    CatalogName,
    build,
    catalog_all,
    mk4,
    parse_name,
    rho_A,
    spike_like,
)
from pmtools.core import is_connected, relation, validate
from pmtools.minors import are_isomorphic, canonical_form
from pmtools.natural import natural_matroid


def test_parse_names():
    assert parse_name("A4") == CatalogName("A4")
    assert parse_name("S:5") == CatalogName("S", (5,))
    assert parse_name("U:2,4") == CatalogName("U", (2, 4))
    assert parse_name("rhoA:0b101100") == CatalogName("RHO_A", (0b101100,))
    assert parse_name("rhoA:44") == CatalogName("RHO_A", (44,))
    with pytest.raises(ValueError):
        parse_name("Q7")


def test_bad_parameters():
    with pytest.raises(ValueError):
        build("S:1")
    with pytest.raises(ValueError):
        rho_A(64)
    with pytest.raises(ValueError):
        catalog_all(1)


def test_spike_s2():
    # |X| = n on the full set, so the two lines are parallel
    assert build("S:2").rank == (0, 2, 2, 2)
    assert build("S:3").rank == (0, 2, 2, 3, 2, 3, 3, 3)


def test_rho_empty_is_mk4():
    assert rho_A(0) == mk4()
    for A in range(64):
        assert rho_A(A).total == 3 + A.bit_count()


def test_a5_shape():
    a5 = build("A5")
    assert a5.singleton_ranks == (2, 2, 2, 1) and a5.total == 5
    for i, j in ((0, 1), (0, 2), (1, 2)):
        assert relation(a5, i, j) == "skew"
        assert a5.rank[(1 << i) | (1 << j) | 0b1000] == 4


def test_b3_shape():
    b3 = build("B3")
    assert b3.singleton_ranks == (2, 1, 1, 1) and b3.total == 3
    assert b3.rank[0b1110] == 2
    for i in (1, 2, 3):
        assert b3.rank[1 | (1 << i)] == 3


def test_catalog_is_valid_and_connected():
    members = catalog_all(7)
    for nm, p in members:
        assert validate(p, mode="reference"), nm
    for nm in ("U24", "L2", "A3", "B3", "A4", "B4", "A5", "A6"):
        assert is_connected(build(nm))
    forms = [canonical_form(p) for nm, p in members if nm.startswith("rhoA")]
    assert len(set(forms)) == 11
    spikes = [p for nm, p in members if nm.startswith("S:")]
    assert len({p.n for p in spikes}) == len(spikes)


def test_rho_a_representatives_cover_classes():
    forms = {canonical_form(rho_A(A)) for A in range(64)}
    assert {canonical_form(rho_A(A)) for A in RHO_A_REPRESENTATIVES.values()} == forms


def test_z3_z22_natural_matroids_agree():
    assert are_isomorphic(natural_matroid(build("Z3")).matroid, natural_matroid(build("Z22")).matroid)
    assert not are_isomorphic(build("Z3"), build("Z22"))


def test_spike_family():
    for n in range(2, 8):
        s = spike_like(n)
        assert s.n == n and s.total == n and set(s.singleton_ranks) == {2}
