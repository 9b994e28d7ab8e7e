from __future__ import annotations

import pytest
from hypothesis import given, settings

from pmtools.catalog import build, catalog_all, rho_A
from pmtools.core import (
    Polymatroid,
    closure,
    components,
    elements_of,
    is_connected,
    is_independent_set,
    mask_of,
    permute,
    relation,
    validate,
)
from pmtools.ops import direct_sum

from conftest import polymatroids


def test_s3_is_valid():
    assert validate(build("S:3"), mode="reference")
    assert validate(build("S:3"), mode="fast")


def test_zero_function_is_valid():
    assert validate(Polymatroid(3, (0,) * 8))


def test_lowered_pair_in_s3_fails_monotonicity():
    t = list(build("S:3").rank)
    t[0b110] = 1
    rep = validate(Polymatroid(3, tuple(t)), mode="reference")
    assert not rep
    assert rep.axiom == "nondecreasing"
    assert rep.witness == (0b010, 0b110)
    assert not validate(Polymatroid(3, tuple(t)), mode="fast")


def test_table_size_mismatch():
    with pytest.raises(ValueError):
        Polymatroid(2, (0, 1, 1))


def test_nonnormalized_and_submodular_failures():
    assert validate(Polymatroid(1, (1, 1))).axiom == "normalized"
    # two points whose union has rank 3
    rep = validate(Polymatroid(2, (0, 1, 1, 3)), mode="reference")
    assert rep.axiom == "submodular"


def test_k_bound():
    p = Polymatroid(1, (0, 3), k=2)
    assert validate(p).axiom == "k-bound"


@settings(max_examples=60, deadline=None)
@given(polymatroids())
def test_fast_and_reference_agree(p):
    assert bool(validate(p, "fast")) == bool(validate(p, "reference"))
    t = list(p.rank)
    if p.n:
        t[p.full] += 1 + sum(p.singleton_ranks)
        q = Polymatroid(p.n, tuple(t))
        assert bool(validate(q, "fast")) == bool(validate(q, "reference"))


def test_closure_examples():
    l2 = build("L2")
    assert closure(l2, 0b001) == 0b111
    loops = Polymatroid(2, (0, 0, 1, 1))
    assert closure(loops, 0) == 0b01
    s3 = build("S:3")
    for i in range(3):
        assert closure(s3, 1 << i) == 1 << i


@settings(max_examples=40, deadline=None)
@given(polymatroids(max_n=4))
def test_closure_is_a_closure_operator(p):
    for X in range(1 << p.n):
        c = closure(p, X)
        assert c & X == X
        assert closure(p, c) == c
        for Y in range(1 << p.n):
            if X & Y == X:
                assert closure(p, Y) & c == c


def test_relations():
    assert relation(build("S:2"), 0, 1) == "parallel"
    assert relation(build("A4"), 1, 2) == "skew"
    assert relation(build("L2"), 1, 0) == ("lies_on", 1, 0)
    assert relation(build("L2"), 0, 2) == ("lies_on", 2, 0)
    with pytest.raises(ValueError):
        relation(build("L2"), 1, 1)


def test_a4_has_exactly_one_skew_pair():
    a4 = build("A4")
    assert [relation(a4, i, j) for i, j in ((0, 1), (0, 2), (1, 2))].count("skew") == 1


def test_b4_lines_skew_and_a3_point_on_one_line():
    assert relation(build("B4"), 2, 3) == "skew"
    a3 = build("A3")
    on = [relation(a3, 2, j) for j in (0, 1)]
    assert on.count(("lies_on", 2, 1)) == 1 and ("lies_on", 2, 0) not in on


def test_independent_sets():
    assert is_independent_set(build("S:2"), 0)
    mk4 = rho_A(0)
    assert is_independent_set(mk4, mask_of([0, 1, 3]))  # a, b, d: not a line
    assert not is_independent_set(mk4, mask_of([0, 1, 2]))
    assert not is_independent_set(build("S:2"), 0b11)


def test_components_examples():
    blocks = components(direct_sum(build("L2"), build("S:2")))
    assert [len(elements_of(b)) for b in blocks] == [3, 2]
    assert len(components(Polymatroid(3, (0,) * 8))) == 3
    for name in ("U24", "L2", "A3", "B3", "A4", "B4", "A5", "A6", "S:5"):
        assert is_connected(build(name)), name


def test_components_of_uniform_matroid_with_no_dependent_pairs():
    # no pair is dependent, yet U(2,3) is connected
    assert is_connected(build("U:2,3"))


@settings(max_examples=40, deadline=None)
@given(polymatroids(max_n=5))
def test_components_follow_permutations(p):
    perm = list(range(p.n))[::-1]
    q = permute(p, perm)
    moved = sorted(sum(1 << perm[i] for i in elements_of(b)) for b in components(p))
    assert moved == sorted(components(q))


def test_catalog_matroids_are_matroids():
    for nm, p in catalog_all(7):
        if p.is_matroid():
            for X in range(1 << p.n):
                assert p.rank[X] <= X.bit_count()
