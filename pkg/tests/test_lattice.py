import itertools
import json
import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from burnside.groups import GroupError, fixed_point_count, parse_group_spec
from burnside.lattice import (BurnsideElement, LatticeMismatch, build_lattice, invert_marks,
                              mark_vector, normalized_basis)

from conftest import CORPUS, lattice


def test_sigma3_order_and_labels():
    L = lattice("symmetric:3")
    assert [L.order_of(i) for i in range(len(L))] == [1, 2, 3, 6]
    assert L.labels == ("c0_o1", "c1_o2", "c2_o3", "c3_o6")
    assert L.resolve("trivial") == 0 and L.resolve("full") == 3
    assert L.resolve("c2_o3") == 2
    with pytest.raises(GroupError):
        L.resolve("c9_o1")


def test_cyclic4_chain():
    L = lattice("cyclic:4")
    assert [L.order_of(i) for i in range(3)] == [1, 2, 4]
    assert [L.marks[i, i] for i in range(3)] == [4, 2, 1]


def test_dihedral4_order_respects_subconjugacy():
    L = lattice("dihedral:4")
    order4 = [i for i in range(len(L)) if L.order_of(i) == 4]
    assert len(order4) == 3
    assert all(i < len(L) - 1 for i in order4)
    for i, j in itertools.product(range(len(L)), repeat=2):
        if i != j and L.subconjugacy[i][j]:
            assert i < j


def test_sigma3_table_of_marks():
    assert lattice("symmetric:3").marks.entries == ((6, 0, 0, 0), (3, 1, 0, 0), (2, 0, 2, 0),
                                                     (1, 1, 1, 1))
    assert lattice("cyclic:2").marks.entries == ((2, 0), (1, 1))


@pytest.mark.parametrize("spec", ["symmetric:4", "dihedral:6", "quaternion:8", "alternating:4"])
def test_marks_against_coset_oracle(spec):
    L = lattice(spec)
    G = L.group
    t = G.table
    for h, k in itertools.product(range(len(L)), repeat=2):
        H, K = L.rep(h), L.rep(k)
        # cosets gH as frozensets, fixed by every element of K
        cosets = {frozenset(t[g][x] for x in H.members) for g in range(G.order)}
        fixed = sum(1 for c in cosets
                    if all(frozenset(t[y][x] for x in c) == c for y in K.members))
        assert L.marks[h, k] == fixed
        assert L.subconjugacy[k][h] == (fixed_point_count(G, K, H) > 0)


def test_mark_vector_examples():
    L = lattice("symmetric:3")
    assert mark_vector(L.basis(1)).values == (3, 1, 0, 0)
    assert mark_vector(L.one()).values == (1, 1, 1, 1)
    x = 2 * L.basis(0) - L.basis(3)
    assert mark_vector(x).values == (11, -1, -1, -1)


def test_invert_marks_examples():
    L = lattice("symmetric:3")
    c, ok = invert_marks(L.ghost([6, 0, 0, 0]))
    assert ok and c == [1, 0, 0, 0]
    c, ok = invert_marks(L.ghost([1, 1, 1, 1]))
    assert ok and c == [0, 0, 0, 1]
    c, ok = invert_marks(L.ghost([1, 0, 0, 0]))
    assert not ok and c == [Fraction(1, 6), 0, 0, 0]


@pytest.mark.parametrize("spec", CORPUS)
def test_invert_marks_round_trip(spec):
    L = lattice(spec)
    rng = random.Random(spec)
    for _ in range(20):
        x = L.element({k: rng.randint(-9, 9) for k in rng.sample(range(len(L)), min(3, len(L)))})
        c, ok = invert_marks(mark_vector(x))
        assert ok
        assert L.element([int(v) for v in c]) == x


@pytest.mark.parametrize("spec", ["symmetric:3", "dihedral:4", "alternating:4", "abelian:2,2,2"])
def test_normalized_basis(spec):
    L = lattice(spec)
    rows = normalized_basis(L)
    for h, a in enumerate(rows):
        assert a[h] == 1
        assert all(isinstance(v, int) for v in a)
    # unitriangular, so every integer vector is an integer combination
    rng = random.Random(0)
    n = len(L)
    for _ in range(20):
        f = [rng.randint(-10, 10) for _ in range(n)]
        c = [0] * n
        rest = list(f)
        for h in range(n - 1, -1, -1):
            c[h] = rest[h]
            for k in range(n):
                rest[k] -= c[h] * rows[h][k]
        assert not any(rest)


def test_csv_and_json_export():
    M = lattice("symmetric:3").marks
    lines = M.to_csv().strip().splitlines()
    assert lines[0] == "c0_o1,c1_o2,c2_o3,c3_o6"
    assert lines[1:] == ["6,0,0,0", "3,1,0,0", "2,0,2,0", "1,1,1,1"]
    assert json.loads(json.dumps(M.to_json())) == [list(r) for r in M.entries]


def test_element_formatting_and_validation():
    L = lattice("symmetric:3")
    x = 3 * L.basis(1) - L.basis(0)
    assert str(x) == "-1*[c0_o1] + 3*[c1_o2]"
    assert str(L.zero()) == "0"
    assert L.element({1: 0}).coeffs == {}
    with pytest.raises(GroupError):
        BurnsideElement(L, {7: 1})
    with pytest.raises(LatticeMismatch):
        L.basis(0) + lattice("cyclic:6").basis(0)
    with pytest.raises(GroupError):
        L.ghost([1, 2])


def test_trivial_group():
    L = lattice("cyclic:1")
    assert len(L) == 1 and L.marks.entries == ((1,),)


def test_max_order_is_enforced():
    from burnside.groups import OrderCapExceeded
    with pytest.raises(OrderCapExceeded):
        build_lattice(parse_group_spec("symmetric:4"), max_order=12)


@settings(max_examples=30, deadline=None)
@given(st.sampled_from(["symmetric:3", "dihedral:5", "quaternion:8", "cyclic:12"]),
       st.data())
def test_mark_vector_is_additive(spec, data):
    L = lattice(spec)
    n = len(L)
    coeffs = st.lists(st.integers(-9, 9), min_size=n, max_size=n)
    x, y = L.element(data.draw(coeffs)), L.element(data.draw(coeffs))
    assert mark_vector(x + y) == mark_vector(x) + mark_vector(y)
    assert mark_vector(x - y) == mark_vector(x) - mark_vector(y)
