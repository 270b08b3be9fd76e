import random

import pytest
from hypothesis import given, settings, strategies as st

from burnside.groups import GroupError
from burnside.lattice import LatticeMismatch, mark_vector
from burnside.ring import (ElementSyntaxError, RelationSet, augmentation, double_coset_product,
                           known_presentation, mul, mul_oracle, mul_orbits, parse_element,
                           parse_expression, verify_presentation)

from conftest import SMALL, lattice


def test_sigma3_products():
    L = lattice("symmetric:3")
    a, b, c = L.basis(1), L.basis(2), L.basis(0)
    assert mul(a, a) == a + c
    assert mul(a, b) == c
    for x in (a, b, c, L.one()):
        assert mul(x, L.one()) == x


def test_double_coset_route_examples():
    L = lattice("symmetric:3")
    assert double_coset_product(L, 1, 1) == {1: 1, 0: 1}
    # normal H = Z/3 against K = Z/2: |G/H| |(G/K)^(K∩H)| / |W(K∩H)| = 2*3/6
    assert double_coset_product(L, 2, 1) == {0: 1}
    assert mul_oracle(L.one(), L.basis(1)) == L.basis(1)


@pytest.mark.parametrize("spec", SMALL)
def test_ring_axioms(spec):
    L = lattice(spec)
    rng = random.Random(spec)
    n = len(L)

    def rand():
        return L.element([rng.randint(-5, 5) for _ in range(n)])

    for _ in range(15):
        x, y, z = rand(), rand(), rand()
        assert mul(mul(x, y), z) == mul(x, mul(y, z))
        assert mul(x, y + z) == mul(x, y) + mul(x, z)
        assert mul(x, y) == mul(y, x)
        assert mark_vector(mul(x, y)) == mark_vector(x) * mark_vector(y)
        assert augmentation(mul(x, y)) == augmentation(x) * augmentation(y)
        assert mul_oracle(x, y) == mul(x, y) == mul_orbits(x, y)


def test_augmentation_examples():
    L = lattice("symmetric:3")
    assert augmentation(L.basis(1)) == 3
    assert augmentation(L.one()) == 1
    assert augmentation(L.basis(0) - 2 * L.one()) == 4


def test_power_and_scalar():
    L = lattice("cyclic:2")
    x = L.basis(0)
    assert x ** 3 == 4 * x
    assert x ** 0 == L.one()
    assert x * x == mul(x, x)


def test_lattice_mismatch():
    with pytest.raises(LatticeMismatch):
        mul(lattice("cyclic:2").one(), lattice("cyclic:3").one())


def test_parse_element():
    L = lattice("symmetric:3")
    assert parse_element(L, "3*[c1_o2] - 1*[trivial]") == 3 * L.basis(1) - L.basis(0)
    assert parse_element(L, "[full]") == L.one()
    assert parse_element(L, "-2*[c2_o3]+[c2_o3]") == -L.basis(2)
    assert parse_element(L, "0") == L.zero()


@pytest.mark.parametrize("text,pos", [("3*[c1_o2", 8), ("3*c1_o2", 2), ("", 0),
                                      ("[c1_o2] [c2_o3]", 8), ("2*[nope]", 3)])
def test_parse_element_errors(text, pos):
    L = lattice("symmetric:3")
    with pytest.raises(ElementSyntaxError) as exc:
        parse_element(L, text)
    assert exc.value.position == pos, str(exc.value)


def test_expression_grammar():
    L = lattice("symmetric:3")
    gens = {"a": L.basis(1), "c": L.basis(0)}
    R = RelationSet(gens).add("a^2 = a + c").add("(a + c)*a = 2*a + 4*c - a").add("a·c = 3*c")
    report = verify_presentation(L, R)
    assert report.all_passed
    bad = verify_presentation(L, RelationSet(gens).add("a^2 = a"))
    assert not bad.all_passed
    assert bad.failures[0].lhs == L.basis(1) + L.basis(0)
    with pytest.raises(ElementSyntaxError):
        parse_expression("a + * b")
    with pytest.raises(ElementSyntaxError):
        RelationSet(gens).add("a = b = c")
    with pytest.raises(GroupError):
        verify_presentation(L, RelationSet(gens).add("z = a"))


def test_known_presentations():
    assert known_presentation(lattice("symmetric:3"))[0] == "Sigma_3"
    assert known_presentation(lattice("cyclic:9"))[0] == "cyclic p-group"
    assert known_presentation(lattice("elementary:2:2"))[0] == "(Z/p)^2"
    assert known_presentation(lattice("abelian:2,2"))[0] == "(Z/p)^2"
    with pytest.raises(GroupError):
        known_presentation(lattice("alternating:4"))
    with pytest.raises(GroupError):
        known_presentation(lattice("cyclic:6"))


def test_cyclic9_and_klein_presentations_pass():
    for spec in ("cyclic:9", "elementary:2:2"):
        L = lattice(spec)
        _, R = known_presentation(L)
        assert verify_presentation(L, R).all_passed


@settings(max_examples=25, deadline=None)
@given(st.sampled_from(["symmetric:3", "dihedral:4", "quaternion:8"]), st.data())
def test_mul_matches_oracles(spec, data):
    L = lattice(spec)
    n = len(L)
    v = st.lists(st.integers(-4, 4), min_size=n, max_size=n)
    x, y = L.element(data.draw(v)), L.element(data.draw(v))
    assert mul(x, y) == mul_oracle(x, y) == mul_orbits(x, y)
