import itertools

import pytest

from burnside.groups import GroupError, Subgroup
from burnside.lattice import mark_vector
from burnside.ring import mul
from burnside.spectrum import (PrimeIdealDescriptor, bauer_may_check, idempotents,
                               p_perfection_pair, perfect_classes, pi_perfect_classes,
                               prime_ideal_equal, spectrum_partition, units, zero_ideal_contained)

from conftest import CORPUS, lattice


def q(h, p):
    return PrimeIdealDescriptor(h, p)


def test_perfection_examples():
    L = lattice("symmetric:3")
    pp = p_perfection_pair(L, 3, 2)
    assert (pp.h_sub, pp.h_sup) == (2, 3)
    pp = p_perfection_pair(L, 1, 2)
    assert (pp.h_sub, pp.h_sup) == (0, 1)
    Z4 = lattice("cyclic:4")
    pp = p_perfection_pair(Z4, 2, 2)
    assert (pp.h_sub, pp.h_sup) == (0, 2)
    with pytest.raises(ValueError):
        p_perfection_pair(L, 0, 4)


def test_prime_ideal_examples():
    L = lattice("symmetric:3")
    assert prime_ideal_equal(L, q(0, 2), q(1, 2))
    assert not prime_ideal_equal(L, q(0, 0), q(1, 0))
    assert prime_ideal_equal(L, q(2, 3), q(0, 3))
    assert not prime_ideal_equal(L, q(0, 2), q(0, 3))
    assert zero_ideal_contained(L, 0, 1, 2)
    assert not zero_ideal_contained(L, 0, 2, 2)
    with pytest.raises(ValueError):
        PrimeIdealDescriptor(0, 6)
    with pytest.raises(GroupError):
        prime_ideal_equal(L, q(9, 2), q(0, 2))


@pytest.mark.parametrize("spec", ["symmetric:4", "alternating:5", "dihedral:6", "cyclic:12"])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_ideal_equality_matches_marks_mod_p(spec, p):
    """q(H,p) = q(K,p) exactly when the H and K mark columns agree mod p."""
    L = lattice(spec)
    n = len(L)
    for h, k in itertools.combinations(range(n), 2):
        same = all((L.marks[r, h] - L.marks[r, k]) % p == 0 for r in range(n))
        assert same == prime_ideal_equal(L, q(h, p), q(k, p))


def test_spectrum_partition_sigma3():
    L = lattice("symmetric:3")
    assert spectrum_partition(L, 2) == [[0, 1], [2, 3]]
    assert spectrum_partition(L, 3) == [[1], [0, 2], [3]]


def test_bauer_may_examples():
    L = lattice("symmetric:3")
    G = L.group
    chain = (G.trivial, L.rep(2), G.whole)
    assert bauer_may_check(L, chain, 2)
    Z4 = lattice("cyclic:4")
    assert bauer_may_check(Z4, (Z4.rep(0), Z4.rep(1), Z4.rep(2)), 2)
    assert bauer_may_check(L, (G.whole,) * 3, 3)
    with pytest.raises(GroupError):
        bauer_may_check(L, (G.whole, G.trivial, G.whole), 2)
    with pytest.raises(GroupError):
        bauer_may_check(L, (G.trivial, G.whole), 2)


@pytest.mark.parametrize("spec", ["symmetric:4", "dihedral:6", "alternating:4"])
def test_bauer_may_all_chains_p7(spec):
    L = lattice(spec)
    subs = list(L.all_subgroups())
    for H, J, K in itertools.product(subs, repeat=3):
        if H <= J <= K:
            assert bauer_may_check(L, (H, J, K), 7)


def test_pi_perfect_examples():
    L = lattice("symmetric:3")
    assert pi_perfect_classes(L, [2, 3]) == [0]
    assert pi_perfect_classes(L, [2]) == [0, 2]
    A5 = lattice("alternating:5")
    assert pi_perfect_classes(A5, [2, 3, 5]) == [0, len(A5) - 1]
    with pytest.raises(ValueError):
        pi_perfect_classes(L, [4])


def test_idempotent_examples():
    for spec in ("symmetric:3", "cyclic:2"):
        L = lattice(spec)
        assert set(idempotents(L)) == {L.zero(), L.one()}
    assert len(idempotents(lattice("alternating:5"))) == 4


@pytest.mark.parametrize("spec", CORPUS)
def test_idempotent_count_matches_perfect_classes(spec):
    L = lattice(spec)
    found = idempotents(L, max_classes=64)
    assert len(found) == 2 ** len(perfect_classes(L))
    for e in found:
        assert mul(e, e) == e


def test_enumeration_bound():
    L = lattice("elementary:3:3")
    assert len(L) == 28
    with pytest.raises(GroupError):
        idempotents(L)
    with pytest.raises(GroupError):
        units(lattice("symmetric:4"), max_classes=5)


def test_unit_examples():
    L = lattice("cyclic:3")
    assert set(units(L)) == {L.one(), -L.one()}
    S3 = lattice("symmetric:3")
    ghosts = {mark_vector(u).values for u in units(S3)}
    assert (1, -1, 1, 1) in ghosts
    a, c = S3.basis(1), S3.basis(0)
    assert S3.one() - 2 * a + c in units(S3)
    T = lattice("cyclic:1")
    assert set(units(T)) == {T.one(), -T.one()}


@pytest.mark.parametrize("spec", ["symmetric:3", "dihedral:4", "alternating:4", "abelian:2,2",
                                  "cyclic:15", "quaternion:8"])
def test_units_form_a_group(spec):
    L = lattice(spec)
    us = units(L)
    for u in us:
        assert set(mark_vector(u).values) <= {1, -1}
        assert mul(u, u) == L.one()
    for u, v in itertools.product(us, repeat=2):
        assert mul(u, v) in us


@pytest.mark.parametrize("n", [1, 3, 5, 7, 9, 15])
def test_odd_order_bijection(n):
    L = lattice(f"cyclic:{n}")
    es = idempotents(L)
    assert sorted(map(str, units(L))) == sorted(str(2 * e - L.one()) for e in es)


def test_perfection_pair_is_cached_and_valid():
    L = lattice("symmetric:4")
    assert p_perfection_pair(L, 5, 2) is p_perfection_pair(L, 5, 2)
    for h in range(len(L)):
        pp = p_perfection_pair(L, h, 2)
        S_sub, S_sup = L.rep(pp.h_sub), L.rep(pp.h_sup)
        assert isinstance(S_sub, Subgroup)
        assert any(S_sub <= C for C in L.classes[pp.h_sup].conjugates)
