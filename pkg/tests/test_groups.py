import itertools
import math

import pytest
from hypothesis import given, settings, strategies as st

from burnside.groups import (GroupError, GroupSpecError, OrderCapExceeded, Subgroup,
                             all_subgroup_classes, closure, derived_series, double_coset_reps,
                             fixed_point_count, is_normal, is_p_power, is_prime, is_solvable, p_residual,
                             parse_group_spec, totient)


def brute_subgroups(G):
    """Every subgroup, as closures of all generating sets of size <= log2 |G|."""
    k = max(1, int(math.log2(G.order))) if G.order > 1 else 1
    found = set()
    for r in range(0, k + 1):
        for gens in itertools.combinations(range(G.order), r):
            found.add(tuple(sorted(closure(G, gens))))
    return found


def test_named_families_have_expected_orders():
    cases = {"cyclic:6": 6, "dihedral:5": 10, "symmetric:4": 24, "alternating:5": 60,
             "quaternion:8": 8, "elementary:3:2": 9, "abelian:2,4": 8,
             "perm:3:(1 2),(1 2 3)": 6, "product:cyclic:2,cyclic:3": 6, "cyclic:1": 1}
    for spec, n in cases.items():
        G = parse_group_spec(spec)
        assert G.order == n, spec
        assert G.check_axioms()


def test_perm_spec_is_sigma3():
    G = parse_group_spec("perm:3:(1 2),(1 2 3)")
    S = parse_group_spec("symmetric:3")
    assert G.elements == S.elements
    assert G.digest == S.digest
    assert not G.is_abelian


def test_klein_four_product():
    G = parse_group_spec("product:cyclic:2,cyclic:2")
    assert G.order == 4
    assert sorted(G.element_orders) == [1, 2, 2, 2]


def test_nested_product():
    G = parse_group_spec("product:product:cyclic:2,cyclic:2,cyclic:3")
    assert G.order == 12 and G.is_abelian


def test_quaternion_has_one_involution():
    G = parse_group_spec("quaternion:8")
    assert sorted(G.element_orders).count(2) == 1
    assert not G.is_abelian


def test_indexing_is_deterministic():
    a = parse_group_spec("dihedral:6")
    b = parse_group_spec("dihedral:6")
    assert a.elements == b.elements and a.table == b.table


@pytest.mark.parametrize("text,pos", [
    ("cyclic:x", 7), ("cyclc:3", 0), ("dihedral:", 9), ("quaternion:16", 11),
    ("elementary:4:2", 11), ("perm:3:(1 4)", 10), ("product:cyclic:2", 16),
    ("cyclic:3 junk", 8),
])
def test_syntax_errors_report_position(text, pos):
    with pytest.raises(GroupSpecError) as exc:
        parse_group_spec(text)
    assert exc.value.position == pos, str(exc.value)


def test_order_cap():
    with pytest.raises(OrderCapExceeded):
        parse_group_spec("symmetric:6")
    assert parse_group_spec("symmetric:6", max_order=720).order == 720
    with pytest.raises(OrderCapExceeded):
        parse_group_spec("cyclic:10", max_order=8)


@pytest.mark.parametrize("spec", ["symmetric:3", "cyclic:4", "dihedral:4", "quaternion:8",
                                  "alternating:4", "abelian:2,2,2", "cyclic:12", "dihedral:6",
                                  "symmetric:4", "product:symmetric:3,cyclic:2"])
def test_classes_cover_all_subgroups_exactly_once(spec):
    G = parse_group_spec(spec)
    classes = all_subgroup_classes(G)
    seen = [S.members for c in classes for S in c.conjugates]
    assert len(seen) == len(set(seen))
    assert set(seen) == brute_subgroups(G)
    for c in classes:
        assert c.weyl_order == c.normalizer.order // c.order
        assert c.conjugates_count * c.normalizer.order == G.order
        assert c.representative.is_valid()
        assert G.order % c.order == 0


def test_sigma3_classes():
    classes = all_subgroup_classes(parse_group_spec("symmetric:3"))
    assert [c.conjugates_count for c in classes] == [1, 3, 1, 1]
    assert [c.weyl_order for c in classes] == [6, 1, 2, 1]


def test_cyclic4_and_trivial_classes():
    assert [c.weyl_order for c in all_subgroup_classes(parse_group_spec("cyclic:4"))] == [4, 2, 1]
    classes = all_subgroup_classes(parse_group_spec("cyclic:1"))
    assert len(classes) == 1 and classes[0].weyl_order == 1


def _brute_double_cosets(G, H, K):
    t = G.table
    seen, count = set(), 0
    for g in range(G.order):
        if g in seen:
            continue
        count += 1
        seen |= {t[t[h][g]][k] for h in H.members for k in K.members}
    return count


def test_double_coset_examples():
    G = parse_group_spec("symmetric:3")
    Z2 = all_subgroup_classes(G)[1].representative
    assert len(double_coset_reps(G, Z2, Z2)) == 2
    assert len(double_coset_reps(G, G.trivial, G.trivial)) == 6
    assert len(double_coset_reps(G, G.whole, G.whole)) == 1


@pytest.mark.parametrize("spec", ["symmetric:4", "dihedral:5", "quaternion:8"])
def test_double_cosets_partition(spec):
    G = parse_group_spec(spec)
    t = G.table
    subs = [c.representative for c in all_subgroup_classes(G)]
    for H, K in itertools.product(subs, repeat=2):
        reps = double_coset_reps(G, H, K)
        assert len(reps) == _brute_double_cosets(G, H, K)
        cover = set()
        for g in reps:
            block = {t[t[h][g]][k] for h in H.members for k in K.members}
            assert not block & cover
            cover |= block
        assert cover == set(range(G.order))


def test_double_cosets_reject_foreign_subgroup():
    G = parse_group_spec("symmetric:3")
    other = parse_group_spec("cyclic:6")
    with pytest.raises(GroupError):
        double_coset_reps(G, other.whole, G.whole)


def test_fixed_point_examples():
    G = parse_group_spec("symmetric:3")
    _, Z2, Z3, _ = [c.representative for c in all_subgroup_classes(G)]
    assert fixed_point_count(G, Z2, Z2) == 1
    assert fixed_point_count(G, Z2, Z3) == 0
    for K in (Z2, Z3, G.whole):
        assert fixed_point_count(G, G.trivial, K) == G.order // K.order


@pytest.mark.parametrize("spec", ["symmetric:4", "dihedral:6", "alternating:4"])
def test_fixed_points_detect_subconjugacy_and_weyl_divides(spec):
    G = parse_group_spec(spec)
    classes = all_subgroup_classes(G)
    for ch, ck in itertools.product(classes, repeat=2):
        H, K = ch.representative, ck.representative
        n = fixed_point_count(G, H, K)
        sub = any(H <= C for C in ck.conjugates)
        assert (n > 0) == sub
        assert n % ck.weyl_order == 0
        for H2 in ch.conjugates:
            assert fixed_point_count(G, H2, K) == n


def _normal_subgroups(H):
    G = H.group
    out = []
    for members in brute_subgroups(G):
        N = Subgroup(G, members)
        if N <= H and is_normal(N, H):
            out.append(N)
    return out


@pytest.mark.parametrize("spec", ["symmetric:3", "cyclic:4", "symmetric:4", "dihedral:6",
                                  "alternating:4", "quaternion:8"])
@pytest.mark.parametrize("p", [2, 3, 5])
def test_p_residual_is_minimal(spec, p):
    G = parse_group_spec(spec)
    for c in all_subgroup_classes(G):
        H = c.representative
        R = p_residual(H, p)
        assert is_normal(R, H)
        assert is_p_power(H.order // R.order, p) or R == H
        for N in _normal_subgroups(H):
            if N.order == H.order or is_p_power(H.order // N.order, p):
                assert R <= N


def test_p_residual_examples():
    G = parse_group_spec("symmetric:3")
    assert p_residual(G.whole, 2).order == 3
    assert p_residual(G.whole, 3) == G.whole
    Z4 = parse_group_spec("cyclic:4")
    assert p_residual(Z4.whole, 2).order == 1
    with pytest.raises(ValueError):
        p_residual(G.whole, 4)


def test_solvability():
    assert is_solvable(parse_group_spec("symmetric:3").whole)
    assert is_solvable(parse_group_spec("cyclic:9").whole)
    assert is_solvable(parse_group_spec("symmetric:4").whole)
    assert not is_solvable(parse_group_spec("alternating:5").whole)
    series = derived_series(parse_group_spec("symmetric:4").whole)
    assert [S.order for S in series] == [24, 12, 4, 1]


def test_number_helpers():
    assert [totient(n) for n in range(1, 11)] == [1, 1, 2, 2, 4, 2, 6, 4, 6, 4]
    assert [n for n in range(20) if is_prime(n)] == [2, 3, 5, 7, 11, 13, 17, 19]


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["symmetric:4", "dihedral:7", "abelian:2,6", "quaternion:8"]),
       st.lists(st.integers(0, 10 ** 6), max_size=3))
def test_closure_is_a_subgroup(spec, picks):
    G = parse_group_spec(spec)
    gens = [g % G.order for g in picks]
    S = G.subgroup(gens)
    assert S.is_valid()
    assert G.order % S.order == 0
    assert set(gens) <= set(S.members)
