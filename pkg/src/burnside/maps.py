"""Induction, restriction, the external product, and the map from A(Z/|G|)."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .groups import (GroupError, Subgroup, conjugate, direct_product,
                     double_coset_reps, fixed_point_count, intersection, is_normal)
from .lattice import (BurnsideElement, LatticeMismatch, SubgroupLattice, build_lattice,
                      invert_marks)
from .congruence import in_image


@dataclass
class SubgroupEmbedding:
    ambient: SubgroupLattice
    sub: SubgroupLattice
    subgroup: Subgroup                 # the image, as a subgroup of the ambient group
    inclusion: tuple[int, ...]         # sub element index -> ambient element index
    class_transfer: tuple[int, ...]    # sub class -> ambient class

    def to_ambient(self, K: Subgroup) -> Subgroup:
        return Subgroup(self.ambient.group, (self.inclusion[k] for k in K.members))

    def to_sub(self, K: Subgroup) -> Subgroup:
        pos = {g: i for i, g in enumerate(self.inclusion)}
        return Subgroup(self.sub.group, (pos[k] for k in K.members))


def embed(L: SubgroupLattice, H: Subgroup) -> SubgroupEmbedding:
    if H.group is not L.group:
        raise GroupError("subgroup does not belong to the lattice's group")
    S, inclusion = H.as_group()
    sub = build_lattice(S)
    transfer = []
    for i in range(len(sub)):
        K = Subgroup(L.group, (inclusion[k] for k in sub.rep(i).members))
        transfer.append(L.class_of(K))
    return SubgroupEmbedding(L, sub, H, inclusion, tuple(transfer))


def induction(E: SubgroupEmbedding, x: BurnsideElement) -> BurnsideElement:
    """[H/K] -> [G/K]"""
    if x.lattice is not E.sub:
        raise LatticeMismatch("element does not live over the embedding's subgroup")
    out: dict[int, int] = {}
    for k, c in x.coeffs.items():
        t = E.class_transfer[k]
        out[t] = out.get(t, 0) + c
    return BurnsideElement(E.ambient, out)


def restriction(E: SubgroupEmbedding, x: BurnsideElement) -> BurnsideElement:
    """[G/L] -> sum over double cosets HgL of [H / (H ∩ gLg^-1)]."""
    if x.lattice is not E.ambient:
        raise LatticeMismatch("element does not live over the embedding's ambient group")
    G = E.ambient.group
    H = E.subgroup
    out: dict[int, int] = {}
    for l, c in x.coeffs.items():
        Lrep = E.ambient.rep(l)
        for g in double_coset_reps(G, H, Lrep):
            k = E.sub.class_of(E.to_sub(intersection(H, conjugate(Lrep, g))))
            out[k] = out.get(k, 0) + c
    return BurnsideElement(E.sub, out)


def restriction_normal(E: SubgroupEmbedding, x: BurnsideElement) -> BurnsideElement:
    """Closed form for normal H: [G/L] -> |G||H∩L| / (|H||L|) [H/(H∩L)]."""
    G = E.ambient.group
    H = E.subgroup
    if not is_normal(H, G.whole):
        raise GroupError("closed-form restriction needs a normal subgroup")
    out: dict[int, int] = {}
    for l, c in x.coeffs.items():
        Lrep = E.ambient.rep(l)
        I = intersection(H, Lrep)
        num = G.order * I.order
        den = H.order * Lrep.order
        assert num % den == 0
        k = E.sub.class_of(E.to_sub(I))
        out[k] = out.get(k, 0) + c * (num // den)
    return BurnsideElement(E.sub, out)


def restricted_mark(E: SubgroupEmbedding, x: BurnsideElement, K: Subgroup) -> int:
    """phi_K(x) computed in the ambient group, for K a subgroup of the sub group."""
    Kg = E.to_ambient(K)
    return sum(c * fixed_point_count(E.ambient.group, Kg, E.ambient.rep(l))
               for l, c in x.coeffs.items())


@dataclass
class ProductLattice:
    """Lattice of G1 x G2 together with the factor lattices."""

    lattice: SubgroupLattice
    left: SubgroupLattice
    right: SubgroupLattice

    def pair_class(self, i: int, j: int) -> int:
        G2 = self.right.group
        n2 = G2.order
        H1, H2 = self.left.rep(i), self.right.rep(j)
        members = [a * n2 + b for a in H1.members for b in H2.members]
        return self.lattice.class_of(Subgroup(self.lattice.group, members))


def product_lattice(L1: SubgroupLattice, L2: SubgroupLattice) -> ProductLattice:
    P = direct_product(L1.group, L2.group)
    return ProductLattice(build_lattice(P), L1, L2)


def product_map(x: BurnsideElement, y: BurnsideElement, P: ProductLattice) -> BurnsideElement:
    """[G1/H1] ⊗ [G2/H2] -> [G1 x G2 / H1 x H2]"""
    if x.lattice is not P.left or y.lattice is not P.right:
        raise LatticeMismatch("factors do not match the product lattice")
    out: dict[int, int] = {}
    for i, a in x.coeffs.items():
        for j, b in y.coeffs.items():
            k = P.pair_class(i, j)
            out[k] = out.get(k, 0) + a * b
    return BurnsideElement(P.lattice, out)


def product_basis_image(P: ProductLattice) -> set[int]:
    return {P.pair_class(i, j) for i in range(len(P.left)) for j in range(len(P.right))}


def _cyclic_class_of_order(C: SubgroupLattice, d: int) -> int:
    found = [i for i in range(len(C)) if C.order_of(i) == d]
    if len(found) != 1:
        raise GroupError(f"no unique subgroup of order {d} in the cyclic group")
    return found[0]


def alpha_map(L: SubgroupLattice, x: BurnsideElement) -> BurnsideElement:
    """The element of A(G) whose mark at H is the mark of x at Z/|H| in Z/|G|."""
    C = x.lattice
    G = L.group
    if C.group.order != G.order or max(C.group.element_orders) != G.order:
        raise GroupError(f"source must be the Burnside ring of the cyclic group of order {G.order}")
    marks = C.marks.entries
    f = []
    for h in range(len(L)):
        k = _cyclic_class_of_order(C, L.order_of(h))
        f.append(sum(c * marks[i][k] for i, c in x.coeffs.items()))
    ghost = L.ghost(f)
    ok, rel = in_image(ghost)
    coeffs, integral = invert_marks(ghost)
    if not ok or not integral:
        raise ArithmeticError(f"alpha image {f} is not in the image of the mark map")
    return BurnsideElement(L, {k: int(q) for k, q in enumerate(coeffs)})


def is_coprime_product(P: ProductLattice) -> bool:
    return math.gcd(P.left.group.order, P.right.group.order) == 1
