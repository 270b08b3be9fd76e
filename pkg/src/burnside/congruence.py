"""Congruences cutting out the image of the mark homomorphism."""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .groups import GroupError, closure, left_cosets, totient
from .lattice import GhostVector, SubgroupLattice
from .linalg import in_integer_row_span


@dataclass(frozen=True)
class CongruenceRelation:
    """sum(n * f(C) for C, n in terms) == 0 mod modulus."""

    class_index: int
    terms: tuple[tuple[int, int], ...]
    modulus: int

    def residue(self, f: Sequence[int]) -> int:
        return sum(n * f[c] for c, n in self.terms) % self.modulus

    def holds(self, f: Sequence[int]) -> bool:
        return self.residue(f) == 0

    def describe(self, labels: Sequence[str]) -> str:
        lhs = "+".join(f"f({labels[c]})" if n == 1 else f"{n}*f({labels[c]})"
                       for c, n in self.terms)
        return f"{lhs} ≡ 0 mod {self.modulus}"


def congruences_for_class(L: SubgroupLattice, h: int) -> CongruenceRelation:
    """The relation attached to class h.

    Sums over the actual subgroups C = <H, g> with g in N_G(H), which are
    exactly those with H normal in C and C/H cyclic, weighted by the number
    of generators of C/H, then aggregates by the class of C.
    """
    if not 0 <= h < len(L):
        raise GroupError(f"class index {h} out of range")
    c = L.classes[h]
    H = c.representative
    seen: dict[int, int] = {}
    for g in c.normalizer.members:
        if g in H:
            continue
        C = closure(L.group, [g], base=H)
        seen.setdefault(C.mask, C.order // H.order)
    seen[H.mask] = 1
    terms: dict[int, int] = {}
    for mask, index in seen.items():
        k = L.class_of(mask)
        terms[k] = terms.get(k, 0) + totient(index)
    return CongruenceRelation(h, tuple(sorted(terms.items())), c.weyl_order)


def all_congruences(L: SubgroupLattice) -> list[CongruenceRelation]:
    cached = getattr(L, "_congruences", None)
    if cached is None:
        cached = [congruences_for_class(L, h) for h in range(len(L))]
        L._congruences = cached
    return cached


def _values(f) -> Sequence[int]:
    return f.values if isinstance(f, GhostVector) else f


def in_image(f: GhostVector) -> tuple[bool, CongruenceRelation | None]:
    """Whether f lies in the image of the mark map; on failure also the first broken relation."""
    vals = _values(f)
    for rel in all_congruences(f.lattice):
        if not rel.holds(vals):
            return False, rel
    return True, None


def in_row_span(f: GhostVector) -> bool:
    """Independent check: integer row span of the mark matrix via Hermite normal form."""
    return in_integer_row_span(f.lattice.marks.entries, f.values)


def order_check(L: SubgroupLattice) -> tuple[int, bool]:
    """lcm of the Weyl orders, and whether order * e_h is in the image for every class h."""
    order = math.lcm(*L.weyl_orders)
    n = len(L)
    ok = all(in_image(L.ghost([order if k == h else 0 for k in range(n)]))[0] for h in range(n))
    return order, ok


def burnside_count(L: SubgroupLattice, multiplicities: Sequence[int]) -> tuple[int, int, int]:
    """Build X = sum m_h G/H_h explicitly and count.

    Returns (sum over g of |X^g|, |G|, number of G-orbits of X), where the
    orbit count comes from a union-find pass over the constructed set.
    """
    G = L.group
    t = G.table
    points: list[tuple[int, int]] = []  # (block, coset rep)
    blocks = []
    for h, m in enumerate(multiplicities):
        if m < 0:
            raise ValueError("G-set multiplicities must be non-negative")
        H = L.rep(h)
        for _ in range(m):
            blocks.append(H)
    index = {}
    coset_of = []
    for b, H in enumerate(blocks):
        cid = [-1] * G.order
        for n, r in enumerate(left_cosets(H)):
            for x in H.members:
                cid[t[r][x]] = n
            index[(b, n)] = len(points)
            points.append((b, r))
        coset_of.append(cid)

    total_fixed = 0
    for g in range(G.order):
        for b, r in points:
            if coset_of[b][t[g][r]] == coset_of[b][r]:
                total_fixed += 1

    parent = list(range(len(points)))

    def find(a):
        while parent[a] != a:
            parent[a] = parent[parent[a]]
            a = parent[a]
        return a

    for g in G.whole.generators:
        for i, (b, r) in enumerate(points):
            j = index[(b, coset_of[b][t[g][r]])]
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
    orbits = len({find(i) for i in range(len(points))})
    return total_fixed, G.order, orbits
