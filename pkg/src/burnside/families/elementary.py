"""Distinguished generating sets for subgroups of (Z/p)^n.

Coordinates are 1-based. A normal form has pivots n >= i_1 > ... > i_m >= 1;
row k is 1 at i_k, 0 to the right of i_k, and 0 at every other pivot.
That is row-reduced echelon form read from the right.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from ..groups import is_prime


@dataclass(frozen=True)
class ElementaryAbelianNF:
    p: int
    n: int
    pivots: tuple[int, ...]
    rows: tuple[tuple[int, ...], ...]

    @property
    def rank(self) -> int:
        return len(self.rows)

    def tuples(self) -> set[tuple[int, tuple[int, ...]]]:
        return set(zip(self.pivots, self.rows))

    def elements(self) -> set[tuple[int, ...]]:
        out = set()
        for coeffs in product(range(self.p), repeat=self.rank):
            v = [0] * self.n
            for c, r in zip(coeffs, self.rows):
                for j in range(self.n):
                    v[j] = (v[j] + c * r[j]) % self.p
            out.add(tuple(v))
        return out

    def satisfies_conventions(self) -> bool:
        if list(self.pivots) != sorted(set(self.pivots), reverse=True):
            return False
        for k, (i, row) in enumerate(zip(self.pivots, self.rows)):
            if row[i - 1] != 1 or any(row[j] for j in range(i, self.n)):
                return False
            if any(row[i2 - 1] for l, i2 in enumerate(self.pivots) if l != k):
                return False
        return True


def _validate(p: int, n: int, vectors: Iterable[Sequence[int]]) -> list[list[int]]:
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    out = []
    for v in vectors:
        if len(v) != n:
            raise ValueError(f"vector {tuple(v)} does not have length {n}")
        out.append([x % p for x in v])
    return out


def nf_from_generators(p: int, n: int, gens: Iterable[Sequence[int]]) -> ElementaryAbelianNF:
    rows = _validate(p, n, gens)
    pivots: list[int] = []
    basis: list[list[int]] = []
    for col in range(n - 1, -1, -1):
        pick = next((r for r in rows if r[col]), None)
        if pick is None:
            continue
        rows.remove(pick)
        inv = pow(pick[col], -1, p)
        pick = [(x * inv) % p for x in pick]
        for r in rows + basis:
            if r[col]:
                c = r[col]
                for j in range(n):
                    r[j] = (r[j] - c * pick[j]) % p
        basis.append(pick)
        pivots.append(col + 1)
        rows = [r for r in rows if any(r)]
    return ElementaryAbelianNF(p, n, tuple(pivots), tuple(tuple(r) for r in basis))


def _linear_intersection(A: ElementaryAbelianNF, B: ElementaryAbelianNF) -> ElementaryAbelianNF:
    """Zassenhaus: reduce [[A, A], [B, 0]]; rows with zero left half span A ∩ B."""
    p, n = A.p, A.n
    rows = [list(r) + list(r) for r in A.rows] + [list(r) + [0] * n for r in B.rows]
    width = 2 * n
    reduced = []
    for col in range(width):
        pick = next((r for r in rows if r[col]), None)
        if pick is None:
            continue
        rows.remove(pick)
        inv = pow(pick[col], -1, p)
        pick = [(x * inv) % p for x in pick]
        for r in rows:
            if r[col]:
                c = r[col]
                for j in range(width):
                    r[j] = (r[j] - c * pick[j]) % p
        reduced.append(pick)
    inter = [r[n:] for r in reduced if not any(r[:n])]
    return nf_from_generators(p, n, inter)


def nf_intersect(A: ElementaryAbelianNF, B: ElementaryAbelianNF):
    """(true intersection, tuple-set rule, whether they agree).

    The tuple rule keeps only the (pivot, row) pairs common to both normal
    forms. It is not the subgroup intersection in general, e.g. in (Z/2)^2
    the full group against <(1,1)>; callers should use the first entry.
    """
    if (A.p, A.n) != (B.p, B.n):
        raise ValueError("normal forms over different groups")
    linear = _linear_intersection(A, B)
    common = sorted(A.tuples() & B.tuples(), reverse=True)
    tuple_rule = ElementaryAbelianNF(A.p, A.n, tuple(i for i, _ in common),
                                     tuple(r for _, r in common))
    return linear, tuple_rule, linear == tuple_rule


def all_subgroup_nfs(p: int, n: int) -> list[ElementaryAbelianNF]:
    """Every subgroup of (Z/p)^n, by normalizing all sets of at most n vectors."""
    vecs = list(product(range(p), repeat=n))
    seen = {}
    frontier = [nf_from_generators(p, n, [])]
    seen[frontier[0]] = None
    while frontier:
        nxt = []
        for S in frontier:
            for v in vecs:
                T = nf_from_generators(p, n, list(S.rows) + [v])
                if T not in seen:
                    seen[T] = None
                    nxt.append(T)
        frontier = nxt
    return list(seen)
