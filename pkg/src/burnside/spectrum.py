"""Prime ideals q(H, p) and q(H, 0), p-perfection, idempotents and units."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .groups import GroupError, Subgroup, is_normal, is_prime, p_part, p_residual, prime_divisors
from .lattice import BurnsideElement, LatticeMismatch, SubgroupLattice, element_from_ghost
from .congruence import all_congruences

DEFAULT_MAX_CLASSES = 20


@dataclass(frozen=True)
class PrimeIdealDescriptor:
    class_index: int
    characteristic: int

    def __post_init__(self):
        if self.characteristic != 0 and not is_prime(self.characteristic):
            raise ValueError(f"characteristic {self.characteristic} is neither 0 nor prime")


@dataclass(frozen=True)
class PerfectionPair:
    base: int
    p: int
    h_sub: int
    h_sup: int


def _check_prime(p: int):
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")


def _pair_for_subgroup(L: SubgroupLattice, H: Subgroup, p: int) -> tuple[int, int]:
    Hp = p_residual(H, p)
    h_sub = L.class_of(Hp)
    # work with the class representative so h_sup depends only on (H_p)
    R = L.rep(h_sub)
    N = L.classes[h_sub].normalizer
    target = R.order * p_part(N.order // R.order, p)
    for S in L.all_subgroups():
        if S.order == target and R <= S <= N:
            return h_sub, L.class_of(S)
    raise AssertionError("no Sylow preimage found; subgroup enumeration is incomplete")


def p_perfection_pair(L: SubgroupLattice, h: int, p: int) -> PerfectionPair:
    """(H_p, H^p): the p-residual of H and the preimage of a Sylow p-subgroup of W_G(H_p)."""
    _check_prime(p)
    key = (h, p)
    cache = L.__dict__.setdefault("_perfection", {})
    if key not in cache:
        h_sub, h_sup = _pair_for_subgroup(L, L.rep(h), p)
        cache[key] = PerfectionPair(h, p, h_sub, h_sup)
    return cache[key]


def ideal_key(L: SubgroupLattice, q: PrimeIdealDescriptor):
    if q.characteristic == 0:
        return (0, q.class_index)
    return (q.characteristic, p_perfection_pair(L, q.class_index, q.characteristic).h_sup)


def prime_ideal_equal(L: SubgroupLattice, q1: PrimeIdealDescriptor, q2: PrimeIdealDescriptor) -> bool:
    for q in (q1, q2):
        if not 0 <= q.class_index < len(L):
            raise LatticeMismatch(f"class index {q.class_index} not in this lattice")
    return ideal_key(L, q1) == ideal_key(L, q2)


def zero_ideal_contained(L: SubgroupLattice, h: int, k: int, p: int) -> bool:
    """q(h, 0) ⊂ q(k, p), which holds exactly when q(h, p) = q(k, p)."""
    return prime_ideal_equal(L, PrimeIdealDescriptor(h, p), PrimeIdealDescriptor(k, p))


def bauer_may_check(L: SubgroupLattice, chain: Sequence[Subgroup], p: int) -> bool:
    """For nested H <= J <= K: q(H,p) = q(K,p) forces q(J,p) to agree."""
    _check_prime(p)
    if len(chain) != 3:
        raise GroupError("chain must have exactly three subgroups")
    H, J, K = chain
    if not (H <= J <= K):
        raise GroupError("chain is not nested")
    h, j, k = (ideal_key(L, PrimeIdealDescriptor(L.class_of(S), p)) for S in chain)
    return h != k or h == j == k


def normal_p_quotient_pairs(L: SubgroupLattice, p: int) -> Iterable[tuple[Subgroup, Subgroup]]:
    """All (K, H) with K normal in H and H/K a p-group."""
    subs = list(L.all_subgroups())
    for H in subs:
        for K in subs:
            q = H.order // K.order if H.order % K.order == 0 else 0
            if q and p_part(q, p) == q and K <= H and is_normal(K, H):
                yield K, H


def spectrum_partition(L: SubgroupLattice, p: int) -> list[list[int]]:
    """Classes grouped by equal maximal ideal q(-, p)."""
    groups: dict[int, list[int]] = {}
    for h in range(len(L)):
        groups.setdefault(p_perfection_pair(L, h, p).h_sup, []).append(h)
    return [groups[k] for k in sorted(groups)]


def pi_perfect_classes(L: SubgroupLattice, primes: Iterable[int]) -> list[int]:
    primes = list(primes)
    for p in primes:
        _check_prime(p)
    return [h for h in range(len(L))
            if all(p_residual(L.rep(h), p) == L.rep(h) for p in primes)]


def perfect_classes(L: SubgroupLattice) -> list[int]:
    return pi_perfect_classes(L, prime_divisors(L.group.order))


def _search_ghosts(L: SubgroupLattice, values: tuple[int, int], max_classes: int | None):
    """All f in values^classes that satisfy every congruence.

    Classes are assigned from the top of the order down; the relation for
    class h only involves h and classes above it, so it is checked as soon
    as f(h) is set.
    """
    n = len(L)
    bound = DEFAULT_MAX_CLASSES if max_classes is None else max_classes
    if n > bound:
        raise GroupError(f"{n} classes exceeds the enumeration bound {bound}")
    rels = all_congruences(L)
    f = [0] * n
    found = []

    def rec(h):
        if h < 0:
            found.append(tuple(f))
            return
        for v in values:
            f[h] = v
            if rels[h].holds(f):
                rec(h - 1)
        f[h] = 0

    rec(n - 1)
    return sorted(found)


def idempotents(L: SubgroupLattice, max_classes: int | None = None) -> list[BurnsideElement]:
    return [element_from_ghost(L.ghost(f)) for f in _search_ghosts(L, (0, 1), max_classes)]


def units(L: SubgroupLattice, max_classes: int | None = None) -> list[BurnsideElement]:
    return [element_from_ghost(L.ghost(f)) for f in _search_ghosts(L, (-1, 1), max_classes)]
