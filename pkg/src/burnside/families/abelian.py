"""Abelian fast path and reduction of compact abelian groups to their component group."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..groups import FiniteGroup, GroupError, Subgroup, intersection, parse_group_spec
from ..lattice import BurnsideElement, SubgroupLattice


def abelian_mul(L: SubgroupLattice, K: Subgroup | int, M: Subgroup | int) -> BurnsideElement:
    """[G/K][G/M] = |G||K∩M| / (|K||M|) [G/(K∩M)] for abelian G."""
    G = L.group
    if not G.is_abelian:
        raise GroupError("abelian_mul needs an abelian group")
    K = L.rep(K) if isinstance(K, int) else K
    M = L.rep(M) if isinstance(M, int) else M
    I = intersection(K, M)
    num = G.order * I.order
    den = K.order * M.order
    if num % den:
        raise ArithmeticError("non-integral coefficient in the abelian product formula")
    return BurnsideElement(L, {L.class_of(I): num // den})


@dataclass(frozen=True)
class CompactAbelianDescriptor:
    """Torus of the given rank times the finite abelian group with these invariant factors."""

    torus_rank: int = 0
    invariant_factors: tuple[int, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.torus_rank < 0:
            raise ValueError("torus rank must be non-negative")
        if any(d < 2 for d in self.invariant_factors):
            raise ValueError("invariant factors must be at least 2")


def compact_abelian_reduce(D: CompactAbelianDescriptor) -> FiniteGroup:
    """The component group G/G°; the torus contributes nothing to A(G)."""
    if not D.invariant_factors:
        return parse_group_spec("cyclic:1")
    return parse_group_spec("abelian:" + ",".join(map(str, D.invariant_factors)))
