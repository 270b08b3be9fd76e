"""Ordered subgroup lattice, table of marks, and the mark homomorphism."""

from __future__ import annotations

import csv
import io
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from .groups import (FiniteGroup, GroupError, Subgroup, SubgroupClass, all_subgroup_classes,
                     fixed_point_count)
from .linalg import solve_transposed_lower


class LatticeMismatch(GroupError):
    pass


class SubgroupLattice:
    """Conjugacy classes of subgroups in a linear order respecting subconjugacy.

    Classes are sorted by subgroup order, then by the member tuple of the
    representative (the lexicographically smallest conjugate).
    """

    def __init__(self, group: FiniteGroup, classes: Sequence[SubgroupClass]):
        self.group = group
        self.classes = tuple(classes)
        self._class_of_mask: dict[int, int] = {}
        for i, c in enumerate(self.classes):
            for S in c.conjugates:
                self._class_of_mask[S.mask] = i
        n = len(self.classes)
        self.labels = tuple(f"c{i}_o{c.order}" for i, c in enumerate(self.classes))
        self.aliases = {"trivial": 0, "full": n - 1}
        self._marks = None

    def __len__(self):
        return len(self.classes)

    def __repr__(self):
        return f"SubgroupLattice({self.group!r}, classes={len(self)})"

    def rep(self, i: int) -> Subgroup:
        return self.classes[i].representative

    def order_of(self, i: int) -> int:
        return self.classes[i].order

    def weyl(self, i: int) -> int:
        return self.classes[i].weyl_order

    @property
    def weyl_orders(self) -> tuple[int, ...]:
        return tuple(c.weyl_order for c in self.classes)

    def class_of(self, H: Subgroup | int) -> int:
        mask = H if isinstance(H, int) else H.mask
        try:
            return self._class_of_mask[mask]
        except KeyError:
            raise GroupError("not a subgroup of this lattice's group") from None

    def all_subgroups(self) -> Iterable[Subgroup]:
        for c in self.classes:
            yield from c.conjugates

    def resolve(self, label: str) -> int:
        if label in self.aliases:
            return self.aliases[label]
        try:
            return self.labels.index(label)
        except ValueError:
            raise GroupError(f"unknown class label {label!r}") from None

    @cached_property
    def subconjugacy(self) -> tuple[tuple[bool, ...], ...]:
        """subconjugacy[i][j]: some conjugate of rep(i) lies in rep(j)."""
        n = len(self)
        return tuple(
            tuple(any(C.mask & ~self.rep(j).mask == 0 for C in self.classes[i].conjugates)
                  for j in range(n))
            for i in range(n))

    @property
    def marks(self) -> "MarkMatrix":
        if self._marks is None:
            self._marks = table_of_marks(self)
        return self._marks

    def set_marks(self, entries: Sequence[Sequence[int]]):
        """Install a precomputed mark table (from the cache)."""
        self._marks = MarkMatrix(self, tuple(tuple(r) for r in entries))

    def element(self, coeffs: Mapping[int, int] | Sequence[int]) -> "BurnsideElement":
        if not isinstance(coeffs, Mapping):
            coeffs = dict(enumerate(coeffs))
        return BurnsideElement(self, coeffs)

    def basis(self, i: int) -> "BurnsideElement":
        return BurnsideElement(self, {i: 1})

    def one(self) -> "BurnsideElement":
        return self.basis(len(self) - 1)

    def zero(self) -> "BurnsideElement":
        return BurnsideElement(self, {})

    def ghost(self, values: Sequence[int]) -> "GhostVector":
        return GhostVector(self, values)


def build_lattice(G: FiniteGroup, max_order: int | None = None) -> SubgroupLattice:
    L = SubgroupLattice(G, all_subgroup_classes(G, max_order=max_order))
    return L


class MarkMatrix:
    """entries[h][k] = |(G/H_h)^{K_k}|; row h holds the marks of [G/H_h]."""

    def __init__(self, lattice: SubgroupLattice, entries: tuple[tuple[int, ...], ...]):
        self.lattice = lattice
        self.entries = entries

    def __getitem__(self, hk):
        h, k = hk
        return self.entries[h][k]

    def __len__(self):
        return len(self.entries)

    def row(self, h: int) -> tuple[int, ...]:
        return self.entries[h]

    def column(self, k: int) -> tuple[int, ...]:
        return tuple(r[k] for r in self.entries)

    def is_lower_triangular(self) -> bool:
        n = len(self)
        return all(self.entries[h][k] == 0 for h in range(n) for k in range(h + 1, n))

    def invariant_failures(self) -> list[str]:
        """Triangularity, diagonal = Weyl order, and row divisibility; empty if all hold."""
        L = self.lattice
        n = len(self)
        bad = []
        for h in range(n):
            w = L.weyl(h)
            if self.entries[h][h] != w or w == 0:
                bad.append(f"diagonal at {L.labels[h]}")
            for k in range(n):
                v = self.entries[h][k]
                if v % w:
                    bad.append(f"row {L.labels[h]} not divisible by {w} at {L.labels[k]}")
                if k > h and v:
                    bad.append(f"nonzero above diagonal at ({h}, {k})")
                if v and not L.subconjugacy[k][h]:
                    bad.append(f"mark at ({h}, {k}) without subconjugacy")
        return bad

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(self.lattice.labels)
        w.writerows(self.entries)
        return buf.getvalue()

    def to_json(self) -> list[list[int]]:
        return [list(r) for r in self.entries]


def table_of_marks(L: SubgroupLattice) -> MarkMatrix:
    G = L.group
    n = len(L)
    entries = []
    for h in range(n):
        H = L.rep(h)
        row = []
        for k in range(n):
            K = L.rep(k)
            row.append(fixed_point_count(G, K, H))
        entries.append(tuple(row))
    return MarkMatrix(L, tuple(entries))


class BurnsideElement:
    """Integer combination of basis classes [G/H] over a lattice."""

    __slots__ = ("lattice", "coeffs")

    def __init__(self, lattice: SubgroupLattice, coeffs: Mapping[int, int]):
        n = len(lattice)
        clean = {}
        for k, v in coeffs.items():
            if not 0 <= k < n:
                raise GroupError(f"class index {k} out of range")
            if v != int(v):
                raise GroupError("coefficients must be integers")
            if v:
                clean[k] = int(v)
        self.lattice = lattice
        self.coeffs = dict(sorted(clean.items()))

    def _check(self, other: "BurnsideElement"):
        if other.lattice is not self.lattice:
            raise LatticeMismatch("elements live over different lattices")

    def dense(self) -> list[int]:
        out = [0] * len(self.lattice)
        for k, v in self.coeffs.items():
            out[k] = v
        return out

    def __add__(self, other):
        if isinstance(other, int):
            other = other * self.lattice.one()
        self._check(other)
        c = dict(self.coeffs)
        for k, v in other.coeffs.items():
            c[k] = c.get(k, 0) + v
        return BurnsideElement(self.lattice, c)

    __radd__ = __add__

    def __neg__(self):
        return BurnsideElement(self.lattice, {k: -v for k, v in self.coeffs.items()})

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return BurnsideElement(self.lattice, {k: other * v for k, v in self.coeffs.items()})
        if isinstance(other, BurnsideElement):
            from .ring import mul
            return mul(self, other)
        return NotImplemented

    def __rmul__(self, other):
        if isinstance(other, int):
            return self * other
        return NotImplemented

    def __pow__(self, k: int):
        if k < 0:
            raise ValueError("negative power")
        result = self.lattice.one()
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other):
        if not isinstance(other, BurnsideElement):
            return NotImplemented
        return self.lattice is other.lattice and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(self.coeffs.items()))

    def __bool__(self):
        return bool(self.coeffs)

    def __str__(self):
        return format_element(self)

    def __repr__(self):
        return f"BurnsideElement({format_element(self)})"


def format_element(x: BurnsideElement) -> str:
    if not x.coeffs:
        return "0"
    parts = []
    for k, v in x.coeffs.items():
        term = f"{abs(v)}*[{x.lattice.labels[k]}]"
        if not parts:
            parts.append(term if v > 0 else "-" + term)
        else:
            parts.append(("+ " if v > 0 else "- ") + term)
    return " ".join(parts)


class GhostVector:
    """Integer class function on the lattice's classes."""

    __slots__ = ("lattice", "values")

    def __init__(self, lattice: SubgroupLattice, values: Sequence[int]):
        if len(values) != len(lattice):
            raise GroupError(f"ghost vector has length {len(values)}, expected {len(lattice)}")
        self.lattice = lattice
        self.values = tuple(int(v) for v in values)

    def _zip(self, other, op):
        if isinstance(other, int):
            return GhostVector(self.lattice, [op(a, other) for a in self.values])
        if other.lattice is not self.lattice:
            raise LatticeMismatch("ghost vectors over different lattices")
        return GhostVector(self.lattice, [op(a, b) for a, b in zip(self.values, other.values)])

    def __add__(self, other):
        return self._zip(other, lambda a, b: a + b)

    def __sub__(self, other):
        return self._zip(other, lambda a, b: a - b)

    def __mul__(self, other):
        return self._zip(other, lambda a, b: a * b)

    __rmul__ = __mul__

    def __getitem__(self, i):
        return self.values[i]

    def __len__(self):
        return len(self.values)

    def __eq__(self, other):
        if not isinstance(other, GhostVector):
            return NotImplemented
        return self.lattice is other.lattice and self.values == other.values

    def __hash__(self):
        return hash(self.values)

    def __repr__(self):
        return f"GhostVector({list(self.values)})"


def mark_vector(x: BurnsideElement) -> GhostVector:
    M = x.lattice.marks.entries
    n = len(M)
    out = [0] * n
    for h, c in x.coeffs.items():
        row = M[h]
        for k in range(h + 1):
            if row[k]:
                out[k] += c * row[k]
    return GhostVector(x.lattice, out)


def invert_marks(f: GhostVector) -> tuple[list[Fraction], bool]:
    """Exact rational preimage of f under the mark homomorphism."""
    c = solve_transposed_lower(f.lattice.marks.entries, f.values)
    return c, all(q.denominator == 1 for q in c)


def element_from_ghost(f: GhostVector) -> BurnsideElement:
    c, integral = invert_marks(f)
    if not integral:
        raise GroupError(f"ghost vector {list(f.values)} is not in the image of the mark map")
    return BurnsideElement(f.lattice, {k: int(q) for k, q in enumerate(c)})


def normalized_basis(L: SubgroupLattice) -> list[tuple[int, ...]]:
    """The functions phi([G/H]) / |W_G H|, which form a Z-basis of all class functions."""
    M = L.marks.entries
    return [tuple(v // L.weyl(h) for v in M[h]) for h in range(len(L))]
