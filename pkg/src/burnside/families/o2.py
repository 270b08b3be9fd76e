"""The Burnside ring of O(2) = S^1 ⋊ Z/2.

Subgroups with finite Weyl group: the whole group, SO(2), and the dihedral
groups Z/n ⋊ Z/2 (n >= 1). The ring is spanned by 1, y = [O(2)/SO(2)] and
x_n = [O(2)/D_n]. Marks are evaluated lazily over that infinite index set.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from ..groups import GroupError, is_prime


@dataclass(frozen=True)
class O2Subgroup:
    kind: str            # "full", "so2", "dihedral", "rotation", "reflection"
    n: int | None = None

    KINDS = ("full", "so2", "dihedral", "rotation", "reflection")

    def __post_init__(self):
        if self.kind not in self.KINDS:
            raise ValueError(f"unknown O(2) subgroup kind {self.kind!r}")
        if self.kind in ("dihedral", "rotation"):
            if self.n is None or self.n < 1:
                raise ValueError(f"{self.kind} needs n >= 1")
        elif self.n is not None:
            raise ValueError(f"{self.kind} takes no parameter")

    @property
    def has_finite_weyl_group(self) -> bool:
        return self.kind in ("full", "so2", "dihedral")

    @property
    def weyl_order(self) -> int:
        if self.kind == "full":
            return 1
        if self.kind in ("so2", "dihedral"):
            return 2
        raise GroupError(f"{self} has infinite Weyl group")

    def __str__(self):
        return {"full": "O2", "so2": "SO2", "reflection": "Reflection"}.get(
            self.kind, f"{self.kind.capitalize()}({self.n})")


FULL = O2Subgroup("full")
SO2 = O2Subgroup("so2")


def dihedral(n: int) -> O2Subgroup:
    return O2Subgroup("dihedral", n)


def rotation(n: int) -> O2Subgroup:
    return O2Subgroup("rotation", n)


REFLECTION = O2Subgroup("reflection")


@dataclass(frozen=True)
class O2Element:
    unit: int = 0
    y: int = 0
    x: tuple[tuple[int, int], ...] = field(default_factory=tuple)   # sorted (n, coeff), coeff != 0

    @classmethod
    def make(cls, unit: int = 0, y: int = 0, x: dict[int, int] | None = None) -> "O2Element":
        x = x or {}
        if any(n < 1 for n in x):
            raise ValueError("x_n needs n >= 1")
        return cls(unit, y, tuple(sorted((n, c) for n, c in x.items() if c)))

    @property
    def xs(self) -> dict[int, int]:
        return dict(self.x)

    def __add__(self, other: "O2Element") -> "O2Element":
        xs = self.xs
        for n, c in other.x:
            xs[n] = xs.get(n, 0) + c
        return O2Element.make(self.unit + other.unit, self.y + other.y, xs)

    def __neg__(self):
        return O2Element.make(-self.unit, -self.y, {n: -c for n, c in self.x})

    def __sub__(self, other):
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            return O2Element.make(other * self.unit, other * self.y,
                                  {n: other * c for n, c in self.x})
        return o2_mul(self, other)

    __rmul__ = __mul__

    def __str__(self):
        terms = [(c, "1") for c in [self.unit] if c] + [(c, "y") for c in [self.y] if c]
        terms += [(c, f"x{n}") for n, c in self.x]
        if not terms:
            return "0"
        out = []
        for c, name in terms:
            body = f"{abs(c)}*{name}"
            out.append(("-" if c < 0 else "") + body if not out else ("- " if c < 0 else "+ ") + body)
        return " ".join(out)


ONE = O2Element.make(unit=1)
Y = O2Element.make(y=1)


def x(n: int) -> O2Element:
    return O2Element.make(x={n: 1})


def o2_mul(a: O2Element, b: O2Element) -> O2Element:
    """Bilinear product with 1 the unit, y^2 = 2y, x_n x_m = 2 x_gcd(n,m), x_n y = 0."""
    unit = a.unit * b.unit
    y = a.unit * b.y + a.y * b.unit + 2 * a.y * b.y
    xs: dict[int, int] = {}
    for n, c in a.x:
        xs[n] = xs.get(n, 0) + c * b.unit
    for n, c in b.x:
        xs[n] = xs.get(n, 0) + c * a.unit
    for n, c in a.x:
        for m, d in b.x:
            g = math.gcd(n, m)
            xs[g] = xs.get(g, 0) + 2 * c * d
    return O2Element.make(unit, y, xs)


def o2_basis_mark(basis: str | int, S: O2Subgroup) -> int:
    """|(O(2)/B)^S| for B = O(2) ("1"), SO(2) ("y"), or D_n (the integer n)."""
    if not S.has_finite_weyl_group:
        raise GroupError(f"{S} has infinite Weyl group; no mark is defined")
    if basis == "1":
        return 1
    if basis == "y":
        return 2 if S.kind == "so2" else 0
    if S.kind == "dihedral" and basis % S.n == 0:
        return 2
    return 0


def o2_mark(a: O2Element, S: O2Subgroup) -> int:
    total = a.unit * o2_basis_mark("1", S) + a.y * o2_basis_mark("y", S)
    return total + sum(c * o2_basis_mark(n, S) for n, c in a.x)


def o2_p_perfection(S: O2Subgroup, p: int) -> tuple[O2Subgroup, O2Subgroup]:
    """(S_p, S^p) for a subgroup of O(2).

    Rotation(n) and Reflection are first pushed to their torus-saturated
    class (SO(2) and D_1). For p = 2 every class lands on (SO(2), O(2)). For
    odd p, a dihedral group is generated by reflections, so it has no
    nontrivial p-quotient and its Weyl group has order 2: it is fixed.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    if S.kind == "rotation":
        S = SO2
    elif S.kind == "reflection":
        S = dihedral(1)
    if p == 2:
        return SO2, FULL
    return S, S


_O2_TERM = re.compile(r"\s*([+-])?\s*(?:(\d+)\s*\*\s*)?(1|y|x(\d+))\s*")


def parse_o2_element(text: str) -> O2Element:
    s = text.strip()
    if s == "0":
        return O2Element()
    if not s:
        raise GroupError("empty O(2) element")
    pos = 0
    acc = O2Element()
    first = True
    while pos < len(s):
        m = _O2_TERM.match(s, pos)
        if not m or m.end() == pos or (not first and m.group(1) is None):
            raise GroupError(f"cannot parse O(2) element at position {pos}")
        c = (-1 if m.group(1) == "-" else 1) * (int(m.group(2)) if m.group(2) else 1)
        if m.group(3) == "1":
            acc = acc + O2Element.make(unit=c)
        elif m.group(3) == "y":
            acc = acc + O2Element.make(y=c)
        else:
            n = int(m.group(4))
            if n < 1:
                raise GroupError("x_n needs n >= 1")
            acc = acc + O2Element.make(x={n: c})
        pos = m.end()
        first = False
    return acc


_SUB = re.compile(r"^(O2|full|SO2|so2|reflection|Reflection|(dihedral|rotation|D|C)\(?(\d+)\)?)$",
                  re.IGNORECASE)


def parse_o2_subgroup(text: str) -> O2Subgroup:
    t = text.strip()
    m = _SUB.match(t)
    if not m:
        raise GroupError(f"unknown O(2) subgroup {text!r}")
    if m.group(2):
        kind = m.group(2).lower()
        n = int(m.group(3))
        return dihedral(n) if kind in ("dihedral", "d") else rotation(n)
    low = t.lower()
    if low in ("o2", "full"):
        return FULL
    if low == "so2":
        return SO2
    return REFLECTION
