"""Burnside ring arithmetic.

The default product goes through the ghost ring: multiply mark vectors
pointwise and solve back. Two independent routes exist for checking it,
the double coset formula and an explicit orbit decomposition of
G/H x G/K under the diagonal action.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Mapping

from .groups import (GroupError, conjugate, double_coset_reps, intersection, left_cosets,
                     is_prime, p_part)
from .lattice import (BurnsideElement, LatticeMismatch, SubgroupLattice,
                      invert_marks, mark_vector)


class NonIntegralProduct(ArithmeticError):
    """A ghost product failed to pull back to integers; always a bug."""


def _same_lattice(x: BurnsideElement, y: BurnsideElement):
    if x.lattice is not y.lattice:
        raise LatticeMismatch("elements live over different lattices")


def mul(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    _same_lattice(x, y)
    L = x.lattice
    if not x.coeffs or not y.coeffs:
        return L.zero()
    f = mark_vector(x) * mark_vector(y)
    c, integral = invert_marks(f)
    if not integral:
        raise NonIntegralProduct(f"ghost product {list(f.values)} has no integral preimage")
    return BurnsideElement(L, {k: int(q) for k, q in enumerate(c)})


def _bilinear(x: BurnsideElement, y: BurnsideElement, basis_product) -> BurnsideElement:
    _same_lattice(x, y)
    L = x.lattice
    acc: dict[int, int] = {}
    for i, a in x.coeffs.items():
        for j, b in y.coeffs.items():
            for k, v in basis_product(L, i, j).items():
                acc[k] = acc.get(k, 0) + a * b * v
    return BurnsideElement(L, acc)


def double_coset_product(L: SubgroupLattice, i: int, j: int) -> dict[int, int]:
    """[G/H][G/K] = sum over HgK of [G/(H ∩ gKg^-1)]."""
    G = L.group
    H, K = L.rep(i), L.rep(j)
    out: dict[int, int] = {}
    for g in double_coset_reps(G, H, K):
        J = intersection(H, conjugate(K, g))
        c = L.class_of(J)
        out[c] = out.get(c, 0) + 1
    return out


def orbit_product(L: SubgroupLattice, i: int, j: int) -> dict[int, int]:
    """n_J = number of G-orbits of type (J) in G/H x G/K, by direct enumeration."""
    G = L.group
    t = G.table
    H, K = L.rep(i), L.rep(j)
    cos_h = _coset_index(H)
    cos_k = _coset_index(K)
    reps_h = left_cosets(H)
    reps_k = left_cosets(K)
    nk = len(reps_k)
    npts = len(reps_h) * nk
    gens = G.whole.generators
    seen = [False] * npts
    out: dict[int, int] = {}
    for start in range(npts):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        while stack:
            pt = stack.pop()
            a, b = reps_h[pt // nk], reps_k[pt % nk]
            for g in gens:
                q = cos_h[t[g][a]] * nk + cos_k[t[g][b]]
                if not seen[q]:
                    seen[q] = True
                    stack.append(q)
        a, b = reps_h[start // nk], reps_k[start % nk]
        stab = [g for g in range(G.order)
                if cos_h[t[g][a]] == cos_h[a] and cos_k[t[g][b]] == cos_k[b]]
        c = L.class_of(G.subgroup(stab))
        out[c] = out.get(c, 0) + 1
    return out


def _coset_index(K) -> list[int]:
    """Map each element g to the index of its left coset gK."""
    G = K.group
    idx = [-1] * G.order
    for n, r in enumerate(left_cosets(K)):
        for k in K.members:
            idx[G.table[r][k]] = n
    return idx


def mul_oracle(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    """Product by the double coset formula, extended bilinearly."""
    return _bilinear(x, y, double_coset_product)


def mul_orbits(x: BurnsideElement, y: BurnsideElement) -> BurnsideElement:
    """Product by orbit decomposition of the Cartesian product."""
    return _bilinear(x, y, orbit_product)


def augmentation(x: BurnsideElement) -> int:
    """Mark at the trivial subgroup: sum of coeff * [G:H]."""
    G = x.lattice.group
    return sum(c * (G.order // x.lattice.order_of(h)) for h, c in x.coeffs.items())


# ---------------------------------------------------------------------------
# element literals:  3*[c1_o2] - 1*[trivial]

def parse_element(L: SubgroupLattice, text: str) -> BurnsideElement:
    """Parse terms like `3*[c1_o2] - 1*[trivial]`; a bare `0` is the zero element."""
    if text.strip() == "0":
        return L.zero()
    n = len(text)
    pos = 0

    def skip():
        nonlocal pos
        while pos < n and text[pos].isspace():
            pos += 1

    def fail(message):
        raise ElementSyntaxError(f"{message} at position {pos}", pos)

    coeffs: dict[int, int] = {}
    first = True
    skip()
    while pos < n:
        sign = 1
        if text[pos] in "+-":
            sign = -1 if text[pos] == "-" else 1
            pos += 1
            skip()
        elif not first:
            fail("expected '+' or '-'")
        k = 1
        if pos < n and text[pos].isdigit():
            start = pos
            while pos < n and text[pos].isdigit():
                pos += 1
            k = int(text[start:pos])
            skip()
            if pos >= n or text[pos] != "*":
                fail("expected '*'")
            pos += 1
            skip()
        if pos >= n or text[pos] != "[":
            fail("expected '['")
        close = text.find("]", pos)
        if close < 0:
            pos = n
            fail("unterminated '['")
        label = text[pos + 1:close].strip()
        try:
            idx = L.resolve(label)
        except GroupError as exc:
            raise ElementSyntaxError(str(exc), pos + 1) from None
        coeffs[idx] = coeffs.get(idx, 0) + sign * k
        pos = close + 1
        first = False
        skip()
    if first:
        raise ElementSyntaxError("empty element literal", 0)
    return BurnsideElement(L, coeffs)


class ElementSyntaxError(GroupError):
    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


# ---------------------------------------------------------------------------
# relation expressions: integers, names, + - * ^ and parentheses

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z0-9_]*)|(\S))")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    toks = []
    pos = 0
    text = text.replace("·", "*")
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == pos:
            break
        if m.group(1):
            toks.append(("int", m.group(1), m.start(1)))
        elif m.group(2):
            toks.append(("name", m.group(2), m.start(2)))
        elif m.group(3):
            if m.group(3) not in "+-*^()":
                raise ElementSyntaxError(f"unexpected character {m.group(3)!r}", m.start(3))
            toks.append(("op", m.group(3), m.start(3)))
        pos = m.end()
    toks.append(("end", "", len(text)))
    return toks


class _ExprParser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.toks[self.i]

    def take(self):
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def parse(self):
        node = self.sum()
        if self.peek()[0] != "end":
            raise ElementSyntaxError("unexpected token", self.peek()[2])
        return node

    def sum(self):
        node = self.product()
        while self.peek()[:2] in (("op", "+"), ("op", "-")):
            op = self.take()[1]
            node = (op, node, self.product())
        return node

    def product(self):
        node = self.power()
        while self.peek()[:2] == ("op", "*"):
            self.take()
            node = ("*", node, self.power())
        return node

    def power(self):
        node = self.atom()
        if self.peek()[:2] == ("op", "^"):
            self.take()
            tok = self.take()
            if tok[0] != "int":
                raise ElementSyntaxError("exponent must be an integer literal", tok[2])
            node = ("^", node, int(tok[1]))
        return node

    def atom(self):
        kind, val, pos = self.take()
        if kind == "int":
            return ("int", int(val))
        if kind == "name":
            return ("name", val, pos)
        if (kind, val) == ("op", "-"):
            return ("neg", self.atom())
        if (kind, val) == ("op", "("):
            node = self.sum()
            if self.take()[:2] != ("op", ")"):
                raise ElementSyntaxError("expected ')'", pos)
            return node
        raise ElementSyntaxError(f"unexpected token {val!r}", pos)


def parse_expression(text: str):
    return _ExprParser(text).parse()


def evaluate(node, L: SubgroupLattice, gens: Mapping[str, BurnsideElement]) -> BurnsideElement:
    kind = node[0]
    if kind == "int":
        return node[1] * L.one()
    if kind == "name":
        if node[1] not in gens:
            raise GroupError(f"unknown generator {node[1]!r}")
        return gens[node[1]]
    if kind == "neg":
        return -evaluate(node[1], L, gens)
    if kind == "^":
        return evaluate(node[1], L, gens) ** node[2]
    a = evaluate(node[1], L, gens)
    b = evaluate(node[2], L, gens)
    if kind == "+":
        return a + b
    if kind == "-":
        return a - b
    return mul(a, b)


@dataclass
class RelationSet:
    generators: dict[str, BurnsideElement]
    relations: list[str] = field(default_factory=list)

    def add(self, text: str):
        if text.count("=") != 1:
            raise ElementSyntaxError("a relation needs exactly one '='", 0)
        self.relations.append(text)
        return self


@dataclass
class RelationResult:
    relation: str
    passed: bool
    lhs: BurnsideElement
    rhs: BurnsideElement


@dataclass
class PresentationReport:
    name: str
    results: list[RelationResult]

    @property
    def all_passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[RelationResult]:
        return [r for r in self.results if not r.passed]


def verify_presentation(L: SubgroupLattice, R: RelationSet, name: str = "") -> PresentationReport:
    for g, x in R.generators.items():
        if x.lattice is not L:
            raise LatticeMismatch(f"generator {g!r} lives over a different lattice")
    results = []
    for rel in R.relations:
        left, right = rel.split("=")
        lhs = evaluate(parse_expression(left), L, R.generators)
        rhs = evaluate(parse_expression(right), L, R.generators)
        results.append(RelationResult(rel.strip(), lhs == rhs, lhs, rhs))
    return PresentationReport(name, results)


# ---------------------------------------------------------------------------
# the presentations listed for Sigma_3, Z/p^n and (Z/p)^2

def _classes_of_order(L: SubgroupLattice, order: int) -> list[int]:
    return [i for i in range(len(L)) if L.order_of(i) == order]


def symmetric3_relations(L: SubgroupLattice) -> RelationSet:
    G = L.group
    if G.order != 6 or G.is_abelian:
        raise GroupError("the Sigma_3 presentation needs the nonabelian group of order 6")
    gens = {"a": L.basis(_classes_of_order(L, 2)[0]),
            "b": L.basis(_classes_of_order(L, 3)[0]),
            "c": L.basis(0)}
    R = RelationSet(gens)
    for rel in ("a^2 = a + c", "b^2 = 2*b", "c^2 = 6*c", "a*b = c", "a*c = 3*c", "b*c = 2*c"):
        R.add(rel)
    return R


def cyclic_p_power_relations(L: SubgroupLattice) -> RelationSet:
    """a_i = [G / (Z/p^(n-i))] with a_i a_j = p^i a_j for j >= i."""
    G = L.group
    N = G.order
    ps = [p for p in range(2, N + 1) if is_prime(p) and N % p == 0]
    if len(ps) != 1 or p_part(N, ps[0]) != N or max(G.element_orders) != N:
        raise GroupError("the cyclic presentation needs a cyclic group of prime power order")
    p = ps[0]
    n = 0
    while p ** n < N:
        n += 1
    gens = {f"a{i}": L.basis(_classes_of_order(L, p ** (n - i))[0]) for i in range(1, n + 1)}
    R = RelationSet(gens)
    for i in range(1, n + 1):
        for j in range(i, n + 1):
            R.add(f"a{i}*a{j} = {p ** i}*a{j}")
    return R


def elementary_rank2_relations(L: SubgroupLattice) -> RelationSet:
    """a_i = [G/<(1,i)>] for 0 <= i < p, a_p = [G/<(0,1)>], b = [G/1]."""
    G = L.group
    N = G.order
    ps = [p for p in range(2, N + 1) if is_prime(p) and p * p == N]
    if not ps or not G.is_abelian or max(G.element_orders) != ps[0]:
        raise GroupError("the (Z/p)^2 presentation needs an elementary abelian group of rank 2")
    p = ps[0]
    keys = [((1, i) if i < p else (0, 1)) for i in range(p + 1)]
    if all(k in G.index for k in keys):
        lines = [L.class_of(G.subgroup([G.index[k]])) for k in keys]
    else:
        lines = _classes_of_order(L, p)
    gens = {f"a{i}": L.basis(c) for i, c in enumerate(lines)}
    gens["b"] = L.basis(0)
    R = RelationSet(gens)
    for i in range(p + 1):
        R.add(f"a{i}*b = {p}*b")
    R.add(f"b^2 = {p * p}*b")
    for i in range(p + 1):
        R.add(f"a{i}^2 = {p}*a{i}")
    for i in range(p + 1):
        for j in range(i + 1, p + 1):
            R.add(f"a{i}*a{j} = b")
    return R


def known_presentation(L: SubgroupLattice) -> tuple[str, RelationSet]:
    """Pick the listed presentation that applies to L's group, if any."""
    for name, build in (("Sigma_3", symmetric3_relations),
                        ("cyclic p-group", cyclic_p_power_relations),
                        ("(Z/p)^2", elementary_rank2_relations)):
        try:
            return name, build(L)
        except GroupError:
            continue
    raise GroupError("no listed presentation applies to this group")
