"""Concrete finite groups on indexed element sets, their subgroups, and the
counting primitives (normalizers, double cosets, fixed points) built on them.

Groups are realized by a full multiplication table over element indices.
Elements are sorted by a canonical key (image tuples for permutation groups,
mixed-radix coordinates for the abelian/dihedral/product families), so the
indexing of a given spec is reproducible.
"""

from __future__ import annotations

import hashlib
import math
import random
import re
from collections import deque
from dataclasses import dataclass
from functools import cached_property
from itertools import permutations, product
from typing import Callable, Hashable, Iterable, Sequence

DEFAULT_MAX_ORDER = 512


class GroupError(Exception):
    """Base class for domain errors raised by this package."""


class GroupSpecError(GroupError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.message = message
        self.position = position


class OrderCapExceeded(GroupError):
    pass


class NotASubgroup(GroupError):
    pass


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, math.isqrt(n) + 1))


def prime_divisors(n: int) -> list[int]:
    out = []
    d = 2
    while d * d <= n:
        if n % d == 0:
            out.append(d)
            while n % d == 0:
                n //= d
        d += 1
    if n > 1:
        out.append(n)
    return out


def totient(n: int) -> int:
    result = n
    for p in prime_divisors(n):
        result -= result // p
    return result


def p_part(n: int, p: int) -> int:
    """Largest power of p dividing n."""
    q = 1
    while n % p == 0:
        n //= p
        q *= p
    return q


def is_p_power(n: int, p: int) -> bool:
    return p_part(n, p) == n


class FiniteGroup:
    """A finite group given by its multiplication table on indices 0..n-1."""

    def __init__(self, keys: Sequence[Hashable], table: Sequence[Sequence[int]],
                 source_spec: str | None = None, factors: tuple | None = None):
        self.elements = tuple(keys)
        self.table = tuple(tuple(row) for row in table)
        self.source_spec = source_spec
        # (G1, G2) for direct products; element (i, j) sits at pair_index[i][j]
        self.factors = factors
        n = len(self.elements)
        if n == 0 or len(self.table) != n:
            raise GroupError("multiplication table does not match element set")
        self.index = {k: i for i, k in enumerate(self.elements)}
        ident = [e for e in range(n) if all(self.table[e][g] == g for g in range(n))]
        if len(ident) != 1:
            raise GroupError("no unique left identity")
        self.identity = ident[0]
        inv = [None] * n
        for g in range(n):
            row = self.table[g]
            for h in range(n):
                if row[h] == self.identity:
                    inv[g] = h
                    break
            else:
                raise GroupError(f"element {g} has no inverse")
        self.inverses = tuple(inv)

    @classmethod
    def from_operation(cls, keys: Iterable[Hashable], op: Callable, source_spec=None,
                       factors=None) -> "FiniteGroup":
        keys = sorted(set(keys))
        index = {k: i for i, k in enumerate(keys)}
        try:
            table = [[index[op(a, b)] for b in keys] for a in keys]
        except KeyError as exc:
            raise GroupError(f"element set is not closed: {exc}") from None
        return cls(keys, table, source_spec=source_spec, factors=factors)

    @property
    def order(self) -> int:
        return len(self.elements)

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        name = self.source_spec or "group"
        return f"FiniteGroup({name!r}, order={self.order})"

    def mul(self, a: int, b: int) -> int:
        return self.table[a][b]

    def inverse(self, a: int) -> int:
        return self.inverses[a]

    def conj(self, g: int, h: int) -> int:
        """g h g^-1"""
        return self.table[self.table[g][h]][self.inverses[g]]

    def commutator(self, a: int, b: int) -> int:
        t = self.table
        inv = self.inverses
        return t[t[t[a][b]][inv[a]]][inv[b]]

    @cached_property
    def element_orders(self) -> tuple[int, ...]:
        out = []
        for g in range(self.order):
            k, x = 1, g
            while x != self.identity:
                x = self.table[x][g]
                k += 1
            out.append(k)
        return tuple(out)

    @cached_property
    def is_abelian(self) -> bool:
        t = self.table
        return all(t[a][b] == t[b][a] for a in range(self.order) for b in range(a))

    @cached_property
    def digest(self) -> str:
        """sha256 of the multiplication table under the canonical element order."""
        h = hashlib.sha256()
        h.update(f"{self.order}:".encode())
        for row in self.table:
            h.update(",".join(map(str, row)).encode())
            h.update(b";")
        return h.hexdigest()

    def check_axioms(self, samples: int = 20000, seed: int = 0) -> bool:
        """Associativity, exhaustively up to order 64 and by sampling above."""
        t = self.table
        n = self.order
        if n <= 64:
            triples = product(range(n), repeat=3)
        else:
            rng = random.Random(seed)
            triples = ((rng.randrange(n), rng.randrange(n), rng.randrange(n))
                       for _ in range(samples))
        for a, b, c in triples:
            if t[t[a][b]][c] != t[a][t[b][c]]:
                return False
        e = self.identity
        return all(t[g][e] == g and t[e][g] == g and t[self.inverses[g]][g] == e
                   for g in range(n))

    def subgroup(self, gens: Iterable[int]) -> "Subgroup":
        return closure(self, gens)

    @cached_property
    def whole(self) -> "Subgroup":
        return Subgroup(self, range(self.order), generators=self._small_generating_set())

    @cached_property
    def trivial(self) -> "Subgroup":
        return Subgroup(self, [self.identity], generators=())

    def _small_generating_set(self) -> tuple[int, ...]:
        gens: list[int] = []
        members = {self.identity}
        for g in sorted(range(self.order), key=lambda x: -self.element_orders[x]):
            if g not in members:
                gens.append(g)
                members = set(_close(self, members, gens))
                if len(members) == self.order:
                    break
        return tuple(gens)


class Subgroup:
    """A subgroup of a FiniteGroup, stored as a sorted tuple of element indices."""

    __slots__ = ("group", "members", "generators", "mask")

    def __init__(self, group: FiniteGroup, members: Iterable[int],
                 generators: Iterable[int] | None = None):
        self.group = group
        self.members = tuple(sorted(set(members)))
        self.generators = tuple(generators) if generators is not None else self.members
        m = 0
        for x in self.members:
            m |= 1 << x
        self.mask = m

    @property
    def order(self) -> int:
        return len(self.members)

    def __len__(self):
        return len(self.members)

    def __contains__(self, g: int) -> bool:
        return (self.mask >> g) & 1 == 1

    def __iter__(self):
        return iter(self.members)

    def __eq__(self, other):
        if not isinstance(other, Subgroup):
            return NotImplemented
        return self.group is other.group and self.mask == other.mask

    def __hash__(self):
        return hash(self.mask)

    def __le__(self, other: "Subgroup") -> bool:
        return self.mask & ~other.mask == 0

    def __lt__(self, other: "Subgroup") -> bool:
        return self <= other and self.mask != other.mask

    def __repr__(self):
        return f"Subgroup(order={self.order}, members={list(self.members)})"

    def is_valid(self) -> bool:
        G = self.group
        if G.identity not in self:
            return False
        if G.order % self.order:
            return False
        t = G.table
        return all(t[a][b] in self and G.inverses[a] in self
                   for a in self.members for b in self.members)

    def as_group(self) -> tuple[FiniteGroup, tuple[int, ...]]:
        """Realize the subgroup as a standalone group.

        Returns the group and the inclusion map (sub index -> parent index).
        Sub elements keep the parent's keys, so the canonical order is inherited.
        """
        G = self.group
        pos = {g: i for i, g in enumerate(self.members)}
        table = [[pos[G.table[a][b]] for b in self.members] for a in self.members]
        keys = [G.elements[g] for g in self.members]
        spec = f"sub({G.source_spec})" if G.source_spec else None
        return FiniteGroup(keys, table, source_spec=spec), self.members


def _close(G: FiniteGroup, start: Iterable[int], gens: Sequence[int]) -> set[int]:
    table = G.table
    members = set(start)
    members.add(G.identity)
    frontier = list(members)
    while frontier:
        nxt = []
        for a in frontier:
            row = table[a]
            for g in gens:
                b = row[g]
                if b not in members:
                    members.add(b)
                    nxt.append(b)
        frontier = nxt
    return members


def closure(G: FiniteGroup, gens: Iterable[int], base: Subgroup | None = None) -> Subgroup:
    """The subgroup generated by gens (and base, if given)."""
    gens = list(dict.fromkeys(gens))
    for g in gens:
        if not 0 <= g < G.order:
            raise NotASubgroup(f"element index {g} out of range")
    if base is None:
        return Subgroup(G, _close(G, [G.identity], gens), generators=gens)
    all_gens = list(dict.fromkeys(list(base.generators) + gens))
    return Subgroup(G, _close(G, base.members, all_gens), generators=all_gens)


def _require_subgroup(G: FiniteGroup, *subs: Subgroup):
    for H in subs:
        if not isinstance(H, Subgroup) or H.group is not G:
            raise NotASubgroup("argument is not a subgroup of the given group")


def conjugate(H: Subgroup, g: int) -> Subgroup:
    """g H g^-1"""
    G = H.group
    return Subgroup(G, (G.conj(g, h) for h in H.members),
                    generators=[G.conj(g, h) for h in H.generators])


def normalizes(g: int, H: Subgroup) -> bool:
    G = H.group
    return all(G.conj(g, h) in H for h in H.generators)


def normalizer(H: Subgroup, within: Subgroup | None = None) -> Subgroup:
    G = H.group
    pool = within.members if within is not None else range(G.order)
    return Subgroup(G, [g for g in pool if normalizes(g, H)])


def is_normal(N: Subgroup, H: Subgroup) -> bool:
    """True when N is a normal subgroup of H."""
    return N <= H and all(normalizes(h, N) for h in H.generators)


def left_cosets(K: Subgroup) -> list[int]:
    """Smallest element of each left coset gK, in increasing order."""
    G = K.group
    seen = 0
    reps = []
    t = G.table
    for g in range(G.order):
        if (seen >> g) & 1:
            continue
        reps.append(g)
        row = t[g]
        for k in K.members:
            seen |= 1 << row[k]
    return reps


def intersection(H: Subgroup, K: Subgroup) -> Subgroup:
    return Subgroup(H.group, [h for h in H.members if h in K])


@dataclass(frozen=True)
class SubgroupClass:
    representative: Subgroup
    conjugates: tuple[Subgroup, ...]
    normalizer: Subgroup
    weyl_order: int

    @property
    def conjugates_count(self) -> int:
        return len(self.conjugates)

    @property
    def order(self) -> int:
        return self.representative.order


def check_order_cap(G: FiniteGroup, max_order: int | None):
    cap = DEFAULT_MAX_ORDER if max_order is None else max_order
    if G.order > cap:
        raise OrderCapExceeded(f"group order {G.order} exceeds cap {cap}")


def all_subgroup_classes(G: FiniteGroup, max_order: int | None = None) -> list[SubgroupClass]:
    """Conjugacy classes of subgroups, sorted by (order, representative members).

    Cyclic-extension enumeration: seed with the cyclic subgroups, then close
    <A, g> for class representatives A and cyclic generators g until no new
    class appears. Every subgroup is <A, g> for a proper subgroup A, so
    extending representatives only is enough up to conjugacy.
    """
    check_order_cap(G, max_order)
    n = G.order
    registry: dict[int, int] = {}
    found: list[tuple[Subgroup, tuple[Subgroup, ...]]] = []
    queue: deque[Subgroup] = deque()

    def register(S: Subgroup):
        if S.mask in registry:
            return
        conj: dict[int, Subgroup] = {}
        for g in range(n):
            C = conjugate(S, g)
            if C.mask not in conj:
                conj[C.mask] = C
        rep = min(conj.values(), key=lambda c: c.members)
        cid = len(found)
        for m in conj:
            registry[m] = cid
        found.append((rep, tuple(sorted(conj.values(), key=lambda c: c.members))))
        queue.append(rep)

    cyclic_gens = []
    seen_cyclic = set()
    for g in range(n):
        Z = closure(G, [g])
        if Z.mask not in seen_cyclic:
            seen_cyclic.add(Z.mask)
            cyclic_gens.append(g)
            register(Z)
    while queue:
        A = queue.popleft()
        for g in cyclic_gens:
            if g in A:
                continue
            B = closure(G, [g], base=A)
            if B.mask not in registry:
                register(B)

    classes = []
    for rep, conj in sorted(found, key=lambda rc: (rc[0].order, rc[0].members)):
        N = normalizer(rep)
        assert N.order * len(conj) == n
        classes.append(SubgroupClass(rep, conj, N, N.order // rep.order))
    return classes


def double_coset_reps(G: FiniteGroup, H: Subgroup, K: Subgroup) -> list[int]:
    """One representative (the smallest index) per double coset HgK."""
    _require_subgroup(G, H, K)
    t = G.table
    seen = 0
    reps = []
    for g in range(G.order):
        if (seen >> g) & 1:
            continue
        reps.append(g)
        for h in H.members:
            row = t[t[h][g]]
            for k in K.members:
                seen |= 1 << row[k]
    return reps


def fixed_point_count(G: FiniteGroup, H: Subgroup, K: Subgroup) -> int:
    """|(G/K)^H|, the number of cosets gK with H gK = gK."""
    _require_subgroup(G, H, K)
    t = G.table
    inv = G.inverses
    count = 0
    for g in left_cosets(K):
        gi = inv[g]
        # H fixes gK iff g^-1 H g <= K
        if all(t[t[gi][h]][g] in K for h in H.generators):
            count += 1
    return count


def p_residual(H: Subgroup, p: int) -> Subgroup:
    """Smallest normal subgroup of H with p-group quotient.

    It is generated by the elements of H of order prime to p.
    """
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    G = H.group
    orders = G.element_orders
    return closure(G, [h for h in H.members if orders[h] % p])


def derived_subgroup(H: Subgroup) -> Subgroup:
    G = H.group
    comms = {G.commutator(a, b) for a in H.generators for b in H.members}
    # normal closure in H of the generator commutators is the full derived subgroup
    D = closure(G, comms)
    while True:
        extra = [G.conj(h, d) for h in H.generators for d in D.generators if G.conj(h, d) not in D]
        if not extra:
            return D
        D = closure(G, extra, base=D)


def derived_series(H: Subgroup) -> list[Subgroup]:
    series = [H]
    while True:
        D = derived_subgroup(series[-1])
        if D == series[-1]:
            return series
        series.append(D)


def is_solvable(G: FiniteGroup | Subgroup) -> bool:
    H = G.whole if isinstance(G, FiniteGroup) else G
    return derived_series(H)[-1].order == 1


# ---------------------------------------------------------------------------
# group specs

_NAME = re.compile(r"[a-z]+")
_INT = re.compile(r"\d+")


class _SpecParser:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def error(self, message: str, pos: int | None = None):
        raise GroupSpecError(message, self.pos if pos is None else pos)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def skip_ws(self):
        while self.peek() == " ":
            self.pos += 1

    def expect(self, ch: str):
        if self.peek() != ch:
            self.error(f"expected {ch!r}")
        self.pos += 1

    def integer(self) -> int:
        m = _INT.match(self.text, self.pos)
        if not m:
            self.error("expected an integer")
        self.pos = m.end()
        return int(m.group())

    def at_integer_after_comma(self) -> bool:
        return self.peek() == "," and _INT.match(self.text, self.pos + 1) is not None

    def spec(self):
        start = self.pos
        m = _NAME.match(self.text, self.pos)
        if not m:
            self.error("expected a family name")
        name = m.group()
        self.pos = m.end()
        self.expect(":")
        if name in ("cyclic", "dihedral", "symmetric", "alternating", "quaternion"):
            at = self.pos
            n = self.integer()
            if name == "quaternion" and n != 8:
                self.error("quaternion: only order 8 is supported", at)
            if n < 1:
                self.error(f"{name}: parameter must be positive", at)
            return (name, n)
        if name == "elementary":
            at = self.pos
            p = self.integer()
            if not is_prime(p):
                self.error(f"elementary: {p} is not prime", at)
            self.expect(":")
            return (name, p, self.integer())
        if name == "abelian":
            dims = []
            while True:
                at = self.pos
                d = self.integer()
                if d < 1:
                    self.error("abelian: moduli must be positive", at)
                dims.append(d)
                if not self.at_integer_after_comma():
                    break
                self.pos += 1
            return (name, tuple(dims))
        if name == "perm":
            points = self.integer()
            self.expect(":")
            gens = [self.perm_generator()]
            while self.peek() == "," and self.text[self.pos + 1:self.pos + 2] == "(":
                self.pos += 1
                gens.append(self.perm_generator())
            return (name, points, tuple(gens))
        if name == "product":
            left = self.spec()
            self.expect(",")
            right = self.spec()
            return (name, left, right)
        self.error(f"unknown family {name!r}", start)

    def perm_generator(self):
        cycles = []
        if self.peek() != "(":
            self.error("expected '('")
        while self.peek() == "(":
            self.pos += 1
            self.skip_ws()
            cyc = []
            while self.peek() != ")":
                if not self.peek():
                    self.error("unterminated cycle")
                at = self.pos
                cyc.append((self.integer(), at))
                self.skip_ws()
                if self.peek() == ",":
                    self.pos += 1
                    self.skip_ws()
            self.pos += 1
            cycles.append(tuple(cyc))
        return tuple(cycles)


def _spec_order(node) -> int:
    kind = node[0]
    if kind == "cyclic":
        return node[1]
    if kind == "dihedral":
        return 2 * node[1]
    if kind == "symmetric":
        return math.factorial(node[1])
    if kind == "alternating":
        return max(1, math.factorial(node[1]) // 2)
    if kind == "quaternion":
        return 8
    if kind == "elementary":
        return node[1] ** node[2]
    if kind == "abelian":
        return math.prod(node[1])
    if kind == "product":
        return _spec_order(node[1]) * _spec_order(node[2])
    return 0  # perm: checked during closure


def _spec_text(node) -> str:
    kind = node[0]
    if kind == "elementary":
        return f"elementary:{node[1]}:{node[2]}"
    if kind == "abelian":
        return "abelian:" + ",".join(map(str, node[1]))
    if kind == "perm":
        gens = ",".join("".join("(" + " ".join(str(x) for x, _ in c) + ")" for c in g) or "()"
                        for g in node[2])
        return f"perm:{node[1]}:{gens}"
    if kind == "product":
        return f"product:{_spec_text(node[1])},{_spec_text(node[2])}"
    return f"{kind}:{node[1]}"


def _compose(a: tuple, b: tuple) -> tuple:
    """Permutation product a*b acting on the left: (a*b)(i) = a(b(i))."""
    return tuple(a[i] for i in b)


def _perm_closure(gens: list[tuple], degree: int, cap: int) -> set[tuple]:
    ident = tuple(range(degree))
    elems = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for a in frontier:
            for g in gens:
                b = _compose(a, g)
                if b not in elems:
                    elems.add(b)
                    nxt.append(b)
                    if len(elems) > cap:
                        raise OrderCapExceeded(f"permutation group order exceeds cap {cap}")
        frontier = nxt
    return elems


def _sign(perm: tuple) -> int:
    seen = [False] * len(perm)
    s = 1
    for i in range(len(perm)):
        if not seen[i]:
            j, length = i, 0
            while not seen[j]:
                seen[j] = True
                j = perm[j]
                length += 1
            if length % 2 == 0:
                s = -s
    return s


def _build(node, cap: int, parser: _SpecParser) -> FiniteGroup:
    kind = node[0]
    order = _spec_order(node)
    if order > cap:
        raise OrderCapExceeded(f"group order {order} exceeds cap {cap}")
    spec = _spec_text(node)
    if kind in ("cyclic", "abelian", "elementary"):
        if kind == "cyclic":
            dims = (node[1],)
        elif kind == "abelian":
            dims = node[1]
        else:
            if not is_prime(node[1]):
                raise GroupError(f"elementary: {node[1]} is not prime")
            dims = (node[1],) * node[2]
        if any(d < 1 for d in dims):
            raise GroupError(f"{kind}: moduli must be positive")
        keys = list(product(*(range(d) for d in dims)))
        return FiniteGroup.from_operation(
            keys, lambda a, b: tuple((x + y) % d for x, y, d in zip(a, b, dims)), spec)
    if kind == "dihedral":
        n = node[1]
        if n < 1:
            raise GroupError("dihedral: n must be positive")
        # (a, b) = r^a s^b, s r s = r^-1
        keys = list(product(range(n), range(2)))
        return FiniteGroup.from_operation(
            keys, lambda x, y: ((x[0] + (-1) ** x[1] * y[0]) % n, (x[1] + y[1]) % 2), spec)
    if kind == "quaternion":
        if node[1] != 8:
            raise GroupError("quaternion: only order 8 is supported")

        # (a, b) = x^a y^b with x^4 = 1, y^2 = x^2, y x y^-1 = x^-1
        def qmul(u, v):
            a = u[0] + (-1) ** u[1] * v[0]
            if u[1] and v[1]:
                a += 2
            return (a % 4, (u[1] + v[1]) % 2)
        return FiniteGroup.from_operation(product(range(4), range(2)), qmul, spec)
    if kind in ("symmetric", "alternating"):
        n = node[1]
        if n < 1:
            raise GroupError(f"{kind}: degree must be positive")
        perms = permutations(range(n))
        if kind == "alternating":
            perms = (q for q in perms if _sign(q) == 1)
        return FiniteGroup.from_operation(perms, _compose, spec)
    if kind == "perm":
        degree = node[1]
        gens = []
        for g in node[2]:
            img = list(range(degree))
            # cycles are composed right to left
            for cyc in reversed(g):
                pts = []
                for x, pos in cyc:
                    if not 1 <= x <= degree:
                        raise GroupSpecError(f"point {x} outside 1..{degree}", pos)
                    pts.append(x - 1)
                if len(set(pts)) != len(pts):
                    raise GroupSpecError("repeated point in cycle", cyc[0][1])
                step = {pts[i]: pts[(i + 1) % len(pts)] for i in range(len(pts))}
                img = [step.get(v, v) for v in img]
            gens.append(tuple(img))
        elems = _perm_closure(gens, degree, cap)
        return FiniteGroup.from_operation(elems, _compose, spec)
    if kind == "product":
        G1 = _build(node[1], cap, parser)
        G2 = _build(node[2], cap, parser)
        return direct_product(G1, G2, source_spec=spec)
    raise GroupSpecError(f"unknown family {kind!r}", 0)


def direct_product(G1: FiniteGroup, G2: FiniteGroup, source_spec: str | None = None) -> FiniteGroup:
    t1, t2 = G1.table, G2.table
    n2 = G2.order
    # keys are pairs of factor keys; factor order is lexicographic so index = i*n2 + j
    keys = [(a, b) for a in G1.elements for b in G2.elements]
    table = [[t1[i1][j1] * n2 + t2[i2][j2] for j1 in range(G1.order) for j2 in range(n2)]
             for i1 in range(G1.order) for i2 in range(n2)]
    spec = source_spec
    if spec is None and G1.source_spec and G2.source_spec:
        spec = f"product:{G1.source_spec},{G2.source_spec}"
    return FiniteGroup(keys, table, source_spec=spec, factors=(G1, G2))


def parse_group_spec(text: str, max_order: int | None = None) -> FiniteGroup:
    """Build a group from a spec string such as ``cyclic:6`` or ``perm:3:(1 2),(1 2 3)``."""
    cap = DEFAULT_MAX_ORDER if max_order is None else max_order
    parser = _SpecParser(text.strip())
    node = parser.spec()
    if parser.pos != len(parser.text):
        parser.error("unexpected trailing input")
    return _build(node, cap, parser)
