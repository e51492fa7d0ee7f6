"""Finite products, the fundamental relation beta*, and the quotient quasigroup."""

from dataclasses import dataclass
from itertools import product
from typing import Sequence, Tuple

from .errors import IllDefinedProduct, LengthMismatch, NotALatinSquare
from .hyperstructures import Hypergroupoid, Verdict, elements
from .ifs import IntuitionisticFuzzySet

OPERATIONS = ("mult", "ldiv", "rdiv")
_SYMBOL = {"mult": "·", "ldiv": "\\", "rdiv": "/"}


@dataclass(frozen=True)
class Quasigroup:
    """A Latin square ``mult`` with its divisions.

    ``ldiv[x][y]`` is the z with ``x·z = y``; ``rdiv[x][y]`` the z with ``z·y = x``.
    """

    order: int
    mult: tuple
    ldiv: tuple
    rdiv: tuple

    @classmethod
    def from_mult(cls, mult: Sequence[Sequence[int]]) -> "Quasigroup":
        m = len(mult)
        mult = tuple(tuple(row) for row in mult)
        check_latin(mult)
        ldiv = [[0] * m for _ in range(m)]
        rdiv = [[0] * m for _ in range(m)]
        for x, z in product(range(m), repeat=2):
            # x·z = y gives x\y = z and y/z = x
            y = mult[x][z]
            ldiv[x][y] = z
            rdiv[y][z] = x
        return cls(m, mult, tuple(map(tuple, ldiv)), tuple(map(tuple, rdiv)))

    def __post_init__(self):
        m = self.order
        for name in OPERATIONS:
            table = getattr(self, name)
            if len(table) != m or any(len(row) != m for row in table):
                raise NotALatinSquare(f"{name} table is not {m}x{m}")
        check_latin(self.mult)
        for x, y in product(range(m), repeat=2):
            if self.mult[x][self.ldiv[x][y]] != y:
                raise NotALatinSquare(f"x·(x\\y) != y at x={x} y={y}", (x, y))
            if self.mult[self.rdiv[x][y]][y] != x:
                raise NotALatinSquare(f"(x/y)·y != x at x={x} y={y}", (x, y))

    def apply(self, op: str, x: int, y: int) -> int:
        return getattr(self, op)[x][y]


def check_latin(table: Sequence[Sequence[int]]):
    m = len(table)
    want = set(range(m))
    for x in range(m):
        if len(table[x]) != m or set(table[x]) != want:
            raise NotALatinSquare(f"row {x} is not a permutation", (x,))
    for y in range(m):
        if {table[x][y] for x in range(m)} != want:
            raise NotALatinSquare(f"column {y} is not a permutation", (y,))


def finite_products(h: Hypergroupoid) -> list:
    """Least family of subsets holding every singleton and closed under set product.

    Every parenthesised product splits into a product of two shorter ones, so
    the fixed point is exactly the set of values of all finite products.
    Returned as ascending masks.
    """
    family = {1 << x for x in range(h.order)}
    frontier = list(family)
    while frontier:
        members = list(family)
        fresh = []
        for u in frontier:
            for v in members:
                for w in (h.product(u, v), h.product(v, u)):
                    if w not in family:
                        family.add(w)
                        fresh.append(w)
        frontier = fresh
    return sorted(family)


class _UnionFind:
    def __init__(self, n):
        self.parent = list(range(n))

    def find(self, x):
        root = x
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[x] != root:
            self.parent[x], x = root, self.parent[x]
        return root

    def union(self, x, y):
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            # keep the smaller element as root so roots are least members
            if ry < rx:
                rx, ry = ry, rx
            self.parent[ry] = rx


@dataclass(frozen=True)
class Partition:
    """Classes of a carrier, numbered by increasing least member."""

    class_of: Tuple[int, ...]
    classes: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_class_of(cls, class_of: Sequence[int]) -> "Partition":
        groups = {}
        for x, c in enumerate(class_of):
            groups.setdefault(c, []).append(x)
        ordered = sorted(groups.values(), key=lambda g: g[0])
        relabel = {}
        for i, g in enumerate(ordered):
            for x in g:
                relabel[x] = i
        return cls(tuple(relabel[x] for x in range(len(class_of))), tuple(map(tuple, ordered)))

    def mask(self, c: int) -> int:
        m = 0
        for x in self.classes[c]:
            m |= 1 << x
        return m

    def __len__(self):
        return len(self.classes)


def beta_star(h: Hypergroupoid) -> Partition:
    """Transitive closure of "both lie in some finite product"."""
    uf = _UnionFind(h.order)
    for u in finite_products(h):
        members = elements(u)
        for x in members[1:]:
            uf.union(members[0], x)
    return Partition.from_class_of([uf.find(x) for x in range(h.order)])


def quotient(h: Hypergroupoid, part: Partition) -> Quasigroup:
    """Class product table, verified well-defined and Latin."""
    m = len(part)
    masks = [part.mask(c) for c in range(m)]
    mult = []
    for i in range(m):
        row = []
        for j in range(m):
            landed = {part.class_of[z] for z in elements(h.product(masks[i], masks[j]))}
            if len(landed) != 1:
                raise IllDefinedProduct((i, j), landed)
            row.append(landed.pop())
        mult.append(row)
    return Quasigroup.from_mult(mult)


@dataclass(frozen=True)
class FundamentalResult:
    partition: Partition
    quasigroup: Quasigroup
    is_regular: bool


def fundamental_quasigroup(h: Hypergroupoid) -> FundamentalResult:
    part = beta_star(h)
    return FundamentalResult(part, quotient(h, part), h.is_regular)


def check_if_subquasigroup(q: Quasigroup, a: IntuitionisticFuzzySet) -> Verdict:
    """Both inequalities for every pair and each of ·, \\ and /."""
    if len(a) != q.order:
        raise LengthMismatch(f"fuzzy set has {len(a)} grades but the quasigroup has order {q.order}")
    mu, lam = a.mu, a.lam
    for op in OPERATIONS:
        table = getattr(q, op)
        for x, y in product(range(q.order), repeat=2):
            z = table[x][y]
            if min(mu[x], mu[y]) > mu[z]:
                return Verdict(
                    False, 1, (x, y),
                    f"condition 1 at x={x} y={y} op {_SYMBOL[op]}: "
                    f"min={min(mu[x], mu[y])} > mu({z})={mu[z]}",
                )
            if lam[z] > max(lam[x], lam[y]):
                return Verdict(
                    False, 2, (x, y),
                    f"condition 2 at x={x} y={y} op {_SYMBOL[op]}: "
                    f"lambda({z})={lam[z]} > max={max(lam[x], lam[y])}",
                )
    return Verdict(True)


def pushforward(h: Hypergroupoid, a: IntuitionisticFuzzySet):
    """Push ``a`` onto the classes: max of mu and min of lambda over each class."""
    if len(a) != h.order:
        raise LengthMismatch(f"fuzzy set has {len(a)} grades but the carrier has order {h.order}")
    result = fundamental_quasigroup(h)
    classes = result.partition.classes
    mu = tuple(max(a.mu[x] for x in c) for c in classes)
    lam = tuple(min(a.lam[x] for x in c) for c in classes)
    return result, IntuitionisticFuzzySet(mu, lam)
