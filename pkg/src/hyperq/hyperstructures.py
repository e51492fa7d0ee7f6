"""Finite hypergroupoids, their axioms, and sub-hyperquasigroups.

Carrier subsets are plain ``int`` bitmasks: bit ``i`` set means element ``i``
is a member.  A :class:`Hypergroupoid` stores its table as a tuple of rows of
such masks, so ``h.table[x][y]`` is the set ``x o y``.
"""

import os
from dataclasses import dataclass, field
from functools import cached_property
from itertools import product
from typing import Iterable, Optional, Sequence

from .errors import (
    EmptySubset,
    InvalidTable,
    NotASubHyperquasigroup,
    OrderLimitExceeded,
)

DEFAULT_LIMIT = 12


def mask_of(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        m |= 1 << e
    return m


def elements(mask: int) -> list:
    out = []
    i = 0
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


def format_subset(mask: int) -> str:
    return "{" + ",".join(map(str, elements(mask))) + "}"


def order_limit(limit: Optional[int] = None) -> int:
    """Resolve the enumeration cap: explicit argument, then $HYPERQ_LIMIT, then 12."""
    if limit is not None:
        return limit
    env = os.environ.get("HYPERQ_LIMIT")
    if env:
        return int(env)
    return DEFAULT_LIMIT


@dataclass(frozen=True)
class Verdict:
    """Outcome of a decision procedure.

    ``condition`` names the first failed condition (an int for numbered
    axioms) and ``witness`` the elements exhibiting it.  Truthiness is
    ``holds``.
    """

    holds: bool
    condition: Optional[object] = None
    witness: Optional[tuple] = None
    detail: str = ""
    notes: tuple = ()

    def __bool__(self):
        return self.holds


@dataclass(frozen=True)
class AxiomReport:
    is_hypergroupoid: bool
    is_hyperquasigroup: bool
    is_hypergroup: bool
    is_regular: bool
    is_associative: bool
    witnesses: dict = field(default_factory=dict)


@dataclass(frozen=True)
class Hypergroupoid:
    order: int
    table: tuple

    def __post_init__(self):
        n = self.order
        if n < 1:
            raise InvalidTable("order must be at least 1")
        table = tuple(tuple(int(c) for c in row) for row in self.table)
        if len(table) != n or any(len(row) != n for row in table):
            raise InvalidTable(f"table must be {n}x{n}")
        full = (1 << n) - 1
        for x, y in product(range(n), repeat=2):
            cell = table[x][y]
            if cell == 0:
                raise InvalidTable(f"cell ({x}, {y}) is empty")
            if cell & ~full:
                raise InvalidTable(f"cell ({x}, {y}) names an element >= {n}")
        object.__setattr__(self, "table", table)

    @classmethod
    def from_sets(cls, cells: Sequence[Sequence[Iterable[int]]]) -> "Hypergroupoid":
        """Build from nested lists of element collections: ``cells[x][y] = x o y``."""
        return cls(len(cells), tuple(tuple(mask_of(c) for c in row) for row in cells))

    @property
    def full(self) -> int:
        return (1 << self.order) - 1

    def op(self, x: int, y: int) -> int:
        return self.table[x][y]

    def product(self, a: int, b: int) -> int:
        """Set product ``A o B`` of two carrier subsets."""
        out = 0
        xs = elements(a)
        ys = elements(b)
        for x in xs:
            row = self.table[x]
            for y in ys:
                out |= row[y]
        return out

    def left(self, x: int, k: int) -> int:
        """``x o K``."""
        return self.product(1 << x, k)

    def right(self, k: int, x: int) -> int:
        """``K o x``."""
        return self.product(k, 1 << x)

    @cached_property
    def report(self) -> AxiomReport:
        return check_axioms(self)

    @property
    def is_hyperquasigroup(self) -> bool:
        return self.report.is_hyperquasigroup

    @property
    def is_regular(self) -> bool:
        return self.report.is_regular

    def subset_mask(self, k) -> int:
        """Accept a mask or an iterable of elements; reject out-of-carrier bits."""
        mask = k if isinstance(k, int) else mask_of(k)
        if mask < 0 or mask & ~self.full:
            raise InvalidTable(f"subset {k!r} is not inside the carrier of order {self.order}")
        return mask


def _reproducibility_witness(h: Hypergroupoid) -> Optional[tuple]:
    full = h.full
    for x in range(h.order):
        if h.left(x, full) != full or h.right(full, x) != full:
            return (x,)
    return None


def _associativity_witness(h: Hypergroupoid) -> Optional[tuple]:
    n = h.order
    for x, y, z in product(range(n), repeat=3):
        if h.product(1 << x, h.table[y][z]) != h.product(h.table[x][y], 1 << z):
            return (x, y, z)
    return None


def _regularity_witness(h: Hypergroupoid) -> Optional[tuple]:
    n = h.order
    t = h.table
    for x, y, z in product(range(n), repeat=3):
        if t[y][z] >> x & 1 and not (t[x][z] >> y & 1 and t[y][x] >> z & 1):
            return (x, y, z)
    return None


def check_axioms(h: Hypergroupoid) -> AxiomReport:
    """Decide reproducibility, associativity and regularity of ``h``.

    Each witness is the first counterexample in lexicographic order:
    ``(x,)`` for reproducibility, ``(x, y, z)`` for the other two.
    """
    witnesses = {}
    repro = _reproducibility_witness(h)
    assoc = _associativity_witness(h)
    reg = _regularity_witness(h)
    if repro is not None:
        witnesses["reproducibility"] = repro
    if assoc is not None:
        witnesses["associativity"] = assoc
    if reg is not None:
        witnesses["regularity"] = reg
    is_hq = repro is None
    return AxiomReport(
        is_hypergroupoid=True,
        is_hyperquasigroup=is_hq,
        is_hypergroup=is_hq and assoc is None,
        is_regular=reg is None,
        is_associative=assoc is None,
        witnesses=witnesses,
    )


def is_sub_hyperquasigroup(h: Hypergroupoid, k) -> Verdict:
    """Closure ``x o y <= K`` for x, y in K, then ``a o K = K = K o a`` for a in K."""
    k = h.subset_mask(k)
    if k == 0:
        raise EmptySubset("a sub-hyperquasigroup must be non-empty")
    members = elements(k)
    for x in members:
        row = h.table[x]
        for y in members:
            if row[y] & ~k:
                return Verdict(
                    False, "closure", (x, y),
                    f"{x}o{y}={format_subset(row[y])} not inside {format_subset(k)}",
                )
    for a in members:
        if h.left(a, k) != k:
            return Verdict(False, "reproducibility", (a,), f"{a}oK != K for K={format_subset(k)}")
        if h.right(k, a) != k:
            return Verdict(False, "reproducibility", (a,), f"Ko{a} != K for K={format_subset(k)}")
    return Verdict(True)


def enumerate_subs(h: Hypergroupoid, limit: Optional[int] = None) -> list:
    """All sub-hyperquasigroups of ``h`` as masks, ascending."""
    cap = order_limit(limit)
    if h.order > cap:
        raise OrderLimitExceeded(f"order {h.order} exceeds enumeration limit {cap}")
    return [k for k in range(1, 1 << h.order) if is_sub_hyperquasigroup(h, k).holds]


def restrict(h: Hypergroupoid, k) -> Hypergroupoid:
    """Induced hyperquasigroup on ``K``; element ``i`` of the result is the i-th smallest of K."""
    k = h.subset_mask(k)
    if k == 0:
        raise EmptySubset("cannot restrict to the empty set")
    verdict = is_sub_hyperquasigroup(h, k)
    if not verdict:
        raise NotASubHyperquasigroup(f"{format_subset(k)}: {verdict.detail}")
    members = elements(k)
    index = {e: i for i, e in enumerate(members)}

    def relabel(mask):
        return mask_of(index[e] for e in elements(mask))

    return Hypergroupoid(
        len(members),
        tuple(tuple(relabel(h.table[x][y]) for y in members) for x in members),
    )
