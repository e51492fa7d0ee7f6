"""Named fixtures, exhaustive enumeration and seeded random hypergroupoids."""

import random
from itertools import product
from typing import Iterator, Optional, Tuple

from .hyperstructures import Hypergroupoid, mask_of


def pair(n: int) -> Hypergroupoid:
    """x o y = {x, y}."""
    return Hypergroupoid(n, tuple(tuple(mask_of({x, y}) for y in range(n)) for x in range(n)))


def total(n: int) -> Hypergroupoid:
    """x o y = the whole carrier."""
    full = (1 << n) - 1
    return Hypergroupoid(n, tuple(tuple(full for _ in range(n)) for _ in range(n)))


def zgroup(n: int) -> Hypergroupoid:
    """x o y = {(x + y) mod n}."""
    return Hypergroupoid(n, tuple(tuple(1 << ((x + y) % n) for y in range(n)) for x in range(n)))


def block4() -> Hypergroupoid:
    """Blocks {0,1} and {2,3}; the product of two elements is the block of (b(x)+b(y)) mod 2."""
    blocks = (0b0011, 0b1100)
    return Hypergroupoid(
        4, tuple(tuple(blocks[(x // 2 + y // 2) % 2] for y in range(4)) for x in range(4))
    )


FIXTURES = {
    "PAIR(2)": lambda: pair(2),
    "PAIR(3)": lambda: pair(3),
    "PAIR(4)": lambda: pair(4),
    "TOTAL(2)": lambda: total(2),
    "TOTAL(3)": lambda: total(3),
    "ZGROUP(2)": lambda: zgroup(2),
    "ZGROUP(3)": lambda: zgroup(3),
    "ZGROUP(4)": lambda: zgroup(4),
    "BLOCK4": block4,
}


def all_hypergroupoids(n: int) -> Iterator[Hypergroupoid]:
    """Every table of order ``n`` with non-empty cells, (2^n - 1)^(n^2) of them."""
    cells = range(1, 1 << n)
    for flat in product(cells, repeat=n * n):
        yield Hypergroupoid(n, tuple(flat[i * n:(i + 1) * n] for i in range(n)))


def all_hyperquasigroups(n: int) -> Iterator[Hypergroupoid]:
    return (h for h in all_hypergroupoids(n) if h.is_hyperquasigroup)


def regular_closure(h: Hypergroupoid) -> Hypergroupoid:
    """Least regular hypergroupoid containing ``h`` cellwise.

    Whenever x in y o z, add y to x o z and z to y o x, until nothing changes.
    Cells only grow, so reproducibility is preserved.
    """
    n = h.order
    t = [list(row) for row in h.table]
    changed = True
    while changed:
        changed = False
        for x, y, z in product(range(n), repeat=3):
            if t[y][z] >> x & 1:
                if not t[x][z] >> y & 1:
                    t[x][z] |= 1 << y
                    changed = True
                if not t[y][x] >> z & 1:
                    t[y][x] |= 1 << z
                    changed = True
    return Hypergroupoid(n, tuple(tuple(row) for row in t))


def random_hyperquasigroup(
    order: int,
    seed: Optional[int] = None,
    regular: bool = False,
    rng: Optional[random.Random] = None,
    max_attempts: int = 1_000_000,
) -> Tuple[Hypergroupoid, int]:
    """Draw a reproducible table by rejection; return it with the attempt count.

    Each cell is a uniformly random non-empty subset.  With ``regular`` the
    accepted table is replaced by its :func:`regular_closure`.
    """
    if rng is None:
        rng = random.Random(seed)
    top = 1 << order
    for attempt in range(1, max_attempts + 1):
        table = tuple(tuple(rng.randrange(1, top) for _ in range(order)) for _ in range(order))
        h = Hypergroupoid(order, table)
        if h.is_hyperquasigroup:
            if regular:
                h = regular_closure(h)
            return h, attempt
    raise RuntimeError(f"no hyperquasigroup of order {order} after {max_attempts} draws")
