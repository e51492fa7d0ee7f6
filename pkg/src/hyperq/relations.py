"""Level-cut equivalences on finite families of IFSHs and the equipotence check.

For a threshold ``alpha`` two IFSHs are related when their images under one
of the level maps agree:

* ``U``: upper cut of mu at alpha
* ``L``: lower cut of lambda at alpha
* ``I`` (relation ``R``): the intersection of the two
"""

from dataclasses import dataclass
from typing import Optional, Sequence

from .errors import AlphaOnBoundary, NotAnIfsh
from .grades import grade
from .hyperstructures import Hypergroupoid, enumerate_subs, format_subset
from .ifs import LOWER, UPPER, IntuitionisticFuzzySet, characteristic_ifs, level_cut, zero_ifs
from .ifsh import check_ifsh

RELATIONS = ("U", "L", "R")
_MAP_OF = {"U": "U", "L": "L", "R": "I"}


def level_map(a: IntuitionisticFuzzySet, alpha, kind: str) -> int:
    alpha = grade(alpha)
    if kind == "U":
        return level_cut(a.mu, alpha, UPPER)
    if kind == "L":
        return level_cut(a.lam, alpha, LOWER)
    if kind == "I":
        return level_cut(a.mu, alpha, UPPER) & level_cut(a.lam, alpha, LOWER)
    raise ValueError(f"unknown level map {kind!r}")


class IfshFamily:
    """A finite list of IF sets that all pass :func:`check_ifsh` on ``h``."""

    def __init__(self, h: Hypergroupoid, members: Sequence[IntuitionisticFuzzySet], check: bool = True):
        self.h = h
        self.members = list(members)
        if check:
            for i, a in enumerate(self.members):
                verdict = check_ifsh(h, a)
                if not verdict:
                    raise NotAnIfsh(f"member {i} is not an IFSH: {verdict.detail}")

    def __len__(self):
        return len(self.members)

    def __iter__(self):
        return iter(self.members)

    def __getitem__(self, i):
        return self.members[i]


@dataclass(frozen=True)
class FamilyPartition:
    class_of: tuple
    classes: tuple
    images: tuple  # level image of each class, aligned with ``classes``

    def __len__(self):
        return len(self.classes)


def classify(family, alpha, rel: str) -> FamilyPartition:
    """Group members by equal level image; classes appear in first-seen order."""
    if rel not in _MAP_OF:
        raise ValueError(f"unknown relation {rel!r}")
    kind = _MAP_OF[rel]
    seen = {}
    class_of = []
    classes = []
    images = []
    for i, a in enumerate(family):
        image = level_map(a, alpha, kind)
        if image not in seen:
            seen[image] = len(classes)
            classes.append([])
            images.append(image)
        c = seen[image]
        classes[c].append(i)
        class_of.append(c)
    return FamilyPartition(tuple(class_of), tuple(tuple(c) for c in classes), tuple(images))


def canonical_family(h: Hypergroupoid, limit: Optional[int] = None) -> IfshFamily:
    """``0~`` followed by ``K~`` for each sub-hyperquasigroup K in ascending order."""
    n = h.order
    members = [zero_ifs(n)] + [characteristic_ifs(n, k) for k in enumerate_subs(h, limit)]
    return IfshFamily(h, members)


@dataclass(frozen=True)
class RelationCheck:
    relation: str
    classes: int
    expected: int
    injective: bool
    surjective: bool

    @property
    def passed(self) -> bool:
        return self.injective and self.surjective and self.classes == self.expected


@dataclass(frozen=True)
class EquipotenceReport:
    alpha: object
    subs: int
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def lines(self):
        yield f"alpha={self.alpha} |S(G)|={self.subs}"
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            yield (
                f"{c.relation}: classes={c.classes} expected={c.expected} "
                f"injective={c.injective} surjective={c.surjective} {status}"
            )


def verify_equipotence(h: Hypergroupoid, alpha, limit: Optional[int] = None) -> EquipotenceReport:
    """Check that each quotient of the canonical family matches S(G) plus the empty set."""
    alpha = grade(alpha)
    if not 0 < alpha < 1:
        raise AlphaOnBoundary(f"alpha={alpha}; the equipotence statements need 0 < alpha < 1")
    subs = enumerate_subs(h, limit)
    family = canonical_family(h, limit)
    target = set(subs) | {0}
    checks = []
    for rel in RELATIONS:
        part = classify(family, alpha, rel)
        images = set(part.images)
        checks.append(
            RelationCheck(
                relation=rel,
                classes=len(part),
                expected=len(subs) + 1,
                injective=len(images) == len(part),
                surjective=images == target,
            )
        )
    return EquipotenceReport(alpha, len(subs), tuple(checks))


def describe_partition(part: FamilyPartition) -> list:
    return [
        f"class {c}: members {list(members)} image {format_subset(img)}"
        for c, (members, img) in enumerate(zip(part.classes, part.images))
    ]
