"""Intuitionistic fuzzy sets over a finite carrier ``{0, ..., n-1}``.

A fuzzy set is a tuple of grades indexed by carrier element.  An
:class:`IntuitionisticFuzzySet` pairs a membership vector ``mu`` with a
non-membership vector ``lam`` and enforces ``mu[x] + lam[x] <= 1``.
"""

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence, Tuple

from .errors import ConstraintViolated, LengthMismatch
from .grades import ONE, ZERO, grade, grade_complement
from .hyperstructures import mask_of

FuzzySet = Tuple[Fraction, ...]

UPPER = "upper"
LOWER = "lower"


def fuzzy(values: Iterable) -> FuzzySet:
    return tuple(grade(v) for v in values)


def constant(n: int, value) -> FuzzySet:
    return (grade(value),) * n


def characteristic(n: int, k: int) -> FuzzySet:
    return tuple(ONE if k >> x & 1 else ZERO for x in range(n))


def complement(f: Sequence[Fraction]) -> FuzzySet:
    return tuple(grade_complement(g) for g in f)


@dataclass(frozen=True)
class IntuitionisticFuzzySet:
    mu: FuzzySet
    lam: FuzzySet

    def __post_init__(self):
        mu = fuzzy(self.mu)
        lam = fuzzy(self.lam)
        if len(mu) != len(lam):
            raise LengthMismatch(f"mu has {len(mu)} grades, lambda has {len(lam)}")
        for x, (m, l) in enumerate(zip(mu, lam)):
            if m + l > 1:
                raise ConstraintViolated(x, f"mu({x}) + lambda({x}) = {m + l} > 1")
        object.__setattr__(self, "mu", mu)
        object.__setattr__(self, "lam", lam)

    def __len__(self):
        return len(self.mu)

    def __and__(self, other):
        return combine(self, other, "intersect")

    def __or__(self, other):
        return combine(self, other, "union")

    def __le__(self, other):
        return ifs_subset(self, other)


IFS = IntuitionisticFuzzySet


def ifs_validate(mu: Sequence, lam: Sequence) -> IntuitionisticFuzzySet:
    return IntuitionisticFuzzySet(tuple(mu), tuple(lam))


def zero_ifs(n: int) -> IntuitionisticFuzzySet:
    """The empty IF set ``(0, 1)``."""
    return IntuitionisticFuzzySet(constant(n, 0), constant(n, 1))


def characteristic_ifs(n: int, k: int) -> IntuitionisticFuzzySet:
    """``K~ = (chi_K, complement of chi_K)``."""
    chi = characteristic(n, k)
    return IntuitionisticFuzzySet(chi, complement(chi))


def _same_length(a, b):
    if len(a) != len(b):
        raise LengthMismatch(f"carrier sizes differ: {len(a)} vs {len(b)}")


def combine(a: IntuitionisticFuzzySet, b: IntuitionisticFuzzySet, op: str) -> IntuitionisticFuzzySet:
    _same_length(a, b)
    if op == "intersect":
        return IntuitionisticFuzzySet(
            tuple(map(min, a.mu, b.mu)), tuple(map(max, a.lam, b.lam))
        )
    if op == "union":
        return IntuitionisticFuzzySet(
            tuple(map(max, a.mu, b.mu)), tuple(map(min, a.lam, b.lam))
        )
    raise ValueError(f"unknown operation {op!r}")


def ifs_subset(a: IntuitionisticFuzzySet, b: IntuitionisticFuzzySet) -> bool:
    _same_length(a, b)
    return all(ma <= mb for ma, mb in zip(a.mu, b.mu)) and all(
        la >= lb for la, lb in zip(a.lam, b.lam)
    )


def ifs_complement(a: IntuitionisticFuzzySet) -> IntuitionisticFuzzySet:
    return IntuitionisticFuzzySet(a.lam, a.mu)


def box(a: IntuitionisticFuzzySet) -> IntuitionisticFuzzySet:
    return IntuitionisticFuzzySet(a.mu, complement(a.mu))


def diamond(a: IntuitionisticFuzzySet) -> IntuitionisticFuzzySet:
    return IntuitionisticFuzzySet(complement(a.lam), a.lam)


_MODAL = {"complement": ifs_complement, "box": box, "diamond": diamond}


def modal(a: IntuitionisticFuzzySet, op: str) -> IntuitionisticFuzzySet:
    try:
        return _MODAL[op](a)
    except KeyError:
        raise ValueError(f"unknown modal operator {op!r}") from None


def level_cut(f: Sequence[Fraction], t, kind: str = UPPER) -> int:
    """Upper cut ``{x : f(x) >= t}`` or lower cut ``{x : f(x) <= t}`` as a mask (possibly 0)."""
    t = grade(t)
    if kind == UPPER:
        return mask_of(x for x, g in enumerate(f) if g >= t)
    if kind == LOWER:
        return mask_of(x for x, g in enumerate(f) if g <= t)
    raise ValueError(f"unknown cut kind {kind!r}")


def reconstruct(f: Sequence[Fraction], kind: str = UPPER) -> FuzzySet:
    """Recover ``f`` from its level cuts.

    Upper: ``x -> sup{t : x in U(f; t)}``; lower: ``x -> inf{t : x in L(f; t)}``.
    The cuts only change at image values, so the extremum over [0, 1] is the
    extremum over the image plus the boundary grade.
    """
    thresholds = sorted(set(f))
    if kind == UPPER:
        candidates = [ZERO] + thresholds
        cuts = [(t, level_cut(f, t, UPPER)) for t in candidates]
        return tuple(max(t for t, cut in cuts if cut >> x & 1) for x in range(len(f)))
    if kind == LOWER:
        candidates = thresholds + [ONE]
        cuts = [(t, level_cut(f, t, LOWER)) for t in candidates]
        return tuple(min(t for t, cut in cuts if cut >> x & 1) for x in range(len(f)))
    raise ValueError(f"unknown cut kind {kind!r}")
