"""Intuitionistic fuzzy sub-hyperquasigroups: decision procedures and constructions.

Two independent deciders are provided.  :func:`check_ifsh` scans the four
defining conditions directly; :func:`check_ifsh_via_cuts` tests whether every
non-empty upper cut of ``mu`` and lower cut of ``lam`` is a
sub-hyperquasigroup.  They must always agree.
"""

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence, Tuple

from .errors import (
    ChainHypothesisViolated,
    ConstraintViolated,
    LengthMismatch,
    NotAHyperquasigroup,
    NotASubHyperquasigroup,
    ParameterOrderViolated,
)
from .grades import ONE, ZERO, grade
from .hyperstructures import (
    Hypergroupoid,
    Verdict,
    elements,
    format_subset,
    is_sub_hyperquasigroup,
)
from .ifs import LOWER, UPPER, IntuitionisticFuzzySet, characteristic, level_cut

IfshVerdict = Verdict

HOLDS = Verdict(True)


def _require_hq(h: Hypergroupoid):
    if not h.is_hyperquasigroup:
        x = h.report.witnesses["reproducibility"][0]
        raise NotAHyperquasigroup(f"reproducibility fails at x={x}")


def _require_carrier(h: Hypergroupoid, n: int):
    if n != h.order:
        raise LengthMismatch(f"fuzzy set has {n} grades but the carrier has order {h.order}")


def _solvers(h: Hypergroupoid):
    """For each (x, a): elements y with x in a o y, and elements z with x in z o a."""
    n = h.order
    t = h.table
    left = {}
    right = {}
    for x, a in product(range(n), repeat=2):
        left[x, a] = [y for y in range(n) if t[a][y] >> x & 1]
        right[x, a] = [z for z in range(n) if t[z][a] >> x & 1]
    return left, right


def _closure_min(h, mu):
    """Condition (1): min(mu x, mu y) <= min over x o y of mu."""
    n = h.order
    for x, y in product(range(n), repeat=2):
        floor = min(mu[x], mu[y])
        for z in elements(h.table[x][y]):
            if mu[z] < floor:
                return Verdict(
                    False, 1, (x, y),
                    f"condition 1 at x={x} y={y}: min={floor} > mu({z})={mu[z]}",
                )
    return None


def _closure_max(h, lam, label=3):
    """Condition (3): max over x o y of lam <= max(lam x, lam y)."""
    n = h.order
    for x, y in product(range(n), repeat=2):
        ceiling = max(lam[x], lam[y])
        for z in elements(h.table[x][y]):
            if lam[z] > ceiling:
                return Verdict(
                    False, label, (x, y),
                    f"condition {label} at x={x} y={y}: lambda({z})={lam[z]} > max={ceiling}",
                )
    return None


def check_ifsh(h: Hypergroupoid, a: IntuitionisticFuzzySet, shared_witness: bool = False) -> Verdict:
    """Decide the four IFSH conditions, in the order 1, 3, 2, 4.

    Conditions 2 and 4 each need some pair (y, z) with x in (a o y) and
    x in (z o a).  By default they are satisfied independently; with
    ``shared_witness`` one pair must serve both.
    """
    _require_hq(h)
    _require_carrier(h, len(a))
    mu, lam = a.mu, a.lam
    for failure in (_closure_min(h, mu), _closure_max(h, lam)):
        if failure is not None:
            return failure
    left, right = _solvers(h)
    n = h.order
    for x, e in product(range(n), repeat=2):
        lo = min(mu[e], mu[x])
        hi = max(lam[e], lam[x])
        ys, zs = left[x, e], right[x, e]
        if shared_witness:
            ok_y = any(mu[y] >= lo and lam[y] <= hi for y in ys)
            ok_z = any(mu[z] >= lo and lam[z] <= hi for z in zs)
            if not (ok_y and ok_z):
                return Verdict(False, 2, (x, e), f"no shared witness pair at x={x} a={e}")
            continue
        if not (any(mu[y] >= lo for y in ys) and any(mu[z] >= lo for z in zs)):
            return Verdict(False, 2, (x, e), f"condition 2 at x={x} a={e}: no y, z with mu >= {lo}")
    if not shared_witness:
        for x, e in product(range(n), repeat=2):
            hi = max(lam[e], lam[x])
            ys, zs = left[x, e], right[x, e]
            if not (any(lam[y] <= hi for y in ys) and any(lam[z] <= hi for z in zs)):
                return Verdict(
                    False, 4, (x, e), f"condition 4 at x={x} a={e}: no y, z with lambda <= {hi}"
                )
    return HOLDS


def check_fuzzy_subhq(h: Hypergroupoid, f: Sequence[Fraction]) -> Verdict:
    """The three-condition test for a single fuzzy set."""
    _require_hq(h)
    _require_carrier(h, len(f))
    failure = _closure_min(h, f)
    if failure is not None:
        return failure
    left, right = _solvers(h)
    n = h.order
    for x, e in product(range(n), repeat=2):
        lo = min(f[e], f[x])
        if not any(f[y] >= lo for y in left[x, e]):
            return Verdict(False, 2, (x, e), f"condition 2 at x={x} a={e}")
    for x, e in product(range(n), repeat=2):
        lo = min(f[e], f[x])
        if not any(f[z] >= lo for z in right[x, e]):
            return Verdict(False, 3, (x, e), f"condition 3 at x={x} a={e}")
    return HOLDS


def critical_thresholds(a: IntuitionisticFuzzySet) -> list:
    return sorted(set(a.mu) | set(a.lam) | {ZERO, ONE})


def level_cuts(a: IntuitionisticFuzzySet) -> list:
    """``(t, U(mu; t), L(lam; t))`` for every critical threshold, ascending in t."""
    return [(t, level_cut(a.mu, t, UPPER), level_cut(a.lam, t, LOWER)) for t in critical_thresholds(a)]


def check_ifsh_via_cuts(h: Hypergroupoid, a: IntuitionisticFuzzySet) -> Verdict:
    """Every non-empty U(mu; t) and L(lam; t) must be a sub-hyperquasigroup.

    A closure failure of an upper cut is reported as condition 1 and a
    reproducibility failure as condition 2; lower cuts map to 3 and 4.
    """
    _require_hq(h)
    _require_carrier(h, len(a))
    notes = ()
    if not set(a.mu) & set(a.lam):
        notes = ("Im(mu) and Im(lambda) are disjoint",)
    for t, upper, lower in level_cuts(a):
        for cut, name, codes in ((upper, "U(mu)", (1, 2)), (lower, "L(lambda)", (3, 4))):
            if not cut:
                continue
            sub = is_sub_hyperquasigroup(h, cut)
            if not sub:
                code = codes[0] if sub.condition == "closure" else codes[1]
                return Verdict(
                    False, code, sub.witness,
                    f"{name} at t={t} is {format_subset(cut)}, not a sub-hyperquasigroup: {sub.detail}",
                    notes,
                )
    return Verdict(True, notes=notes)


def _require_sub(h, k):
    k = h.subset_mask(k)
    sub = is_sub_hyperquasigroup(h, k)
    if not sub:
        raise NotASubHyperquasigroup(f"{format_subset(k)}: {sub.detail}")
    return k


def build_two_level(h: Hypergroupoid, k, a0, a1, b0, b1) -> IntuitionisticFuzzySet:
    """``mu = a0 on K, a1 off K``; ``lam = b0 on K, b1 off K``."""
    a0, a1, b0, b1 = map(grade, (a0, a1, b0, b1))
    if not a1 < a0:
        raise ParameterOrderViolated(f"need a1 < a0, got a1={a1}, a0={a0}")
    if not b0 < b1:
        raise ParameterOrderViolated(f"need b0 < b1, got b0={b0}, b1={b1}")
    if a0 + b0 > 1:
        raise ConstraintViolated(None, f"a0 + b0 = {a0 + b0} > 1")
    if a1 + b1 > 1:
        raise ConstraintViolated(None, f"a1 + b1 = {a1 + b1} > 1")
    k = _require_sub(h, k)
    inside = [bool(k >> x & 1) for x in range(h.order)]
    return IntuitionisticFuzzySet(
        tuple(a0 if i else a1 for i in inside), tuple(b0 if i else b1 for i in inside)
    )


def build_characteristic(h: Hypergroupoid, k) -> IntuitionisticFuzzySet:
    k = _require_sub(h, k)
    chi = characteristic(h.order, k)
    return IntuitionisticFuzzySet(chi, tuple(ONE - g for g in chi))


@dataclass(frozen=True)
class LevelChain:
    """Thresholds ``omega`` (strictly descending) with aligned subsets ``sets``."""

    omega: Tuple[Fraction, ...]
    sets: Tuple[int, ...]

    @classmethod
    def from_levels(cls, levels: Iterable) -> "LevelChain":
        """Build from ``(grade, mask)`` pairs in any order."""
        pairs = sorted(((grade(t), k) for t, k in levels), key=lambda p: p[0], reverse=True)
        return cls(tuple(t for t, _ in pairs), tuple(k for _, k in pairs))

    def validate(self, h: Hypergroupoid):
        if not self.omega:
            raise ChainHypothesisViolated("the threshold set must be non-empty")
        if len(self.omega) != len(self.sets):
            raise ChainHypothesisViolated("thresholds and subsets are not aligned")
        for hi, lo in zip(self.omega, self.omega[1:]):
            if not hi > lo:
                raise ChainHypothesisViolated(f"thresholds not strictly descending at {hi}, {lo}")
        union = 0
        for t, k in zip(self.omega, self.sets):
            k = h.subset_mask(k)
            union |= k
            if k == 0 or not is_sub_hyperquasigroup(h, k):
                raise ChainHypothesisViolated(
                    f"K_{t} = {format_subset(k)} is not a sub-hyperquasigroup"
                )
        if union != h.full:
            raise ChainHypothesisViolated(f"union of the chain is {format_subset(union)}, not G")
        for (t1, k1), (t2, k2) in zip(
            zip(self.omega, self.sets), zip(self.omega[1:], self.sets[1:])
        ):
            # strictly nested consecutive members give alpha > beta <=> K_alpha < K_beta
            if not (k1 & ~k2 == 0 and k1 != k2):
                raise ChainHypothesisViolated(
                    f"K_{t1} = {format_subset(k1)} is not a proper subset of K_{t2} = {format_subset(k2)}"
                )


def build_from_chain(h: Hypergroupoid, chain: LevelChain) -> IntuitionisticFuzzySet:
    """``mu(x) = max{t : x in K_t}``, ``lam(x) = min{t : x in K_t}``.

    Raises :class:`ConstraintViolated` when the pair breaks ``mu + lam <= 1``.
    """
    _require_hq(h)
    chain.validate(h)
    mu = []
    lam = []
    for x in range(h.order):
        levels = [t for t, k in zip(chain.omega, chain.sets) if k >> x & 1]
        mu.append(max(levels))
        lam.append(min(levels))
    for x in range(h.order):
        if mu[x] + lam[x] > 1:
            raise ConstraintViolated(
                x, f"mu({x}) + lambda({x}) = {mu[x]} + {lam[x]} > 1"
            )
    return IntuitionisticFuzzySet(tuple(mu), tuple(lam))
