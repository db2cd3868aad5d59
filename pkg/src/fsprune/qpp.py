"""Quadratic permutation polynomial interleavers and lifted pruning.

A QPP of length ``K`` maps zero-based ``x`` to ``h*x + b*x^2 + c mod K``; in
one-based form ``pi(j) = ((j-1)*h + (j-1)^2*b + c mod K) + 1``.

Dropping ``M`` taps from a QPP keeps most points on the shifted curve
``pi_{K-M}(l) = pi_K(l + M) - M``. The handful of points folded off it wreck
the spread; lifting removes them by feeding dummies at their input slots.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from math import gcd
from typing import Sequence

import numpy as np

from .fsp_engine import DummyMask, FspConfig, stream_with_dummies
from .perm_core import DomainError, Permutation, apply, perm_to_trans, trans_to_perm
from .prune_grow import prune
from .spread import spread_value


def factorize(n: int) -> list[tuple[int, int]]:
    """Prime factorisation by trial division, as ``[(prime, power), ...]``."""
    if n < 1:
        raise ValueError("factorize needs a positive integer")
    out = []
    p = 2
    while p * p <= n:
        if n % p == 0:
            e = 0
            while n % p == 0:
                n //= p
                e += 1
            out.append((p, e))
        p += 1 if p == 2 else 2
    if n > 1:
        out.append((n, 1))
    return out


class QppCase(enum.Enum):
    CASE1 = "case1"
    CASE2 = "case2"
    INVALID = "invalid"


@dataclass(frozen=True)
class QppValidity:
    case: QppCase
    factorization: tuple[tuple[int, int], ...]
    diagnostics: str

    @property
    def valid(self) -> bool:
        return self.case is not QppCase.INVALID


@dataclass(frozen=True)
class QppSpec:
    length: int
    linear: int
    quadratic: int
    offset: int = 0

    def values(self) -> np.ndarray:
        """One-based images ``pi(1..K)``; not checked for bijectivity."""
        K = self.length
        x = np.arange(K, dtype=np.int64)
        return (x * (self.linear % K) + (x * x % K) * (self.quadratic % K) + self.offset) % K + 1


def classify(spec: QppSpec) -> tuple[QppCase, tuple[tuple[int, int], ...], list[str]]:
    K, h, b = spec.length, spec.linear, spec.quadratic
    fact = tuple(factorize(K))
    two_power = dict(fact).get(2, 0)
    odd = [p for p, _ in fact if p != 2]
    missing_odd = [p for p in odd if b % p]
    problems: list[str] = []
    if two_power == 1:
        if gcd(h, K // 2) != 1:
            problems.append(f"gcd(h={h}, K/2={K // 2}) = {gcd(h, K // 2)}, need 1")
        if (h + b) % 2 == 0:
            problems.append(f"h + b = {h + b} is even, need odd")
        if missing_odd:
            problems.append(f"b={b} lacks odd prime factor(s) {missing_odd} of K")
        return (QppCase.INVALID if problems else QppCase.CASE2), fact, problems
    if gcd(h, K) != 1:
        problems.append(f"gcd(h={h}, K={K}) = {gcd(h, K)}, need 1")
    if missing_odd:
        problems.append(f"b={b} lacks odd prime factor(s) {missing_odd} of K")
    if two_power >= 2 and b % 2:
        problems.append(f"4 divides K={K} so b={b} must be even")
    return (QppCase.INVALID if problems else QppCase.CASE1), fact, problems


def qpp_validate(spec: QppSpec) -> QppValidity:
    """Classify ``spec`` and confirm bijectivity of anything the classifier accepts."""
    if spec.length < 2:
        raise ValueError("QPP length must be at least 2")
    if not 0 <= spec.offset < spec.length:
        raise ValueError(f"offset {spec.offset} outside 0..{spec.length - 1}")
    case, fact, problems = classify(spec)
    if case is not QppCase.INVALID:
        if np.unique(spec.values()).size != spec.length:
            problems.append("classifier accepted a non-bijective map")
            case = QppCase.INVALID
        else:
            problems.append(f"{case.value}: all conditions hold")
    return QppValidity(case, fact, "; ".join(problems))


def qpp_generate(spec: QppSpec) -> Permutation:
    validity = qpp_validate(spec)
    if not validity.valid:
        raise DomainError(f"invalid QPP {spec}: {validity.diagnostics}")
    return Permutation(spec.values())


def qpp_taps(spec: QppSpec):
    return perm_to_trans(qpp_generate(spec), indexed=True)


def pruned_qpp(spec: QppSpec, m: int) -> Permutation:
    """Permutation left after dropping the first ``m`` taps of the QPP."""
    return trans_to_perm(prune(qpp_taps(spec), m))


def shifted_curve(spec: QppSpec, m: int) -> np.ndarray:
    """``pi_K(l + m) - m`` for ``l = 1..K-m``: where unfolded points of the pruned map sit."""
    return spec.values()[m:] - m


def identify_lifted(spec: QppSpec, m: int, pruned: Permutation | None = None):
    """Split the indices of the ``m``-pruned QPP into points on and off the shifted curve.

    Returns ``(surviving, lifted)`` as sorted one-based output positions.
    """
    K = spec.length
    if not 0 <= m < K:
        raise ValueError(f"truncation {m} outside 0..{K - 1}")
    if pruned is None:
        pruned = pruned_qpp(spec, m)
    on_curve = pruned.as_array() == shifted_curve(spec, m)
    idx = np.arange(1, K - m + 1)
    return tuple(int(i) for i in idx[on_curve]), tuple(int(i) for i in idx[~on_curve])


def compact(p: Permutation, lifted_inputs: Sequence[int]) -> Permutation:
    """Delete the points whose input index is lifted and rank-renumber both axes."""
    v = p.as_array()
    drop = np.zeros(v.size + 1, dtype=bool)
    li = np.asarray(list(lifted_inputs), dtype=np.int64)
    if li.size and (li.min() < 1 or li.max() > v.size):
        raise ValueError(f"lifted input positions must lie in 1..{v.size}")
    drop[li] = True
    kept = v[~drop[v]]
    # kept values are distinct, so the double argsort is their rank
    ranks = np.argsort(np.argsort(kept, kind="stable"), kind="stable") + 1
    return Permutation(ranks)


@dataclass(frozen=True)
class LiftedPrunedPermutation:
    mother: QppSpec
    truncation: int
    target_length: int
    surviving: tuple[int, ...]  # output positions of the pruned map kept
    lifted: tuple[int, ...]  # output positions removed
    dummy_positions: tuple[int, ...]  # input slots that receive dummies
    pruned: Permutation
    compacted: Permutation
    spread_before: int
    spread_on_survivors: int
    spread_after: int

    @property
    def actual_length(self) -> int:
        return len(self.compacted)

    @property
    def mask(self) -> DummyMask:
        return DummyMask(self.dummy_positions, self.target_length)

    def summary(self) -> dict:
        return {
            "K": self.mother.length,
            "h": self.mother.linear,
            "b": self.mother.quadratic,
            "c": self.mother.offset,
            "M": self.truncation,
            "target_length": self.target_length,
            "actual_length": self.actual_length,
            "lifted": len(self.lifted),
            "spread_before": self.spread_before,
            "spread_on_survivors": self.spread_on_survivors,
            "spread_after": self.spread_after,
        }


def prune_qpp_lifted(
    spec: QppSpec, m: int, *, check_payload: Sequence | None = None
) -> LiftedPrunedPermutation:
    """Prune by ``m`` taps, lift off-curve points, compact and measure spreads.

    When ``check_payload`` is given, the compacted map is also checked against
    the dummy-symbol streaming realisation on that payload.
    """
    pruned = pruned_qpp(spec, m)
    surviving, lifted = identify_lifted(spec, m, pruned)
    if not surviving:
        raise DomainError(f"every point of the {m}-pruned map is off the curve; nothing left to keep")
    pv = pruned.as_array()
    dummies = tuple(sorted(int(pv[i - 1]) for i in lifted))
    compacted = compact(pruned, dummies)
    n = len(pruned)
    kept = pv[np.asarray(surviving, dtype=np.int64) - 1]
    result = LiftedPrunedPermutation(
        mother=spec,
        truncation=m,
        target_length=n,
        surviving=surviving,
        lifted=lifted,
        dummy_positions=dummies,
        pruned=pruned,
        compacted=compacted,
        spread_before=spread_value(pv) if n > 1 else 0,
        spread_on_survivors=_spread_on_subset(np.asarray(surviving), kept),
        spread_after=spread_value(compacted) if len(compacted) > 1 else 0,
    )
    if check_payload is not None:
        config = FspConfig(prune(qpp_taps(spec), m))
        got = stream_with_dummies(config, list(check_payload), result.mask)
        if got != apply(compacted, list(check_payload)):
            raise AssertionError("dummy-symbol streaming disagrees with the compacted permutation")
    return result


def _spread_on_subset(idx: np.ndarray, vals: np.ndarray) -> int:
    """Spread over the given points in their original coordinates."""
    if idx.size < 2:
        return 0
    best = None
    for d in range(1, idx.size):
        gap = idx[d:] - idx[:-d]
        if best is not None and gap.min() >= best:
            break
        cand = int((np.abs(vals[d:] - vals[:-d]) + gap).min())
        best = cand if best is None else min(best, cand)
    return best
