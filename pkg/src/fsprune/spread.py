"""Permutation spread and the quantities that track it under pruning.

The spread is ``min |p(n2) - p(n1)| + |n2 - n1|`` over distinct index pairs.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np

from .perm_core import Permutation
from .prune_grow import head_of_inverse

if TYPE_CHECKING:
    from .qpp import QppSpec


@dataclass(frozen=True)
class SpreadReport:
    spread: int
    argmin_pair: tuple[int, int]
    pair_count_at_min: int


def _values(p) -> np.ndarray:
    if isinstance(p, Permutation):
        return p.as_array()
    return np.asarray(p, dtype=np.int64)


def spread_value(p) -> int:
    """Minimum pair distance only; skips index gaps that cannot beat the best so far.

    A pair ``d`` indices apart scores at least ``d + 1``, so once ``d`` reaches
    the running minimum no wider gap can improve it.
    """
    v = _values(p)
    n = v.size
    if n < 2:
        raise ValueError("spread needs at least two points")
    best = n + 1
    d = 1
    while d < min(best, n):
        cand = int(np.abs(v[d:] - v[:-d]).min()) + d
        if cand < best:
            best = cand
        d += 1
    return best


def spread(p) -> SpreadReport:
    """Exact spread with the lexicographically smallest minimising pair ``(n1 < n2)``."""
    v = _values(p)
    best = spread_value(v)
    pairs = []
    for d in range(1, best):
        hits = np.flatnonzero(np.abs(v[d:] - v[:-d]) + d == best)
        pairs.extend((int(i) + 1, int(i) + 1 + d) for i in hits)
    pairs.sort()
    return SpreadReport(best, pairs[0], len(pairs))


def spread_brute(p) -> int:
    """Full O(N^2) pair matrix; the oracle for :func:`spread`."""
    v = _values(p)
    n = v.size
    if n < 2:
        raise ValueError("spread needs at least two points")
    idx = np.arange(n)
    dist = np.abs(v[:, None] - v[None, :]) + np.abs(idx[:, None] - idx[None, :])
    dist[idx, idx] = np.iinfo(np.int64).max
    return int(dist.min())


def fold_distance(p1: Permutation, k: int) -> int:
    """Smallest pair distance involving the point that one-step pruning folds.

    Minimises ``|p1(m+1) - p1(1)| + |m - k + 1|`` over ``m = 1..N``, ``m != k-1``,
    where ``k`` is the first tap of the inverse's transposition vector. Undefined
    for ``k == 1``, where pruning folds nothing.
    """
    if k == 1:
        raise ValueError("fold distance is undefined when the inverse's first tap is 1")
    v = p1.as_array()
    n = v.size - 1
    if not 2 <= k <= n + 1:
        raise ValueError(f"k={k} outside 2..{n + 1}")
    m = np.arange(1, n + 1)
    terms = np.abs(v[1:] - v[0]) + np.abs(m - k + 1)
    terms = np.delete(terms, k - 2)
    if terms.size == 0:
        raise ValueError("no admissible m for a length-2 permutation")
    return int(terms.min())


def fold_distance_of(p1: Permutation) -> int | None:
    """:func:`fold_distance` with ``k`` derived from ``p1``; ``None`` when ``k == 1``."""
    k = head_of_inverse(p1)
    return None if k == 1 else fold_distance(p1, k)


@dataclass(frozen=True)
class FoldProfile:
    l: np.ndarray  # noqa: E741
    g: np.ndarray
    excluded: np.ndarray  # True at l == n - 1, which the minimisation skips

    def minimum(self) -> int:
        return int(self.g[~self.excluded].min())


def fold_profile(spec: "QppSpec", n: int) -> FoldProfile:
    """``g(l) = |(l*h + l^2*b + c) mod K - c| + |l - n + 1|`` for ``l = 1..K-1``."""
    K, h, b, c = spec.length, spec.linear, spec.quadratic, spec.offset
    l = np.arange(1, K, dtype=np.int64)  # noqa: E741
    image = (l * (h % K) + (l * l % K) * (b % K) + c) % K
    g = np.abs(image - c) + np.abs(l - n + 1)
    return FoldProfile(l, g, l == n - 1)
