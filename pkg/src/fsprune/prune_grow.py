"""Growing and pruning interleavers through their transposition vectors.

``grow`` and ``prune`` are the production operations (prepend a tap, drop a
prefix). ``predict_grown`` and ``predict_pruned`` rebuild the same results
from the permutation alone, through the index relations that prepending or
dropping one tap induces; they are kept as executable checks.
"""
from __future__ import annotations

from dataclasses import dataclass

from .perm_core import (
    Permutation,
    TranspositionVector,
    invert,
    perm_to_trans,
    trans_to_perm,
)


@dataclass(frozen=True)
class GrowthStep:
    j: int
    before: Permutation
    after: Permutation

    @classmethod
    def run(cls, before: Permutation, j: int) -> "GrowthStep":
        after = trans_to_perm(grow(perm_to_trans(before, indexed=True), j))
        return cls(j, before, after)


def grow(t: TranspositionVector, j: int) -> TranspositionVector:
    if not 1 <= j <= len(t) + 1:
        raise ValueError(f"prepended tap {j} must lie in 1..{len(t) + 1}")
    return TranspositionVector((j, *t.taps))


def prune(t: TranspositionVector, m: int) -> TranspositionVector:
    """Drop the first ``m`` taps."""
    if not 0 <= m < len(t):
        raise ValueError(f"cannot prune {m} taps from a vector of length {len(t)}")
    return TranspositionVector(t.taps[m:])


def predict_grown(p: Permutation, j: int) -> Permutation:
    """Permutation of ``grow(perm_to_trans(p), j)`` computed from ``p`` and ``j`` directly.

    The new first output is input ``j``. Every old output slot ``i`` moves to
    ``i + 1`` and its input label shifts up by one, except that label ``j - 1``
    (displaced by the opening swap) becomes label 1.
    """
    n = len(p)
    if not 1 <= j <= n + 1:
        raise ValueError(f"prepended tap {j} must lie in 1..{n + 1}")
    inv = invert(p).map
    out = [0] * (n + 1)
    out[0] = j
    for k in range(1, n + 1):
        pos = inv[k - 1] + 1
        out[pos - 1] = 1 if (j != 1 and k == j - 1) else k + 1
    return Permutation(out)


def head_of_inverse(p1: Permutation) -> int:
    """First tap of the inverse permutation's transposition vector.

    Computed through the full conversion on purpose; it equals ``invert(p1)(1)``.
    """
    return perm_to_trans(invert(p1))[0]


def predict_pruned(p1: Permutation) -> Permutation:
    """Permutation of ``prune(perm_to_trans(p1), 1)`` computed from ``p1`` directly."""
    n = len(p1) - 1
    if n < 1:
        raise ValueError("need a permutation of length at least 2 to prune")
    k = head_of_inverse(p1)
    m = p1.map
    out = [m[i + 1] - 1 for i in range(n)]  # pi_N(n) = pi_{N+1}(n+1) - 1
    if k != 1:
        out[k - 2] = m[0] - 1
    return Permutation(out)


def predict_pruned_by(p: Permutation, m: int) -> Permutation:
    """``m``-fold :func:`predict_pruned`."""
    if not 0 <= m < len(p):
        raise ValueError(f"cannot prune {m} taps from a permutation of length {len(p)}")
    for _ in range(m):
        p = predict_pruned(p)
    return p


def inverse_taps(t: TranspositionVector) -> TranspositionVector:
    """Transposition vector of the inverse permutation (the deinterleaver)."""
    return perm_to_trans(invert(trans_to_perm(t)), indexed=True)


def split_is_inverse_pair(t: TranspositionVector, split: int) -> bool:
    """Whether the suffixes after ``split`` taps of ``t`` and of its inverse are mutually inverse."""
    t1 = prune(t, split)
    t2 = prune(inverse_taps(t), split)
    return invert(trans_to_perm(t1)) == trans_to_perm(t2)
