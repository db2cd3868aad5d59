"""Permutations and their transposition vectors.

Everything here is one-based at the API boundary: ``Permutation.map[i - 1]``
is the input index carried to output position ``i``, and a transposition
vector ``taps`` is read left to right, ``taps[0]`` executing first. A tap of
1 ejects the queue head unchanged; a tap of ``t`` swaps the head with the
element ``t - 1`` places behind it before ejecting.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence, TypeVar

import numpy as np

S = TypeVar("S")


class DomainError(ValueError):
    """Input that parses but violates a structural invariant."""


class InvalidPermutationError(DomainError):
    pass


class InvalidTapsError(DomainError):
    pass


def _as_int_tuple(values: Iterable[int]) -> tuple[int, ...]:
    return tuple(int(v) for v in values)


@dataclass(frozen=True)
class Permutation:
    """A bijection on ``{1..N}``; ``map[i-1]`` is the input index sent to output ``i``."""

    map: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        object.__setattr__(self, "map", _as_int_tuple(values))
        self._validate()

    def _validate(self) -> None:
        n = len(self.map)
        if n < 1:
            raise InvalidPermutationError("permutation must have at least one element")
        seen = [0] * (n + 1)
        for i, v in enumerate(self.map, start=1):
            if not 1 <= v <= n:
                raise InvalidPermutationError(
                    f"entry at index {i} is {v}, outside 1..{n}"
                )
            if seen[v]:
                raise InvalidPermutationError(
                    f"entry at index {i} repeats value {v} (first seen at index {seen[v]})"
                )
            seen[v] = i

    @classmethod
    def identity(cls, n: int) -> "Permutation":
        return cls(range(1, n + 1))

    def __len__(self) -> int:
        return len(self.map)

    def __call__(self, i: int) -> int:
        """Evaluate ``pi(i)`` with one-based ``i``."""
        if not 1 <= i <= len(self.map):
            raise IndexError(f"index {i} outside 1..{len(self.map)}")
        return self.map[i - 1]

    def __iter__(self):
        return iter(self.map)

    def as_array(self) -> np.ndarray:
        return np.asarray(self.map, dtype=np.int64)

    def __str__(self) -> str:
        return " ".join(map(str, self.map))


@dataclass(frozen=True)
class TranspositionVector:
    """Swap offsets driving a finite state permuter; ``1 <= taps[j-1] <= N-j+1``."""

    taps: tuple[int, ...]

    def __init__(self, values: Iterable[int]):
        object.__setattr__(self, "taps", _as_int_tuple(values))
        n = len(self.taps)
        for j, t in enumerate(self.taps, start=1):
            if not 1 <= t <= n - j + 1:
                raise InvalidTapsError(
                    f"tap at position {j} is {t}, must lie in 1..{n - j + 1}"
                )

    @classmethod
    def identity(cls, n: int) -> "TranspositionVector":
        return cls((1,) * n)

    def __len__(self) -> int:
        return len(self.taps)

    def __getitem__(self, idx):
        return self.taps[idx]

    def __iter__(self):
        return iter(self.taps)

    @property
    def delay(self) -> int:
        """Memory cells needed by the permuter: largest tap minus one."""
        return max(self.taps, default=1) - 1

    def __str__(self) -> str:
        return " ".join(map(str, self.taps))


def perm_to_trans_counted(p: Permutation) -> tuple[TranspositionVector, int]:
    """Reference conversion by linear search; also returns the comparison count.

    At step ``j`` the label buffer is scanned from ``j`` for the first slot
    holding ``p(j)``; the hit costs ``k - j + 1`` comparisons, so the total is
    bounded by ``N(N+1)/2``.
    """
    target = p.as_array()
    n = target.size
    v = np.arange(1, n + 1, dtype=np.int64)
    taps = [0] * n
    comparisons = 0
    for j in range(n):
        # vectorised form of the early-exit scan; the hit offset is the scan length
        off = int(np.argmax(v[j:] == target[j]))
        comparisons += off + 1
        taps[j] = off + 1
        k = j + off
        v[j], v[k] = v[k], v[j]
    return TranspositionVector(taps), comparisons


def perm_to_trans(p: Permutation, *, indexed: bool = False) -> TranspositionVector:
    """Transposition vector of ``p``.

    ``indexed=True`` keeps a position index of the label buffer and runs in
    O(N); the default is the linear-search reference path.
    """
    if not indexed:
        return perm_to_trans_counted(p)[0]
    n = len(p)
    v = list(range(1, n + 1))
    where = list(range(-1, n))  # where[x] = zero-based slot of label x
    taps = [0] * n
    for j, want in enumerate(p.map):
        k = where[want]
        taps[j] = k - j + 1
        a = v[j]
        v[j], v[k] = want, a
        where[want], where[a] = j, k
    return TranspositionVector(taps)


def trans_to_perm(t: TranspositionVector) -> Permutation:
    """Permutation realised by swapping the queue head as ``t`` dictates. O(N)."""
    p = list(range(1, len(t) + 1))
    for j, tap in enumerate(t.taps):
        k = j + tap - 1
        p[j], p[k] = p[k], p[j]
    return Permutation(p)


def invert(p: Permutation) -> Permutation:
    q = [0] * len(p)
    for i, v in enumerate(p.map, start=1):
        q[v - 1] = i
    return Permutation(q)


def apply(p: Permutation, symbols: Sequence[S]) -> list[S]:
    """Output position ``i`` receives input symbol ``p(i)``, in time order."""
    if len(symbols) != len(p):
        raise ValueError(f"expected {len(p)} symbols, got {len(symbols)}")
    return [symbols[v - 1] for v in p.map]
