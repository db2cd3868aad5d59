"""Seeded randomized property trials, shared by the ``selftest`` command."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .fsp_engine import FspConfig, FspSession, permute_blocks, stream
from .perm_core import (
    Permutation,
    TranspositionVector,
    perm_to_trans,
    perm_to_trans_counted,
    trans_to_perm,
)
from .prune_grow import (
    grow,
    head_of_inverse,
    predict_grown,
    predict_pruned,
    prune,
    split_is_inverse_pair,
)
from .spread import fold_distance, spread_brute

PRNG_NAME = "numpy.random.PCG64"


def make_rng(seed: int) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed))


def random_permutation(rng: np.random.Generator, n: int) -> Permutation:
    return Permutation(rng.permutation(n) + 1)


def random_taps(rng: np.random.Generator, n: int) -> TranspositionVector:
    # position j (one-based) may take 1..n-j+1
    highs = np.arange(n, 0, -1)
    return TranspositionVector(rng.integers(1, highs, endpoint=True))


@dataclass
class TrialResult:
    name: str
    cases: int = 0
    failures: int = 0

    @property
    def ok(self) -> bool:
        return self.failures == 0

    def line(self) -> str:
        return f"{'PASS' if self.ok else 'FAIL'} {self.name}: {self.cases} cases, {self.failures} failures"


def _run(name: str, cases, check: Callable) -> TrialResult:
    res = TrialResult(name)
    for case in cases:
        res.cases += 1
        if not check(case):
            res.failures += 1
    return res


def roundtrip(rng, sizes=(16, 64, 256, 512), trials=1000) -> TrialResult:
    def cases():
        for n in sizes:
            for _ in range(trials):
                yield random_permutation(rng, n), random_taps(rng, n)

    def check(case):
        p, t = case
        tp, count = perm_to_trans_counted(p)
        return (
            trans_to_perm(tp) == p
            and perm_to_trans(trans_to_perm(t)) == t
            and count <= len(p) * (len(p) + 1) // 2
        )

    return _run("conversion round trip", cases(), check)


def growth_and_pruning(rng, sizes=(8, 32, 128), trials=1000) -> TrialResult:
    def cases():
        for n in sizes:
            for _ in range(trials):
                yield random_taps(rng, n), int(rng.integers(1, n + 1, endpoint=True))

    def check(case):
        t, j = case
        p = trans_to_perm(t)
        grown_ok = predict_grown(p, j) == trans_to_perm(grow(t, j))
        pruned_ok = predict_pruned(p) == trans_to_perm(prune(t, 1))
        return grown_ok and pruned_ok

    return _run("growth/pruning prediction", cases(), check)


def inverse_partition(rng, sizes=(8, 64), trials=500) -> TrialResult:
    def cases():
        for n in sizes:
            for _ in range(trials):
                yield random_taps(rng, n)

    def check(t):
        return all(split_is_inverse_pair(t, s) for s in range(len(t)))

    return _run("inverse partition", cases(), check)


def spread_under_pruning(rng, sizes=(8, 32, 128), trials=1000) -> TrialResult:
    def cases():
        for n in sizes:
            for _ in range(trials):
                yield random_permutation(rng, n)

    def check(p1):
        return fold_case_holds(p1)

    return _run("spread under one-step pruning", cases(), check)


def fold_case_holds(p1: Permutation) -> bool:
    """Whether the spread case analysis holds for pruning ``p1`` by one tap."""
    before = spread_brute(p1.map)
    after = spread_brute(predict_pruned(p1).map)
    k = head_of_inverse(p1)
    if k == 1:
        return after >= before
    alpha = fold_distance(p1, k)
    return after == alpha if alpha < before else after >= before


def continuous_flow(rng, trials=100, max_n=64, blocks=3) -> TrialResult:
    def cases():
        for _ in range(trials):
            n = int(rng.integers(1, max_n, endpoint=True))
            t = random_taps(rng, n)
            yield t, rng.integers(0, 1 << 16, size=n * blocks).tolist()

    def check(case):
        t, data = case
        session = FspSession(t)
        out = []
        for s in data:
            out.extend(session.push(s))
        out.extend(session.flush())
        block_out, _ = stream(FspConfig(t, continuous=False), data)
        return (
            out == permute_blocks(t, data)
            and block_out == out
            and session.max_occupancy <= t.delay + 1
        )

    return _run("continuous flow", cases(), check)


def run_all(seed: int, scale: float = 1.0) -> list[TrialResult]:
    rng = make_rng(seed)
    n = lambda k: max(1, int(k * scale))  # noqa: E731
    return [
        roundtrip(rng, trials=n(1000)),
        growth_and_pruning(rng, trials=n(1000)),
        inverse_partition(rng, trials=n(500)),
        spread_under_pruning(rng, trials=n(1000)),
        continuous_flow(rng, trials=n(100)),
    ]
