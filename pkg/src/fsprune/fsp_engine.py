"""Finite state permuter: a transposition vector run as a sliding queue.

Symbols enter the tail one per slot. Once the window holds ``delay + 1``
symbols, every slot swaps the head with the element ``tap - 1`` places in and
ejects the head. Taps never reach past the end of their block, so the window
can straddle two blocks and the flow never has to stop between them.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Any, Iterable, Sequence

from .perm_core import TranspositionVector, apply, trans_to_perm


class _Dummy:
    __slots__ = ()

    def __repr__(self) -> str:
        return "<dummy>"


DUMMY: Any = _Dummy()
"""Out-of-band filler symbol; never compares equal to a payload symbol."""


def delay(taps: TranspositionVector) -> int:
    return taps.delay


@dataclass(frozen=True)
class TraceStep:
    queue: tuple  # contents before the swap, head first
    tap: int
    ejected: Any


@dataclass
class FspTrace:
    steps: list[TraceStep] = field(default_factory=list)
    delay: int = 0

    def lines(self) -> Iterable[str]:
        for n, s in enumerate(self.steps, start=1):
            queue = " ".join(_fmt(x) for x in s.queue)
            yield f"{n}\t[{queue}]\t{s.tap}\t{_fmt(s.ejected)}"


def _fmt(x) -> str:
    if isinstance(x, bytes):
        return x.hex()
    return repr(x) if x is DUMMY else str(x)


@dataclass(frozen=True)
class FspConfig:
    taps: TranspositionVector
    continuous: bool = True

    @property
    def block_length(self) -> int:
        return len(self.taps)

    @property
    def delay(self) -> int:
        return self.taps.delay


@dataclass(frozen=True)
class DummyMask:
    """Sorted one-based input positions, within a block, that carry dummies."""

    positions: tuple[int, ...]
    block_length: int

    def __init__(self, positions: Iterable[int], block_length: int):
        pos = tuple(sorted(int(p) for p in positions))
        if len(set(pos)) != len(pos):
            raise ValueError("dummy mask contains duplicate positions")
        for p in pos:
            if not 1 <= p <= block_length:
                raise ValueError(f"dummy position {p} outside 1..{block_length}")
        object.__setattr__(self, "positions", pos)
        object.__setattr__(self, "block_length", int(block_length))

    def __len__(self) -> int:
        return len(self.positions)

    @property
    def payload_length(self) -> int:
        return self.block_length - len(self.positions)


class FspSession:
    """Stateful permuter; one writer at a time.

    ``push`` ingests one symbol and returns whatever is ejected in that slot
    (at most one symbol in steady state). ``flush`` drains the window at the
    end of the stream. ``retune`` swaps in a new transposition vector, allowed
    only when the ejection side sits on a block boundary.
    """

    def __init__(self, taps: TranspositionVector, *, trace: bool = False):
        if len(taps) == 0:
            raise ValueError("empty transposition vector")
        self._taps = taps.taps
        self._window = taps.delay + 1
        self._queue: deque = deque()
        self._slot = 0  # position of the next ejection within its block
        self.max_occupancy = 0
        self.trace = FspTrace(delay=taps.delay) if trace else None

    @property
    def at_block_boundary(self) -> bool:
        return self._slot == 0

    @property
    def occupancy(self) -> int:
        return len(self._queue)

    def retune(self, taps: TranspositionVector) -> None:
        if not self.at_block_boundary:
            raise RuntimeError("taps may only change at a block boundary")
        if len(taps) == 0:
            raise ValueError("empty transposition vector")
        self._taps = taps.taps
        self._window = taps.delay + 1
        if self.trace is not None:
            self.trace.delay = max(self.trace.delay, taps.delay)

    def _eject(self):
        q = self._queue
        tap = self._taps[self._slot]
        if self.trace is not None:
            before = tuple(q)
        if tap > 1:
            q[0], q[tap - 1] = q[tap - 1], q[0]
        out = q.popleft()
        if self.trace is not None:
            self.trace.steps.append(TraceStep(before, tap, out))
        self._slot = (self._slot + 1) % len(self._taps)
        return out

    def push(self, symbol) -> list:
        self._queue.append(symbol)
        self.max_occupancy = max(self.max_occupancy, len(self._queue))
        out = []
        # more than one ejection only happens right after retuning to a shorter window
        while len(self._queue) >= self._window:
            out.append(self._eject())
        return out

    def flush(self) -> list:
        if (self._slot + len(self._queue)) % len(self._taps):
            raise ValueError("stream ended inside a block")
        out = []
        while self._queue:
            out.append(self._eject())
        return out


def stream(
    config: FspConfig, symbols: Sequence, *, trace: bool = False
) -> tuple[list, FspTrace | None]:
    """Permute ``symbols`` block by block; returns the output and optional trace.

    In continuous mode one session carries over block boundaries. Block mode
    drains the window at every boundary. Both produce the same symbols.
    """
    n = config.block_length
    if len(symbols) < n:
        raise ValueError(f"input of {len(symbols)} symbols is shorter than one block ({n})")
    if len(symbols) % n:
        raise ValueError(
            f"input length {len(symbols)} is not a whole number of {n}-symbol blocks"
        )
    out: list = []
    if config.continuous:
        session = FspSession(config.taps, trace=trace)
        for s in symbols:
            out.extend(session.push(s))
        out.extend(session.flush())
        return out, session.trace
    merged = FspTrace(delay=config.delay) if trace else None
    for start in range(0, len(symbols), n):
        session = FspSession(config.taps, trace=trace)
        for s in symbols[start:start + n]:
            out.extend(session.push(s))
        out.extend(session.flush())
        if merged is not None:
            merged.steps.extend(session.trace.steps)
    return out, merged


def stream_with_dummies(config: FspConfig, payload: Sequence, mask: DummyMask) -> list:
    """Fill masked input slots with ``DUMMY``, permute, and drop dummies from the output.

    ``payload`` may hold several blocks of ``mask.payload_length`` symbols.
    """
    n = config.block_length
    if mask.block_length != n:
        raise ValueError(f"mask is for blocks of {mask.block_length}, taps have {n}")
    per_block = mask.payload_length
    if per_block == 0 or len(payload) == 0 or len(payload) % per_block:
        raise ValueError(
            f"payload length {len(payload)} is not a whole number of {per_block}-symbol blocks"
        )
    masked = set(mask.positions)
    full: list = []
    it = iter(payload)
    for _ in range(len(payload) // per_block):
        full.extend(DUMMY if i in masked else next(it) for i in range(1, n + 1))
    out, _ = stream(config, full)
    return [s for s in out if s is not DUMMY]


def permute_blocks(taps: TranspositionVector, symbols: Sequence) -> list:
    """Direct per-block application of the permutation; the streaming oracle."""
    p = trans_to_perm(taps)
    n = len(p)
    out: list = []
    for start in range(0, len(symbols), n):
        out.extend(apply(p, symbols[start:start + n]))
    return out


__all__ = [
    "DUMMY",
    "DummyMask",
    "FspConfig",
    "FspSession",
    "FspTrace",
    "TraceStep",
    "delay",
    "permute_blocks",
    "stream",
    "stream_with_dummies",
]
