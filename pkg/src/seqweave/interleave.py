"""Diagonal block interleaver over an indexed family of infinite streams.

Blocks of doubling length are drawn from the family along the diagonal
index schedule 1,2,1,2,3,1,2,3,4,... A persistence flag P tracks whether
the most recent block(s) repeat a fundamental string S: while P holds the
scheduler stays on the same source, otherwise it moves to the next index.
The resulting output stream is eventually periodic exactly when some input
stream is, and every decision depends only on symbols already emitted.
"""

from __future__ import annotations

from dataclasses import dataclass, replace
from math import isqrt
from typing import Callable, Iterator, NamedTuple

from .periodicity import FinitePeriodicity, Symbol, extends_with, minimal_period


class SequenceSource:
    """A deterministic, never-ending pull-based stream of int symbols.

    Subclasses implement ``take``; iteration pulls one symbol at a time so
    lazy consumers never over-consume.
    """

    def take(self, n: int) -> tuple[Symbol, ...]:
        """Remove and return the next ``n`` symbols."""
        raise NotImplementedError

    def __iter__(self) -> Iterator[Symbol]:
        while True:
            yield self.take(1)[0]


class Family:
    """Index-addressed collection of independent sources (indices >= 1).

    Sources are created on first touch via ``factory`` and each keeps its
    own cursor; ``consumed_count`` reports how many symbols each index has
    yielded so far.
    """

    def __init__(self, factory: Callable[[int], SequenceSource]):
        self._factory = factory
        self._sources: dict[int, SequenceSource] = {}
        self._consumed: dict[int, int] = {}

    def source_at(self, i: int) -> SequenceSource:
        if i < 1:
            raise ValueError("family indices start at 1")
        if i not in self._sources:
            self._sources[i] = self._factory(i)
            self._consumed[i] = 0
        return self._sources[i]

    def take(self, i: int, n: int) -> tuple[Symbol, ...]:
        block = tuple(self.source_at(i).take(n))
        if len(block) != n:
            raise RuntimeError(
                f"source {i} yielded {len(block)} symbols, expected {n}"
            )
        self._consumed[i] += n
        return block

    def consumed_count(self, i: int) -> int:
        return self._consumed.get(i, 0)

    def touched_indices(self) -> list[int]:
        return sorted(self._consumed)


def triangular(n: int) -> int:
    """n-th triangular number n(n+1)/2."""
    return n * (n + 1) // 2


def index_at(k: int) -> int:
    """Value of the diagonal index schedule 1,2,1,2,3,1,2,3,4,... at
    position k >= 1.

    With T_n <= k < T_{n+1} for triangular numbers T, the schedule value is
    k - T_n + 1.
    """
    if k < 1:
        raise ValueError("schedule positions start at 1")
    n = (isqrt(8 * k + 1) - 1) // 2
    return k - triangular(n) + 1


@dataclass(frozen=True)
class InterleaverState:
    """Live registers of a run.

    k: position in the diagonal index schedule.
    l: number of the next block to draw (block l has length 2**l).
    P: whether a detected periodicity is currently persisting.
    S: fundamental string being tracked while P holds.
    h: block number where the current S was first detected.
    run_len: length of the concatenated blocks h..l-1 while P holds.
    tail_window: last len(S) emitted symbols while P holds.
    """

    k: int = 1
    l: int = 1
    P: bool = False
    S: tuple[Symbol, ...] | None = None
    h: int | None = None
    run_len: int = 0
    tail_window: tuple[Symbol, ...] = ()


@dataclass(frozen=True)
class BlockRecord:
    """One emitted block with its provenance and post-decision state."""

    l: int
    len: int
    k_before: int
    source_index: int
    symbols: tuple[Symbol, ...]
    P_after: bool
    S_after: tuple[Symbol, ...] | None
    h_after: int | None


def advance(state: InterleaverState, block: tuple[Symbol, ...]) -> tuple[BlockRecord, InterleaverState]:
    """Apply the persistence decision for one drawn block.

    This is the decision kernel shared by forward runs and replay: it sees
    only the block symbols and the current registers, never the family.
    """
    if len(block) != 2 ** state.l:
        raise ValueError(f"block {state.l} must hold {2 ** state.l} symbols")
    if state.P:
        window = state.tail_window
        base = state.run_len
        offset = base - len(window)
        ok = extends_with(
            FinitePeriodicity(len(state.S), state.S),
            base,
            block,
            lambda j: window[j - offset],
        )
        if ok:
            s = len(state.S)
            tail = block[-s:] if len(block) >= s else (window + block)[-s:]
            new = replace(state, l=state.l + 1, run_len=base + len(block), tail_window=tail)
        else:
            new = replace(
                state,
                l=state.l + 1,
                k=state.k + 1,
                P=False,
                S=None,
                h=None,
                run_len=0,
                tail_window=(),
            )
    else:
        fp = minimal_period(block)
        if fp is not None:
            new = replace(
                state,
                l=state.l + 1,
                P=True,
                S=fp.fundamental,
                h=state.l,
                run_len=len(block),
                tail_window=block[-fp.period :],
            )
        else:
            new = replace(state, l=state.l + 1, k=state.k + 1)
    record = BlockRecord(
        l=state.l,
        len=len(block),
        k_before=state.k,
        source_index=index_at(state.k),
        symbols=block,
        P_after=new.P,
        S_after=new.S,
        h_after=new.h,
    )
    return record, new


def step(state: InterleaverState, family: Family) -> tuple[BlockRecord, InterleaverState]:
    """Draw block number state.l from the scheduled source and apply the
    persistence decision. The block is emitted unconditionally; only the
    registers react to the outcome."""
    block = family.take(index_at(state.k), 2 ** state.l)
    return advance(state, block)


def interleave(family: Family) -> Iterator[Symbol]:
    """Lazy output stream: the concatenation of all blocks of a run
    starting from the initial registers. Pulling N symbols draws exactly
    the blocks needed to cover them."""
    state = InterleaverState()
    while True:
        record, state = step(state, family)
        yield from record.symbols


class RunResult(NamedTuple):
    symbols: tuple[Symbol, ...]
    trace: list[BlockRecord]
    final: InterleaverState


def run_prefix(family: Family, num_blocks: int) -> RunResult:
    """Execute exactly ``num_blocks`` steps; the returned symbols have
    length 2**(num_blocks+1) - 2."""
    if num_blocks < 1:
        raise ValueError("num_blocks must be positive")
    state = InterleaverState()
    trace: list[BlockRecord] = []
    out: list[Symbol] = []
    for _ in range(num_blocks):
        record, state = step(state, family)
        trace.append(record)
        out.extend(record.symbols)
    return RunResult(tuple(out), trace, state)
