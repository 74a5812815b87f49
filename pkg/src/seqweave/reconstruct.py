"""Replay of the interleaver's decision process from its output alone.

Every scheduling decision depends only on symbols already emitted, so block
boundaries (lengths 2, 4, 8, ...), source indices, the full persistence
trajectory, and the per-index input prefixes can all be recovered from an
output prefix covering whole blocks.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .interleave import BlockRecord, InterleaverState, advance, index_at
from .periodicity import Symbol


class MalformedPrefixError(ValueError):
    """Raised when a prefix does not cover a whole number of blocks."""


@dataclass(frozen=True)
class ReplayTrace:
    """Reconstructed run: block records with symbols sliced from the
    output, plus the (source index, lock block, fundamental) of the final
    persistence state when the run ends locked.

    A run counts as locked only when the persistence flag survived at
    least one extension check (lock block earlier than the final block);
    a flag raised by the very last block was never tested and stays a
    tentative detection, visible in the records but not here.
    """

    records: list[BlockRecord]
    locked: tuple[int, int, tuple[Symbol, ...]] | None


@dataclass(frozen=True)
class RecoveredInput:
    """All symbols attributed to one source index, in draw order. For the
    locked index, ``periodic_tail`` is (preperiod within prefix, fundamental):
    the full input equals prefix[:preperiod] + fundamental repeated forever."""

    index: int
    prefix: tuple[Symbol, ...]
    periodic_tail: tuple[int, tuple[Symbol, ...]] | None


def block_count_of(length: int) -> int:
    """Number of whole blocks covered by a prefix of ``length`` symbols.

    Valid lengths are 2**(L+1) - 2 for L >= 1 (blocks have lengths
    2, 4, ..., 2**L)."""
    total = length + 2
    if length < 2 or total & (total - 1):
        low = 1 << max(total.bit_length() - 1, 2)
        raise MalformedPrefixError(
            f"prefix length {length} does not cover whole blocks; "
            f"nearest valid lengths are {low - 2} and {2 * low - 2}"
        )
    return total.bit_length() - 2


def replay(output_prefix: Sequence[Symbol]) -> ReplayTrace:
    """Reconstruct the unique trace a forward run would have produced for
    any family generating this output."""
    num_blocks = block_count_of(len(output_prefix))
    output = tuple(output_prefix)
    state = InterleaverState()
    records: list[BlockRecord] = []
    pos = 0
    for l in range(1, num_blocks + 1):
        record, state = advance(state, output[pos : pos + 2**l])
        records.append(record)
        pos += 2**l
    locked = None
    if state.P and state.h < num_blocks:
        locked = (index_at(state.k), state.h, state.S)
    return ReplayTrace(records, locked)


def recover_inputs(output_prefix: Sequence[Symbol]) -> list[RecoveredInput]:
    """Group the replayed blocks by source index, preserving draw order.

    When the run ends locked, the locked index's entry carries
    ``periodic_tail``: its pre-lock attribution length as preperiod and the
    persisting fundamental string, which together describe that input in
    its entirety."""
    trace = replay(output_prefix)
    prefixes: dict[int, list[Symbol]] = {}
    for record in trace.records:
        prefixes.setdefault(record.source_index, []).extend(record.symbols)
    tails: dict[int, tuple[int, tuple[Symbol, ...]]] = {}
    if trace.locked is not None:
        locked_index, lock_block, fundamental = trace.locked
        pre_len = sum(
            record.len
            for record in trace.records
            if record.source_index == locked_index and record.l < lock_block
        )
        tails[locked_index] = (pre_len, fundamental)
    return [
        RecoveredInput(i, tuple(prefixes[i]), tails.get(i))
        for i in sorted(prefixes)
    ]
