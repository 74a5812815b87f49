"""Exact periodicity analysis of finite symbol tuples and stream prefixes.

Two notions live here:

* shift periodicity of a finite tuple: the minimal k < n such that the
  tuple matches itself under a left shift by k (any k works on the
  overlap, no divisibility required), together with the length-k
  fundamental string;
* eventual periodicity of a prefix: a preperiod r and period m such that
  the prefix is m-shift-invariant from position r onward.

Symbols are plain Python ints, so everything is exact at any magnitude.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass
from typing import Callable, Sequence

Symbol = int


@dataclass(frozen=True)
class FinitePeriodicity:
    """Minimal shift period of a finite tuple.

    ``period`` is the smallest k < n under which the tuple matches its own
    k-shift on the overlap; ``fundamental`` is the first ``period`` symbols.
    """

    period: int
    fundamental: tuple[Symbol, ...]


@dataclass(frozen=True)
class EventualPeriodicity:
    """Periodic tail of a finite prefix: symbols repeat with ``period``
    from position ``preperiod`` onward; ``fundamental`` is the repeating
    block as it first appears."""

    preperiod: int
    period: int
    fundamental: tuple[Symbol, ...]


def _longest_border(t: Sequence[Symbol]) -> int:
    """Length of the longest proper prefix of ``t`` that is also a suffix
    (classic failure-function computation)."""
    n = len(t)
    pi = [0] * n
    k = 0
    for q in range(1, n):
        tq = t[q]
        while k and t[k] != tq:
            k = pi[k - 1]
        if t[k] == tq:
            k += 1
        pi[q] = k
    return pi[-1] if n else 0


def minimal_period(t: Sequence[Symbol]) -> FinitePeriodicity | None:
    """Minimal shift period of a nonempty tuple, or None when no shift
    k < n matches.

    The minimal shift period equals n minus the longest proper border:
    a shift by k matches on the overlap exactly when the length-(n-k)
    prefix equals the length-(n-k) suffix. Tuples of length 1 never
    qualify (k must satisfy 1 <= k < n).
    """
    n = len(t)
    if n == 0:
        raise ValueError("minimal_period requires a nonempty tuple")
    # Every border starts with t[0]; absent that, there is no border at all.
    # This skips the failure-function pass for strictly rising blocks.
    if n == 1 or t[0] not in t[1:]:
        return None
    border = _longest_border(t)
    if border == 0:
        return None
    period = n - border
    return FinitePeriodicity(period, tuple(t[:period]))


def extends_with(
    fp: FinitePeriodicity,
    prefix_len: int,
    block: Sequence[Symbol],
    lookback: Callable[[int], Symbol],
) -> bool:
    """Whether appending ``block`` keeps the concatenation's minimal period
    equal to ``fp``.

    Caller guarantees the existing concatenation of length ``prefix_len``
    has minimal shift period ``fp.period`` with fundamental string
    ``fp.fundamental``. Appending can only grow a minimal period, so the
    concatenation keeps period and fundamental exactly when every new
    position j satisfies symbol(j) == symbol(j - period). ``lookback`` must
    resolve global positions in [prefix_len - period, prefix_len); positions
    inside ``block`` are resolved locally.
    """
    m = fp.period
    head = min(m, len(block))
    for i in range(head):
        if block[i] != lookback(prefix_len - m + i):
            return False
    if len(block) > m:
        return tuple(block[m:]) == tuple(block[: len(block) - m])
    return True


class _ShiftView:
    """Shift-comparison oracle over a prefix.

    Packs symbols into fixed-width bytes so that "does the m-shift relation
    hold from position r to the end" is a single C-level compare; falls back
    to tuple slices when a symbol exceeds 64 bits.
    """

    def __init__(self, symbols: Sequence[Symbol]):
        self.n = len(symbols)
        try:
            self._buf: bytes | None = array("q", symbols).tobytes()
        except OverflowError:
            self._buf = None
            self._sym = tuple(symbols)

    def shift_holds_from(self, r: int, m: int) -> bool:
        """True iff symbol(j) == symbol(j + m) for every j in [r, n - m)."""
        n = self.n
        if self._buf is not None:
            b = self._buf
            return b[8 * r : 8 * (n - m)] == b[8 * (r + m) : 8 * n]
        s = self._sym
        return s[r : n - m] == s[r + m : n]


def detect_tail(
    prefix: Sequence[Symbol],
    max_preperiod: int,
    max_period: int,
    min_reps: int = 3,
) -> EventualPeriodicity | None:
    """Search a prefix for a periodic tail within the given bounds.

    Candidate periods m = 1..max_period are tried in ascending order; for
    each m the minimal preperiod r <= max_preperiod is taken such that the
    m-shift relation holds from r through the end of the prefix and the
    tail holds at least min_reps * m symbols. The first hit (minimal m,
    then minimal r) is returned; the result is deterministic.
    """
    if min_reps < 2:
        raise ValueError("min_reps must be at least 2")
    if max_preperiod < 0 or max_period < 1:
        raise ValueError("bounds must be nonnegative / positive")
    n = len(prefix)
    view = _ShiftView(prefix)
    for m in range(1, max_period + 1):
        r_cap = min(max_preperiod, n - min_reps * m)
        if r_cap < 0:
            break  # every larger m needs an even longer tail
        if not view.shift_holds_from(r_cap, m):
            continue
        lo, hi = 0, r_cap
        while lo < hi:
            mid = (lo + hi) // 2
            if view.shift_holds_from(mid, m):
                hi = mid
            else:
                lo = mid + 1
        return EventualPeriodicity(lo, m, tuple(prefix[lo : lo + m]))
    return None
