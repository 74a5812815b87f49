"""Deterministic infinite symbol sources used as interleaver inputs.

Eventually periodic inputs come from cycle generators and from the
continued-fraction expansion of quadratic surds (P + sqrt(D))/Q, computed
with exact integer arithmetic. Aperiodic inputs come from the Thue-Morse
word and from the naturals.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt
from typing import Any

from .interleave import Family, SequenceSource
from .periodicity import Symbol


class CycleSource(SequenceSource):
    """Preamble followed by a cycle repeated forever."""

    def __init__(self, preamble: tuple[Symbol, ...], cycle: tuple[Symbol, ...]):
        if not cycle:
            raise ValueError("cycle must be nonempty")
        self._pre = tuple(preamble)
        self._cyc = tuple(cycle)
        self._pos = 0

    def take(self, n: int) -> tuple[Symbol, ...]:
        pre, cyc, pos = self._pre, self._cyc, self._pos
        self._pos = pos + n
        out: tuple[Symbol, ...] = ()
        if pos < len(pre):
            head = pre[pos : pos + n]
            out = head
            n -= len(head)
            pos += len(head)
        if n:
            off = (pos - len(pre)) % len(cyc)
            reps = (off + n + len(cyc) - 1) // len(cyc)
            out = out + (cyc * reps)[off : off + n]
        return out


def cycle_gen(preamble: tuple[Symbol, ...], cycle: tuple[Symbol, ...]) -> CycleSource:
    """Source emitting ``preamble`` then ``cycle`` repeated forever."""
    return CycleSource(preamble, cycle)


class ThueMorseSource(SequenceSource):
    """Thue-Morse word t(n) = parity of ones in binary n, starting at
    position ``offset``. Overlap-free, hence never eventually periodic."""

    def __init__(self, offset: int = 0):
        if offset < 0:
            raise ValueError("offset must be nonnegative")
        self._pos = offset

    def take(self, n: int) -> tuple[Symbol, ...]:
        c = self._pos
        self._pos = c + n
        return tuple((c + i).bit_count() & 1 for i in range(n))


def thue_morse(offset: int = 0) -> ThueMorseSource:
    """The Thue-Morse word 0,1,1,0,1,0,0,1,... from position ``offset``."""
    return ThueMorseSource(offset)


class NaturalsSource(SequenceSource):
    """start, start+1, start+2, ...: strictly increasing, so no block ever
    repeats a symbol and the stream is trivially aperiodic."""

    def __init__(self, start: int = 1):
        self._next = start

    def take(self, n: int) -> tuple[Symbol, ...]:
        c = self._next
        self._next = c + n
        return tuple(range(c, c + n))


def naturals(start: int = 1) -> NaturalsSource:
    return NaturalsSource(start)


@dataclass
class SurdState:
    """Registers of the quadratic-surd expansion: the value (P + sqrt(D))/Q
    with Q dividing D - P*P (maintained by every step) and D not a perfect
    square."""

    P: int
    Q: int
    D: int


class SurdSource(SequenceSource):
    """Partial quotients of (P0 + sqrt(D))/Q0, exact integer arithmetic
    throughout.

    Construction rescales (P, Q, D) by |Q0| so that Q divides D - P*P;
    each step emits a = floor((P + sqrt(D))/Q) and updates
    P <- a*Q - P, Q <- (D - P*P)/Q. Eventually periodic for every valid
    input.
    """

    def __init__(self, p0: int, q0: int, d: int):
        if q0 == 0:
            raise ValueError("Q must be nonzero")
        if d <= 0 or isqrt(d) ** 2 == d:
            raise ValueError("D must be a positive non-square (rational inputs terminate)")
        p, q = p0, q0
        if (d - p * p) % q != 0:
            # Scale numerator and denominator by |Q|: the represented value
            # is unchanged and the divisibility invariant is established.
            p *= abs(q)
            d *= q * q
            q *= abs(q)
        self.state = SurdState(p, q, d)
        self._sqrt_floor = isqrt(self.state.D)

    def take(self, n: int) -> tuple[Symbol, ...]:
        st = self.state
        p, q, d, s = st.P, st.Q, st.D, self._sqrt_floor
        out = []
        for _ in range(n):
            if q > 0:
                a = (p + s) // q
            else:
                a = (-p - s - 1) // (-q)
            out.append(a)
            p = a * q - p
            rem = d - p * p
            assert rem % q == 0, "surd invariant violated: Q must divide D - P*P"
            q = rem // q
        st.P, st.Q = p, q
        return tuple(out)


def cf_surd(p0: int, q0: int, d: int) -> SurdSource:
    """Continued-fraction partial quotients of (p0 + sqrt(d))/q0."""
    return SurdSource(p0, q0, d)


_KINDS = ("cycle", "naturals", "thue_morse", "cf_surd")


@dataclass(frozen=True)
class GeneratorSpec:
    """Declarative description of one source, the unit of run configs.

    Fields beyond ``kind`` are read per kind: cycle uses preamble/cycle,
    thue_morse uses offset, naturals uses start, cf_surd uses p/q/d.
    """

    kind: str
    preamble: tuple[Symbol, ...] = ()
    cycle: tuple[Symbol, ...] = ()
    offset: int = 0
    start: int = 1
    p: int = 0
    q: int = 1
    d: int = 2

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "cycle" and not self.cycle:
            raise ValueError("cycle generator requires a nonempty cycle")
        if self.kind == "cf_surd":
            if self.q == 0:
                raise ValueError("cf_surd requires q != 0")
            if self.d <= 0 or isqrt(self.d) ** 2 == self.d:
                raise ValueError("cf_surd requires a positive non-square d")

    def make(self) -> SequenceSource:
        if self.kind == "cycle":
            return cycle_gen(self.preamble, self.cycle)
        if self.kind == "thue_morse":
            return thue_morse(self.offset)
        if self.kind == "naturals":
            return naturals(self.start)
        return cf_surd(self.p, self.q, self.d)

    def to_dict(self) -> dict[str, Any]:
        if self.kind == "cycle":
            return {"kind": "cycle", "preamble": list(self.preamble), "cycle": list(self.cycle)}
        if self.kind == "thue_morse":
            return {"kind": "thue_morse", "offset": self.offset}
        if self.kind == "naturals":
            return {"kind": "naturals", "start": self.start}
        return {"kind": "cf_surd", "p": self.p, "q": self.q, "d": self.d}

    @staticmethod
    def from_dict(data: dict[str, Any]) -> "GeneratorSpec":
        if not isinstance(data, dict) or "kind" not in data:
            raise ValueError("generator spec must be an object with a 'kind' field")
        kind = data["kind"]
        if kind not in _KINDS:
            raise ValueError(f"unknown generator kind {kind!r}")
        allowed = {
            "cycle": {"preamble", "cycle"},
            "thue_morse": {"offset"},
            "naturals": {"start"},
            "cf_surd": {"p", "q", "d"},
        }[kind]
        extra = set(data) - allowed - {"kind"}
        if extra:
            raise ValueError(f"unexpected fields for {kind} spec: {sorted(extra)}")

        def ints(key, default):
            value = data.get(key, default)
            if not isinstance(value, list) or not all(
                isinstance(x, int) and not isinstance(x, bool) for x in value
            ):
                raise ValueError(f"{key} must be a list of integers")
            return tuple(value)

        def one_int(key, default):
            value = data.get(key, default)
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"{key} must be an integer")
            return value

        if kind == "cycle":
            return GeneratorSpec(kind, preamble=ints("preamble", []), cycle=ints("cycle", []))
        if kind == "thue_morse":
            return GeneratorSpec(kind, offset=one_int("offset", 0))
        if kind == "naturals":
            return GeneratorSpec(kind, start=one_int("start", 1))
        return GeneratorSpec(kind, p=one_int("p", 0), q=one_int("q", 1), d=one_int("d", 2))


def family_from_specs(specs: list[GeneratorSpec]) -> Family:
    """Family where index i instantiates a fresh stream from
    specs[(i - 1) % len(specs)]; every index owns an independent cursor."""
    if not specs:
        raise ValueError("at least one generator spec is required")
    frozen = list(specs)
    return Family(lambda i: frozen[(i - 1) % len(frozen)].make())
