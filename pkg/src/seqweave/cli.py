"""Command-line front end.

Commands: run (interleave a configured family), detect (periodic-tail
verdict on a token stream), replay (reconstruct trace and inputs from a
stream), demo-surd (interleave a quadratic surd's continued fraction with
aperiodic decoys and report the verdict).

Formats: token streams are ASCII decimal integers, one per line, no
header. Traces are JSON lines with the fixed keys l, len, k, i, P, S, h.
Run configs are JSON documents (see RunConfig / load_config).

Exit codes: 0 success or tail detected, 2 clean not-detected, 1 error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from pathlib import Path
from typing import Sequence

from .generators import GeneratorSpec, family_from_specs
from .interleave import BlockRecord, run_prefix
from .periodicity import Symbol, detect_tail
from .reconstruct import MalformedPrefixError, recover_inputs, replay

NUM_BLOCKS_CAP = 24  # keeps a run below 2**25 symbols

DEFAULT_NUM_BLOCKS = 16
DEFAULT_MAX_PREPERIOD = 1024
DEFAULT_MAX_PERIOD = 512
DEFAULT_MIN_REPS = 3


class StreamFormatError(ValueError):
    """Raised when a token stream file cannot be parsed."""


def write_stream(path: str | Path, symbols: Sequence[Symbol]) -> None:
    text = "\n".join(map(str, symbols))
    Path(path).write_text(text + "\n" if text else "")


def read_stream(path: str | Path) -> tuple[Symbol, ...]:
    try:
        text = Path(path).read_text()
    except OSError as exc:
        raise StreamFormatError(f"cannot read stream {path}: {exc}") from exc
    try:
        return tuple(map(int, text.split()))
    except ValueError as exc:
        raise StreamFormatError(f"stream {path} holds non-integer tokens: {exc}") from exc


def trace_line(record: BlockRecord) -> str:
    return json.dumps(
        {
            "l": record.l,
            "len": record.len,
            "k": record.k_before,
            "i": record.source_index,
            "P": record.P_after,
            "S": list(record.S_after) if record.S_after is not None else None,
            "h": record.h_after,
        }
    )


def write_trace(path: str | Path, records: Sequence[BlockRecord]) -> None:
    Path(path).write_text("".join(trace_line(r) + "\n" for r in records))


def fmt_symbols(symbols: Sequence[Symbol]) -> str:
    return "[" + ",".join(map(str, symbols)) + "]"


@dataclass
class RunConfig:
    specs: list[GeneratorSpec]
    num_blocks: int = DEFAULT_NUM_BLOCKS
    max_preperiod: int = DEFAULT_MAX_PREPERIOD
    max_period: int = DEFAULT_MAX_PERIOD
    min_reps: int = DEFAULT_MIN_REPS
    out: str = "stream.txt"
    trace: str = "trace.jsonl"

    def validate(self) -> None:
        if not self.specs:
            raise ValueError("config needs at least one generator spec")
        if not 1 <= self.num_blocks <= NUM_BLOCKS_CAP:
            raise ValueError(f"num_blocks must be in 1..{NUM_BLOCKS_CAP}")
        if self.max_preperiod < 0 or self.max_period < 1 or self.min_reps < 2:
            raise ValueError("detect bounds out of range")


_CONFIG_KEYS = {"specs", "num_blocks", "max_preperiod", "max_period", "min_reps", "out", "trace"}


def load_config(path: str | Path) -> RunConfig:
    """Parse a JSON run config.

    Shape: {"specs": [<generator spec>, ...], "num_blocks": int,
    "max_preperiod": int, "max_period": int, "min_reps": int,
    "out": str, "trace": str}; everything but "specs" is optional.
    """
    try:
        data = json.loads(Path(path).read_text())
    except OSError as exc:
        raise ValueError(f"cannot read config {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise ValueError(f"config {path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise ValueError("config must be a JSON object")
    unknown = set(data) - _CONFIG_KEYS
    if unknown:
        raise ValueError(f"unknown config fields: {sorted(unknown)}")
    if "specs" not in data or not isinstance(data["specs"], list):
        raise ValueError("config requires a 'specs' list")
    config = RunConfig(specs=[GeneratorSpec.from_dict(s) for s in data["specs"]])
    for key in ("num_blocks", "max_preperiod", "max_period", "min_reps"):
        if key in data:
            value = data[key]
            if not isinstance(value, int) or isinstance(value, bool):
                raise ValueError(f"config field {key} must be an integer")
            setattr(config, key, value)
    for key in ("out", "trace"):
        if key in data:
            if not isinstance(data[key], str):
                raise ValueError(f"config field {key} must be a path string")
            setattr(config, key, data[key])
    config.validate()
    return config


def run_summary(result) -> str:
    """One-line verdict for a finished run. "locked" requires the
    persistence flag to have survived at least one extension check; a flag
    raised by the very last block is tentative and reports as unlocked
    (the trace still shows it)."""
    final = result.final
    if final.P and final.h < result.trace[-1].l:
        return (
            f"locked index={result.trace[-1].source_index} S={fmt_symbols(final.S)} "
            f"h={final.h} symbols={len(result.symbols)}"
        )
    return f"unlocked symbols={len(result.symbols)}"


def cmd_run(config: RunConfig) -> int:
    config.validate()
    result = run_prefix(family_from_specs(config.specs), config.num_blocks)
    write_stream(config.out, result.symbols)
    write_trace(config.trace, result.trace)
    print(run_summary(result))
    return 0


def cmd_detect(stream_path: str, max_preperiod: int, max_period: int, min_reps: int) -> int:
    symbols = read_stream(stream_path)
    hit = detect_tail(symbols, max_preperiod, max_period, min_reps)
    if hit is None:
        print("no periodic tail within bounds")
        return 2
    print(f"periodic r={hit.preperiod} m={hit.period} S={fmt_symbols(hit.fundamental)}")
    return 0


def cmd_replay(stream_path: str, trace_path: str | None) -> int:
    symbols = read_stream(stream_path)
    trace = replay(symbols)
    if trace_path is not None:
        write_trace(trace_path, trace.records)
    else:
        for record in trace.records:
            print(trace_line(record))
    if trace.locked is not None:
        locked_index, lock_block, fundamental = trace.locked
        print(f"locked index={locked_index} S={fmt_symbols(fundamental)} h={lock_block}")
    else:
        print("unlocked")
    for item in recover_inputs(symbols):
        tail = ""
        if item.periodic_tail is not None:
            pre_len, fundamental = item.periodic_tail
            tail = f" tail r={pre_len} S={fmt_symbols(fundamental)}"
        print(f"input i={item.index} len={len(item.prefix)}{tail}: " + " ".join(map(str, item.prefix)))
    return 0


def cmd_demo_surd(
    p: int,
    q: int,
    d: int,
    blocks: int,
    noise_count: int,
    include_surd: bool = True,
    out: str | None = None,
    trace_path: str | None = None,
) -> int:
    """Interleave a surd's partial-quotient stream with aperiodic decoys
    and report whether the output picked up a periodic tail."""
    if blocks < 1 or blocks > NUM_BLOCKS_CAP:
        raise ValueError(f"blocks must be in 1..{NUM_BLOCKS_CAP}")
    if noise_count < 0:
        raise ValueError("noise count must be nonnegative")
    specs: list[GeneratorSpec] = []
    if include_surd:
        specs.append(GeneratorSpec("cf_surd", p=p, q=q, d=d))
    for j in range(noise_count):
        if j % 2 == 0:
            specs.append(GeneratorSpec("thue_morse", offset=17 * j))
        else:
            specs.append(GeneratorSpec("naturals", start=100 * j + 1))
    if not specs:
        raise ValueError("family is empty: need the surd or at least one decoy")
    for spec in specs:
        print(f"family slot: {spec.to_dict()}")
    result = run_prefix(family_from_specs(specs), blocks)
    if out is not None:
        write_stream(out, result.symbols)
    if trace_path is not None:
        write_trace(trace_path, result.trace)
    print(run_summary(result))
    hit = detect_tail(result.symbols, DEFAULT_MAX_PREPERIOD, DEFAULT_MAX_PERIOD, DEFAULT_MIN_REPS)
    if hit is None:
        print("no periodic tail within bounds")
        return 2
    print(f"periodic r={hit.preperiod} m={hit.period} S={fmt_symbols(hit.fundamental)}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="seqweave",
        description="interleave integer streams and analyze eventual periodicity",
    )
    sub = parser.add_subparsers(dest="cmd", required=True)

    run = sub.add_parser("run", help="interleave a configured family")
    run.add_argument("--config", required=True, help="JSON run config")
    run.add_argument("--blocks", type=int, default=None, help="override num_blocks")
    run.add_argument("--out", default=None, help="output token stream path")
    run.add_argument("--trace", default=None, help="output trace path (JSON lines)")

    det = sub.add_parser("detect", help="periodic-tail verdict on a token stream")
    det.add_argument("stream", help="token stream path")
    det.add_argument("--max-preperiod", type=int, default=DEFAULT_MAX_PREPERIOD)
    det.add_argument("--max-period", type=int, default=DEFAULT_MAX_PERIOD)
    det.add_argument("--min-reps", type=int, default=DEFAULT_MIN_REPS)

    rep = sub.add_parser("replay", help="reconstruct trace and inputs from a stream")
    rep.add_argument("stream", help="token stream path")
    rep.add_argument("--trace", default=None, help="write trace here instead of stdout")

    demo = sub.add_parser("demo-surd", help="surd continued fraction vs aperiodic decoys")
    demo.add_argument("p", type=int)
    demo.add_argument("q", type=int)
    demo.add_argument("d", type=int)
    demo.add_argument("--blocks", type=int, default=14)
    demo.add_argument("--noise", type=int, default=3)
    demo.add_argument("--no-surd", action="store_true", help="decoys only (control family)")
    demo.add_argument("--out", default=None, help="optional token stream path")
    demo.add_argument("--trace", default=None, help="optional trace path")

    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        if args.cmd == "run":
            config = load_config(args.config)
            if args.blocks is not None:
                config.num_blocks = args.blocks
            if args.out is not None:
                config.out = args.out
            if args.trace is not None:
                config.trace = args.trace
            return cmd_run(config)
        if args.cmd == "detect":
            return cmd_detect(args.stream, args.max_preperiod, args.max_period, args.min_reps)
        if args.cmd == "replay":
            return cmd_replay(args.stream, args.trace)
        return cmd_demo_surd(
            args.p,
            args.q,
            args.d,
            args.blocks,
            args.noise,
            include_surd=not args.no_surd,
            out=args.out,
            trace_path=args.trace,
        )
    except (ValueError, StreamFormatError, MalformedPrefixError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
