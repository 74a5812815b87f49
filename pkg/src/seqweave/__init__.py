"""seqweave: interleave countably many integer streams into one stream
whose eventual periodicity mirrors the inputs.

Blocks of doubling length are drawn from an indexed family of infinite
streams along the diagonal schedule 1,2,1,2,3,...; a persistence check
keeps the scheduler on a source exactly while its symbols keep repeating
a fundamental string. The package also ships exact periodicity detectors,
replay/reconstruction of a run from its output alone, input generators
(cycles, Thue-Morse, naturals, quadratic-surd continued fractions), and a
CLI.
"""

from .generators import (
    GeneratorSpec,
    SurdState,
    cf_surd,
    cycle_gen,
    family_from_specs,
    naturals,
    thue_morse,
)
from .interleave import (
    BlockRecord,
    Family,
    InterleaverState,
    RunResult,
    SequenceSource,
    advance,
    index_at,
    interleave,
    run_prefix,
    step,
    triangular,
)
from .periodicity import (
    EventualPeriodicity,
    FinitePeriodicity,
    Symbol,
    detect_tail,
    extends_with,
    minimal_period,
)
from .reconstruct import (
    MalformedPrefixError,
    RecoveredInput,
    ReplayTrace,
    recover_inputs,
    replay,
)

__version__ = "0.1.0"

__all__ = [
    "BlockRecord",
    "EventualPeriodicity",
    "Family",
    "FinitePeriodicity",
    "GeneratorSpec",
    "InterleaverState",
    "MalformedPrefixError",
    "RecoveredInput",
    "ReplayTrace",
    "RunResult",
    "SequenceSource",
    "SurdState",
    "Symbol",
    "advance",
    "cf_surd",
    "cycle_gen",
    "detect_tail",
    "extends_with",
    "family_from_specs",
    "index_at",
    "interleave",
    "minimal_period",
    "naturals",
    "recover_inputs",
    "replay",
    "run_prefix",
    "step",
    "thue_morse",
    "triangular",
]
