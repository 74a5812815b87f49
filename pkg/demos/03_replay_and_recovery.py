"""Replay and input recovery
==========================

Every scheduling decision depends only on symbols already emitted, so the
whole run - block boundaries, source indices, the persistence trajectory -
can be replayed from the output alone, and the consumed input prefixes
fall out of it.
"""

from seqweave import (
    GeneratorSpec,
    family_from_specs,
    recover_inputs,
    replay,
    run_prefix,
)

family = family_from_specs([
    GeneratorSpec("naturals", start=40),
    GeneratorSpec("thue_morse"),
    GeneratorSpec("cycle", preamble=(9,), cycle=(1, 2)),
])
symbols, trace, final = run_prefix(family, 12)
print(f"forward run: {len(symbols)} symbols, ends P={final.P} h={final.h}")

# Reconstruct the run from nothing but the output prefix.
reconstructed = replay(symbols)
print("replayed records match the forward trace:", reconstructed.records == trace)
locked_index, lock_block, fundamental = reconstructed.locked
print(f"locked on index {locked_index} since block {lock_block}, S={list(fundamental)}")

print()
print("recovered inputs:")
for item in recover_inputs(symbols):
    head = " ".join(map(str, item.prefix[:12]))
    more = " ..." if len(item.prefix) > 12 else ""
    print(f"  index {item.index}: {len(item.prefix)} symbols: {head}{more}")
    if item.periodic_tail is not None:
        r, s = item.periodic_tail
        # This finite description pins down the whole infinite input:
        # its first r symbols, then S repeated forever.
        print(f"    entire input = prefix[:{r}] + {list(s)} repeated forever")
