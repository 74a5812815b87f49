"""Interleaving basics
====================

Build a small family of streams, run the block interleaver, and watch the
persistence flag find the repeating input.
"""

from seqweave import GeneratorSpec, family_from_specs, run_prefix

# Index 1 counts upward forever; index 2 repeats 7. The scheduler walks the
# diagonal order 1,2,1,2,3,... drawing blocks of doubling length.
family = family_from_specs([
    GeneratorSpec("naturals"),
    GeneratorSpec("cycle", cycle=(7,)),
])

symbols, trace, final = run_prefix(family, 6)

print("output prefix:", " ".join(map(str, symbols[:30])), "...")
print()
print("block-by-block trace:")
for rec in trace:
    state = f"P={rec.P_after}"
    if rec.P_after:
        state += f" S={list(rec.S_after)} since block {rec.h_after}"
    print(f"  block {rec.l}: {rec.len:3d} symbols from index {rec.source_index}  ->  {state}")

# Block 1 comes from the naturals and repeats nothing, so the scheduler
# moves on. Block 2 comes from the constant stream, the flag locks onto
# S=[7], and every later block extends the repetition: the scheduler never
# leaves index 2 again.
print()
print(f"final registers: k={final.k} l={final.l} P={final.P} S={final.S} h={final.h}")
