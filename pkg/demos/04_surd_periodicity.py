"""Quadratic surds through the interleaver
========================================

Continued fractions expand quadratic irrationals into eventually periodic
integer streams. Mix one such stream into a family of aperiodic decoys:
the interleaved output picks up a periodic tail exactly because the surd
is there, and loses it when the surd is removed.
"""

from seqweave import GeneratorSpec, cf_surd, detect_tail, family_from_specs, run_prefix

# sqrt(7) = [2; 1,1,1,4 repeating], computed with exact integer steps.
print("partial quotients of sqrt(7):", cf_surd(0, 1, 7).take(13))

decoys = [
    GeneratorSpec("thue_morse"),
    GeneratorSpec("naturals", start=100),
    GeneratorSpec("thue_morse", offset=17),
]

for label, specs in [
    ("surd + decoys", [GeneratorSpec("cf_surd", p=0, q=1, d=7)] + decoys),
    ("decoys only  ", decoys),
]:
    symbols, trace, final = run_prefix(family_from_specs(specs), 14)
    hit = detect_tail(symbols, max_preperiod=1024, max_period=512, min_reps=3)
    if hit is None:
        verdict = "no periodic tail within bounds"
    else:
        verdict = f"periodic r={hit.preperiod} m={hit.period} S={list(hit.fundamental)}"
    print(f"{label}: {len(symbols)} symbols -> {verdict}")

# The same experiment is one command away:
#   seqweave demo-surd 0 1 7 --blocks 14 --noise 3
#   seqweave demo-surd 0 1 7 --blocks 14 --noise 3 --no-surd
