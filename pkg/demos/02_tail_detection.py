"""Periodicity detectors
======================

Minimal shift periods of finite tuples, and bounded search for a periodic
tail in a stream prefix.
"""

from seqweave import detect_tail, minimal_period, thue_morse, cycle_gen

# A tuple is "periodic" here whenever some shift k < n matches it against
# itself on the overlap; the minimal such k defines the fundamental string.
for t in [(0, 0), (1, 2, 1, 2, 1), (1, 2, 1), (1, 2, 3)]:
    print(f"minimal_period{t} = {minimal_period(t)}")

print()

# detect_tail looks for the smallest period m whose shift relation holds
# from some preperiod r <= max_preperiod to the end of the prefix, with at
# least min_reps repetitions in the tail.
prefix = cycle_gen((4, 4, 4), (1, 2, 5)).take(60)
hit = detect_tail(prefix, max_preperiod=16, max_period=16, min_reps=3)
print("cycle stream prefix:", " ".join(map(str, prefix[:18])), "...")
print(f"detected tail: r={hit.preperiod} m={hit.period} S={list(hit.fundamental)}")

print()

# The Thue-Morse word never settles into a repeating tail: it is
# overlap-free, so no block of it can repeat often enough.
tm = thue_morse().take(512)
print("thue-morse prefix:", "".join(map(str, tm[:48])), "...")
print("detected tail:", detect_tail(tm, max_preperiod=128, max_period=128, min_reps=3))
