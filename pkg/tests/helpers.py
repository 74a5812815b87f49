"""Shared test oracles and fixture builders.

The oracles here are deliberately naive (exhaustive loops over every
candidate) so they stay independent of the library's own shortcuts.
"""

from __future__ import annotations

import random

from seqweave import GeneratorSpec


def minimal_period_oracle(t):
    """Brute force over every shift h = 1..n-1; returns (period, fundamental)
    or None."""
    n = len(t)
    for h in range(1, n):
        if all(t[i + h] == t[i] for i in range(n - h)):
            return h, tuple(t[:h])
    return None


def detect_tail_oracle(prefix, max_preperiod, max_period, min_reps):
    """Exhaustive (m, r) double loop: minimal period first, then minimal
    preperiod; returns (r, m, fundamental) or None."""
    n = len(prefix)
    for m in range(1, max_period + 1):
        r_cap = min(max_preperiod, n - min_reps * m)
        for r in range(0, r_cap + 1):
            if all(prefix[j] == prefix[j + m] for j in range(r, n - m)):
                return r, m, tuple(prefix[r : r + m])
    return None


def rotations(t):
    return {t[i:] + t[:i] for i in range(len(t))}


def is_rotation(a, b):
    return len(a) == len(b) and tuple(a) in rotations(tuple(b))


def expand(preamble, cycle, n):
    """First n symbols of preamble + cycle repeated forever."""
    out = list(preamble)
    while len(out) < n:
        out.extend(cycle)
    return tuple(out[:n])


def descriptions_equal(desc_a, desc_b):
    """Whether two (preamble, cycle) descriptions denote the same infinite
    sequence. Agreement on max preamble plus twice the lcm of the cycle
    lengths settles it."""
    import math

    (pre_a, cyc_a), (pre_b, cyc_b) = desc_a, desc_b
    horizon = max(len(pre_a), len(pre_b)) + 2 * math.lcm(len(cyc_a), len(cyc_b)) + 1
    return expand(pre_a, cyc_a, horizon) == expand(pre_b, cyc_b, horizon)


def listed_index_prefix(count):
    """The diagonal schedule built the obvious way: rows 1..2, 1..3, 1..4, ..."""
    out = []
    width = 2
    while len(out) < count:
        out.extend(range(1, width + 1))
        width += 1
    return out[:count]


def random_locking_family(rng: random.Random):
    """Family of 3-6 generators with exactly one eventually periodic:
    a cycle generator (preamble <= 8, cycle <= 6, alphabet 2-5) placed in
    one of the first three slots, Thue-Morse/naturals decoys elsewhere.

    The diagonal schedule revisits slot s for the second time at position
    T_s + s - 1 (13 for s = 4), and spurious decoy locks can stretch
    reaching that position to nearly two blocks per schedule step, so only
    the first three slots are guaranteed a post-preamble visit within 18
    blocks.
    """
    m = rng.randint(3, 6)
    alphabet = rng.randint(2, 5)
    preamble = tuple(rng.randrange(alphabet) for _ in range(rng.randint(0, 8)))
    cycle = tuple(rng.randrange(alphabet) for _ in range(rng.randint(1, 6)))
    specs = []
    for _ in range(m):
        if rng.random() < 0.5:
            specs.append(GeneratorSpec("thue_morse", offset=rng.randrange(1024)))
        else:
            specs.append(GeneratorSpec("naturals", start=rng.randint(1, 1024)))
    pos = rng.randint(1, 3)
    specs[pos - 1] = GeneratorSpec("cycle", preamble=preamble, cycle=cycle)
    return specs, pos, preamble, cycle


def random_aperiodic_family(rng: random.Random):
    """Family of 3-6 aperiodic generators: exactly one Thue-Morse variant,
    the rest naturals variants.

    One Thue-Morse slot bounds the number of spurious lock events by its
    schedule visit count (at most five in sixteen blocks), which keeps most
    blocks ending with the persistence flag down.
    """
    m = rng.randint(3, 6)
    specs = [GeneratorSpec("naturals", start=rng.randint(1, 1024)) for _ in range(m)]
    specs[rng.randrange(m)] = GeneratorSpec("thue_morse", offset=rng.randrange(1024))
    return specs
