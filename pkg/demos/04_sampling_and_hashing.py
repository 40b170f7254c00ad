"""The substrate: live-index sampling and the two-level hash scheme.

An l0-sampler is a linear sketch of a dynamic vector that returns a
near-uniform live index; it is the building block behind every cell of
the dynamic matcher's grid.  The two-level hash scheme maps the vertex
universe into a small key space such that any fixed k-subset is
"distinguished" (separable bucket by bucket) with high probability.
"""

import random
from collections import Counter

from streamkmatch import (
    FAIL,
    L0Sampler,
    build_hash_scheme,
    distinguishes,
    scheme_dimensions,
    scheme_eval,
)

# --- l0 sampling -------------------------------------------------------
UNIVERSE, DELTA, TRIALS = 256, 0.01, 3_000
support = [3, 64, 150, 200, 255]
deleted = [64, 255]

tally = Counter()
fails = 0
for trial in range(TRIALS):
    s = L0Sampler(UNIVERSE, DELTA, random.Random(trial))
    for i in support:
        s.update(i, 1)
    for i in deleted:
        s.update(i, -1)           # deletions cancel exactly
    got = s.query()
    if got is FAIL:
        fails += 1
    else:
        tally[got.index] += 1

live = sorted(set(support) - set(deleted))
print(f"l0-sampler: support {support}, after deleting {deleted} -> live {live}")
print(f"{TRIALS} fresh samplers: {fails} failed (delta={DELTA})")
for idx in sorted(tally):
    share = tally[idx] / (TRIALS - fails)
    print(f"  index {idx:3d} sampled {share:.1%}  (uniform would be {1/len(live):.1%})")

# --- hash scheme -------------------------------------------------------
print()
K, USIZE = 8, 100_000
d1, d2, d3, d4 = scheme_dimensions(K)
print(f"hash scheme for k={K}: d1={d1} coarse buckets, d2={d2} fine functions,")
print(f"  d3={d3} cells each, total key space d4={d4}")

rng = random.Random(99)
hits = 0
trials = 200
for _ in range(trials):
    scheme = build_hash_scheme(USIZE, K, rng)
    subset = rng.sample(range(USIZE), K)
    hits += distinguishes(scheme, subset)
print(f"random {K}-subsets of a {USIZE} universe distinguished: "
      f"{hits}/{trials}")

scheme = build_hash_scheme(USIZE, K, rng)
x = 12345
vals = scheme_eval(scheme, x)
print(f"the {d2} keys of element {x} all live in coarse block "
      f"{scheme.f(x)}: {vals[:4]} ...")
