"""Insert-only streaming: exact k-matching from a tiny sketch.

Feeds a random insert-only stream to the streaming matcher, which keeps
only O(k^2) edges per partition hash and spends a fixed number of
micro-steps per arrival, then compares its answer with the exact solver
run on the full graph.
"""

import random

from streamkmatch import (
    InsertMatcher,
    NO_K_MATCHING,
    gen_random_stream,
    materialize,
    max_weight_k_matching,
)

N, K, EDGES, EPS, SEED = 120, 3, 800, 1 / 16, 42

print(f"stream: n={N}, k={K}, {EDGES} random weighted inserts")
stream = gen_random_stream(N, K, EDGES, seed=SEED)

matcher = InsertMatcher(N, K, EPS, random.Random(SEED + 1))
print(
    f"matcher: {len(matcher.hashes)} partition hashes, "
    f"segment size {matcher.segment_size}, "
    f"micro-step budget {matcher.budget}/arrival, "
    f"space ceiling {matcher.space_bound} edges"
)

for el in stream.elements:
    matcher.process_insert(el.edge)

answer = matcher.query()
truth = max_weight_k_matching(materialize(stream.elements), K)

print()
if answer is NO_K_MATCHING:
    print("streamed answer: no k-matching")
else:
    print(f"streamed answer: weight {answer.weight}")
    for e in answer.edges:
        print(f"  {e.u:3d} -- {e.v:3d}  weight {e.wt}")
print(f"exact oracle:    weight {truth.weight}")
print()
print(
    f"worst arrival cost {matcher.max_steps_per_insert} micro-steps "
    f"(budget {matcher.budget}); "
    f"peak storage {matcher.peak_stored_edges} edges "
    f"(ceiling {matcher.space_bound})"
)
print("optimal!" if answer.weight == truth.weight else
      "sub-optimal this run (happens with probability <= eps)")
