"""Adversarial stream families and the benchmark harness.

Two constructions that make streaming matching provably hard:

  * index-hard encodes "is bit z of x set?" into "does the graph have a
    2*k1-matching?", which is why insert-only algorithms need the space
    they use;
  * partial-max encodes "maximum of the surviving values" into a
    max-weight 1-matching over a path with deletions, which is why
    dynamic algorithms pay a log factor in weights.

The bench driver runs seeded trials with latency percentiles.
"""

import math

from streamkmatch import (
    bipartite_matching_size,
    gen_index_hard,
    gen_partial_max_hard,
    materialize,
    max_weight_k_matching,
    stream_to_text,
)
from streamkmatch.bench import bench_insert

# --- index-hard --------------------------------------------------------
m, x, z = 4, "1010", 3
k1 = math.ceil(math.sqrt(m))
stream = gen_index_hard(m, x, z)
edges = materialize(stream.elements)
size = bipartite_matching_size(edges)
print(f"index-hard: x={x}, probing bit z={z} (set={x[z-1] == '1'})")
print(f"  graph has {len(edges)} edges, max matching {size}, "
      f"threshold {2 * k1}")
print(f"  => bit {z} is {'SET' if size >= 2 * k1 else 'UNSET'}")

# --- partial-max -------------------------------------------------------
values, removed = [3, 9, 7], [2]
stream = gen_partial_max_hard(values, removed)
print()
print(f"partial-max: values {values}, deleting index {removed}")
print(stream_to_text(stream), end="")
best = max_weight_k_matching(materialize(stream.elements), 1)
print(f"  max-weight 1-matching = {best.weight} "
      f"(the largest surviving value)")

# --- bench -------------------------------------------------------------
print()
report = bench_insert(n=60, k=2, epsilon=0.25, edges=200, trials=5, seed=1)
print("bench (insert-only, 5 trials of 200 inserts):")
for key in (
    "micro_step_max", "micro_step_budget", "within_budget",
    "peak_stored_edges", "space_bound", "within_space_bound",
    "update_wall_us_p50", "update_wall_us_p99",
    "oracle_matches", "oracle_trials",
):
    print(f"  {key} = {report[key]}")
