"""Benchmark drivers: seeded trials with per-update latency percentiles,
work/space instrumentation, and optional answer checks against the
exact solver."""

from __future__ import annotations

import random
import time

from .core import materialize
from .dynamic_matcher import DynamicMatcher
from .generators import gen_random_stream
from .insert_matcher import InsertMatcher
from .solver import NO_K_MATCHING, max_weight_k_matching


def _percentile(sorted_values, q):
    if not sorted_values:
        return 0.0
    pos = min(len(sorted_values) - 1, int(q * len(sorted_values)))
    return sorted_values[pos]


def _latency_block(samples):
    samples.sort()
    return {
        "update_wall_us_p50": round(_percentile(samples, 0.50) * 1e6, 3),
        "update_wall_us_p90": round(_percentile(samples, 0.90) * 1e6, 3),
        "update_wall_us_p99": round(_percentile(samples, 0.99) * 1e6, 3),
    }


def bench_insert(n, k, epsilon, edges, trials, seed, check_oracle=True) -> dict:
    """Seeded insert-only trials; reports the micro-step ceiling actually
    observed, peak stored edges, latency percentiles, and oracle hits."""
    latencies = []
    micro_max = 0
    peak = 0
    budget = None
    bound = None
    hits = 0
    for trial in range(trials):
        stream = gen_random_stream(n, k, edges, seed=seed + trial)
        matcher = InsertMatcher(n, k, epsilon, random.Random(seed * 31 + trial))
        budget = matcher.budget
        bound = matcher.space_bound
        for el in stream.elements:
            t0 = time.perf_counter()
            matcher.process_insert(el.edge)
            latencies.append(time.perf_counter() - t0)
        micro_max = max(micro_max, matcher.max_steps_per_insert)
        peak = max(peak, matcher.peak_stored_edges)
        if check_oracle:
            answer = matcher.query()
            truth = max_weight_k_matching(materialize(stream.elements), k)
            if (answer is NO_K_MATCHING) == (truth is NO_K_MATCHING) and (
                answer is NO_K_MATCHING or answer.weight == truth.weight
            ):
                hits += 1
    report = {
        "mode": "ins",
        "trials": trials,
        "n": n,
        "k": k,
        "epsilon": epsilon,
        "updates_per_trial": edges,
        "micro_step_max": micro_max,
        "micro_step_budget": budget,
        "within_budget": micro_max <= budget,
        "peak_stored_edges": peak,
        "space_bound": bound,
        "within_space_bound": peak <= bound,
    }
    report.update(_latency_block(latencies))
    if check_oracle:
        report["oracle_matches"] = hits
        report["oracle_trials"] = trials
    return report


def bench_dynamic(
    n,
    k,
    inserts,
    deletes,
    trials,
    seed,
    epsilon=None,
    weight_min=1,
    weight_max=100,
    check_oracle=True,
) -> dict:
    """Seeded dynamic trials with the same reporting shape."""
    latencies = []
    keys_max = 0
    samplers = 0
    weights = 0
    fails = 0
    hits = 0
    for trial in range(trials):
        stream = gen_random_stream(
            n,
            k,
            inserts,
            seed=seed + trial,
            mode="dyn",
            deletes=deletes,
            weight_min=weight_min,
            weight_max=weight_max,
        )
        matcher = DynamicMatcher(
            n, k, random.Random(seed * 37 + trial), epsilon=epsilon
        )
        for el in stream.elements:
            t0 = time.perf_counter()
            matcher.process_update(el)
            latencies.append(time.perf_counter() - t0)
        answer = matcher.query()
        keys_max = max(keys_max, matcher.max_keys_touched)
        samplers = max(samplers, matcher.live_sampler_count)
        weights = max(weights, matcher.distinct_live_weights)
        fails += matcher.last_fail_count
        if check_oracle:
            truth = max_weight_k_matching(materialize(stream.elements), k)
            if answer is NO_K_MATCHING or truth is NO_K_MATCHING:
                hits += answer is truth
            elif epsilon is None:
                hits += answer.weight == truth.weight
            else:
                hits += answer.weight >= (1 - epsilon) * truth.weight
    report = {
        "mode": "dyn",
        "trials": trials,
        "n": n,
        "k": k,
        "epsilon": epsilon,
        "updates_per_trial": inserts + deletes,
        "keys_touched_max": keys_max,
        "live_samplers_max": samplers,
        "distinct_weights_max": weights,
        "sampler_fails_total": fails,
    }
    report.update(_latency_block(latencies))
    if check_oracle:
        report["oracle_matches"] = hits
        report["oracle_trials"] = trials
    return report
