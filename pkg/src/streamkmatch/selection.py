"""Deterministic worst-case linear selection, in resumable micro-steps.

The reducer needs "keep the t heaviest" under a hard budget of work per
stream arrival, so the selection routines here are written as
generators: every `yield` accounts for touching one element.  Draining
a generator to completion gives the plain (non-incremental) behavior.

Keys are assumed pairwise distinct (the edge heaviness order guarantees
this), which keeps the pivot partition three-way logic trivial.
"""

from __future__ import annotations


def _select_steps(items, rank, key, out):
    """Median-of-medians select: leave in out[0] the element of the given
    ascending rank (0-based).  Yields once per element touch."""
    while True:
        if len(items) <= 10:
            for _ in items:
                yield
            items = sorted(items, key=key)
            out[0] = items[rank]
            return
        medians = []
        for g in range(0, len(items), 5):
            group = items[g : g + 5]
            for _ in group:
                yield
            group.sort(key=key)
            medians.append(group[len(group) // 2])
        sub = [None]
        yield from _select_steps(medians, len(medians) // 2, key, sub)
        pivot = key(sub[0])
        lows, highs = [], []
        pivot_item = None
        for x in items:
            yield
            kx = key(x)
            if kx < pivot:
                lows.append(x)
            elif kx > pivot:
                highs.append(x)
            else:
                pivot_item = x
        if rank < len(lows):
            items = lows
        elif rank == len(lows):
            out[0] = pivot_item
            return
        else:
            rank -= len(lows) + 1
            items = highs


def top_t_steps(items, t, key, out):
    """Leave in out[0] the list of the t largest elements by key.
    Yields once per element touch; worst-case linear total."""
    if t <= 0:
        out[0] = []
        return
    if len(items) <= t:
        for _ in items:
            yield
        out[0] = list(items)
        return
    # threshold = smallest element of the top t block
    sub = [None]
    yield from _select_steps(items, len(items) - t, key, sub)
    threshold = key(sub[0])
    picked = []
    for x in items:
        yield
        if key(x) >= threshold:
            picked.append(x)
    out[0] = picked


def select_rank(items, rank, key):
    """Plain (drained) form of _select_steps."""
    out = [None]
    for _ in _select_steps(list(items), rank, key, out):
        pass
    return out[0]


def top_t(items, t, key):
    """Plain (drained) form of top_t_steps."""
    out = [None]
    for _ in top_t_steps(list(items), t, key, out):
        pass
    return out[0]
