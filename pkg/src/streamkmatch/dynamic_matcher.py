"""Fully dynamic streaming k-matching over a grid of linear sketches.

Every edge update touches d2*d2 grid keys: one per pair (i, j) of the
two-level hash values of its endpoints, combined with the edge's weight
(or rounded weight bucket in approximation mode).  Each key owns an
edge sampler over the universe of vertex pairs; a query draws one edge
from every live sampler, then solves max-weight k-matching exactly on
the sampled subgraph.  With the scheme built for parameter 2k and the
sampler failure rate delta = 1/(20 k^4 ln 2k), the answer is optimal
with probability at least 1 - 11/(20 k^3 ln 2k).

For speed the samplers are not separate objects: all one-sparse cells
live in a single flat dict keyed by a packed integer
(pair, weight-id, repetition, level), and every sampler in the grid
shares one set of level hashes and one fingerprint base z.  Sharing
does not disturb the per-sampler failure analysis (each bound is a
per-cell union bound) and buys an order of magnitude on updates.

Cells carry a fourth counter, the sum of true edge weights, so that
approximation mode can report exact weights for the edges it samples
even though its grid keys only know the rounded bucket.
"""

from __future__ import annotations

import math
from bisect import insort
from fractions import Fraction

from .core import (
    DELETE,
    Edge,
    INSERT,
    InvalidParameter,
    MalformedStream,
    StreamElement,
    edge_at_index,
    matching_of,
)
from .hashing import FIELD_PRIME, build_hash_scheme, random_kwise, scheme_eval
from .solver import NO_K_MATCHING, max_weight_k_matching

_WID_CAP = 4096  # distinct weight keys supported per grid
_RL_BITS = 9     # repetition/level packed into (rep << 5) | level


def default_delta(k: int) -> float:
    return 1.0 / (20 * k ** 4 * math.log(2 * k))


def round_weight(w, epsilon: float) -> int:
    """The integer t with (1+eps)^(t-1) < w <= (1+eps)^t, exactly."""
    if w <= 0:
        raise InvalidParameter("weight must be positive for rounding")
    if not (0 < epsilon < 1):
        raise InvalidParameter("epsilon must lie in (0, 1)")
    base = Fraction(1) + Fraction(epsilon)
    t = math.ceil(math.log(w) / math.log1p(epsilon))
    fw = Fraction(w)
    while base ** t < fw:
        t += 1
    while base ** (t - 1) >= fw:
        t -= 1
    return t


class DynamicMatcher:
    def __init__(self, n: int, k: int, rng, epsilon=None, delta=None, validate=False):
        if k < 1:
            raise InvalidParameter("k must be >= 1")
        if n < 2 * k:
            raise InvalidParameter(f"n={n} cannot host a {k}-matching")
        if epsilon is not None and not (0 < epsilon < 1):
            raise InvalidParameter("epsilon must lie in (0, 1)")
        self.n = n
        self.k = k
        self.epsilon = epsilon
        self.delta = default_delta(k) if delta is None else delta
        if not (0 < self.delta < 1):
            raise InvalidParameter("delta must lie in (0, 1)")
        self.scheme = build_hash_scheme(n, 2 * k, rng)
        self.universe = n * (n - 1) // 2
        self.levels = max(1, math.ceil(math.log2(max(self.universe, 2)))) + 1
        if self.levels > 32:
            raise InvalidParameter("vertex count too large for this grid")
        self.reps = max(1, math.ceil(math.log2(1 / self.delta)))
        kappa = self.reps + 2
        span = 1 << (self.levels - 1)
        self.level_hashes = [
            random_kwise(kappa, span, rng) for _ in range(self.reps)
        ]
        self.z = rng.randrange(1, FIELD_PRIME)
        self.cells = {}
        self.pairs = {}          # pair id -> ordered list of live weight keys
        self._counts = {}        # (pair id, weight id) packed -> live edges
        self._wids = {}          # weight key -> small int
        self._weight_counts = {} # true weight -> live edge count
        self._vcache = {}        # vertex -> tuple of scheme values
        self._ecache = {}        # eid -> (packed rep/level tuple, z^eid)
        self._live = {} if validate else None
        # instrumentation
        self.updates = 0
        self.last_keys_touched = 0
        self.max_keys_touched = 0
        self.last_fail_count = 0

    # -- update path ---------------------------------------------------

    def _vhash(self, x: int):
        got = self._vcache.get(x)
        if got is None:
            got = self._vcache[x] = tuple(scheme_eval(self.scheme, x))
        return got

    def _edge_entry(self, eid: int):
        ent = self._ecache.get(eid)
        if ent is None:
            top = self.levels - 1
            levs = []
            for rix, g in enumerate(self.level_hashes):
                val = g(eid)
                lev = top if val == 0 else min((val & -val).bit_length() - 1, top)
                levs.append((rix << 5) | lev)
            ent = self._ecache[eid] = (tuple(levs), pow(self.z, eid, FIELD_PRIME))
        return ent

    def process_update(self, el: StreamElement) -> None:
        e, op = el
        d = 1 if op == INSERT else -1
        u, v, w = e
        if self._live is not None:
            self._check(el, u, v, w, d)
        if self.epsilon is None:
            key_w = w
        else:
            key_w = round_weight(w, self.epsilon)
        wid = self._wids.get(key_w)
        if wid is None:
            wid = self._wids[key_w] = len(self._wids)
            if wid >= _WID_CAP:
                raise InvalidParameter("too many distinct weight keys")
        eid = u * self.n - u * (u + 1) // 2 + (v - u - 1)
        levs, zj = self._edge_entry(eid)
        hu = self._vhash(u)
        hv = self._vhash(v)
        dz = d * zj
        di = d * eid
        dw = d * w
        cells = self.cells
        cget = cells.get
        pairs = self.pairs
        counts = self._counts
        d4 = self.scheme.d4
        if d == 1:
            for i in hu:
                ibase = i * d4
                for j in hv:
                    pb = ibase + j
                    k2 = pb * _WID_CAP + wid
                    c = counts.get(k2)
                    if c is None:
                        counts[k2] = 1
                        lst = pairs.get(pb)
                        if lst is None:
                            pairs[pb] = [key_w]
                        else:
                            insort(lst, key_w)
                    elif c == -1:
                        # shard ingestion can see the delete first
                        del counts[k2]
                        lst = pairs[pb]
                        lst.remove(key_w)
                        if not lst:
                            del pairs[pb]
                    else:
                        counts[k2] = c + 1
                    kb = k2 << _RL_BITS
                    for rl in levs:
                        key = kb | rl
                        cell = cget(key)
                        if cell is None:
                            cells[key] = [1, di, dw, dz]
                        else:
                            cell[0] += 1
                            cell[1] += di
                            cell[2] += dw
                            cell[3] += dz
                            if not (cell[0] or cell[1] or cell[2] or cell[3]):
                                del cells[key]
        else:
            for i in hu:
                ibase = i * d4
                for j in hv:
                    pb = ibase + j
                    k2 = pb * _WID_CAP + wid
                    c = counts.get(k2)
                    if c is None:
                        counts[k2] = -1
                        lst = pairs.get(pb)
                        if lst is None:
                            pairs[pb] = [key_w]
                        else:
                            insort(lst, key_w)
                    elif c == 1:
                        del counts[k2]
                        lst = pairs[pb]
                        lst.remove(key_w)
                        if not lst:
                            del pairs[pb]
                    else:
                        counts[k2] = c - 1
                    kb = k2 << _RL_BITS
                    for rl in levs:
                        key = kb | rl
                        cell = cget(key)
                        if cell is None:
                            cells[key] = [-1, di, dw, dz]
                        else:
                            cell[0] -= 1
                            cell[1] += di
                            cell[2] += dw
                            cell[3] += dz
                            if not (cell[0] or cell[1] or cell[2] or cell[3]):
                                del cells[key]
        cnt = self._weight_counts.get(w, 0) + d
        if cnt:
            self._weight_counts[w] = cnt
        else:
            self._weight_counts.pop(w, None)
        self.updates += 1
        self.last_keys_touched = len(hu) * len(hv)
        if self.last_keys_touched > self.max_keys_touched:
            self.max_keys_touched = self.last_keys_touched

    def _check(self, el, u, v, w, d):
        key = (u, v)
        if u == v or u < 0 or v >= self.n:
            raise MalformedStream(self.updates, f"bad endpoints ({u}, {v})")
        if w < 0 or w != int(w):
            raise MalformedStream(self.updates, f"bad dynamic weight {w}")
        if d > 0:
            if key in self._live:
                raise MalformedStream(self.updates, f"duplicate insert of {key}")
            self._live[key] = w
        else:
            if self._live.get(key) != w:
                raise MalformedStream(self.updates, f"bad delete of {key}")
            del self._live[key]

    # -- query path ----------------------------------------------------

    def query(self):
        sampled = self._sample_edges()
        if self.epsilon is None:
            return max_weight_k_matching(sampled, self.k)
        base = 1.0 + self.epsilon
        rounded = [
            Edge(e.u, e.v, base ** round_weight(e.wt, self.epsilon))
            for e in sampled
        ]
        answer = max_weight_k_matching(rounded, self.k)
        if answer is NO_K_MATCHING:
            return answer
        true = {(e.u, e.v): e.wt for e in sampled}
        return matching_of(
            Edge(e.u, e.v, true[(e.u, e.v)]) for e in answer.edges
        )

    def _sample_edges(self):
        """Query every live sampler once; decoded edges carry true weights."""
        q = FIELD_PRIME
        n_univ = self.universe
        levels = self.levels
        reps = self.reps
        cells = self.cells
        ecache = self._ecache
        wids = self._wids
        found = {}
        fails = 0
        for pb, live_weights in self.pairs.items():
            pb_base = pb * _WID_CAP
            for key_w in live_weights:
                kb = (pb_base + wids[key_w]) << _RL_BITS
                got = None
                for r in range(reps):
                    rb = kb | (r << 5)
                    c0 = c1 = c2 = fp = 0
                    for lev in range(levels - 1, -1, -1):
                        c = cells.get(rb | lev)
                        if c is not None:
                            c0 += c[0]
                            c1 += c[1]
                            c2 += c[2]
                            fp += c[3]
                        if c0 <= 0 or c1 % c0:
                            continue
                        j = c1 // c0
                        if not 0 <= j < n_univ:
                            continue
                        ent = ecache.get(j)
                        zj = ent[1] if ent is not None else pow(self.z, j, q)
                        if (fp - c0 * zj) % q == 0:
                            if c2 % c0 == 0:
                                got = (j, c2 // c0)
                            break
                    if got is not None:
                        break
                if got is None:
                    fails += 1
                else:
                    found[got[0]] = got[1]
        self.last_fail_count = fails
        n = self.n
        return [
            Edge(*edge_at_index(eid, n), wt) for eid, wt in found.items()
        ]

    # -- bookkeeping ---------------------------------------------------

    @property
    def distinct_live_weights(self) -> int:
        return len(self._weight_counts)

    @property
    def distinct_weight_keys(self) -> int:
        return len(self._wids)

    @property
    def live_sampler_count(self) -> int:
        return len(self._counts)

    def stats(self) -> dict:
        return {
            "updates": self.updates,
            "distinct_live_weights": self.distinct_live_weights,
            "distinct_weight_keys": self.distinct_weight_keys,
            "live_samplers": self.live_sampler_count,
            "live_pairs": len(self.pairs),
            "cells": len(self.cells),
            "keys_touched_last": self.last_keys_touched,
            "keys_touched_max": self.max_keys_touched,
            "fail_count_last_query": self.last_fail_count,
        }

    def merge_from(self, other: "DynamicMatcher") -> None:
        """Cell-wise combine of a grid built with identical randomness
        over a disjoint stream (sharded ingestion)."""
        if (
            other.scheme != self.scheme
            or other.level_hashes != self.level_hashes
            or other.z != self.z
            or other.epsilon != self.epsilon
        ):
            raise InvalidParameter("grids built with different randomness")
        rl_mask = (1 << _RL_BITS) - 1
        rev = {wid: w for w, wid in other._wids.items()}
        for okey, c in other.cells.items():
            rl = okey & rl_mask
            packed = okey >> _RL_BITS
            pb, owid = divmod(packed, _WID_CAP)
            key_w = rev[owid]
            wid = self._wids.get(key_w)
            if wid is None:
                wid = self._wids[key_w] = len(self._wids)
                if wid >= _WID_CAP:
                    raise InvalidParameter("too many distinct weight keys")
            key = ((pb * _WID_CAP + wid) << _RL_BITS) | rl
            mine = self.cells.get(key)
            if mine is None:
                self.cells[key] = list(c)
            else:
                for idx in range(4):
                    mine[idx] += c[idx]
                if not (mine[0] or mine[1] or mine[2] or mine[3]):
                    del self.cells[key]
        for ok2, cnt in other._counts.items():
            pb, owid = divmod(ok2, _WID_CAP)
            key_w = rev[owid]
            k2 = pb * _WID_CAP + self._wids[key_w]
            total = self._counts.get(k2, 0) + cnt
            if total:
                if k2 not in self._counts:
                    lst = self.pairs.get(pb)
                    if lst is None:
                        self.pairs[pb] = [key_w]
                    else:
                        insort(lst, key_w)
                self._counts[k2] = total
            else:
                self._counts.pop(k2, None)
                lst = self.pairs.get(pb)
                if lst is not None:
                    try:
                        lst.remove(key_w)
                    except ValueError:
                        pass
                    if not lst:
                        del self.pairs[pb]
        for w, cnt in other._weight_counts.items():
            total = self._weight_counts.get(w, 0) + cnt
            if total:
                self._weight_counts[w] = total
            else:
                self._weight_counts.pop(w, None)
        self._ecache.update(other._ecache)
        self.updates += other.updates


def new_dynamic_matcher(n: int, k: int, rng, delta=None, validate=False) -> DynamicMatcher:
    return DynamicMatcher(n, k, rng, delta=delta, validate=validate)


def new_approx_matcher(n: int, k: int, epsilon: float, rng, delta=None) -> DynamicMatcher:
    if epsilon is None:
        raise InvalidParameter("epsilon required for the approximate matcher")
    return DynamicMatcher(n, k, rng, epsilon=epsilon, delta=delta)
