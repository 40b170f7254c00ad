"""Sampling a uniform live index from a dynamically updated vector.

Standard construction: R independent repetitions, each subsampling the
universe at geometric rates (level l keeps index x iff the repetition's
hash of x is divisible by 2^l), with a one-sparse recovery cell per
level.  A cell holds the running sums (c0, c1, fp) = (sum of x_i,
sum of i*x_i, sum of x_i * z^i mod q); it decodes an index exactly when
the vector restricted to that level has a single live index, and the
fingerprint makes a false decode vanishingly unlikely.

Internally one cell is stored per (repetition, exact level of the
index); the per-level cells of the classic description are recovered
at query time as suffix sums, which halves update cost and changes no
semantics (everything is a sum).
"""

from __future__ import annotations

import math
from typing import NamedTuple

from .core import InvalidParameter
from .hashing import FIELD_PRIME, random_kwise


class Fail:
    """Sentinel: the sampler could not decode any live index."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "Fail"

    def __bool__(self):
        return False


FAIL = Fail()


class Sample(NamedTuple):
    index: int
    count: int  # multiplicity of the decoded index


class L0Sampler:
    def __init__(self, universe_size: int, delta: float, rng):
        if universe_size < 1:
            raise InvalidParameter("universe size must be >= 1")
        if not (0 < delta < 1):
            raise InvalidParameter("delta must lie in (0, 1)")
        self.universe_size = universe_size
        self.delta = delta
        self.levels = max(1, math.ceil(math.log2(universe_size))) + 1
        self.reps = max(1, math.ceil(math.log2(1 / delta)))
        kappa = self.reps + 2
        span = 1 << (self.levels - 1)
        self.level_hashes = [random_kwise(kappa, span, rng) for _ in range(self.reps)]
        self.z = rng.randrange(1, FIELD_PRIME)
        self.cells = {}  # (rep, exact level) -> [c0, c1, fp]

    def _exact_level(self, index: int, rep: int) -> int:
        g = self.level_hashes[rep](index)
        if g == 0:
            return self.levels - 1
        return min((g & -g).bit_length() - 1, self.levels - 1)

    def update(self, index: int, delta: int) -> None:
        if not (0 <= index < self.universe_size):
            raise InvalidParameter(f"index {index} outside universe")
        zj = pow(self.z, index, FIELD_PRIME)
        dz = delta * zj
        di = delta * index
        cells = self.cells
        for rep in range(self.reps):
            key = (rep, self._exact_level(index, rep))
            c = cells.get(key)
            if c is None:
                cells[key] = [delta, di, dz]
            else:
                c[0] += delta
                c[1] += di
                c[2] += dz
                if c[0] == 0 and c[1] == 0 and c[2] % FIELD_PRIME == 0:
                    del cells[key]

    def query(self):
        """A decoded (index, multiplicity), or FAIL."""
        q = FIELD_PRIME
        n = self.universe_size
        cells = self.cells
        for rep in range(self.reps):
            c0 = c1 = fp = 0
            for lev in range(self.levels - 1, -1, -1):
                c = cells.get((rep, lev))
                if c is not None:
                    c0 += c[0]
                    c1 += c[1]
                    fp += c[2]
                if c0 == 0:
                    continue
                if c1 % c0:
                    continue
                j = c1 // c0
                if not (0 <= j < n):
                    continue
                if (fp - c0 * pow(self.z, j, q)) % q == 0:
                    return Sample(j, c0)
        return FAIL

    def merge(self, other: "L0Sampler") -> None:
        """Cell-wise addition; both samplers must share hashes and z."""
        if (
            other.universe_size != self.universe_size
            or other.level_hashes != self.level_hashes
            or other.z != self.z
        ):
            raise InvalidParameter("samplers built with different randomness")
        for key, c in other.cells.items():
            mine = self.cells.get(key)
            if mine is None:
                self.cells[key] = list(c)
            else:
                mine[0] += c[0]
                mine[1] += c[1]
                mine[2] += c[2]
                if mine[0] == 0 and mine[1] == 0 and mine[2] % FIELD_PRIME == 0:
                    del self.cells[key]

    def cells_snapshot(self) -> str:
        """Cells as sorted decimal integer triples, one per line."""
        lines = []
        for (rep, lev), c in sorted(self.cells.items()):
            lines.append(f"{rep} {lev} {c[0]} {c[1]} {c[2] % FIELD_PRIME}")
        return "\n".join(lines)


def sampler_update(s: L0Sampler, index: int, delta: int) -> None:
    s.update(index, delta)


def sampler_query(s: L0Sampler):
    return s.query()
