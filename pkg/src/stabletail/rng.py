"""Deterministic seeded random streams for reproducible simulation.

Built on the counter-based Philox generator: a stream is identified by the
pair (master seed, stream index), so replications of a Monte Carlo
experiment can be fanned out to any number of workers and still draw
exactly the same numbers.
"""

from __future__ import annotations

import numpy as np


class RandomStream:
    """A single-owner uniform/exponential source keyed by (seed, index).

    The same (seed, index) pair always reproduces the same draw sequence;
    distinct indices give statistically independent streams.
    """

    def __init__(self, seed: int, index: int = 0):
        self.seed = int(seed)
        self.index = int(index)
        key = np.array([self.seed, self.index], dtype=np.uint64)
        self._gen = np.random.Generator(np.random.Philox(key=key))

    def child(self, index: int) -> "RandomStream":
        """Derive the independent stream (master seed, index)."""
        return RandomStream(self.seed, index)

    def uniform(self, low: float = 0.0, high: float = 1.0, size=None):
        return self._gen.uniform(low, high, size)

    def exponential(self, size=None):
        return self._gen.standard_exponential(size)

    def __repr__(self):
        return f"RandomStream(seed={self.seed}, index={self.index})"
