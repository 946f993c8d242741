"""Counter-based random streams for reproducible parallel experiments.

Streams are Philox4x64 generators keyed by (seed, stream index).  Distinct
keys yield statistically independent streams, so concurrent trials can each
own a stream without any coordination; the position within a stream plays the
role of the draw index.  Results therefore depend only on (seed, index), never
on thread count or execution order.
"""

from __future__ import annotations

import numpy as np

_MASK64 = (1 << 64) - 1


def stream(seed: int, index: int = 0) -> np.random.Generator:
    """Generator for the (seed, index) stream."""
    key = np.array([seed & _MASK64, index & _MASK64], dtype=np.uint64)
    return np.random.Generator(np.random.Philox(key=key))


def derive_seed(seed: int, tag: int) -> int:
    """Deterministically mix a tag into a seed (splitmix64 round).

    Used where a sub-experiment needs its own seed space, e.g. one seed per
    probe of a sample-size search.
    """
    z = (seed + (tag + 1) * 0x9E3779B97F4A7C15) & _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)
