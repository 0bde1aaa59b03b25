"""Deterministic, splittable random streams.

Every stochastic routine in this package draws from a counter-based Philox
generator keyed by the run seed. Stream `i` starts the 256-bit Philox counter
at `i << 192`, so each stream owns 2^192 blocks and streams can never collide.
Two consequences the simulators rely on:

* the same (seed, stream) pair always reproduces the same draws, on any
  machine and regardless of how many other streams exist;
* adding or removing streams (say, growing the rule population) never
  reshuffles the draws of an unrelated stream.
"""

from __future__ import annotations

import numpy as np

from .errors import DomainError

_U64_MAX = 2**64 - 1


def substream(seed: int, stream: int) -> np.random.Generator:
    """Return the generator for stream `stream` under `seed` (both u64)."""
    if not isinstance(seed, int) or not 0 <= seed <= _U64_MAX:
        raise DomainError(f"seed must be an integer in [0, 2^64): got {seed!r}")
    if not isinstance(stream, int) or not 0 <= stream <= _U64_MAX:
        raise DomainError(f"stream id must be an integer in [0, 2^64): got {stream!r}")
    return np.random.Generator(np.random.Philox(key=seed, counter=stream << 192))
