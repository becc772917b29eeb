"""Seedable randomness with a pinned, named algorithm.

Every sampling path in the simulator draws from a ``numpy.random.Generator``
backed by PCG64.  The algorithm name is recorded in each transcript so a run
can be reproduced bit for bit from its (seed, parameters) alone.

Split rules, so batches and per-tuple parallelism stay deterministic:

* tuple stream ``j`` of a run seeded ``s`` is ``PCG64(SeedSequence(s, spawn_key=(j,)))``
  (stream index = bit position of the secret);
* run ``r`` of a batch seeded ``s`` uses the derived integer seed
  ``batch_seeds(s, runs)[r]``.
"""

from __future__ import annotations

import numpy as np

RNG_ALGORITHM = "pcg64"


def generator(seed: int) -> np.random.Generator:
    """Root generator for a run."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed)))


def stream(seed: int, index: int) -> np.random.Generator:
    """Independent generator for one stream of a run (index = bit position)."""
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,)))
    )


def batch_seeds(seed: int, runs: int) -> list[int]:
    """Derive one integer seed per run of a batch experiment."""
    state = np.random.SeedSequence(seed).generate_state(runs, dtype=np.uint64)
    return [int(x) for x in state]
