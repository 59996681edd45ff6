"""Deterministic random streams shared by simulation code.

Splitting rule: logical stream ``i`` of master seed ``s`` is a PCG64
generator seeded with ``s XOR i``. Chunked simulations assign chunk ``i``
to stream ``i``, so results depend only on the master seed, never on how
chunks are distributed across workers.
"""

from __future__ import annotations

import numpy as np


def stream(seed: int, index: int = 0) -> np.random.Generator:
    return np.random.Generator(np.random.PCG64(seed ^ index))
