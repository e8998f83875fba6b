"""Deterministic random streams for parallel experiments.

Every unit of Monte-Carlo work (one benchmarking sequence, one grid point,
one baseline repetition) draws from its own generator, keyed by the run seed
plus a small integer path. Streams are built on the counter-based Philox
bit generator, so results are independent of execution order and thread
count: the stream for path ``(a, b, c, d)`` is the same whether it is the
first or the last one opened.
"""

from __future__ import annotations

import numpy as np

_KEY_SALT = 0x5F519C14  # fixed second key word; do not change


def stream(seed: int, *path: int) -> np.random.Generator:
    """Return the generator for `path` under `seed`.

    Accepts up to four path components (purpose, outer index, inner index,
    subindex); unused components default to zero.
    """
    if len(path) > 4:
        raise ValueError(f"stream path too deep: {path}")
    counter = [int(p) & 0xFFFFFFFFFFFFFFFF for p in path] + [0] * (4 - len(path))
    key = [int(seed) & 0xFFFFFFFFFFFFFFFF, _KEY_SALT]
    return np.random.Generator(np.random.Philox(counter=counter, key=key))
