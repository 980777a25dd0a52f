"""Random valid configuration matrices for sweeps and property tests."""

from __future__ import annotations

import random

from .config import ConfigurationMatrix


def random_valid_config(rng: random.Random, max_rows: int = 6, max_cols: int = 7, max_entry: int = 4) -> ConfigurationMatrix:
    """Sample a matrix with ``K = sum(n) - 3``, row sums ``n + 1`` and no zero column.

    Dimensions are capped at ``max_entry - 1`` so that no entry can exceed
    ``max_entry``.  Not uniform over configurations.
    """
    max_dim = max_entry - 1
    while True:
        m = rng.randint(1, max_rows)
        dims = [rng.randint(1, max_dim) for _ in range(m)]
        K = sum(dims) - 3
        if 1 <= K <= max_cols:
            break
    budget = [n + 1 for n in dims]
    q = [[0] * K for _ in range(m)]
    for a in range(K):
        # one unit per column first; the total budget K + m + 3 always covers it
        r = rng.choice([i for i in range(m) if budget[i] > 0])
        q[r][a] += 1
        budget[r] -= 1
    for r in range(m):
        for _ in range(budget[r]):
            q[r][rng.randrange(K)] += 1
    return ConfigurationMatrix(dims, q)
