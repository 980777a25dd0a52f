"""Splitting a CP^1 row into two, which describes the same manifold with one more factor."""

from __future__ import annotations

from dataclasses import dataclass

from .config import ConfigurationMatrix, canonical_key

__all__ = ["ExpansionStep", "expand_row", "legal_steps", "expansions_to_count"]


@dataclass(frozen=True)
class ExpansionStep:
    row: int
    column: int


def legal_steps(cfg: ConfigurationMatrix) -> list[ExpansionStep]:
    return [
        ExpansionStep(r, a)
        for r in range(cfg.m)
        if cfg.dims[r] == 1
        for a in range(cfg.K)
        if cfg.degrees[r][a] >= 1
    ]


def expand_row(cfg: ConfigurationMatrix, step: ExpansionStep) -> ConfigurationMatrix:
    """Replace CP^1 row ``step.row`` by two CP^1 rows joined by a new bidegree (1,1) column.

    The first new row takes the unit vector at ``step.column``, the second the
    remainder.  The new column is placed first.
    """
    r, a = step.row, step.column
    if not 0 <= r < cfg.m or cfg.dims[r] != 1:
        raise ValueError(f"row {r} is not a CP^1 factor")
    if not 0 <= a < cfg.K or cfg.degrees[r][a] < 1:
        raise ValueError(f"row {r} has zero degree in column {a}")
    unit = tuple(1 if j == a else 0 for j in range(cfg.K))
    rest = tuple(q - u for q, u in zip(cfg.degrees[r], unit))
    dims, rows = [], []
    for i, (n, row) in enumerate(zip(cfg.dims, cfg.degrees)):
        if i == r:
            dims += [1, 1]
            rows += [(1,) + unit, (1,) + rest]
        else:
            dims.append(n)
            rows.append((0,) + row)
    return ConfigurationMatrix(dims, rows)


def expansions_to_count(cfg: ConfigurationMatrix, target_m: int, limit: int = 1000) -> list[ConfigurationMatrix]:
    """Canonical forms of all configurations with ``target_m`` rows reachable by row splits.

    Breadth first, deduplicated by canonical form; every level keeps at most
    ``limit`` configurations (the smallest canonical keys).  Returns ``[cfg]``
    unchanged when ``target_m == cfg.m``.
    """
    if target_m < cfg.m:
        raise ValueError(f"target {target_m} is below the current row count {cfg.m}")
    if limit < 1:
        raise ValueError("limit must be positive")
    if target_m == cfg.m:
        return [cfg]
    frontier = [cfg]
    for _ in range(target_m - cfg.m):
        keys = {canonical_key(expand_row(node, step)) for node in frontier for step in legal_steps(node)}
        if not keys:
            return []
        frontier = [ConfigurationMatrix([k[0] for k in key], [k[1:] for k in key]) for key in sorted(keys)[:limit]]
    return frontier
