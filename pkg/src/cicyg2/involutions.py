"""Exhaustive search for antiholomorphic involutions of a configuration.

Every projective factor carries one of three involutions: ``A`` (plain
conjugation), ``B`` (conjugation with a symplectic twist, fixed-point free,
odd dimensions only) or ``C`` (conjugate-swap with an identical factor).
An assignment acts freely exactly when at least one factor carries ``B``.

The search runs in two stages.  First every set of disjoint ``C`` swaps that
leaves the column multiset unchanged is found.  Then, for each of them, every
non-empty set of remaining odd-dimensional rows passing the parity rule
becomes a ``B`` set.
"""

from __future__ import annotations

import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Iterator

from .config import ConfigurationMatrix, invariant_under_row_swaps

__all__ = [
    "CCombination",
    "BCombination",
    "InvolutionAssignment",
    "enumerate_c_combinations",
    "b_admissible",
    "enumerate_b_combinations",
    "enumerate_free_assignments",
]


@dataclass(frozen=True, order=True)
class CCombination:
    pairs: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        pairs = tuple(sorted(tuple(sorted(p)) for p in self.pairs))
        object.__setattr__(self, "pairs", pairs)
        flat = [r for p in pairs for r in p]
        if len(flat) != len(set(flat)):
            raise ValueError(f"C pairs overlap: {pairs}")

    @property
    def rows(self) -> frozenset[int]:
        return frozenset(r for p in self.pairs for r in p)

    def __len__(self) -> int:
        return len(self.pairs)


@dataclass(frozen=True, order=True)
class BCombination:
    rows: tuple[int, ...]

    def __post_init__(self):
        rows = tuple(sorted(set(self.rows)))
        if not rows:
            raise ValueError("a B combination needs at least one row")
        object.__setattr__(self, "rows", rows)


@dataclass(frozen=True, order=True)
class InvolutionAssignment:
    c: CCombination
    b: BCombination

    def __post_init__(self):
        if self.c.rows & set(self.b.rows):
            raise ValueError(f"rows {sorted(self.c.rows & set(self.b.rows))} carry both B and C")

    @property
    def n_c(self) -> int:
        return len(self.c)

    def labels(self, m: int) -> list[str]:
        """Per-row labels ``A``, ``B``, ``C1``, ``C2``, ... (pairs numbered in order)."""
        out = ["A"] * m
        for r in self.b.rows:
            out[r] = "B"
        for k, (r, s) in enumerate(self.c.pairs, start=1):
            out[r] = out[s] = f"C{k}"
        return out


def _disjoint_pair_sets(pairs: list[tuple[int, int]]) -> Iterator[tuple[tuple[int, int], ...]]:
    def rec(start: int, used: frozenset[int], chosen: tuple):
        yield chosen
        for i in range(start, len(pairs)):
            r, s = pairs[i]
            if r not in used and s not in used:
                yield from rec(i + 1, used | {r, s}, chosen + ((r, s),))

    yield from rec(0, frozenset(), ())


def enumerate_c_combinations(cfg: ConfigurationMatrix) -> list[CCombination]:
    """All sets of disjoint equal-dimension row swaps that only permute columns.

    The empty set is always included.  Sorted lexicographically by pair list.
    """
    candidates = [(r, s) for r, s in itertools.combinations(range(cfg.m), 2) if cfg.dims[r] == cfg.dims[s]]
    found = [CCombination(ps) for ps in _disjoint_pair_sets(candidates) if invariant_under_row_swaps(cfg, ps)]
    return sorted(found, key=lambda c: c.pairs)


def b_admissible(cfg: ConfigurationMatrix, c: CCombination, rows: Iterable[int]) -> bool:
    """Parity rule for putting ``B`` on every row of ``rows`` at once.

    Columns touching ``rows`` are grouped into classes of identical columns
    (compared over all rows).  A class of odd size whose degrees summed over
    ``rows`` are odd makes the combination inconsistent.
    """
    rows = sorted(set(rows))
    for r in rows:
        if not 0 <= r < cfg.m:
            raise ValueError(f"row {r} out of range")
        if cfg.dims[r] % 2 == 0:
            raise ValueError(f"row {r} has even dimension {cfg.dims[r]}; B needs odd")
        if r in c.rows:
            raise ValueError(f"row {r} already carries a C involution")
    classes: dict[tuple[int, ...], list[int]] = defaultdict(list)
    for a in range(cfg.K):
        if any(cfg.degrees[r][a] for r in rows):
            classes[cfg.column(a)].append(a)
    for column, members in classes.items():
        if len(members) % 2 == 1:
            total = len(members) * sum(column[r] for r in rows)
            if total % 2 == 1:
                return False
    return True


def enumerate_b_combinations(cfg: ConfigurationMatrix, c: CCombination) -> list[BCombination]:
    eligible = [r for r in range(cfg.m) if cfg.dims[r] % 2 == 1 and r not in c.rows]
    out = []
    for size in range(1, len(eligible) + 1):
        for rows in itertools.combinations(eligible, size):
            if b_admissible(cfg, c, rows):
                out.append(BCombination(rows))
    return sorted(out)


def enumerate_free_assignments(cfg: ConfigurationMatrix) -> list[InvolutionAssignment]:
    return [
        InvolutionAssignment(c, b)
        for c in enumerate_c_combinations(cfg)
        for b in enumerate_b_combinations(cfg, c)
    ]
