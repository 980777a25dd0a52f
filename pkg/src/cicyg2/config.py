"""Configuration matrices ``[n || q]`` and the operations that only need the matrix.

A configuration is stored as a dimension vector ``dims`` (one entry per
projective factor) and an ``m x K`` degree matrix ``degrees``.  All indices
in this package are 0-based.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from typing import Iterable, Sequence

__all__ = [
    "ConfigurationMatrix",
    "ValidationReport",
    "validate",
    "canonical_form",
    "canonical_key",
    "invariant_under_row_swaps",
]


@dataclass(frozen=True)
class ConfigurationMatrix:
    """Projective factor dimensions plus the degree matrix of the defining polynomials.

    Construction only enforces structure (rectangular, non-negative, at
    least one row and column).  The Calabi-Yau conditions are checked by
    :func:`validate`.
    """

    dims: tuple[int, ...]
    degrees: tuple[tuple[int, ...], ...]

    def __init__(self, dims: Iterable[int], degrees: Iterable[Iterable[int]]):
        dims = tuple(int(n) for n in dims)
        degrees = tuple(tuple(int(q) for q in row) for row in degrees)
        if not dims:
            raise ValueError("configuration needs at least one projective factor")
        if len(degrees) != len(dims):
            raise ValueError(f"expected {len(dims)} degree rows, got {len(degrees)}")
        if any(n < 1 for n in dims):
            raise ValueError(f"projective dimensions must be positive, got {dims}")
        ncols = len(degrees[0])
        if ncols == 0:
            raise ValueError("configuration needs at least one polynomial column")
        for r, row in enumerate(degrees):
            if len(row) != ncols:
                raise ValueError(f"row {r} has {len(row)} entries, expected {ncols}")
            if any(q < 0 for q in row):
                raise ValueError(f"row {r} has a negative degree")
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "degrees", degrees)

    @classmethod
    def from_columns(cls, dims: Iterable[int], columns: Sequence[Sequence[int]]) -> ConfigurationMatrix:
        dims = tuple(dims)
        return cls(dims, [[col[r] for col in columns] for r in range(len(dims))])

    @property
    def m(self) -> int:
        return len(self.dims)

    @property
    def K(self) -> int:
        return len(self.degrees[0])

    def column(self, a: int) -> tuple[int, ...]:
        return tuple(row[a] for row in self.degrees)

    def columns(self) -> list[tuple[int, ...]]:
        return [self.column(a) for a in range(self.K)]

    def permuted(self, row_perm: Sequence[int], col_perm: Sequence[int]) -> ConfigurationMatrix:
        """New matrix whose row ``i`` is old row ``row_perm[i]`` and column ``j`` is old column ``col_perm[j]``."""
        return ConfigurationMatrix(
            [self.dims[r] for r in row_perm],
            [[self.degrees[r][a] for a in col_perm] for r in row_perm],
        )

    def __str__(self) -> str:
        width = max(len(str(v)) for v in (*self.dims, *(q for row in self.degrees for q in row)))
        lines = []
        for n, row in zip(self.dims, self.degrees):
            entries = " ".join(str(q).rjust(width) for q in row)
            lines.append(f"{str(n).rjust(width)} | {entries}")
        return "\n".join(lines)


@dataclass(frozen=True)
class ValidationReport:
    threefold_ok: bool
    chern_ok: bool
    degenerate_columns: tuple[int, ...] = ()
    messages: tuple[str, ...] = field(default=())

    @property
    def ok(self) -> bool:
        return self.threefold_ok and self.chern_ok and not self.degenerate_columns


def validate(cfg: ConfigurationMatrix) -> ValidationReport:
    """Check the threefold condition ``K = sum(n) - 3`` and vanishing first Chern class.

    Failures are returned as report content, never raised.
    """
    messages = []
    expected_k = sum(cfg.dims) - 3
    threefold_ok = cfg.K == expected_k
    if not threefold_ok:
        messages.append(f"threefold condition fails: K = {cfg.K}, sum(n) - 3 = {expected_k}")
    chern_ok = True
    for r, (n, row) in enumerate(zip(cfg.dims, cfg.degrees)):
        if sum(row) != n + 1:
            chern_ok = False
            messages.append(f"first Chern class nonzero on row {r}: degree sum {sum(row)} != n + 1 = {n + 1}")
    degenerate = tuple(a for a in range(cfg.K) if not any(cfg.column(a)))
    for a in degenerate:
        messages.append(f"column {a} is identically zero")
    return ValidationReport(threefold_ok, chern_ok, degenerate, tuple(messages))


# ---------------------------------------------------------------------------
# canonical form
# ---------------------------------------------------------------------------

def canonical_key(cfg: ConfigurationMatrix) -> tuple[tuple[int, ...], ...]:
    """Permutation-invariant key: the rows ``(n_r, q_r...)`` of :func:`canonical_form`."""
    return _canonical_rows(cfg)


def canonical_form(cfg: ConfigurationMatrix) -> ConfigurationMatrix:
    """Representative of ``cfg`` under all row and column permutations.

    Among all row orders, with the columns of each reordered matrix sorted
    lexicographically (ascending), take the one whose rows ``(n_r, q_r...)``
    are lexicographically smallest in row-major order.  The search is a
    level-by-level beam: the ``k`` first rows of the result only depend on
    which rows were placed first, so every level keeps just the partial
    orders achieving the minimal next row, merged when they leave equivalent
    remainders.
    """
    rows = _canonical_rows(cfg)
    return ConfigurationMatrix([r[0] for r in rows], [r[1:] for r in rows])


def _canonical_rows(cfg: ConfigurationMatrix) -> tuple[tuple[int, ...], ...]:
    m, K = cfg.m, cfg.K
    q = cfg.degrees
    row_sig = [(cfg.dims[r], q[r]) for r in range(m)]

    # a state is (placed rows in order, remaining row indices)
    states: list[tuple[tuple[int, ...], tuple[int, ...]]] = [((), tuple(range(m)))]
    result: list[tuple[int, ...]] = []
    for depth in range(m):
        best_row = None
        candidates = []
        for placed, remaining in states:
            seen_sig = set()
            for r in remaining:
                # identical rows are interchangeable; try only one of each
                if row_sig[r] in seen_sig:
                    continue
                seen_sig.add(row_sig[r])
                order = placed + (r,)
                cols = sorted(tuple(q[i][a] for i in order) for a in range(K))
                new_row = (cfg.dims[r],) + tuple(c[depth] for c in cols)
                if best_row is None or new_row < best_row:
                    best_row = new_row
                    candidates = [(order, tuple(i for i in remaining if i != r))]
                elif new_row == best_row:
                    candidates.append((order, tuple(i for i in remaining if i != r)))
        result.append(best_row)
        merged = {}
        for order, remaining in candidates:
            tail = tuple(sorted(
                (tuple(q[i][a] for i in order), tuple(q[i][a] for i in remaining)) for a in range(K)
            ))
            merged.setdefault((remaining, tail), (order, remaining))
        states = list(merged.values())
    return tuple(result)


# ---------------------------------------------------------------------------
# row-swap invariance
# ---------------------------------------------------------------------------

def invariant_under_row_swaps(cfg: ConfigurationMatrix, pairs: Iterable[tuple[int, int]]) -> bool:
    """True iff exchanging the rows of every pair simultaneously only permutes the columns."""
    pairs = list(pairs)
    image = list(range(cfg.m))
    used: set[int] = set()
    for r, s in pairs:
        if not (0 <= r < cfg.m and 0 <= s < cfg.m) or r == s:
            raise ValueError(f"invalid row pair ({r}, {s})")
        if r in used or s in used:
            raise ValueError(f"row pairs overlap at ({r}, {s})")
        if cfg.dims[r] != cfg.dims[s]:
            raise ValueError(f"rows {r} and {s} have different dimensions")
        used.update((r, s))
        image[r], image[s] = s, r
    if not pairs:
        return True
    original = Counter(cfg.columns())
    swapped = Counter(tuple(col[image[i]] for i in range(cfg.m)) for col in cfg.columns())
    return original == swapped
