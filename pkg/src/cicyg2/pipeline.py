"""Per-configuration analysis, batch aggregation and report output."""

from __future__ import annotations

import os
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Sequence

from .config import ConfigurationMatrix, ValidationReport, validate
from .dataset import ConfigRecord
from .expansion import expansions_to_count
from .involutions import CCombination, InvolutionAssignment, enumerate_c_combinations, enumerate_free_assignments
from .topology import BettiNumbers, ConsistencyError, HodgePair, barely_betti, euler_characteristic, hodge_from_euler

__all__ = [
    "HodgeMismatchError",
    "BatchOptions",
    "FreeInvolution",
    "AnalysisResult",
    "Report",
    "analyze",
    "run_batch",
    "render_decorated",
    "format_tsv",
    "format_text",
    "TSV_HEADER",
]

TSV_HEADER = "name\tvalid\tchi\th11\th21\tn_c_options\tb_combinations\tbetti_pairs"


class HodgeMismatchError(ValueError):
    pass


@dataclass(frozen=True)
class BatchOptions:
    jobs: int | None = None  # None: all cores
    assume_favourable: bool = True
    expand: bool = False  # expand non-favourable records to h11 factors
    max_expansions: int = 1000


@dataclass(frozen=True)
class FreeInvolution:
    config: ConfigurationMatrix
    assignment: InvolutionAssignment
    betti: BettiNumbers | None


@dataclass(frozen=True)
class AnalysisResult:
    name: str
    cfg: ConfigurationMatrix
    validation: ValidationReport | None = None
    chi: int | None = None
    hodge: HodgePair | None = None
    favourable: bool = False
    c_combinations: tuple[CCombination, ...] = ()
    free_assignments: tuple[FreeInvolution, ...] = ()
    expanded: tuple[FreeInvolution, ...] = ()
    betti_pairs: tuple[BettiNumbers, ...] = ()
    notes: tuple[str, ...] = ()
    error: str | None = None
    error_kind: str | None = None  # "input" or "consistency"

    @property
    def valid(self) -> bool:
        return self.validation is not None and self.validation.ok

    @property
    def b_admitting(self) -> bool:
        return bool(self.free_assignments)


@dataclass(frozen=True)
class Report:
    results: tuple[AnalysisResult, ...]
    pair_counts: tuple[tuple[BettiNumbers, int], ...]
    stats: dict = field(default_factory=dict)


def analyze(record: ConfigRecord, options: BatchOptions = BatchOptions()) -> AnalysisResult:
    """Validate, compute the Euler characteristic and Hodge pair, search involutions, derive Betti numbers.

    Raises :class:`HodgeMismatchError` when supplied Hodge numbers contradict
    the Euler characteristic; :class:`~cicyg2.topology.ConsistencyError`
    signals an internal fault.
    """
    cfg = record.cfg
    report = validate(cfg)
    if not report.ok:
        return AnalysisResult(record.name, cfg, report, notes=report.messages)

    chi = euler_characteristic(cfg)
    if record.hodge is not None:
        hodge = record.hodge
        if hodge.euler != chi:
            raise HodgeMismatchError(
                f"Hodge/Euler mismatch for {record.name}: 2(h11 - h21) = {hodge.euler}, chi = {chi}"
            )
    elif record.assume_favourable and options.assume_favourable:
        hodge = hodge_from_euler(cfg, cfg.m)
    else:
        hodge = None

    favourable = hodge is not None and hodge.h11 == cfg.m
    c_combos = tuple(enumerate_c_combinations(cfg))
    assignments = enumerate_free_assignments(cfg)
    notes = []
    free = tuple(
        FreeInvolution(cfg, a, barely_betti(hodge, a.n_c) if favourable else None) for a in assignments
    )
    expanded: tuple[FreeInvolution, ...] = ()
    if hodge is None:
        notes.append("no Hodge data; Betti numbers not derived")
    elif not favourable:
        if hodge.h11 > cfg.m and options.expand:
            configs = expansions_to_count(cfg, hodge.h11, options.max_expansions)
            if configs:
                expanded = tuple(
                    FreeInvolution(e, a, barely_betti(hodge, a.n_c))
                    for e in configs
                    for a in enumerate_free_assignments(e)
                )
                notes.append(f"expanded to {len(configs)} configuration(s) with {hodge.h11} factors")
            else:
                notes.append(f"cannot expand to {hodge.h11} factors: no CP^1 row")
        else:
            notes.append(
                f"non-favourable (h11 = {hodge.h11}, {cfg.m} factors); Betti numbers refused"
            )

    pairs = sorted({f.betti for f in free + expanded if f.betti is not None})
    return AnalysisResult(
        record.name, cfg, report, chi, hodge, favourable, c_combos, free, expanded, tuple(pairs), tuple(notes)
    )


def _analyze_captured(args: tuple[ConfigRecord, BatchOptions]) -> AnalysisResult:
    record, options = args
    try:
        return analyze(record, options)
    except ConsistencyError as exc:
        return AnalysisResult(record.name, record.cfg, error=str(exc), error_kind="consistency")
    except ValueError as exc:
        return AnalysisResult(record.name, record.cfg, error=str(exc), error_kind="input")


def run_batch(records: Sequence[ConfigRecord], options: BatchOptions = BatchOptions()) -> Report:
    """Analyze every record and aggregate; per-record failures are kept in the report."""
    jobs = options.jobs or os.cpu_count() or 1
    work = [(r, options) for r in records]
    if jobs == 1 or len(work) <= 1:
        results = [_analyze_captured(w) for w in work]
    else:
        with ProcessPoolExecutor(max_workers=min(jobs, len(work))) as pool:
            results = list(pool.map(_analyze_captured, work))
    results.sort(key=lambda r: r.name)

    counts: Counter[BettiNumbers] = Counter()
    for res in results:
        counts.update(res.betti_pairs)
    pair_counts = tuple(sorted(counts.items()))

    with_hodge = [r for r in results if r.hodge is not None]
    admitting = [r for r in results if r.b_admitting]
    stats = {
        "records": len(results),
        "valid": sum(r.valid for r in results),
        "invalid": sum(r.error is None and not r.valid for r in results),
        "errors": sum(r.error is not None for r in results),
        "b_admitting": len(admitting),
        "even_hodge_sum": sum((r.hodge.h11 + r.hodge.h21) % 2 == 0 for r in with_hodge),
        "b_admitting_even_hodge_sum": sum(
            r.hodge is not None and (r.hodge.h11 + r.hodge.h21) % 2 == 0 for r in admitting
        ),
        "distinct_betti_pairs": len(pair_counts),
        "betti_sum_mod4": {k: sum((p.b2 + p.b3) % 4 == k for p, _ in pair_counts) for k in range(4)},
    }
    return Report(tuple(results), pair_counts, stats)


# ---------------------------------------------------------------------------
# rendering
# ---------------------------------------------------------------------------

def render_decorated(
    cfg: ConfigurationMatrix,
    assignment: InvolutionAssignment | None = None,
    hodge: HodgePair | None = None,
) -> str:
    """Configuration matrix with ``A:``/``B:``/``Ck:`` row prefixes and, when ``hodge``
    is favourable, a trailing ``^{b2,b3}`` line."""
    body = str(cfg).splitlines()
    if assignment is None:
        return "\n".join(body)
    labels = [f"{lab}:" for lab in assignment.labels(cfg.m)]
    width = max(len(lab) for lab in labels)
    lines = [f"{lab.ljust(width)} {row}" for lab, row in zip(labels, body)]
    if hodge is not None and hodge.h11 == cfg.m:
        b = barely_betti(hodge, assignment.n_c)
        lines.append(f"^{{{b.b2},{b.b3}}}")
    return "\n".join(lines)


def _fmt(v) -> str:
    return "-" if v is None else str(v)


def format_tsv(report: Report) -> str:
    lines = [TSV_HEADER]
    for r in report.results:
        if r.error is not None:
            valid = "error"
        else:
            valid = "yes" if r.valid else "no"
        h11 = r.hodge.h11 if r.hodge else None
        h21 = r.hodge.h21 if r.hodge else None
        n_c = len(r.c_combinations) if r.valid else None
        n_b = len(r.free_assignments) if r.valid else None
        pairs = ";".join(f"{p.b2},{p.b3}" for p in r.betti_pairs)
        lines.append("\t".join([r.name, valid, _fmt(r.chi), _fmt(h11), _fmt(h21), _fmt(n_c), _fmt(n_b), pairs]))
    return "\n".join(lines) + "\n"


def format_text(report: Report) -> str:
    out = []
    for r in report.results:
        out.append(f"== {r.name}")
        if r.error is not None:
            out.append(f"  error ({r.error_kind}): {r.error}")
            continue
        if not r.valid:
            out.append("  invalid configuration")
            out.extend(f"  - {msg}" for msg in r.notes)
            continue
        h = f"({r.hodge.h11}, {r.hodge.h21})" if r.hodge else "-"
        out.append(f"  chi = {r.chi}   hodge = {h}   favourable = {'yes' if r.favourable else 'no'}")
        out.append(f"  C combinations: {len(r.c_combinations)}   free involutions: {len(r.free_assignments)}")
        pairs = ", ".join(f"({p.b2}, {p.b3})" for p in r.betti_pairs) or "none"
        out.append(f"  Betti pairs (b2, b3): {pairs}")
        out.extend(f"  note: {n}" for n in r.notes)
    out.append("")
    out.append("distinct Betti pairs")
    out.append("  b2   b3  records")
    for p, n in report.pair_counts:
        out.append(f"  {p.b2:>2} {p.b3:>4}  {n:>7}")
    s = report.stats
    out.append("")
    out.append(f"records: {s.get('records', 0)}  valid: {s.get('valid', 0)}  "
               f"invalid: {s.get('invalid', 0)}  errors: {s.get('errors', 0)}")
    out.append(f"admitting a B involution: {s.get('b_admitting', 0)} "
               f"(with even h11 + h21: {s.get('b_admitting_even_hodge_sum', 0)})")
    out.append(f"records with even h11 + h21: {s.get('even_hodge_sum', 0)}")
    mod4 = s.get("betti_sum_mod4", {})
    out.append("b2 + b3 mod 4 over distinct pairs: " + ", ".join(f"{k}: {mod4.get(k, 0)}" for k in range(4)))
    return "\n".join(out) + "\n"

