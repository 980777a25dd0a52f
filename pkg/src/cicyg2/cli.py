"""Command line entry point: ``cicyg2 <subcommand> [--input PATH] ...``.

Exit codes: 0 success, 1 input or parse error, 2 internal consistency fault.
"""

from __future__ import annotations

import argparse
import logging
import sys
from dataclasses import replace

from .dataset import ConfigRecord, DatasetError, format_dataset, parse_dataset
from .expansion import expansions_to_count
from .involutions import enumerate_b_combinations, enumerate_c_combinations
from .pipeline import BatchOptions, format_text, format_tsv, render_decorated, run_batch
from .topology import ConsistencyError, euler_characteristic
from .config import validate

log = logging.getLogger("cicyg2")

EXIT_OK, EXIT_INPUT, EXIT_INTERNAL = 0, 1, 2


def _pairs(c) -> str:
    # 1-based rows in human-facing output
    return "{" + ", ".join(f"({r + 1},{s + 1})" for r, s in c.pairs) + "}"


def _rows(b) -> str:
    return "{" + ", ".join(str(r + 1) for r in b.rows) + "}"


def cmd_validate(records, args) -> tuple[str, int]:
    lines = ["name\tthreefold_ok\tchern_ok\tdegenerate_columns"] if args.format == "tsv" else []
    for rec in records:
        rep = validate(rec.cfg)
        if args.format == "tsv":
            deg = ",".join(str(a + 1) for a in rep.degenerate_columns)
            lines.append(f"{rec.name}\t{rep.threefold_ok}\t{rep.chern_ok}\t{deg}")
        else:
            lines.append(f"{rec.name}: {'ok' if rep.ok else 'INVALID'}")
            lines.extend(f"  - {m}" for m in rep.messages)
    return "\n".join(lines) + "\n", EXIT_OK


def cmd_euler(records, args) -> tuple[str, int]:
    lines = ["name\tchi"] if args.format == "tsv" else []
    code = EXIT_OK
    for rec in records:
        if not validate(rec.cfg).ok:
            chi = "invalid"
            code = EXIT_INPUT
        else:
            chi = euler_characteristic(rec.cfg)
        lines.append(f"{rec.name}\t{chi}" if args.format == "tsv" else f"{rec.name}: chi = {chi}")
    return "\n".join(lines) + "\n", code


def cmd_involutions(records, args) -> tuple[str, int]:
    report = run_batch(records, _options(args))
    by_name = {r.name: r for r in report.results}
    lines = ["name\tc_combination\tb_rows\tb2\tb3"] if args.format == "tsv" else []
    code = EXIT_OK
    for rec in records:
        res = by_name[rec.name]
        if res.error is not None or not res.valid:
            code = max(code, EXIT_INTERNAL if res.error_kind == "consistency" else EXIT_INPUT)
            if args.format != "tsv":
                lines.append(f"== {rec.name}: {res.error or 'invalid configuration'}")
            continue
        if args.format == "tsv":
            for f in res.free_assignments:
                b2 = f.betti.b2 if f.betti else "-"
                b3 = f.betti.b3 if f.betti else "-"
                lines.append(f"{rec.name}\t{_pairs(f.assignment.c)}\t{_rows(f.assignment.b)}\t{b2}\t{b3}")
            continue
        lines.append(f"== {rec.name}")
        for c in res.c_combinations:
            bs = enumerate_b_combinations(rec.cfg, c)
            lines.append(f"  C {_pairs(c)}: B options {', '.join(_rows(b) for b in bs) or 'none'}")
        for f in res.free_assignments:
            lines.append("")
            hodge = res.hodge if res.favourable else None
            lines.extend("  " + ln for ln in render_decorated(rec.cfg, f.assignment, hodge).splitlines())
        lines.append("")
    return "\n".join(lines) + "\n", code


def cmd_betti(records, args) -> tuple[str, int]:
    report = run_batch(records, _options(args))
    lines = ["name\th11\th21\tb2\tb3"] if args.format == "tsv" else []
    code = EXIT_OK
    for res in report.results:
        if res.error is not None:
            code = max(code, EXIT_INTERNAL if res.error_kind == "consistency" else EXIT_INPUT)
        if args.format == "tsv":
            for p in res.betti_pairs:
                lines.append(f"{res.name}\t{res.hodge.h11}\t{res.hodge.h21}\t{p.b2}\t{p.b3}")
        else:
            if res.error is not None:
                lines.append(f"{res.name}: error: {res.error}")
            elif not res.valid:
                lines.append(f"{res.name}: invalid configuration")
            else:
                pairs = " ".join(f"({p.b2},{p.b3})" for p in res.betti_pairs) or "none"
                lines.append(f"{res.name}: hodge ({res.hodge.h11},{res.hodge.h21}) betti {pairs}"
                             if res.hodge else f"{res.name}: betti {pairs}")
                lines.extend(f"  note: {n}" for n in res.notes)
    return "\n".join(lines) + "\n", code


def cmd_expand(records, args) -> tuple[str, int]:
    out: list[ConfigRecord] = []
    for rec in records:
        target = args.target_factors
        if target is None:
            target = rec.hodge.h11 if rec.hodge else rec.cfg.m
        if target < rec.cfg.m:
            log.error("%s: target %d below current factor count %d", rec.name, target, rec.cfg.m)
            return "", EXIT_INPUT
        configs = expansions_to_count(rec.cfg, target, args.max_expansions)
        if not configs:
            log.warning("%s: cannot reach %d factors (no CP^1 row)", rec.name, target)
        for k, cfg in enumerate(configs, start=1):
            name = rec.name if target == rec.cfg.m else f"{rec.name}.e{k}"
            out.append(replace(rec, name=name, cfg=cfg))
    return format_dataset(out), EXIT_OK


def cmd_batch(records, args) -> tuple[str, int]:
    report = run_batch(records, _options(args))
    text = format_tsv(report) if args.format == "tsv" else format_text(report)
    code = EXIT_INTERNAL if any(r.error_kind == "consistency" for r in report.results) else EXIT_OK
    return text, code


COMMANDS = {
    "validate": cmd_validate,
    "euler": cmd_euler,
    "involutions": cmd_involutions,
    "betti": cmd_betti,
    "expand": cmd_expand,
    "batch": cmd_batch,
}


def _options(args) -> BatchOptions:
    return BatchOptions(
        jobs=args.jobs,
        assume_favourable=args.assume_favourable,
        expand=args.expand,
        max_expansions=args.max_expansions,
    )


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--input", "-i", help="dataset file (default: stdin; '@corpus' for the bundled set)")
    common.add_argument("--output", "-o", help="output file (default: stdout)")
    common.add_argument("--format", choices=("text", "tsv"), default="text")
    common.add_argument("--assume-favourable", action=argparse.BooleanOptionalAction, default=True,
                        help="take h11 = number of factors when no hodge line is given")
    common.add_argument("--jobs", "-j", type=int, default=None, help="worker processes (default: all cores)")
    common.add_argument("--max-expansions", type=int, default=1000)
    common.add_argument("--target-factors", type=int, default=None, help="row count for 'expand'")
    common.add_argument("--expand", action="store_true",
                        help="expand non-favourable records to h11 factors before deriving Betti numbers")
    common.add_argument("-v", "--verbose", action="store_true")

    parser = argparse.ArgumentParser(prog="cicyg2", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        sub.add_parser(name, parents=[common])
    return parser


def _read_input(path: str | None) -> str:
    if path == "@corpus":
        from importlib import resources
        return resources.files("cicyg2").joinpath("data/corpus.cicy").read_text()
    if path is None or path == "-":
        return sys.stdin.read()
    with open(path) as fh:
        return fh.read()


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(name)s: %(levelname)s: %(message)s")
    if args.jobs is not None and args.jobs < 1:
        log.error("--jobs must be positive")
        return EXIT_INPUT
    try:
        records = parse_dataset(_read_input(args.input))
    except (OSError, DatasetError) as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    try:
        text, code = COMMANDS[args.command](records, args)
    except ConsistencyError as exc:
        log.error("internal consistency fault: %s", exc)
        return EXIT_INTERNAL
    except ValueError as exc:
        log.error("%s", exc)
        return EXIT_INPUT
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
