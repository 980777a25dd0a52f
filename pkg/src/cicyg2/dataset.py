"""Line-oriented dataset format.

::

    # comment
    config <name>
    dims <n_1> ... <n_m>
    row <q_1> ... <q_K>      # exactly m row lines
    hodge <h11> <h21>        # optional
    end
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Iterable, TextIO

from .config import ConfigurationMatrix
from .topology import HodgePair

__all__ = ["DatasetError", "ConfigRecord", "parse_dataset", "format_dataset", "load_corpus"]


class DatasetError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


@dataclass(frozen=True)
class ConfigRecord:
    name: str
    cfg: ConfigurationMatrix
    hodge: HodgePair | None = None
    assume_favourable: bool = True

    @property
    def favourable(self) -> bool:
        """Whether ``h11`` equals the number of projective factors."""
        if self.hodge is None:
            return self.assume_favourable
        return self.hodge.h11 == self.cfg.m


def _ints(tokens: list[str], lineno: int) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        bad = next(t for t in tokens if not t.lstrip("+-").isdigit())
        raise DatasetError(lineno, f"non-integer token {bad!r}") from None


def parse_dataset(text: str | TextIO | Iterable[str]) -> list[ConfigRecord]:
    """Parse every ``config ... end`` block in order; stop at the first structural error."""
    if isinstance(text, str):
        lines = text.splitlines()
    else:
        lines = list(text)

    records = []
    block = None  # dict while inside a config block
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, *rest = line.split()
        if block is None:
            if key != "config":
                raise DatasetError(lineno, f"expected 'config <name>', got {key!r}")
            if len(rest) != 1:
                raise DatasetError(lineno, "malformed header: expected 'config <name>'")
            block = {"name": rest[0], "start": lineno, "dims": None, "rows": [], "hodge": None}
            continue

        if key == "config":
            raise DatasetError(lineno, f"missing 'end' for config {block['name']!r} opened on line {block['start']}")
        elif key == "dims":
            if block["dims"] is not None:
                raise DatasetError(lineno, "duplicate 'dims' line")
            dims = _ints(rest, lineno)
            if not dims or any(n < 1 for n in dims):
                raise DatasetError(lineno, "dims must be one or more positive integers")
            block["dims"] = dims
        elif key == "row":
            if block["dims"] is None:
                raise DatasetError(lineno, "'row' before 'dims'")
            row = _ints(rest, lineno)
            if not row:
                raise DatasetError(lineno, "empty row")
            if any(q < 0 for q in row):
                raise DatasetError(lineno, "negative degree")
            if block["rows"] and len(row) != len(block["rows"][0]):
                raise DatasetError(lineno, f"row has {len(row)} entries, expected K = {len(block['rows'][0])}")
            if len(block["rows"]) == len(block["dims"]):
                raise DatasetError(lineno, f"too many rows: expected {len(block['dims'])} rows")
            block["rows"].append(row)
        elif key == "hodge":
            vals = _ints(rest, lineno)
            if len(vals) != 2:
                raise DatasetError(lineno, "expected 'hodge <h11> <h21>'")
            try:
                block["hodge"] = HodgePair(*vals)
            except ValueError as exc:
                raise DatasetError(lineno, str(exc)) from None
        elif key == "end":
            if rest:
                raise DatasetError(lineno, "unexpected tokens after 'end'")
            if block["dims"] is None:
                raise DatasetError(lineno, "block has no 'dims' line")
            m = len(block["dims"])
            if len(block["rows"]) != m:
                raise DatasetError(lineno, f"expected {m} rows, got {len(block['rows'])}")
            cfg = ConfigurationMatrix(block["dims"], block["rows"])
            zero = [a for a in range(cfg.K) if not any(cfg.column(a))]
            if zero:
                raise DatasetError(lineno, f"all-zero column(s) {zero} in config {block['name']!r}")
            records.append(ConfigRecord(block["name"], cfg, block["hodge"]))
            block = None
        else:
            raise DatasetError(lineno, f"unknown keyword {key!r}")

    if block is not None:
        raise DatasetError(len(lines), f"missing 'end' for config {block['name']!r} opened on line {block['start']}")
    return records


def format_dataset(records: Iterable[ConfigRecord]) -> str:
    out = []
    for rec in records:
        out.append(f"config {rec.name}")
        out.append("dims " + " ".join(map(str, rec.cfg.dims)))
        for row in rec.cfg.degrees:
            out.append("row " + " ".join(map(str, row)))
        if rec.hodge is not None:
            out.append(f"hodge {rec.hodge.h11} {rec.hodge.h21}")
        out.append("end")
    return "\n".join(out) + ("\n" if out else "")


def load_corpus() -> list[ConfigRecord]:
    """The four bundled reference configurations."""
    text = resources.files("cicyg2").joinpath("data/corpus.cicy").read_text()
    return parse_dataset(text)
