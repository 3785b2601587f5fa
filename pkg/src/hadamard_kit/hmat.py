"""Read and write the HMAT text format.

::

    # optional comment lines
    HMAT <rows> <cols>
    ++++
    +-+-
    ...

Each matrix line holds exactly ``cols`` characters from ``+``/``-`` with no
separators. Comment lines are allowed only before the header; trailing blank
lines are ignored.
"""
from __future__ import annotations

import os
from collections.abc import Iterable

from hadamard_kit.errors import HmatParseError
from hadamard_kit.matrix_core import SignMatrix, SignVector


def format_hmat(m: SignMatrix, comments: Iterable[str] = ()) -> str:
    lines = [f"# {c}" if c else "#" for c in comments]
    lines.append(f"HMAT {m.n_rows} {m.n_cols}")
    lines.extend(str(row) for row in m.rows)
    return "\n".join(lines) + "\n"


def _parse_header(line: str, lineno: int) -> tuple[int, int]:
    parts = line.split()
    if len(parts) != 3 or parts[0] != "HMAT":
        raise HmatParseError(f"expected header 'HMAT <rows> <cols>', got {line!r}", lineno)
    try:
        rows, cols = int(parts[1]), int(parts[2])
    except ValueError:
        raise HmatParseError(f"header dimensions must be integers, got {line!r}", lineno) from None
    if rows < 1 or cols < 1:
        raise HmatParseError(f"header dimensions must be positive, got {rows}x{cols}", lineno)
    return rows, cols


def parse_hmat(text: str) -> SignMatrix:
    lines = text.split("\n")
    while lines and lines[-1].strip() == "":
        lines.pop()
    lines = [line.rstrip("\r") for line in lines]

    idx = 0
    while idx < len(lines) and lines[idx].startswith("#"):
        idx += 1
    if idx == len(lines):
        raise HmatParseError("missing 'HMAT <rows> <cols>' header", None)
    rows, cols = _parse_header(lines[idx], idx + 1)

    body = lines[idx + 1:]
    out = []
    for offset, line in enumerate(body):
        lineno = idx + 2 + offset
        if offset >= rows:
            raise HmatParseError(f"extra line after {rows} matrix rows", lineno)
        for col, ch in enumerate(line):
            if ch not in "+-":
                raise HmatParseError(f"invalid character {ch!r} at column {col + 1}", lineno)
        if len(line) != cols:
            raise HmatParseError(f"row has {len(line)} entries, expected {cols}", lineno)
        out.append(SignVector.from_string(line))
    if len(out) < rows:
        raise HmatParseError(f"expected {rows} matrix rows, found {len(out)}", None)
    return SignMatrix(tuple(out))


def read_hmat(path: str | os.PathLike) -> SignMatrix:
    with open(path, encoding="ascii", errors="replace") as fh:
        return parse_hmat(fh.read())


def write_hmat(path: str | os.PathLike, m: SignMatrix, comments: Iterable[str] = ()):
    with open(path, "w", encoding="ascii", newline="\n") as fh:
        fh.write(format_hmat(m, comments))
