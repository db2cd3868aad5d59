"""Text formats: integer vectors and ``index,value`` CSV scatter data."""
from __future__ import annotations

import csv
import io
import re
from pathlib import Path
from typing import Iterable, TextIO

from .perm_core import Permutation, TranspositionVector

_SEP = re.compile(r"[\s,]+")


class ParseError(ValueError):
    pass


def parse_ints(text: str) -> list[int]:
    """Whitespace/comma separated integers; lines starting with ``#`` are comments."""
    out: list[int] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        for tok in _SEP.split(line.strip()):
            if not tok:
                continue
            try:
                out.append(int(tok))
            except ValueError:
                raise ParseError(f"line {lineno}: {tok!r} is not an integer") from None
    return out


def _read(src: str | Path | TextIO) -> str:
    if hasattr(src, "read"):
        return src.read()
    return Path(src).read_text()


def read_permutation(src) -> Permutation:
    values = parse_ints(_read(src))
    if not values:
        raise ParseError("no integers found")
    return Permutation(values)


def read_taps(src) -> TranspositionVector:
    values = parse_ints(_read(src))
    if not values:
        raise ParseError("no integers found")
    return TranspositionVector(values)


def format_ints(values: Iterable[int]) -> str:
    return " ".join(str(int(v)) for v in values) + "\n"


def scatter_csv(index: Iterable[int], value: Iterable[int]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["index", "value"])
    for i, v in zip(index, value):
        w.writerow([int(i), int(v)])
    return buf.getvalue()


def permutation_csv(p: Permutation) -> str:
    return scatter_csv(range(1, len(p) + 1), p.map)


def read_scatter_csv(src) -> tuple[list[int], list[int]]:
    rows = list(csv.reader(io.StringIO(_read(src))))
    if not rows or rows[0] != ["index", "value"]:
        raise ParseError("expected an 'index,value' header")
    xs, ys = [], []
    for n, row in enumerate(rows[1:], start=2):
        try:
            x, y = (int(c) for c in row)
        except ValueError:
            raise ParseError(f"row {n}: expected two integers, got {row}") from None
        xs.append(x)
        ys.append(y)
    return xs, ys
