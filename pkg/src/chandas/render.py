"""Text, JSON and CSV renderings shared by the CLI and golden tests.

Text layouts follow the historical tables: the meru is a centered pyramid,
the laga-kriya a left-justified staircase and the pataka a set of
top-aligned columns. Trailing whitespace is always stripped.
"""

from __future__ import annotations

import csv
import io
import json
from typing import Iterable, Sequence

from .binomial import LagakriyaTable, MeruPyramid
from .core import GlSequence, Notation
from .counting import SankhyaTrace, Token
from .pataka import PatakaMatrix


def _lines(lines: Iterable[str]) -> str:
    return "".join(line.rstrip() + "\n" for line in lines)


def to_json(obj) -> str:
    return json.dumps(obj) + "\n"


def to_csv(rows: Iterable[Sequence]) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerows(rows)
    return buf.getvalue()


def prastara_line(k: int, seq: GlSequence, notation=Notation.GL, numbered=False) -> str:
    text = seq.render(notation)
    return f"{k} {text}" if numbered else text


def prastara_text(rows: Iterable[GlSequence], notation=Notation.GL, numbered=False) -> str:
    return _lines(prastara_line(k, seq, notation, numbered)
                  for k, seq in enumerate(rows, start=1))


def prastara_json(rows: Iterable[GlSequence], notation=Notation.GL) -> str:
    return to_json([seq.render(notation) for seq in rows])


def prastara_csv_row(seq: GlSequence, notation=Notation.GL) -> list[str]:
    return list(seq.render(notation))


def meru_text(pyramid: MeruPyramid) -> str:
    width = max(len(str(v)) for row in pyramid.rows for v in row)
    total = pyramid.depth * (width + 1) - 1
    return _lines(
        " ".join(str(v).center(width) for v in row).center(total)
        for row in pyramid.rows
    )


def lagakriya_text(table: LagakriyaTable) -> str:
    width = max(len(str(v)) for row in table.rows for v in row)
    return _lines(" ".join(str(v).ljust(width) for v in row) for row in table.rows)


def bhaskara_text(n: int, steps: list[int]) -> str:
    lines = ["C0 = 1"]
    for r in range(len(steps) - 1):
        lines.append(f"C{r + 1} = C{r} * {n - r} / {r + 1} = {steps[r + 1]}")
    return _lines(lines)


def pataka_rows(matrix: PatakaMatrix) -> list[list[str]]:
    """Columns transposed into top-aligned rows; exhausted cells are ''."""
    height = max(len(c) for c in matrix.columns)
    return [[str(c[i]) if i < len(c) else "" for c in matrix.columns]
            for i in range(height)]


def pataka_text(matrix: PatakaMatrix) -> str:
    width = len(str(1 << matrix.n))
    return _lines(" ".join(cell.ljust(width) for cell in row)
                  for row in pataka_rows(matrix))


def sankhya_trace_text(trace: SankhyaTrace) -> str:
    """Reduction table, then the replay from the bottom token upwards."""
    lines = [str(trace.n)]
    lines += [f"{value}\t{int(token)}" for value, token in trace.reduction]
    lines.append("")
    v = 1
    for (_, token), out in zip(reversed(trace.reduction), trace.replay):
        expr = f"{v}*2" if token is Token.DECREMENT else f"{v}^2"
        lines.append(f"{int(token)}\t{expr} = {out}")
        v = out
    lines.append("")
    lines.append(str(trace.result))
    return _lines(lines)
