"""Plain-text matrix format (``.mpx``).

One row per line, entries separated by spaces or tabs.  Each entry is
``E`` (epsilon, uppercase only) or a base-10 signed integer.  Blank lines
and lines whose first non-blank character is ``#`` are skipped on input
and never written.
"""
from __future__ import annotations

import re

import numpy as np

from .errors import BadToken, EmptyInput, RaggedRows
from .matrix import Matrix
from .semiring import EPSILON, INT64_MAX, INT64_MIN, MAX_PLUS, SemiringSpec, TropicalValue

_INT = re.compile(r"[+-]?[0-9]+\Z")
_SEP = re.compile(r"[ \t]+")


def _parse_token(token, line_no=None, col_no=None):
    if token == "E":
        return None
    if not _INT.match(token):
        raise BadToken(token, line_no, col_no)
    v = int(token)
    if not INT64_MIN <= v <= INT64_MAX:
        raise BadToken(token, line_no, col_no)
    return v


def parse_scalar(token: str) -> TropicalValue:
    """``"E"`` gives epsilon, an integer literal gives a finite value."""
    v = _parse_token(token.strip())
    return EPSILON if v is None else TropicalValue(v)


def parse_matrix(text: str, semiring: SemiringSpec = MAX_PLUS) -> Matrix:
    """Parse a matrix document; line numbers in errors are 1-based."""
    rows = []
    width = None
    for line_no, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip(" \t\r\f\v")
        if not stripped or stripped.startswith("#"):
            continue
        tokens = _SEP.split(stripped)
        if width is None:
            width = len(tokens)
        elif len(tokens) != width:
            raise RaggedRows(line_no, width, len(tokens))
        rows.append([_parse_token(t, line_no, c) for c, t in enumerate(tokens, start=1)])
    if not rows:
        raise EmptyInput()
    fin = np.array([[v is not None for v in r] for r in rows], dtype=np.bool_)
    vals = np.array([[0 if v is None else v for v in r] for r in rows], dtype=np.int64)
    return Matrix.from_arrays(vals, fin, semiring)


def format_scalar(x: TropicalValue) -> str:
    return str(x)


def format_matrix(A: Matrix) -> str:
    return "".join(
        " ".join("E" if v is None else str(v) for v in row) + "\n"
        for row in A.to_lists()
    )


def read_matrix(path, semiring: SemiringSpec = MAX_PLUS) -> Matrix:
    with open(path, encoding="utf-8") as fh:
        return parse_matrix(fh.read(), semiring)


def write_matrix(A: Matrix, path) -> None:
    with open(path, "w", encoding="utf-8", newline="\n") as fh:
        fh.write(format_matrix(A))


__all__ = [
    "parse_matrix", "format_matrix", "parse_scalar", "format_scalar",
    "read_matrix", "write_matrix",
]
