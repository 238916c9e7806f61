"""Serialization: alist parity-check interchange and the JSON code descriptor.

The alist layout written here (one widely used convention for sparse binary
matrices): line 1 "N M" (columns, rows), line 2 "max_col_weight
max_row_weight", line 3 the N column weights, line 4 the M row weights, then
N lines of 1-based row indices per column and M lines of 1-based column
indices per row.  Entries are never zero-padded.  Output is deterministic
and bit-exact for a given matrix.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

import numpy as np

from .construction import CodeParams, LiftedCode, MotherMatrix, SlopeSequence

__all__ = [
    "AlistError",
    "SparseMatrix",
    "column_support",
    "to_alist",
    "export_alist",
    "import_alist",
    "save_descriptor",
    "load_descriptor",
]


class AlistError(ValueError):
    """Malformed alist input; message carries the 1-based line number."""


@dataclass(frozen=True)
class SparseMatrix:
    """Column-major support of a binary matrix, rows ascending per column."""

    num_rows: int
    num_cols: int
    cols: tuple[tuple[int, ...], ...]

    def row_support(self) -> tuple[tuple[int, ...], ...]:
        out: list[list[int]] = [[] for _ in range(self.num_rows)]
        for j, rr in enumerate(self.cols):
            for r in rr:
                out[r].append(j)
        return tuple(tuple(r) for r in out)


def column_support(matrix) -> SparseMatrix:
    """Normalize supported matrix types to a SparseMatrix view.

    Accepts SparseMatrix, LiftedCode, MotherMatrix, or a dense 2-D array of
    zeros and ones.
    """
    if isinstance(matrix, SparseMatrix):
        return matrix
    if isinstance(matrix, LiftedCode):
        return SparseMatrix(
            num_rows=matrix.num_rows,
            num_cols=matrix.num_cols,
            cols=matrix.column_support(),
        )
    if isinstance(matrix, MotherMatrix):
        return SparseMatrix(num_rows=matrix.rows, num_cols=matrix.cols, cols=matrix.col_rows)
    arr = np.asarray(matrix)
    if arr.ndim != 2:
        raise ValueError(f"expected a 2-D binary matrix, got shape {arr.shape}")
    cols = tuple(tuple(int(r) for r in np.flatnonzero(arr[:, j])) for j in range(arr.shape[1]))
    return SparseMatrix(num_rows=arr.shape[0], num_cols=arr.shape[1], cols=cols)


def to_alist(matrix) -> str:
    sm = column_support(matrix)
    rows = sm.row_support()
    col_w = [len(c) for c in sm.cols]
    row_w = [len(r) for r in rows]
    lines = [
        f"{sm.num_cols} {sm.num_rows}",
        f"{max(col_w, default=0)} {max(row_w, default=0)}",
        " ".join(str(w) for w in col_w),
        " ".join(str(w) for w in row_w),
    ]
    lines += [" ".join(str(r + 1) for r in c) for c in sm.cols]
    lines += [" ".join(str(j + 1) for j in r) for r in rows]
    return "\n".join(lines) + "\n"


def export_alist(matrix, destination) -> None:
    """Write the alist text to a path or file-like destination."""
    text = to_alist(matrix)
    if hasattr(destination, "write"):
        destination.write(text)
        return
    path = Path(destination)
    try:
        path.write_text(text)
    except OSError as exc:
        raise OSError(f"cannot write alist to {path}: {exc}") from exc


def _read_tokens(source) -> list[list[int]]:
    if hasattr(source, "read"):
        text = source.read()
    else:
        text = Path(source).read_text()
    token_lines: list[list[int]] = []
    for ln, raw in enumerate(text.splitlines(), start=1):
        parts = raw.split()
        try:
            token_lines.append([int(t) for t in parts])
        except ValueError:
            raise AlistError(f"line {ln}: non-integer token in {parts!r}") from None
    while token_lines and not token_lines[-1]:
        token_lines.pop()
    return token_lines


def import_alist(source) -> SparseMatrix:
    """Parse an alist file into a SparseMatrix, validating cross-consistency."""
    lines = _read_tokens(source)
    if len(lines) < 4:
        raise AlistError(f"line {len(lines) + 1}: truncated alist, need header plus weights")
    if len(lines[0]) != 2:
        raise AlistError("line 1: expected 'N M'")
    n, m = lines[0]
    if n <= 0 or m <= 0:
        raise AlistError(f"line 1: non-positive dimensions {n} x {m}")
    if len(lines[1]) != 2:
        raise AlistError("line 2: expected 'max_col_weight max_row_weight'")
    if len(lines[2]) != n:
        raise AlistError(f"line 3: expected {n} column weights, found {len(lines[2])}")
    if len(lines[3]) != m:
        raise AlistError(f"line 4: expected {m} row weights, found {len(lines[3])}")
    col_w, row_w = lines[2], lines[3]
    if sum(col_w) != sum(row_w):
        raise AlistError("line 4: column and row weights disagree on entry count")
    if len(lines) != 4 + n + m:
        raise AlistError(f"line {len(lines)}: expected {4 + n + m} lines total, found {len(lines)}")

    cols: list[tuple[int, ...]] = []
    for j in range(n):
        ln = 5 + j
        entries = lines[4 + j]
        if len(entries) != col_w[j]:
            raise AlistError(f"line {ln}: column {j + 1} lists {len(entries)} entries, weight says {col_w[j]}")
        for r in entries:
            if not 1 <= r <= m:
                raise AlistError(f"line {ln}: row index {r} outside 1..{m}")
        zero_based = tuple(sorted(r - 1 for r in entries))
        if len(set(zero_based)) != len(zero_based):
            raise AlistError(f"line {ln}: duplicate row index in column {j + 1}")
        cols.append(zero_based)

    sm = SparseMatrix(num_rows=m, num_cols=n, cols=tuple(cols))
    derived_rows = sm.row_support()
    for i in range(m):
        ln = 5 + n + i
        entries = lines[4 + n + i]
        if len(entries) != row_w[i]:
            raise AlistError(f"line {ln}: row {i + 1} lists {len(entries)} entries, weight says {row_w[i]}")
        if tuple(sorted(e - 1 for e in entries)) != derived_rows[i]:
            raise AlistError(f"line {ln}: row {i + 1} disagrees with the column lists")
    return sm


def save_descriptor(destination, params: CodeParams, seq: SlopeSequence) -> None:
    """Write the compact JSON code descriptor {a, b, c, m, slopes}."""
    payload = {
        "a": params.a,
        "b": params.b,
        "c": params.c,
        "m": seq.m,
        "slopes": list(seq.slopes),
    }
    text = json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"
    if hasattr(destination, "write"):
        destination.write(text)
        return
    Path(destination).write_text(text)


def load_descriptor(source) -> tuple[CodeParams, SlopeSequence]:
    if hasattr(source, "read"):
        payload = json.load(source)
    else:
        payload = json.loads(Path(source).read_text())
    missing = {"a", "b", "c", "m", "slopes"} - set(payload)
    if missing:
        raise ValueError(f"descriptor is missing fields: {sorted(missing)}")
    params = CodeParams(a=payload["a"], b=payload["b"], c=payload["c"])
    seq = SlopeSequence(m=payload["m"], slopes=tuple(payload["slopes"]))
    if len(seq) != params.block_cols:
        raise ValueError(
            f"descriptor slope count {len(seq)} does not match (a+c)b = {params.block_cols}"
        )
    return params, seq
