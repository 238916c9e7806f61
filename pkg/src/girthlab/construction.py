"""Double-cylinder cycle-code mother matrices and circulant permutation lifts.

The mother matrix H(a,b,c) is an (a+c-1)b x (a+c)b binary matrix: b cylinder
blocks (the a x a two-diagonal ring pattern) joined in a ring by chains of c
two-entry columns, with a single wrap entry closing the ring.  Every column
carries exactly two ones, so replacing each entry with an m x m circulant
permutation matrix yields a cycle code of length m(a+c)b and design rate
1/(a+c).

A circulant permutation matrix shifted by s has its (i, j) entry equal to 1
exactly when i - j = s (mod m); shift 0 is the identity.  Per block column
the upper nonzero block receives shift 0 and the lower block receives the
column's slope value, so the slope of a column is the shift difference seen
by any cycle passing through it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

__all__ = [
    "CodeParams",
    "MotherMatrix",
    "SlopeSequence",
    "LiftedCode",
    "build_mother",
    "lift",
    "code_length",
]


@dataclass(frozen=True)
class CodeParams:
    """Construction triple: cylinder size a >= 2, cylinder count b >= 1, chain length c >= 0."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a < 2:
            raise ValueError(f"cylinder size a must be >= 2, got {self.a}")
        if self.b < 1:
            raise ValueError(f"cylinder count b must be >= 1, got {self.b}")
        if self.c < 0:
            raise ValueError(f"chain length c must be >= 0, got {self.c}")
        if self.block_rows < 2:
            raise ValueError(
                f"degenerate shape: (a+c-1)*b = {self.block_rows} < 2, "
                "column weight 2 needs at least two block rows"
            )

    @property
    def block_rows(self) -> int:
        return (self.a + self.c - 1) * self.b

    @property
    def block_cols(self) -> int:
        return (self.a + self.c) * self.b

    @property
    def design_rate(self) -> Fraction:
        return Fraction(1, self.a + self.c)


@dataclass(frozen=True)
class MotherMatrix:
    """Block-level parity-check pattern with exactly two ones per column.

    ``col_rows[k]`` is the ascending pair of row indices carrying the ones of
    column k (0-based).  Immutable after construction.
    """

    params: CodeParams
    rows: int
    cols: int
    col_rows: tuple[tuple[int, int], ...]

    def toarray(self) -> np.ndarray:
        dense = np.zeros((self.rows, self.cols), dtype=np.uint8)
        for k, (r1, r2) in enumerate(self.col_rows):
            dense[r1, k] = 1
            dense[r2, k] = 1
        return dense

    def row_cols(self) -> tuple[tuple[int, ...], ...]:
        """Row-major support, ascending column indices per row."""
        out: list[list[int]] = [[] for _ in range(self.rows)]
        for k, (r1, r2) in enumerate(self.col_rows):
            out[r1].append(k)
            out[r2].append(k)
        return tuple(tuple(r) for r in out)


def build_mother(params: CodeParams) -> MotherMatrix:
    """Build H(a,b,c) by direct evaluation of the entry conditions.

    An entry h[i, j] (1-based) is set when either

    1. rows and columns fall in the same superblock, (i-1)//(a+c-1) ==
       (j-1)//(a+c), and with i1 = (i-1) mod (a+c-1), j1 = (j-1) mod (a+c):
       (a) i1 < a, j1 < a and i1 - j1 = 0 or 1 (mod a), the cylinder ring, or
       (b) i1 >= a-1, j1 >= a and j1 - i1 is 0 or 1, the descending chain; or
    2. j = (a+c)k and i is the first row of superblock k (wrapping to row 1
       at k = b), for 1 <= k <= b, the ring-closing entries.

    Raises ValueError when some generated column does not have weight exactly
    2 (every c = 0 shape fails this way and is rejected rather than patched).
    """
    a, b, c = params.a, params.b, params.c
    R = a + c - 1
    C = a + c
    rows, cols = params.block_rows, params.block_cols

    wrap = {((R * k) % rows, C * k - 1) for k in range(1, b + 1)}
    support: list[set[int]] = [set() for _ in range(cols)]
    for i in range(rows):
        tb = i // R
        i1 = i % R
        for j in range(tb * C, tb * C + C):
            j1 = j % C
            if i1 < a and j1 < a and (i1 - j1) % a in (0, 1):
                support[j].add(i)
            elif i1 >= a - 1 and j1 >= a and j1 - i1 in (0, 1):
                support[j].add(i)
    for i, j in wrap:
        support[j].add(i)

    col_rows = []
    for k, rr in enumerate(support):
        if len(rr) != 2:
            raise ValueError(
                f"H({a},{b},{c}) is not a cycle code: column {k + 1} has "
                f"weight {len(rr)}, expected 2"
            )
        col_rows.append(tuple(sorted(rr)))
    return MotherMatrix(params=params, rows=rows, cols=cols, col_rows=tuple(col_rows))


@dataclass(frozen=True)
class SlopeSequence:
    """One slope per block column, reduced modulo the lifting size m."""

    m: int
    slopes: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"lifting size m must be >= 1, got {self.m}")
        object.__setattr__(self, "slopes", tuple(int(s) % self.m for s in self.slopes))

    def __len__(self) -> int:
        return len(self.slopes)

    @classmethod
    def zeros(cls, m: int, n: int) -> "SlopeSequence":
        return cls(m=m, slopes=(0,) * n)

    def negated(self) -> "SlopeSequence":
        return SlopeSequence(m=self.m, slopes=tuple((self.m - s) % self.m for s in self.slopes))


@dataclass(frozen=True)
class LiftedCode:
    """Parity-check matrix obtained by circulant expansion of a mother matrix.

    Check node (r, alpha) maps to row r*m + alpha and bit node (k, beta) to
    column k*m + beta.  ``col_rows`` holds, per expanded column, the ascending
    pair of check rows; the array is read-only.
    """

    mother: MotherMatrix
    seq: SlopeSequence
    col_rows: np.ndarray = field(repr=False, compare=False)

    @property
    def m(self) -> int:
        return self.seq.m

    @property
    def num_rows(self) -> int:
        return self.mother.rows * self.m

    @property
    def num_cols(self) -> int:
        return self.mother.cols * self.m

    @property
    def n(self) -> int:
        """Code length."""
        return self.num_cols

    def column_support(self) -> tuple[tuple[int, ...], ...]:
        return tuple(tuple(int(r) for r in pair) for pair in self.col_rows)


def lift(mother: MotherMatrix, seq: SlopeSequence) -> LiftedCode:
    """Expand a mother matrix by m x m circulants, shift 0 on the upper block
    and the column slope on the lower block of every column."""
    if len(seq.slopes) != mother.cols:
        raise ValueError(
            f"slope sequence length {len(seq.slopes)} does not match "
            f"{mother.cols} block columns"
        )
    m = seq.m
    top = np.array([p[0] for p in mother.col_rows], dtype=np.int64)
    bot = np.array([p[1] for p in mother.col_rows], dtype=np.int64)
    s = np.array(seq.slopes, dtype=np.int64)

    k = np.repeat(np.arange(mother.cols, dtype=np.int64), m)
    beta = np.tile(np.arange(m, dtype=np.int64), mother.cols)
    upper = top[k] * m + beta
    lower = bot[k] * m + (beta + s[k]) % m
    col_rows = np.column_stack([upper, lower])
    col_rows.setflags(write=False)
    return LiftedCode(mother=mother, seq=seq, col_rows=col_rows)


def code_length(params: CodeParams, m: int) -> int:
    """Length n = m (a+c) b of any lift of H(a,b,c) by size-m circulants."""
    if m < 1:
        raise ValueError(f"lifting size m must be >= 1, got {m}")
    return m * params.block_cols
