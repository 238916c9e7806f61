"""Reference catalog of double-cylinder code constructions and its audit.

Each record lists a previously reported code: the shape (b, c, a), design
rate, claimed girth g, lifting size m, claimed length n, and the slope
sequence S.  Values are kept exactly as published, including rows whose
numbers are internally inconsistent; the audit surfaces those as flags
rather than correcting them.

The girth audit recomputes each computable row's girth under an
interpretation ladder for S (the anchoring of the published sequences is a
convention, not part of the data):

primary        upper block shift 0, lower block shift S[k] (column slope +S[k])
negated        column slope (m - S[k]) mod m
bottom_anchor  upper block shift S[k], lower block shift 0 (slope -S[k] mod m)

The negated and bottom-anchor variants coincide and any global slope
negation preserves girth (reverse every walk), so all three girths agree in
theory; the ladder is still computed per variant as a cross-check and to
make the report self-explanatory.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .construction import CodeParams, SlopeSequence, build_mother
from .bsg import build_bsg
from .girth import g_max, girth_bsg
from .parallel import ordered_map, resolve_workers

__all__ = [
    "CodeRecord",
    "StructuralFlags",
    "RecordVerification",
    "VerificationReport",
    "load_fixtures",
    "structural_flags",
    "verify_record",
    "verify_table",
]

LADDER = ("primary", "negated", "bottom_anchor")

# Published rows, column order (b, c, a, rate, g, m, n, S), kept verbatim.
_TABLE_ROWS = (
    (3, 2, 3, (1, 5), 40, 30, 450,
     (0, 28, 19, 5, 16, 14, 25, 10, 15, 16, 13, 4, 6, 3, 25)),
    (3, 2, 4, (1, 6), 48, 42, 756,
     (0, 1, 8, 27, 7, 18, 29, 1, 3, 37, 22, 26, 0, 35, 2, 5, 13, 28)),
    (3, 2, 5, (1, 7), 52, 40, 840,
     (0, 1, 9, 22, 19, 6, 6, 6, 4, 2, 0, 16, 5, 1, 33, 0, 3, 27, 28, 26, 38)),
    (3, 2, 6, (1, 8), 56, 33, 792,
     (0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 5, 0, 21)),
    (3, 2, 7, (1, 9), 60, 28, 756,
     (0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 0, 5, 0, 25)),
    (3, 2, 8, (1, 10), 64, 20, 600,
     (0, 0, 0, 0, 0, 0, 0, 1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0, 0, 0, 0, 1, 3, 0, 0, 13)),
    (3, 3, 3, (1, 6), 48, 45, 810,
     (0, 14, 0, 8, 3, 4, 37, 14, 39, 36, 17, 9, 38, 24, 22, 34, 2, 40)),
    (3, 3, 4, (1, 7), 56, 30, 630,
     (0, 17, 27, 17, 5, 27, 24, 26, 26, 13, 12, 19, 17, 2, 27, 14, 10, 4, 13, 4, 19)),
    (3, 3, 5, (1, 8), 64, 50, 1200,
     (0, 44, 44, 44, 44, 44, 44, 44, 44, 44, 44, 44, 41, 30, 30, 30, 30, 30, 30, 30, 11, 28, 28, 40)),
    (3, 4, 3, (1, 7), 56, 50, 1050,
     (0, 5, 18, 16, 37, 39, 26, 48, 16, 9, 3, 45, 18, 22, 16, 45, 45, 32, 41, 31, 23)),
    (3, 4, 4, (1, 8), 64, 50, 1200,
     (0, 43, 35, 33, 37, 11, 27, 18, 12, 1, 10, 19, 3, 5, 47, 45, 11, 24, 2, 40, 5, 33, 41, 38)),
    (3, 4, 5, (1, 9), 72, 50, 1350,
     (0, 10, 36, 47, 12, 39, 2, 11, 4, 7, 25, 28, 27, 48, 21, 45, 10, 0, 7, 22, 5, 9, 14, 33, 18, 20, 12)),
    (3, 4, 6, (1, 10), 80, 50, 1500,
     (0, 43, 48, 45, 44, 3, 3, 5, 32, 3, 28, 4, 47, 35, 25, 26, 41, 46, 31, 16, 46, 36, 48, 34, 38, 35, 18, 30, 6, 0)),
    (3, 5, 3, (1, 8), 64, 60, 1440,
     (0, 9, 46, 35, 15, 25, 56, 22, 15, 42, 46, 41, 18, 3, 42, 57, 6, 11, 18, 38, 53, 14, 54, 0)),
    (3, 5, 4, (1, 9), 72, 50, 1350,
     (0, 46, 1, 15, 25, 35, 0, 10, 32, 36, 10, 5, 0, 11, 15, 17, 13, 19, 33, 7, 1, 26, 10, 34, 44, 10, 40)),
    (3, 5, 5, (1, 10), 80, 50, 1500,
     (0, 46, 1, 15, 25, 35, 0, 10, 32, 36, 10, 5, 0, 11, 15, 17, 13, 19, 33, 7, 1, 26, 10, 34, 44, 10, 40)),
    (3, 6, 3, (1, 9), 72, 60, 1650,
     (0, 10, 42, 10, 10, 10, 10, 10, 10, 10, 10, 23, 45, 45, 45, 45, 45, 45, 45, 45, 55, 42, 42, 42, 42, 42, 8)),
    (3, 6, 4, (1, 10), 80, 65, 2100,
     (0, 16, 61, 31, 64, 35, 19, 44, 33, 37, 60, 5, 6, 30, 38, 39, 45, 25, 27, 68, 27, 11, 21, 12, 60, 13, 13, 66, 7, 20)),
    (4, 2, 3, (1, 5), 40, 40, 800,
     (0, 5, 2, 24, 18, 37, 27, 3, 6, 21, 38, 29, 32, 32, 28, 26, 16, 29, 24, 31)),
    (4, 2, 4, (1, 6), 48, 48, 1152,
     (0, 27, 31, 21, 4, 22, 23, 19, 25, 6, 2, 10, 20, 30, 25, 22, 9, 30, 16, 8, 28, 17, 38, 1)),
    (4, 2, 5, (1, 7), 56, 45, 1260,
     (0, 21, 20, 17, 15, 43, 43, 27, 26, 42, 19, 35, 8, 28, 27, 13, 30, 34, 34, 30, 3, 15, 33, 36, 26, 36, 40, 19)),
    (4, 2, 6, (1, 8), 64, 40, 1280,
     (0, 14, 13, 22, 36, 28, 5, 26, 30, 14, 23, 7, 1, 2, 36, 1, 38, 11, 8, 30, 27, 19, 17, 31, 31, 20, 21, 32, 0, 25, 18, 20)),
    (4, 2, 7, (1, 9), 72, 55, 2420,
     (0, 18, 19, 17, 4, 11, 29, 30, 43, 4, 21, 14, 12, 37, 8, 42, 37, 32, 32, 49, 26, 40, 19, 18, 9, 17, 6, 30, 32, 39, 43, 32, 38, 20, 31, 43)),
    (4, 2, 8, (1, 10), 76, 75, 3000,
     (0, 3, 7, 45, 33, 27, 7, 26, 66, 37, 50, 53, 64, 14, 62, 29, 24, 51, 39, 34, 38, 14, 57, 18, 26, 11, 43, 70, 26, 56, 1, 23, 6, 38, 56, 70, 37, 65, 55, 73)),
    (4, 3, 3, (1, 6), 48, 70, 1680,
     (0, 26, 8, 26, 26, 26, 26, 26, 63, 39, 39, 39, 39, 39, 39, 8, 8, 8, 8, 8, 13, 35, 35, 19)),
    (4, 3, 4, (1, 7), 56, 50, 1400,
     (0, 32, 27, 37, 16, 33, 33, 3, 24, 20, 42, 19, 44, 26, 19, 22, 32, 35, 25, 4, 45, 36, 45, 0, 32, 21, 15, 46)),
    (4, 3, 5, (1, 8), 64, 40, 1280,
     (0, 0, 2, 20, 11, 13, 24, 2, 19, 0, 31, 22, 29, 36, 26, 33, 23, 30, 21, 33, 14, 19, 35, 1, 15, 31, 27, 25, 23, 38, 1, 13)),
    (4, 4, 3, (1, 7), 56, 40, 1120,
     (0, 16, 19, 38, 24, 4, 5, 19, 24, 36, 22, 4, 27, 24, 16, 30, 23, 28, 26, 15, 15, 24, 25, 22, 16, 19, 19, 38)),
    (4, 4, 4, (1, 8), 64, 55, 1760,
     (0, 25, 37, 3, 42, 17, 31, 0, 39, 0, 32, 43, 20, 26, 31, 29, 4, 11, 14, 34, 37, 21, 7, 35, 0, 35, 47, 14, 6, 3, 25, 18)),
    (4, 4, 5, (1, 9), 72, 55, 1980,
     (0, 52, 8, 26, 0, 7, 34, 2, 4, 1, 30, 19, 25, 43, 46, 24, 15, 29, 30, 49, 3, 47, 44, 25, 19, 16, 32, 4, 52, 33, 17, 14, 31, 4, 31, 32)),
    (4, 4, 6, (1, 10), 80, 60, 2160,
     (0, 46, 9, 12, 13, 34, 35, 53, 55, 55, 5, 41, 13, 22, 44, 39, 2, 20, 43, 8, 29, 31, 50, 57, 52, 58, 54, 1, 45, 36, 17, 47, 32, 47, 41, 35, 22, 7, 6, 43)),
    (4, 5, 3, (1, 8), 64, 40, 1440,
     (0, 31, 4, 31, 37, 29, 12, 7, 31, 18, 20, 0, 5, 10, 15, 26, 37, 22, 0, 38, 33, 14, 25, 15, 29, 27, 19, 28, 15, 25, 21, 33)),
    (4, 5, 4, (1, 9), 72, 50, 1600,
     (0, 30, 26, 35, 21, 37, 15, 32, 42, 47, 39, 19, 29, 20, 27, 37, 14, 6, 42, 4, 22, 1, 5, 33, 20, 19, 13, 13, 17, 21, 32, 15, 25, 32, 39, 38)),
    (4, 5, 5, (1, 10), 80, 65, 2600,
     (0, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 20, 24, 55, 55, 55, 55, 55, 55, 55, 55, 55, 55, 39, 39, 39, 39, 39, 39, 39, 39, 39, 48, 30, 30, 30, 20, 24)),
    (4, 6, 3, (1, 9), 72, 40, 1440,
     (0, 28, 25, 25, 0, 32, 21, 15, 8, 23, 10, 4, 5, 17, 24, 29, 0, 24, 0, 26, 7, 22, 33, 25, 37, 29, 37, 10, 38, 35, 2, 17, 22, 11, 32, 30)),
    (4, 6, 4, (1, 10), 80, 40, 1600,
     (0, 18, 33, 10, 24, 13, 35, 35, 11, 18, 27, 21, 24, 15, 26, 32, 38, 3, 18, 17, 28, 35, 0, 16, 29, 36, 6, 24, 10, 38, 15, 16, 4, 4, 14, 3, 32, 38, 7, 4)),
    (4, 7, 3, (1, 10), 80, 45, 1800,
     (0, 38, 30, 35, 38, 6, 38, 43, 29, 3, 8, 36, 43, 5, 26, 30, 33, 35, 27, 15, 17, 10, 8, 15, 27, 9, 20, 25, 26, 1, 32, 43, 2, 28, 38, 34, 24, 40, 36, 9)),
    (5, 2, 3, (1, 5), 40, 30, 750,
     (0, 25, 26, 0, 12, 13, 11, 13, 24, 25, 6, 3, 16, 15, 17, 10, 11, 24, 23, 5, 9, 11, 7, 8, 0)),
    (5, 2, 4, (1, 6), 48, 35, 1050,
     (0, 26, 15, 1, 2, 5, 12, 22, 11, 22, 21, 0, 4, 25, 13, 5, 23, 1, 24, 25, 28, 26, 31, 13, 25, 15, 5, 1, 27, 25)),
    (5, 2, 5, (1, 7), 56, 45, 1575,
     (0, 41, 13, 20, 6, 23, 28, 8, 39, 26, 30, 42, 39, 37, 4, 14, 19, 9, 6, 42, 31, 23, 41, 14, 15, 20, 14, 38, 3, 6, 20, 1, 26, 3, 25)),
    (5, 2, 6, (1, 8), 64, 50, 2000,
     (0, 35, 30, 25, 17, 38, 33, 31, 9, 45, 24, 31, 41, 39, 1, 22, 21, 23, 15, 27, 8, 47, 24, 31, 36, 45, 38, 30, 12, 28, 39, 15, 1, 41, 8, 8, 14, 27, 25, 18)),
    (5, 2, 7, (1, 9), 72, 55, 2475,
     (0, 28, 32, 31, 22, 9, 38, 8, 29, 50, 16, 28, 4, 49, 45, 33, 53, 41, 25, 12, 45, 0, 21, 32, 6, 14, 8, 12, 8, 26, 20, 35, 30, 42, 22, 16, 14, 23, 20, 21, 2, 34, 50, 22, 30)),
    (5, 2, 8, (1, 10), 80, 60, 3500,
     (0, 1, 39, 23, 37, 37, 44, 13, 22, 56, 1, 27, 32, 6, 56, 31, 33, 29, 44, 38, 8, 1, 2, 34, 24, 1, 11, 24, 9, 0, 20, 39, 58, 6, 1, 22, 39, 57, 36, 41, 50, 3, 54, 41, 23, 58, 48, 5, 50, 54)),
    (5, 3, 3, (1, 6), 48, 30, 900,
     (0, 18, 11, 1, 19, 4, 7, 4, 24, 10, 3, 7, 2, 12, 13, 21, 28, 19, 20, 14, 13, 26, 2, 24, 24, 21, 26, 11, 26, 22)),
    (5, 3, 4, (1, 7), 56, 40, 1400,
     (0, 23, 28, 21, 22, 36, 12, 12, 11, 13, 6, 26, 27, 28, 4, 12, 22, 10, 20, 4, 25, 19, 26, 33, 25, 35, 27, 6, 10, 19)),
    (5, 3, 5, (1, 8), 64, 45, 1800,
     (0, 34, 2, 15, 4, 13, 33, 30, 23, 23, 30, 0, 7, 24, 23, 25, 11, 6, 21, 32, 42, 26, 0, 36, 6, 0, 41, 35, 24, 7, 3, 14, 39, 36, 8, 31, 19, 35, 14, 18)),
    (5, 4, 4, (1, 8), 64, 25, 1000,
     (0, 2, 20, 15, 9, 2, 6, 22, 7, 2, 6, 7, 4, 14, 12, 9, 8, 1, 15, 22, 20, 6, 23, 8, 21, 3, 11, 23, 17, 3, 10, 10, 7, 2, 22, 9, 10, 3, 13, 11)),
    (5, 4, 5, (1, 9), 72, 45, 2025,
     (0, 42, 19, 0, 18, 9, 21, 24, 25, 0, 41, 25, 28, 21, 18, 39, 22, 22, 8, 37, 21, 43, 40, 5, 9, 20, 39, 21, 25, 40, 39, 40, 43, 38, 19, 19, 2, 30, 0, 31, 5, 23, 23, 7, 34)),
    (5, 4, 6, (1, 10), 80, 50, 2500,
     (0, 21, 52, 36, 31, 53, 37, 18, 15, 14, 21, 16, 29, 38, 6, 31, 41, 40, 1, 13, 46, 6, 23, 23, 14, 35, 2, 24, 52, 1, 9, 24, 32, 46, 13, 43, 52, 54, 13, 2, 58, 58, 56, 5, 56, 18, 55, 26, 50, 2)),
    (5, 5, 3, (1, 8), 64, 30, 1600,
     (0, 1, 28, 22, 7, 28, 22, 22, 26, 1, 6, 11, 22, 35, 12, 12, 10, 20, 21, 15, 17, 19, 4, 9, 10, 4, 15, 20, 20, 33, 34, 22, 29, 13, 25, 38, 33, 35, 12, 26)),
    (5, 5, 4, (1, 9), 72, 40, 2250,
     (0, 32, 32, 19, 9, 20, 18, 24, 37, 18, 14, 18, 27, 38, 26, 25, 15, 16, 43, 9, 48, 36, 45, 6, 47, 11, 37, 47, 22, 47, 33, 9, 40, 27, 3, 34, 8, 31, 36, 38, 25, 44, 7, 44, 3)),
    (5, 5, 5, (1, 10), 80, 50, 2750,
     (0, 5, 38, 4, 34, 29, 20, 32, 6, 20, 24, 11, 14, 34, 24, 37, 34, 43, 34, 27, 40, 46, 35, 14, 15, 10, 8, 45, 10, 25, 23, 28, 35, 22, 15, 26, 39, 37, 23, 30, 37, 1, 34, 13, 44, 24, 3, 34, 40, 0, 6, 19, 42, 19, 12)),
)


@dataclass(frozen=True)
class CodeRecord:
    """One published code entry, values exactly as listed."""

    b: int
    c: int
    a: int
    rate: Fraction
    g: int
    m: int
    n: int
    slopes: tuple[int, ...]

    @property
    def params(self) -> CodeParams:
        return CodeParams(a=self.a, b=self.b, c=self.c)


def load_fixtures() -> tuple[CodeRecord, ...]:
    """All published rows, in table order."""
    return tuple(
        CodeRecord(b=b, c=c, a=a, rate=Fraction(rn, rd), g=g, m=m, n=n, slopes=s)
        for (b, c, a, (rn, rd), g, m, n, s) in _TABLE_ROWS
    )


@dataclass(frozen=True)
class StructuralFlags:
    """Computed consistency checks; True means the published value checks out."""

    len_s_ok: bool
    n_ok: bool
    rate_ok: bool
    g_bound_ok: bool

    @property
    def consistent(self) -> bool:
        return self.len_s_ok and self.n_ok and self.rate_ok and self.g_bound_ok

    def issues(self) -> tuple[str, ...]:
        out = []
        if not self.len_s_ok:
            out.append("len_s")
        if not self.n_ok:
            out.append("n")
        if not self.rate_ok:
            out.append("rate")
        if not self.g_bound_ok:
            out.append("g_bound")
        return tuple(out)


def structural_flags(record: CodeRecord) -> StructuralFlags:
    params = record.params
    return StructuralFlags(
        len_s_ok=len(record.slopes) == params.block_cols,
        n_ok=record.n == record.m * params.block_cols,
        rate_ok=record.rate == params.design_rate,
        g_bound_ok=record.g <= g_max(params),
    )


@dataclass(frozen=True)
class RecordVerification:
    index: int  # 1-based position in the table
    record: CodeRecord
    flags: StructuralFlags
    computed: Optional[dict[str, int]]  # girth per ladder variant, None when not computable
    verdict: str  # confirmed | confirmed-under-variant | erratum

    def to_json_dict(self) -> dict:
        rec = self.record
        return {
            "index": self.index,
            "b": rec.b,
            "c": rec.c,
            "a": rec.a,
            "rate": f"{rec.rate.numerator}/{rec.rate.denominator}",
            "g": rec.g,
            "m": rec.m,
            "n": rec.n,
            "len_s": len(rec.slopes),
            "expected_n": rec.m * rec.params.block_cols,
            "expected_len_s": rec.params.block_cols,
            "issues": list(self.flags.issues()),
            "computed_girth": dict(self.computed) if self.computed is not None else None,
            "verdict": self.verdict,
        }


def _ladder_sequences(record: CodeRecord) -> dict[str, SlopeSequence]:
    m = record.m
    primary = SlopeSequence(m=m, slopes=record.slopes)
    bottom = SlopeSequence(m=m, slopes=tuple((0 - s) % m for s in record.slopes))
    return {"primary": primary, "negated": primary.negated(), "bottom_anchor": bottom}


def verify_record(record: CodeRecord, index: int = 0, deep: bool = True) -> RecordVerification:
    """Structural flags plus, when the slope count permits a lift, the girth
    under every ladder interpretation."""
    flags = structural_flags(record)
    computed: Optional[dict[str, int]] = None
    verdict = "erratum"
    if deep and flags.len_s_ok:
        mother = build_mother(record.params)
        computed = {}
        for name, seq in _ladder_sequences(record).items():
            result = girth_bsg(build_bsg(mother, seq))
            computed[name] = result.girth
        if computed["primary"] == record.g:
            verdict = "confirmed"
        elif any(computed[name] == record.g for name in LADDER):
            verdict = "confirmed-under-variant"
    return RecordVerification(index=index, record=record, flags=flags,
                              computed=computed, verdict=verdict)


@dataclass(frozen=True)
class VerificationReport:
    entries: tuple[RecordVerification, ...]
    deep: bool

    def summary(self) -> dict:
        out = {
            "rows": len(self.entries),
            "structurally_consistent": sum(1 for e in self.entries if e.flags.consistent),
            "flagged": sum(1 for e in self.entries if not e.flags.consistent),
        }
        if self.deep:
            for verdict in ("confirmed", "confirmed-under-variant", "erratum"):
                out[verdict.replace("-", "_")] = sum(
                    1 for e in self.entries if e.verdict == verdict
                )
        return out

    def to_json(self) -> str:
        payload = {
            "deep": self.deep,
            "summary": self.summary(),
            "records": [e.to_json_dict() for e in self.entries],
        }
        return json.dumps(payload, sort_keys=True, separators=(",", ":")) + "\n"


def verify_table(records=None, deep: bool = True, workers: Optional[int] = None,
                 indices=None) -> VerificationReport:
    """Audit records (default: the whole catalog) preserving table order.

    Structural flags are always computed; ``deep`` adds the girth ladder.
    Verification parallelizes across records, and report order and content
    do not depend on the worker count.
    """
    if records is None:
        records = load_fixtures()
    numbered = [(i + 1, rec) for i, rec in enumerate(records)]
    if indices is not None:
        wanted = set(indices)
        numbered = [(i, rec) for i, rec in numbered if i in wanted]
        if not numbered:
            raise ValueError("no table rows selected")
    workers = resolve_workers(workers)
    entries = ordered_map(
        lambda pair: verify_record(pair[1], index=pair[0], deep=deep), numbered, workers
    )
    return VerificationReport(entries=tuple(entries), deep=deep)
