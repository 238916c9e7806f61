from fractions import Fraction

import pytest

from girthlab import (
    CodeParams,
    CodeRecord,
    SlopeSequence,
    build_bsg,
    build_mother,
    g_max,
    girth_bsg,
    load_fixtures,
    structural_flags,
    verify_table,
)
from girthlab.table import LADDER, verify_record


def test_record_count():
    assert len(load_fixtures()) == 52


def test_first_record():
    rec = load_fixtures()[0]
    assert (rec.b, rec.c, rec.a) == (3, 2, 3)
    assert rec.rate == Fraction(1, 5)
    assert (rec.g, rec.m, rec.n) == (40, 30, 450)
    assert rec.slopes == (0, 28, 19, 5, 16, 14, 25, 10, 15, 16, 13, 4, 6, 3, 25)
    assert len(rec.slopes) == 15


def test_known_duplicated_short_sequence_row():
    # the (b=3, c=5, a=5) row repeats the a=4 row's 27-entry sequence
    # although (a+c)b = 30
    rows = [r for r in load_fixtures() if (r.b, r.c, r.a) == (3, 5, 5)]
    assert len(rows) == 1
    rec = rows[0]
    assert len(rec.slopes) == 27 != rec.params.block_cols
    flags = structural_flags(rec)
    assert not flags.len_s_ok
    assert flags.issues() == ("len_s",)


def test_known_length_mismatch_row():
    rows = [r for r in load_fixtures() if (r.b, r.c, r.a) == (3, 6, 3)]
    assert len(rows) == 1
    rec = rows[0]
    assert rec.n == 1650
    assert rec.m * rec.params.block_cols == 1620
    assert structural_flags(rec).issues() == ("n",)


def test_flags_match_independent_arithmetic():
    # recompute every flag from scratch and require exact agreement
    for rec in load_fixtures():
        flags = structural_flags(rec)
        assert flags.len_s_ok == (len(rec.slopes) == (rec.a + rec.c) * rec.b)
        assert flags.n_ok == (rec.n == rec.m * (rec.a + rec.c) * rec.b)
        assert flags.rate_ok == (rec.rate == Fraction(1, rec.a + rec.c))
        assert flags.g_bound_ok == (rec.g <= g_max(rec.params))


def test_expected_flagged_rows():
    flagged = {
        (e.record.b, e.record.c, e.record.a): e.flags.issues()
        for e in verify_table(deep=False).entries
        if not e.flags.consistent
    }
    assert flagged == {
        (3, 5, 5): ("len_s",),
        (3, 6, 3): ("n",),
        (3, 6, 4): ("n",),
        (4, 2, 7): ("n",),
        (4, 4, 6): ("n",),
        (4, 5, 3): ("n",),
        (4, 5, 4): ("n",),
        (5, 2, 8): ("n",),
        (5, 3, 4): ("len_s",),
        (5, 5, 3): ("n",),
        (5, 5, 4): ("n",),
        (5, 5, 5): ("len_s", "n"),
    }


def test_rate_and_gbound_never_flagged():
    for rec in load_fixtures():
        flags = structural_flags(rec)
        assert flags.rate_ok
        assert flags.g_bound_ok


def test_structural_report_row_order_and_indices():
    report = verify_table(deep=False)
    assert [e.index for e in report.entries] == list(range(1, 53))
    assert report.summary()["rows"] == 52
    assert report.summary()["flagged"] == 12
    assert report.summary()["structurally_consistent"] == 40


def test_verify_row1_confirmed():
    entry = verify_table(indices=[1]).entries[0]
    assert entry.verdict == "confirmed"
    assert entry.computed["primary"] == 40
    assert set(entry.computed) == set(LADDER)


def test_ladder_variants_agree():
    # slope negation reverses walks, so all ladder girths coincide
    for idx in (1, 2, 7, 19):
        entry = verify_table(indices=[idx]).entries[0]
        assert len(set(entry.computed.values())) == 1


def test_unverifiable_row_is_erratum_not_crash():
    rows = [r for r in load_fixtures() if (r.b, r.c, r.a) == (3, 5, 5)]
    verification = verify_record(rows[0], index=16, deep=True)
    assert verification.verdict == "erratum"
    assert verification.computed is None


def test_row_with_n_flag_can_still_confirm():
    # the 1-based row 23 has an n typo but its girth claim reproduces
    entry = verify_table(indices=[23]).entries[0]
    assert entry.flags.issues() == ("n",)
    assert entry.verdict == "confirmed"
    assert entry.computed["primary"] == entry.record.g == 72


def test_row_selection_validation():
    with pytest.raises(ValueError, match="selected"):
        verify_table(indices=[999])


def test_report_json_deterministic_and_flag_bearing():
    first = verify_table(deep=False).to_json()
    second = verify_table(deep=False).to_json()
    assert first == second
    assert '"issues":["len_s"]' in first
    assert first.endswith("\n")


def test_custom_record_flags():
    rec = CodeRecord(b=2, c=1, a=2, rate=Fraction(1, 3), g=100, m=4, n=24,
                     slopes=(0, 1, 2, 3, 0, 1))
    flags = structural_flags(rec)
    assert flags.len_s_ok and flags.n_ok and flags.rate_ok
    assert not flags.g_bound_ok  # 100 > g_max


def test_spot_check_confirmed_row_against_direct_computation():
    rec = load_fixtures()[1]  # (b=3, c=2, a=4, m=42)
    mother = build_mother(rec.params)
    girth = girth_bsg(build_bsg(mother, SlopeSequence(rec.m, rec.slopes))).girth
    assert girth == rec.g == 48
