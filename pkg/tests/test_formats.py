import io

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from girthlab import (
    AlistError,
    CodeParams,
    SlopeSequence,
    build_mother,
    export_alist,
    import_alist,
    lift,
    load_descriptor,
    save_descriptor,
)
from girthlab.formats import column_support, to_alist

H322_M1_ALIST = """10 8
2 3
2 2 2 2 2 2 2 2 2 2
3 2 3 2 3 2 3 2
1 2
2 3
1 3
3 4
4 5
5 6
6 7
5 7
7 8
1 8
1 3 10
1 2
2 3 4
4 5
5 6 8
6 7
7 8 9
9 10
"""


def _zero_lift(a, b, c, m=1):
    mother = build_mother(CodeParams(a, b, c))
    return lift(mother, SlopeSequence.zeros(m, mother.cols))


def test_alist_golden_h322():
    assert to_alist(_zero_lift(3, 2, 2)) == H322_M1_ALIST


def test_alist_header_and_weights():
    lines = to_alist(_zero_lift(3, 2, 2)).splitlines()
    assert lines[0] == "10 8"
    assert lines[1] == "2 3"
    assert lines[2].split() == ["2"] * 10


def test_import_inverts_export():
    code = _zero_lift(3, 2, 2, m=3)
    sm = import_alist(io.StringIO(to_alist(code)))
    assert sm.num_rows == code.num_rows
    assert sm.num_cols == code.num_cols
    assert sm.cols == code.column_support()


@settings(max_examples=25, deadline=None)
@given(
    a=st.integers(2, 5),
    b=st.integers(1, 4),
    c=st.integers(1, 4),
    m=st.integers(1, 6),
    data=st.data(),
)
def test_roundtrip_random_lifts(a, b, c, m, data):
    mother = build_mother(CodeParams(a, b, c))
    slopes = tuple(data.draw(st.integers(0, m - 1)) for _ in range(mother.cols))
    code = lift(mother, SlopeSequence(m, slopes))
    sm = import_alist(io.StringIO(to_alist(code)))
    assert sm.cols == code.column_support()
    # serializing the imported matrix reproduces the exact bytes
    assert to_alist(sm) == to_alist(code)


def test_column_weights_all_two():
    for a, b, c, m in [(3, 2, 2, 1), (2, 3, 1, 4), (5, 2, 3, 2)]:
        text = to_alist(_zero_lift(a, b, c, m))
        col_weights = text.splitlines()[2].split()
        assert set(col_weights) == {"2"}


def test_export_to_path(tmp_path):
    path = tmp_path / "code.alist"
    export_alist(_zero_lift(3, 2, 2), path)
    assert path.read_text() == H322_M1_ALIST
    assert import_alist(path).num_cols == 10


def test_export_io_error(tmp_path):
    target = tmp_path / "missing_dir" / "code.alist"
    with pytest.raises(OSError, match="cannot write alist"):
        export_alist(_zero_lift(3, 2, 2), target)


def test_dense_array_support():
    H = np.array([[1, 1], [1, 1]])
    sm = column_support(H)
    assert sm.cols == ((0, 1), (0, 1))


@pytest.mark.parametrize(
    "mangle,lineno",
    [
        (lambda ls: ls[:1], "2"),                      # truncated
        (lambda ls: ["10"] + ls[1:], "line 1"),        # bad header
        (lambda ls: ls[:2] + ["2 2"] + ls[3:], "line 3"),  # short column weights
        (lambda ls: ls[:4] + ["1 2 3"] + ls[5:], "line 5"),  # entry count mismatch
        (lambda ls: ls[:4] + ["1 9"] + ls[5:], "line 5"),    # row index out of range
        (lambda ls: ls[:14] + ["1 3 9"] + ls[15:], "line 15"),  # row list disagrees
    ],
)
def test_malformed_alist_errors(mangle, lineno):
    lines = H322_M1_ALIST.splitlines()
    text = "\n".join(mangle(lines)) + "\n"
    with pytest.raises(AlistError, match=lineno):
        import_alist(io.StringIO(text))


def test_non_integer_token():
    with pytest.raises(AlistError, match="line 1"):
        import_alist(io.StringIO("x 8\n"))


def test_descriptor_roundtrip(tmp_path):
    params = CodeParams(3, 3, 2)
    seq = SlopeSequence(30, (0, 28, 19, 5, 16, 14, 25, 10, 15, 16, 13, 4, 6, 3, 25))
    path = tmp_path / "code.json"
    save_descriptor(path, params, seq)
    params2, seq2 = load_descriptor(path)
    assert params2 == params
    assert seq2 == seq


def test_descriptor_validation(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text('{"a":3,"b":3,"c":2,"m":30,"slopes":[0,1]}')
    with pytest.raises(ValueError, match="slope count"):
        load_descriptor(path)
    path.write_text('{"a":3,"b":3,"c":2}')
    with pytest.raises(ValueError, match="missing"):
        load_descriptor(path)
