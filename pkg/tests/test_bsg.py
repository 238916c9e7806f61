import random

import pytest

from girthlab import (
    ClosedWalk,
    CodeParams,
    SlopeSequence,
    build_bsg,
    build_mother,
    inevitable_walks,
    to_dot,
    validate_closed_walk,
)
from girthlab.bsg import (
    COND_COLUMN_REPEAT,
    COND_EDGE_REPETITION,
    COND_SLOPE_SUM,
    WALK_VALID,
)


def _random_seq(rng, m, n):
    return SlopeSequence(m, tuple(rng.randrange(m) for _ in range(n)))


def test_h322_vertex_edge_counts():
    bsg = build_bsg(build_mother(CodeParams(3, 2, 2)))
    assert bsg.num_vertices == 8
    assert bsg.num_edges == 10
    assert bsg.symbolic


def test_zero_slopes_all_zero():
    mother = build_mother(CodeParams(3, 2, 2))
    bsg = build_bsg(mother, SlopeSequence.zeros(4, mother.cols))
    assert all(e.slope == 0 for e in bsg.edges)


@pytest.mark.parametrize("a,b,c", [(2, 2, 1), (3, 2, 2), (4, 3, 1), (5, 2, 3), (6, 4, 2)])
def test_counts_match_mother(a, b, c):
    mother = build_mother(CodeParams(a, b, c))
    bsg = build_bsg(mother)
    assert bsg.num_vertices == (a + c - 1) * b
    assert bsg.num_edges == (a + c) * b
    assert sorted(e.column for e in bsg.edges) == list(range(mother.cols))


def test_forward_backward_slopes_cancel():
    mother = build_mother(CodeParams(3, 2, 2))
    rng = random.Random(5)
    for m in (2, 3, 7, 12):
        bsg = build_bsg(mother, _random_seq(rng, m, mother.cols))
        for e in bsg.edges:
            fwd = bsg.traversal_slope(e.column, True)
            bwd = bsg.traversal_slope(e.column, False)
            assert (fwd + bwd) % m == 0


def test_validate_immediate_backtrack_condition2():
    mother = build_mother(CodeParams(3, 2, 2))
    bsg = build_bsg(mother, SlopeSequence.zeros(5, mother.cols))
    walk = ClosedWalk(start=0, steps=((0, True), (0, False)))
    assert validate_closed_walk(bsg, walk) == COND_COLUMN_REPEAT


def test_validate_out_and_back_slope_cancels_still_condition2():
    mother = build_mother(CodeParams(3, 2, 2))
    seq = SlopeSequence(7, tuple([3] * mother.cols))
    bsg = build_bsg(mother, seq)
    # slope sum is 3 + 4 = 0 mod 7, but the wrap pair repeats the column
    walk = ClosedWalk(start=0, steps=((0, True), (0, False)))
    assert sum(bsg.traversal_slope(c, f) for c, f in walk.steps) % 7 == 0
    assert validate_closed_walk(bsg, walk) == COND_COLUMN_REPEAT


def test_validate_slope_sum_condition3():
    mother = build_mother(CodeParams(3, 2, 2))
    # triangle columns 0,1,2 on vertices 0,1,2
    seq = SlopeSequence(5, tuple([1] * mother.cols))
    bsg = build_bsg(mother, seq)
    walk = ClosedWalk(start=0, steps=((0, True), (1, True), (2, False)))
    assert validate_closed_walk(bsg, walk) == COND_SLOPE_SUM


def test_validate_repetition_condition1():
    mother = build_mother(CodeParams(3, 2, 2))
    bsg = build_bsg(mother, SlopeSequence.zeros(1, mother.cols))
    tri = ((0, True), (1, True), (2, False))
    walk = ClosedWalk(start=0, steps=tri + tri)  # each directed edge twice, m = 1
    assert validate_closed_walk(bsg, walk) == COND_EDGE_REPETITION


def test_validate_triangle_zero_slopes_valid():
    mother = build_mother(CodeParams(3, 2, 2))
    bsg = build_bsg(mother, SlopeSequence.zeros(3, mother.cols))
    walk = ClosedWalk(start=0, steps=((0, True), (1, True), (2, False)))
    assert validate_closed_walk(bsg, walk) == WALK_VALID


def test_validate_malformed_walks_raise():
    mother = build_mother(CodeParams(3, 2, 2))
    bsg = build_bsg(mother, SlopeSequence.zeros(3, mother.cols))
    with pytest.raises(ValueError, match="broken chain"):
        validate_closed_walk(bsg, ClosedWalk(start=0, steps=((4, True),)))
    with pytest.raises(ValueError, match="ends at"):
        validate_closed_walk(bsg, ClosedWalk(start=0, steps=((0, True),)))
    with pytest.raises(ValueError, match="empty"):
        validate_closed_walk(bsg, ClosedWalk(start=0, steps=()))
    with pytest.raises(ValueError, match="symbolic"):
        validate_closed_walk(build_bsg(mother), ClosedWalk(start=0, steps=((0, True), (1, True), (2, False))))


def test_inevitable_lengths_h322():
    walks = inevitable_walks(CodeParams(3, 2, 2))
    assert walks.p.length == 20
    assert walks.p_prime.length == 16


def test_inevitable_lengths_formulas_grid():
    for a in range(2, 7):
        for b in range(1, 6):
            for c in range(1, 5):
                walks = inevitable_walks(CodeParams(a, b, c))
                assert walks.p.length == 4 * (a + c)
                assert walks.p_prime.length == 2 * (b * c + b + a - 1)


def test_inevitable_h332_matches_gmax():
    from girthlab import g_max

    params = CodeParams(3, 3, 2)
    walks = inevitable_walks(params)
    assert 2 * walks.p.length == 40 == g_max(params)


def test_inevitable_walks_validate_under_random_assignments():
    rng = random.Random(17)
    for a, b, c in [(2, 1, 1), (2, 2, 1), (3, 2, 2), (3, 3, 2), (4, 2, 3), (5, 3, 1)]:
        params = CodeParams(a, b, c)
        mother = build_mother(params)
        walks = inevitable_walks(params)
        for _ in range(100):
            m = rng.randrange(2, 51)
            bsg = build_bsg(mother, _random_seq(rng, m, mother.cols))
            assert validate_closed_walk(bsg, walks.p) == WALK_VALID
            assert validate_closed_walk(bsg, walks.p_prime) == WALK_VALID


def test_inevitable_unconstructible_raises():
    with pytest.raises(ValueError):
        inevitable_walks(CodeParams(3, 2, 0))


def test_dot_export_deterministic():
    mother = build_mother(CodeParams(2, 1, 1))
    dot = to_dot(build_bsg(mother, SlopeSequence(3, (0, 1, 2))))
    assert dot == (
        "graph bsg {\n"
        "  v0;\n"
        "  v1;\n"
        '  v0 -- v1 [label="0:0"];\n'
        '  v0 -- v1 [label="1:1"];\n'
        '  v0 -- v1 [label="2:2"];\n'
        "}\n"
    )
    assert to_dot(build_bsg(mother)).count(":?") == 3
