import itertools

import numpy as np
import pytest

from girthlab import (
    CodeParams,
    SearchConfig,
    SlopeSequence,
    build_bsg,
    build_mother,
    g_max,
    girth_bfs,
    girth_bsg,
    lift,
    min_m_search,
    search,
)
from girthlab.search import spanning_tree_split


def exhaustive_best_girth(params, m, cutoff=None):
    """Brute-force oracle: exact best girth over every full slope assignment."""
    mother = build_mother(params)
    best = 0
    for assignment in itertools.product(range(m), repeat=mother.cols):
        bsg = build_bsg(mother, SlopeSequence(m, assignment))
        g = girth_bsg(bsg).girth
        if g is not None and g > best:
            best = g
            if cutoff is not None and best >= cutoff:
                return best
    return best


def test_config_validation():
    params = CodeParams(3, 3, 2)
    assert SearchConfig(params=params, m=5).target_girth == g_max(params)
    with pytest.raises(ValueError, match="maximum achievable"):
        SearchConfig(params=params, m=5, target_girth=g_max(params) + 2)
    with pytest.raises(ValueError, match="even"):
        SearchConfig(params=params, m=5, target_girth=7)
    with pytest.raises(ValueError, match="strategy"):
        SearchConfig(params=params, m=5, target_girth=6, strategy="annealing")
    with pytest.raises(ValueError, match="m must be"):
        SearchConfig(params=params, m=0, target_girth=6)


def test_spanning_tree_split_structure():
    # free columns of H(a,b,c): each cylinder's closing column plus the wrap
    for a, b, c in [(3, 3, 2), (2, 2, 1), (4, 2, 3), (5, 4, 1)]:
        mother = build_mother(CodeParams(a, b, c))
        tree, free = spanning_tree_split(mother)
        C = a + c
        expected = tuple(t * C + a - 1 for t in range(b)) + (b * C - 1,)
        assert free == expected
        assert len(free) == b + 1
        assert len(tree) + len(free) == mother.cols


def test_trivial_target_found_immediately():
    for strategy in ("backtracking", "randomized-restart", "hybrid"):
        config = SearchConfig(params=CodeParams(3, 3, 2), m=7, target_girth=4,
                              seed=1, budget=5000, restarts=2, strategy=strategy)
        outcome = search(config)
        assert outcome.status == "found"
        assert outcome.achieved_girth >= 4


def test_found_outcome_reverifies():
    config = SearchConfig(params=CodeParams(3, 3, 2), m=30, target_girth=40,
                          seed=0, budget=100_000, restarts=4, strategy="backtracking")
    outcome = search(config)
    assert outcome.status == "found"
    mother = build_mother(config.params)
    oracle = girth_bfs(lift(mother, outcome.slopes))
    assert oracle.girth == outcome.achieved_girth
    assert oracle.girth >= 40


def test_small_m_exhausted_with_bruteforce_oracle():
    # every one of the 2^15 full assignments stays below girth 40 at m = 2
    params = CodeParams(3, 3, 2)
    best = exhaustive_best_girth(params, 2, cutoff=40)
    assert best < 40
    config = SearchConfig(params=params, m=2, target_girth=40,
                          seed=0, budget=100_000, restarts=1, strategy="backtracking")
    assert search(config).status == "exhausted"


def test_exhausted_matches_oracle_feasibility_small_grid():
    # pruned backtracking agrees with unpruned exhaustive search on
    # feasibility for every target on small instances
    for params, m in [(CodeParams(2, 2, 1), 2), (CodeParams(2, 2, 1), 3),
                      (CodeParams(3, 1, 1), 4), (CodeParams(2, 3, 1), 2)]:
        best = exhaustive_best_girth(params, m)
        for target in range(4, g_max(params) + 2, 2):
            config = SearchConfig(params=params, m=m, target_girth=target,
                                  seed=0, budget=500_000, restarts=1,
                                  strategy="backtracking")
            outcome = search(config)
            if target <= best:
                assert outcome.status == "found", (params, m, target, best)
                assert outcome.achieved_girth >= target
            else:
                assert outcome.status == "exhausted", (params, m, target, best)


def test_budget_expiry():
    config = SearchConfig(params=CodeParams(3, 3, 2), m=30, target_girth=40,
                          seed=0, budget=5, restarts=1, strategy="backtracking")
    outcome = search(config)
    assert outcome.status == "budget-expired"
    assert outcome.evaluations <= 5
    assert outcome.slopes is None


def test_determinism_same_config():
    config = SearchConfig(params=CodeParams(3, 3, 2), m=36, target_girth=40,
                          seed=9, budget=50_000, restarts=8, strategy="hybrid")
    first = search(config)
    second = search(config)
    assert first.to_json_dict(config) == second.to_json_dict(config)


def test_determinism_across_workers():
    config = SearchConfig(params=CodeParams(3, 3, 2), m=36, target_girth=40,
                          seed=4, budget=50_000, restarts=8, strategy="hybrid")
    results = [search(config, workers=w).to_json_dict(config) for w in (1, 2, 8)]
    assert results[0] == results[1] == results[2]


def test_randomized_strategy_finds_easy_target():
    config = SearchConfig(params=CodeParams(3, 3, 2), m=16, target_girth=24,
                          seed=5, budget=50_000, restarts=2,
                          strategy="randomized-restart")
    outcome = search(config)
    assert outcome.status == "found"
    assert outcome.achieved_girth >= 24
    assert outcome.slopes.slopes[0] == 0


def test_min_m_identity_case():
    # the mother girth of H(3,2,2) is 6, so m = 1 with all-zero slopes works
    params = CodeParams(3, 2, 2)
    result = min_m_search(params, 6, [1], per_m_budget=1000, seed=0, restarts=1)
    assert result.found and result.m == 1
    assert result.outcome.slopes.slopes == (0,) * 10


def test_min_m_deterministic():
    params = CodeParams(2, 3, 1)
    target = g_max(params)
    assert target == 24
    runs = [
        min_m_search(params, target, range(2, 30), per_m_budget=20_000, seed=12,
                     restarts=4, workers=w)
        for w in (1, 4)
    ]
    assert runs[0].found
    assert runs[0].m == runs[1].m
    assert runs[0].outcome.slopes == runs[1].outcome.slopes
    oracle = girth_bfs(lift(build_mother(params), runs[0].outcome.slopes))
    assert oracle.girth >= target


def test_min_m_validation():
    params = CodeParams(3, 3, 2)
    with pytest.raises(ValueError, match="empty"):
        min_m_search(params, 40, [], per_m_budget=10, seed=0)
    with pytest.raises(ValueError, match="ascending"):
        min_m_search(params, 40, [5, 3], per_m_budget=10, seed=0)


def test_search_json_excludes_elapsed():
    config = SearchConfig(params=CodeParams(3, 3, 2), m=7, target_girth=4,
                          seed=1, budget=100, restarts=1)
    payload = search(config).to_json_dict(config)
    assert "elapsed" not in payload
    assert payload["status"] == "found"
