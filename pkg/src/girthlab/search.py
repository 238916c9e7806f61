"""Slope-sequence search for a target girth at a given lifting size.

Gauge normalization
-------------------
Slopes behave like a voltage assignment on the block-structure graph: adding
a vertex potential (shifting each column's slope by the potential difference
of its endpoints) leaves every closed walk's slope sum unchanged, and with
it the girth.  Any assignment is therefore gauge-equivalent to one that is
zero on a spanning tree, and only the co-tree columns carry free parameters;
for these mother matrices that is b + 1 columns (each cylinder's closing
column plus the ring wrap column).  The normalization also pins column 0, a
tree column, to slope 0, the same normalization visible in published
sequences.

Strategies
----------
backtracking
    Pins the spanning tree to slope 0 and assigns the free columns one by
    one, most-constrained first.  After each assignment a bounded BFS looks
    for an accepted closed walk through the new edge among the columns
    assigned so far; a walk of length <= target/2 - 1 means the partial
    assignment already carries a cycle below the target, so the value is
    rejected.  A completed assignment has girth >= target by construction
    (any short walk would have been caught when its last column was
    assigned), and exhausting the reduced space proves the target infeasible
    at this m by the gauge argument above.
randomized-restart
    Draws full sequences from the seeded generator (gauge classes are hit
    uniformly either way) and keeps the first one whose lift has no short
    cycle.
hybrid
    Even restart indices run backtracking, odd ones run randomized draws.

Restarts use seeds seed + restart_index and statically split the evaluation
budget.  The reported outcome merges restart results by lowest index, and
restarts above the winning index are discarded, so the outcome (including
the evaluation count) is identical for any worker count.
"""

from __future__ import annotations

import threading
import time
from concurrent.futures import ThreadPoolExecutor, wait
from dataclasses import dataclass, field
from random import Random
from typing import Optional

import numpy as np

from . import kernels
from .bsg import build_bsg
from .construction import CodeParams, MotherMatrix, SlopeSequence, build_mother, lift
from .girth import bsg_arrays, g_max, girth_bfs
from .parallel import resolve_workers

__all__ = [
    "SearchConfig",
    "SearchOutcome",
    "MinMResult",
    "search",
    "min_m_search",
]

STRATEGIES = ("backtracking", "randomized-restart", "hybrid")


@dataclass(frozen=True)
class SearchConfig:
    """Search parameters; target_girth defaults to the achievable maximum."""

    params: CodeParams
    m: int
    target_girth: Optional[int] = None
    seed: int = 0
    budget: int = 100_000
    restarts: int = 8
    strategy: str = "hybrid"

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ValueError(f"lifting size m must be >= 1, got {self.m}")
        if self.budget < 1:
            raise ValueError(f"budget must be >= 1, got {self.budget}")
        if self.restarts < 1:
            raise ValueError(f"restarts must be >= 1, got {self.restarts}")
        if self.strategy not in STRATEGIES:
            raise ValueError(f"unknown strategy {self.strategy!r}, expected one of {STRATEGIES}")
        bound = g_max(self.params)
        if self.target_girth is None:
            object.__setattr__(self, "target_girth", bound)
        t = self.target_girth
        if t % 2 != 0 or t < 4:
            raise ValueError(f"target girth must be an even integer >= 4, got {t}")
        if t > bound:
            raise ValueError(
                f"target girth {t} exceeds the maximum achievable girth {bound} "
                f"for (a,b,c)=({self.params.a},{self.params.b},{self.params.c})"
            )


@dataclass(frozen=True)
class SearchOutcome:
    """Result of one search run.

    ``achieved_girth`` is the oracle-verified girth of ``slopes`` when
    status is "found".  ``best_girth`` is the best exactly-verified girth
    seen (None when no candidate survived the short-cycle screen).
    ``elapsed`` is wall-clock seconds and is excluded from JSON output so
    identical runs serialize to identical bytes.
    """

    status: str
    slopes: Optional[SlopeSequence]
    achieved_girth: Optional[int]
    best_girth: Optional[int]
    evaluations: int
    elapsed: float

    def to_json_dict(self, config: SearchConfig) -> dict:
        return {
            "a": config.params.a,
            "b": config.params.b,
            "c": config.params.c,
            "m": config.m,
            "target_girth": config.target_girth,
            "seed": config.seed,
            "budget": config.budget,
            "restarts": config.restarts,
            "strategy": config.strategy,
            "status": self.status,
            "slopes": list(self.slopes.slopes) if self.slopes is not None else None,
            "achieved_girth": self.achieved_girth,
            "best_girth": self.best_girth,
            "evaluations": self.evaluations,
        }


@dataclass
class _RestartPiece:
    status: str  # found | exhausted | budget-expired | aborted
    slopes: Optional[SlopeSequence] = None
    girth: Optional[int] = None
    best_girth: Optional[int] = None
    evaluations: int = 0


class _Workspace:
    """Per-restart mutable state over the shared BSG topology."""

    def __init__(self, mother: MotherMatrix, m: int):
        self.mother = mother
        self.m = m
        zero = SlopeSequence.zeros(m, mother.cols)
        bsg = build_bsg(mother, zero)
        out_indptr, out_list, de_head, de_col, de_slope = bsg_arrays(bsg)
        self.out_indptr = out_indptr
        self.out_list = out_list
        self.de_head = de_head
        self.de_col = de_col
        self.de_slope = de_slope.copy()
        self.active = np.zeros(mother.cols, dtype=np.uint8)
        n_states = de_head.shape[0] * m
        self.seen = np.zeros(n_states, dtype=np.int64)
        self.dist = np.empty(n_states, dtype=np.int64)
        self.queue = np.empty(n_states, dtype=np.int64)
        self.stamp = 0

    def set_slope(self, col: int, val: int) -> None:
        self.de_slope[2 * col] = val
        self.de_slope[2 * col + 1] = (self.m - val) % self.m

    def set_all(self, slopes: np.ndarray) -> None:
        self.de_slope[0::2] = slopes
        self.de_slope[1::2] = (self.m - slopes) % self.m

    def walk_through(self, col: int, max_walk: int) -> int:
        """Shortest accepted walk through column ``col`` among active
        columns, -1 when none of length <= max_walk exists."""
        self.stamp += 1
        return int(
            kernels.bsg_walk_through_edge(
                self.out_indptr, self.out_list, self.de_head, self.de_col,
                self.de_slope, self.active, np.int64(self.m), np.int64(2 * col),
                np.int64(max_walk), self.seen, self.dist, self.queue,
                np.int64(self.stamp),
            )
        )

    def full_scan(self, cutoff_walk: int = 0, max_walk: int = 0) -> int:
        best, _, _ = kernels.bsg_walk_scan(
            self.out_indptr, self.out_list, self.de_head, self.de_col,
            self.de_slope, self.active, np.int64(self.m),
            np.int64(cutoff_walk), np.int64(max_walk),
        )
        return int(best)


def _short_cycle_counts(mother: MotherMatrix, cap: int = 8) -> list[int]:
    """Number of simple cycles of length <= cap through each edge of the
    block multigraph; drives the most-constrained-first column order."""
    adj: list[list[tuple[int, int]]] = [[] for _ in range(mother.rows)]
    for k, (u, v) in enumerate(mother.col_rows):
        adj[u].append((v, k))
        adj[v].append((u, k))
    counts = [0] * mother.cols

    def dfs(x: int, target: int, avoid: int, visited: set[int], depth: int) -> int:
        found = 0
        for y, col in adj[x]:
            if col == avoid:
                continue
            if y == target:
                found += 1
                continue
            if y in visited or depth + 1 >= cap:
                continue
            visited.add(y)
            found += dfs(y, target, avoid, visited, depth + 1)
            visited.remove(y)
        return found

    for k, (u, v) in enumerate(mother.col_rows):
        counts[k] = dfs(v, u, k, {v}, 1)
    return counts


def spanning_tree_split(mother: MotherMatrix) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """Partition columns into a spanning forest and the co-tree (free) columns.

    Columns are scanned in ascending order; a column joining two already
    connected vertices is free.  For H(a,b,c) the free set is each
    cylinder's closing column plus the ring wrap column, b + 1 in total.
    """
    parent = list(range(mother.rows))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    tree: list[int] = []
    free: list[int] = []
    for k, (u, v) in enumerate(mother.col_rows):
        ru, rv = find(u), find(v)
        if ru == rv:
            free.append(k)
        else:
            parent[ru] = rv
            tree.append(k)
    return tuple(tree), tuple(free)


def _column_order(mother: MotherMatrix) -> tuple[tuple[int, ...], list[int]]:
    """(tree columns, free columns most-constrained-first)."""
    tree, free = spanning_tree_split(mother)
    counts = _short_cycle_counts(mother)
    ordered = sorted(free, key=lambda k: (-counts[k], k))
    return tree, ordered


def _run_backtracking(ws: _Workspace, tree: tuple[int, ...], order: list[int],
                      target: int, budget: int, rng: Random, should_abort) -> _RestartPiece:
    m = ws.m
    cap_walk = target // 2 - 1
    cols = ws.mother.cols
    value_order: dict[int, list[int]] = {}
    for col in order:
        vals = list(range(m))
        rng.shuffle(vals)
        value_order[col] = vals

    piece = _RestartPiece(status="exhausted")
    slopes = [0] * cols
    # The spanning tree is slope 0 and carries no closed walks; its checks
    # cannot fail but count toward the budget like any other evaluation.
    for col in tree:
        if piece.evaluations >= budget:
            piece.status = "budget-expired"
            return piece
        ws.set_slope(col, 0)
        ws.active[col] = 1
        piece.evaluations += 1
        if ws.walk_through(col, cap_walk) >= 0:  # pragma: no cover - forest is acyclic
            raise AssertionError("closed walk found inside a spanning forest")

    def place(depth: int) -> Optional[str]:
        if should_abort():
            return "aborted"
        if depth == len(order):
            piece.evaluations += 1
            best_walk = ws.full_scan()
            girth = 2 * best_walk
            assert girth >= target, "incremental pruning admitted a short cycle"
            seq = SlopeSequence(m=m, slopes=tuple(slopes))
            oracle = girth_bfs(lift(ws.mother, seq))
            assert oracle.girth == girth, "independent oracle disagrees with walk scan"
            piece.status = "found"
            piece.slopes = seq
            piece.girth = oracle.girth
            piece.best_girth = oracle.girth
            return "found"
        col = order[depth]
        for val in value_order[col]:
            if piece.evaluations >= budget:
                return "budget-expired"
            piece.evaluations += 1
            slopes[col] = val
            ws.set_slope(col, val)
            ws.active[col] = 1
            if ws.walk_through(col, cap_walk) < 0:
                verdict = place(depth + 1)
                if verdict is not None:
                    return verdict
            ws.active[col] = 0
        return None

    verdict = place(0)
    if verdict in ("budget-expired", "aborted"):
        piece.status = verdict
    return piece


def _run_randomized(ws: _Workspace, target: int, budget: int, rng: Random,
                    should_abort) -> _RestartPiece:
    m = ws.m
    cols = ws.mother.cols
    cap_walk = target // 2 - 1
    ws.active[:] = 1
    piece = _RestartPiece(status="budget-expired")
    draw = np.empty(cols, dtype=np.int64)
    while piece.evaluations < budget:
        if should_abort():
            piece.status = "aborted"
            return piece
        draw[0] = 0
        for j in range(1, cols):
            draw[j] = rng.randrange(m)
        piece.evaluations += 1
        ws.set_all(draw)
        hit = ws.full_scan(cutoff_walk=cap_walk, max_walk=cap_walk)
        if hit > 0:
            continue
        best_walk = ws.full_scan()
        girth = 2 * best_walk
        assert girth >= target
        seq = SlopeSequence(m=m, slopes=tuple(int(v) for v in draw))
        oracle = girth_bfs(lift(ws.mother, seq))
        assert oracle.girth == girth, "independent oracle disagrees with walk scan"
        piece.status = "found"
        piece.slopes = seq
        piece.girth = oracle.girth
        piece.best_girth = oracle.girth
        return piece
    return piece


def _restart_budgets(budget: int, restarts: int) -> list[int]:
    base, extra = divmod(budget, restarts)
    return [base + (1 if i < extra else 0) for i in range(restarts)]


def search(config: SearchConfig, workers: Optional[int] = None) -> SearchOutcome:
    """Run the configured search; deterministic for a fixed config.

    The outcome matches sequential execution for any worker count: restarts
    are merged by lowest index and only restarts up to the winning index
    contribute to the reported evaluation count.
    """
    t0 = time.perf_counter()
    workers = resolve_workers(workers)
    mother = build_mother(config.params)
    tree, order = _column_order(mother)
    budgets = _restart_budgets(config.budget, config.restarts)
    target = config.target_girth

    lock = threading.Lock()
    lowest_found: list[Optional[int]] = [None]

    def run_one(idx: int) -> _RestartPiece:
        def should_abort() -> bool:
            lf = lowest_found[0]  # racy read is fine, abort is best-effort
            return lf is not None and lf < idx

        if budgets[idx] == 0:
            return _RestartPiece(status="budget-expired")
        ws = _Workspace(mother, config.m)
        rng = Random(config.seed + idx)
        if config.strategy == "backtracking":
            mode = "backtracking"
        elif config.strategy == "randomized-restart":
            mode = "randomized"
        else:
            mode = "backtracking" if idx % 2 == 0 else "randomized"
        if mode == "backtracking":
            piece = _run_backtracking(ws, tree, order, target, budgets[idx], rng, should_abort)
        else:
            piece = _run_randomized(ws, target, budgets[idx], rng, should_abort)
        if piece.status == "found":
            with lock:
                if lowest_found[0] is None or idx < lowest_found[0]:
                    lowest_found[0] = idx
        return piece

    indices = list(range(config.restarts))
    if workers <= 1:
        pieces: list[_RestartPiece] = []
        for idx in indices:
            piece = run_one(idx)
            pieces.append(piece)
            if piece.status == "found":
                break
    else:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            futures = [pool.submit(run_one, idx) for idx in indices]
            wait(futures)
        pieces = [f.result() for f in futures]

    winner: Optional[int] = None
    for idx, piece in enumerate(pieces):
        if piece.status == "found":
            winner = idx
            break

    counted = pieces[: winner + 1] if winner is not None else pieces
    evaluations = sum(p.evaluations for p in counted)
    best_girth = max((p.best_girth for p in counted if p.best_girth is not None), default=None)
    elapsed = time.perf_counter() - t0
    if winner is not None:
        win = pieces[winner]
        return SearchOutcome(
            status="found", slopes=win.slopes, achieved_girth=win.girth,
            best_girth=best_girth, evaluations=evaluations, elapsed=elapsed,
        )
    status = "exhausted" if any(p.status == "exhausted" for p in counted) else "budget-expired"
    return SearchOutcome(
        status=status, slopes=None, achieved_girth=None,
        best_girth=best_girth, evaluations=evaluations, elapsed=elapsed,
    )


@dataclass(frozen=True)
class MinMResult:
    found: bool
    m: Optional[int]
    outcome: Optional[SearchOutcome]
    tried: tuple[int, ...]


def min_m_search(params: CodeParams, target_girth: int, m_range, per_m_budget: int,
                 seed: int, restarts: int = 8, strategy: str = "hybrid",
                 workers: Optional[int] = None) -> MinMResult:
    """First m in the ascending range admitting a found sequence."""
    m_list = [int(m) for m in m_range]
    if not m_list:
        raise ValueError("empty m range")
    if m_list != sorted(m_list):
        raise ValueError("m range must be ascending")
    tried: list[int] = []
    for m in m_list:
        config = SearchConfig(
            params=params, m=m, target_girth=target_girth, seed=seed,
            budget=per_m_budget, restarts=restarts, strategy=strategy,
        )
        tried.append(m)
        outcome = search(config, workers=workers)
        if outcome.status == "found":
            return MinMResult(found=True, m=m, outcome=outcome, tried=tuple(tried))
    return MinMResult(found=False, m=None, outcome=None, tried=tuple(tried))
