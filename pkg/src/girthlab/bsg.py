"""Block-structure graph of a column-weight-2 block matrix.

Vertices are block rows.  Each block column k whose two nonzero blocks sit in
rows u < v becomes one undirected edge stored with the canonical forward
orientation u -> v and slope s = (shift at v) - (shift at u) mod m; the
reverse traversal carries (m - s) mod m.  With the upper block anchored at
shift 0 the forward slope is simply the column's slope value.

A closed walk is a chain of directed edge traversals returning to its start.
It is accepted when

1. no directed edge is traversed more than m times,
2. consecutive traversals use different columns, including the wrap pair of
   last and first step, and
3. the traversal slopes sum to 0 mod m.

An accepted length-l walk corresponds to a length-2l cycle in the Tanner
graph of the lifted code.  Walks whose slope sums telescope to zero under
every shift assignment ("inevitable" walks) therefore cap the achievable
girth of all lifts.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import NamedTuple, Optional, Sequence

from .construction import CodeParams, MotherMatrix, SlopeSequence, build_mother

__all__ = [
    "BsgEdge",
    "BlockStructureGraph",
    "ClosedWalk",
    "InevitableWalks",
    "WALK_VALID",
    "COND_EDGE_REPETITION",
    "COND_COLUMN_REPEAT",
    "COND_SLOPE_SUM",
    "build_bsg",
    "validate_closed_walk",
    "inevitable_walks",
    "to_dot",
]

WALK_VALID = 0
COND_EDGE_REPETITION = 1
COND_COLUMN_REPEAT = 2
COND_SLOPE_SUM = 3


@dataclass(frozen=True)
class BsgEdge:
    """Edge for block column ``column`` joining block rows u < v.

    ``slope`` is the u -> v traversal slope, or None while symbolic.
    """

    column: int
    u: int
    v: int
    slope: Optional[int]


@dataclass(frozen=True)
class BlockStructureGraph:
    num_vertices: int
    edges: tuple[BsgEdge, ...]
    m: Optional[int]

    @property
    def num_edges(self) -> int:
        return len(self.edges)

    @property
    def symbolic(self) -> bool:
        return self.m is None

    def endpoints(self, column: int, forward: bool) -> tuple[int, int]:
        """(tail, head) of the directed traversal of ``column``."""
        e = self.edges[column]
        return (e.u, e.v) if forward else (e.v, e.u)

    def traversal_slope(self, column: int, forward: bool) -> int:
        if self.m is None:
            raise ValueError("slopes are symbolic; build the graph from a slope sequence")
        s = self.edges[column].slope
        return s if forward else (self.m - s) % self.m


@dataclass(frozen=True)
class ClosedWalk:
    """Walk as (column, forward) steps; forward means the canonical u -> v direction."""

    start: int
    steps: tuple[tuple[int, bool], ...]

    @property
    def length(self) -> int:
        return len(self.steps)

    def vertices(self, bsg: BlockStructureGraph) -> tuple[int, ...]:
        """Vertex chain including the final return to start; raises if the
        steps do not chain or do not close."""
        at = self.start
        chain = [at]
        for column, forward in self.steps:
            if not 0 <= column < bsg.num_edges:
                raise ValueError(f"step references unknown column {column}")
            tail, head = bsg.endpoints(column, forward)
            if tail != at:
                raise ValueError(
                    f"broken chain: step on column {column} starts at {tail}, walk is at {at}"
                )
            at = head
            chain.append(at)
        if at != self.start:
            raise ValueError(f"walk ends at {at}, started at {self.start}")
        return tuple(chain)


class InevitableWalks(NamedTuple):
    p: ClosedWalk
    p_prime: ClosedWalk


def build_bsg(mother: MotherMatrix, seq: Optional[SlopeSequence] = None) -> BlockStructureGraph:
    """One edge per block column; slopes concrete when ``seq`` is given.

    The mother matrix type already guarantees column weight 2; anything else
    is outside this graph model.
    """
    if seq is not None and len(seq.slopes) != mother.cols:
        raise ValueError(
            f"slope sequence length {len(seq.slopes)} does not match {mother.cols} columns"
        )
    edges = []
    for k, (u, v) in enumerate(mother.col_rows):
        slope = seq.slopes[k] if seq is not None else None
        edges.append(BsgEdge(column=k, u=u, v=v, slope=slope))
    return BlockStructureGraph(
        num_vertices=mother.rows,
        edges=tuple(edges),
        m=seq.m if seq is not None else None,
    )


def validate_closed_walk(bsg: BlockStructureGraph, walk: ClosedWalk) -> int:
    """Return WALK_VALID or the number of the first violated condition.

    Malformed walks (empty, broken chain, unknown column) raise ValueError;
    the verdict codes are reserved for well-formed closed walks.
    """
    if bsg.m is None:
        raise ValueError("cannot validate against symbolic slopes; provide a concrete graph")
    if not walk.steps:
        raise ValueError("empty walk")
    walk.vertices(bsg)  # chain and closure check

    reps: dict[tuple[int, bool], int] = {}
    for step in walk.steps:
        reps[step] = reps.get(step, 0) + 1
    if max(reps.values()) > bsg.m:
        return COND_EDGE_REPETITION

    cols = [column for column, _ in walk.steps]
    for j in range(len(cols)):
        if cols[j] == cols[(j + 1) % len(cols)]:
            return COND_COLUMN_REPEAT

    total = sum(bsg.traversal_slope(column, forward) for column, forward in walk.steps)
    if total % bsg.m != 0:
        return COND_SLOPE_SUM
    return WALK_VALID


def _reverse(steps: list[tuple[int, bool]]) -> list[tuple[int, bool]]:
    return [(column, not forward) for column, forward in reversed(steps)]


def inevitable_walks(params: CodeParams) -> InevitableWalks:
    """Closed walks P and P' that are valid under every shift assignment.

    Both are commutator-style traversals in which every directed edge is used
    equally often in both directions, so the slope sum telescopes to zero
    regardless of the assignment.  P walks cylinder 1, the first chain, and
    cylinder 2 (pattern P1 P2 P3 P2r P1r P2 P3r P2r) and has length 4(a+c).
    P' splits the union of the outer ring and the cylinder-1 path into three
    internally disjoint paths pi1, pi2, pi3 between the ring-entry and
    ring-exit vertices of cylinder 1 and walks pi1 pi2 pi3 pi1r pi2r pi3r,
    giving length 2(bc + b + a - 1).

    Requires a constructible shape (any c = 0 shape raises).  Validity needs
    m >= 2 because P traverses the chain's directed edges twice each.
    """
    mother = build_mother(params)
    a, b, c = params.a, params.b, params.c
    R = a + c - 1
    C = a + c
    nv = mother.rows
    endpoint = {e: pair for e, pair in enumerate(mother.col_rows)}

    def step(column: int, tail: int) -> tuple[tuple[int, bool], int]:
        u, v = endpoint[column]
        if tail == u:
            return (column, True), v
        if tail == v:
            return (column, False), u
        raise AssertionError(f"column {column} not incident to vertex {tail}")

    def path(columns: Sequence[int], start: int) -> tuple[list[tuple[int, bool]], int]:
        at = start
        steps = []
        for column in columns:
            st, at = step(column, at)
            steps.append(st)
        return steps, at

    def ring(t: int, start_offset: int) -> list[int]:
        """Cylinder t's ring columns in traversal order from vertex t*R + start_offset."""
        cols = []
        for j in range(a):
            off = (start_offset + j) % a
            cols.append(t * C + (a - 1 if off == a - 1 else off))
        return cols

    chain = [[t * C + a + i for i in range(c)] for t in range(b)]

    # P: ring of cylinder 1 from its chain-exit vertex, the first chain, ring
    # of the next cylinder from its chain-entry vertex.
    p1, at = path(ring(0, a - 1), a - 1)
    assert at == a - 1
    p2, at = path(chain[0], a - 1)
    p3_start = at  # R % nv for b >= 2, vertex 0 for b = 1
    p3, at = path(ring(1 % b, p3_start % R), p3_start)
    assert at == p3_start
    p_steps: list[tuple[int, bool]] = []
    for segment in (p1, p2, p3, _reverse(p2), _reverse(p1), p2, _reverse(p3), _reverse(p2)):
        p_steps.extend(segment)
    p = ClosedWalk(start=a - 1, steps=tuple(p_steps))

    # P': theta-graph commutator.  pi1 is the closing column of cylinder 1,
    # pi2 the rest of the outer ring (chains plus the other cylinders'
    # closing columns), pi3 the inner path of cylinder 1.
    pi1, at = path([a - 1], 0)
    assert at == a - 1
    pi2_cols: list[int] = []
    for t in range(b):
        pi2_cols.extend(chain[t])
        if t < b - 1:
            pi2_cols.append((t + 1) * C + a - 1)
    pi2, at = path(pi2_cols, a - 1)
    assert at == 0
    pi3, at = path(list(range(a - 1)), 0)
    assert at == a - 1
    pp_steps = pi1 + pi2 + pi3 + _reverse(pi1) + _reverse(pi2) + _reverse(pi3)
    p_prime = ClosedWalk(start=0, steps=tuple(pp_steps))

    assert p.length == 4 * (a + c)
    assert p_prime.length == 2 * (b * c + b + a - 1)
    bsg = build_bsg(mother)
    p.vertices(bsg)
    p_prime.vertices(bsg)
    return InevitableWalks(p=p, p_prime=p_prime)


def to_dot(bsg: BlockStructureGraph, name: str = "bsg") -> str:
    """Deterministic DOT rendering; edges labeled "column:slope"."""
    lines = [f"graph {name} {{"]
    for v in range(bsg.num_vertices):
        lines.append(f"  v{v};")
    for e in bsg.edges:
        label = f"{e.column}:{'?' if e.slope is None else e.slope}"
        lines.append(f'  v{e.u} -- v{e.v} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"
