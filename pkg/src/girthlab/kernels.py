"""BFS kernels behind both girth engines, JIT-compiled when numba is present.

The pure-Python bodies are numba-compatible, so the same code runs (slowly)
without numba; the JIT path is what meets the runtime budgets of the larger
sweeps.  All kernels are deterministic: scan order is fixed and ties are
broken by first discovery.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - numba is a declared dependency
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(fn):
            return fn

        return wrap


__all__ = [
    "HAVE_NUMBA",
    "tanner_girth_scan",
    "tanner_bfs_tree",
    "bsg_walk_scan",
    "bsg_walk_witness",
    "bsg_walk_through_edge",
]


@njit(cache=True, nogil=True)
def tanner_girth_scan(indptr, indices, n_roots, cutoff):
    """Shortest cycle length over BFS trees rooted at vertices 0..n_roots-1.

    For every non-tree edge (x, w) seen from root r the closed walk
    root..x, (x,w), w..root has length dist[x] + dist[w] + 1 and contains a
    cycle no longer than that, so the minimum over all roots and edges is the
    girth whenever every cycle passes through some root (true for bipartite
    graphs when the roots cover one side).  With cutoff > 0 the scan returns
    as soon as a cycle of length <= cutoff is recorded.

    Returns (best, root, x, w); best = -1 means acyclic.
    """
    V = indptr.shape[0] - 1
    dist = np.empty(V, np.int64)
    parent = np.empty(V, np.int64)
    seen = np.zeros(V, np.int64)
    queue = np.empty(V, np.int64)
    best = np.int64(-1)
    best_root = np.int64(-1)
    best_x = np.int64(-1)
    best_w = np.int64(-1)
    for r in range(n_roots):
        stamp = r + 1
        head = 0
        tail = 0
        queue[tail] = r
        tail += 1
        seen[r] = stamp
        dist[r] = 0
        parent[r] = -1
        while head < tail:
            x = queue[head]
            head += 1
            dx = dist[x]
            if best >= 0 and 2 * dx >= best:
                break
            for ii in range(indptr[x], indptr[x + 1]):
                w = indices[ii]
                if seen[w] != stamp:
                    seen[w] = stamp
                    dist[w] = dx + 1
                    parent[w] = x
                    queue[tail] = w
                    tail += 1
                elif w != parent[x]:
                    val = dx + dist[w] + 1
                    if best < 0 or val < best:
                        best = val
                        best_root = r
                        best_x = x
                        best_w = w
                        if cutoff > 0 and best <= cutoff:
                            return best, best_root, best_x, best_w
    return best, best_root, best_x, best_w


@njit(cache=True, nogil=True)
def tanner_bfs_tree(indptr, indices, root, cap):
    """Re-run one root's BFS and return (x, w, dist, parent) for the first
    non-tree edge closing a walk shorter than cap; x = -1 when none."""
    V = indptr.shape[0] - 1
    dist = np.full(V, -1, np.int64)
    parent = np.full(V, -1, np.int64)
    queue = np.empty(V, np.int64)
    head = 0
    tail = 0
    queue[tail] = root
    tail += 1
    dist[root] = 0
    while head < tail:
        x = queue[head]
        head += 1
        dx = dist[x]
        if 2 * dx >= cap:
            break
        for ii in range(indptr[x], indptr[x + 1]):
            w = indices[ii]
            if dist[w] < 0:
                dist[w] = dx + 1
                parent[w] = x
                queue[tail] = w
                tail += 1
            elif w != parent[x]:
                if dx + dist[w] + 1 < cap:
                    return x, w, dist, parent
    return np.int64(-1), np.int64(-1), dist, parent


@njit(cache=True, nogil=True)
def bsg_walk_scan(out_indptr, out_list, de_head, de_col, de_slope, active, m, cutoff, max_len):
    """Shortest accepted closed walk over all starts (vertex, first directed edge).

    States are (directed edge, accumulated slope); successors must use a
    different column than the current edge; a transition arriving at the
    start vertex with slope 0 through a column different from the first one
    is accepted.  ``active`` masks columns (for subgraph checks).  With
    cutoff > 0 the scan returns once a walk of length <= cutoff is found;
    with max_len > 0 no walk longer than max_len is considered.

    Returns (best, start_vertex, start_edge); best = -1 means none exists.
    """
    nde = de_head.shape[0]
    n_states = nde * m
    dist = np.empty(n_states, np.int64)
    seen = np.zeros(n_states, np.int64)
    queue = np.empty(n_states, np.int64)
    V = out_indptr.shape[0] - 1
    best = np.int64(-1)
    best_v0 = np.int64(-1)
    best_e0 = np.int64(-1)
    stamp = 0
    for v0 in range(V):
        for jj in range(out_indptr[v0], out_indptr[v0 + 1]):
            e0 = out_list[jj]
            if active[de_col[e0]] == 0:
                continue
            stamp += 1
            col0 = de_col[e0]
            st0 = e0 * m + de_slope[e0]
            seen[st0] = stamp
            dist[st0] = 1
            head = 0
            tail = 0
            queue[tail] = st0
            tail += 1
            done = False
            while head < tail and not done:
                st = queue[head]
                head += 1
                de = st // m
                sig = st % m
                d = dist[st]
                if best >= 0 and d + 1 >= best:
                    break
                if max_len > 0 and d + 1 > max_len:
                    break
                v = de_head[de]
                col_here = de_col[de]
                for kk in range(out_indptr[v], out_indptr[v + 1]):
                    f = out_list[kk]
                    fcol = de_col[f]
                    if fcol == col_here or active[fcol] == 0:
                        continue
                    nsig = sig + de_slope[f]
                    if nsig >= m:
                        nsig -= m
                    if de_head[f] == v0 and nsig == 0 and fcol != col0:
                        val = d + 1
                        if best < 0 or val < best:
                            best = val
                            best_v0 = v0
                            best_e0 = e0
                        done = True
                        break
                    nst = f * m + nsig
                    if seen[nst] != stamp:
                        seen[nst] = stamp
                        dist[nst] = d + 1
                        queue[tail] = nst
                        tail += 1
            if cutoff > 0 and best > 0 and best <= cutoff:
                return best, best_v0, best_e0
    return best, best_v0, best_e0


@njit(cache=True, nogil=True)
def bsg_walk_witness(out_indptr, out_list, de_head, de_col, de_slope, active, m, v0, e0, best):
    """Reconstruct the directed-edge sequence of the winning walk from
    (v0, e0) found by bsg_walk_scan; returns an empty array on failure."""
    nde = de_head.shape[0]
    n_states = nde * m
    dist = np.full(n_states, -1, np.int64)
    pred = np.full(n_states, -1, np.int64)
    queue = np.empty(n_states, np.int64)
    col0 = de_col[e0]
    st0 = e0 * m + de_slope[e0]
    dist[st0] = 1
    head = 0
    tail = 0
    queue[tail] = st0
    tail += 1
    while head < tail:
        st = queue[head]
        head += 1
        de = st // m
        sig = st % m
        d = dist[st]
        if d + 1 > best:
            break
        v = de_head[de]
        col_here = de_col[de]
        for kk in range(out_indptr[v], out_indptr[v + 1]):
            f = out_list[kk]
            fcol = de_col[f]
            if fcol == col_here or active[fcol] == 0:
                continue
            nsig = sig + de_slope[f]
            if nsig >= m:
                nsig -= m
            if de_head[f] == v0 and nsig == 0 and fcol != col0:
                out = np.empty(d + 1, np.int64)
                out[d] = f
                back = st
                for pos in range(d - 1, -1, -1):
                    out[pos] = back // m
                    back = pred[back]
                return out
            nst = f * m + nsig
            if dist[nst] < 0:
                dist[nst] = d + 1
                pred[nst] = st
                queue[tail] = nst
                tail += 1
    return np.empty(0, np.int64)


@njit(cache=True, nogil=True)
def bsg_walk_through_edge(
    out_indptr, out_list, de_head, de_col, de_slope, active, m, e0, max_len, seen, dist, queue, stamp
):
    """Length of the shortest accepted walk whose first step is directed edge
    e0, restricted to active columns and length <= max_len; -1 when none.

    Scratch arrays (seen, dist, queue of size num_directed_edges * m) are
    caller-provided so hot loops avoid reallocation; ``stamp`` must strictly
    increase between calls sharing the scratch.
    """
    v0 = de_head[e0 ^ 1]
    col0 = de_col[e0]
    st0 = e0 * m + de_slope[e0]
    seen[st0] = stamp
    dist[st0] = 1
    head = 0
    tail = 0
    queue[tail] = st0
    tail += 1
    while head < tail:
        st = queue[head]
        head += 1
        de = st // m
        sig = st % m
        d = dist[st]
        if d + 1 > max_len:
            break
        v = de_head[de]
        col_here = de_col[de]
        for kk in range(out_indptr[v], out_indptr[v + 1]):
            f = out_list[kk]
            fcol = de_col[f]
            if fcol == col_here or active[fcol] == 0:
                continue
            nsig = sig + de_slope[f]
            if nsig >= m:
                nsig -= m
            if de_head[f] == v0 and nsig == 0 and fcol != col0:
                return d + 1
            nst = f * m + nsig
            if seen[nst] != stamp:
                seen[nst] = stamp
                dist[nst] = d + 1
                queue[tail] = nst
                tail += 1
    return np.int64(-1)
