"""Compiled inner loops for connectivity.

Plain array code throughout, so everything still runs (slower) if numba is
missing; with numba present the kernels JIT-compile on first use and are cached
on disk.
"""

from __future__ import annotations

import numpy as np

try:
    from numba import njit
except ImportError:  # pragma: no cover - numba is a declared dependency
    def njit(*args, **kwargs):
        if args and callable(args[0]):
            return args[0]

        def wrap(func):
            return func

        return wrap


@njit(cache=True)
def _augment_bfs(head, nxt, to, cap, src, snk, parent_arc, queue):
    for i in range(parent_arc.shape[0]):
        parent_arc[i] = -1
    parent_arc[src] = -2
    queue[0] = src
    qhead = 0
    qtail = 1
    while qhead < qtail:
        u = queue[qhead]
        qhead += 1
        a = head[u]
        while a != -1:
            if cap[a] > 0:
                v = to[a]
                if parent_arc[v] == -1:
                    parent_arc[v] = a
                    if v == snk:
                        return True
                    queue[qtail] = v
                    qtail += 1
            a = nxt[a]
    return False


@njit(cache=True)
def _disjoint_paths(head, nxt, to, cap, cap0, src, snk, cutoff, parent_arc, queue):
    # max number of internally vertex-disjoint src->snk paths, but give up at
    # cutoff: callers only care whether the count drops below the running best
    for a in range(cap.shape[0]):
        cap[a] = cap0[a]
    flow = 0
    while flow < cutoff:
        if not _augment_bfs(head, nxt, to, cap, src, snk, parent_arc, queue):
            break
        v = snk
        while v != src:
            a = parent_arc[v]
            cap[a] -= 1
            cap[a ^ 1] += 1
            v = to[a ^ 1]
        flow += 1
    return flow


@njit(cache=True)
def kappa_from_matrix(adj):
    """Exact vertex connectivity from a boolean adjacency matrix.

    Splits each vertex into in/out flow nodes with a unit arc between them, so
    max-flow counts vertex-disjoint paths. Flows are only run from one fixed
    minimum-degree vertex to its non-neighbours and between non-adjacent pairs
    of its neighbourhood; any minimum cut is seen by one of those pairs.
    """
    n = adj.shape[0]
    if n <= 1:
        return 0
    deg = np.zeros(n, np.int64)
    for i in range(n):
        d = 0
        for j in range(n):
            if adj[i, j]:
                d += 1
        deg[i] = d
    complete = True
    for i in range(n):
        if deg[i] != n - 1:
            complete = False
            break
    if complete:
        return n - 1

    seen = np.zeros(n, np.uint8)
    order = np.empty(n, np.int64)
    seen[0] = 1
    order[0] = 0
    qh = 0
    qt = 1
    while qh < qt:
        u = order[qh]
        qh += 1
        for w in range(n):
            if adj[u, w] and seen[w] == 0:
                seen[w] = 1
                order[qt] = w
                qt += 1
    if qt < n:
        return 0

    edge_cnt = 0
    for i in range(n):
        for j in range(i + 1, n):
            if adj[i, j]:
                edge_cnt += 1
    num_arcs = 2 * n + 4 * edge_cnt
    head = np.full(2 * n, -1, np.int64)
    nxt = np.empty(num_arcs, np.int64)
    to = np.empty(num_arcs, np.int64)
    cap0 = np.empty(num_arcs, np.int64)
    cnt = 0
    # arc pairs sit at (2k, 2k+1) so the reverse of arc a is a^1;
    # node v is "in", node v+n is "out"
    for v in range(n):
        to[cnt] = v + n
        cap0[cnt] = 1
        nxt[cnt] = head[v]
        head[v] = cnt
        cnt += 1
        to[cnt] = v
        cap0[cnt] = 0
        nxt[cnt] = head[v + n]
        head[v + n] = cnt
        cnt += 1
    for i in range(n):
        for j in range(i + 1, n):
            if adj[i, j]:
                to[cnt] = j
                cap0[cnt] = 1
                nxt[cnt] = head[i + n]
                head[i + n] = cnt
                cnt += 1
                to[cnt] = i + n
                cap0[cnt] = 0
                nxt[cnt] = head[j]
                head[j] = cnt
                cnt += 1
                to[cnt] = i
                cap0[cnt] = 1
                nxt[cnt] = head[j + n]
                head[j + n] = cnt
                cnt += 1
                to[cnt] = j + n
                cap0[cnt] = 0
                nxt[cnt] = head[i]
                head[i] = cnt
                cnt += 1

    cap = np.empty(num_arcs, np.int64)
    parent_arc = np.empty(2 * n, np.int64)
    queue = np.empty(2 * n, np.int64)

    v_min = 0
    for i in range(1, n):
        if deg[i] < deg[v_min]:
            v_min = i
    best = deg[v_min]
    for u in range(n):
        if u != v_min and not adj[v_min, u]:
            got = _disjoint_paths(head, nxt, to, cap, cap0,
                                  v_min + n, u, best, parent_arc, queue)
            if got < best:
                best = got
    for x in range(n):
        if not adj[v_min, x]:
            continue
        for y in range(x + 1, n):
            if adj[v_min, y] and not adj[x, y]:
                got = _disjoint_paths(head, nxt, to, cap, cap0,
                                      x + n, y, best, parent_arc, queue)
                if got < best:
                    best = got
    return best


@njit(cache=True)
def _still_connected(adj_bits, n, full, removed):
    rest = full & ~removed
    if rest & (rest - 1) == 0:
        return False  # one vertex left, counts as trivialised, not connected
    reach = rest & -rest
    frontier = reach
    while frontier != 0:
        grown = 0
        for v in range(n):
            if (frontier >> v) & 1:
                grown |= adj_bits[v]
        frontier = grown & rest & ~reach
        reach |= frontier
    return reach == rest


@njit(cache=True)
def brute_force_kappa_bits(adj_bits, n):
    """Least k for which some k-subset removal disconnects or trivialises.

    k-subsets are walked in lexicographic order with Gosper's trick; adjacency
    bitmasks must fit in int64, so n <= 62.
    """
    full = (np.int64(1) << n) - 1
    if not _still_connected(adj_bits, n, full, np.int64(0)):
        return 0
    for k in range(1, n):
        subset = (np.int64(1) << k) - 1
        while subset <= full:
            if not _still_connected(adj_bits, n, full, subset):
                return k
            low = subset & -subset
            ripple = subset + low
            subset = (((ripple ^ subset) >> 2) // low) | ripple
    return n - 1
