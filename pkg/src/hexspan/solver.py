"""Exact bounded-palette graph coloring by DSATUR branch and bound.

The solver answers "is this graph colorable with at most B colors" and,
when feasible, returns one assignment.  Vertex selection is greatest
saturation first (ties: higher uncolored degree, then lower index) and
color symmetry is broken by first-use indexing: a vertex may only open
color c+1 when colors 0..c are already in use.  The search is fully
deterministic.

Resource limits raise ``ResourceGuard``.  A guarded run never returns a
wrong verdict; it refuses.
"""

from __future__ import annotations

import sys


class ResourceGuard(Exception):
    """Raised when a search would exceed its configured resource limit."""


def greedy_clique(adj: list[int]) -> list[int]:
    """A maximal clique found greedily (largest degree first).  Its size
    is a valid lower bound on the chromatic number."""
    n = len(adj)
    order = sorted(range(n), key=lambda v: (-bin(adj[v]).count("1"), v))
    best: list[int] = []
    for start in order[: min(n, 24)]:
        clique = [start]
        cand = adj[start]
        while cand:
            # highest-degree candidate inside the running intersection
            pick = -1
            pick_deg = -1
            c = cand
            while c:
                v = (c & -c).bit_length() - 1
                c &= c - 1
                deg = bin(adj[v] & cand).count("1")
                if deg > pick_deg:
                    pick, pick_deg = v, deg
            clique.append(pick)
            cand &= adj[pick]
        if len(clique) > len(best):
            best = clique
    return sorted(best)


def solve_coloring(adj: list[int], budget: int,
                   max_nodes: int | None = None) -> list[int] | None:
    """Color the graph with at most ``budget`` colors.

    ``adj`` is a bitmask adjacency list (bit u of adj[v] set iff u~v).
    Returns a color list (values 0..budget-1) or None when impossible.
    """
    n = len(adj)
    if budget < 0:
        raise ValueError("budget must be >= 0")
    if n == 0:
        return []
    if budget == 0:
        return None
    colors = [-1] * n
    neighbor_colors = [0] * n   # bitmask of colors adjacent to v
    uncolored_deg = [bin(m).count("1") for m in adj]
    nodes = 0
    sys.setrecursionlimit(max(sys.getrecursionlimit(), 4 * n + 200))

    def pick() -> int:
        best_v = -1
        best_key = (-1, -1, 0)
        for v in range(n):
            if colors[v] < 0:
                key = (bin(neighbor_colors[v]).count("1"), uncolored_deg[v], -v)
                if key > best_key:
                    best_key = key
                    best_v = v
        return best_v

    def assign(v: int, c: int) -> list[int]:
        colors[v] = c
        touched = []
        bit = 1 << c
        m = adj[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            uncolored_deg[u] -= 1
            if colors[u] < 0 and not neighbor_colors[u] & bit:
                neighbor_colors[u] |= bit
                touched.append(u)
        return touched

    def undo(v: int, c: int, touched: list[int]) -> None:
        bit = 1 << c
        m = adj[v]
        while m:
            u = (m & -m).bit_length() - 1
            m &= m - 1
            uncolored_deg[u] += 1
        for u in touched:
            neighbor_colors[u] &= ~bit
        colors[v] = -1

    def search(used: int, remaining: int) -> bool:
        nonlocal nodes
        nodes += 1
        if max_nodes is not None and nodes > max_nodes:
            raise ResourceGuard(f"coloring search exceeded {max_nodes} nodes")
        if remaining == 0:
            return True
        v = pick()
        limit = min(used + 1, budget)
        avail = ~neighbor_colors[v] & ((1 << limit) - 1)
        while avail:
            c = (avail & -avail).bit_length() - 1
            avail &= avail - 1
            touched = assign(v, c)
            if search(max(used, c + 1), remaining - 1):
                return True
            undo(v, c, touched)
        return False

    return list(colors) if search(0, n) else None


def brute_force_chromatic(adj: list[int]) -> int:
    """Reference chromatic number by plain lexicographic backtracking.

    Independent of the DSATUR path on purpose; only suitable for tiny
    graphs (tests use it as the second route).
    """
    n = len(adj)
    if n == 0:
        return 0

    def feasible(budget: int) -> bool:
        colors = [-1] * n

        def rec(v: int) -> bool:
            if v == n:
                return True
            used = max(colors[:v], default=-1) + 1
            for c in range(min(used + 1, budget)):
                ok = True
                m = adj[v]
                while m:
                    u = (m & -m).bit_length() - 1
                    m &= m - 1
                    if u < v and colors[u] == c:
                        ok = False
                        break
                if ok:
                    colors[v] = c
                    if rec(v + 1):
                        return True
                    colors[v] = -1
            return False

        return rec(0)

    b = 1
    while not feasible(b):
        b += 1
    return b
