"""Exhaustive reference search for small instances.

This module is the ground truth the constructive algorithms are tested
against. It shares only the adjacency definition with the rest of the
package and does no clever casework: plain depth-first search over
simple paths with two safe prunes (the target must stay reachable, and
a branch that cannot beat the best known length is cut).

Vertices are explored in row-major index order, and a found path is
replaced only by a strictly longer one, so witnesses are the
lexicographically first maximum paths in row-major order and results
are reproducible.

Instances larger than the budget (default 16 vertices, overridable via
the LPATH_ORACLE_BUDGET environment variable or the budget argument)
are refused rather than searched.
"""

from __future__ import annotations

import os
from functools import lru_cache

from . import grid
from .errors import InvalidInstance, OracleBudgetExceeded
from .grid import Point, Shape

DEFAULT_BUDGET = 16


def budget_limit(budget: int | None = None) -> int:
    if budget is not None:
        return budget
    env = os.environ.get("LPATH_ORACLE_BUDGET")
    return int(env) if env else DEFAULT_BUDGET


def _check_budget(shape: Shape, budget: int | None) -> None:
    limit = budget_limit(budget)
    count = grid.vertex_count(shape)
    if count > limit:
        raise OracleBudgetExceeded(
            f"instance has {count} vertices, exhaustive budget is {limit}"
        )


@lru_cache(maxsize=4096)
def _prepare(shape: Shape) -> tuple[tuple[Point, ...], dict[Point, int], tuple[int, ...]]:
    verts = tuple(grid.vertices(shape))
    index = {p: i for i, p in enumerate(verts)}
    adj = []
    for p in verts:
        mask = 0
        for q in grid.neighbors(shape, p):
            mask |= 1 << index[q]
        adj.append(mask)
    return verts, index, tuple(adj)


def _reachable(adj: tuple[int, ...], start: int, free: int) -> int:
    """Bitmask of free vertices reachable from start through free vertices."""
    reach = 0
    frontier = adj[start] & free
    while frontier:
        reach |= frontier
        nxt = 0
        f = frontier
        while f:
            low = f & -f
            nxt |= adj[low.bit_length() - 1]
            f ^= low
        frontier = nxt & free & ~reach
    return reach


def longest_path(
    shape: Shape,
    s: Point,
    t: Point,
    require_edge: tuple[Point, Point] | None = None,
    budget: int | None = None,
) -> list[Point]:
    """Lexicographically first longest simple (s, t)-path.

    With require_edge=(u, v), only paths traversing that edge count; an
    empty list means no qualifying (s, t)-path exists at all.
    """
    grid.validate_shape(shape)
    _check_budget(shape, budget)
    for p in (s, t):
        if not grid.contains(shape, p):
            raise InvalidInstance(f"endpoint {p} outside shape")
    if s == t:
        raise InvalidInstance("endpoints must be distinct")

    verts, index, adj = _prepare(shape)
    total = len(verts)
    si, ti = index[s], index[t]

    req = None
    if require_edge is not None:
        u, v = require_edge
        if not grid.is_adjacent(u, v):
            raise InvalidInstance(f"required edge {u}-{v} not an adjacency")
        if not (grid.contains(shape, u) and grid.contains(shape, v)):
            raise InvalidInstance(f"required edge {u}-{v} outside shape")
        req = (index[u], index[v])

    best: list[int] = []
    path = [si]

    def edge_ok(seq: list[int]) -> bool:
        if req is None:
            return True
        for a, b in zip(seq, seq[1:]):
            if (a, b) == req or (b, a) == req:
                return True
        return False

    def extend(cur: int, visited: int) -> bool:
        nonlocal best
        if cur == ti:
            if len(path) > len(best) and edge_ok(path):
                best = path.copy()
                if len(best) == total:
                    return True
            return False
        free = ~visited & ((1 << total) - 1)
        reach = _reachable(adj, cur, free)
        if not (reach >> ti) & 1:
            return False
        if len(path) + reach.bit_count() <= len(best):
            return False
        moves = adj[cur] & free
        while moves:
            low = moves & -moves
            moves ^= low
            nxt = low.bit_length() - 1
            if req is not None and cur in req:
                other = req[0] if cur == req[1] else req[1]
                prev = path[-2] if len(path) >= 2 else -1
                if nxt != other and prev != other:
                    continue
            path.append(nxt)
            done = extend(nxt, visited | low)
            path.pop()
            if done:
                return True
        return False

    extend(si, 1 << si)
    return [verts[i] for i in best]


def longest_len(shape, s, t, budget: int | None = None) -> int:
    return len(longest_path(shape, s, t, budget=budget))


def hamiltonian_path(
    shape: Shape,
    s: Point,
    t: Point,
    require_edge: tuple[Point, Point] | None = None,
    budget: int | None = None,
) -> list[Point] | None:
    path = longest_path(shape, s, t, require_edge=require_edge, budget=budget)
    if len(path) == grid.vertex_count(shape):
        return path
    return None


def has_hamiltonian_path(shape, s, t, require_edge=None, budget=None) -> bool:
    return hamiltonian_path(shape, s, t, require_edge=require_edge, budget=budget) is not None


def hamiltonian_cycle(shape: Shape, budget: int | None = None) -> list[Point] | None:
    """Lexicographically first Hamiltonian cycle, or None.

    The cycle is anchored at the row-major first vertex and stores each
    vertex once; the closing edge back to the anchor is implied.
    """
    grid.validate_shape(shape)
    _check_budget(shape, budget)
    verts, _, adj = _prepare(shape)
    total = len(verts)
    if total < 3:
        return None

    path = [0]
    found: list[int] | None = None

    def extend(cur: int, visited: int) -> bool:
        nonlocal found
        if len(path) == total:
            if (adj[cur] >> 0) & 1:
                found = path.copy()
                return True
            return False
        free = ~visited & ((1 << total) - 1)
        reach = _reachable(adj, cur, free)
        if (reach | visited).bit_count() != total:
            return False
        moves = adj[cur] & free
        while moves:
            low = moves & -moves
            moves ^= low
            nxt = low.bit_length() - 1
            path.append(nxt)
            done = extend(nxt, visited | low)
            path.pop()
            if done:
                return True
        return False

    extend(0, 1)
    if found is None:
        return None
    return [verts[i] for i in found]


def has_hamiltonian_cycle(shape, budget=None) -> bool:
    return hamiltonian_cycle(shape, budget=budget) is not None


def enumerate_shapes(max_vertices: int):
    """Yield every rectangle and every valid L-shape with at most
    max_vertices vertices, each exactly once, in a fixed order.

    Rectangles come first, ordered by (m, n); L-shapes follow, ordered
    by (m, n, k, l). Degenerate notches (k = m or l = n, which would
    leave a rectangle or disconnect it) are excluded by construction.
    """
    if max_vertices < 2:
        raise InvalidInstance("max_vertices must be at least 2")
    for m in range(1, max_vertices + 1):
        for n in range(1, max_vertices // m + 1):
            if m * n >= 2:
                yield grid.Rect(m, n)
    for m in range(2, max_vertices + 2):
        for n in range(2, max_vertices + 2):
            for k in range(1, m):
                for l in range(1, n):
                    if m * n - k * l <= max_vertices:
                        yield grid.LShape(m, n, k, l)
