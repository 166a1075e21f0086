"""Endpoint planning across a sequence of placed shapes.

A stitching or printing job runs one continuous trace per shape and
jumps between shapes. Each shape needs a Hamiltonian path, so the only
freedom is which endpoint pair (s, t) each shape uses; the jump cost
between consecutive shapes is the Euclidean distance from one exit to
the next entry in the global plane.

Candidate endpoints are restricted to boundary vertices (an interior
endpoint can only lengthen the jump it feeds), and the pair must admit
a Hamiltonian path. Over that candidate set the chain is optimized
exactly by dynamic programming on the exit vertex of each shape.
"""

from __future__ import annotations

import math

from . import grid, lshape, rect
from .errors import InvalidInstance, NoPathExists
from .grid import LShape, Point, Rect, Shape

Offset = tuple[int, int]


def _feasible_boundary_pairs(shape: Shape) -> list[tuple[Point, Point]]:
    """Ordered boundary-vertex pairs that admit a Hamiltonian path."""
    border = sorted(grid.boundary_vertices(shape))
    if isinstance(shape, Rect):
        return [(s, t) for s in border for t in border if s != t
                and not rect.satisfies_f1_rect(shape, s, t)]
    cut = {v: grid.is_cut_vertex(shape, v) for v in border}
    deg_one = set(lshape.degree_one_vertices(shape))
    out = []
    for s in border:
        for t in border:
            if s == t or cut[s] or cut[t]:
                continue
            if deg_one - {s, t}:
                continue
            if lshape.satisfies_f5(shape, s, t):
                continue
            if grid.is_cut_pair(shape, s, t):
                continue
            out.append((s, t))
    return out


def _check_placement(items: list[tuple[Shape, Offset]]) -> None:
    if not items:
        raise InvalidInstance("trace plan needs at least one shape")
    seen: set[Point] = set()
    for i, (shape, (dx, dy)) in enumerate(items):
        grid.validate_shape(shape)
        cells = {(x + dx, y + dy) for x, y in grid.vertices(shape)}
        if seen & cells:
            raise InvalidInstance(f"shape {i} overlaps an earlier shape")
        seen |= cells


def _dist(a: Point, b: Point) -> float:
    return math.hypot(a[0] - b[0], a[1] - b[1])


def plan_trace(items: list[tuple[Shape, Offset]]) -> dict:
    """Choose (s_i, t_i) for every placed shape, minimizing the total
    jump length between consecutive traces, and build the paths."""
    _check_placement(items)
    candidates = []
    for i, (shape, _) in enumerate(items):
        pairs = _feasible_boundary_pairs(shape)
        if not pairs:
            raise NoPathExists(
                f"shape {i} ({shape}) admits no Hamiltonian path between "
                f"any boundary pair", condition="F4")
        candidates.append(pairs)

    # cost[(s, t)] = best total jump for the prefix ending in this pair;
    # the transition only needs the best cost per exit vertex
    offsets = [off for _, off in items]
    cost = {pair: 0.0 for pair in candidates[0]}
    back: list[dict[tuple[Point, Point], tuple[Point, Point]]] = [{}]
    for i in range(1, len(items)):
        best_exit: dict[Point, tuple[float, tuple[Point, Point]]] = {}
        for pair, c in cost.items():
            t = pair[1]
            if t not in best_exit or c < best_exit[t][0]:
                best_exit[t] = (c, pair)
        odx, ody = offsets[i - 1]
        dx, dy = offsets[i]
        entry: dict[Point, tuple[float, tuple[Point, Point]]] = {}
        for s in sorted({pair[0] for pair in candidates[i]}):
            sg = (s[0] + dx, s[1] + dy)
            best = None
            for t, (c, pair) in sorted(best_exit.items()):
                d = c + _dist((t[0] + odx, t[1] + ody), sg)
                if best is None or d < best[0]:
                    best = (d, pair)
            entry[s] = best
        cost = {pair: entry[pair[0]][0] for pair in candidates[i]}
        back.append({pair: entry[pair[0]][1] for pair in candidates[i]})

    tail = min(sorted(cost), key=cost.get)
    chosen = [tail]
    for i in range(len(items) - 1, 0, -1):
        chosen.append(back[i][chosen[-1]])
    chosen.reverse()

    plan_items = []
    jumps = []
    for i, ((shape, off), (s, t)) in enumerate(zip(items, chosen)):
        path = (rect.hp_rect(shape, s, t) if isinstance(shape, Rect)
                else lshape.hp_lshape(shape, s, t))
        plan_items.append({
            "shape": grid.shape_to_json(shape),
            "offset": list(off),
            "s": list(s),
            "t": list(t),
            "path": [list(p) for p in path],
        })
        if i:
            ps, poff = chosen[i - 1][1], items[i - 1][1]
            jumps.append(_dist((ps[0] + poff[0], ps[1] + poff[1]),
                               (s[0] + off[0], s[1] + off[1])))
    return {
        "items": plan_items,
        "jumps": jumps,
        "total_jump": sum(jumps),
    }
