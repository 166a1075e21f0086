"""Shapes, adjacency and sequence checks for supergrid graphs.

Vertices are integer points (x, y), 1-based, with (1, 1) the upper-left
corner and y growing downward. Two distinct vertices are adjacent iff
their Chebyshev distance is 1 (the 8-neighbour / king-move rule).

Two shapes exist:

* ``Rect(m, n)``: all points with 1 <= x <= m, 1 <= y <= n.
* ``LShape(m, n, k, l)``: ``Rect(m, n)`` minus the k x l block at the
  upper-right corner (points with x > m - k and y <= l).
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from . import instrument
from .errors import InvalidInstance

Point = tuple[int, int]
Edge = tuple[Point, Point]

SIDES = ("top", "bottom", "left", "right")

# 8-connectivity structure for component labelling
_STRUCT8 = np.ones((3, 3), dtype=bool)


@dataclass(frozen=True)
class Rect:
    m: int
    n: int


@dataclass(frozen=True)
class LShape:
    m: int
    n: int
    k: int
    l: int


Shape = Rect | LShape


def validate_shape(shape: Shape) -> None:
    """Raise InvalidInstance unless the shape parameters are in domain."""
    if isinstance(shape, Rect):
        if shape.m < 1 or shape.n < 1:
            raise InvalidInstance(f"rectangle sides must be >= 1, got {shape}")
        return
    if isinstance(shape, LShape):
        m, n, k, l = shape.m, shape.n, shape.k, shape.l
        if m < 2 or n < 2:
            raise InvalidInstance(f"L-shape needs m, n >= 2, got {shape}")
        if not (1 <= k <= m - 1):
            raise InvalidInstance(f"L-shape needs 1 <= k <= m-1, got {shape}")
        if not (1 <= l <= n - 1):
            raise InvalidInstance(f"L-shape needs 1 <= l <= n-1, got {shape}")
        return
    raise InvalidInstance(f"unknown shape {shape!r}")


def vertex_count(shape: Shape) -> int:
    if isinstance(shape, Rect):
        return shape.m * shape.n
    return shape.m * shape.n - shape.k * shape.l


def contains(shape: Shape, p: Point) -> bool:
    x, y = p
    if not (1 <= x <= shape.m and 1 <= y <= shape.n):
        return False
    if isinstance(shape, LShape) and x > shape.m - shape.k and y <= shape.l:
        return False
    return True


def vertices(shape: Shape) -> list[Point]:
    """All vertices in row-major order (by y, then x)."""
    out = []
    for y in range(1, shape.n + 1):
        row_m = shape.m
        if isinstance(shape, LShape) and y <= shape.l:
            row_m = shape.m - shape.k
        out.extend((x, y) for x in range(1, row_m + 1))
    return out


def is_adjacent(u: Point, v: Point) -> bool:
    return u != v and abs(u[0] - v[0]) <= 1 and abs(u[1] - v[1]) <= 1


def neighbors(shape: Shape, p: Point) -> list[Point]:
    x, y = p
    out = []
    for dy in (-1, 0, 1):
        for dx in (-1, 0, 1):
            if dx == 0 and dy == 0:
                continue
            q = (x + dx, y + dy)
            if contains(shape, q):
                out.append(q)
    instrument.add(1)
    return out


def degree(shape: Shape, p: Point) -> int:
    return len(neighbors(shape, p))


def occupancy(shape: Shape) -> np.ndarray:
    """Boolean mask of the shape, indexed [y-1, x-1]."""
    grid = np.ones((shape.n, shape.m), dtype=bool)
    if isinstance(shape, LShape):
        grid[: shape.l, shape.m - shape.k :] = False
    return grid


def _component_count(grid: np.ndarray) -> int:
    instrument.add(grid.size)
    _, count = ndimage.label(grid, structure=_STRUCT8)
    return count


def is_connected(shape: Shape) -> bool:
    return _component_count(occupancy(shape)) <= 1


def is_cut_vertex(shape: Shape, v: Point) -> bool:
    """True iff removing v disconnects the remaining vertices."""
    grid = occupancy(shape)
    grid[v[1] - 1, v[0] - 1] = False
    return _component_count(grid) > 1


def is_cut_pair(shape: Shape, u: Point, v: Point) -> bool:
    """True iff removing both u and v disconnects the remaining vertices."""
    grid = occupancy(shape)
    grid[u[1] - 1, u[0] - 1] = False
    grid[v[1] - 1, v[0] - 1] = False
    return _component_count(grid) > 1


def boundary_vertices(shape: Shape) -> list[Point]:
    """Vertices with fewer than 8 neighbours, in row-major order."""
    return [p for p in vertices(shape) if len(neighbors(shape, p)) < 8]


def side_vertices(rect: Rect, side: str) -> list[Point]:
    """Vertices of one rectangle side, ordered along the side."""
    m, n = rect.m, rect.n
    if side == "top":
        return [(x, 1) for x in range(1, m + 1)]
    if side == "bottom":
        return [(x, n) for x in range(1, m + 1)]
    if side == "left":
        return [(1, y) for y in range(1, n + 1)]
    if side == "right":
        return [(m, y) for y in range(1, n + 1)]
    raise ValueError(f"unknown side {side!r}")


# ---------------------------------------------------------------------------
# sequences

def translate(seq: list[Point], dx: int, dy: int) -> list[Point]:
    """Shift every vertex of a sequence by (dx, dy)."""
    return [(x + dx, y + dy) for x, y in seq]


def seq_edges(seq: list[Point], cyclic: bool = False) -> list[Edge]:
    edges = [(seq[i], seq[i + 1]) for i in range(len(seq) - 1)]
    if cyclic and len(seq) >= 2:
        edges.append((seq[-1], seq[0]))
    return edges


def edge_set(seq: list[Point], cyclic: bool = False) -> set[frozenset]:
    return {frozenset(e) for e in seq_edges(seq, cyclic)}


def has_edge(seq: list[Point], u: Point, v: Point, cyclic: bool = False) -> bool:
    return frozenset((u, v)) in edge_set(seq, cyclic)


def check_path(
    shape: Shape,
    seq: list[Point],
    s: Point | None = None,
    t: Point | None = None,
    hamiltonian: bool = False,
) -> str | None:
    """Explain why seq is not a valid simple path of the shape, or None."""
    if not seq:
        return "empty vertex sequence"
    if len(set(seq)) != len(seq):
        return "repeated vertex"
    for p in seq:
        if not contains(shape, p):
            return f"vertex {p} outside shape"
    for u, v in seq_edges(seq):
        if not is_adjacent(u, v):
            return f"consecutive vertices {u}, {v} not adjacent"
    if s is not None and seq[0] != s:
        return f"path starts at {seq[0]}, expected {s}"
    if t is not None and seq[-1] != t:
        return f"path ends at {seq[-1]}, expected {t}"
    if hamiltonian and len(seq) != vertex_count(shape):
        return f"path covers {len(seq)} of {vertex_count(shape)} vertices"
    return None


def check_cycle(shape: Shape, seq: list[Point], hamiltonian: bool = False) -> str | None:
    """Explain why seq is not a valid simple cycle of the shape, or None.

    The sequence stores each cycle vertex exactly once; the closing edge
    seq[-1] -> seq[0] is implied. Three distinct vertices is the smallest
    cycle (the king-move triangle).
    """
    if len(seq) < 3:
        return "cycle needs at least 3 vertices"
    problem = check_path(shape, seq)
    if problem is not None:
        return problem
    if not is_adjacent(seq[-1], seq[0]):
        return f"closing vertices {seq[-1]}, {seq[0]} not adjacent"
    if hamiltonian and len(seq) != vertex_count(shape):
        return f"cycle covers {len(seq)} of {vertex_count(shape)} vertices"
    return None


def validate_path(shape, seq, s=None, t=None, hamiltonian=False) -> None:
    problem = check_path(shape, seq, s, t, hamiltonian)
    if problem is not None:
        raise ValueError(problem)


def validate_cycle(shape, seq, hamiltonian=False) -> None:
    problem = check_cycle(shape, seq, hamiltonian)
    if problem is not None:
        raise ValueError(problem)


# ---------------------------------------------------------------------------
# parallel edges and face structure

def parallel_pairing(e1: Edge, e2: Edge) -> tuple[Point, Point] | None:
    """Match e2's endpoints to e1's by adjacency.

    Returns (a, b) with e1[0] ~ a and e1[1] ~ b where {a, b} = set(e2),
    or None when the edges share a vertex or admit no such matching.
    Straight matchings are preferred over crossed ones.
    """
    u1, v1 = e1
    u2, v2 = e2
    if len({u1, v1, u2, v2}) != 4:
        return None
    if is_adjacent(u1, u2) and is_adjacent(v1, v2):
        return (u2, v2)
    if is_adjacent(u1, v2) and is_adjacent(v1, u2):
        return (v2, u2)
    return None


def side_pieces(rect: Rect, cycle: list[Point], side: str) -> list[list[Point]]:
    """Split one side into runs joined by cycle edges.

    The cycle's restriction to a side keeps only cycle edges with both
    endpoints on that side; the side then falls apart into maximal runs
    (isolated vertices count as runs of length 1).
    """
    line = side_vertices(rect, side)
    edges = edge_set(cycle, cyclic=True)
    pieces = [[line[0]]]
    for prev, cur in zip(line, line[1:]):
        if frozenset((prev, cur)) in edges:
            pieces[-1].append(cur)
        else:
            pieces.append([cur])
    return pieces


def is_flat_side(rect: Rect, cycle: list[Point], side: str) -> bool:
    """The cycle restricted to the side is the whole side in one run."""
    pieces = side_pieces(rect, cycle, side)
    return len(pieces) == 1 and len(pieces[0]) == len(side_vertices(rect, side))


def is_concave_side(rect: Rect, cycle: list[Point], side: str) -> bool:
    """More than one run, at least one of them carrying a side edge."""
    pieces = side_pieces(rect, cycle, side)
    return len(pieces) > 1 and any(len(p) >= 2 for p in pieces)


# ---------------------------------------------------------------------------
# JSON round-trips (shared by CLI, service and renderer)

def shape_to_json(shape: Shape) -> dict:
    if isinstance(shape, Rect):
        return {"type": "rect", "m": shape.m, "n": shape.n}
    return {"type": "lshape", "m": shape.m, "n": shape.n, "k": shape.k, "l": shape.l}


def shape_from_json(data: dict) -> Shape:
    if not isinstance(data, dict):
        raise InvalidInstance("shape must be a JSON object")
    kind = data.get("type")
    try:
        if kind == "rect":
            shape: Shape = Rect(int(data["m"]), int(data["n"]))
        elif kind == "lshape":
            shape = LShape(int(data["m"]), int(data["n"]), int(data["k"]), int(data["l"]))
        else:
            raise InvalidInstance(f"unknown shape type {kind!r}")
    except (KeyError, TypeError, ValueError) as exc:
        raise InvalidInstance(f"malformed shape object: {exc}") from exc
    validate_shape(shape)
    return shape


def point_from_json(data) -> Point:
    if (
        not isinstance(data, (list, tuple))
        or len(data) != 2
        or not all(isinstance(c, int) for c in data)
    ):
        raise InvalidInstance(f"point must be a pair of integers, got {data!r}")
    return (data[0], data[1])
