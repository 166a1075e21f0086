"""Joining paths and cycles along adjacent edge pairs.

All sequences are vertex lists. Paths list their vertices in walk order;
cycles list each vertex once with the closing edge implied. Operations that
join two structures require them to be vertex disjoint; callers keep that
invariant and the test suite validates the results.
"""

from __future__ import annotations

from lpath import instrument
from lpath.grid import Point, is_adjacent


def concat(*pieces: list[Point]) -> list[Point]:
    """Chain paths whose consecutive ends are adjacent into one path."""
    out: list[Point] = []
    for piece in pieces:
        if not piece:
            continue
        if out and not is_adjacent(out[-1], piece[0]):
            raise ValueError(f"junction {out[-1]} -> {piece[0]} is not an edge")
        out.extend(piece)
    instrument.add(len(out))
    return out


def find_consecutive(seq: list[Point], pair, cyclic: bool = False) -> int:
    """Index i such that {seq[i], seq[i+1]} == set(pair), wrapping if cyclic."""
    a, b = pair
    last = len(seq) if cyclic else len(seq) - 1
    for i in range(last):
        u, v = seq[i], seq[(i + 1) % len(seq)]
        if (u == a and v == b) or (u == b and v == a):
            return i
    raise ValueError(f"pair {pair} is not consecutive in the sequence")


def open_cycle(cycle: list[Point], edge) -> list[Point]:
    """Delete one cycle edge, returning the path from edge[0] to edge[1]."""
    i = find_consecutive(cycle, edge, cyclic=True)
    j = (i + 1) % len(cycle)
    rot = cycle[j:] + cycle[:j]
    path = rot if rot[0] == edge[0] else rot[::-1]
    instrument.add(len(path))
    return path


def splice_path(path: list[Point], edge, sub: list[Point]) -> list[Point]:
    """Replace a path edge with a detour through sub, consuming all of sub."""
    i = find_consecutive(path, edge)
    u, v = path[i], path[i + 1]
    if not (is_adjacent(u, sub[0]) and is_adjacent(v, sub[-1])):
        sub = sub[::-1]
    if not (is_adjacent(u, sub[0]) and is_adjacent(v, sub[-1])):
        raise ValueError(f"detour ends do not attach across {(u, v)}")
    out = path[:i + 1] + sub + path[i + 1:]
    instrument.add(len(out))
    return out


def absorb_vertex(seq: list[Point], vertex: Point, at=None,
                  cyclic: bool = False) -> list[Point]:
    """Insert one vertex between a consecutive pair adjacent to it."""
    if at is not None:
        candidates = [find_consecutive(seq, at, cyclic=cyclic)]
    else:
        last = len(seq) if cyclic else len(seq) - 1
        candidates = range(last)
    for i in candidates:
        u, v = seq[i], seq[(i + 1) % len(seq)]
        if is_adjacent(vertex, u) and is_adjacent(vertex, v):
            out = seq[:i + 1] + [vertex] + seq[i + 1:]
            instrument.add(len(out))
            return out
    raise ValueError(f"no consecutive pair absorbs {vertex}")


def excise_vertex(path: list[Point], vertex: Point) -> list[Point]:
    """Remove an interior vertex whose two path neighbours are adjacent."""
    i = path.index(vertex)
    if i == 0 or i == len(path) - 1:
        raise ValueError("cannot excise a path endpoint")
    if not is_adjacent(path[i - 1], path[i + 1]):
        raise ValueError(f"removing {vertex} would break the walk")
    out = path[:i] + path[i + 1:]
    instrument.add(len(out))
    return out


def _band(seq: list[Point], other: list[Point], cyclic: bool):
    """Edges of seq whose endpoints sit within one step of other's box.

    Joins always happen along a straight separation line, so this keeps
    the pair search on the frontier instead of all of both sequences.
    """
    xs = [p[0] for p in other]
    ys = [p[1] for p in other]
    x0, x1, y0, y1 = min(xs) - 1, max(xs) + 1, min(ys) - 1, max(ys) + 1
    instrument.add(len(seq) + len(other))
    edges = []
    last = len(seq) if cyclic else len(seq) - 1
    for i in range(last):
        u, v = seq[i], seq[(i + 1) % len(seq)]
        if x0 <= u[0] <= x1 and y0 <= u[1] <= y1 and \
                x0 <= v[0] <= x1 and y0 <= v[1] <= y1:
            edges.append((i, u, v))
    return edges


def _pick_pairing(edges_a, edges_b):
    """Least (u, v, f, g) with u-v from a, f-g from b, u~f and v~g."""
    instrument.add(len(edges_a) * max(1, len(edges_b)))
    best = None
    for i, u, v in edges_a:
        for _, f, g in edges_b:
            if is_adjacent(u, f) and is_adjacent(v, g):
                cand = (u, v, f, g, i)
            elif is_adjacent(u, g) and is_adjacent(v, f):
                cand = (u, v, g, f, i)
            else:
                continue
            if best is None or cand[:4] < best[:4]:
                best = cand
    if best is None:
        raise ValueError("no adjacent edge pair joins the two pieces")
    return best


def merge_path_cycle(path: list[Point], cycle: list[Point], at=None) -> list[Point]:
    """Splice a vertex-disjoint cycle into a path across parallel edges.

    One path edge (u, v) opens: the walk leaves u into the cycle, goes once
    around it, and re-enters at v, so the path endpoints are preserved.
    With at=(u, v) the opened path edge is forced; otherwise the
    lexicographically least attachment is used.
    """
    if at is not None:
        i = find_consecutive(path, at)
        edges_a = [(i, path[i], path[i + 1])]
        edges_b = _band(cycle, [path[i], path[i + 1]], cyclic=True)
    else:
        edges_a = _band(path, cycle, cyclic=False)
        edges_b = _band(cycle, path, cyclic=True)
    u, v, f, g, _ = _pick_pairing(edges_a, edges_b)
    return splice_path(path, (u, v), open_cycle(cycle, (f, g)))


def merge_cycles(cycle_a: list[Point], cycle_b: list[Point], at=None) -> list[Point]:
    """Join two vertex-disjoint cycles into one across parallel edges."""
    if at is not None:
        i = find_consecutive(cycle_a, at, cyclic=True)
        pts = [cycle_a[i], cycle_a[(i + 1) % len(cycle_a)]]
        edges_a = [(i, pts[0], pts[1])]
        edges_b = _band(cycle_b, pts, cyclic=True)
    else:
        edges_a = _band(cycle_a, cycle_b, cyclic=True)
        edges_b = _band(cycle_b, cycle_a, cyclic=True)
    u, v, f, g, i = _pick_pairing(edges_a, edges_b)
    sub = open_cycle(cycle_b, (f, g))
    out = cycle_a[:i + 1] + sub + cycle_a[i + 1:]
    instrument.add(len(out))
    return out
