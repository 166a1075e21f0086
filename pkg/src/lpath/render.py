"""Drawings of shapes and paths: ASCII for terminals, SVG 1.1 for files.

Both renderers share the same geometry: one unit square per vertex,
circles (or letter marks) on vertices, and the path drawn through the
cell centers. The ASCII canvas doubles the resolution so the segment
between two vertices gets its own character: '-' and '|' for the axis
moves and '/' and '\\' for the diagonals ('X' where two diagonals
cross).
"""

from __future__ import annotations

from . import grid
from .errors import InvalidInstance
from .grid import Point, Shape

_DIAG = {(1, 1): "\\", (-1, -1): "\\", (1, -1): "/", (-1, 1): "/"}


def _walk_edges(seq: list[Point], cyclic: bool):
    pairs = list(zip(seq, seq[1:]))
    if cyclic and len(seq) > 2:
        pairs.append((seq[-1], seq[0]))
    return pairs


def _check_drawable(shape: Shape, seq: list[Point] | None) -> None:
    grid.validate_shape(shape)
    for p in seq or []:
        if not grid.contains(shape, p):
            raise InvalidInstance(f"vertex {p} is outside {shape}")


def render_ascii(shape: Shape, seq: list[Point] | None = None,
                 cyclic: bool = False) -> str:
    """Character drawing; unvisited vertices are '.', visited 'o', with
    the path endpoints marked 'S' and 'T' when the drawing is a path."""
    _check_drawable(shape, seq)
    width, height = 2 * shape.m - 1, 2 * shape.n - 1
    canvas = [[" "] * width for _ in range(height)]
    for x, y in grid.vertices(shape):
        canvas[2 * y - 2][2 * x - 2] = "."
    seq = seq or []
    for (ax, ay), (bx, by) in _walk_edges(seq, cyclic):
        if not grid.is_adjacent((ax, ay), (bx, by)):
            raise InvalidInstance(f"({ax},{ay}) -> ({bx},{by}) is not an edge")
        cx, cy = ax + bx - 2, ay + by - 2
        dx, dy = bx - ax, by - ay
        if dy == 0:
            mark = "-"
        elif dx == 0:
            mark = "|"
        else:
            mark = _DIAG[(dx, dy)]
            if canvas[cy][cx] in "/\\" and canvas[cy][cx] != mark:
                mark = "X"
        canvas[cy][cx] = mark
    for x, y in seq:
        canvas[2 * y - 2][2 * x - 2] = "o"
    if seq and not cyclic:
        (sx, sy), (tx, ty) = seq[0], seq[-1]
        canvas[2 * sy - 2][2 * sx - 2] = "S"
        canvas[2 * ty - 2][2 * tx - 2] = "T"
    return "\n".join("".join(row).rstrip() for row in canvas)


CELL = 40
MARGIN = 20


def _center(p: Point) -> tuple[int, int]:
    return (MARGIN + CELL * p[0] - CELL // 2, MARGIN + CELL * p[1] - CELL // 2)


def render_svg(shape: Shape, seq: list[Point] | None = None,
               cyclic: bool = False) -> str:
    """SVG 1.1 document: one square per vertex, vertices as circles, the
    path as a polyline through the cell centers."""
    _check_drawable(shape, seq)
    seq = seq or []
    width = 2 * MARGIN + CELL * shape.m
    height = 2 * MARGIN + CELL * shape.n
    out = [
        f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
        f'width="{width}" height="{height}" '
        f'viewBox="0 0 {width} {height}">',
        f'  <rect width="{width}" height="{height}" fill="white"/>',
    ]
    for x, y in grid.vertices(shape):
        out.append(
            f'  <rect x="{MARGIN + CELL * (x - 1)}" y="{MARGIN + CELL * (y - 1)}" '
            f'width="{CELL}" height="{CELL}" fill="#f7f7f7" stroke="#cccccc"/>')
    if seq:
        pts = [_center(p) for p in seq]
        if cyclic and len(seq) > 2:
            pts.append(pts[0])
        points = " ".join(f"{x},{y}" for x, y in pts)
        out.append(
            f'  <polyline points="{points}" fill="none" stroke="#d62728" '
            f'stroke-width="{CELL // 8}" stroke-linejoin="round" '
            f'stroke-linecap="round"/>')
    on_seq = set(seq)
    for p in grid.vertices(shape):
        cx, cy = _center(p)
        fill = "#333333" if p in on_seq else "#bbbbbb"
        out.append(f'  <circle cx="{cx}" cy="{cy}" r="{CELL // 8}" fill="{fill}"/>')
    if seq and not cyclic:
        for p, mark in ((seq[0], "s"), (seq[-1], "t")):
            cx, cy = _center(p)
            out.append(
                f'  <circle cx="{cx}" cy="{cy}" r="{CELL // 5}" fill="none" '
                f'stroke="#1f77b4" stroke-width="3"/>')
            out.append(
                f'  <text x="{cx + CELL // 4}" y="{cy - CELL // 4}" '
                f'font-family="sans-serif" font-size="{CELL // 3}" '
                f'fill="#1f77b4">{mark}</text>')
    out.append("</svg>")
    return "\n".join(out)
