"""Rectangle constructions: Hamiltonian cycles, Hamiltonian paths between
arbitrary endpoint pairs, paths pinned to a corner edge, and longest paths.

All functions work on Rect shapes in 1-based coordinates. Paths and cycles
are returned as vertex lists; cycles imply the closing edge.
"""

from __future__ import annotations

from functools import lru_cache

from lpath import combine, grid, instrument
from lpath.errors import FacingUnsatisfiable, InvalidInstance, NoPathExists
from lpath.grid import Point, Rect, translate
from lpath.isometry import IDENTITY, TRANSPOSE, Isometry, legal_isometries

OPPOSITE = {"top": "bottom", "bottom": "top", "left": "right", "right": "left"}

# isometry that carries the bottom side of the build frame onto each side
_BUILD_ISO = {
    "bottom": IDENTITY,
    "top": Isometry("vflip"),
    "left": Isometry("antidiag"),
    "right": TRANSPOSE,
}

_W, _Z, _X, _Y = (1, 1), (2, 1), (1, 2), (2, 2)


def _check_endpoints(rect: Rect, s: Point, t: Point) -> None:
    grid.validate_shape(rect)
    for p in (s, t):
        if not grid.contains(rect, p):
            raise InvalidInstance(f"endpoint {p} is outside {rect}")
    if s == t:
        raise InvalidInstance("endpoints must be distinct")


# ---------------------------------------------------------------------------
# forbidden conditions on rectangles

def satisfies_f1_rect(rect: Rect, s: Point, t: Point) -> bool:
    """An endpoint is a cut vertex, or the endpoint pair is a vertex cut."""
    m, n = rect.m, rect.n
    instrument.add(1)
    if m == 1:
        m, n, s, t = n, m, (s[1], s[0]), (t[1], t[0])
    if n == 1:
        return sorted([s, t]) != [(1, 1), (m, 1)]
    if n == 2:
        return s[0] == t[0] and 2 <= s[0] <= m - 1
    if m == 2:
        return s[1] == t[1] and 2 <= s[1] <= n - 1
    return False


def satisfies_f2_rect(rect: Rect, s: Point, t: Point) -> bool:
    """No Hamiltonian (s,t)-path can use the corner edge (1,1)-(2,1).

    With more than two vertices, a path between the corner pair itself
    cannot contain the edge joining its own endpoints; in two-row
    rectangles the two diagonal corner pairs are also blocked.
    """
    instrument.add(1)
    pair = {s, t}
    if pair == {_W, _Z}:
        return rect.m * rect.n > 2
    if rect.n == 2 and rect.m >= 3:
        return pair in ({_W, _Y}, {_Z, _X})
    return False


# ---------------------------------------------------------------------------
# canonical Hamiltonian cycles

def _perimeter(w: int, h: int) -> list[Point]:
    cyc = [(x, 1) for x in range(1, w + 1)]
    cyc += [(w, y) for y in range(2, h + 1)]
    cyc += [(x, h) for x in range(w - 1, 0, -1)]
    cyc += [(1, y) for y in range(h - 1, 1, -1)]
    return cyc

_SQUARE3 = ((1, 1), (2, 1), (3, 1), (3, 2), (3, 3), (2, 3), (2, 2), (1, 3), (1, 2))


def _concave_bottom_feasible(w: int, h: int) -> bool:
    # a width-3 comb frame taller than 3 cannot close the cycle back to
    # the left column without breaking a flat side
    return w >= 2 and h >= 2 and not (w == 3 and h > 3)


def _hc_concave_bottom(w: int, h: int) -> list[Point]:
    """Cycle on R(w,h) with flat top/left/right sides and the comb at the
    bottom. Callers check _concave_bottom_feasible first."""
    if w == 2 or h == 2:
        return _perimeter(w, h)
    if w == 3:
        return list(_SQUARE3)
    cyc = [(x, 1) for x in range(1, w + 1)]
    cyc += [(w, y) for y in range(2, h + 1)]
    # cover columns 2..w-1 right to left in units of two or three columns,
    # each entered at its rightmost column bottom, left at its leftmost
    remaining = w - 2
    c = w - 1
    while remaining:
        if remaining == 3:
            cyc += [(c, y) for y in range(h, 1, -1)]
            cyc += [(c - 1, 2), (c - 2, 2)]
            for y in range(3, h):
                row = [(c - 2, y), (c - 1, y)]
                cyc += row if (y - 3) % 2 == 0 else row[::-1]
            cyc += [(c - 1, h), (c - 2, h)]
            c -= 3
            remaining -= 3
        else:
            cyc += [(c, y) for y in range(h, 1, -1)]
            cyc += [(c - 1, y) for y in range(2, h + 1)]
            c -= 2
            remaining -= 2
    cyc += [(1, y) for y in range(h, 1, -1)]
    return cyc


def _build_dims(rect: Rect, side: str) -> tuple[int, int]:
    iso = _BUILD_ISO[side]
    return (rect.n, rect.m) if iso.swaps_axes else (rect.m, rect.n)


def legal_concave_sides(rect: Rect) -> list[str]:
    """Sides that can carry the comb of a canonical cycle."""
    return [side for side in grid.SIDES
            if _concave_bottom_feasible(*_build_dims(rect, side))]


def canonical_hc(rect: Rect, concave: str) -> list[Point]:
    """Hamiltonian cycle flat on three sides with the comb on `concave`."""
    grid.validate_shape(rect)
    if concave not in grid.SIDES:
        raise InvalidInstance(f"unknown side {concave!r}")
    if min(rect.m, rect.n) < 2:
        raise NoPathExists(f"{rect} has no cycle", condition="HC")
    bw, bh = _build_dims(rect, concave)
    if not _concave_bottom_feasible(bw, bh):
        raise InvalidInstance(
            f"concave side {concave!r} is not legal for {rect}: a width-3 "
            "frame only carries the comb on its long sides")
    iso = _BUILD_ISO[concave]
    cyc = iso.apply_seq(Rect(bw, bh), _hc_concave_bottom(bw, bh))
    instrument.add(len(cyc))
    return cyc


def hc_flat_facing(rect: Rect, facing: str) -> list[Point]:
    """Hamiltonian cycle whose restriction to `facing` is the whole side."""
    for side in [OPPOSITE[facing]] + [s for s in grid.SIDES
                                      if s not in (facing, OPPOSITE[facing])]:
        if _concave_bottom_feasible(*_build_dims(rect, side)):
            return canonical_hc(rect, side)
    raise InvalidInstance(f"no legal concave side leaves {facing!r} flat")


# ---------------------------------------------------------------------------
# Hamiltonian (s,t)-paths

def _has_side_edge(rect: Rect, path: list[Point], side: str) -> bool:
    on = set(grid.side_vertices(rect, side))
    instrument.add(len(path))
    return any(u in on and v in on for u, v in zip(path, path[1:]))


def _hp2(m: int, s: Point, t: Point) -> list[Point]:
    """Hamiltonian (s,t)-path of R(m,2); requires the pair not to be a
    vertex cut. Always contains both short-side edges."""
    if s[0] == t[0]:
        # corner column pair: walk the perimeter
        xs = range(1, m + 1) if s[0] == 1 else range(m, 0, -1)
        return [(x, s[1]) for x in xs] + [(x, t[1]) for x in reversed(xs)]
    rev = s[0] > t[0]
    if rev:
        s, t = t, s
    a, b = s[1], 3 - s[1]
    path = [(x, a) for x in range(s[0], 0, -1)]
    path += [(x, b) for x in range(1, s[0] + 1)]
    row = b
    for c in range(s[0] + 1, t[0]):
        path += [(c, row), (c, 3 - row)]
        row = 3 - row
    tb = 3 - t[1]
    path += [(x, tb) for x in range(t[0], m + 1)]
    path += [(x, t[1]) for x in range(m, t[0] - 1, -1)]
    return path[::-1] if rev else path


@lru_cache(maxsize=None)
def _small_base(m: int, n: int, s: Point, t: Point) -> tuple[Point, ...]:
    """First Hamiltonian (s,t)-path of a small rectangle that carries a
    boundary edge on all four sides (exists for all pairs when
    3 <= n <= m <= 4; the splitting recursion relies on it)."""
    r = Rect(m, n)
    total = m * n
    sides = [set(grid.side_vertices(r, side)) for side in grid.SIDES]
    out: list[tuple[Point, ...]] = []

    def dfs(path: list[Point], used: set[Point]) -> None:
        if out:
            return
        if len(path) == total:
            if path[-1] != t:
                return
            for on in sides:
                if not any(u in on and v in on
                           for u, v in zip(path, path[1:])):
                    return
            out.append(tuple(path))
            return
        for nb in grid.neighbors(r, path[-1]):
            if nb not in used and (nb != t or len(path) == total - 1):
                path.append(nb)
                used.add(nb)
                dfs(path, used)
                path.pop()
                used.remove(nb)

    dfs([s], {s})
    if not out:
        raise NoPathExists(f"no all-sides path in R({m},{n}) {s}->{t}")
    return out[0]


def _vertical_edge_at(path: list[Point], col: int) -> tuple[Point, Point]:
    instrument.add(len(path))
    for u, v in zip(path, path[1:]):
        if u[0] == col and v[0] == col:
            return (u, v)
    raise NoPathExists(f"path has no vertical edge in column {col}")


def _hp3(m: int, n: int, s: Point, t: Point) -> list[Point]:
    """Hamiltonian (s,t)-path of R(m,n), min(m,n) >= 3. The result has a
    boundary edge on all four sides, which the peeling step needs."""
    if m < n:
        flip = [(y, x) for x, y in _hp3(n, m, (s[1], s[0]), (t[1], t[0]))]
        instrument.add(len(flip))
        return flip
    if m <= 4:
        instrument.add(m * n)
        return list(_small_base(m, n, s, t))
    lo, hi = min(s[0], t[0]), max(s[0], t[0])
    wl = min(lo - 1, m - 3)
    wr = min(m - hi, m - 3)
    if max(wl, wr) >= 2:
        if wl >= wr:
            # peel an endpoint-free strip off the left, splice it back
            # across a vertical edge on the remainder's left column
            sub = translate(_hp3(m - wl, n, (s[0] - wl, s[1]),
                                 (t[0] - wl, t[1])), wl, 0)
            strip = hc_flat_facing(Rect(wl, n), "right")
            edge = _vertical_edge_at(sub, wl + 1)
        else:
            sub = _hp3(m - wr, n, s, t)
            strip = translate(hc_flat_facing(Rect(wr, n), "left"), m - wr, 0)
            edge = _vertical_edge_at(sub, m - wr)
        return combine.merge_path_cycle(sub, strip, at=edge)
    # endpoints straddle the whole width: cover two columns at a time with
    # caps that hand the walk to the next column block
    rev = s[0] > t[0]
    if rev:
        s, t = t, s
    pieces = []
    offset = 0
    cur_m, cur_s = m, s
    while cur_m > 4:
        p = (2, n) if cur_s != (2, n) else (2, 1)
        if offset == 0:
            cap = hp_rect(Rect(2, n), cur_s, p, facing="left")
        else:
            cap = _hp_any(Rect(2, n), cur_s, p)
        pieces.append(translate(cap, offset, 0))
        cur_s = (1, p[1])
        offset += 2
        cur_m -= 2
    final = _hp3(cur_m, n, cur_s, (t[0] - offset, t[1]))
    pieces.append(translate(final, offset, 0))
    out = combine.concat(*pieces)
    return out[::-1] if rev else out


def _hp_any(rect: Rect, s: Point, t: Point) -> list[Point]:
    """Hamiltonian (s,t)-path in the given frame; endpoints already known
    not to disconnect the rectangle."""
    m, n = rect.m, rect.n
    if m == 1:
        return [(1, y) for y in _steps(s[1], t[1])]
    if n == 1:
        return [(x, 1) for x in _steps(s[0], t[0])]
    if n == 2:
        return _hp2(m, s, t)
    if m == 2:
        flip = [(y, x) for x, y in _hp2(n, (s[1], s[0]), (t[1], t[0]))]
        instrument.add(len(flip))
        return flip
    return _hp3(m, n, s, t)


def _steps(a: int, b: int) -> range:
    return range(a, b + 1) if a <= b else range(a, b - 1, -1)


def hp_rect(rect: Rect, s: Point, t: Point, facing: str | None = None) -> list[Point]:
    """Hamiltonian (s,t)-path of a rectangle.

    With `facing`, the path is guaranteed to contain a boundary edge on
    that side, or FacingUnsatisfiable is raised. Among the symmetry
    variants of the construction the row-major least path is returned,
    which keeps the output deterministic.
    """
    _check_endpoints(rect, s, t)
    if facing is not None and facing not in grid.SIDES:
        raise InvalidInstance(f"unknown side {facing!r}")
    if satisfies_f1_rect(rect, s, t):
        raise NoPathExists(
            f"endpoints {s}, {t} disconnect {rect}", condition="F1")
    best = None
    for iso in legal_isometries(rect):
        frame = iso.apply_shape(rect)
        built = _hp_any(frame, iso.apply_point(rect, s), iso.apply_point(rect, t))
        if facing is not None and not _has_side_edge(
                frame, built, iso.map_side(facing)):
            continue
        cand = (iso.inverse.affine(frame), built)
        if best is None or _row_major_less(cand, best):
            best = cand
    if best is None:
        raise FacingUnsatisfiable(
            f"no Hamiltonian path {s}->{t} in {rect} keeps a boundary "
            f"edge on the {facing} side")
    (a, b, c, d, ox, oy), built = best
    path = [(a * x + b * y + ox, c * x + d * y + oy) for x, y in built]
    instrument.add(len(path))
    return path


def _row_major_less(ca, cb) -> bool:
    """Compare two framed candidates by the (y, x) order of their mapped
    points, stopping at the first difference; candidates are full paths
    between the same endpoints, so ties stay with the incumbent."""
    (aa, ab, ac, ad, aox, aoy), pa = ca
    (ba, bb, bc, bd, box, boy), pb = cb
    for (xa, ya), (xb, yb) in zip(pa, pb):
        ka = (ac * xa + ad * ya + aoy, aa * xa + ab * ya + aox)
        kb = (bc * xb + bd * yb + boy, ba * xb + bb * yb + box)
        if ka != kb:
            return ka < kb
    return False


# ---------------------------------------------------------------------------
# corner-edge-pinned paths

def hp_rect_zf(rect: Rect) -> list[Point]:
    """Hamiltonian path from (1,1) to (2,1) whose final edge is
    (3,1)-(2,1). Needs m >= 3 and n >= 2."""
    m, n = rect.m, rect.n
    grid.validate_shape(rect)
    if m < 3 or n < 2:
        raise InvalidInstance(f"{rect} has no corner-pinned path of this form")
    if m == 3:
        path = [(1, 1)]
        for y in range(2, n):
            path += [(1, y), (2, y)]
        path += [(1, n), (2, n), (3, n)]
        path += [(3, y) for y in range(n - 1, 0, -1)]
        path.append((2, 1))
        instrument.add(len(path))
        return path
    left = [(1, y) for y in range(1, n + 1)]
    left += [(2, y) for y in range(n, 0, -1)]
    cyc = translate(hc_flat_facing(Rect(m - 2, n), "left"), 2, 0)
    sub = combine.open_cycle(cyc, ((3, 2), (3, 1)))
    return combine.splice_path(left, ((2, 2), (2, 1)), sub)


def _hp_r3_wz(n: int, t: Point) -> list[Point]:
    """Hamiltonian path of R(3,n) from (2,1) to t starting with the edge
    (2,1)-(1,1). Recursion grows the rectangle one row at a time and keeps
    an edge between two far-row vertices available for the next splice."""
    if n == 2:
        base = [_Z, _W, _X, _Y]
        return base + ([(3, 2), (3, 1)] if t == (3, 1) else [(3, 1), (3, 2)])
    if t == (2, 2):
        path = [_Z, _W] + [(1, y) for y in range(2, n + 1)] + [(2, n), (3, n)]
        for y in range(n - 1, 2, -1):
            path += [(2, y), (3, y)]
        path += [(3, 2), (3, 1), (2, 2)]
        instrument.add(len(path))
        return path
    if t == (1, 2):
        path = [_Z, _W, _Y, (3, 1), (3, 2)]
        order = 1 if n % 2 == 0 else -1
        for y in range(3, n + 1):
            row = [(2, y), (3, y)][::order]
            path += row
            order = -order
        path += [(1, y) for y in range(n, 1, -1)]
        instrument.add(len(path))
        return path
    if n == 3 and t == (3, 3):
        return [(2, 1), (1, 1), (1, 2), (1, 3), (2, 3), (2, 2),
                (3, 1), (3, 2), (3, 3)]
    row_n = [(1, n), (2, n), (3, n)]
    if t[1] < n:
        sub = _hp_r3_wz(n - 1, t)
        at = ((1, n - 1), (2, n - 1)) if t == (3, n - 1) else ((2, n - 1), (3, n - 1))
        return combine.splice_path(sub, at, row_n)
    if t == (1, n):
        return _hp_r3_wz(n - 1, (3, n - 1)) + row_n[::-1]
    if t == (2, n):
        sub = _hp_r3_wz(n - 1, (3, n - 1)) + [(3, n), (2, n)]
        return combine.absorb_vertex(sub, (1, n), at=((1, n - 1), (2, n - 1)))
    sub = _hp_r3_wz(n - 1, (1, n - 1))
    return sub + row_n


def _wz_pair_strip(upto: int) -> list[Point]:
    """Column pairs (c,1),(c,2) for c = 3..upto, walked left to right."""
    out = []
    for c in range(3, upto + 1):
        out += [(c, 1), (c, 2)]
    return out


def _two_row_tail(m: int, start: int, t: Point) -> list[Point]:
    """Cover columns start..m of a two-row rectangle ending at t
    (t in that range), entering from column start-1 row 2."""
    other = 3 - t[1]
    tail = [(x, other) for x in range(start, m + 1)]
    tail += [(x, t[1]) for x in range(m, start - 1, -1)]
    return tail


def hp_rect_wz(rect: Rect, s: Point, t: Point) -> list[Point]:
    """Hamiltonian (s,t)-path containing the corner edge (1,1)-(2,1)."""
    _check_endpoints(rect, s, t)
    m, n = rect.m, rect.n
    if m < 2:
        raise InvalidInstance(f"{rect} has no corner edge (1,1)-(2,1)")
    if satisfies_f1_rect(rect, s, t):
        raise NoPathExists(
            f"endpoints {s}, {t} disconnect {rect}", condition="F1")
    if satisfies_f2_rect(rect, s, t):
        raise NoPathExists(
            f"no Hamiltonian path {s}->{t} in {rect} can use the corner "
            "edge (1,1)-(2,1)", condition="F2")
    if n == 1:
        return [(x, 1) for x in _steps(s[0], t[0])]
    if m * n == 2:
        return [s, t]
    rev = t in (_W, _Z)
    if rev:
        s, t = t, s
    if s == _W:
        path = _wz_case_corner_w(m, n, t)
    elif s == _Z:
        path = _wz_case_corner_z(m, n, t)
    else:
        path = _wz_case_interior(rect, s, t)
    instrument.add(len(path))
    return path[::-1] if rev else path


def _wz_case_interior(rect: Rect, s: Point, t: Point) -> list[Point]:
    """Neither endpoint is on the corner edge: take any Hamiltonian path
    and reroute it through the corner edge."""
    path = hp_rect(rect, s, t)
    if grid.has_edge(path, _W, _Z):
        return path
    # the corner's path neighbours must be (1,2) and (2,2), which are
    # adjacent, so the corner can be cut out and re-inserted beside (2,1)
    p1 = combine.excise_vertex(path, _W)
    j = p1.index(_Z)
    if grid.is_adjacent(p1[j - 1], p1[j + 1]):
        p2 = combine.excise_vertex(p1, _Z)
        return combine.splice_path(p2, (_X, _Y), [_W, _Z])
    # (2,1) sits between (1,2) and a column-3 vertex; cutting (1,2) out
    # instead leaves (2,1)-(2,2) to host the pair (1,1),(1,2)
    p2 = combine.excise_vertex(p1, _X)
    i = combine.find_consecutive(p2, (_Z, _Y))
    sub = [_W, _X] if p2[i] == _Z else [_X, _W]
    return p2[:i + 1] + sub + p2[i + 1:]


def _wz_case_corner_w(m: int, n: int, t: Point) -> list[Point]:
    """s = (1,1). The walk starts along the corner edge or reaches it
    through the first row."""
    if n == 2:
        if t == _X:
            return ([(x, 1) for x in range(1, m + 1)]
                    + [(x, 2) for x in range(m, 0, -1)])
        if t == _Y:
            # only reachable when m == 2; wider diagonal pairs are blocked
            return [_W, _Z, _X, _Y]
        upto = t[0] - 1
        head = [_W, _Z, _X, _Y] + _wz_pair_strip(upto)
        return head + _two_row_tail(m, upto + 1, t)
    if t == (m, 1):
        row1 = [(x, 1) for x in range(1, m + 1)]
        cyc = translate(hc_flat_facing(Rect(m, n - 1), "top"), 0, 1)
        return combine.merge_path_cycle(row1, cyc, at=((2, 1), (3, 1)))
    if t[1] == 1:
        strip = [_W, _Z]
        for y in range(2, n + 1):
            strip += [(1, y), (2, y)]
        sub = hp_rect(Rect(m - 2, n), (1, n), (t[0] - 2, 1))
        return strip + translate(sub, 2, 0)
    row1 = [(x, 1) for x in range(1, m + 1)]
    q = (m, 2) if t != (m, 2) else (m - 1, 2)
    sub = hp_rect(Rect(m, n - 1), (q[0], 1), (t[0], t[1] - 1))
    return row1 + translate(sub, 0, 1)


def _wz_case_corner_z(m: int, n: int, t: Point) -> list[Point]:
    """s = (2,1). The walk crosses the corner edge immediately."""
    if n == 2:
        if m == 2:
            return [_Z, _W, _X, _Y] if t == _Y else [_Z, _W, _Y, _X]
        upto = t[0] - 1
        head = [_Z, _W, _X, _Y] + _wz_pair_strip(upto)
        return head + _two_row_tail(m, upto + 1, t)
    if m == 2:
        a = _Y if t == _X else _X
        sub = hp_rect(Rect(2, n - 1), (a[0], 1), (t[0], t[1] - 1))
        return [_Z, _W] + translate(sub, 0, 1)
    if m == 3:
        return _hp_r3_wz(n, t)
    if t[0] <= 2:
        a = _Y if t == _X else _X
        sub = hp_rect(Rect(2, n - 1), (a[0], 1), (t[0], t[1] - 1),
                      facing="right")
        head = [_Z, _W] + translate(sub, 0, 1)
        cyc = translate(hc_flat_facing(Rect(m - 2, n), "left"), 2, 0)
        return combine.merge_path_cycle(head, cyc)
    p = (2, n)
    sub = hp_rect(Rect(2, n - 1), (1, 1), (p[0], p[1] - 1))
    head = [_Z, _W] + translate(sub, 0, 1)
    q = (3, n) if t != (3, n) else (3, n - 1)
    tail = hp_rect(Rect(m - 2, n), (q[0] - 2, q[1]), (t[0] - 2, t[1]))
    return head + translate(tail, 2, 0)


def hp_rect_corner_edge(rect: Rect, s: Point, t: Point) -> list[Point]:
    """Hamiltonian (s,t)-path containing the corner edge (1,1)-(2,1) or,
    when the endpoint pair forbids that edge, the edge (2,1)-(3,1).

    Needs at least three columns and no disconnecting endpoint pair. Used
    to splice an adjacent block onto the corner row.
    """
    pair = {s, t}
    if pair == {_W, _Z}:
        path = hp_rect_zf(rect)
        return path if path[0] == s else path[::-1]
    if not satisfies_f2_rect(rect, s, t):
        return hp_rect_wz(rect, s, t)
    # remaining: two rows, {s,t} is a diagonal corner pair; walk out along
    # row 1 so the path picks up (2,1)-(3,1) instead
    m = rect.m
    if pair == {_W, _Y}:
        path = [_W, _X, _Z] + [(x, 1) for x in range(3, m + 1)]
        path += [(x, 2) for x in range(m, 2, -1)] + [_Y]
    else:
        path = [_Z] + [(x, 1) for x in range(3, m + 1)]
        path += [(x, 2) for x in range(m, 1, -1)] + [_W, _X]
    instrument.add(len(path))
    return path if path[0] == s else path[::-1]


# ---------------------------------------------------------------------------
# longest paths in rectangles

def longest_len_rect(rect: Rect, s: Point, t: Point) -> int:
    """Number of vertices on a longest (s,t)-path."""
    _check_endpoints(rect, s, t)
    m, n = rect.m, rect.n
    instrument.add(1)
    if m == 1 or n == 1:
        return abs(s[0] - t[0]) + abs(s[1] - t[1]) + 1
    if min(m, n) == 2 and satisfies_f1_rect(rect, s, t):
        if n == 2:
            c, span = s[0], m
        else:
            c, span = s[1], n
        return 2 * max(c, span - c + 1)
    return m * n


def longest_path_rect(rect: Rect, s: Point, t: Point) -> list[Point]:
    """A longest (s,t)-path achieving longest_len_rect."""
    _check_endpoints(rect, s, t)
    m, n = rect.m, rect.n
    if m == 1 or n == 1:
        if m == 1:
            return [(1, y) for y in _steps(s[1], t[1])]
        return [(x, 1) for x in _steps(s[0], t[0])]
    if min(m, n) == 2 and satisfies_f1_rect(rect, s, t):
        if m == 2:
            flip = longest_path_rect(Rect(n, 2), (s[1], s[0]), (t[1], t[0]))
            out = [(y, x) for x, y in flip]
            instrument.add(len(out))
            return out
        c = s[0]
        if c >= m - c + 1:
            return hp_rect(Rect(c, 2), s, t)
        sub = hp_rect(Rect(m - c + 1, 2), (1, s[1]), (1, t[1]))
        return translate(sub, c - 1, 0)
    return hp_rect(rect, s, t)
