"""L-shape constructions: existence conditions for Hamiltonian cycles and
(s,t)-paths, and the constructive algorithms.

Shapes are L(m,n;k,l): R(m,n) minus a k-by-l notch at the upper-right.
The column arm (width m-k) spans the notch rows; the full-width block
sits below it (rows l+1..n).
"""

from __future__ import annotations

from lpath import combine, grid, instrument, rect
from lpath.errors import InvalidInstance, NoPathExists
from lpath.grid import LShape, Point, Rect, translate
from lpath.isometry import ANTIDIAG
from lpath.rect import hc_flat_facing, hp_rect, hp_rect_corner_edge, hp_rect_wz


def _check_endpoints(shape: LShape, s: Point, t: Point) -> None:
    grid.validate_shape(shape)
    for p in (s, t):
        if not grid.contains(shape, p):
            raise InvalidInstance(f"endpoint {p} is outside {shape}")
    if s == t:
        raise InvalidInstance("endpoints must be distinct")


# ---------------------------------------------------------------------------
# forbidden conditions

def degree_one_vertices(shape: LShape) -> list[Point]:
    """The possible degree-1 vertices: the arm tip when an arm has width 1
    and depth over 1."""
    out = []
    if shape.m - shape.k == 1 and shape.l > 1:
        out.append((1, 1))
    if shape.n - shape.l == 1 and shape.k > 1:
        out.append((shape.m, shape.n))
    return out


def satisfies_f1_lshape(shape: LShape, s: Point, t: Point) -> bool:
    """An endpoint is a cut vertex, or the endpoint pair is a vertex cut."""
    return (grid.is_cut_vertex(shape, s) or grid.is_cut_vertex(shape, t)
            or grid.is_cut_pair(shape, s, t))


def satisfies_f3(shape: LShape) -> bool:
    """Some vertex has degree 1, so no Hamiltonian cycle exists."""
    grid.validate_shape(shape)
    instrument.add(1)
    return bool(degree_one_vertices(shape))


def satisfies_f4(shape: LShape, s: Point, t: Point) -> bool:
    """A degree-1 vertex other than s and t exists."""
    instrument.add(1)
    return any(v != s and v != t for v in degree_one_vertices(shape))


def _f5_raw(shape: LShape, s: Point, t: Point) -> bool:
    if not (shape.m - shape.k == 1 and shape.n - shape.l == 2
            and shape.l == 1 and shape.k >= 2):
        return False
    return {s, t} in ({(1, 2), (2, 3)}, {(1, 3), (2, 2)})


def satisfies_f5(shape: LShape, s: Point, t: Point) -> bool:
    """The lone arm vertex cannot be picked up: a unit arm over a 2-row
    block with the endpoints on the two diagonals next to the arm."""
    instrument.add(1)
    if _f5_raw(shape, s, t):
        return True
    image = ANTIDIAG.apply_shape(shape)
    return _f5_raw(image, ANTIDIAG.apply_point(shape, s),
                   ANTIDIAG.apply_point(shape, t))


# ---------------------------------------------------------------------------
# Hamiltonian cycles

def hc_lshape(shape: LShape) -> list[Point]:
    """Hamiltonian cycle of an L-shape without degree-1 vertices."""
    grid.validate_shape(shape)
    if satisfies_f3(shape):
        raise NoPathExists(f"{shape} has a degree-1 vertex", condition="F3")
    m, n, k, l = shape.m, shape.n, shape.k, shape.l
    if m - k == 1 and n - l == 1:
        # both arms have width 1, so the shape is the 3-vertex corner
        return [(1, 1), (1, 2), (2, 2)]
    if m - k == 1:
        # l = 1: absorb the lone arm vertex into the block below
        cyc = translate(hc_flat_facing(Rect(m, n - 1), "top"), 0, 1)
        out = combine.absorb_vertex(cyc, (1, 1), at=((1, 2), (2, 2)),
                                    cyclic=True)
        instrument.add(len(out))
        return out
    if n - l == 1:
        image = ANTIDIAG.apply_shape(shape)
        cyc = hc_lshape(image)
        out = ANTIDIAG.inverse.apply_seq(image, cyc)
        instrument.add(len(out))
        return out
    # both arms at least 2 wide: vertical separation at the notch column
    left = hc_flat_facing(Rect(m - k, n), "right")
    if k == 1:
        # the right part is a single column; absorb each vertex across its
        # own flat-column edge (each absorption consumes a distinct edge)
        out = left
        for y in range(n, l, -1):
            out = combine.absorb_vertex(
                out, (m, y), at=((m - 1, y - 1), (m - 1, y)), cyclic=True)
        instrument.add(len(out))
        return out
    right = translate(hc_flat_facing(Rect(k, n - l), "left"), m - k, l)
    out = combine.merge_cycles(left, right)
    instrument.add(len(out))
    return out


# ---------------------------------------------------------------------------
# Hamiltonian (s,t)-paths

def hp_lshape(shape: LShape, s: Point, t: Point,
              require_rw_edge: bool = False) -> list[Point]:
    """Hamiltonian (s,t)-path of an L-shape.

    With require_rw_edge the returned path contains the edge joining the
    lone arm vertex (1,1) to (1,2); that is only well-defined when the
    column arm is the single vertex (m-k = 1, l = 1) and both endpoints
    lie below it.
    """
    _check_endpoints(shape, s, t)
    if require_rw_edge and not (shape.m - shape.k == 1 and shape.l == 1
                                and s[1] > 1 and t[1] > 1):
        raise InvalidInstance(
            "an arm-to-block edge can only be required when the arm is a "
            "single vertex and both endpoints are below it")
    if satisfies_f1_lshape(shape, s, t):
        raise NoPathExists(
            f"endpoints {s}, {t} disconnect {shape}", condition="F1")
    if satisfies_f4(shape, s, t):
        raise NoPathExists(
            f"{shape} has a degree-1 vertex other than the endpoints",
            condition="F4")
    if satisfies_f5(shape, s, t):
        raise NoPathExists(
            f"the arm vertex of {shape} cannot be visited between {s} and {t}",
            condition="F5")
    if shape.m - shape.k == 1 or shape.n - shape.l == 1:
        path = _hp_thin(shape, s, t)
    else:
        path = _hp_thick(shape, s, t)
    instrument.add(len(path))
    return path


def _hp_thin(shape: LShape, s: Point, t: Point) -> list[Point]:
    """Arm of width 1 (normalized so the column arm is the thin one)."""
    m, n, k, l = shape.m, shape.n, shape.k, shape.l
    if m - k != 1:
        image = ANTIDIAG.apply_shape(shape)
        sub = _hp_thin(image, ANTIDIAG.apply_point(shape, s),
                       ANTIDIAG.apply_point(shape, t))
        return ANTIDIAG.inverse.apply_seq(image, sub)
    if s[1] > l and t[1] > l:
        # both endpoints below the arm; the arm is the lone vertex (1,1)
        # (a deeper arm would leave a degree-1 vertex, excluded already)
        below = Rect(m, n - 1)
        if below.n == 1:
            sub = hp_rect(below, (s[0], 1), (t[0], 1))
        else:
            sub = hp_rect_wz(below, (s[0], s[1] - 1), (t[0], t[1] - 1))
        path = translate(sub, 0, 1)
        return combine.absorb_vertex(path, (1, 1), at=((1, 2), (2, 2)))
    rev = t[1] <= l
    if rev:
        s, t = t, s
    # s sits in the arm column, t below: walk the arm, then cover the block
    if l == 1:
        arm = [(1, 1)]
    else:
        arm = hp_rect(Rect(1, l), s, (1, l))
    q = (1, l + 1) if t != (1, l + 1) else (2, l + 1)
    block = hp_rect(Rect(m, n - l), (q[0], 1), (t[0], t[1] - l))
    path = combine.concat(arm, translate(block, 0, l))
    return path[::-1] if rev else path


def _hp_thick(shape: LShape, s: Point, t: Point) -> list[Point]:
    """Both arms at least 2 wide."""
    m, n, k, l = shape.m, shape.n, shape.k, shape.l
    if k == 1 and l == 1:
        # delete the notch vertex from a full-rectangle path; its
        # neighbourhood is a clique so the gap closes
        path = hp_rect(Rect(m, n), s, t)
        return combine.excise_vertex(path, (m, 1))
    if k == 1:
        image = ANTIDIAG.apply_shape(shape)
        sub = _hp_thick(image, ANTIDIAG.apply_point(shape, s),
                        ANTIDIAG.apply_point(shape, t))
        return ANTIDIAG.inverse.apply_seq(image, sub)
    mp = m - k
    if s[0] <= mp and t[0] <= mp:
        if mp == 2 and s[1] == t[1] and 2 <= s[1] <= n - 1:
            return _hp_horizontal_split(shape, s, t)
        # endpoints in the left rectangle, not cutting it: build its path
        # in the frame whose corner row is the bottom of the shared column
        left = Rect(mp, n)
        frame = ANTIDIAG.apply_shape(left)
        sub = hp_rect_corner_edge(frame, ANTIDIAG.apply_point(left, s),
                                  ANTIDIAG.apply_point(left, t))
        pa = ANTIDIAG.inverse.apply_seq(frame, sub)
        cyc = translate(hc_flat_facing(Rect(k, n - l), "left"), mp, l)
        return combine.merge_path_cycle(pa, cyc)
    if s[0] > mp and t[0] > mp:
        if l > 1 or mp == 2:
            return _hp_horizontal_split(shape, s, t)
        # l = 1 and a wide left block: peel all but the last left column,
        # solve the thin remainder pinned to its arm edge, merge back
        rest = LShape(k + 1, n, k, 1)
        sub = hp_lshape(rest, (s[0] - mp + 1, s[1]), (t[0] - mp + 1, t[1]),
                        require_rw_edge=True)
        pa = translate(sub, mp - 1, 0)
        cyc = hc_flat_facing(Rect(mp - 1, n), "right")
        return combine.merge_path_cycle(pa, cyc)
    # endpoints on both sides of the notch column: join two rectangle paths
    rev = s[0] > mp
    if rev:
        s, t = t, s
    p = (mp, n - 1) if s == (mp, n) else (mp, n)
    q = (mp + 1, n - 1) if t == (mp + 1, n) else (mp + 1, n)
    pa = hp_rect(Rect(mp, n), s, p)
    pb = hp_rect(Rect(k, n - l), (1, q[1] - l), (t[0] - mp, t[1] - l))
    path = combine.concat(pa, translate(pb, mp, l))
    return path[::-1] if rev else path


def _hp_horizontal_split(shape: LShape, s: Point, t: Point) -> list[Point]:
    """Cover the block below the notch with a path pinned to the corner
    row, then attach the arm block above it."""
    m, n, k, l = shape.m, shape.n, shape.k, shape.l
    mp = m - k
    sub = hp_rect_corner_edge(Rect(m, n - l), (s[0], s[1] - l),
                              (t[0], t[1] - l))
    pa = translate(sub, 0, l)
    w, z, f = (1, l + 1), (2, l + 1), (3, l + 1)
    if l == 1:
        at = (w, z) if grid.has_edge(pa, w, z) else (z, f)
        return combine.splice_path(pa, at, [(1, 1), (2, 1)])
    cyc = hc_flat_facing(Rect(mp, l), "bottom")
    return combine.merge_path_cycle(pa, cyc)
