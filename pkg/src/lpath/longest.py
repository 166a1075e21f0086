"""Longest (s,t)-paths in L-shapes.

Infeasible instances are classified by the structure that blocks a
Hamiltonian path: a forced corridor (UB1-UB3), a cut vertex whose far
side is dead weight (UB4), or a two-vertex cut whose two sides compete
(UB5, UB6), plus the one near-miss family (F5) where exactly one vertex
must be dropped. Each label comes with a tight bound and a matching
witness construction; feasible instances are labelled L0 and delegate
to the Hamiltonian path builder.

Classification first settles feasibility (L0), then tries the bound
conditions in a fixed order, each across the four legal framings of the
instance (identity/antidiagonal, endpoints as given or exchanged). The
first hit wins and the framing is recorded so the witness is built in
the same frame and mapped back.
"""

from __future__ import annotations

from dataclasses import dataclass

from lpath import grid, instrument
from lpath.errors import InvalidInstance
from lpath.grid import LShape, Point, Rect, shape_to_json, translate, vertex_count
from lpath.isometry import ANTIDIAG, IDENTITY, Isometry
from lpath.lshape import (
    _check_endpoints,
    _f5_raw,
    hp_lshape,
    satisfies_f1_lshape,
    satisfies_f4,
    satisfies_f5,
)
from lpath.rect import hp_rect, longest_len_rect, longest_path_rect

LABELS = ("UB1", "UB2", "UB3", "UB4", "UB5", "UB6", "F5", "L0")

_FRAMES = ((IDENTITY, False), (IDENTITY, True), (ANTIDIAG, False), (ANTIDIAG, True))


@dataclass(frozen=True)
class LongestPlan:
    label: str
    bound: int
    frame: str
    swapped: bool
    decomposition: dict | None = None


def _frame_instance(shape: LShape, s: Point, t: Point,
                    iso: Isometry, swapped: bool):
    img = iso.apply_shape(shape)
    a = iso.apply_point(shape, s)
    b = iso.apply_point(shape, t)
    return (img, b, a) if swapped else (img, a, b)


# ---------------------------------------------------------------------------
# bound conditions, each stated for one frame
#
# UB1-UB3 live on corridor shapes (both arms of width 1) where every
# path is forced. UB4 drops the dead arm prefix above a cut vertex.
# UB5/UB6 split at a two-vertex cut. Endpoint roles follow the frame:
# the caller tries both endpoint orders, so predicates read
# asymmetrically.

def _ub1(sh: LShape, a: Point, b: Point) -> bool:
    # both endpoints on the width-1 arm: the arm is a corridor that can
    # only be left below the lower endpoint, so the path is the column
    # segment between them whatever hangs underneath
    return sh.m - sh.k == 1 and a[1] <= sh.l and b[1] <= sh.l


def _ub2(sh: LShape, a: Point, b: Point) -> bool:
    # one endpoint on the arm (the bend row included), the other on the
    # bottom row: the path runs down the arm and along the row
    return (sh.m - sh.k == 1 and sh.n - sh.l == 1
            and a[1] <= sh.l and b[0] > 1)


def _ub3(sh: LShape, a: Point, b: Point) -> bool:
    # both endpoints in column 1 with one at the bottom: the path may
    # pick up (2,n) through the diagonal at the bend, nothing more
    if not (sh.m - sh.k == 1 and sh.n - sh.l == 1):
        return False
    if not (a[0] == 1 and b[0] == 1 and max(a[1], b[1]) == sh.n):
        return False
    return sh.k > 1 or min(a[1], b[1]) > 1


def _ub4(sh: LShape, a: Point, b: Point) -> bool:
    # arm of width 1 hanging above a taller body: rows above the upper
    # endpoint (or above the bend, when both endpoints sit below it)
    # are unreachable, so recurse on the shape with that prefix removed
    if not (sh.m - sh.k == 1 and sh.l > 1 and sh.n - sh.l >= 2):
        return False
    lo, hi = sorted((a[1], b[1]))
    if lo > sh.l:
        return not grid.is_cut_pair(sh, a, b)
    return 2 <= lo <= sh.l < hi


def _ub5(sh: LShape, a: Point, b: Point) -> bool:
    # the endpoint pair is the two-vertex cut at the bend; the body
    # below is always the larger side
    return (sh.m - sh.k == 1 and sh.k > 1 and sh.n - sh.l >= 2
            and a == (1, sh.l + 1) and b == (2, sh.l + 1))


def _ub6_split_kind(sh: LShape, a: Point, b: Point) -> int:
    """Which two-vertex cut separates the instance: 0 means none."""
    m, n, k, l = sh.m, sh.n, sh.k, sh.l
    if n - l < 2:
        return 0
    if (m - k == 2 and a[1] == b[1] and 2 <= a[1] <= l
            and {a[0], b[0]} == {1, 2}):
        return 1
    if m == 2 and a[1] == b[1] and l + 1 <= a[1] <= n - 1:
        return 2
    if (n - l == 2 and k > 1 and a[0] == b[0]
            and m - k + 1 <= a[0] <= m - 1):
        return 3
    return 0


def _ub6(sh: LShape, a: Point, b: Point) -> bool:
    return _ub6_split_kind(sh, a, b) != 0


_CONDITIONS = (
    ("UB1", _ub1),
    ("UB2", _ub2),
    ("UB3", _ub3),
    ("UB4", _ub4),
    ("UB5", _ub5),
    ("UB6", _ub6),
    ("F5", _f5_raw),
)


# ---------------------------------------------------------------------------
# decompositions and bounds

def _ub4_sub(sh: LShape, a: Point, b: Point):
    lo = min(a[1], b[1])
    rows_cut = sh.l - 1 if lo > sh.l else lo - 1
    sub = LShape(sh.m, sh.n - rows_cut, sh.k, sh.l - rows_cut)
    sa = (a[0], a[1] - rows_cut)
    sb = (b[0], b[1] - rows_cut)
    return sub, rows_cut, sa, sb


def _ub6_components(sh: LShape, a: Point, b: Point):
    """The two sides of the cut {a, b}, each keeping a and b.

    Returns (sub, offset, a', b') per side; the attached rectangle side
    is second in each split kind's listing.
    """
    kind = _ub6_split_kind(sh, a, b)
    if kind == 1:
        y0 = a[1]
        g1 = (Rect(2, y0), (0, 0), a, b)
        g2 = (LShape(sh.m, sh.n - y0 + 1, sh.k, sh.l - y0 + 1),
              (0, y0 - 1), (a[0], 1), (b[0], 1))
    elif kind == 2:
        y0 = a[1]
        g1 = (LShape(2, y0, 1, sh.l), (0, 0), a, b)
        g2 = (Rect(2, sh.n - y0 + 1), (0, y0 - 1), (a[0], 1), (b[0], 1))
    else:
        x0 = a[0]
        g1 = (LShape(x0, sh.n, x0 - (sh.m - sh.k), sh.l), (0, 0), a, b)
        g2 = (Rect(sh.m - x0 + 1, sh.n - sh.l), (x0 - 1, sh.l),
              (1, a[1] - sh.l), (1, b[1] - sh.l))
    return g1, g2


def _f5_pieces(sh: LShape, a: Point, b: Point):
    """Column-1 prefix and body rectangle for the near-miss pairs.

    One endpoint is in column 1; the path spends two vertices there,
    crosses the diagonal junction, and covers the rest of the body,
    omitting exactly one column-1 vertex.
    """
    u, v = (a, b) if a[0] == 1 else (b, a)
    if u == (1, 2):
        head, q, omitted = [(1, 2), (1, 1)], (2, 2), (1, 3)
    else:
        head, q, omitted = [(1, 3), (1, 2)], (2, 3), (1, 1)
    body = Rect(sh.m - 1, 2)
    body_q = (q[0] - 1, q[1] - 1)
    body_v = (v[0] - 1, v[1] - 1)
    return u, v, head, q, omitted, body, body_q, body_v


def _sub_bound(sub, offset, a: Point, b: Point) -> int:
    if isinstance(sub, Rect):
        return longest_len_rect(sub, a, b)
    return classify(sub, a, b).bound


def _make_plan(label: str, sh: LShape, a: Point, b: Point,
               iso: Isometry, swapped: bool) -> LongestPlan:
    if label == "UB1":
        return LongestPlan(label, abs(b[1] - a[1]) + 1, iso.name, swapped)
    if label == "UB2":
        return LongestPlan(label, sh.n - a[1] + b[0], iso.name, swapped)
    if label == "UB3":
        return LongestPlan(label, abs(b[1] - a[1]) + 2, iso.name, swapped)
    if label == "UB4":
        sub, rows_cut, sa, sb = _ub4_sub(sh, a, b)
        bound = _sub_bound(sub, (0, rows_cut), sa, sb)
        dec = {"sub": shape_to_json(sub), "offset": [0, rows_cut]}
        return LongestPlan(label, bound, iso.name, swapped, dec)
    if label == "UB5":
        sub = Rect(sh.m, sh.n - sh.l)
        bound = longest_len_rect(sub, (1, 1), (2, 1))
        dec = {"sub": shape_to_json(sub), "offset": [0, sh.l]}
        return LongestPlan(label, bound, iso.name, swapped, dec)
    if label == "UB6":
        g1, g2 = _ub6_components(sh, a, b)
        bounds = [_sub_bound(*g1), _sub_bound(*g2)]
        chosen = 0 if bounds[0] >= bounds[1] else 1
        dec = {
            "components": [
                {"shape": shape_to_json(g[0]), "offset": list(g[1]),
                 "bound": bd}
                for g, bd in zip((g1, g2), bounds)
            ],
            "chosen": chosen,
        }
        return LongestPlan(label, max(bounds), iso.name, swapped, dec)
    # F5: all but one vertex
    _, _, head, q, omitted, _, _, _ = _f5_pieces(sh, a, b)
    dec = {"p": list(head[-1]), "q": list(q), "omitted": list(omitted)}
    return LongestPlan(label, vertex_count(sh) - 1, iso.name, swapped, dec)


def classify(shape: LShape, s: Point, t: Point) -> LongestPlan:
    """Label the instance and compute the tight length bound.

    Feasible instances are L0 with bound equal to the vertex count; a
    blocked instance gets the first matching bound condition over the
    four legal framings.
    """
    if not isinstance(shape, LShape):
        raise InvalidInstance("classification applies to L-shapes")
    _check_endpoints(shape, s, t)
    if not (satisfies_f1_lshape(shape, s, t) or satisfies_f4(shape, s, t)
            or satisfies_f5(shape, s, t)):
        return LongestPlan("L0", vertex_count(shape), IDENTITY.name, False)
    for label, pred in _CONDITIONS:
        for iso, swapped in _FRAMES:
            img, a, b = _frame_instance(shape, s, t, iso, swapped)
            if pred(img, a, b):
                return _make_plan(label, img, a, b, iso, swapped)
    raise RuntimeError(
        f"blocked instance {shape} s={s} t={t} matched no bound condition")


def upper_bound(shape: LShape, s: Point, t: Point) -> int:
    return classify(shape, s, t).bound


# ---------------------------------------------------------------------------
# witness construction, per label, in the recorded frame

def _build_ub1(sh: LShape, a: Point, b: Point) -> list[Point]:
    step = 1 if b[1] >= a[1] else -1
    return [(1, y) for y in range(a[1], b[1] + step, step)]


def _build_ub2(sh: LShape, a: Point, b: Point) -> list[Point]:
    down = [(1, y) for y in range(a[1], sh.n + 1)]
    return down + [(x, sh.n) for x in range(2, b[0] + 1)]


def _build_ub3(sh: LShape, a: Point, b: Point) -> list[Point]:
    lo = min(a[1], b[1])
    path = [(1, y) for y in range(lo, sh.n)] + [(2, sh.n), (1, sh.n)]
    if a == (1, sh.n):
        path.reverse()
    return path


def _build_ub4(sh: LShape, a: Point, b: Point) -> list[Point]:
    sub, rows_cut, sa, sb = _ub4_sub(sh, a, b)
    return translate(longest_path_lshape(sub, sa, sb), 0, rows_cut)


def _build_ub5(sh: LShape, a: Point, b: Point) -> list[Point]:
    sub = Rect(sh.m, sh.n - sh.l)
    return translate(longest_path_rect(sub, (1, 1), (2, 1)), 0, sh.l)


def _build_ub6(sh: LShape, a: Point, b: Point) -> list[Point]:
    g1, g2 = _ub6_components(sh, a, b)
    bounds = [_sub_bound(*g1), _sub_bound(*g2)]
    sub, (dx, dy), sa, sb = g1 if bounds[0] >= bounds[1] else g2
    if isinstance(sub, Rect):
        part = longest_path_rect(sub, sa, sb)
    else:
        part = longest_path_lshape(sub, sa, sb)
    return translate(part, dx, dy)


def _build_f5(sh: LShape, a: Point, b: Point) -> list[Point]:
    u, v, head, q, omitted, body, body_q, body_v = _f5_pieces(sh, a, b)
    tail = translate(hp_rect(body, body_q, body_v), 1, 1)
    path = head + tail
    if a != u:
        path.reverse()
    return path


_BUILDERS = {
    "UB1": _build_ub1,
    "UB2": _build_ub2,
    "UB3": _build_ub3,
    "UB4": _build_ub4,
    "UB5": _build_ub5,
    "UB6": _build_ub6,
    "F5": _build_f5,
}


def longest_path_lshape(shape: LShape, s: Point, t: Point) -> list[Point]:
    """A longest (s,t)-path; Hamiltonian exactly on L0 instances."""
    plan = classify(shape, s, t)
    if plan.label == "L0":
        out = hp_lshape(shape, s, t)
    else:
        iso = ANTIDIAG if plan.frame == ANTIDIAG.name else IDENTITY
        img, a, b = _frame_instance(shape, s, t, iso, plan.swapped)
        built = _BUILDERS[plan.label](img, a, b)
        out = iso.inverse.apply_seq(img, built)
        if plan.swapped:
            out.reverse()
    assert out[0] == s and out[-1] == t and len(out) == plan.bound
    instrument.add(len(out))
    return out
