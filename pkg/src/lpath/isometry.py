"""The eight grid symmetries (dihedral group of the rectangle).

Each isometry maps a shape's bounding box onto the image's bounding box
and preserves king-move adjacency. On rectangles all eight are legal; an
L-shape keeps its notch at the upper-right corner only under identity
and the antidiagonal reflection, so those are the only two legal there.

Isometries act on 1-based points via centered coordinates
(u, v) = (2x - (M+1), 2y - (N+1)), where each element is a signed
permutation matrix; composition is matrix product and every element is
its own transpose-inverse.
"""

from __future__ import annotations

from dataclasses import dataclass

from .grid import LShape, Point, Rect, Shape

Mat = tuple[tuple[int, int], tuple[int, int]]

_MATS: dict[str, Mat] = {
    "identity": ((1, 0), (0, 1)),
    "hflip": ((-1, 0), (0, 1)),
    "vflip": ((1, 0), (0, -1)),
    "rot180": ((-1, 0), (0, -1)),
    "transpose": ((0, 1), (1, 0)),
    "antidiag": ((0, -1), (-1, 0)),
    "rot90": ((0, -1), (1, 0)),
    "rot270": ((0, 1), (-1, 0)),
}
_NAMES: dict[Mat, str] = {mat: name for name, mat in _MATS.items()}

_SIDE_MAPS: dict[str, dict[str, str]] = {
    "identity": {"top": "top", "bottom": "bottom", "left": "left", "right": "right"},
    "hflip": {"top": "top", "bottom": "bottom", "left": "right", "right": "left"},
    "vflip": {"top": "bottom", "bottom": "top", "left": "left", "right": "right"},
    "rot180": {"top": "bottom", "bottom": "top", "left": "right", "right": "left"},
    "transpose": {"top": "left", "bottom": "right", "left": "top", "right": "bottom"},
    "antidiag": {"top": "right", "bottom": "left", "left": "bottom", "right": "top"},
    "rot90": {"top": "right", "bottom": "left", "left": "top", "right": "bottom"},
    "rot270": {"top": "left", "bottom": "right", "left": "bottom", "right": "top"},
}


@dataclass(frozen=True)
class Isometry:
    name: str

    @property
    def mat(self) -> Mat:
        return _MATS[self.name]

    @property
    def swaps_axes(self) -> bool:
        return self.mat[0][0] == 0

    def apply_point(self, shape: Shape, p: Point) -> Point:
        (a, b), (c, d) = self.mat
        cm, cn = shape.m + 1, shape.n + 1
        u, v = 2 * p[0] - cm, 2 * p[1] - cn
        nu, nv = a * u + b * v, c * u + d * v
        tm, tn = (cn, cm) if self.swaps_axes else (cm, cn)
        return ((nu + tm) // 2, (nv + tn) // 2)

    def apply_shape(self, shape: Shape) -> Shape:
        if isinstance(shape, Rect):
            if self.swaps_axes:
                return Rect(shape.n, shape.m)
            return shape
        if self.name == "identity":
            return shape
        if self.name == "antidiag":
            return LShape(shape.n, shape.m, shape.l, shape.k)
        raise ValueError(f"isometry {self.name} does not preserve the notch corner")

    def affine(self, shape: Shape) -> tuple[int, int, int, int, int, int]:
        """Coefficients (a, b, c, d, ox, oy) with the action written as
        (x, y) -> (a*x + b*y + ox, c*x + d*y + oy); same map as
        apply_point with the centering folded into the offsets."""
        (a, b), (c, d) = self.mat
        cm, cn = shape.m + 1, shape.n + 1
        tm, tn = (cn, cm) if self.swaps_axes else (cm, cn)
        return a, b, c, d, (tm - a * cm - b * cn) // 2, (tn - c * cm - d * cn) // 2

    def apply_seq(self, shape: Shape, seq: list[Point]) -> list[Point]:
        a, b, c, d, ox, oy = self.affine(shape)
        return [(a * x + b * y + ox, c * x + d * y + oy) for x, y in seq]

    def map_side(self, side: str) -> str:
        return _SIDE_MAPS[self.name][side]

    @property
    def inverse(self) -> "Isometry":
        (a, b), (c, d) = self.mat
        return Isometry(_NAMES[((a, c), (b, d))])


def compose(g: Isometry, h: Isometry) -> Isometry:
    """The isometry applying h first, then g."""
    (ga, gb), (gc, gd) = g.mat
    (ha, hb), (hc, hd) = h.mat
    mat = (
        (ga * ha + gb * hc, ga * hb + gb * hd),
        (gc * ha + gd * hc, gc * hb + gd * hd),
    )
    return Isometry(_NAMES[mat])


IDENTITY = Isometry("identity")
ANTIDIAG = Isometry("antidiag")
TRANSPOSE = Isometry("transpose")
HFLIP = Isometry("hflip")
VFLIP = Isometry("vflip")

ALL = tuple(Isometry(name) for name in _MATS)


def legal_isometries(shape: Shape) -> tuple[Isometry, ...]:
    if isinstance(shape, Rect):
        return ALL
    return (IDENTITY, ANTIDIAG)
