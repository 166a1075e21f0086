import xml.dom.minidom

import pytest

from lpath import render
from lpath.errors import InvalidInstance
from lpath.grid import LShape, Rect
from lpath.longest import longest_path_lshape
from lpath.lshape import hc_lshape, hp_lshape


def test_ascii_path_golden():
    shape = LShape(3, 3, 2, 1)
    path = longest_path_lshape(shape, (1, 2), (2, 3))
    assert render.render_ascii(shape, path) == (
        "o\n"
        "|\\\n"
        "S o-o\n"
        "    |\n"
        ". T-o"
    )


def test_ascii_cycle_closes():
    shape = LShape(3, 3, 2, 1)
    drawing = render.render_ascii(shape, hc_lshape(shape), cyclic=True)
    assert "S" not in drawing and "T" not in drawing
    # the closing edge (2,2)-(1,1) is the lone diagonal
    assert drawing.count("\\") == 1


def test_ascii_shape_only():
    drawing = render.render_ascii(Rect(3, 2))
    assert drawing == ". . .\n\n. . ."


def test_ascii_marks_diagonal_crossings():
    # two crossing diagonals share a midpoint character
    drawing = render.render_ascii(Rect(2, 3),
                                  [(1, 2), (2, 1), (1, 1), (2, 2), (2, 3), (1, 3)])
    assert "X" in drawing


def test_ascii_rejects_non_edges():
    with pytest.raises(InvalidInstance):
        render.render_ascii(Rect(3, 3), [(1, 1), (3, 3)])
    with pytest.raises(InvalidInstance):
        render.render_ascii(Rect(2, 2), [(1, 1), (5, 5)])


def test_svg_structure():
    shape = LShape(4, 4, 2, 2)
    path = hp_lshape(shape, (1, 1), (4, 4))
    doc = render.render_svg(shape, path)
    xml.dom.minidom.parseString(doc)
    assert 'version="1.1"' in doc
    assert 'xmlns="http://www.w3.org/2000/svg"' in doc
    assert doc.count("<circle") == 12 + 2            # vertices + s/t rings
    assert doc.count("<polyline") == 1
    assert doc.count('width="40" height="40"') == 12  # one cell per vertex
    assert ">s</text>" in doc and ">t</text>" in doc


def test_svg_cycle_closes_polyline():
    shape = LShape(3, 3, 2, 1)
    cycle = hc_lshape(shape)
    doc = render.render_svg(shape, cycle, cyclic=True)
    points = doc.split('points="')[1].split('"')[0].split()
    assert points[0] == points[-1]
    assert "<text" not in doc
