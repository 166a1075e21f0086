import math

import pytest

from lpath import grid, traceplan
from lpath.errors import InvalidInstance
from lpath.grid import LShape, Rect


def check_plan(items, plan):
    assert len(plan["items"]) == len(items)
    for item in plan["items"]:
        shape = grid.shape_from_json(item["shape"])
        path = [tuple(p) for p in item["path"]]
        grid.validate_path(shape, path, tuple(item["s"]), tuple(item["t"]),
                           hamiltonian=True)
    assert len(plan["jumps"]) == len(items) - 1
    assert plan["total_jump"] == pytest.approx(sum(plan["jumps"]))
    for i, jump in enumerate(plan["jumps"]):
        (tx, ty), (odx, ody) = plan["items"][i]["t"], plan["items"][i]["offset"]
        (sx, sy), (dx, dy) = plan["items"][i + 1]["s"], plan["items"][i + 1]["offset"]
        assert jump == pytest.approx(
            math.hypot(tx + odx - sx - dx, ty + ody - sy - dy))


def test_single_shape_zero_jump():
    plan = traceplan.plan_trace([(LShape(3, 3, 1, 1), (0, 0))])
    check_plan([None], plan)
    assert plan["total_jump"] == 0


def test_adjacent_copies_jump_one():
    items = [(LShape(3, 3, 1, 1), (0, 0)), (LShape(3, 3, 1, 1), (3, 0))]
    plan = traceplan.plan_trace(items)
    check_plan(items, plan)
    assert plan["total_jump"] == 1.0


def test_beats_fixed_corner_baseline():
    items = [(LShape(4, 3, 2, 1), (0, 0)),
             (LShape(3, 4, 1, 2), (6, 1)),
             (Rect(3, 3), (1, 5))]
    plan = traceplan.plan_trace(items)
    check_plan(items, plan)
    naive = 0.0
    prev = None
    for shape, (dx, dy) in items:
        if prev is not None:
            naive += math.hypot(prev[0] - (1 + dx), prev[1] - (1 + dy))
        prev = (shape.m + dx, shape.n + dy)
    assert plan["total_jump"] <= naive


def test_forced_endpoints_still_planned():
    # both degree-one vertices must be the trace endpoints of this shape
    items = [(LShape(3, 3, 2, 2), (0, 0)), (Rect(2, 2), (4, 0))]
    plan = traceplan.plan_trace(items)
    check_plan(items, plan)
    assert {tuple(plan["items"][0]["s"]), tuple(plan["items"][0]["t"])} == \
        {(1, 1), (3, 3)}


def test_longer_chain_is_consistent():
    items = [(Rect(4, 4), (0, 0)), (LShape(5, 4, 2, 2), (5, 1)),
             (Rect(2, 5), (11, 0)), (LShape(4, 5, 3, 1), (5, 6))]
    plan = traceplan.plan_trace(items)
    check_plan(items, plan)


def test_rejects_bad_placements():
    with pytest.raises(InvalidInstance):
        traceplan.plan_trace([])
    with pytest.raises(InvalidInstance):
        traceplan.plan_trace([(Rect(3, 3), (0, 0)), (Rect(3, 3), (2, 0))])
