"""Exhaustive self-check sweeps against the brute-force oracle.

Each sweep enumerates every shape up to a vertex budget and every
ordered endpoint pair, compares the constructive answer with the
exhaustive search, and counts mismatches instead of raising, so one
run reports the state of all sweeps at once.
"""

from __future__ import annotations

import itertools

from . import grid, lshape, oracle, rect
from .grid import LShape, Rect
from .longest import longest_path_lshape, upper_bound
from .lshape import hc_lshape, hp_lshape, satisfies_f3
from .rect import longest_len_rect, longest_path_rect


def _lshape_feasible(shape, s, t) -> bool:
    return not (lshape.satisfies_f1_lshape(shape, s, t)
                or lshape.satisfies_f4(shape, s, t)
                or lshape.satisfies_f5(shape, s, t))


def _sweep_hp(shapes, budget):
    cases = mismatches = 0
    for shape in shapes:
        for s, t in itertools.permutations(grid.vertices(shape), 2):
            cases += 1
            expect = oracle.has_hamiltonian_path(shape, s, t, budget=budget)
            if _lshape_feasible(shape, s, t) != expect:
                mismatches += 1
                continue
            if expect:
                path = hp_lshape(shape, s, t)
                if grid.check_path(shape, path, s, t, hamiltonian=True):
                    mismatches += 1
    return cases, mismatches


def _sweep_hc(shapes, budget):
    cases = mismatches = 0
    for shape in shapes:
        cases += 1
        expect = oracle.has_hamiltonian_cycle(shape, budget=budget)
        if (not satisfies_f3(shape)) != expect:
            mismatches += 1
            continue
        if expect:
            cycle = hc_lshape(shape)
            if grid.check_cycle(shape, cycle, hamiltonian=True):
                mismatches += 1
    return cases, mismatches


def _sweep_longest(shapes, budget):
    cases = mismatches = 0
    for shape in shapes:
        for s, t in itertools.permutations(grid.vertices(shape), 2):
            cases += 1
            best = oracle.longest_len(shape, s, t, budget=budget)
            path = longest_path_lshape(shape, s, t)
            ok = (grid.check_path(shape, path, s, t) is None
                  and len(path) == upper_bound(shape, s, t) == best)
            if not ok:
                mismatches += 1
    return cases, mismatches


def _sweep_rect_longest(shapes, budget):
    cases = mismatches = 0
    for shape in shapes:
        for s, t in itertools.permutations(grid.vertices(shape), 2):
            cases += 1
            best = oracle.longest_len(shape, s, t, budget=budget)
            path = longest_path_rect(shape, s, t)
            ok = (grid.check_path(shape, path, s, t) is None
                  and len(path) == longest_len_rect(shape, s, t) == best)
            if not ok:
                mismatches += 1
    return cases, mismatches


_SWEEPS = (
    ("hp-existence", LShape, _sweep_hp),
    ("hc-existence", LShape, _sweep_hc),
    ("longest-tightness", LShape, _sweep_longest),
    ("rect-longest", Rect, _sweep_rect_longest),
)


def run_selftest(max_vertices: int = 12) -> dict:
    """Run every sweep up to the given vertex budget and tabulate."""
    shapes = list(oracle.enumerate_shapes(max_vertices))
    rows = []
    for name, kind, sweep in _SWEEPS:
        mine = [s for s in shapes if isinstance(s, kind)]
        cases, mismatches = sweep(mine, max_vertices)
        rows.append({"name": name, "shapes": len(mine),
                     "cases": cases, "mismatches": mismatches})
    total = sum(r["mismatches"] for r in rows)
    return {"max_vertices": max_vertices, "rows": rows,
            "mismatches": total, "ok": total == 0}


def format_table(report: dict) -> str:
    """Fixed-width text table ending in the mismatch total."""
    lines = [f"{'sweep':<20}{'shapes':>8}{'cases':>10}{'mismatches':>12}"]
    for row in report["rows"]:
        lines.append(f"{row['name']:<20}{row['shapes']:>8}"
                     f"{row['cases']:>10}{row['mismatches']:>12}")
    lines.append(f"{report['mismatches']} mismatches "
                 f"(max_vertices={report['max_vertices']})")
    return "\n".join(lines)
