import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lpath import grid, lshape, oracle
from lpath.errors import InvalidInstance, NoPathExists
from lpath.grid import LShape
from lpath.isometry import ANTIDIAG


def small_lshapes(max_vertices):
    out = []
    for m in range(2, max_vertices + 1):
        for n in range(2, max_vertices + 1):
            for k in range(1, m):
                for l in range(1, n):
                    if m * n - k * l <= max_vertices:
                        out.append(LShape(m, n, k, l))
    return out


def blocked(shape, s, t):
    return (lshape.satisfies_f1_lshape(shape, s, t)
            or lshape.satisfies_f4(shape, s, t)
            or lshape.satisfies_f5(shape, s, t))


# ---------------------------------------------------------------------------
# degree-one vertices and the existence conditions

def test_degree_one_vertices_match_brute_force():
    for shape in small_lshapes(16):
        expect = sorted(v for v in grid.vertices(shape)
                        if grid.degree(shape, v) == 1)
        assert sorted(lshape.degree_one_vertices(shape)) == expect, shape


def test_f3_examples():
    assert lshape.satisfies_f3(LShape(3, 4, 2, 2))
    assert lshape.satisfies_f3(LShape(4, 3, 2, 2))
    assert not lshape.satisfies_f3(LShape(4, 4, 2, 2))


def test_f4_examples():
    assert lshape.satisfies_f4(LShape(3, 4, 2, 2), (1, 3), (3, 4))
    # the only degree-1 vertex is an endpoint here
    assert not lshape.satisfies_f4(LShape(3, 4, 2, 2), (1, 1), (3, 4))
    shape = LShape(4, 4, 2, 2)
    for s, t in itertools.permutations(grid.vertices(shape), 2):
        assert not lshape.satisfies_f4(shape, s, t)


def test_f5_examples():
    shape = LShape(3, 3, 2, 1)
    assert lshape.satisfies_f5(shape, (1, 2), (2, 3))
    assert lshape.satisfies_f5(shape, (2, 3), (1, 2))
    assert lshape.satisfies_f5(shape, (1, 3), (2, 2))
    assert not lshape.satisfies_f5(shape, (1, 1), (2, 3))


def test_f5_covers_antidiagonal_twin():
    shape = LShape(3, 3, 2, 1)
    twin = ANTIDIAG.apply_shape(shape)
    for s, t in [((1, 2), (2, 3)), ((1, 3), (2, 2))]:
        si = ANTIDIAG.apply_point(shape, s)
        ti = ANTIDIAG.apply_point(shape, t)
        assert lshape.satisfies_f5(twin, si, ti), (si, ti)


# ---------------------------------------------------------------------------
# Hamiltonian cycles

def test_hc_triangle():
    assert lshape.hc_lshape(LShape(2, 2, 1, 1)) == [(1, 1), (1, 2), (2, 2)]


def test_hc_seven_vertex():
    shape = LShape(3, 3, 2, 1)
    cyc = lshape.hc_lshape(shape)
    assert len(cyc) == 7
    grid.validate_cycle(shape, cyc, hamiltonian=True)


def test_hc_rejects_degree_one():
    with pytest.raises(NoPathExists) as exc:
        lshape.hc_lshape(LShape(3, 4, 2, 2))
    assert exc.value.condition == "F3"


def test_hc_exhaustive_against_oracle():
    for shape in small_lshapes(16):
        f3 = lshape.satisfies_f3(shape)
        assert oracle.has_hamiltonian_cycle(shape) == (not f3), shape
        if f3:
            with pytest.raises(NoPathExists):
                lshape.hc_lshape(shape)
        else:
            grid.validate_cycle(shape, lshape.hc_lshape(shape),
                                hamiltonian=True)


def test_hc_larger_shapes():
    for shape in [LShape(10, 9, 4, 5), LShape(12, 12, 6, 6),
                  LShape(9, 3, 1, 2), LShape(3, 9, 2, 1),
                  LShape(8, 8, 7, 1), LShape(8, 8, 1, 7),
                  LShape(15, 4, 13, 2), LShape(4, 15, 2, 13)]:
        grid.validate_cycle(shape, lshape.hc_lshape(shape), hamiltonian=True)


# ---------------------------------------------------------------------------
# Hamiltonian paths

def test_hp_exhaustive_against_oracle():
    # acceptance covers the full desk-scale bound; keep the unit sweep lean
    for shape in small_lshapes(12):
        for s, t in itertools.permutations(grid.vertices(shape), 2):
            expect = oracle.has_hamiltonian_path(shape, s, t)
            assert blocked(shape, s, t) == (not expect), (shape, s, t)
            if expect:
                p = lshape.hp_lshape(shape, s, t)
                err = grid.check_path(shape, p, s, t, hamiltonian=True)
                assert err is None, (shape, s, t, err)
            else:
                with pytest.raises(NoPathExists):
                    lshape.hp_lshape(shape, s, t)


def test_hp_small_examples():
    shape = LShape(3, 3, 1, 1)
    p = lshape.hp_lshape(shape, (1, 1), (3, 3))
    assert len(p) == 8
    grid.validate_path(shape, p, (1, 1), (3, 3), hamiltonian=True)

    shape = LShape(4, 4, 2, 2)
    p = lshape.hp_lshape(shape, (1, 4), (2, 4))
    grid.validate_path(shape, p, (1, 4), (2, 4), hamiltonian=True)

    shape = LShape(5, 4, 2, 1)
    p = lshape.hp_lshape(shape, (4, 2), (5, 3))
    grid.validate_path(shape, p, (4, 2), (5, 3), hamiltonian=True)


def test_hp_reports_condition_names():
    with pytest.raises(NoPathExists) as exc:
        lshape.hp_lshape(LShape(3, 3, 2, 1), (1, 2), (2, 3))
    assert exc.value.condition == "F5"
    with pytest.raises(NoPathExists) as exc:
        lshape.hp_lshape(LShape(3, 4, 2, 2), (1, 3), (3, 4))
    assert exc.value.condition == "F4"


def test_hp_pinned_arm_edge():
    # the thin-arm piece of L(5,4,2,1), (4,2)->(5,3): the pinned edge is the
    # splice point for the later merge, so assert it on the sub-path itself
    shape = LShape(3, 4, 2, 1)
    p = lshape.hp_lshape(shape, (2, 2), (3, 3), require_rw_edge=True)
    grid.validate_path(shape, p, (2, 2), (3, 3), hamiltonian=True)
    assert grid.has_edge(p, (1, 1), (1, 2))


def test_hp_pinned_edge_outside_regime():
    with pytest.raises(InvalidInstance):
        lshape.hp_lshape(LShape(5, 5, 2, 2), (1, 1), (4, 4),
                         require_rw_edge=True)
    with pytest.raises(InvalidInstance):
        lshape.hp_lshape(LShape(4, 6, 3, 1), (1, 1), (2, 3),
                         require_rw_edge=True)


def test_hp_larger_shapes():
    random.seed(23)
    for shape in [LShape(10, 9, 4, 5), LShape(12, 12, 6, 6),
                  LShape(9, 12, 3, 4), LShape(20, 20, 19, 19),
                  LShape(11, 5, 9, 1), LShape(5, 11, 1, 9),
                  LShape(13, 7, 6, 5)]:
        pairs = list(itertools.permutations(grid.vertices(shape), 2))
        for s, t in random.sample(pairs, 60):
            if blocked(shape, s, t):
                with pytest.raises(NoPathExists):
                    lshape.hp_lshape(shape, s, t)
            else:
                p = lshape.hp_lshape(shape, s, t)
                err = grid.check_path(shape, p, s, t, hamiltonian=True)
                assert err is None, (shape, s, t, err)


@settings(max_examples=40, deadline=None)
@given(st.integers(3, 8), st.integers(3, 8), st.data())
def test_hp_antidiagonal_coherence(m, n, data):
    k = data.draw(st.integers(1, m - 1))
    l = data.draw(st.integers(1, n - 1))
    shape = LShape(m, n, k, l)
    vs = grid.vertices(shape)
    s = data.draw(st.sampled_from(vs))
    t = data.draw(st.sampled_from([v for v in vs if v != s]))
    twin = ANTIDIAG.apply_shape(shape)
    si = ANTIDIAG.apply_point(shape, s)
    ti = ANTIDIAG.apply_point(shape, t)
    try:
        lshape.hp_lshape(shape, s, t)
        ok = True
    except NoPathExists:
        ok = False
    try:
        lshape.hp_lshape(twin, si, ti)
        ok_twin = True
    except NoPathExists:
        ok_twin = False
    assert ok == ok_twin
