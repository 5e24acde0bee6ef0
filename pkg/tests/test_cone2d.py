import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bvass.cone2d import (Cone2, clip_to_quadrant, conP_formula, is_v_stable, span,
                          stabilize)
from oracles import in_cone_exact

vec = st.tuples(st.integers(-4, 4), st.integers(-4, 4))
S = Cone2.sector


@pytest.mark.parametrize("dirs, expected", [
    ([], Cone2.zero()),
    ([(0, 0)], Cone2.zero()),
    ([(2, 4)], Cone2.ray((1, 2))),
    ([(2, 1), (1, 2), (-3, -1)], S((2, 1), (-3, -1))),
    ([(1, 0), (-2, 0)], Cone2.line((1, 0))),
    ([(0, -3), (0, 1)], Cone2.line((0, 1))),
    ([(1, 0), (0, 1), (-1, 0)], Cone2.halfplane((1, 0))),
    ([(1, 1), (-1, -1), (-1, 1)], Cone2.halfplane((1, 1))),
    ([(1, 0), (-1, 2), (0, -1)], Cone2.plane()),
    ([(3, -1), (1, 1)], S((3, -1), (1, 1))),
])
def test_span(dirs, expected):
    assert span(dirs) == expected


def test_sector_requires_narrow_angle():
    with pytest.raises(ValueError):
        S((0, 1), (1, 0))


@pytest.mark.parametrize("cone, expected", [
    (span([(2, -1), (1, 2)]), S((1, 0), (1, 2))),
    (span([(1, 0), (-1, 2), (0, -1)]), S((1, 0), (0, 1))),
    (Cone2.zero(), Cone2.zero()),
    (Cone2.line((1, -1)), Cone2.zero()),
    (Cone2.line((1, 0)), Cone2.ray((1, 0))),
    (Cone2.halfplane((1, -1)), S((1, 0), (0, 1))),
    (span([(-1, -1)]), Cone2.zero()),
    (span([(-1, 3), (3, -1)]), S((1, 0), (0, 1))),
])
def test_clip_to_quadrant(cone, expected):
    assert clip_to_quadrant(cone) == expected


@pytest.mark.parametrize("a, expected", [
    ([(-1, 2), (2, -1)], Cone2.zero()),
    ([(1, 1), (-1, 2), (2, -1)], S((1, 0), (0, 1))),
    ([(1, 0)], Cone2.ray((1, 0))),
    ([(0, 0), (-1, 0)], Cone2.zero()),
])
def test_conP_formula(a, expected):
    assert conP_formula(a) == expected


def test_stabilization_examples():
    c = span([(1, 2), (2, 1)])
    assert stabilize(c, (-3, -1)) == span([(2, 1), (0, 1)])
    assert stabilize(Cone2.zero(), (1, 0)) == Cone2.ray((1, 0))
    # (2,1) - (1,1) = (1,0) is a nonnegative point outside c
    assert stabilize(c, (-1, -1)) == S((1, 0), (0, 1))
    assert is_v_stable(c, (1, 1))


def test_stabilizer_of_the_zero_cone():
    z = Cone2.zero()
    for v in [(-1, -1), (-1, 3), (2, -1), (0, 0)]:
        assert is_v_stable(z, v)
    for v in [(1, 0), (0, 2), (3, 3)]:
        assert not is_v_stable(z, v)


def test_stabilizer_of_a_sector_with_one_axis():
    c = S((2, 1), (0, 1))
    assert is_v_stable(c, (-1, 0))
    assert not is_v_stable(c, (3, -1))
    for x in range(-10, 11):
        for y in range(-10, 11):
            assert is_v_stable(c, (x, y)) == (2 * y >= x)


def test_stabilizer_of_an_axis_free_sector_is_the_sector():
    c = span([(2, 1), (1, 2)])
    for x in range(-6, 7):
        for y in range(-6, 7):
            assert is_v_stable(c, (x, y)) == ((x, y) in c)


def test_membership_matches_exact_solver():
    rng = random.Random(5)
    for _ in range(500):
        dirs = [(rng.randint(-4, 4), rng.randint(-4, 4)) for _ in range(rng.randint(0, 4))]
        c = span(dirs)
        for _ in range(20):
            p = (rng.randint(-6, 6), rng.randint(-6, 6))
            assert (p in c) == in_cone_exact(dirs, p), (dirs, p, c)


@settings(max_examples=200, deadline=None)
@given(st.lists(vec, max_size=5), st.randoms(use_true_random=False), st.integers(1, 5))
def test_span_order_and_scale_invariant(dirs, rnd, lam):
    shuffled = list(dirs)
    rnd.shuffle(shuffled)
    assert span(shuffled) == span(dirs)
    assert span([(lam * x, lam * y) for x, y in dirs]) == span(dirs)


quad_cones = st.lists(st.tuples(st.integers(0, 4), st.integers(0, 4)), max_size=3).map(span)


@settings(max_examples=300, deadline=None)
@given(quad_cones, vec, vec)
def test_stabilizer_is_closed_under_sums(c, u, v):
    if c == Cone2.zero():
        return
    if is_v_stable(c, u) and is_v_stable(c, v):
        assert is_v_stable(c, (u[0] + v[0], u[1] + v[1]))


@settings(max_examples=300, deadline=None)
@given(quad_cones, st.tuples(st.integers(0, 5), st.integers(0, 5)))
def test_nonnegative_stabilizers_are_the_cone(c, v):
    assert is_v_stable(c, v) == (v in c)


@settings(max_examples=200, deadline=None)
@given(quad_cones, vec)
def test_stabilize_stays_in_quadrant_and_grows(c, v):
    s = stabilize(c, v)
    assert s.in_quadrant()
    assert all(g in s for g in c.generators())
