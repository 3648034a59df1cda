import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gaptour.geometry import (orient, orient_many, proper_crossing, segments_intersect,
                              segments_intersect_many, signed_area)


def test_orient_basic():
    assert orient((0, 0), (1, 0), (0, 1)) == 1
    assert orient((0, 0), (1, 0), (0, -1)) == -1
    assert orient((0, 0), (1, 1), (2, 2)) == 0


def test_orient_near_degenerate_is_exact():
    # classic failure case for naive float orientation
    a = (0.5, 0.5)
    b = (12.0, 12.0)
    c = (24.0, 24.0)
    for k in range(64):
        p = (a[0] + k * 2.0**-53, a[1])
        assert orient(p, b, c) == orient_many(p, b, c)
    assert orient((0.1, 0.1), (0.2, 0.2), (0.3, 0.3)) in (-1, 0, 1)
    # three exactly collinear doubles
    assert orient((1.0, 2.0), (3.0, 6.0), (5.0, 10.0)) == 0


def test_segments_cross():
    assert segments_intersect((0, 0), (1, 1), (0, 1), (1, 0))
    assert not segments_intersect((0, 0), (1, 0), (0, 1), (1, 1))


def test_touching_and_overlap_count():
    # endpoint on the other segment's interior
    assert segments_intersect((0, 0), (2, 0), (1, 0), (1, 5))
    assert not proper_crossing((0, 0), (2, 0), (1, 0), (1, 5))
    # collinear overlap
    assert segments_intersect((0, 0), (2, 0), (1, 0), (3, 0))
    # collinear but disjoint
    assert not segments_intersect((0, 0), (1, 0), (2, 0), (3, 0))


@settings(max_examples=200, deadline=None)
@given(st.lists(st.integers(-5, 5), min_size=8, max_size=8))
def test_vectorised_matches_scalar(v):
    p1, p2, q1, q2 = (v[0], v[1]), (v[2], v[3]), (v[4], v[5]), (v[6], v[7])
    assert bool(segments_intersect_many(p1, p2, q1, q2)) == segments_intersect(p1, p2, q1, q2)


def test_signed_area_orientation():
    sq = [(0, 0), (1, 0), (1, 1), (0, 1)]
    assert signed_area(sq) == pytest.approx(1.0)
    assert signed_area(sq[::-1]) == pytest.approx(-1.0)


def test_orient_many_shapes():
    a = np.zeros((3, 2))
    b = np.tile([1.0, 0.0], (3, 1))
    c = np.array([[0, 1], [0, -1], [2, 0]], float)
    assert orient_many(a, b, c).tolist() == [1, -1, 0]
