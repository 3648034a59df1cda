import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gaptour.gap import (GapInstance, Tour, all_tours, brute_force_optimum, build_instance,
                         canonical_order, canonicalize, edge_rank_profile, make_tour, tour_cost)
from gaptour.polygon import PolygonSpec, regular_polygon, star_tour


def test_unit_square_costs(square):
    assert square.cost[0, 1] == 1.0
    assert square.cost[0, 2] == pytest.approx(math.sqrt(2), abs=1e-15)


def test_max_metric_diagonal():
    inst = build_instance([(0, 0), (1, 0), (1, 1), (0, 1)], metric="max")
    assert inst.cost[0, 2] == 1.0


def test_abs_metric():
    inst = build_instance([(0, 0), (3, 4), (1, 1)], metric="abs")
    assert inst.cost[0, 1] == 7.0


@pytest.mark.parametrize("metric", ["euclidean", "max", "abs"])
def test_diagonal_is_inf(metric):
    inst = build_instance(np.random.default_rng(0).random((6, 2)), metric)
    assert np.all(np.isposinf(np.diag(inst.cost)))


def test_three_d_points_accepted():
    inst = build_instance(np.random.default_rng(0).random((5, 3)))
    assert inst.n == 5 and not inst.is_planar


@pytest.mark.parametrize("pts", [[(0, 0), (1, 1)], [(0, 0), (1, np.nan), (2, 2)],
                                 [(0, 0), (np.inf, 1), (2, 2)]])
def test_build_instance_errors(pts):
    with pytest.raises(ValueError):
        build_instance(pts)


def test_instance_rejects_finite_diagonal():
    with pytest.raises(ValueError):
        GapInstance(np.ones((3, 3)))


def test_instance_is_read_only(square):
    with pytest.raises(ValueError):
        square.cost[0, 1] = 5.0


def test_tour_cost_perimeter_and_crossed(square):
    assert tour_cost((0, 1, 2, 3), square) == 4.0
    assert tour_cost((0, 2, 1, 3), square) == pytest.approx(2 + 2 * math.sqrt(2), rel=1e-15)


@pytest.mark.parametrize("order", [(0, 1, 1, 3), (0, 1, 2), (0, 1, 2, 4)])
def test_tour_cost_rejects_non_permutation(square, order):
    with pytest.raises(ValueError):
        tour_cost(order, square)


def test_tour_cost_infinite_edge():
    C = np.array([[np.inf, 1, np.inf], [1, np.inf, 1], [np.inf, 1, np.inf]])
    assert tour_cost((0, 1, 2), GapInstance(C)) == math.inf


@settings(max_examples=50, deadline=None)
@given(st.integers(3, 9), st.integers(0, 2**32 - 1), st.integers(0, 8), st.booleans())
def test_tour_cost_rotation_reversal_invariant(n, seed, shift, flip):
    rng = np.random.default_rng(seed)
    inst = build_instance(rng.random((n, 2)))
    order = list(rng.permutation(n))
    other = order[shift % n:] + order[: shift % n]
    if flip:
        other = other[::-1]
    assert tour_cost(other, inst) == pytest.approx(tour_cost(order, inst), rel=1e-12)


def test_canonicalize_example():
    assert canonical_order((2, 0, 1, 3)) == (0, 1, 3, 2)


@settings(max_examples=50, deadline=None)
@given(st.permutations(list(range(7))))
def test_canonicalize_idempotent_and_reversal(order):
    c = canonical_order(order)
    assert canonical_order(c) == c
    assert canonical_order(order[::-1]) == c
    assert c[0] == 0 and c[1] < c[-1]


def test_canonicalize_keeps_cost(square):
    t = make_tour((2, 1, 0, 3), square)
    assert canonicalize(t).cost == t.cost


def test_brute_force_square(square):
    best = brute_force_optimum(square)
    assert best.order == (0, 1, 2, 3) and best.cost == 4.0


def test_brute_force_pentagon_is_polygon():
    inst = build_instance(regular_polygon(PolygonSpec(5)))
    assert brute_force_optimum(inst).order == (0, 1, 2, 3, 4)


def test_brute_force_maximize_pentagon_is_star():
    spec = PolygonSpec(5)
    inst = build_instance(regular_polygon(spec))
    tours = [make_tour(o, inst) for o in all_tours(5)]
    assert len(tours) == 12
    top = max(t.cost for t in tours)
    best = brute_force_optimum(inst, maximize=True)
    assert best.cost == pytest.approx(top, rel=1e-12)
    assert best.cost == pytest.approx(star_tour(spec).cost, rel=1e-12)


def test_brute_force_limit():
    inst = build_instance(np.random.default_rng(1).random((12, 2)))
    with pytest.raises(ValueError):
        brute_force_optimum(inst)


@pytest.mark.parametrize("n", [4, 5, 6, 7])
def test_brute_force_matches_itertools(n):
    inst = build_instance(np.random.default_rng(n).random((n, 2)))
    full = min(tour_cost((0, *p), inst) for p in itertools.permutations(range(1, n)))
    assert brute_force_optimum(inst).cost == pytest.approx(full, rel=1e-12)


def test_brute_force_tie_break_is_lexicographic():
    # all tours cost the same: every off-diagonal entry is 1
    C = np.ones((5, 5))
    np.fill_diagonal(C, np.inf)
    assert brute_force_optimum(GapInstance(C)).order == (0, 1, 2, 3, 4)


def test_rank_profile_square(square):
    perimeter = edge_rank_profile(make_tour((0, 1, 2, 3), square), square)
    assert set(perimeter.ravel()) <= {1, 2}
    crossed = edge_rank_profile(make_tour((0, 2, 1, 3), square), square)
    assert (crossed == 3).any()


def test_rank_profile_nearest_neighbour_is_one():
    inst = build_instance([(0, 0), (1, 0), (5, 0), (5, 3), (0, 3)])
    ranks = edge_rank_profile(make_tour((0, 1, 2, 3, 4), inst), inst)
    assert ranks[0, 1] == 1  # 0 -> 1 is the closest neighbour of vertex 0
    assert ranks.shape == (5, 2)


def test_symmetric_and_triangle_inequality():
    rng = np.random.default_rng(3)
    for metric in ("euclidean", "max", "abs"):
        C = build_instance(rng.random((12, 2)), metric).cost
        D = np.where(np.isinf(C), 0, C)
        assert np.array_equal(D, D.T)
        for _ in range(200):
            i, j, k = rng.choice(12, 3, replace=False)
            assert D[i, k] <= D[i, j] + D[j, k] + 1e-12


def test_tour_equality_ignores_cost():
    assert Tour((0, 1, 2), 1.0) == Tour((0, 1, 2), 2.0)
