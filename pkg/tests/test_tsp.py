import math

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from conftest import convex_points
from gaptour.gap import brute_force_optimum, build_instance, canonical_order, make_tour
from gaptour.polygon import PolygonSpec, regular_polygon
from gaptour.tsp import (Crossing, GreedyConfig, all_crossings, find_crossing, greedy_tour,
                         is_degenerate, solve_tsp, uncross)


def test_greedy_square(square):
    for seed in range(5):
        t = greedy_tour(square, GreedyConfig(restarts=10, rng_seed=seed))
        assert t.cost == 4.0


def test_greedy_keeps_incumbent(square):
    best = brute_force_optimum(square)
    for policy in ("greedy", "random", "mixed"):
        t = greedy_tour(square, GreedyConfig(restarts=3, step_policy=policy), incumbent=best)
        assert t.cost == best.cost


def test_greedy_never_worse_than_incumbent():
    inst = build_instance(np.random.default_rng(0).random((15, 2)))
    inc = greedy_tour(inst, GreedyConfig(restarts=500, rng_seed=1))
    t = greedy_tour(inst, GreedyConfig(restarts=1, step_policy="random", rng_seed=2), incumbent=inc)
    assert t.cost <= inc.cost


def test_greedy_polygon_17():
    inst = build_instance(regular_polygon(PolygonSpec(17)))
    t = greedy_tour(inst, GreedyConfig(restarts=20))
    assert canonical_order(t.order) == tuple(range(17))


def test_greedy_reproducible_and_streams_differ():
    inst = build_instance(np.random.default_rng(5).random((30, 2)))
    cfg = GreedyConfig(restarts=5, step_policy="random", rng_seed=9)
    assert greedy_tour(inst, cfg).order == greedy_tour(inst, cfg).order
    assert greedy_tour(inst, cfg, stream=0).order != greedy_tour(inst, cfg, stream=1).order


def test_greedy_spans_chunks():
    inst = build_instance(np.random.default_rng(5).random((8, 2)))
    t = greedy_tour(inst, GreedyConfig(restarts=5000, step_policy="random"))
    assert t.cost == pytest.approx(brute_force_optimum(inst).cost, rel=1e-12)


@pytest.mark.parametrize("kw", [dict(restarts=0), dict(step_policy="lazy"),
                                dict(mixed_greedy_probability=1.5), dict(rng_seed=-1)])
def test_greedy_config_validation(kw):
    with pytest.raises(ValueError):
        GreedyConfig(**kw)


def test_walk_is_nearest_neighbour():
    # from vertex 0 on a line the greedy walk goes 0,1,2,3 and closes
    inst = build_instance([(0, 0), (1, 0), (2.5, 0), (4.5, 0.1)])
    t = greedy_tour(inst, GreedyConfig(restarts=50))
    assert t.cost == pytest.approx(make_tour((0, 1, 2, 3), inst).cost)


def test_find_crossing_square(square):
    assert find_crossing(make_tour((0, 1, 2, 3), square), square) is None
    assert find_crossing(make_tour((0, 2, 1, 3), square), square) == Crossing(0, 2)


def test_find_crossing_eight_city(eight_city):
    t = make_tour(range(8), eight_city)
    assert find_crossing(t, eight_city) == Crossing(1, 5)
    assert all_crossings(t, eight_city) == [Crossing(1, 5)]


def test_uncross_eight_city(eight_city):
    t = make_tour(range(8), eight_city)
    u = uncross(t, Crossing(1, 5), eight_city)
    # 1-based: v1 v2 v6 v5 v4 v3 v7 v8
    assert [v + 1 for v in u.order] == [1, 2, 6, 5, 4, 3, 7, 8]
    assert u.cost < t.cost
    assert find_crossing(u, eight_city) is None


def test_uncross_square(square):
    t = make_tour((0, 2, 1, 3), square)
    u = uncross(t, Crossing(0, 2), square)
    assert u.order == (0, 1, 2, 3) and u.cost == 4.0


def test_uncross_involution():
    rng = np.random.default_rng(2)
    inst = build_instance(rng.random((10, 2)))
    t = make_tour(rng.permutation(10), inst)
    c = Crossing(2, 7)
    assert uncross(uncross(t, c, inst), c, inst).order == t.order


@pytest.mark.parametrize("i,j", [(0, 1), (3, 2), (0, 3), (-1, 2), (1, 4)])
def test_uncross_invalid_positions(square, i, j):
    t = make_tour((0, 1, 2, 3), square)
    with pytest.raises(ValueError):
        uncross(t, Crossing(i, j), square)


def test_touching_counts_as_crossing():
    # vertex 3 sits on the interior of edge 0-1
    inst = build_instance([(0, 0), (2, 0), (2, 2), (1, 0), (0, 2)])
    t = make_tour((0, 1, 2, 3, 4), inst)
    c = find_crossing(t, inst)
    assert c is not None and is_degenerate(t, c, inst)


def test_crossing_needs_planar():
    inst = build_instance(np.random.default_rng(0).random((5, 3)))
    with pytest.raises(ValueError):
        find_crossing(make_tour(range(5), inst), inst)


def test_solve_tsp_rejects_non_euclidean():
    inst = build_instance(np.random.default_rng(0).random((6, 2)), metric="max")
    with pytest.raises(ValueError):
        solve_tsp(inst)


def test_max_metric_uncross_can_fail_to_descend():
    # under the max metric the "diagonals" of this quadrilateral are no longer
    # than its sides, so removing the crossing does not shorten the tour
    inst = build_instance([(0, 0), (2, 0), (2, 1), (0, 1)], metric="max")
    crossed = make_tour((0, 2, 1, 3), inst)
    c = find_crossing(crossed, inst)
    assert c is not None
    assert uncross(crossed, c, inst).cost >= crossed.cost


def test_solve_tsp_monotone_and_simple():
    rng = np.random.default_rng(11)
    for _ in range(10):
        inst = build_instance(rng.random((25, 2)))
        run = solve_tsp(inst, GreedyConfig(restarts=20, rng_seed=int(rng.integers(1 << 30))))
        costs = run.round_costs
        assert all(b <= a + 1e-12 for a, b in zip(costs, costs[1:]))
        if run.stopped_by == "simple":
            assert find_crossing(run.tour, inst) is None


def test_solve_tsp_uncross_strictly_descends():
    rng = np.random.default_rng(12)
    inst = build_instance(rng.random((40, 2)))
    run = solve_tsp(inst, GreedyConfig(restarts=5, step_policy="random"))
    for rec in run.log:
        if rec.crossing is not None:
            assert rec.cost < rec.greedy_cost - 1e-12


def test_solve_tsp_max_rounds():
    rng = np.random.default_rng(4)
    inst = build_instance(rng.random((60, 2)))
    run = solve_tsp(inst, GreedyConfig(restarts=1, step_policy="random"), max_rounds=2)
    assert run.rounds == 2 and run.stopped_by == "max_rounds"


def test_solve_tsp_polygon_17():
    inst = build_instance(regular_polygon(PolygonSpec(17)))
    run = solve_tsp(inst, GreedyConfig(restarts=20))
    assert run.stopped_by == "simple"
    assert run.tour.cost == pytest.approx(34 * math.sin(math.pi / 17), rel=1e-12)


@pytest.mark.parametrize("seed", range(5))
def test_solve_tsp_convex_is_optimal(seed):
    rng = np.random.default_rng(100 + seed)
    inst = build_instance(convex_points(rng, 9))
    run = solve_tsp(inst, GreedyConfig(restarts=10, rng_seed=seed))
    assert run.tour.cost == pytest.approx(brute_force_optimum(inst).cost, abs=1e-9)


def test_crossing_free_need_not_be_optimal():
    # necessity only: search for a simple but suboptimal tour on a small instance
    rng = np.random.default_rng(7)
    found = False
    for _ in range(50):
        inst = build_instance(rng.random((9, 2)))
        best = brute_force_optimum(inst).cost
        for _ in range(30):
            t = make_tour(rng.permutation(9), inst)
            while (c := find_crossing(t, inst)) is not None:
                t = uncross(t, c, inst)
            if t.cost > best + 1e-9:
                found = True
                break
        if found:
            break
    assert found


@settings(max_examples=25, deadline=None)
@given(st.integers(4, 9), st.integers(0, 2**32 - 1), st.sampled_from(["greedy", "random", "mixed"]))
def test_brute_force_lower_bounds_solvers(n, seed, policy):
    inst = build_instance(np.random.default_rng(seed).random((n, 2)))
    best = brute_force_optimum(inst).cost
    cfg = GreedyConfig(restarts=3, step_policy=policy, rng_seed=seed)
    assert greedy_tour(inst, cfg).cost >= best - 1e-12
    assert solve_tsp(inst, cfg).tour.cost >= best - 1e-12
