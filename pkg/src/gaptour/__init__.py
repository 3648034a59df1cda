"""Greedy tour construction, crossing-based stop conditions, knight tours,
polygon extremal tours and SAT as binary-number matching."""

from gaptour.gap import (
    GapInstance,
    Tour,
    brute_force_optimum,
    build_instance,
    canonicalize,
    edge_rank_profile,
    make_tour,
    tour_cost,
)
from gaptour.tsp import (
    Crossing,
    GreedyConfig,
    find_crossing,
    greedy_tour,
    solve_tsp,
    uncross,
)

__all__ = [
    "Crossing",
    "GapInstance",
    "GreedyConfig",
    "Tour",
    "brute_force_optimum",
    "build_instance",
    "canonicalize",
    "edge_rank_profile",
    "find_crossing",
    "greedy_tour",
    "make_tour",
    "solve_tsp",
    "tour_cost",
    "uncross",
]

__version__ = "0.1.0"
