"""Greedy restarts, crossing detection and the uncross-until-simple TSP driver."""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from gaptour.gap import GapInstance, Tour, canonicalize, make_tour
from gaptour.geometry import proper_crossing, segments_intersect_many

POLICIES = ("greedy", "random", "mixed")

# walkers advanced together by one vectorised pass
CHUNK = 4096


@dataclass(frozen=True)
class GreedyConfig:
    restarts: int = 200
    step_policy: str = "greedy"
    mixed_greedy_probability: float = 0.5
    rng_seed: int = 0

    def __post_init__(self):
        if self.restarts < 1:
            raise ValueError("restarts must be >= 1")
        if self.step_policy not in POLICIES:
            raise ValueError(f"step_policy must be one of {POLICIES}")
        if not 0.0 <= self.mixed_greedy_probability <= 1.0:
            raise ValueError("mixed_greedy_probability must lie in [0, 1]")
        if not 0 <= self.rng_seed < 2**64:
            raise ValueError("rng_seed must be a 64-bit unsigned integer")


@dataclass(frozen=True)
class Crossing:
    """Tour positions i < j whose edges (i, i+1) and (j, j+1 mod n) intersect."""

    i: int
    j: int


def _walk(C: np.ndarray, count: int, config: GreedyConfig, rng: np.random.Generator):
    n = C.shape[0]
    rows = np.arange(count)
    cur = rng.integers(0, n, count)
    start = cur.copy()
    visited = np.zeros((count, n), dtype=bool)
    visited[rows, cur] = True
    order = np.empty((count, n), dtype=np.int64)
    order[:, 0] = cur
    total = np.zeros(count)
    policy = config.step_policy
    for step in range(1, n):
        masked = np.where(visited, np.inf, C[cur])
        keys = rng.random((count, n))
        if policy == "random":
            cand = ~visited
        else:
            low = masked.min(axis=1, keepdims=True)
            cand = ~visited & (masked == low)
            if policy == "mixed":
                coin = rng.random(count) >= config.mixed_greedy_probability
                cand[coin] = ~visited[coin]
        keys[~cand] = 2.0
        nxt = keys.argmin(axis=1)
        total += C[cur, nxt]
        visited[rows, nxt] = True
        order[:, step] = nxt
        cur = nxt
    total += C[cur, start]
    return total, order


def greedy_tour(
    instance: GapInstance,
    config: GreedyConfig = GreedyConfig(),
    incumbent: Optional[Tour] = None,
    stream: int = 0,
) -> Tour:
    """Best of ``config.restarts`` randomised nearest-neighbour constructions.

    Each restart starts from a uniformly random vertex and extends the path by
    the cheapest unvisited vertex (ties broken uniformly), a uniformly random
    unvisited vertex, or a per-step coin flip between the two.  The result is
    never worse than ``incumbent``.  ``stream`` selects an independent random
    stream for the same seed, so repeated calls can be decorrelated.
    """
    C = instance.cost
    best_cost = math.inf
    best_order = None
    done = 0
    chunk_index = 0
    while done < config.restarts:
        count = min(CHUNK, config.restarts - done)
        rng = np.random.default_rng([config.rng_seed, stream, chunk_index])
        total, order = _walk(C, count, config, rng)
        k = int(np.argmin(total))
        if best_order is None or total[k] < best_cost:
            best_cost = float(total[k])
            best_order = order[k]
        done += count
        chunk_index += 1
    tour = make_tour(best_order, instance)
    if incumbent is not None and incumbent.cost <= tour.cost:
        return incumbent
    return tour


def _require_planar(instance: GapInstance):
    if not instance.is_planar:
        raise ValueError("crossing machinery needs 2D coordinates")


def _edge_endpoints(tour: Tour, instance: GapInstance):
    idx = np.asarray(tour.order)
    P = instance.coords
    return P[idx], P[np.roll(idx, -1)]


def _crossing_mask(a: np.ndarray, b: np.ndarray, i: int) -> np.ndarray:
    """Which later edges j >= i+2 intersect edge i (wrap neighbour excluded)."""
    n = len(a)
    js = np.arange(i + 2, n)
    if i == 0:
        js = js[js != n - 1]
    if js.size == 0:
        return js, np.zeros(0, dtype=bool)
    hit = segments_intersect_many(a[i], b[i], a[js], b[js])
    return js, hit


def find_crossing(tour: Tour, instance: GapInstance) -> Optional[Crossing]:
    """First intersecting pair of non-adjacent edges in (i, j) order, or None."""
    _require_planar(instance)
    a, b = _edge_endpoints(tour, instance)
    for i in range(len(a) - 2):
        js, hit = _crossing_mask(a, b, i)
        if hit.any():
            return Crossing(i, int(js[np.argmax(hit)]))
    return None


def all_crossings(tour: Tour, instance: GapInstance) -> list[Crossing]:
    """Every intersecting pair of non-adjacent edges."""
    _require_planar(instance)
    a, b = _edge_endpoints(tour, instance)
    found = []
    for i in range(len(a) - 2):
        js, hit = _crossing_mask(a, b, i)
        found.extend(Crossing(i, int(j)) for j in js[hit])
    return found


def is_degenerate(tour: Tour, crossing: Crossing, instance: GapInstance) -> bool:
    """True when the two edges touch or overlap instead of crossing properly."""
    n = len(tour.order)
    o = tour.order
    P = instance.coords
    return not proper_crossing(P[o[crossing.i]], P[o[crossing.i + 1]],
                               P[o[crossing.j]], P[o[(crossing.j + 1) % n]])


def uncross(tour: Tour, crossing: Crossing, instance: GapInstance) -> Tour:
    """Reverse positions i+1..j so v_i joins v_j and v_{i+1} joins v_{j+1}."""
    n = len(tour.order)
    i, j = crossing.i, crossing.j
    if not (0 <= i and j <= n - 1 and j >= i + 2) or (i == 0 and j == n - 1):
        raise ValueError(f"invalid crossing positions ({i}, {j}) for n = {n}")
    o = tour.order
    order = o[: i + 1] + o[i + 1 : j + 1][::-1] + o[j + 1 :]
    return make_tour(order, instance)


@dataclass
class RoundRecord:
    round: int
    greedy_cost: float
    crossing: Optional[Crossing]
    cost: float


@dataclass
class TspRun:
    tour: Tour
    log: list[RoundRecord] = field(default_factory=list)
    stopped_by: str = "simple"

    @property
    def rounds(self) -> int:
        return len(self.log)

    @property
    def round_costs(self) -> list[float]:
        return [r.cost for r in self.log]


def solve_tsp(
    instance: GapInstance,
    config: GreedyConfig = GreedyConfig(),
    max_rounds: Optional[int] = None,
    incumbent: Optional[Tour] = None,
) -> TspRun:
    """Greedy restarts then uncrossing until the cycle is a simple closed curve.

    Each round reruns the greedy restarts against the incumbent, canonicalises
    it and removes the first crossing found.  The loop stops when no crossing
    remains (``stopped_by == "simple"``) or after ``max_rounds`` rounds
    (default ``10 * n``).  Only planar euclidean instances are accepted since
    uncrossing is guaranteed to shorten the cycle only under that metric.
    """
    if instance.metric != "euclidean":
        raise ValueError(
            f"solve_tsp needs a euclidean instance, got metric {instance.metric!r}"
        )
    _require_planar(instance)
    if max_rounds is None:
        max_rounds = 10 * instance.n
    if max_rounds < 1:
        raise ValueError("max_rounds must be positive")
    run = TspRun(tour=incumbent, stopped_by="max_rounds")
    for r in range(max_rounds):
        tour = canonicalize(greedy_tour(instance, config, run.tour, stream=r))
        greedy_cost = tour.cost
        crossing = find_crossing(tour, instance)
        if crossing is not None:
            tour = uncross(tour, crossing, instance)
        run.tour = tour
        run.log.append(RoundRecord(r + 1, greedy_cost, crossing, tour.cost))
        if crossing is None:
            run.stopped_by = "simple"
            break
    return run
