"""Instances, tours, metrics and the brute-force oracle shared by every solver.

A GAP instance is a complete graph on ``n`` vertices with a cost matrix whose
diagonal is ``+inf``.  Tours are Hamiltonian cycles stored as a vertex
permutation; the closing edge back to the first vertex is implicit.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

METRICS = ("euclidean", "max", "abs")

BRUTE_FORCE_LIMIT = 11


@dataclass(frozen=True, eq=False)
class GapInstance:
    """Complete graph with an extended-real cost matrix.

    ``coords`` is an ``(n, d)`` array (d = 2 or 3) when the instance comes from
    points; ``metric`` names how ``cost`` was derived from them.
    """

    cost: np.ndarray
    coords: np.ndarray | None = None
    metric: str = "explicit"
    name: str = ""

    def __post_init__(self):
        cost = np.array(self.cost, dtype=float)
        if cost.ndim != 2 or cost.shape[0] != cost.shape[1]:
            raise ValueError("cost matrix must be square")
        if cost.shape[0] < 3:
            raise ValueError("a GAP instance needs at least 3 vertices")
        if not np.all(np.isposinf(np.diag(cost))):
            raise ValueError("cost diagonal must be +inf")
        cost.setflags(write=False)
        object.__setattr__(self, "cost", cost)
        if self.coords is not None:
            coords = np.array(self.coords, dtype=float)
            if coords.shape[0] != cost.shape[0] or coords.shape[1] not in (2, 3):
                raise ValueError("coords must be an (n, 2) or (n, 3) array")
            coords.setflags(write=False)
            object.__setattr__(self, "coords", coords)

    @property
    def n(self) -> int:
        return self.cost.shape[0]

    @property
    def is_planar(self) -> bool:
        return self.coords is not None and self.coords.shape[1] == 2


@dataclass(frozen=True)
class Tour:
    order: tuple[int, ...]
    cost: float = field(default=math.inf, compare=False)

    def __len__(self):
        return len(self.order)

    def edges(self):
        n = len(self.order)
        return [(self.order[k], self.order[(k + 1) % n]) for k in range(n)]


def pairwise_distance(points: np.ndarray, metric: str = "euclidean") -> np.ndarray:
    diff = np.abs(points[:, None, :] - points[None, :, :])
    if metric == "euclidean":
        d = np.sqrt((diff**2).sum(axis=-1))
    elif metric == "max":
        d = diff.max(axis=-1)
    elif metric == "abs":
        d = diff.sum(axis=-1)
    else:
        raise ValueError(f"unknown metric {metric!r}; expected one of {METRICS}")
    return d


def build_instance(points, metric: str = "euclidean", name: str = "") -> GapInstance:
    """Cost matrix of pairwise ``metric`` distances with an infinite diagonal."""
    pts = np.asarray(points, dtype=float)
    if pts.ndim != 2 or pts.shape[1] not in (2, 3):
        raise ValueError("points must be 2D or 3D coordinates")
    if pts.shape[0] < 3:
        raise ValueError(f"need at least 3 points, got {pts.shape[0]}")
    if not np.all(np.isfinite(pts)):
        raise ValueError("coordinates must be finite")
    cost = pairwise_distance(pts, metric)
    np.fill_diagonal(cost, np.inf)
    return GapInstance(cost=cost, coords=pts, metric=metric, name=name)


def _check_permutation(order: Sequence[int], n: int) -> tuple[int, ...]:
    order = tuple(int(v) for v in order)
    if len(order) != n or sorted(order) != list(range(n)):
        raise ValueError(f"tour must be a permutation of 0..{n - 1}, got {order}")
    return order


def tour_cost(order: Sequence[int], instance: GapInstance) -> float:
    """Sum of the n edge costs of the cycle, closing edge included."""
    order = _check_permutation(order, instance.n)
    idx = np.asarray(order)
    return float(instance.cost[idx, np.roll(idx, -1)].sum())


def make_tour(order: Sequence[int], instance: GapInstance) -> Tour:
    order = _check_permutation(order, instance.n)
    return Tour(order, tour_cost(order, instance))


def canonical_order(order: Sequence[int]) -> tuple[int, ...]:
    order = list(order)
    k = order.index(0)
    rot = order[k:] + order[:k]
    if len(rot) > 2 and rot[1] > rot[-1]:
        rot = [rot[0]] + rot[:0:-1]
    return tuple(rot)


def canonicalize(tour: Tour) -> Tour:
    """Rotate so vertex 0 leads and orient so the second vertex < the last."""
    return Tour(canonical_order(tour.order), tour.cost)


def _permutation_chunks(n: int, size: int = 200_000):
    perms = itertools.permutations(range(1, n))
    while True:
        chunk = list(itertools.islice(perms, size))
        if not chunk:
            return
        yield np.array(chunk, dtype=np.int64)


def brute_force_optimum(
    instance: GapInstance, maximize: bool = False, limit: int = BRUTE_FORCE_LIMIT
) -> Tour:
    """Exact optimum over the (n-1)!/2 undirected cycles.

    Vertex 0 is fixed first and a cycle is kept only in the orientation whose
    second vertex is smaller than its last.  Costs within 1e-9 (relative) of
    the optimum count as ties; the lexicographically smallest order wins.
    """
    n = instance.n
    if n > limit:
        raise ValueError(f"brute force limited to n <= {limit}, got n = {n}")
    C = instance.cost
    sign = -1.0 if maximize else 1.0
    best_val = math.inf
    best_order = None
    for perms in _permutation_chunks(n):
        perms = perms[perms[:, 0] < perms[:, -1]]
        if perms.size == 0:
            continue
        vals = C[0, perms[:, 0]] + C[perms[:, -1], 0]
        vals = vals + C[perms[:, :-1], perms[:, 1:]].sum(axis=1)
        vals = sign * vals
        low = vals.min()
        tol = 1e-9 * max(1.0, abs(low)) if math.isfinite(low) else 0.0
        if best_order is None or low < best_val - tol:
            first = int(np.flatnonzero(vals <= low + tol)[0])
            best_val = float(vals[first])
            best_order = (0, *perms[first].tolist())
    return make_tour(best_order, instance)


def edge_rank_profile(tour: Tour, instance: GapInstance) -> np.ndarray:
    """Per-vertex 1-based ranks of the two tour edges within the sorted cost row.

    Returns an ``(n, 2)`` int array; row ``v`` holds the rank of the edge to the
    predecessor of ``v`` and of the edge to its successor.  Ties in a row are
    ranked by vertex index (stable sort), the diagonal is excluded.
    """
    n = instance.n
    order = _check_permutation(tour.order, n)
    rank = np.empty((n, n), dtype=np.int64)
    for v in range(n):
        row = np.argsort(instance.cost[v], kind="stable")
        rank[v, row] = np.arange(1, n + 1)
    ranks = np.zeros((n, 2), dtype=np.int64)
    for k, v in enumerate(order):
        prev_v, next_v = order[k - 1], order[(k + 1) % n]
        ranks[v] = rank[v, prev_v], rank[v, next_v]
    return ranks


def random_points(rng: np.random.Generator, n: int, dim: int = 2) -> np.ndarray:
    return rng.random((n, dim))


def all_tours(n: int) -> Iterable[tuple[int, ...]]:
    """Every undirected cycle once, in canonical form (small n only)."""
    for p in itertools.permutations(range(1, n)):
        if p[0] < p[-1]:
            yield (0, *p)
