"""Regular polygons: the identity-order minimum tour and the odd-n star maximum."""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from gaptour.gap import (BRUTE_FORCE_LIMIT, GapInstance, Tour, brute_force_optimum,
                         build_instance, make_tour)


@dataclass(frozen=True)
class PolygonSpec:
    n: int
    r: float = 1.0

    def __post_init__(self):
        if int(self.n) != self.n or self.n < 3:
            raise ValueError("polygon needs an integer n >= 3")
        if not (math.isfinite(self.r) and self.r > 0):
            raise ValueError("radius must be finite and positive")


def regular_polygon(spec: PolygonSpec) -> np.ndarray:
    """Vertex i at angle 2*pi*i/n on the circle of radius r."""
    t = 2 * np.pi * np.arange(spec.n) / spec.n
    return np.column_stack([spec.r * np.cos(t), spec.r * np.sin(t)])


def polygon_instance(spec: PolygonSpec, metric: str = "euclidean") -> GapInstance:
    return build_instance(regular_polygon(spec), metric, name=f"polygon{spec.n}")


def min_polygon_tour(spec: PolygonSpec, metric: str = "euclidean") -> Tour:
    # walking the boundary is optimal, nothing to search
    return make_tour(range(spec.n), polygon_instance(spec, metric))


def star_order(n: int) -> tuple[int, ...]:
    """0-based star sequence: step k = (n - 1) / 2 around the polygon from vertex 1."""
    if n % 2 == 0 or n < 5:
        raise ValueError(f"a star tour needs odd n >= 5, got n = {n}")
    k = (n - 1) // 2
    return tuple((1 + i * k) % n for i in range(n))


def star_tour(spec: PolygonSpec, metric: str = "euclidean") -> Tour:
    return make_tour(star_order(spec.n), polygon_instance(spec, metric))


def to_one_based(order, n: int, close: bool = True) -> list[int]:
    """Labels 1..n with vertex 0 printed as n; optionally repeat the first label."""
    labels = [v if v else n for v in order]
    return labels + labels[:1] if close else labels


def max_tour_bruteforce(points, metric: str = "euclidean", limit: int = BRUTE_FORCE_LIMIT) -> Tour:
    return brute_force_optimum(build_instance(points, metric), maximize=True, limit=limit)
