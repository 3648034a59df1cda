"""Regular polygons: walking the boundary is shortest, the star is longest (odd n).

    python3 demos/03_polygon_star.py
"""

from gaptour.gap import brute_force_optimum
from gaptour.polygon import (PolygonSpec, max_tour_bruteforce, min_polygon_tour,
                             polygon_instance, regular_polygon, star_order, star_tour,
                             to_one_based)

print("13-star:", " ".join(map(str, to_one_based(star_order(13), 13))))

for n in (5, 7, 9):
    s = PolygonSpec(n)
    print(f"n={n}: boundary {min_polygon_tour(s).cost:.6f}  star {star_tour(s).cost:.6f}  "
          f"brute-force max {max_tour_bruteforce(regular_polygon(s)).cost:.6f}")

# the boundary tour is also optimal for the max and abs metrics
for metric in ("max", "abs"):
    s = PolygonSpec(8)
    print(f"octagon, {metric}: boundary {min_polygon_tour(s, metric).cost:.6f}, "
          f"optimum {brute_force_optimum(polygon_instance(s, metric)).cost:.6f}")

# even n has no star; the hexagon maximum zigzags instead
best = max_tour_bruteforce(regular_polygon(PolygonSpec(6)))
print("hexagon maximum:", to_one_based(best.order, 6), f"cost {best.cost:.6f}")
