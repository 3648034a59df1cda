"""Drawing a tour and two-colouring it: simple curves leave exactly two faces.

Writes PPM images of a simple and a crossed tour.

    python3 demos/05_raster_check.py [out_dir]
"""

import sys
from pathlib import Path

import numpy as np

from gaptour.gap import build_instance, make_tour
from gaptour.plots import ppm_image
from gaptour.raster import adequate_resolution, two_color_raster
from gaptour.tsp import GreedyConfig, find_crossing, solve_tsp

here = Path(__file__).resolve().parent
out = Path(sys.argv[1]) if len(sys.argv) > 1 else here / "out"
out.mkdir(exist_ok=True)

inst = build_instance(np.random.default_rng(3).random((12, 2)))
good = solve_tsp(inst, GreedyConfig(rng_seed=0)).tour
bad = make_tour(np.random.default_rng(4).permutation(12), inst)

for name, tour in (("simple", good), ("crossed", bad)):
    k = adequate_resolution(tour, inst)
    res = two_color_raster(tour, inst, k)
    print(f"{name:8s} k={k:3d}  raster says {res.verdict:7s}  geometry says "
          f"{'simple' if find_crossing(tour, inst) is None else 'crossed':7s}  "
          f"marked {[v + 1 for v in res.marked]}  interior {res.interior_pixels} px")
    (out / f"raster_{name}.ppm").write_bytes(ppm_image(res.image))
