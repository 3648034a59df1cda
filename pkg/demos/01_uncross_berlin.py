"""Greedy restarts plus uncrossing on berlin52, round by round.

Each round reruns 200 randomised nearest-neighbour walks (keeping the best
tour so far), then removes the first crossing it finds.  The loop ends when
the drawn tour is a simple closed curve.

    python3 demos/01_uncross_berlin.py [out_dir]
"""

import sys
from pathlib import Path

from gaptour.plots import svg_tour_instance
from gaptour.tsp import GreedyConfig, find_crossing, solve_tsp
from gaptour.tsplib import parse_tsplib, rounded_tour_cost

here = Path(__file__).resolve().parent
out = Path(sys.argv[1]) if len(sys.argv) > 1 else here / "out"
out.mkdir(exist_ok=True)

inst = parse_tsplib((here.parent / "tests" / "data" / "berlin52.tsp").read_text())
run = solve_tsp(inst, GreedyConfig(restarts=200, rng_seed=0))

print(f"{inst.name}: {inst.n} cities")
for rec in run.log:
    what = f"uncross positions {rec.crossing.i},{rec.crossing.j}" if rec.crossing else "no crossing left"
    print(f"  round {rec.round:2d}  greedy {rec.greedy_cost:9.3f} -> {rec.cost:9.3f}  ({what})")

# the stop condition is only necessary: a simple tour can still be beaten
print(f"final cost {run.tour.cost:.3f}, TSPLIB rounded {rounded_tour_cost(run.tour, inst)}"
      f" (known optimum 7542), crossing-free: {find_crossing(run.tour, inst) is None}")

(out / "berlin52.svg").write_bytes(svg_tour_instance(run.tour, inst))
print(f"wrote {out / 'berlin52.svg'}")
