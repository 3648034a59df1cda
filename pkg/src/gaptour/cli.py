"""Command line: ``gaptour <area> <action> ...``.

Exit status is 0 on success, 1 when the solver comes back negative
(unsatisfiable, budget exhausted, no simple curve within the round limit) and
2 on bad input.  The default seed comes from ``GAPTOUR_SEED`` when set.
"""

from __future__ import annotations

import argparse
import os
import sys
import time
from pathlib import Path

from gaptour.gap import BRUTE_FORCE_LIMIT, METRICS, brute_force_optimum, edge_rank_profile, make_tour
from gaptour.knowledge import M, S, build_knowledge
from gaptour.ktp import Board, EulerScheme, closed_tour_feasible, solve_ktp
from gaptour.plots import emit_plot, svg_tour_instance
from gaptour.polygon import PolygonSpec, min_polygon_tour, star_tour, to_one_based
from gaptour.raster import adequate_resolution, two_color_raster
from gaptour.report import RunReport
from gaptour.sat import (evaluate, is_unsatisfiable_by_coverage, number_to_clause,
                         solve_deterministic, solve_exhaustive, solve_probabilistic)
from gaptour.dimacs import read_dimacs
from gaptour.tsp import POLICIES, GreedyConfig, find_crossing, solve_tsp
from gaptour.tsplib import parse_tour, parse_tsplib, rounded_tour_cost, write_tour

SEED_ENV = "GAPTOUR_SEED"


class InputError(Exception):
    pass


def default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"{SEED_ENV}={raw!r} is not an integer") from None


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as e:
        raise InputError(f"cannot read {path}: {e.strerror}") from None


def _write(path: str, data: bytes):
    try:
        Path(path).write_bytes(data)
    except OSError as e:
        raise InputError(f"cannot write {path}: {e.strerror}") from None


def _seed(args) -> int:
    return default_seed() if args.seed is None else args.seed


def _labels(order):
    return [v + 1 for v in order]


def cmd_tsp_solve(args) -> tuple[RunReport, int]:
    instance = parse_tsplib(_read(args.file))
    seed = _seed(args)
    config = GreedyConfig(args.restarts, args.policy, args.mixed_prob, seed)
    run = solve_tsp(instance, config, args.max_rounds)
    rep = RunReport("tsp solve", seed=seed, status=run.stopped_by, final_cost=run.tour.cost,
                    rounds=run.rounds, round_costs=run.round_costs)
    rep.details["name"] = instance.name
    rep.details["n"] = instance.n
    rep.details["crossing_free"] = find_crossing(run.tour, instance) is None
    if args.tsplib_rounding:
        rep.details["tsplib_cost"] = rounded_tour_cost(run.tour, instance)
    rep.details["tour"] = _labels(run.tour.order)
    if args.plot:
        _write(args.plot, svg_tour_instance(run.tour, instance))
    if args.tour_out:
        _write(args.tour_out, write_tour(run.tour, instance.name or "tour").encode())
    return rep, 0 if run.stopped_by == "simple" else 1


def cmd_tsp_oracle(args) -> tuple[RunReport, int]:
    instance = parse_tsplib(_read(args.file))
    if instance.n > args.limit:
        raise InputError(f"brute force limited to n <= {args.limit}, file has n = {instance.n}")
    best = brute_force_optimum(instance, maximize=args.maximize, limit=args.limit)
    rep = RunReport("tsp oracle", status="maximum" if args.maximize else "minimum",
                    final_cost=best.cost)
    rep.details["n"] = instance.n
    rep.details["tour"] = _labels(best.order)
    return rep, 0


def cmd_ktp_solve(args) -> tuple[RunReport, int]:
    board = Board(args.rows, args.cols)
    scheme = EulerScheme(args.scheme)
    seed = _seed(args)
    config = GreedyConfig(args.restarts, args.policy, args.mixed_prob, seed)
    run = solve_ktp(board, scheme, config, args.budget)
    rep = RunReport("ktp solve", seed=seed, status="closed_tour" if run.proven else "not_proven",
                    final_cost=run.tour.cost)
    rep.details["board"] = f"{board.rows}x{board.cols}"
    rep.details["scheme"] = scheme.mode
    rep.details["restarts"] = run.restarts
    if not closed_tour_feasible(board):
        rep.details["parity"] = (f"{board.rows}*{board.cols} = {board.size} squares is odd; "
                                 f"a closed knight's tour cannot exist")
    else:
        rep.details["parity"] = "even area (necessary condition only)"
    rep.details["knight_edges"] = run.report.knight_edge_count
    rep.details["non_knight_edges"] = len(run.report.non_knight_edges)
    for a, b in run.report.non_knight_edges:
        rep.details.setdefault("flagged", []).append(f"{a[0]},{a[1]}-{b[0]},{b[1]}")
    rep.details["crossings"] = run.report.crossing_count
    rep.details["tour"] = [f"{i},{j}" for i, j in (board.square(v) for v in run.tour.order)]
    if args.plot:
        _write(args.plot, emit_plot(run.tour, "svg", board=board))
    return rep, 0 if run.proven else 1


def cmd_polygon(args) -> tuple[RunReport, int]:
    spec = PolygonSpec(args.n, args.radius)
    if args.action == "star":
        tour = star_tour(spec, args.metric)
    else:
        tour = min_polygon_tour(spec, args.metric)
    rep = RunReport(f"polygon {args.action}", status="ok", final_cost=tour.cost)
    rep.details["n"] = spec.n
    rep.details["metric"] = args.metric
    rep.details["tour"] = to_one_based(tour.order, spec.n)
    if args.plot:
        from gaptour.polygon import polygon_instance
        labels = [str(v if v else spec.n) for v in range(spec.n)]
        _write(args.plot, svg_tour_instance(tour, polygon_instance(spec), labels=labels))
    return rep, 0


def cmd_sat_solve(args) -> tuple[RunReport, int]:
    instance, dropped = read_dimacs(_read(args.file))
    algo = args.algorithm
    if algo == "auto":
        algo = "det" if instance.simple else "exhaustive"
    if algo != "exhaustive" and not instance.simple:
        raise InputError(f"--algorithm {algo} needs every clause to mention every variable; "
                         f"use --algorithm exhaustive")
    seed = _seed(args) if algo == "prob" else None
    details = {"n": instance.n, "m": instance.m, "dropped_tautologies": dropped,
               "algorithm": algo}
    if algo == "knowledge":
        K = build_knowledge(instance)
        details["Y"] = [number_to_clause(y, instance.n) for y in sorted(K.Y)]
        details["free"] = K.counts[S]
        details["blocked"] = K.counts[M]
        if K.Y:
            value, via = min(K.Y), "Y"
        elif K.counts[S]:
            value, via = K.forward(S)[0], "free"
        else:
            value, via = None, "unsat"
    else:
        if algo == "det":
            out = solve_deterministic(instance)
        elif algo == "prob":
            out = solve_probabilistic(instance, seed)
        else:
            out = solve_exhaustive(instance)
        value, via = out.value, out.via
        details["evaluations"] = out.evaluations
    if instance.simple:
        details["full_coverage"] = is_unsatisfiable_by_coverage(instance)
    rep = RunReport("sat solve", seed=seed)
    if value is None:
        rep.status = "unsatisfiable"
        rep.details = details
        return rep, 1
    assert evaluate(instance, value) == 1
    rep.status = "satisfiable"
    details["via"] = via
    details["witness"] = number_to_clause(value, instance.n)
    rep.details = details
    return rep, 0


def _instance_and_tour(args):
    instance = parse_tsplib(_read(args.file))
    tour = make_tour(parse_tour(_read(args.tourfile), instance.n), instance)
    return instance, tour


def cmd_diag_ranks(args) -> tuple[RunReport, int]:
    instance, tour = _instance_and_tour(args)
    ranks = edge_rank_profile(tour, instance)
    rep = RunReport("diag ranks", status="ok", final_cost=tour.cost)
    rep.details["n"] = instance.n
    rep.details["max_rank"] = int(ranks.max())
    rep.details["mean_rank"] = float(ranks.mean())
    rep.details["pred_ranks"] = ranks[:, 0].tolist()
    rep.details["succ_ranks"] = ranks[:, 1].tolist()
    if args.plot:
        _write(args.plot, emit_plot(ranks, "svg"))
    return rep, 0


def cmd_diag_raster(args) -> tuple[RunReport, int]:
    instance, tour = _instance_and_tour(args)
    k = args.k or adequate_resolution(tour, instance)
    res = two_color_raster(tour, instance, k)
    rep = RunReport("diag raster", status=res.verdict, final_cost=tour.cost)
    rep.details["k"] = k
    rep.details["marked"] = [v + 1 for v in res.marked]
    rep.details["interior_pixels"] = res.interior_pixels
    rep.details["white_pixels"] = res.white_pixels
    if args.out:
        _write(args.out, emit_plot(res, "ppm"))
    return rep, 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="print the report as JSON")

    search = argparse.ArgumentParser(add_help=False)
    search.add_argument("--seed", type=int, default=None,
                        help=f"RNG seed (default: ${SEED_ENV} or 0)")
    search.add_argument("--restarts", type=int, default=200, help="greedy restarts per round")
    search.add_argument("--policy", choices=POLICIES, default="greedy")
    search.add_argument("--mixed-prob", type=float, default=0.5,
                        help="greedy step probability for --policy mixed")

    p = argparse.ArgumentParser(prog="gaptour", description=__doc__.splitlines()[0])
    areas = p.add_subparsers(dest="area", required=True)

    tsp = areas.add_parser("tsp").add_subparsers(dest="action", required=True)
    s = tsp.add_parser("solve", parents=[common, search], help="greedy + uncrossing on a TSPLIB file")
    s.add_argument("file")
    s.add_argument("--max-rounds", type=int, default=None)
    s.add_argument("--plot", help="write the final tour as SVG")
    s.add_argument("--tour-out", help="write the final tour in TSPLIB TOUR format")
    s.add_argument("--tsplib-rounding", action="store_true",
                   help="also report the cost under TSPLIB's rounded-integer convention")
    s.set_defaults(func=cmd_tsp_solve)
    s = tsp.add_parser("oracle", parents=[common], help="exact optimum by enumeration")
    s.add_argument("file")
    s.add_argument("--limit", type=int, default=BRUTE_FORCE_LIMIT)
    s.add_argument("--maximize", action="store_true")
    s.set_defaults(func=cmd_tsp_oracle)

    ktp = areas.add_parser("ktp").add_subparsers(dest="action", required=True)
    s = ktp.add_parser("solve", parents=[common, search], help="closed knight's tour search")
    s.add_argument("--rows", type=int, required=True)
    s.add_argument("--cols", type=int, required=True)
    s.add_argument("--scheme", choices=("uniform", "quadrant"), default="uniform")
    s.add_argument("--budget", type=int, default=None,
                   help="total restarts (default 200 rounds of --restarts)")
    s.add_argument("--plot", help="write the board and tour as SVG")
    s.set_defaults(func=cmd_ktp_solve)

    poly = areas.add_parser("polygon").add_subparsers(dest="action", required=True)
    for name, text in (("star", "maximum star tour, odd n"), ("min", "minimum (boundary) tour")):
        s = poly.add_parser(name, parents=[common], help=text)
        s.add_argument("--n", type=int, required=True)
        s.add_argument("--radius", type=float, default=1.0)
        s.add_argument("--metric", choices=METRICS, default="euclidean")
        s.add_argument("--plot", help="write the tour as SVG")
        s.set_defaults(func=cmd_polygon)

    sat = areas.add_parser("sat").add_subparsers(dest="action", required=True)
    s = sat.add_parser("solve", parents=[common], help="solve a DIMACS CNF file")
    s.add_argument("file")
    s.add_argument("--algorithm", choices=("auto", "det", "prob", "knowledge", "exhaustive"),
                   default="auto")
    s.add_argument("--seed", type=int, default=None,
                   help=f"seed for --algorithm prob (default: ${SEED_ENV} or 0)")
    s.set_defaults(func=cmd_sat_solve)

    diag = areas.add_parser("diag").add_subparsers(dest="action", required=True)
    s = diag.add_parser("ranks", parents=[common], help="per-vertex ranks of the tour edges")
    s.add_argument("file")
    s.add_argument("tourfile")
    s.add_argument("--plot", help="write the sorted-cost diagnostic as SVG")
    s.set_defaults(func=cmd_diag_ranks)
    s = diag.add_parser("raster", parents=[common], help="two-colour raster simplicity test")
    s.add_argument("file")
    s.add_argument("tourfile")
    s.add_argument("--k", type=int, default=None, help="resolution factor (default: adequate)")
    s.add_argument("--out", help="write the coloured raster as PPM")
    s.set_defaults(func=cmd_diag_raster)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code or 0)
    start = time.perf_counter()
    try:
        report, code = args.func(args)
    except (InputError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    report.wall_time = time.perf_counter() - start
    sys.stdout.write(report.to_json() if args.json else report.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
