"""Knight's tours as a GAP with the cost-below-4 stop condition.

Squares are 1-indexed ``(row, col)`` pairs linearised row-major.  Knight moves
cost a small constant, every other pair costs its distance plus 4, so a closed
tour costs less than 4 exactly when all of its edges are knight moves.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Callable, Optional

import numpy as np

from gaptour.gap import GapInstance, Tour, canonicalize
from gaptour.tsp import GreedyConfig, all_crossings, greedy_tour

THRESHOLD = 4.0

# Four knight 4-cycles partition every 4x4 block (local 0-based coordinates).
# The first runs along the (1, 1) diagonal, the second along (1, -1), the
# other two are the tilted squares.
BLOCK_CYCLES = {
    "diagonal": ((0, 0), (1, 2), (3, 3), (2, 1)),
    "antidiagonal": ((0, 3), (2, 2), (3, 0), (1, 1)),
    "square_a": ((0, 1), (2, 0), (3, 2), (1, 3)),
    "square_b": ((0, 2), (1, 0), (3, 1), (2, 3)),
}

_CYCLE_OF = {}
for _name, _cells in BLOCK_CYCLES.items():
    for _pos, _cell in enumerate(_cells):
        _CYCLE_OF[_cell] = (_name, _pos)


@dataclass(frozen=True)
class Board:
    rows: int
    cols: int

    def __post_init__(self):
        if self.rows < 1 or self.cols < 1:
            raise ValueError("board dimensions must be positive")

    @property
    def size(self) -> int:
        return self.rows * self.cols

    def square(self, index: int) -> tuple[int, int]:
        return index // self.cols + 1, index % self.cols + 1

    def index(self, square: tuple[int, int]) -> int:
        i, j = square
        if not (1 <= i <= self.rows and 1 <= j <= self.cols):
            raise ValueError(f"square {square} is off the {self.rows}x{self.cols} board")
        return (i - 1) * self.cols + (j - 1)

    def squares(self):
        return [self.square(k) for k in range(self.size)]


def is_knight_move(a, b) -> bool:
    return (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2 == 5


def block_cycle_class(a, b) -> Optional[str]:
    """Name of the 4x4 block cycle containing knight move a-b, if any."""
    if ((a[0] - 1) // 4, (a[1] - 1) // 4) != ((b[0] - 1) // 4, (b[1] - 1) // 4):
        return None
    ca = _CYCLE_OF[((a[0] - 1) % 4, (a[1] - 1) % 4)]
    cb = _CYCLE_OF[((b[0] - 1) % 4, (b[1] - 1) % 4)]
    if ca[0] != cb[0] or (ca[1] - cb[1]) % 4 not in (1, 3):
        return None
    return ca[0]


@dataclass(frozen=True)
class EulerScheme:
    """Knight-move pricing for the Euler distance.

    ``uniform`` prices every knight move at ``uniform_c1``.  ``quadrant``
    prices moves along the 4x4 block cycles: ``c_pos`` on the (1, 1) diagonal
    rhomboid, ``c_neg`` on the (1, -1) rhomboid, ``c_sq`` on the two squares
    and ``default`` elsewhere.  A custom ``classifier(a, b) -> float`` replaces
    the quadrant rule when given.
    """

    mode: str = "uniform"
    uniform_c1: float = 0.04
    c_pos: float = 0.01
    c_neg: float = 0.03
    c_sq: float = 0.02
    default: float = 0.04
    classifier: Optional[Callable] = field(default=None, compare=False)

    def __post_init__(self):
        if self.mode not in ("uniform", "quadrant"):
            raise ValueError("mode must be 'uniform' or 'quadrant'")
        for name in ("uniform_c1", "c_pos", "c_neg", "c_sq", "default"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")

    def constants(self) -> tuple[float, ...]:
        if self.mode == "uniform":
            return (self.uniform_c1,)
        return (self.c_pos, self.c_neg, self.c_sq, self.default)

    def knight_cost(self, a, b) -> float:
        if self.mode == "uniform":
            return self.uniform_c1
        if self.classifier is not None:
            return float(self.classifier(a, b))
        cls = block_cycle_class(a, b)
        if cls == "diagonal":
            return self.c_pos
        if cls == "antidiagonal":
            return self.c_neg
        if cls is not None:
            return self.c_sq
        return self.default

    def validate_for(self, board: Board):
        bound = THRESHOLD / board.size
        bad = [c for c in self.constants() if not 0 < c < bound]
        if bad:
            raise ValueError(
                f"knight-move costs {bad} must lie in (0, {bound:.6g}) on a "
                f"{board.rows}x{board.cols} board so an all-knight cycle costs < 4"
            )


def euler_distance(a, b, scheme: EulerScheme = EulerScheme()) -> float:
    """inf on the diagonal, the scheme's constant for knight moves, else distance + 4."""
    d2 = (a[0] - b[0]) ** 2 + (a[1] - b[1]) ** 2
    if d2 == 0:
        return math.inf
    if d2 == 5:
        return scheme.knight_cost(a, b)
    return math.sqrt(d2) + 4.0


def build_board_instance(board: Board, scheme: EulerScheme = EulerScheme()) -> GapInstance:
    if board.size < 4:
        raise ValueError("board needs at least 4 squares")
    scheme.validate_for(board)
    sq = board.squares()
    N = board.size
    cost = np.empty((N, N))
    for p in range(N):
        for q in range(N):
            cost[p, q] = euler_distance(sq[p], sq[q], scheme)
    coords = np.array([(j, i) for i, j in sq], dtype=float)
    return GapInstance(cost=cost, coords=coords, metric="euler",
                       name=f"knight{board.rows}x{board.cols}")


def closed_tour_feasible(board: Board) -> bool:
    """Colour-parity test: an odd number of squares rules out a closed tour.

    Passing is only necessary (4x4 passes yet has no closed tour).
    """
    return board.size % 2 == 0


@dataclass
class KnightReport:
    knight_edge_count: int
    non_knight_edges: list[tuple[tuple[int, int], tuple[int, int]]]
    crossing_count: int

    @property
    def all_knight(self) -> bool:
        return not self.non_knight_edges


def verify_knight_cycle(tour: Tour, board: Board, instance: Optional[GapInstance] = None) -> KnightReport:
    """Flag non-knight edges and count geometric self-intersections."""
    if instance is None:
        instance = build_board_instance(board)
    bad = []
    knights = 0
    for a, b in tour.edges():
        sa, sb = board.square(a), board.square(b)
        if is_knight_move(sa, sb):
            knights += 1
        else:
            bad.append((sa, sb))
    return KnightReport(knights, bad, len(all_crossings(tour, instance)))


@dataclass
class KtpRun:
    tour: Tour
    report: KnightReport
    restarts: int
    proven: bool
    feasible_by_parity: bool


def solve_ktp(
    board: Board,
    scheme: EulerScheme = EulerScheme(),
    config: GreedyConfig = GreedyConfig(),
    budget: Optional[int] = None,
) -> KtpRun:
    """Repeat greedy restarts until the tour costs less than 4 or the budget ends.

    ``budget`` bounds the total number of restarts; it defaults to 200 rounds
    of ``config.restarts``.  ``proven`` is true when the returned tour is
    below the threshold, i.e. a closed knight's tour.
    """
    instance = build_board_instance(board, scheme)
    if budget is None:
        budget = 200 * config.restarts
    if budget < 1:
        raise ValueError("budget must be positive")
    best = None
    used = 0
    stream = 0
    while used < budget:
        k = min(config.restarts, budget - used)
        round_cfg = GreedyConfig(k, config.step_policy, config.mixed_greedy_probability,
                                 config.rng_seed)
        best = canonicalize(greedy_tour(instance, round_cfg, best, stream=stream))
        used += k
        stream += 1
        if best.cost < THRESHOLD:
            break
    report = verify_knight_cycle(best, board, instance)
    proven = best.cost < THRESHOLD
    if proven:
        assert report.all_knight, "cost below 4 with a non-knight edge"
    return KtpRun(best, report, used, proven, closed_tour_feasible(board))
