import math
from pathlib import Path

import numpy as np
import pytest

from gaptour.gap import build_instance

DATA = Path(__file__).parent / "data"

# acceptance lines collected by tests/test_acceptance.py
ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def square():
    return build_instance([(0, 0), (1, 0), (1, 1), (0, 1)])


def octagon_points():
    t = 2 * np.pi * np.arange(8) / 8
    return np.column_stack([np.cos(t), np.sin(t)])


@pytest.fixture
def eight_city():
    """Tour 0..7 crosses once, between its edges at positions 1 and 5.

    Vertices are octagon corners visited in the order c0 c1 c5 c4 c3 c2 c6 c7.
    """
    c = octagon_points()
    return build_instance(c[[0, 1, 5, 4, 3, 2, 6, 7]])


def general_position(rng, n):
    return rng.random((n, 2))


def convex_points(rng, n):
    # sorted random angles on a randomly stretched ellipse
    t = np.sort(rng.uniform(0, 2 * math.pi, n))
    a, b = rng.uniform(0.5, 2.0, 2)
    return np.column_stack([a * np.cos(t), b * np.sin(t)])
