"""Line-oriented run reports with an optional JSON form."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field
from typing import Any, Optional


def _fmt(value) -> str:
    if isinstance(value, float):
        return "inf" if math.isinf(value) else f"{value:.6f}"
    if isinstance(value, (list, tuple)):
        return " ".join(_fmt(v) for v in value)
    if value is None:
        return "-"
    return str(value)


def _jsonable(value):
    if isinstance(value, float) and not math.isfinite(value):
        return str(value)
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    return value


@dataclass
class RunReport:
    """Everything a subcommand prints.

    Text form is one ``key: value`` line per field, then one line per entry
    of ``details`` in insertion order.  Floats use 6 decimals, lists are
    space separated.
    """

    command: str
    seed: Optional[int] = None
    status: str = ""
    final_cost: Optional[float] = None
    rounds: Optional[int] = None
    round_costs: list[float] = field(default_factory=list)
    details: dict[str, Any] = field(default_factory=dict)
    wall_time: float = 0.0

    def to_text(self) -> str:
        lines = [f"command: {self.command}", f"status: {self.status}"]
        if self.seed is not None:
            lines.append(f"seed: {self.seed}")
        if self.final_cost is not None:
            lines.append(f"final_cost: {_fmt(float(self.final_cost))}")
        if self.rounds is not None:
            lines.append(f"rounds: {self.rounds}")
        if self.round_costs:
            lines.append(f"round_costs: {_fmt([float(c) for c in self.round_costs])}")
        for k, v in self.details.items():
            lines.append(f"{k}: {_fmt(v)}")
        lines.append(f"wall_time: {self.wall_time:.3f}")
        return "\n".join(lines) + "\n"

    def to_json(self) -> str:
        return json.dumps(_jsonable(asdict(self)), indent=2) + "\n"

    def comparable(self) -> dict:
        """Report contents without the wall time, for reproducibility checks."""
        d = asdict(self)
        d.pop("wall_time")
        return d
