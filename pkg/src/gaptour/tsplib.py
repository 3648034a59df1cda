"""Minimal TSPLIB reader/writer: EUC_2D node coordinates and tour files."""

from __future__ import annotations

import math
import warnings
from typing import Optional

import numpy as np

from gaptour.gap import GapInstance, Tour, build_instance

KNOWN_KEYS = {"NAME", "TYPE", "COMMENT", "DIMENSION", "EDGE_WEIGHT_TYPE"}


def _split_header(line: str):
    if ":" in line:
        key, value = line.split(":", 1)
    else:
        parts = line.split(None, 1)
        key, value = parts[0], parts[1] if len(parts) > 1 else ""
    return key.strip().upper(), value.strip()


def parse_tsplib(text: str, name: Optional[str] = None) -> GapInstance:
    """EUC_2D instance with exact (unrounded) euclidean costs.

    Unknown header keywords are ignored with a warning; the trailing EOF is
    optional.  Node ids may come in any order and are mapped to 0..n-1 by
    their position in the sorted id list.
    """
    header = {}
    coords = {}
    lines = iter(text.splitlines())
    in_coords = False
    for raw in lines:
        line = raw.strip()
        if not line:
            continue
        if line.upper() == "EOF":
            break
        if in_coords:
            parts = line.split()
            if len(parts) != 3:
                raise ValueError(f"malformed coordinate line: {raw!r}")
            try:
                node = int(parts[0])
                x, y = float(parts[1]), float(parts[2])
            except ValueError:
                raise ValueError(f"malformed coordinate line: {raw!r}") from None
            if not (math.isfinite(x) and math.isfinite(y)):
                raise ValueError(f"non-finite coordinate on line: {raw!r}")
            if node in coords:
                raise ValueError(f"duplicate node id {node}")
            coords[node] = (x, y)
            continue
        key, value = _split_header(line)
        if key == "NODE_COORD_SECTION":
            in_coords = True
            if "DIMENSION" not in header:
                raise ValueError("missing DIMENSION before NODE_COORD_SECTION")
            wtype = header.get("EDGE_WEIGHT_TYPE", "").upper()
            if wtype != "EUC_2D":
                raise ValueError(f"unsupported EDGE_WEIGHT_TYPE {wtype or '(none)'!r}; only EUC_2D is read")
            continue
        if key.endswith("_SECTION"):
            raise ValueError(f"unsupported section {key}")
        if key not in KNOWN_KEYS:
            warnings.warn(f"ignoring unknown TSPLIB keyword {key}", stacklevel=2)
        header[key] = value
    if "DIMENSION" not in header:
        raise ValueError("missing DIMENSION")
    wtype = header.get("EDGE_WEIGHT_TYPE", "").upper()
    if wtype != "EUC_2D":
        raise ValueError(f"unsupported EDGE_WEIGHT_TYPE {wtype or '(none)'!r}; only EUC_2D is read")
    try:
        dim = int(header["DIMENSION"])
    except ValueError:
        raise ValueError(f"bad DIMENSION {header['DIMENSION']!r}") from None
    if len(coords) != dim:
        raise ValueError(f"DIMENSION is {dim} but {len(coords)} coordinate lines were read")
    pts = np.array([coords[k] for k in sorted(coords)])
    return build_instance(pts, "euclidean", name=name or header.get("NAME", ""))


def write_tsplib(instance: GapInstance, name: Optional[str] = None) -> str:
    """EUC_2D text that parses back to the same coordinates (repr precision)."""
    if not instance.is_planar:
        raise ValueError("TSPLIB output needs 2D coordinates")
    out = [
        f"NAME : {name or instance.name or 'instance'}",
        "TYPE : TSP",
        f"DIMENSION : {instance.n}",
        "EDGE_WEIGHT_TYPE : EUC_2D",
        "NODE_COORD_SECTION",
    ]
    for k, (x, y) in enumerate(instance.coords, start=1):
        out.append(f"{k} {float(x)!r} {float(y)!r}")
    out.append("EOF")
    return "\n".join(out) + "\n"


def rounded_tour_cost(tour: Tour, instance: GapInstance) -> int:
    """Tour length under TSPLIB's nint(euclidean) edge convention."""
    idx = np.asarray(tour.order)
    P = instance.coords
    d = np.sqrt(((P[idx] - P[np.roll(idx, -1)]) ** 2).sum(axis=1))
    return int(np.floor(d + 0.5).sum())


def parse_tour(text: str, n: int) -> list[int]:
    """0-based order from a TSPLIB TOUR_SECTION or a bare list of 1-based ids."""
    body = text
    upper = text.upper()
    if "TOUR_SECTION" in upper:
        body = text[upper.index("TOUR_SECTION") + len("TOUR_SECTION"):]
    ids = []
    for tok in body.split():
        if tok.upper() == "EOF":
            break
        try:
            v = int(tok)
        except ValueError:
            raise ValueError(f"bad tour entry {tok!r}") from None
        if v == -1:
            break
        ids.append(v)
    if len(ids) == n + 1 and ids[0] == ids[-1]:
        ids = ids[:-1]
    if sorted(ids) != list(range(1, n + 1)):
        raise ValueError(f"tour must list each of the {n} node ids once")
    return [v - 1 for v in ids]


def write_tour(tour: Tour, name: str = "tour") -> str:
    out = [f"NAME : {name}", "TYPE : TOUR", f"DIMENSION : {len(tour.order)}", "TOUR_SECTION"]
    out.extend(str(v + 1) for v in tour.order)
    out += ["-1", "EOF"]
    return "\n".join(out) + "\n"
