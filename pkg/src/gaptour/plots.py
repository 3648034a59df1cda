"""Deterministic SVG and PPM output for tours, rank profiles, boards and rasters.

Numbers are written with 6 decimals and elements in a fixed order, so equal
input always gives byte-identical output.
"""

from __future__ import annotations

from typing import Optional, Sequence

import numpy as np

from gaptour.gap import GapInstance, Tour
from gaptour.raster import BLACK, GREEN, RED, WHITE, RasterResult

SIZE = 600.0
PAD = 30.0

PALETTE = {
    WHITE: (255, 255, 255),
    BLACK: (0, 0, 0),
    GREEN: (0, 160, 0),
    RED: (220, 0, 0),
}


def _f(x: float) -> str:
    s = f"{x:.6f}"
    return "0.000000" if s == "-0.000000" else s


def _svg(width: float, height: float, body: list[str]) -> bytes:
    head = (f'<svg xmlns="http://www.w3.org/2000/svg" version="1.1" '
            f'width="{_f(width)}" height="{_f(height)}" '
            f'viewBox="0 0 {_f(width)} {_f(height)}">')
    return "\n".join(['<?xml version="1.0" encoding="UTF-8"?>', head, *body, "</svg>", ""]).encode()


def _fit(points: np.ndarray):
    """Map data coordinates into the canvas, y pointing up."""
    lo = points.min(axis=0)
    span = float(np.ptp(points, axis=0).max()) or 1.0
    s = (SIZE - 2 * PAD) / span

    def to_px(p):
        return PAD + (p[0] - lo[0]) * s, SIZE - PAD - (p[1] - lo[1]) * s

    return to_px


def svg_tour(points, order: Sequence[int], labels: Optional[Sequence[str]] = None,
             title: str = "") -> bytes:
    """Cycle through ``points`` in ``order``: one line per edge, one circle per vertex."""
    P = np.asarray(points, dtype=float)
    if P.ndim != 2 or P.shape[1] != 2:
        raise ValueError("tour plots need 2D points")
    to_px = _fit(P)
    n = len(order)
    body = []
    if title:
        body.append(f'<title>{title}</title>')
    body.append('<g stroke="black" stroke-width="1">')
    for k in range(n):
        (x1, y1), (x2, y2) = to_px(P[order[k]]), to_px(P[order[(k + 1) % n]])
        body.append(f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}"/>')
    body.append("</g>")
    body.append('<g fill="red">')
    for v in range(len(P)):
        x, y = to_px(P[v])
        body.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="3.000000"/>')
    body.append("</g>")
    if labels is None:
        labels = [str(v + 1) for v in range(len(P))]
    body.append('<g font-size="10" font-family="monospace">')
    for v in range(len(P)):
        x, y = to_px(P[v])
        body.append(f'<text x="{_f(x + 4)}" y="{_f(y - 4)}">{labels[v]}</text>')
    body.append("</g>")
    return _svg(SIZE, SIZE, body)


def svg_tour_instance(tour: Tour, instance: GapInstance, **kw) -> bytes:
    if not instance.is_planar:
        raise ValueError("tour plots need 2D coordinates")
    return svg_tour(instance.coords, tour.order, **kw)


def svg_rank_profile(ranks: np.ndarray, n_columns: Optional[int] = None) -> bytes:
    """Sorted-cost-matrix diagnostic: row v has red dots at the ranks of its tour edges.

    Dots hugging the left edge mean the tour mostly uses each vertex's
    cheapest edges.
    """
    R = np.asarray(ranks)
    if R.ndim != 2 or R.shape[1] != 2:
        raise ValueError("rank profile must be an (n, 2) array")
    n = R.shape[0]
    cols = n_columns or n
    cell = (SIZE - 2 * PAD) / max(n, cols)
    w = 2 * PAD + cols * cell
    h = 2 * PAD + n * cell
    body = [f'<rect x="{_f(PAD)}" y="{_f(PAD)}" width="{_f(cols * cell)}" '
            f'height="{_f(n * cell)}" fill="none" stroke="gray"/>', '<g fill="red">']
    rad = max(cell / 3, 0.5)
    for v in range(n):
        for r in R[v]:
            x = PAD + (int(r) - 0.5) * cell
            y = PAD + (v + 0.5) * cell
            body.append(f'<circle cx="{_f(x)}" cy="{_f(y)}" r="{_f(rad)}"/>')
    body.append("</g>")
    return _svg(w, h, body)


def svg_board(rows: int, cols: int, squares: Sequence[tuple[int, int]]) -> bytes:
    """Chessboard grid plus one segment per move of the closed walk over ``squares``."""
    cell = (SIZE - 2 * PAD) / max(rows, cols)
    w, h = 2 * PAD + cols * cell, 2 * PAD + rows * cell
    body = ['<g stroke="gray" stroke-width="0.5">']
    for i in range(rows):
        for j in range(cols):
            shade = "#eeeeee" if (i + j) % 2 else "#ffffff"
            body.append(f'<rect x="{_f(PAD + j * cell)}" y="{_f(PAD + i * cell)}" '
                        f'width="{_f(cell)}" height="{_f(cell)}" fill="{shade}"/>')
    body.append("</g>")

    def centre(sq):
        return PAD + (sq[1] - 0.5) * cell, PAD + (sq[0] - 0.5) * cell

    body.append('<g stroke="blue" stroke-width="1.5">')
    k = len(squares)
    for a in range(k):
        (x1, y1), (x2, y2) = centre(squares[a]), centre(squares[(a + 1) % k])
        body.append(f'<line x1="{_f(x1)}" y1="{_f(y1)}" x2="{_f(x2)}" y2="{_f(y2)}"/>')
    body.append("</g>")
    return _svg(w, h, body)


def ppm_image(image: np.ndarray) -> bytes:
    """Binary P6 of a colour-coded raster (codes from ``gaptour.raster``)."""
    img = np.asarray(image)
    if img.ndim != 2:
        raise ValueError("raster must be a 2D array of colour codes")
    lut = np.zeros((256, 3), dtype=np.uint8)
    for code, rgb in PALETTE.items():
        lut[code] = rgb
    rgb = lut[img.astype(np.uint8)]
    h, w = img.shape
    return f"P6\n{w} {h}\n255\n".encode() + rgb.tobytes()


def emit_plot(item, fmt: str = "svg", instance: Optional[GapInstance] = None,
              board=None) -> bytes:
    """Dispatch on what is being drawn.

    A ``RasterResult`` becomes a PPM; a ``Tour`` with a ``board`` becomes a
    board SVG; a ``Tour`` with an ``instance`` becomes a tour SVG; an
    ``(n, 2)`` integer array is drawn as a rank profile.
    """
    if fmt not in ("svg", "ppm"):
        raise ValueError("format must be 'svg' or 'ppm'")
    if isinstance(item, RasterResult):
        if fmt != "ppm":
            raise ValueError("raster images are written as PPM")
        return ppm_image(item.image)
    if fmt == "ppm":
        raise ValueError("only raster results can be written as PPM")
    if isinstance(item, Tour):
        if board is not None:
            return svg_board(board.rows, board.cols, [board.square(v) for v in item.order])
        if instance is None:
            raise ValueError("a tour plot needs its instance")
        return svg_tour_instance(item, instance)
    arr = np.asarray(item)
    if arr.ndim == 2 and arr.shape[1] == 2 and np.issubdtype(arr.dtype, np.integer):
        return svg_rank_profile(arr)
    raise ValueError(f"don't know how to plot {type(item).__name__}")
