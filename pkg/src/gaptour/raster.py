"""Image-based simplicity test: draw the cycle, flood fill, inspect each vertex.

The cycle is drawn with 1-pixel 8-connected lines.  Flood fills are
4-connected, so they never leak through a drawn line.  The outside is filled
green from a canvas corner and the face next to the first edge red; a simple
closed curve leaves exactly those two faces, and every vertex then sees red on
one side and green on the other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from gaptour.gap import GapInstance, Tour
from gaptour.geometry import signed_area

WHITE, BLACK, GREEN, RED = 0, 1, 2, 3

MARGIN = 4
MAX_PIXELS = 40_000_000


@dataclass
class RasterResult:
    simple: bool
    marked: tuple[int, ...]
    interior_pixels: int
    white_pixels: int
    image: np.ndarray
    scale: float

    @property
    def verdict(self) -> str:
        return "simple" if self.simple else "crossed"


def _segment_pixels(p: np.ndarray, q: np.ndarray):
    p = np.rint(p)
    q = np.rint(q)
    steps = int(max(abs(q[0] - p[0]), abs(q[1] - p[1]))) + 1
    xs = np.rint(np.linspace(p[0], q[0], steps)).astype(np.int64)
    ys = np.rint(np.linspace(p[1], q[1], steps)).astype(np.int64)
    return xs, ys


def _point_segment_distance(p, a, b) -> float:
    ab = b - a
    denom = float(ab @ ab)
    t = 0.0 if denom == 0 else min(1.0, max(0.0, float((p - a) @ ab) / denom))
    return float(np.linalg.norm(p - (a + t * ab)))


def adequate_resolution(tour: Tour, instance: GapInstance, clearance_px: float = 4.0) -> int:
    """Smallest factor k giving ``clearance_px`` pixels of separation.

    Separation is measured between distinct vertices and between each vertex
    and every edge not incident to it.  Acute corners also need their thin
    wedge (where the two incident lines are closer than 2 px) to end well
    before the middle of the shorter incident edge.
    """
    P = instance.coords[np.asarray(tour.order)]
    n = len(P)
    extent = float(np.ptp(P, axis=0).max())
    gap = math.inf
    scale = 0.0
    for a in range(n):
        for b in range(a + 1, n):
            gap = min(gap, float(np.linalg.norm(P[a] - P[b])))
        for e in range(n):
            if e == a or (e + 1) % n == a:
                continue
            gap = min(gap, _point_segment_distance(P[a], P[e], P[(e + 1) % n]))
        u, w = P[a - 1] - P[a], P[(a + 1) % n] - P[a]
        lu, lw = np.linalg.norm(u), np.linalg.norm(w)
        if lu == 0 or lw == 0:
            raise ValueError("degenerate zero-length edge")
        half = 0.5 * math.acos(float(np.clip(u @ w / (lu * lw), -1.0, 1.0)))
        if half == 0:
            raise ValueError("edges fold back onto each other")
        reach = 2.0 / math.sin(half) + 1.0
        scale = max(scale, 2.0 * (reach + clearance_px) / min(lu, lw))
    if gap == 0:
        raise ValueError("coincident vertices or a vertex lying on an edge")
    scale = max(scale, clearance_px / gap)
    return max(1, math.ceil(scale * extent / n))


def _first_colour(image, origin, direction, limit, start=1.0):
    h, w = image.shape
    t = start
    while t <= limit:
        x = int(round(origin[0] + t * direction[0]))
        y = int(round(origin[1] + t * direction[1]))
        if not (0 <= x < w and 0 <= y < h):
            return WHITE
        c = image[y, x]
        if c != BLACK:
            return int(c)
        t += 0.5
    return BLACK


def two_color_raster(tour: Tour, instance: GapInstance, k: int) -> RasterResult:
    """Two-colour the drawn cycle and decide whether it is a simple curve.

    The canvas scale is ``k * n / extent`` pixels per unit, so the image side
    is about ``k * n`` pixels.  A vertex passes when probing outward along the
    bisector of each of its two angular sectors reaches red on one side and
    green on the other.  The verdict is ``simple`` when every vertex passes and
    no unfilled (white) region remains; otherwise the failing vertices are
    marked.  The red pixel count approximates the enclosed area.
    """
    if not instance.is_planar:
        raise ValueError("raster test needs 2D coordinates")
    if k < 1:
        raise ValueError("resolution factor must be positive")
    order = np.asarray(tour.order)
    n = len(order)
    P = instance.coords[order]
    if np.any(np.all(P == np.roll(P, -1, axis=0), axis=1)):
        raise ValueError("degenerate zero-length edge")
    low = P.min(axis=0)
    extent = float(np.ptp(P, axis=0).max())
    scale = k * n / extent
    diffs = P[:, None, :] - P[None, :, :]
    dist = np.sqrt((diffs**2).sum(-1))
    np.fill_diagonal(dist, np.inf)
    if dist.min() * scale < 3:
        raise ValueError(
            f"resolution too coarse: closest vertices are {dist.min() * scale:.2f} px apart"
        )
    Q = (P - low) * scale + MARGIN
    w = int(math.ceil(Q[:, 0].max())) + MARGIN + 1
    h = int(math.ceil(Q[:, 1].max())) + MARGIN + 1
    if w * h > MAX_PIXELS:
        raise ValueError(f"canvas of {w}x{h} pixels exceeds the pixel budget")

    image = np.zeros((h, w), dtype=np.uint8)
    for e in range(n):
        xs, ys = _segment_pixels(Q[e], Q[(e + 1) % n])
        image[ys, xs] = BLACK

    labels, _ = ndimage.label(image != BLACK)
    outside = labels[0, 0]
    image[labels == outside] = GREEN

    # thin wedge at each corner: closer than 2 px to both incident lines
    corner = []
    for v in range(n):
        a, b, c = Q[v - 1], Q[v], Q[(v + 1) % n]
        du = (a - b) / np.linalg.norm(a - b)
        dw = (c - b) / np.linalg.norm(c - b)
        half = 0.5 * math.acos(float(np.clip(du @ dw, -1.0, 1.0)))
        bis = du + dw
        if np.linalg.norm(bis) < 1e-9:
            bis = np.array([-du[1], du[0]])
        bis = bis / np.linalg.norm(bis)
        reach = 2.0 / max(math.sin(half), 1e-12) + 1.0
        corner.append((b, bis, reach, 0.5 * min(np.linalg.norm(a - b), np.linalg.norm(c - b))))

    # rounding can pinch off a few pixels inside an acute corner; those
    # pockets are drawing artefacts, not faces of the curve
    pockets = np.unique(labels[image == WHITE])
    for lab, box in zip(range(1, labels.max() + 1), ndimage.find_objects(labels)):
        if box is None or lab not in pockets:
            continue
        ys, xs = box
        ends = np.array([(xs.start, ys.start), (xs.stop - 1, ys.stop - 1),
                         (xs.start, ys.stop - 1), (xs.stop - 1, ys.start)], float)
        for b, _, reach, _ in corner:
            if np.all(np.linalg.norm(ends - b, axis=1) <= reach + 1.5):
                image[labels == lab] = BLACK
                break

    # inside seed: off the midpoint of the first edge along the inward normal
    d = Q[1] - Q[0]
    normal = np.array([-d[1], d[0]]) / np.linalg.norm(d)
    if signed_area(P) < 0:
        normal = -normal
    mid = (Q[0] + Q[1]) / 2
    seed = None
    for sign in (1, -1):
        for offset in (1.0, 2.0, 3.0):
            x, y = np.rint(mid + sign * offset * normal).astype(int)
            if image[y, x] != BLACK:
                seed = (y, x)
                break
        if seed is not None:
            break
    if seed is not None and image[seed] == WHITE:
        image[labels == labels[seed]] = RED


    marked = []
    for v, (b, bis, reach, limit) in enumerate(corner):
        inner = _first_colour(image, b, bis, max(limit, reach + 2), start=min(reach, limit))
        outer = _first_colour(image, b, -bis, limit)
        bx, by = np.rint(b).astype(int)
        touches_black = np.any(image[by - 1 : by + 2, bx - 1 : bx + 2] == BLACK)
        if {inner, outer} != {RED, GREEN} or not touches_black:
            marked.append(int(order[v]))

    white = int((image == WHITE).sum())
    return RasterResult(
        simple=not marked and white == 0,
        marked=tuple(marked),
        interior_pixels=int((image == RED).sum()),
        white_pixels=white,
        image=image,
        scale=scale,
    )
