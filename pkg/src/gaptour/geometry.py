"""Exact orientation and closed-segment intersection predicates.

The float determinant is trusted only when it clears a forward error bound;
otherwise the sign is recomputed with rationals, which is exact because every
double is a rational number.
"""

from fractions import Fraction

import numpy as np

# (3 + 16 eps) * eps with eps = 2**-53
_ORIENT_BOUND = (3.0 + 16.0 * 2.0**-53) * 2.0**-53


def _orient_exact(ax, ay, bx, by, cx, cy) -> int:
    ax, ay, bx, by, cx, cy = map(Fraction, (ax, ay, bx, by, cx, cy))
    det = (bx - ax) * (cy - ay) - (by - ay) * (cx - ax)
    return (det > 0) - (det < 0)


def orient(a, b, c) -> int:
    """Sign of the turn a -> b -> c: +1 left, -1 right, 0 collinear."""
    ax, ay = float(a[0]), float(a[1])
    bx, by = float(b[0]), float(b[1])
    cx, cy = float(c[0]), float(c[1])
    left = (bx - ax) * (cy - ay)
    right = (by - ay) * (cx - ax)
    det = left - right
    if abs(det) > _ORIENT_BOUND * (abs(left) + abs(right)):
        return 1 if det > 0 else -1
    return _orient_exact(ax, ay, bx, by, cx, cy)


def orient_many(a, b, c) -> np.ndarray:
    """Vectorised ``orient`` over broadcastable ``(..., 2)`` arrays."""
    a, b, c = np.broadcast_arrays(np.asarray(a, float), np.asarray(b, float),
                                  np.asarray(c, float))
    left = (b[..., 0] - a[..., 0]) * (c[..., 1] - a[..., 1])
    right = (b[..., 1] - a[..., 1]) * (c[..., 0] - a[..., 0])
    det = left - right
    sign = np.atleast_1d(np.sign(det).astype(np.int64))
    unsure = np.atleast_1d(np.abs(det) <= _ORIENT_BOUND * (np.abs(left) + np.abs(right)))
    a, b, c = (x.reshape(sign.shape + (2,)) for x in (a, b, c))
    for idx in zip(*np.nonzero(unsure)):
        sign[idx] = _orient_exact(a[idx][0], a[idx][1], b[idx][0], b[idx][1],
                                  c[idx][0], c[idx][1])
    return sign.reshape(det.shape)


def _on_segment(p, q, r) -> bool:
    # r collinear with p-q: inside the closed bounding box
    return (min(p[0], q[0]) <= r[0] <= max(p[0], q[0])
            and min(p[1], q[1]) <= r[1] <= max(p[1], q[1]))


def segments_intersect(p1, p2, q1, q2) -> bool:
    """True when closed segments p1p2 and q1q2 share at least one point."""
    d1 = orient(q1, q2, p1)
    d2 = orient(q1, q2, p2)
    d3 = orient(p1, p2, q1)
    d4 = orient(p1, p2, q2)
    if d1 * d2 < 0 and d3 * d4 < 0:
        return True
    if d1 == 0 and _on_segment(q1, q2, p1):
        return True
    if d2 == 0 and _on_segment(q1, q2, p2):
        return True
    if d3 == 0 and _on_segment(p1, p2, q1):
        return True
    if d4 == 0 and _on_segment(p1, p2, q2):
        return True
    return False


def segments_intersect_many(p1, p2, q1, q2) -> np.ndarray:
    """Vectorised ``segments_intersect``; inputs broadcast over leading axes."""
    p1, p2, q1, q2 = np.broadcast_arrays(*(np.asarray(x, float) for x in (p1, p2, q1, q2)))
    d1 = orient_many(q1, q2, p1)
    d2 = orient_many(q1, q2, p2)
    d3 = orient_many(p1, p2, q1)
    d4 = orient_many(p1, p2, q2)
    hit = (d1 * d2 < 0) & (d3 * d4 < 0)

    def within(p, q, r):
        lo = np.minimum(p, q)
        hi = np.maximum(p, q)
        return np.all((lo <= r) & (r <= hi), axis=-1)

    hit |= (d1 == 0) & within(q1, q2, p1)
    hit |= (d2 == 0) & within(q1, q2, p2)
    hit |= (d3 == 0) & within(p1, p2, q1)
    hit |= (d4 == 0) & within(p1, p2, q2)
    return hit


def proper_crossing(p1, p2, q1, q2) -> bool:
    """Interiors cross at a single point with all four orientations nonzero."""
    return (orient(q1, q2, p1) * orient(q1, q2, p2) < 0
            and orient(p1, p2, q1) * orient(p1, p2, q2) < 0)


def signed_area(points) -> float:
    pts = np.asarray(points, float)
    x, y = pts[:, 0], pts[:, 1]
    return 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(np.roll(x, -1), y))
