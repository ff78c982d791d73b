"""Point primitives, convex-position validation, distances and turning angles.

All length comparisons throughout the package are done on squared distances
(min/max are preserved under squaring); square roots are taken only when a
length is reported. Angle boundary tests use an absolute tolerance of 1e-9
radians, distance-equality tests a relative tolerance of 1e-9 on lengths
(applied as 2e-9 on squared values).
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np

from .errors import (
    BadIndexError,
    DegenerateSegmentError,
    DuplicatePointError,
    NonFiniteError,
    NotCcwError,
    NotStrictlyConvexError,
    OddCountError,
    TooFewError,
)

ANGLE_TOL = 1e-9          # radians, absolute
SQ_REL_TOL = 2e-9         # relative, on squared distances (~1e-9 on lengths)

TWO_PI = 2.0 * math.pi
CANDIDATE_ANGLE = 2.0 * math.pi / 3.0


@dataclass(frozen=True)
class Point:
    x: float
    y: float


def _as_point(p) -> Point:
    if isinstance(p, Point):
        return p
    x, y = p
    return Point(float(x), float(y))


@dataclass(frozen=True)
class ConvexPointSet:
    """An even-sized, strictly convex, counterclockwise point sequence.

    ``ext[t]`` is the exterior angle at vertex t (the ccw turn from edge
    t-1 -> t to edge t -> t+1); ``ext_prefix[t]`` is the sum of exterior
    angles at vertices 0 .. t-1, so ``ext_prefix[n]`` is the full 2*pi turn.
    Instances are immutable; construct them via :func:`validate_convex_ccw`.
    """

    points: tuple[Point, ...]
    ext: tuple[float, ...]
    ext_prefix: tuple[float, ...]

    @property
    def n(self) -> int:
        return len(self.points)

    @cached_property
    def xs(self) -> np.ndarray:
        return np.array([p.x for p in self.points], dtype=np.float64)

    @cached_property
    def ys(self) -> np.ndarray:
        return np.array([p.y for p in self.points], dtype=np.float64)

    @cached_property
    def _ext_cum2(self) -> np.ndarray:
        # prefix sums of exterior angles tiled twice: O(1) wraparound sums
        doubled = np.array(self.ext + self.ext, dtype=np.float64)
        out = np.zeros(2 * self.n + 1)
        np.cumsum(doubled, out=out[1:])
        return out

    def coords(self) -> list[tuple[float, float]]:
        return [(p.x, p.y) for p in self.points]


def validate_convex_ccw(points: Sequence | Iterable) -> ConvexPointSet:
    """Validate a point sequence as strictly convex, ccw and even-sized.

    Raises TooFewError, OddCountError, NonFiniteError, DuplicatePointError,
    NotCcwError (all turns clockwise) or NotStrictlyConvexError (collinear
    triple, mixed turns, or total turning angle differing from 2*pi).
    """
    pts = tuple(_as_point(p) for p in points)
    n = len(pts)
    if n < 2:
        raise TooFewError(f"need at least 2 points, got {n}")
    if n % 2 != 0:
        raise OddCountError(f"point count must be even, got {n}")
    for p in pts:
        if not (math.isfinite(p.x) and math.isfinite(p.y)):
            raise NonFiniteError(f"({p.x}, {p.y})")
    seen = set()
    for p in pts:
        key = (p.x, p.y)
        if key in seen:
            raise DuplicatePointError(f"({p.x}, {p.y})")
        seen.add(key)

    if n == 2:
        # a 2-gon: both "turns" are half-circle reversals
        ext = (math.pi, math.pi)
    else:
        crosses = []
        dots = []
        for t in range(n):
            a, b, c = pts[t - 1], pts[t], pts[(t + 1) % n]
            ux, uy = b.x - a.x, b.y - a.y
            vx, vy = c.x - b.x, c.y - b.y
            crosses.append(ux * vy - uy * vx)
            dots.append(ux * vx + uy * vy)
        if any(cr == 0.0 for cr in crosses):
            t = crosses.index(0.0)
            raise NotStrictlyConvexError(f"collinear triple at vertex {t}")
        if all(cr < 0.0 for cr in crosses):
            raise NotCcwError("all turns are clockwise")
        if any(cr < 0.0 for cr in crosses):
            t = next(i for i, cr in enumerate(crosses) if cr < 0.0)
            raise NotStrictlyConvexError(f"right turn at vertex {t}")
        ext = tuple(math.atan2(cr, d) for cr, d in zip(crosses, dots))

    prefix = [0.0]
    acc = 0.0
    for e in ext:
        acc += e
        prefix.append(acc)
    if abs(prefix[-1] - TWO_PI) > ANGLE_TOL:
        # all-left-turn but multiply wound vertex orderings end up here
        raise NotStrictlyConvexError(
            f"total turning angle {prefix[-1]:.12f} != 2*pi"
        )
    return ConvexPointSet(points=pts, ext=ext, ext_prefix=tuple(prefix))


def _check_index(P: ConvexPointSet, i: int) -> None:
    if not 0 <= i < P.n:
        raise BadIndexError(f"index {i} outside [0, {P.n})")


def turning_angle(P: ConvexPointSet, i: int, j: int) -> float:
    """Cumulative exterior angle along the arc <i, j>.

    The ccw rotation taking edge direction i -> i+1 onto edge direction
    j-1 -> j, i.e. the sum of exterior angles at the vertices strictly
    inside the arc. turning_angle(P, i, i+1) == 0. Result in [0, 2*pi).
    """
    _check_index(P, i)
    _check_index(P, j)
    if i == j:
        raise BadIndexError("turning angle needs two distinct indices")
    n = P.n
    a = (i + 1) % n
    steps = (j - i - 1) % n
    cum = P._ext_cum2
    return float(cum[a + steps] - cum[a])


def sq_dist(P: ConvexPointSet, i: int, j: int) -> float:
    """Squared Euclidean distance between vertices i and j."""
    _check_index(P, i)
    _check_index(P, j)
    pi, pj = P.points[i], P.points[j]
    dx = pj.x - pi.x
    dy = pj.y - pi.y
    return dx * dx + dy * dy


class PolarityRegion(Enum):
    """Where a point sits relative to a directed segment's polarity areas.

    For a directed segment vi -> vj of length d, points strictly on the
    right side and inside the circular cap from which the segment subtends
    an angle of at least pi/3 split into three areas: NEGATIVE (farther
    than d from vj, hugging vi), POSITIVE (farther than d from vi, hugging
    vj) and NEUTRAL (within d of both). Points on the left, on the line,
    or right but outside the cap get their own labels.
    """

    LEFT_OF_LINE = "left-of-line"
    ON_LINE = "on-line"
    OUTSIDE_CAP = "outside-cap"
    NEGATIVE = "negative"
    POSITIVE = "positive"
    NEUTRAL = "neutral"


def classify_polarity_region(vi, vj, p) -> PolarityRegion:
    """Classify p against the polarity areas of the directed segment vi -> vj.

    The cap is the region right of the line and inside the circle through
    vi and vj of radius d/sqrt(3) centered right of the line. Distance ties
    (equal to d within tolerance) classify as NEUTRAL; points on the cap
    boundary count as inside.
    """
    vi = _as_point(vi)
    vj = _as_point(vj)
    p = _as_point(p)
    ex, ey = vj.x - vi.x, vj.y - vi.y
    dd = ex * ex + ey * ey
    if dd == 0.0:
        raise DegenerateSegmentError("vi == vj")
    cross = ex * (p.y - vi.y) - ey * (p.x - vi.x)
    # |cross| = d * (perpendicular distance); relative test on that product
    if abs(cross) <= 1e-9 * dd:
        return PolarityRegion.ON_LINE
    if cross > 0.0:
        return PolarityRegion.LEFT_OF_LINE
    d = math.sqrt(dd)
    # cap circle: radius d/sqrt(3), center right of the line at the
    # inscribed-angle position for pi/3
    cx = (vi.x + vj.x) / 2.0 + ey / (2.0 * math.sqrt(3.0))
    cy = (vi.y + vj.y) / 2.0 - ex / (2.0 * math.sqrt(3.0))
    rr = dd / 3.0
    pcx, pcy = p.x - cx, p.y - cy
    if pcx * pcx + pcy * pcy > rr * (1.0 + SQ_REL_TOL):
        return PolarityRegion.OUTSIDE_CAP
    dix, diy = p.x - vi.x, p.y - vi.y
    djx, djy = p.x - vj.x, p.y - vj.y
    di2 = dix * dix + diy * diy
    dj2 = djx * djx + djy * djy
    if di2 > dd * (1.0 + SQ_REL_TOL):
        return PolarityRegion.POSITIVE
    if dj2 > dd * (1.0 + SQ_REL_TOL):
        return PolarityRegion.NEGATIVE
    return PolarityRegion.NEUTRAL
