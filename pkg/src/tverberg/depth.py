"""Tukey depth and depth-k regions of planar point sets.

The depth-k region is computed exactly as the intersection of every closed
half-plane bounded by a line through two input points that contains at least
n-k+1 points. For a point set in general position this family determines the
region: any tight constraint can be rotated onto two points without changing
the intersection.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .errors import LemmaViolation, NotGeneralPosition
from .geometry import (ConvexRegion, HalfPlane, Point, PointSet, RegionKind,
                       clip_region, is_general_position, orient)


@dataclass(frozen=True)
class DepthRegion:
    """The region of Tukey depth >= k together with the half-planes that cut it."""

    k: int
    region: ConvexRegion
    constraints: tuple[HalfPlane, ...]


def tukey_depth(p: Point, ps: PointSet) -> int:
    """Maximum k such that p lies in the depth-k region of ps.

    Equals the minimum, over closed half-planes containing p, of the number
    of points of ps in the half-plane. The minimum is attained by a
    half-plane whose boundary passes through p, either through a second
    point of ps or rotated infinitesimally off one; both are evaluated
    combinatorially from side counts.
    """
    if len(ps) == 0:
        raise ValueError("point set must be nonempty")
    at_p = sum(1 for q in ps if q == p)
    best = None
    for q in ps:
        if q == p:
            continue
        left = right = on_fwd = on_bwd = 0
        for r in ps:
            if r == p:
                continue
            s = orient(p, q, r)
            if s > 0:
                left += 1
            elif s < 0:
                right += 1
            else:
                # r is on line(p, q); split by the side of p it lies on.
                fwd = ((q.x - p.x) * (r.x - p.x) + (q.y - p.y) * (r.y - p.y)) > 0
                if fwd:
                    on_fwd += 1
                else:
                    on_bwd += 1
        cand = min(left, right) + min(on_fwd, on_bwd) + at_p
        if best is None or cand < best:
            best = cand
    return len(ps) if best is None else best


def _bounding_box(ps: PointSet) -> ConvexRegion:
    m = max(max(abs(p.x), abs(p.y)) for p in ps)
    b = 1 + 4 * m
    return ConvexRegion(RegionKind.POLYGON, (
        Point(-b, -b), Point(b, -b), Point(b, b), Point(-b, b)))


def depth_region(ps: PointSet, k: int) -> DepthRegion:
    """Exact depth-k region of a point set in general position."""
    if k < 1:
        raise ValueError("k must be >= 1")
    if not is_general_position(ps):
        raise NotGeneralPosition("depth_region requires general position")
    n = len(ps)
    need = n - k + 1
    kept = set()
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            h = HalfPlane.left_of(ps[i], ps[j])
            if sum(1 for r in ps if h.side(r) >= 0) >= need:
                kept.add(h)
    constraints = tuple(sorted(kept))
    region = _bounding_box(ps)
    for h in constraints:
        region = clip_region(region, h)
        if region.is_empty:
            break
    return DepthRegion(k, region, constraints)


class C3Report(Enum):
    POINT_OF_X = "PointOfX"
    TWO_DIMENSIONAL = "TwoDimensional"


def classify_c3(dr: DepthRegion, ps: PointSet) -> C3Report:
    """Classify a computed depth-3 region of 7 points against the dichotomy:
    it is either a single point of ps or two-dimensional."""
    region = dr.region
    if region.kind is RegionKind.POLYGON:
        return C3Report.TWO_DIMENSIONAL
    if region.kind is RegionKind.POINT:
        if region.vertices[0] in ps.points:
            return C3Report.POINT_OF_X
        raise LemmaViolation(f"C3 is the single point {region.vertices[0]} not in X")
    raise LemmaViolation(f"C3 has kind {region.kind.value}")


def check_c3_dichotomy(ps: PointSet) -> C3Report:
    """Compute the depth-3 region of a 7-point set and classify it."""
    if len(ps) != 7:
        raise ValueError("dichotomy check expects exactly 7 points")
    return classify_c3(depth_region(ps, 3), ps)
