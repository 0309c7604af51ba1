"""Exact rational planar geometry: points, convex regions, half-planes, predicates.

Every coordinate is a `fractions.Fraction`, every predicate is decided by
integer arithmetic on numerators/denominators, so there is no rounding
anywhere. Regions are kept in a canonical form (counterclockwise vertices
starting at the lexicographically smallest) so that equality of regions is
plain equality of vertex tuples.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from math import gcd
from typing import Iterable, NamedTuple, Optional, Sequence, Union

from .errors import OverlapError

RationalLike = Union[int, str, Fraction]


def rational(value: RationalLike) -> Fraction:
    """Coerce an int, Fraction, or "num/den" string to an exact Fraction."""
    if isinstance(value, Fraction):
        return value
    return Fraction(value)


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @staticmethod
    def of(x: RationalLike, y: RationalLike) -> "Point":
        return Point(rational(x), rational(y))

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"Point({self.x}, {self.y})"


ORIGIN = Point(Fraction(0), Fraction(0))


class PointSet:
    """An ordered, labeled list of points; labels are the list indices."""

    __slots__ = ("points", "_hash")

    def __init__(self, points: Iterable[Point]):
        self.points: tuple[Point, ...] = tuple(points)
        self._hash: Optional[int] = None

    @staticmethod
    def of(coords: Iterable[tuple[RationalLike, RationalLike]]) -> "PointSet":
        return PointSet(Point.of(x, y) for x, y in coords)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, i: int) -> Point:
        return self.points[i]

    def __iter__(self):
        return iter(self.points)

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.points)
        return self._hash

    def __repr__(self) -> str:  # pragma: no cover - debugging aid
        return f"PointSet({list(self.points)!r})"

    def index(self, p: Point) -> int:
        return self.points.index(p)


def _sign(v) -> int:
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q-p) x (r-p).

    +1 when r is strictly left of the directed line p->q, -1 when strictly
    right, 0 when the three points are collinear.
    """
    pxn, pxd = p.x.numerator, p.x.denominator
    pyn, pyd = p.y.numerator, p.y.denominator
    qxn, qxd = q.x.numerator, q.x.denominator
    qyn, qyd = q.y.numerator, q.y.denominator
    rxn, rxd = r.x.numerator, r.x.denominator
    ryn, ryd = r.y.numerator, r.y.denominator
    if pxd == pyd == qxd == qyd == rxd == ryd == 1:
        return _sign((qxn - pxn) * (ryn - pyn) - (qyn - pyn) * (rxn - pxn))
    # Cross-multiplied integer form; all denominators are positive.
    n1 = (qxn * pxd - pxn * qxd) * (ryn * pyd - pyn * ryd)
    d1 = (qxd * pxd) * (ryd * pyd)
    n2 = (qyn * pyd - pyn * qyd) * (rxn * pxd - pxn * rxd)
    d2 = (qyd * pyd) * (rxd * pxd)
    return _sign(n1 * d2 - n2 * d1)


def _bbox_contains(a: Point, b: Point, p: Point) -> bool:
    return (min(a.x, b.x) <= p.x <= max(a.x, b.x)
            and min(a.y, b.y) <= p.y <= max(a.y, b.y))


def _line_intersection(a1: Point, a2: Point, b1: Point, b2: Point) -> Point:
    """Intersection point of two non-parallel lines, computed exactly."""
    dax, day = a2.x - a1.x, a2.y - a1.y
    dbx, dby = b2.x - b1.x, b2.y - b1.y
    denom = dax * dby - day * dbx
    t = ((b1.x - a1.x) * dby - (b1.y - a1.y) * dbx) / denom
    return Point(a1.x + t * dax, a1.y + t * day)


def segment_common_point(a1: Point, a2: Point, b1: Point, b2: Point) -> Optional[Point]:
    """Unique common point of two closed segments, or None when disjoint.

    Raises OverlapError when the segments are collinear and share more than
    one point (cannot happen for points in general position).
    """
    if a1 == a2 or b1 == b2:
        raise ValueError("segment endpoints must be distinct")
    d1 = orient(b1, b2, a1)
    d2 = orient(b1, b2, a2)
    d3 = orient(a1, a2, b1)
    d4 = orient(a1, a2, b2)
    if d1 == d2 == d3 == d4 == 0:
        # Collinear: lexicographic order equals order along the line.
        lo_a, hi_a = sorted((a1, a2))
        lo_b, hi_b = sorted((b1, b2))
        lo, hi = max(lo_a, lo_b), min(hi_a, hi_b)
        if lo > hi:
            return None
        if lo == hi:
            return lo
        raise OverlapError(f"segments overlap along [{lo}, {hi}]")
    if d1 * d2 < 0 and d3 * d4 < 0:
        return _line_intersection(a1, a2, b1, b2)
    touches = set()
    if d1 == 0 and _bbox_contains(b1, b2, a1):
        touches.add(a1)
    if d2 == 0 and _bbox_contains(b1, b2, a2):
        touches.add(a2)
    if d3 == 0 and _bbox_contains(a1, a2, b1):
        touches.add(b1)
    if d4 == 0 and _bbox_contains(a1, a2, b2):
        touches.add(b2)
    if not touches:
        return None
    # Non-collinear segments share at most one point.
    assert len(touches) == 1
    return touches.pop()


class RegionKind(Enum):
    EMPTY = "Empty"
    POINT = "SinglePoint"
    SEGMENT = "Segment"
    POLYGON = "Polygon"


class Membership(Enum):
    INTERIOR = "Interior"
    BOUNDARY = "Boundary"
    OUTSIDE = "Outside"


@dataclass(frozen=True)
class ConvexRegion:
    """A canonical convex region: empty, a point, a segment, or a polygon.

    Polygon vertices are minimal and counterclockwise, starting at the
    lexicographically smallest vertex; segment endpoints are sorted. Two
    regions are equal iff their canonical forms are equal.
    """

    kind: RegionKind
    vertices: tuple[Point, ...]

    @staticmethod
    def empty() -> "ConvexRegion":
        return ConvexRegion(RegionKind.EMPTY, ())

    @staticmethod
    def single(p: Point) -> "ConvexRegion":
        return ConvexRegion(RegionKind.POINT, (p,))

    @property
    def is_empty(self) -> bool:
        return self.kind is RegionKind.EMPTY


def convex_hull(points: Union[PointSet, Sequence[Point], Iterable[Point]]) -> ConvexRegion:
    """Canonical convex hull; the kind reflects the true dimension."""
    pts = sorted(set(points))
    if not pts:
        raise ValueError("convex hull of an empty set")
    if len(pts) == 1:
        return ConvexRegion.single(pts[0])

    def build(seq: Sequence[Point]) -> list[Point]:
        out: list[Point] = []
        for p in seq:
            while len(out) >= 2 and orient(out[-2], out[-1], p) <= 0:
                out.pop()
            out.append(p)
        return out

    lower = build(pts)
    upper = build(pts[::-1])
    ring = lower[:-1] + upper[:-1]
    if len(ring) == 2:
        return ConvexRegion(RegionKind.SEGMENT, (pts[0], pts[-1]))
    return ConvexRegion(RegionKind.POLYGON, tuple(ring))


def region_contains(region: ConvexRegion, p: Point) -> Membership:
    """Exact membership of p relative to the closed region."""
    if region.kind is RegionKind.EMPTY:
        return Membership.OUTSIDE
    if region.kind is RegionKind.POINT:
        return Membership.BOUNDARY if p == region.vertices[0] else Membership.OUTSIDE
    if region.kind is RegionKind.SEGMENT:
        a, b = region.vertices
        if orient(a, b, p) == 0 and _bbox_contains(a, b, p):
            return Membership.BOUNDARY
        return Membership.OUTSIDE
    verts = region.vertices
    on_edge = False
    for i, a in enumerate(verts):
        b = verts[(i + 1) % len(verts)]
        s = orient(a, b, p)
        if s < 0:
            return Membership.OUTSIDE
        if s == 0:
            on_edge = True
    return Membership.BOUNDARY if on_edge else Membership.INTERIOR


@dataclass(frozen=True, order=True)
class HalfPlane:
    """The closed half-plane {(x, y) : a*x + b*y <= c} with integer a, b, c.

    Stored canonically: coefficients are coprime integers obtained by a
    positive scaling (a negative scaling would flip the set), so equal sets
    have equal coefficient triples and tuple order is a canonical order.
    """

    a: int
    b: int
    c: int

    @staticmethod
    def of(a: RationalLike, b: RationalLike, c: RationalLike) -> "HalfPlane":
        fa, fb, fc = rational(a), rational(b), rational(c)
        if fa == 0 and fb == 0:
            raise ValueError("half-plane normal must be nonzero")
        scale = fa.denominator * fb.denominator * fc.denominator
        ia, ib, ic = int(fa * scale), int(fb * scale), int(fc * scale)
        g = gcd(gcd(abs(ia), abs(ib)), abs(ic))
        return HalfPlane(ia // g, ib // g, ic // g)

    @staticmethod
    def left_of(p: Point, q: Point) -> "HalfPlane":
        """Closed half-plane of points on or to the left of the line p->q."""
        if (p.x.denominator == p.y.denominator
                == q.x.denominator == q.y.denominator == 1):
            a = q.y.numerator - p.y.numerator
            b = p.x.numerator - q.x.numerator
            c = a * p.x.numerator + b * p.y.numerator
            g = gcd(gcd(abs(a), abs(b)), abs(c))
            return HalfPlane(a // g, b // g, c // g)
        a = q.y - p.y
        b = p.x - q.x
        return HalfPlane.of(a, b, a * p.x + b * p.y)

    def side(self, p: Point) -> int:
        """+1 strictly inside, 0 on the boundary, -1 strictly outside."""
        xn, xd = p.x.numerator, p.x.denominator
        yn, yd = p.y.numerator, p.y.denominator
        return _sign(self.c * xd * yd - self.a * xn * yd - self.b * yn * xd)

    def contains(self, p: Point) -> bool:
        return self.side(p) >= 0

    def slack(self, p: Point) -> Fraction:
        """c - a*x - b*y as an exact Fraction (positive strictly inside)."""
        return self.c - self.a * p.x - self.b * p.y

    def boundary_crossing(self, u: Point, v: Point) -> Point:
        """Point where segment u-v crosses the boundary line (u, v on strictly
        opposite sides)."""
        su = self.slack(u)
        t = su / (su - self.slack(v))
        return Point(u.x + t * (v.x - u.x), u.y + t * (v.y - u.y))


def clip_region(region: ConvexRegion, h: HalfPlane) -> ConvexRegion:
    """Canonical intersection of a convex region with a closed half-plane."""
    if region.kind is RegionKind.EMPTY:
        return region
    if region.kind is RegionKind.POINT:
        return region if h.contains(region.vertices[0]) else ConvexRegion.empty()
    if region.kind is RegionKind.SEGMENT:
        u, v = region.vertices
        su, sv = h.side(u), h.side(v)
        if su >= 0 and sv >= 0:
            return region
        if su < 0 and sv < 0:
            return ConvexRegion.empty()
        kept = u if su >= 0 else v
        if h.side(kept) == 0:
            return ConvexRegion.single(kept)
        return convex_hull((kept, h.boundary_crossing(u, v)))
    verts = region.vertices
    sides = [h.side(v) for v in verts]
    if all(s >= 0 for s in sides):
        return region
    out: list[Point] = []
    n = len(verts)
    for i in range(n):
        j = (i + 1) % n
        if sides[i] >= 0:
            out.append(verts[i])
        if sides[i] * sides[j] < 0:
            out.append(h.boundary_crossing(verts[i], verts[j]))
    if not out:
        return ConvexRegion.empty()
    return convex_hull(out)


def region_halfplanes(region: ConvexRegion) -> list[HalfPlane]:
    """A finite family of closed half-planes whose intersection is the region.

    Used to intersect convex hulls by iterated clipping; degenerate kinds get
    explicit slab/box constraints.
    """
    if region.kind is RegionKind.EMPTY:
        raise ValueError("empty region has no half-plane representation")
    if region.kind is RegionKind.POINT:
        (p,) = region.vertices
        return [HalfPlane.of(1, 0, p.x), HalfPlane.of(-1, 0, -p.x),
                HalfPlane.of(0, 1, p.y), HalfPlane.of(0, -1, -p.y)]
    if region.kind is RegionKind.SEGMENT:
        a, b = region.vertices
        dx, dy = b.x - a.x, b.y - a.y
        return [HalfPlane.left_of(a, b), HalfPlane.left_of(b, a),
                HalfPlane.of(dx, dy, dx * b.x + dy * b.y),
                HalfPlane.of(-dx, -dy, -(dx * a.x + dy * a.y))]
    verts = region.vertices
    return [HalfPlane.left_of(a, verts[(i + 1) % len(verts)])
            for i, a in enumerate(verts)]


def intersect_regions(first: ConvexRegion, *rest: ConvexRegion) -> ConvexRegion:
    """Intersection of convex regions via iterated half-plane clipping."""
    region = first
    for other in rest:
        if region.is_empty:
            return region
        if other.is_empty:
            return other
        for h in region_halfplanes(other):
            region = clip_region(region, h)
            if region.is_empty:
                return region
    return region


def is_general_position(ps: PointSet) -> bool:
    """True iff all points are distinct and no three are collinear."""
    pts = ps.points
    if len(set(pts)) != len(pts):
        return False
    return all(orient(a, b, c) != 0
               for a, b, c in itertools.combinations(pts, 3))
