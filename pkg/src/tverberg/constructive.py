"""Constructive extraction of four Tverberg partitions from any 7-point set.

The entry point `prove_sierksma` classifies the depth-3 region C of the
input and, per case, emits at least four distinct partitions:

  case 1 - C is a polygon disjoint from X: one (3,2,2) partition per vertex,
  case 2 - C contains >= 2 points of X: two Birch (3,3,1) partitions each,
  case 3 - C is a polygon containing one point of X: its Birch pair plus
           two vertex partitions,
  case 4 - C is a single point x of X: three half-planes through x cover the
           plane and split the other six points into three sectors of two;
           the four transversal triples give four (3,3,1) partitions.

Every emitted partition is re-validated against the brute-force oracle; a
failure raises instead of degrading the trace.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from enum import Enum

from .depth import DepthRegion, depth_region, tukey_depth
from .errors import (CollinearError, LemmaViolation, NoCoverError,
                     PreconditionError, StructureError)
from .geometry import (ConvexRegion, HalfPlane, Membership, Point, PointSet,
                       RegionKind, convex_hull, is_general_position, orient,
                       region_contains)
from .oracle import Partition, Witness, is_tverberg


class Provenance(Enum):
    BIRCH_FIRST = "BirchFirst"
    BIRCH_SECOND = "BirchSecond"
    VERTEX_OF_C = "VertexOfC"
    CASE4_SECTOR = "Case4Sector"


@dataclass(frozen=True)
class SectorDecomposition:
    """Three covering half-planes through the center and the three pairs of
    outer points lying in exactly two of them."""

    center: Point
    halfplanes: tuple[HalfPlane, HalfPlane, HalfPlane]
    doubly_covered: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class ProofTrace:
    case_label: int
    c3: DepthRegion
    partitions: tuple[tuple[Partition, Witness, Provenance], ...]


@dataclass(frozen=True)
class CaseReport:
    label: int
    c3: DepthRegion
    contained: tuple[int, ...]


def order_around(x: Point, ys: PointSet) -> list[int]:
    """Indices of ys sorted clockwise around x, starting at the index of the
    lexicographically smallest point. Uses orientation signs only.

    Raises CollinearError when two points share a ray from x, where the
    angular order is genuinely ambiguous; points on opposite rays still sort.
    """
    pts = ys.points
    for i, p in enumerate(pts):
        if p == x:
            raise CollinearError(f"point {i} coincides with the center")
    for i, j in itertools.combinations(range(len(pts)), 2):
        if orient(x, pts[i], pts[j]) == 0:
            dot = ((pts[i].x - x.x) * (pts[j].x - x.x)
                   + (pts[i].y - x.y) * (pts[j].y - x.y))
            if dot > 0:
                raise CollinearError(
                    f"points {i} and {j} lie on the same ray from the center")

    def half(i: int) -> int:
        dy = pts[i].y - x.y
        return 0 if dy > 0 or (dy == 0 and pts[i].x > x.x) else 1

    def cmp(i: int, j: int) -> int:
        hi, hj = half(i), half(j)
        if hi != hj:
            return -1 if hi < hj else 1
        return -orient(x, pts[i], pts[j])

    ccw = sorted(range(len(pts)), key=functools.cmp_to_key(cmp))
    cw = ccw[::-1]
    start = cw.index(min(range(len(pts)), key=lambda i: pts[i]))
    return cw[start:] + cw[:start]


def _check_center_depth(x_idx: int, ps: PointSet) -> None:
    if tukey_depth(ps[x_idx], ps) < 3:
        raise PreconditionError(f"point {x_idx} has Tukey depth < 3")


def _ordered_rest(x_idx: int, ps: PointSet) -> list[int]:
    rest = [i for i in range(len(ps)) if i != x_idx]
    order = order_around(ps[x_idx], PointSet(ps[i] for i in rest))
    return [rest[i] for i in order]


def _validated(ps: PointSet, partition: Partition, what: str) -> tuple[Partition, Witness]:
    witness = is_tverberg(ps, partition)
    if witness is None:
        raise LemmaViolation(f"{what} produced a non-Tverberg partition {partition.parts}")
    return partition, witness


def birch_first(x_idx: int, ps: PointSet) -> Partition:
    """Birch's alternating partition around a depth-3 point: {x} plus the
    even- and odd-position triples of the clockwise order."""
    if len(ps) != 7:
        raise ValueError("expects exactly 7 points")
    _check_center_depth(x_idx, ps)
    cw = _ordered_rest(x_idx, ps)
    partition = Partition.of([cw[0::2], cw[1::2], (x_idx,)])
    _validated(ps, partition, "birch_first")
    return partition


def birch_second(x_idx: int, ps: PointSet) -> Partition:
    """The second Birch partition: scan the six long chords p_i p_{i+3} of
    the clockwise order for the sign flip (x left of one, right of the next)
    and regroup around it."""
    if len(ps) != 7:
        raise ValueError("expects exactly 7 points")
    _check_center_depth(x_idx, ps)
    cw = _ordered_rest(x_idx, ps)
    x = ps[x_idx]
    pt = [ps[i] for i in cw]
    signs = []
    for i in range(6):
        s = orient(pt[i], pt[(i + 3) % 6], x)
        if s == 0:
            raise CollinearError("center lies on a long chord")
        signs.append(s)
    flip = next((i for i in range(6) if signs[i] > 0 and signs[(i + 1) % 6] < 0), None)
    if flip is None:
        raise LemmaViolation("no sign flip among the long chords")
    pick = lambda *offs: tuple(cw[(flip + o) % 6] for o in offs)
    partition = Partition.of([pick(0, 2, 3), pick(1, 4, 5), (x_idx,)])
    _validated(ps, partition, "birch_second")
    return partition


def vertex_partition(v: Point, dr: DepthRegion, ps: PointSet) -> Partition:
    """The (3,2,2) partition assigned to a polygon vertex of C not in X: the
    two point pairs spanning the incident edges' lines plus the remaining
    triple; the vertex itself is the witness."""
    region = dr.region
    if region.kind is not RegionKind.POLYGON or v not in region.vertices:
        raise StructureError("v is not a polygon vertex of the depth region")
    if v in ps.points:
        raise StructureError("v is a point of the input set")
    verts = region.vertices
    i = verts.index(v)
    pairs = []
    for a, b in ((verts[i - 1], v), (v, verts[(i + 1) % len(verts)])):
        on_line = tuple(j for j in range(len(ps)) if orient(a, b, ps[j]) == 0)
        if len(on_line) != 2:
            raise StructureError(
                f"edge line holds {len(on_line)} input points, expected 2")
        p, q = ps[on_line[0]], ps[on_line[1]]
        if not (min(p, q) < v < max(p, q)):
            raise StructureError("vertex is not strictly between the edge's points")
        pairs.append(on_line)
    if set(pairs[0]) & set(pairs[1]):
        raise StructureError("incident edge lines share an input point")
    rest = tuple(j for j in range(len(ps)) if j not in pairs[0] + pairs[1])
    if region_contains(convex_hull([ps[j] for j in rest]), v) is Membership.OUTSIDE:
        raise StructureError("vertex escapes the remaining triple's triangle")
    partition = Partition.of([rest, pairs[0], pairs[1]])
    _validated(ps, partition, "vertex_partition")
    return partition


def _covers_plane(triple: tuple[HalfPlane, ...]) -> bool:
    """Three closed half-planes with a common boundary point cover the plane
    iff the origin is in the convex hull of their outward normals."""
    normals = [Point.of(h.a, h.b) for h in triple]
    hull = convex_hull(normals)
    return region_contains(hull, Point.of(0, 0)) is not Membership.OUTSIDE


def covering_halfplane_search(
        ps: PointSet, x_idx: int, r: int) -> tuple[tuple[HalfPlane, ...], tuple[tuple[int, ...], ...]]:
    """Find three closed half-planes bounded by lines through ps[x_idx] and
    another point, each containing >= 2r-1 points, whose union is the plane
    and which split the other points into three sectors of r-1 doubly-covered
    points each. Returns the lexicographically smallest such triple."""
    x = ps[x_idx]
    need = 2 * r - 1
    others = [i for i in range(len(ps)) if i != x_idx]
    candidates = set()
    for i in others:
        for h in (HalfPlane.left_of(x, ps[i]), HalfPlane.left_of(ps[i], x)):
            if sum(1 for p in ps if h.side(p) >= 0) >= need:
                candidates.add(h)
    for triple in itertools.combinations(sorted(candidates), 3):
        if not _covers_plane(triple):
            continue
        sectors: dict[int, list[int]] = {0: [], 1: [], 2: []}
        ok = True
        for i in others:
            membership = [k for k in range(3) if triple[k].side(ps[i]) >= 0]
            if len(membership) != 2:
                ok = False
                break
            missing = 3 - sum(membership)
            sectors[missing].append(i)
        if ok and all(len(sectors[k]) == r - 1 for k in range(3)):
            return triple, tuple(tuple(sorted(sectors[k])) for k in range(3))
    raise NoCoverError("no covering half-plane triple with balanced sectors")


def find_covering_halfplanes(x_idx: int, ps: PointSet) -> SectorDecomposition:
    """Case-4 cover for 7 points: three half-planes through x with five
    points each, sectors of two."""
    if len(ps) != 7:
        raise ValueError("expects exactly 7 points")
    _check_center_depth(x_idx, ps)
    triple, sectors = covering_halfplane_search(ps, x_idx, 3)
    return SectorDecomposition(ps[x_idx], triple, sectors)


def case4_partitions(sd: SectorDecomposition, ps: PointSet) -> list[Partition]:
    """The four (3,3,1) partitions of a case-4 instance: all splits of the
    six outer points into two triples crossing every sector."""
    if tuple(len(s) for s in sd.doubly_covered) != (2, 2, 2):
        raise StructureError("sectors must hold exactly two points each")
    x_idx = ps.index(sd.center)
    (a0, a1), s2, s3 = sd.doubly_covered
    partitions = []
    for b in s2:
        for c in s3:
            first = (a0, b, c)
            second = (a1,) + tuple(i for i in s2 + s3 if i not in (b, c))
            for triple in (first, second):
                hull = convex_hull([ps[i] for i in triple])
                if region_contains(hull, sd.center) is Membership.OUTSIDE:
                    raise LemmaViolation(
                        f"transversal triple {triple} misses the center")
            partition = Partition.of([first, second, (x_idx,)])
            _validated(ps, partition, "case4_partitions")
            partitions.append(partition)
    if len(set(partitions)) != 4:
        raise LemmaViolation("case-4 transversals are not four distinct partitions")
    return sorted(partitions, key=lambda p: p.parts)


def classify_case(ps: PointSet) -> CaseReport:
    """Label the instance by the structure of its depth-3 region C:
    1: C disjoint from X, 2: |C ∩ X| >= 2, 3: C two-dimensional with one
    point of X, 4: C a single point of X."""
    if len(ps) != 7:
        raise ValueError("expects exactly 7 points")
    dr = depth_region(ps, 3)
    region = dr.region
    if region.kind is RegionKind.POINT:
        p = region.vertices[0]
        if p not in ps.points:
            raise LemmaViolation(f"C3 is the single point {p} not in X")
        return CaseReport(4, dr, (ps.index(p),))
    if region.kind is not RegionKind.POLYGON:
        raise LemmaViolation(f"C3 has kind {region.kind.value}")
    contained = tuple(i for i in range(len(ps))
                      if region_contains(region, ps[i]) is not Membership.OUTSIDE)
    if len(contained) == 0:
        return CaseReport(1, dr, contained)
    if len(contained) == 1:
        return CaseReport(3, dr, contained)
    return CaseReport(2, dr, contained)


def _tagged(ps: PointSet, partition: Partition, tag: Provenance,
            what: str) -> tuple[Partition, Witness, Provenance]:
    partition, witness = _validated(ps, partition, what)
    return partition, witness, tag


def prove_sierksma(ps: PointSet) -> ProofTrace:
    """Produce a validated trace with at least four distinct Tverberg
    partitions, following the case analysis on the depth-3 region."""
    report = classify_case(ps)
    dr = report.c3
    entries: list[tuple[Partition, Witness, Provenance]] = []
    if report.label == 1:
        verts = dr.region.vertices
        if len(verts) < 4:
            raise LemmaViolation("case-1 region has fewer than four vertices")
        for v in sorted(verts)[:4]:
            entries.append(_tagged(ps, vertex_partition(v, dr, ps),
                                   Provenance.VERTEX_OF_C, "case 1"))
    elif report.label == 2:
        chosen = sorted(report.contained, key=lambda i: ps[i])[:2]
        for x_idx in chosen:
            entries.append(_tagged(ps, birch_first(x_idx, ps),
                                   Provenance.BIRCH_FIRST, "case 2"))
            entries.append(_tagged(ps, birch_second(x_idx, ps),
                                   Provenance.BIRCH_SECOND, "case 2"))
    elif report.label == 3:
        x_idx = report.contained[0]
        entries.append(_tagged(ps, birch_first(x_idx, ps),
                               Provenance.BIRCH_FIRST, "case 3"))
        entries.append(_tagged(ps, birch_second(x_idx, ps),
                               Provenance.BIRCH_SECOND, "case 3"))
        free = sorted(v for v in dr.region.vertices if v not in ps.points)
        if len(free) < 2:
            raise LemmaViolation("case-3 region has fewer than two free vertices")
        for v in free[:2]:
            entries.append(_tagged(ps, vertex_partition(v, dr, ps),
                                   Provenance.VERTEX_OF_C, "case 3"))
    else:
        sd = find_covering_halfplanes(report.contained[0], ps)
        for partition in case4_partitions(sd, ps):
            entries.append(_tagged(ps, partition, Provenance.CASE4_SECTOR, "case 4"))
    if len({p for p, _, _ in entries}) < 4:
        raise LemmaViolation("trace has fewer than four distinct partitions")
    entries.sort(key=lambda e: e[0].parts)
    return ProofTrace(report.label, dr, tuple(entries))
