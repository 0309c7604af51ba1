"""Brute-force enumeration and validation of Tverberg partitions of 7 points.

For 7 points in general position only two partition shapes can be Tverberg:
two triples plus a singleton (3,3,1), and a triple plus two crossing pairs
(3,2,2). The enumerator tests all 70 + 105 = 175 candidates of those shapes
with the generic hull-intersection check; the remaining 126 set-partitions
into 3 parts need coincident or collinear points and are skipped (a property
the test suite verifies rather than assumes).
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from .errors import NotGeneralPosition, OverlapError, ShapeError
from .geometry import (ConvexRegion, HalfPlane, Membership, Point, PointSet,
                       RegionKind, clip_region, convex_hull,
                       is_general_position, orient, region_contains,
                       region_halfplanes, segment_common_point)


class Shape(Enum):
    S331 = "S331"
    S322 = "S322"
    OTHER = "Other"

    @staticmethod
    def from_sizes(sizes: tuple[int, ...]) -> "Shape":
        if sizes == (3, 3, 1):
            return Shape.S331
        if sizes == (3, 2, 2):
            return Shape.S322
        return Shape.OTHER


@dataclass(frozen=True)
class Partition:
    """An index partition in canonical form: each part sorted ascending,
    parts ordered by size descending then lexicographically."""

    parts: tuple[tuple[int, ...], ...]

    @staticmethod
    def of(parts: Iterable[Iterable[int]]) -> "Partition":
        norm = tuple(sorted((tuple(sorted(part)) for part in parts),
                            key=lambda t: (-len(t), t)))
        seen: set[int] = set()
        for part in norm:
            if not part:
                raise ValueError("empty part")
            if seen.intersection(part):
                raise ValueError("parts are not disjoint")
            seen.update(part)
        return Partition(norm)

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)

    def indices(self) -> set[int]:
        return {i for part in self.parts for i in part}


@dataclass(frozen=True)
class Witness:
    """A common point of all parts' convex hulls, certifying the partition."""

    point: Point
    shape: Shape


@functools.lru_cache(maxsize=8192)
def _part_data(ps: PointSet, part: tuple[int, ...]) -> tuple[ConvexRegion, tuple[HalfPlane, ...]]:
    """Hull of a part and its half-plane representation; cached because the
    same parts recur across the 175 candidate partitions of one instance."""
    hull = convex_hull([ps[i] for i in part])
    return hull, tuple(region_halfplanes(hull))


def is_tverberg(ps: PointSet, partition: Partition) -> Optional[Witness]:
    """Witness for a 3-part partition whose hulls share a point, else None.

    The common region is found by iterated half-plane clipping, lowest
    dimensional hull first; the witness is its lexicographically smallest
    vertex. For a (3,2,2) partition with properly crossing pairs the result
    is cross-checked against the direct segment intersection point.
    """
    if len(partition.parts) != 3:
        raise ValueError("partition must have exactly 3 parts")
    if partition.indices() != set(range(len(ps))):
        raise ValueError("partition must cover all point indices")
    datas = sorted((_part_data(ps, part) for part in partition.parts),
                   key=lambda d: len(d[0].vertices))
    common = datas[0][0]
    for _, halfplanes in datas[1:]:
        for h in halfplanes:
            common = clip_region(common, h)
            if common.is_empty:
                break
        if common.is_empty:
            break
    shape = Shape.from_sizes(partition.sizes)
    if shape is Shape.S322:
        _assert_crossing_agreement(ps, partition, common)
    if common.is_empty:
        return None
    return Witness(common.vertices[0], shape)


def _assert_crossing_agreement(ps: PointSet, partition: Partition,
                               common: ConvexRegion) -> None:
    (a, b), (c, d) = (tuple(ps[i] for i in part)
                      for part in partition.parts if len(part) == 2)
    try:
        crossing = segment_common_point(a, b, c, d)
    except OverlapError:
        return  # degenerate input; nothing to cross-check
    if not common.is_empty:
        assert common.kind is RegionKind.POINT and common.vertices[0] == crossing, \
            "clipping and segment intersection disagree on a (3,2,2) witness"


def _point_in_triangle(p: Point, a: Point, b: Point, c: Point) -> bool:
    """Barycentric sign test: p in the closed triangle abc."""
    s1, s2, s3 = orient(a, b, p), orient(b, c, p), orient(c, a, p)
    return (s1 >= 0 and s2 >= 0 and s3 >= 0) or (s1 <= 0 and s2 <= 0 and s3 <= 0)


def shape_specific_witness(ps: PointSet, partition: Partition) -> Optional[Point]:
    """Independent validity check that never touches the clipping machinery.

    (3,3,1): the singleton point must pass the barycentric sign test against
    both triples. (3,2,2): the pairs' segments must cross and the crossing
    must lie in the triple's triangle.
    """
    sizes = partition.sizes
    if sizes == (3, 3, 1):
        x = ps[partition.parts[2][0]]
        for part in partition.parts[:2]:
            a, b, c = (ps[i] for i in part)
            if not _point_in_triangle(x, a, b, c):
                return None
        return x
    if sizes == (3, 2, 2):
        (a, b), (c, d) = (tuple(ps[i] for i in part) for part in partition.parts[1:])
        crossing = segment_common_point(a, b, c, d)
        if crossing is None:
            return None
        t1, t2, t3 = (ps[i] for i in partition.parts[0])
        return crossing if _point_in_triangle(crossing, t1, t2, t3) else None
    raise ShapeError(f"no specialized check for shape {sizes}")


@functools.lru_cache(maxsize=1)
def candidate_partitions() -> tuple[Partition, ...]:
    """All 70 (3,3,1) and 105 (3,2,2) candidates, in canonical order."""
    out = []
    indices = range(7)
    for single in indices:
        rest = [i for i in indices if i != single]
        anchor, others = rest[0], rest[1:]
        for pair in itertools.combinations(others, 2):
            first = (anchor,) + pair
            second = tuple(i for i in rest if i not in first)
            out.append(Partition.of([first, second, (single,)]))
    for triple in itertools.combinations(indices, 3):
        rest = [i for i in indices if i not in triple]
        for mate in rest[1:]:
            pair1 = (rest[0], mate)
            pair2 = tuple(i for i in rest if i not in pair1)
            out.append(Partition.of([triple, pair1, pair2]))
    return tuple(sorted(out, key=lambda p: p.parts))


@functools.lru_cache(maxsize=1)
def offshape_partitions() -> tuple[Partition, ...]:
    """The remaining 126 set-partitions of 7 indices into 3 parts, shapes
    (5,1,1) and (4,2,1); never Tverberg in general position."""
    out = []
    indices = range(7)
    for five in itertools.combinations(indices, 5):
        rest = [i for i in indices if i not in five]
        out.append(Partition.of([five, rest[:1], rest[1:]]))
    for four in itertools.combinations(indices, 4):
        rest = [i for i in indices if i not in four]
        for single in rest:
            pair = tuple(i for i in rest if i != single)
            out.append(Partition.of([four, pair, (single,)]))
    return tuple(sorted(out, key=lambda p: p.parts))


def enumerate_all(ps: PointSet) -> list[tuple[Partition, Witness]]:
    """All Tverberg 3-partitions of a general-position 7-point set, with
    witnesses, in canonical partition order."""
    if len(ps) != 7:
        raise ValueError("enumerate_all expects exactly 7 points")
    if not is_general_position(ps):
        raise NotGeneralPosition("enumerate_all requires general position")
    results = []
    for partition in candidate_partitions():
        witness = is_tverberg(ps, partition)
        if witness is not None:
            results.append((partition, witness))
    return results


def count_by_shape(results: list[tuple[Partition, Witness]]) -> tuple[int, int]:
    """(number of S331, number of S322) results."""
    c331 = sum(1 for _, w in results if w.shape is Shape.S331)
    c322 = sum(1 for _, w in results if w.shape is Shape.S322)
    return c331, c322


def contains_point(region: ConvexRegion, p: Point) -> bool:
    return region_contains(region, p) is not Membership.OUTSIDE
