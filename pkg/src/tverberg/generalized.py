"""Planar case-4 construction for general r: 3r-2 points whose depth-r
region is a single input point admit ((r-1)!)^2 transversal partitions."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import factorial

from .constructive import covering_halfplane_search
from .depth import depth_region
from .errors import LemmaViolation, NotCase4, ShapeError
from .geometry import (HalfPlane, Membership, Point, PointSet, RegionKind,
                       convex_hull, region_contains)
from .oracle import Partition

MAX_R = 7  # bounds the (r-1)!^2 transversal enumeration


@dataclass(frozen=True)
class GeneralSectorDecomposition:
    r: int
    center: Point
    halfplanes: tuple[HalfPlane, HalfPlane, HalfPlane]
    sectors: tuple[tuple[int, ...], ...]


def sector_decomposition(ps: PointSet, r: int) -> GeneralSectorDecomposition:
    """Covering half-plane triple for a case-4 instance of 3r-2 points,
    verifying the depth precondition."""
    if not 2 <= r <= MAX_R:
        raise ValueError(f"r must be in 2..{MAX_R}")
    if len(ps) != 3 * r - 2:
        raise ValueError(f"expected {3 * r - 2} points for r={r}")
    dr = depth_region(ps, r)
    if dr.region.kind is not RegionKind.POINT:
        raise NotCase4(f"depth-{r} region has kind {dr.region.kind.value}")
    center = dr.region.vertices[0]
    if center not in ps.points:
        raise NotCase4(f"depth-{r} region is {center}, not an input point")
    x_idx = ps.index(center)
    triple, sectors = covering_halfplane_search(ps, x_idx, r)
    return GeneralSectorDecomposition(r, center, triple, sectors)


def validate_general_partition(ps: PointSet, part: Partition, x_idx: int) -> bool:
    """True iff the partition is {x} plus triples whose triangles all contain
    x, which certifies x as a common point of all hulls."""
    sizes = part.sizes
    if sizes != (3,) * ((len(ps) - 1) // 3) + (1,):
        raise ShapeError(f"expected a singleton plus triples, got sizes {sizes}")
    if part.parts[-1] != (x_idx,):
        raise ShapeError(f"singleton must be point {x_idx}")
    x = ps[x_idx]
    return all(
        region_contains(convex_hull([ps[i] for i in triple]), x) is not Membership.OUTSIDE
        for triple in part.parts[:-1])


def case4_general(ps: PointSet, r: int) -> list[Partition]:
    """All ((r-1)!)^2 partitions of a case-4 instance into the center
    singleton plus r-1 sector-transversal triples, canonical and distinct."""
    sd = sector_decomposition(ps, r)
    x_idx = ps.index(sd.center)
    s1, s2, s3 = sd.sectors
    partitions = []
    for sigma in itertools.permutations(s2):
        for tau in itertools.permutations(s3):
            triples = [(s1[i], sigma[i], tau[i]) for i in range(r - 1)]
            partition = Partition.of(list(triples) + [(x_idx,)])
            if not validate_general_partition(ps, partition, x_idx):
                raise LemmaViolation(f"transversal partition {partition.parts} misses the center")
            partitions.append(partition)
    expected = factorial(r - 1) ** 2
    if len(set(partitions)) != expected:
        raise LemmaViolation(
            f"expected {expected} distinct transversal partitions, got {len(set(partitions))}")
    return sorted(partitions, key=lambda p: p.parts)
