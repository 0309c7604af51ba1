"""Deterministic instance generation, perturbation, and a count minimizer.

All randomness comes from SplitMix64, a fixed 64-bit mixing recurrence (see
the README for the exact constants), so a seed reproduces the same instance
bit-for-bit on any platform. Generated fixtures are self-certifying: each
generator checks its own postcondition and retries within a budget.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from .depth import depth_region
from .errors import ExhaustionError
from .geometry import Point, PointSet, RegionKind, is_general_position, rational
from .oracle import enumerate_all

_MASK64 = (1 << 64) - 1
RETRY_BUDGET = 10_000


class SplitMix64:
    """splitmix64: state += 0x9E3779B97F4A7C15; output = mix(state).

    `below(n)` reduces an output modulo n; the modulo bias is irrelevant for
    fixture generation and keeps the stream trivial to reproduce in any
    language.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, n: int) -> int:
        return self.next_u64() % n

    def int_in(self, lo: int, hi: int) -> int:
        return lo + self.below(hi - lo + 1)


def gen_random(seed: int, n: int = 7, bound: int = 1000) -> PointSet:
    """n integer-lattice points uniform in [-bound, bound]^2, resampled as a
    whole until in general position."""
    if n < 1:
        raise ValueError("n must be >= 1")
    if bound < n * n:
        raise ValueError("bound must be >= n^2")
    rng = SplitMix64(seed)
    for _ in range(RETRY_BUDGET):
        ps = PointSet.of([(rng.int_in(-bound, bound), rng.int_in(-bound, bound))
                          for _ in range(n)])
        if is_general_position(ps):
            return ps
    raise ExhaustionError(f"no general-position sample after {RETRY_BUDGET} tries")


_CLUSTER_ANCHORS = (
    Point.of(0, 0), Point.of(0, 0),
    Point.of(100, 0), Point.of(100, 0),
    Point.of(50, 90), Point.of(50, 90),
    Point.of(50, 30),  # centroid; index 6 is the center point
)
EXTREMAL_CENTER_INDEX = 6


def gen_extremal_clusters(seed: int, radius: Fraction = Fraction(1, 100)) -> PointSet:
    """The tight instance: two points near each vertex of a fixed triangle
    plus one near its centroid, shrunk until the enumerator finds exactly 4
    partitions (the conjectured minimum)."""
    radius = rational(radius)
    if not 0 < radius <= Fraction(1, 100):
        raise ValueError("radius must be in (0, 1/100]")
    rng = SplitMix64(seed)
    m = 1 << 16
    r = radius
    for _ in range(64):
        for _ in range(32):
            pts = [Point(anchor.x + r * Fraction(rng.int_in(-m, m), 2 * m),
                         anchor.y + r * Fraction(rng.int_in(-m, m), 2 * m))
                   for anchor in _CLUSTER_ANCHORS]
            ps = PointSet(pts)
            if is_general_position(ps):
                if len(enumerate_all(ps)) == 4:
                    return ps
                break  # count off: shrink the clusters
        r = r / 2
    raise ExhaustionError("cluster instance never reached exactly 4 partitions")


# Exact direction pairs spanning the three doubly-covered sectors used by
# gen_case4: sector k holds positive combinations of its two directions.
_SECTOR_SPANS = (
    ((1, 0), (1, 2)),     # between directions (1,0) and (1,2)
    ((-1, 2), (-1, 0)),   # between (-1,2) and (-1,0)
    ((-1, -2), (1, -2)),  # between (-1,-2) and (1,-2)
)
CASE4_CENTER_INDEX = 0


def gen_case4(seed: int, r: int) -> PointSet:
    """3r-2 points whose depth-r region is exactly the origin: the center at
    index 0 plus r-1 points strictly inside each of three alternating sectors
    around three fixed lines through the origin."""
    if not 2 <= r <= 7:
        raise ValueError("r must be in 2..7")
    rng = SplitMix64(seed)
    for _ in range(RETRY_BUDGET):
        pts = [Point.of(0, 0)]
        for (ux, uy), (vx, vy) in _SECTOR_SPANS:
            for _ in range(r - 1):
                a, b = rng.int_in(1, 1000), rng.int_in(1, 1000)
                pts.append(Point.of(a * ux + b * vx, a * uy + b * vy))
        ps = PointSet(pts)
        if not is_general_position(ps):
            continue
        dr = depth_region(ps, r)
        if dr.region.kind is RegionKind.POINT and dr.region.vertices[0] == ps[0]:
            return ps
    raise ExhaustionError("case-4 generator exhausted its retry budget")


def perturb(ps: PointSet, seed: int) -> PointSet:
    """Identity on general-position input; otherwise nudge every coordinate
    by a rational offset of magnitude at most 1/2^t, doubling t on retry."""
    if is_general_position(ps):
        return ps
    rng = SplitMix64(seed)
    m = 1 << 20
    t = 20
    for _ in range(64):
        moved = PointSet(
            Point(p.x + Fraction(rng.int_in(-m, m), m * (1 << t)),
                  p.y + Fraction(rng.int_in(-m, m), m * (1 << t)))
            for p in ps)
        if is_general_position(moved):
            return moved
        t *= 2
    raise ExhaustionError("perturbation failed to reach general position")


def minimize_count(seed: int, iterations: int) -> tuple[PointSet, int]:
    """Hill descent on the number of Tverberg partitions: random single-point
    integer moves, accepted when the count strictly drops and general
    position survives. The count can never descend below 4."""
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    rng = SplitMix64(seed)
    ps = gen_random(rng.next_u64(), 7, 1000)
    count = len(enumerate_all(ps))
    for _ in range(iterations - 1):
        idx = rng.below(7)
        dx, dy = rng.int_in(-100, 100), rng.int_in(-100, 100)
        moved = list(ps.points)
        moved[idx] = Point(moved[idx].x + dx, moved[idx].y + dy)
        candidate = PointSet(moved)
        if not is_general_position(candidate):
            continue
        new_count = len(enumerate_all(candidate))
        if new_count < count:
            ps, count = candidate, new_count
    return ps, count


@dataclass(frozen=True)
class GenSpec:
    """A generator invocation: kind, seed, and its parameters; used by the
    CLI to build fixture file names that encode all three."""

    kind: str
    seed: int
    n: int = 7
    bound: int = 1000
    radius: Fraction = Fraction(1, 100)
    r: int = 3

    def generate(self) -> PointSet:
        if self.kind == "random":
            return gen_random(self.seed, self.n, self.bound)
        if self.kind == "extremal-clusters":
            return gen_extremal_clusters(self.seed, self.radius)
        if self.kind == "case4":
            return gen_case4(self.seed, self.r)
        raise ValueError(f"unknown generator kind {self.kind!r}")

    def filename(self) -> str:
        if self.kind == "random":
            detail = f"n{self.n}_b{self.bound}"
        elif self.kind == "extremal-clusters":
            detail = f"r{self.radius.numerator}-{self.radius.denominator}"
        else:
            detail = f"r{self.r}"
        return f"{self.kind}_s{self.seed}_{detail}.json"

    def metadata(self) -> dict[str, str]:
        meta = {"kind": self.kind, "seed": str(self.seed)}
        if self.kind == "random":
            meta["n"] = str(self.n)
            meta["bound"] = str(self.bound)
        elif self.kind == "extremal-clusters":
            meta["radius"] = f"{self.radius.numerator}/{self.radius.denominator}"
            meta["center_index"] = str(EXTREMAL_CENTER_INDEX)
        else:
            meta["r"] = str(self.r)
            meta["center_index"] = str(CASE4_CENTER_INDEX)
        return meta
