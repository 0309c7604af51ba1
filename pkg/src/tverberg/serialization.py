"""JSON documents: instances, depth regions, partition results.

Rationals travel as "num/den" strings (denominator omitted when 1) so
round-trips are bit-exact; floats never appear in JSON. Serialization is
deterministic: fixed key order, two-space indent, trailing newline.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional, Union

from .depth import DepthRegion
from .errors import ParseError
from .geometry import ConvexRegion, HalfPlane, Point, PointSet, RegionKind
from .oracle import Partition, Shape, Witness

SCHEMA_VERSION = 1


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(raw: Union[str, int], where: str) -> Fraction:
    if isinstance(raw, bool) or not isinstance(raw, (str, int)):
        raise ParseError(f"{where}: expected an integer or 'num/den' string, got {raw!r}")
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError) as exc:
        raise ParseError(f"{where}: bad rational {raw!r} ({exc})") from None


def point_to_json(p: Point) -> list[str]:
    return [format_rational(p.x), format_rational(p.y)]


def parse_point(raw: Any, where: str) -> Point:
    if not isinstance(raw, list) or len(raw) != 2:
        raise ParseError(f"{where}: expected a two-element array, got {raw!r}")
    return Point(parse_rational(raw[0], f"{where}[0]"),
                 parse_rational(raw[1], f"{where}[1]"))


def instance_to_json(ps: PointSet, metadata: Optional[dict[str, str]] = None) -> dict:
    return {
        "schema_version": SCHEMA_VERSION,
        "points": [point_to_json(p) for p in ps],
        "metadata": dict(metadata or {}),
    }


def parse_instance_document(text: Union[str, bytes]) -> tuple[PointSet, dict[str, str]]:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise ParseError("instance document must be a JSON object")
    version = doc.get("schema_version")
    if version != SCHEMA_VERSION:
        raise ParseError(f"schema_version: expected {SCHEMA_VERSION}, got {version!r}")
    raw_points = doc.get("points")
    if not isinstance(raw_points, list) or not raw_points:
        raise ParseError("points: expected a nonempty array")
    points = [parse_point(raw, f"points[{i}]") for i, raw in enumerate(raw_points)]
    seen: dict[Point, int] = {}
    for i, p in enumerate(points):
        if p in seen:
            raise ParseError(f"points[{i}]: duplicate of points[{seen[p]}]")
        seen[p] = i
    metadata = doc.get("metadata", {})
    if not isinstance(metadata, dict):
        raise ParseError("metadata: expected an object")
    return PointSet(points), {str(k): str(v) for k, v in metadata.items()}


def parse_instance(text: Union[str, bytes]) -> PointSet:
    return parse_instance_document(text)[0]


def region_to_json(region: ConvexRegion) -> dict:
    return {
        "kind": region.kind.value,
        "vertices": [point_to_json(v) for v in region.vertices],
    }


def parse_region(raw: Any, where: str = "region") -> ConvexRegion:
    if not isinstance(raw, dict):
        raise ParseError(f"{where}: expected an object")
    try:
        kind = RegionKind(raw.get("kind"))
    except ValueError:
        raise ParseError(f"{where}.kind: unknown kind {raw.get('kind')!r}") from None
    verts = raw.get("vertices", [])
    if not isinstance(verts, list):
        raise ParseError(f"{where}.vertices: expected an array")
    return ConvexRegion(kind, tuple(
        parse_point(v, f"{where}.vertices[{i}]") for i, v in enumerate(verts)))


def halfplane_to_json(h: HalfPlane) -> dict:
    return {"a": str(h.a), "b": str(h.b), "c": str(h.c)}


def depth_region_to_json(dr: DepthRegion) -> dict:
    return {
        "k": dr.k,
        "region": region_to_json(dr.region),
        "constraints": [halfplane_to_json(h) for h in dr.constraints],
    }


@dataclass(frozen=True)
class PartitionRecord:
    parts: tuple[tuple[int, ...], ...]
    witness: Optional[Point]
    shape: str
    provenance: Optional[str] = None

    def to_json(self) -> dict:
        out: dict[str, Any] = {"parts": [list(p) for p in self.parts]}
        if self.witness is not None:
            out["witness"] = point_to_json(self.witness)
        out["shape"] = self.shape
        if self.provenance is not None:
            out["provenance"] = self.provenance
        return out


@dataclass(frozen=True)
class ResultDocument:
    """Everything a report needs: the instance, optional depth region and
    case label, and the partition records with counts."""

    instance: PointSet
    metadata: dict[str, str] = field(default_factory=dict)
    partitions: tuple[PartitionRecord, ...] = ()
    c3: Optional[DepthRegion] = None
    case_label: Optional[int] = None

    def to_json(self) -> dict:
        doc: dict[str, Any] = {
            "schema_version": SCHEMA_VERSION,
            "instance": instance_to_json(self.instance, self.metadata),
        }
        if self.c3 is not None:
            doc["c3"] = depth_region_to_json(self.c3)
        if self.case_label is not None:
            doc["case_label"] = self.case_label
        doc["partitions"] = [rec.to_json() for rec in self.partitions]
        doc["counts"] = {
            "total": len(self.partitions),
            "s331": sum(1 for r in self.partitions if r.shape == Shape.S331.value),
            "s322": sum(1 for r in self.partitions if r.shape == Shape.S322.value),
        }
        return doc


def record_for(partition: Partition, witness: Optional[Witness],
               provenance: Optional[str] = None) -> PartitionRecord:
    return PartitionRecord(
        parts=partition.parts,
        witness=witness.point if witness else None,
        shape=witness.shape.value if witness else Shape.from_sizes(partition.sizes).value,
        provenance=provenance,
    )


def parse_partitions(text: Union[str, bytes]) -> list[Partition]:
    """Read the partitions of a result-like document: an object with a
    "partitions" array of {"parts": [[...], ...]} records."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    raw = doc.get("partitions") if isinstance(doc, dict) else None
    if not isinstance(raw, list):
        raise ParseError("expected an object with a 'partitions' array")
    out = []
    for i, rec in enumerate(raw):
        where = f"partitions[{i}]"
        parts = rec.get("parts") if isinstance(rec, dict) else None
        if not isinstance(parts, list) or not all(isinstance(p, list) for p in parts):
            raise ParseError(f"{where}: expected a 'parts' array of index arrays")
        try:
            out.append(Partition.of(parts))
        except (TypeError, ValueError) as exc:
            raise ParseError(f"{where}: {exc}") from None
    return out


def dumps(doc: dict) -> str:
    return json.dumps(doc, indent=2, sort_keys=True) + "\n"
