"""Command-line interface.

Subcommands: gen, depth, enumerate, prove, verify, case4-general, minimize,
plot. Instances and results are JSON documents read from files or stdin
("-") and written to files or stdout. Exit codes: 0 success, 1 usage/parse/IO
errors, 2 validation failures (bad geometry, invalid partitions).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from . import constructive, generalized, instances, oracle
from .depth import DepthRegion, depth_region
from .errors import ParseError, TverbergError
from .geometry import HalfPlane, PointSet
from .oracle import Shape, Witness
from .serialization import (PartitionRecord, ResultDocument,
                            depth_region_to_json, dumps, instance_to_json,
                            parse_instance_document, parse_partitions,
                            parse_point, parse_region, record_for)
from .svgout import render_svg

FIXTURES_ENV = "TVK_FIXTURES"


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # exit 1 on usage errors, not argparse's 2
        raise _UsageError(message)


def _rational_arg(raw: str) -> Fraction:
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"bad rational {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="tverberg",
                     description="Exact Tukey depth regions and Tverberg partitions"
                                 " of planar point sets.")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("gen", help="generate an instance")
    gen.add_argument("--kind", required=True,
                     choices=["random", "extremal-clusters", "case4"])
    gen.add_argument("--seed", type=int, required=True)
    gen.add_argument("--n", type=int, default=7, help="point count (random)")
    gen.add_argument("--bound", type=int, default=1000,
                     help="coordinate bound (random)")
    gen.add_argument("--radius", type=_rational_arg, default=Fraction(1, 100),
                     help="cluster radius as a rational (extremal-clusters)")
    gen.add_argument("--r", type=int, default=3, help="parts (case4)")
    gen.add_argument("--out", default=None)
    gen.add_argument("--fixtures-dir", default=None,
                     help=f"write into this directory under an encoded name"
                          f" (default: ${FIXTURES_ENV})")

    for name, help_text in [("depth", "compute a depth-k region"),
                            ("enumerate", "enumerate all Tverberg partitions"),
                            ("prove", "emit a constructive proof trace"),
                            ("verify", "check partitions against an instance"),
                            ("case4-general", "transversal partitions for general r"),
                            ("plot", "render an SVG diagram")]:
        cmd = sub.add_parser(name, help=help_text)
        cmd.add_argument("instance", help="instance JSON file, or - for stdin")
        if name == "depth":
            cmd.add_argument("--k", type=int, required=True)
        if name == "case4-general":
            cmd.add_argument("--r", type=int, required=True)
        if name == "verify":
            cmd.add_argument("--partitions", required=True,
                             help="JSON file with a 'partitions' array")
        if name == "plot":
            cmd.add_argument("--result", default=None,
                             help="result JSON from enumerate/prove")
            cmd.add_argument("--out", required=True, help="SVG output path")
        else:
            cmd.add_argument("--out", default=None)

    mini = sub.add_parser("minimize", help="hill-descend the partition count")
    mini.add_argument("--seed", type=int, required=True)
    mini.add_argument("--iterations", type=int, required=True)
    mini.add_argument("--out", default=None)
    return parser


def _read_instance(spec: str) -> tuple[PointSet, dict[str, str]]:
    if spec == "-":
        return parse_instance_document(sys.stdin.read())
    return parse_instance_document(Path(spec).read_text(encoding="utf-8"))


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text, encoding="utf-8")


def _cmd_gen(args) -> int:
    spec = instances.GenSpec(kind=args.kind, seed=args.seed, n=args.n,
                             bound=args.bound, radius=args.radius, r=args.r)
    ps = spec.generate()
    text = dumps(instance_to_json(ps, spec.metadata()))
    fixtures_dir = args.fixtures_dir or os.environ.get(FIXTURES_ENV)
    if args.out is None and fixtures_dir:
        path = Path(fixtures_dir) / spec.filename()
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        print(path)
        return 0
    _write(text, args.out)
    return 0


def _cmd_depth(args) -> int:
    ps, _ = _read_instance(args.instance)
    _write(dumps(depth_region_to_json(depth_region(ps, args.k))), args.out)
    return 0


def _cmd_enumerate(args) -> int:
    ps, meta = _read_instance(args.instance)
    results = oracle.enumerate_all(ps)
    doc = ResultDocument(
        instance=ps, metadata=meta,
        partitions=tuple(record_for(p, w) for p, w in results))
    _write(dumps(doc.to_json()), args.out)
    return 0


def _cmd_prove(args) -> int:
    ps, meta = _read_instance(args.instance)
    trace = constructive.prove_sierksma(ps)
    doc = ResultDocument(
        instance=ps, metadata=meta,
        partitions=tuple(record_for(p, w, tag.value) for p, w, tag in trace.partitions),
        c3=trace.c3, case_label=trace.case_label)
    _write(dumps(doc.to_json()), args.out)
    return 0


def _cmd_verify(args) -> int:
    ps, _ = _read_instance(args.instance)
    parts = parse_partitions(Path(args.partitions).read_text(encoding="utf-8"))
    records = []
    all_valid = True
    for partition in parts:
        witness = oracle.is_tverberg(ps, partition)
        entry = {"parts": [list(p) for p in partition.parts],
                 "valid": witness is not None}
        if witness is not None:
            rec = record_for(partition, witness)
            entry["witness"] = rec.to_json()["witness"]
            entry["shape"] = rec.shape
        else:
            all_valid = False
        records.append(entry)
    _write(dumps({"schema_version": 1, "all_valid": all_valid,
                  "results": records}), args.out)
    return 0 if all_valid else 2


def _singleton_witness(ps: PointSet, partition) -> Witness:
    # the center certifies every transversal partition
    single = partition.parts[-1]
    return Witness(ps[single[0]], Shape.from_sizes(partition.sizes))


def _cmd_case4_general(args) -> int:
    ps, meta = _read_instance(args.instance)
    parts = generalized.case4_general(ps, args.r)
    meta = dict(meta)
    meta["r"] = str(args.r)
    doc = ResultDocument(
        instance=ps, metadata=meta,
        partitions=tuple(record_for(p, _singleton_witness(ps, p)) for p in parts))
    _write(dumps(doc.to_json()), args.out)
    return 0


def _cmd_minimize(args) -> int:
    ps, count = instances.minimize_count(args.seed, args.iterations)
    meta = {"kind": "minimize", "seed": str(args.seed),
            "iterations": str(args.iterations), "count": str(count)}
    _write(dumps(instance_to_json(ps, meta)), args.out)
    return 0


def _cmd_plot(args) -> int:
    ps, _ = _read_instance(args.instance)
    if args.result is not None:
        result = _result_from_json(ps, Path(args.result).read_text(encoding="utf-8"))
    else:
        result = ResultDocument(instance=ps)
    render_svg(ps, result, args.out)
    return 0


def _result_from_json(ps: PointSet, text: str) -> ResultDocument:
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"malformed JSON: {exc}") from None
    if not isinstance(raw, dict):
        raise ParseError("result document must be a JSON object")
    c3 = None
    if "c3" in raw:
        rc3 = raw["c3"]
        constraints = tuple(
            HalfPlane(int(h["a"]), int(h["b"]), int(h["c"]))
            for h in rc3.get("constraints", []))
        c3 = DepthRegion(int(rc3.get("k", 3)),
                         parse_region(rc3.get("region"), "c3.region"), constraints)
    records = []
    for i, rec in enumerate(raw.get("partitions", [])):
        witness = None
        if "witness" in rec:
            witness = parse_point(rec["witness"], f"partitions[{i}].witness")
        records.append(PartitionRecord(
            parts=tuple(tuple(int(j) for j in part) for part in rec["parts"]),
            witness=witness,
            shape=str(rec.get("shape", "Other")),
            provenance=rec.get("provenance")))
    return ResultDocument(instance=ps, partitions=tuple(records), c3=c3,
                          case_label=raw.get("case_label"))


_COMMANDS = {
    "gen": _cmd_gen,
    "depth": _cmd_depth,
    "enumerate": _cmd_enumerate,
    "prove": _cmd_prove,
    "verify": _cmd_verify,
    "case4-general": _cmd_case4_general,
    "minimize": _cmd_minimize,
    "plot": _cmd_plot,
}


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"io error: {exc}", file=sys.stderr)
        return 1
    except (TverbergError, ValueError) as exc:
        print(f"validation error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
