"""Command-line client over the service handlers.

Exit codes: 0 success, 2 input error, 3 capacity exceeded, 4 I/O error,
5 internal error.  All numeric output is printed to 12 significant digits
and every command is deterministic for a fixed invocation.
"""
from __future__ import annotations

import argparse
import csv
import json
import sys
from pathlib import Path

from pydantic import ValidationError

from .errors import CapacityError, EntgeoError, SynthesisError
from .schemas import (
    Area2DRequest,
    Cross3DRequest,
    DetRequest,
    SynthRequest,
    VolumeRequest,
)
from .service import (
    run_area2d,
    run_cross3d,
    run_det,
    run_synth,
    run_verify_paper,
    run_volume,
)

EXIT_OK = 0
EXIT_INPUT = 2
EXIT_CAPACITY = 3
EXIT_IO = 4
EXIT_INTERNAL = 5


def _fmt(value: float) -> str:
    # Adding 0.0 folds negative zero into "0".
    return f"{value + 0.0:.12g}"


def _parse_vector(text: str, arity: int, name: str) -> tuple[float, ...]:
    parts = text.split(",")
    if len(parts) != arity:
        raise ValueError(f"{name} needs {arity} comma-separated components, got {text!r}")
    try:
        return tuple(float(p) for p in parts)
    except ValueError:
        raise ValueError(f"{name} has a non-numeric component in {text!r}") from None


def _read_matrix(path: str) -> list[list[float]]:
    with open(path, newline="") as handle:
        rows = [row for row in csv.reader(handle) if row]
    if not rows:
        raise ValueError(f"matrix file {path!r} is empty")
    try:
        return [[float(cell) for cell in row] for row in rows]
    except ValueError:
        raise ValueError(f"matrix file {path!r} contains a non-numeric cell") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="entgeo",
        description="Areas, cross products and determinants as detector-state inner products.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("area2d", help="signed parallelogram area of two plane vectors")
    p.add_argument("--v1", required=True, help="first vector, e.g. 1,0")
    p.add_argument("--v2", required=True, help="second vector, e.g. 0,1")
    p.add_argument(
        "--paper-literal",
        action="store_true",
        help="use the published two-term pairing instead of the determinant pairing",
    )

    p = sub.add_parser("cross3d", help="cross product of two space vectors")
    p.add_argument("--v1", required=True, help="first vector, e.g. 1,2,3")
    p.add_argument("--v2", required=True, help="second vector, e.g. 4,5,6")

    p = sub.add_parser("volume", help="signed parallelepiped volume of three vectors")
    p.add_argument("--v1", required=True)
    p.add_argument("--v2", required=True)
    p.add_argument("--v3", required=True)

    p = sub.add_parser("det", help="determinant of a square matrix from a CSV file")
    p.add_argument("--matrix", required=True, help="CSV file, one row per line")
    p.add_argument(
        "--method",
        choices=("quantum", "classical", "both"),
        default="both",
        help="evaluation path; quantum is capped at order 4",
    )

    p = sub.add_parser(
        "verify-paper",
        help="audit the bundled reference circuits against their detector targets",
    )
    p.add_argument(
        "--out",
        default="verify_report.txt",
        help="where to write the full report (default: verify_report.txt)",
    )

    p = sub.add_parser("synth", help="synthesize a preparation circuit for a sparse state")
    p.add_argument("--target", required=True, help="JSON file with num_qubits and terms")
    p.add_argument(
        "--emit-qasm",
        default=None,
        help="write OpenQASM 2.0 here instead of printing it",
    )
    return parser


def _cmd_area2d(args: argparse.Namespace) -> int:
    req = Area2DRequest(
        v1=_parse_vector(args.v1, 2, "--v1"),
        v2=_parse_vector(args.v2, 2, "--v2"),
        paper_literal=args.paper_literal,
    )
    print(_fmt(run_area2d(req).value))
    return EXIT_OK


def _cmd_cross3d(args: argparse.Namespace) -> int:
    req = Cross3DRequest(
        v1=_parse_vector(args.v1, 3, "--v1"),
        v2=_parse_vector(args.v2, 3, "--v2"),
    )
    print(" ".join(_fmt(c) for c in run_cross3d(req).value))
    return EXIT_OK


def _cmd_volume(args: argparse.Namespace) -> int:
    req = VolumeRequest(
        v1=_parse_vector(args.v1, 3, "--v1"),
        v2=_parse_vector(args.v2, 3, "--v2"),
        v3=_parse_vector(args.v3, 3, "--v3"),
    )
    print(_fmt(run_volume(req).value))
    return EXIT_OK


def _cmd_det(args: argparse.Namespace) -> int:
    req = DetRequest(matrix=_read_matrix(args.matrix), method=args.method)
    resp = run_det(req)
    if args.method == "both":
        print(f"quantum {_fmt(resp.quantum)}")
        print(f"classical {_fmt(resp.classical)}")
        print(f"difference {_fmt(resp.difference)}")
    elif args.method == "quantum":
        print(_fmt(resp.quantum))
    else:
        print(_fmt(resp.classical))
    return EXIT_OK


def _cmd_verify_paper(args: argparse.Namespace) -> int:
    resp = run_verify_paper()
    Path(args.out).write_text(resp.text)
    for report in resp.reports:
        verdict = "PASS" if report.passed else "FAIL"
        print(f"{report.target} {verdict} fidelity={report.fidelity:.12f}")
    print(f"report written to {args.out}")
    return EXIT_OK


def _cmd_synth(args: argparse.Namespace) -> int:
    with open(args.target) as handle:
        payload = json.load(handle)
    req = SynthRequest(**payload)
    resp = run_synth(req)
    if args.emit_qasm is not None:
        Path(args.emit_qasm).write_text(resp.qasm)
        print(f"fidelity {_fmt(resp.fidelity)}")
        print(f"qasm written to {args.emit_qasm}")
    else:
        sys.stdout.write(resp.qasm)
    return EXIT_OK


_COMMANDS = {
    "area2d": _cmd_area2d,
    "cross3d": _cmd_cross3d,
    "volume": _cmd_volume,
    "det": _cmd_det,
    "verify-paper": _cmd_verify_paper,
    "synth": _cmd_synth,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except CapacityError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAPACITY
    except SynthesisError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except (EntgeoError, ValidationError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_IO


def entry() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    entry()
