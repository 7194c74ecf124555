"""Command-line front end.

Radii are given in normalized form ``knorm_r = k * pi * R^2`` as exact
rationals such as ``1/3``; ``inf`` selects the whole bundle.

Exit status: 0 on success, 2 on invalid input, 1 when an internal
cross-check fails.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from fractions import Fraction
from pathlib import Path

from .complexes import ComplexError, ValuedChainComplex, homology, morse_demo
from .geometry import GeometryError, LineBundleGeometry
from .mirror import EliminationError, mirror_report
from .novikov import INF, as_exponent, format_rational
from .quantum import ModelInconsistency, quantum_spectrum, spectrum_payload
from .sh import (
    completed_sh_annulus,
    critical_radii,
    disk_profile,
    frange,
    profile_csv,
    reduced_sh_disk,
)


class UsageError(ValueError):
    pass


def _rational(text: str):
    try:
        return as_exponent(text)
    except (ValueError, ZeroDivisionError, TypeError):
        raise argparse.ArgumentTypeError(f"not an exact rational: {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="sympcoh", description=__doc__, formatter_class=argparse.RawDescriptionHelpFormatter)
    parser.add_argument("--precision", type=int, default=None, help="Novikov working precision (default 16 or $NOVIKOV_PRECISION)")
    sub = parser.add_subparsers(dest="command", required=True)

    def geometry_args(p):
        p.add_argument("--m", type=int, required=True, help="dimension of the base CP^m")
        p.add_argument("--k", type=int, required=True, help="negativity of O(-k)")

    def output_arg(p, default="json", choices=("json", "csv", "table")):
        p.add_argument("--output", choices=choices, default=default)

    p = sub.add_parser("spectrum", help="valuation spectrum of quantum multiplication by c_1")
    geometry_args(p)
    output_arg(p)

    p = sub.add_parser("disk", help="reduced SH of the disk bundle of normalized radius knorm_r")
    geometry_args(p)
    p.add_argument("--knorm-r", type=_rational, required=True)
    output_arg(p)

    p = sub.add_parser("annulus", help="completed SH of the annulus between knorm_r1 and knorm_r2")
    geometry_args(p)
    p.add_argument("--knorm-r1", type=_rational, required=True)
    p.add_argument("--knorm-r2", type=_rational, required=True)
    output_arg(p)

    p = sub.add_parser("mirror-check", help="compare annulus SH with the mirror Jacobian ring")
    geometry_args(p)
    p.add_argument("--knorm-r1", type=_rational, required=True)
    p.add_argument("--knorm-r2", type=_rational, required=True)
    output_arg(p)

    p = sub.add_parser("critical-radii", help="normalized radii where SH dimensions jump")
    geometry_args(p)
    output_arg(p)

    p = sub.add_parser("morse-demo", help="reduced vs completed Morse cohomology counterexample")
    p.add_argument("--stages", type=int, default=4)
    output_arg(p)

    p = sub.add_parser("sweep", help="disk dimension profile over a range of knorm_r")
    geometry_args(p)
    p.add_argument("--start", type=_rational, default=Fraction(0))
    p.add_argument("--stop", type=_rational, required=True)
    p.add_argument("--step", type=_rational, required=True)
    output_arg(p, default="csv")

    p = sub.add_parser("homology", help="cohomology ranks of a complex definition file")
    p.add_argument("file", type=Path)
    output_arg(p)
    return parser


def _geometry(args) -> LineBundleGeometry:
    return LineBundleGeometry(args.m, args.k)


def _table(payload: dict) -> str:
    lines = []
    for key, value in payload.items():
        if isinstance(value, list) and value and isinstance(value[0], dict):
            lines.append(f"{key}:")
            for row in value:
                lines.append("  " + "  ".join(f"{k}={v}" for k, v in row.items()))
        else:
            lines.append(f"{key}: {value}")
    return "\n".join(lines) + "\n"


def _emit(payload: dict, fmt: str, csv_rows=None) -> str:
    if fmt == "json":
        return json.dumps(payload, sort_keys=True) + "\n"
    if fmt == "table":
        return _table(payload)
    if csv_rows is None:
        raise UsageError("csv output is only available for sweep and critical-radii")
    header, rows = csv_rows
    return "\n".join([",".join(header)] + [",".join(str(x) for x in r) for r in rows]) + "\n"


def dispatch(args) -> str:
    cmd = args.command
    if cmd == "morse-demo":
        if args.stages < 2:
            raise UsageError("--stages must be at least 2")
        return _emit(morse_demo(args.stages).to_json(), args.output)
    if cmd == "homology":
        try:
            c = ValuedChainComplex.from_json(args.file.read_text())
        except (OSError, json.JSONDecodeError, KeyError) as exc:
            raise UsageError(f"cannot read complex: {exc}") from None
        ranks = homology(c)
        return _emit({"ranks": {str(d): r for d, r in sorted(ranks.items())}}, args.output)

    g = _geometry(args)
    if cmd == "spectrum":
        return _emit(spectrum_payload(g), args.output)
    q = quantum_spectrum(g)
    if cmd == "disk":
        payload = {"m": g.m, "k": g.k, **reduced_sh_disk(q, args.knorm_r).to_json()}
        return _emit(payload, args.output)
    if cmd == "annulus":
        payload = {"m": g.m, "k": g.k, **completed_sh_annulus(q, args.knorm_r1, args.knorm_r2).to_json()}
        return _emit(payload, args.output)
    if cmd == "mirror-check":
        if args.knorm_r1 > args.knorm_r2:
            raise UsageError("mirror-check needs knorm_r1 <= knorm_r2")
        if args.knorm_r2 == INF:
            raise UsageError("mirror-check needs a finite outer radius")
        return _emit(mirror_report(g, args.knorm_r1, args.knorm_r2), args.output)
    if cmd == "critical-radii":
        radii = [format_rational(r) for r in critical_radii(q)]
        return _emit({"m": g.m, "k": g.k, "critical_radii": radii}, args.output, (["knorm_r"], [[r] for r in radii]))
    if cmd == "sweep":
        rows = disk_profile(q, frange(args.start, args.stop, args.step))
        if args.output == "csv":
            return profile_csv(rows)
        payload = {
            "m": g.m,
            "k": g.k,
            "profile": [{"knorm_r": format_rational(r), "dimension": d} for r, d in rows],
        }
        return _emit(payload, args.output)
    raise UsageError(f"unknown command {cmd!r}")


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    saved = os.environ.get("NOVIKOV_PRECISION")
    if args.precision is not None:
        os.environ["NOVIKOV_PRECISION"] = str(args.precision)
    try:
        out = dispatch(args)
    except (UsageError, GeometryError, ComplexError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ModelInconsistency, EliminationError) as exc:
        print(f"internal inconsistency: {exc}", file=sys.stderr)
        return 1
    finally:
        # main() may be called in-process; do not leak the override
        if saved is None:
            os.environ.pop("NOVIKOV_PRECISION", None)
        else:
            os.environ["NOVIKOV_PRECISION"] = saved
    sys.stdout.write(out)
    return 0


if __name__ == "__main__":
    sys.exit(main())
