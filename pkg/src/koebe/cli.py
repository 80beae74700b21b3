"""Command-line interface: ``python -m koebe <command> ...`` or ``koebe <command> ...``.

Every command prints JSON on stdout unless ``-o FILE`` is given.  Errors
print a JSON object ``{"error": ...}`` on stderr and exit with status 1.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from fractions import Fraction
from pathlib import Path

import numpy as np

from .centering import springbornize
from .documents import dumps_realization, load_program, load_realization, off_text
from .exact_stack import build_stacked
from .families import FAMILY_NAMES, family
from .geometry import polar
from .invariants import degree_report
from .moebius import apply_lorentz, contact_cross_ratio, lorentz_from_moebius, moebius_matrix
from .scalars import QuadraticNumber
from .verify import DEFAULT_TOL, convexity_check, is_koebe, is_springborn

__all__ = ["main", "build_parser"]


class CliError(RuntimeError):
    pass


def _scalar_json(x):
    if isinstance(x, QuadraticNumber):
        return str(x)
    if isinstance(x, (int, Fraction)):
        return f"{Fraction(x).numerator}/{Fraction(x).denominator}"
    x = float(x)
    return None if math.isnan(x) else x


def _emit_text(text: str, out: str | None) -> None:
    if out:
        Path(out).write_text(text)
    else:
        sys.stdout.write(text)


def _emit_json(obj, out: str | None = None) -> None:
    _emit_text(json.dumps(obj, indent=2) + "\n", out)


def _parse_edges(text: str) -> list[tuple[int, int]]:
    edges = []
    for part in text.split(","):
        try:
            i, j = part.split("-")
            edges.append((int(i), int(j)))
        except ValueError:
            raise CliError(f"bad edge {part!r}; expected i-j") from None
    if len(edges) != 4:
        raise CliError(f"need four edges, got {len(edges)}")
    return edges


def _parse_moebius(text: str) -> np.ndarray:
    try:
        vals = [float(t) for t in text.split(",")]
    except ValueError:
        raise CliError(f"bad --moebius value {text!r}") from None
    if len(vals) != 8:
        raise CliError("--moebius takes eight numbers a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im")
    a, b, c, d = (complex(vals[2 * i], vals[2 * i + 1]) for i in range(4))
    return moebius_matrix(a, b, c, d)


# -- commands -------------------------------------------------------------


def cmd_family(args) -> int:
    _emit_text(dumps_realization(family(args.name, args.k, args.exact)), args.output)
    return 0


def cmd_stack(args) -> int:
    _emit_text(dumps_realization(build_stacked(load_program(args.program))), args.output)
    return 0


def cmd_verify(args) -> int:
    r = load_realization(args.file)
    if args.exact and not r.is_exact:
        raise CliError("--exact needs a rational or quadratic document")
    tol = args.tol
    kr = is_koebe(r, tol)
    cr = convexity_check(r, tol)
    sr = is_springborn(r, tol)
    report = {
        "kind": r.kind,
        "tolerance": None if r.is_exact else tol,
        "koebe": {
            "passed": kr.passed,
            "max_abs_residual": kr.max_abs,
            "exact_zero": kr.exact_zero,
            "vertices_outside_sphere": kr.outside,
        },
        "convexity": {"passed": cr.passed, "coplanar_ok": cr.coplanar_ok, "strict": cr.all_strict},
        "springborn": {
            "passed": sr.passed,
            "barycenter": None if sr.barycenter is None else [_scalar_json(s) for s in sr.barycenter],
            "barycenter_norm": _scalar_json(sr.barycenter_norm),
        },
    }
    _emit_json(report)
    return 0 if kr.passed and cr.passed else 1


def cmd_center(args) -> int:
    r = load_realization(args.file)
    out, rep = springbornize(r, tol=args.tol, max_iter=args.max_iter)
    _emit_text(dumps_realization(out), args.output)
    if args.output:
        _emit_json(
            {
                "outer_iterations": rep.outer_iterations,
                "barycenter_norm": rep.barycenter_norm,
                "barycenter_history": rep.barycenter_history,
            }
        )
    return 0


def cmd_polar(args) -> int:
    _emit_text(dumps_realization(polar(load_realization(args.file))), args.output)
    return 0


def cmd_transform(args) -> int:
    r = load_realization(args.file)
    T = lorentz_from_moebius(_parse_moebius(args.moebius))
    _emit_text(dumps_realization(apply_lorentz(r, T)), args.output)
    return 0


def cmd_crossratio(args) -> int:
    r = load_realization(args.file)
    edges = _parse_edges(args.edges)
    cr = contact_cross_ratio(r, edges)
    _emit_json({"edges": [list(e) for e in edges], "re": cr.real, "im": cr.imag})
    return 0


def cmd_degrees(args) -> int:
    _emit_json(degree_report(args.k))
    return 0


def cmd_export(args) -> int:
    r = load_realization(args.file)
    text = off_text(r) if args.format == "off" else dumps_realization(r)
    _emit_text(text, args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="koebe", description="Edge-tangent polytope realizations.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("family", help="write a named realization")
    s.add_argument("name", choices=FAMILY_NAMES + ("cube",))
    s.add_argument("--k", type=int, default=None, help="equator size for bipyramid")
    s.add_argument("--exact", action="store_true", help="exact rational or quadratic coordinates")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_family)

    s = sub.add_parser("stack", help="build a stacked polytope from a program")
    s.add_argument("--program", required=True)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_stack)

    s = sub.add_parser("verify", help="tangency, convexity and barycenter report")
    s.add_argument("file")
    s.add_argument("--tol", type=float, default=DEFAULT_TOL)
    s.add_argument("--exact", action="store_true", help="require exact coordinates")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("center", help="move to Springborn position")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.add_argument("--tol", type=float, default=1e-12)
    s.add_argument("--max-iter", type=int, default=100)
    s.set_defaults(func=cmd_center)

    s = sub.add_parser("polar", help="polar realization")
    s.add_argument("file")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_polar)

    s = sub.add_parser("transform", help="apply a Moebius transformation")
    s.add_argument("file")
    s.add_argument("--moebius", required=True, help="a_re,a_im,b_re,b_im,c_re,c_im,d_re,d_im")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("crossratio", help="cross ratio of four contact points")
    s.add_argument("file")
    s.add_argument("--edges", required=True, help="i1-j1,i2-j2,i3-j3,i4-j4")
    s.set_defaults(func=cmd_crossratio)

    s = sub.add_parser("degrees", help="degree predictions for the bipyramid B_k")
    s.add_argument("--k", type=int, required=True)
    s.set_defaults(func=cmd_degrees)

    s = sub.add_parser("export", help="convert a document to OFF or JSON")
    s.add_argument("file")
    s.add_argument("--format", choices=("off", "json"), required=True)
    s.add_argument("-o", "--output", required=True)
    s.set_defaults(func=cmd_export)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except Exception as e:  # every failure is reported, none is silent
        sys.stderr.write(json.dumps({"error": type(e).__name__, "message": str(e)}) + "\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
