"""JSON documents for realizations and stacking programs, and OFF export.

A realization document looks like::

    {"combinatorics": {"vertices": 4, "facets": [[0, 1, 2], ...]},
     "coordinates": {"kind": "rational", "data": [["-1/1", "1/1", "1/1"], ...]}}

Rational scalars are ``"p/q"`` strings in lowest terms.  Quadratic scalars
``a + b sqrt(d)`` are ``["p/q", "p/q"]`` pairs with an integer ``"d"`` next
to ``"kind"``.  Float scalars are JSON numbers.
"""

from __future__ import annotations

import json
import re
from fractions import Fraction
from pathlib import Path

from .exact_stack import StackingError, StackingProgram, check_program
from .geometry import Combinatorics, CombinatoricsError, GeometryError, Realization, Vec3, validate_combinatorics
from .scalars import QuadraticNumber

__all__ = [
    "SchemaError",
    "realization_to_dict",
    "realization_from_dict",
    "dumps_realization",
    "loads_realization",
    "save_realization",
    "load_realization",
    "program_from_dict",
    "loads_program",
    "load_program",
    "off_text",
    "export_off",
]

KINDS = ("rational", "quadratic", "float")
_RATIONAL = re.compile(r"^\s*[+-]?\d+\s*(/\s*[+-]?\d+\s*)?$")


class SchemaError(ValueError):
    """A document violates the schema; ``path`` locates the offending node."""

    def __init__(self, message: str, path: str = "$"):
        super().__init__(f"{path}: {message}")
        self.path = path


# -- scalars --------------------------------------------------------------


def format_rational(q) -> str:
    q = Fraction(q)
    return f"{q.numerator}/{q.denominator}"


def parse_rational(s, path: str) -> Fraction:
    if not isinstance(s, str) or not _RATIONAL.match(s):
        raise SchemaError(f"expected a rational string 'p/q', got {s!r}", path)
    try:
        return Fraction(s.replace(" ", ""))
    except ZeroDivisionError:
        raise SchemaError(f"zero denominator in {s!r}", path) from None


def _encode_scalar(x, kind: str, d):
    if kind == "rational":
        return format_rational(x)
    if kind == "float":
        return float(x)
    if len(x.field) != 1 or x.d != d:
        raise SchemaError(f"scalar {x} is not in Q(sqrt {d})", "$.coordinates")
    return [format_rational(x.a), format_rational(x.b)]


def _decode_scalar(s, kind: str, d, path: str):
    if kind == "rational":
        return parse_rational(s, path)
    if kind == "float":
        if isinstance(s, bool) or not isinstance(s, (int, float)):
            raise SchemaError(f"expected a JSON number, got {s!r}", path)
        return float(s)
    if not isinstance(s, list) or len(s) != 2:
        raise SchemaError(f"expected a pair ['p/q', 'p/q'], got {s!r}", path)
    return QuadraticNumber(parse_rational(s[0], path + "[0]"), parse_rational(s[1], path + "[1]"), d)


# -- realizations ---------------------------------------------------------


def realization_to_dict(r: Realization) -> dict:
    kind = r.kind
    coords: dict = {"kind": kind}
    d = None
    if kind == "quadratic":
        d = r.coordinates[0].x.d
        if not isinstance(d, int):
            raise SchemaError("only single quadratic extensions Q(sqrt d) can be serialized", "$.coordinates")
        coords["d"] = d
    coords["data"] = [[_encode_scalar(s, kind, d) for s in v] for v in r.coordinates]
    c = r.combinatorics
    return {
        "combinatorics": {"vertices": c.n_vertices, "facets": [list(f) for f in c.facets]},
        "coordinates": coords,
    }


def _require(obj, key: str, path: str):
    if not isinstance(obj, dict):
        raise SchemaError("expected an object", path)
    if key not in obj:
        raise SchemaError(f"missing key {key!r}", path)
    return obj[key]


def _is_int(x) -> bool:
    return isinstance(x, int) and not isinstance(x, bool)


def _combinatorics_from(obj, path: str) -> Combinatorics:
    n = _require(obj, "vertices", path)
    if not _is_int(n) or n < 4:
        raise SchemaError(f"vertex count must be an integer >= 4, got {n!r}", path + ".vertices")
    facets = _require(obj, "facets", path)
    if not isinstance(facets, list):
        raise SchemaError("expected a list of facets", path + ".facets")
    for i, f in enumerate(facets):
        fp = f"{path}.facets[{i}]"
        if not isinstance(f, list) or not all(_is_int(v) for v in f):
            raise SchemaError("a facet is a list of vertex indices", fp)
        if len(f) < 3:
            raise SchemaError(f"a facet needs at least 3 vertices, got {len(f)}", fp)
        if len(set(f)) != len(f) or any(not 0 <= v < n for v in f):
            raise SchemaError(f"facet {f} has repeated or out-of-range vertices", fp)
    c = Combinatorics(n, tuple(tuple(f) for f in facets))
    try:
        validate_combinatorics(c)
    except CombinatoricsError as e:
        raise SchemaError(str(e), path) from None
    return c


def realization_from_dict(doc) -> Realization:
    comb = _combinatorics_from(_require(doc, "combinatorics", "$"), "$.combinatorics")
    coords = _require(doc, "coordinates", "$")
    kind = _require(coords, "kind", "$.coordinates")
    if kind not in KINDS:
        raise SchemaError(f"kind must be one of {KINDS}, got {kind!r}", "$.coordinates.kind")
    d = None
    if kind == "quadratic":
        d = _require(coords, "d", "$.coordinates")
        if not _is_int(d) or d < 2:
            raise SchemaError(f"d must be a square-free integer > 1, got {d!r}", "$.coordinates.d")
    data = _require(coords, "data", "$.coordinates")
    if not isinstance(data, list) or len(data) != comb.n_vertices:
        raise SchemaError(
            f"expected {comb.n_vertices} coordinate rows", "$.coordinates.data"
        )
    pts = []
    for i, row in enumerate(data):
        rp = f"$.coordinates.data[{i}]"
        if not isinstance(row, list) or len(row) != 3:
            raise SchemaError("a coordinate row has three entries", rp)
        try:
            pts.append(Vec3(*(_decode_scalar(s, kind, d, f"{rp}[{j}]") for j, s in enumerate(row))))
        except ValueError as e:
            if isinstance(e, SchemaError):
                raise
            raise SchemaError(str(e), rp) from None
    try:
        return Realization(comb, tuple(pts))
    except GeometryError as e:
        raise SchemaError(str(e), "$") from None


def dumps_realization(r: Realization) -> str:
    return json.dumps(realization_to_dict(r), indent=2) + "\n"


def _parse_json(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise SchemaError(f"invalid JSON: {e.msg} (line {e.lineno}, column {e.colno})") from None


def loads_realization(text: str) -> Realization:
    return realization_from_dict(_parse_json(text))


def save_realization(r: Realization, path) -> None:
    Path(path).write_text(dumps_realization(r))


def load_realization(path) -> Realization:
    return loads_realization(Path(path).read_text())


# -- programs -------------------------------------------------------------


def program_from_dict(doc) -> StackingProgram:
    base = doc.get("base", "tetrahedron") if isinstance(doc, dict) else None
    steps = _require(doc, "steps", "$")
    if base != "tetrahedron":
        raise SchemaError(f"unsupported base {base!r}", "$.base")
    if not isinstance(steps, list):
        raise SchemaError("expected a list of steps", "$.steps")
    for i, s in enumerate(steps):
        if not isinstance(s, list) or len(s) != 3 or not all(_is_int(v) for v in s):
            raise SchemaError("a step is a list of three vertex indices", f"$.steps[{i}]")
    try:
        program = StackingProgram(tuple(tuple(s) for s in steps), base)
        check_program(program)
    except StackingError as e:
        raise SchemaError(str(e), "$.steps") from None
    return program


def loads_program(text: str) -> StackingProgram:
    return program_from_dict(_parse_json(text))


def load_program(path) -> StackingProgram:
    return loads_program(Path(path).read_text())


# -- OFF ------------------------------------------------------------------


def off_text(r: Realization) -> str:
    c = r.combinatorics
    n_edges = len(r.edges())
    lines = ["OFF", f"{c.n_vertices} {c.n_facets} {n_edges}"]
    lines += [" ".join(f"{float(s):.17g}" for s in v) for v in r.coordinates]
    lines += [" ".join(str(x) for x in (len(f), *f)) for f in c.facets]
    return "\n".join(lines) + "\n"


def export_off(r: Realization, path) -> None:
    Path(path).write_text(off_text(r))
