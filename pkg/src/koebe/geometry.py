"""Vectors, facet-list combinatorics, realizations, volume, polarity and congruence.

Facets are stored as cyclically ordered vertex lists, counterclockwise when
seen from outside the polytope.  All operations are generic over the scalar
kinds of :mod:`koebe.scalars`; exact inputs give exact outputs.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import numpy as np

from .scalars import is_zero, scalar_kind, sign

__all__ = [
    "Vec3",
    "Combinatorics",
    "Realization",
    "CombinatoricsError",
    "GeometryError",
    "edges_of",
    "validate_combinatorics",
    "det3",
    "orient4",
    "solve3",
    "homogeneous_int",
    "orient4_sign_int",
    "volume",
    "polar",
    "dual_combinatorics",
    "congruent",
    "CongruenceReport",
    "FLOAT_PLANARITY_TOL",
]

FLOAT_PLANARITY_TOL = 1e-9


class CombinatoricsError(ValueError):
    pass


class GeometryError(ValueError):
    pass


@dataclass(frozen=True, slots=True)
class Vec3:
    x: object
    y: object
    z: object

    def __iter__(self):
        yield self.x
        yield self.y
        yield self.z

    def __getitem__(self, i):
        return (self.x, self.y, self.z)[i]

    def __add__(self, o: Vec3) -> Vec3:
        return Vec3(self.x + o.x, self.y + o.y, self.z + o.z)

    def __sub__(self, o: Vec3) -> Vec3:
        return Vec3(self.x - o.x, self.y - o.y, self.z - o.z)

    def __neg__(self) -> Vec3:
        return Vec3(-self.x, -self.y, -self.z)

    def __mul__(self, s) -> Vec3:
        return Vec3(self.x * s, self.y * s, self.z * s)

    __rmul__ = __mul__

    def __truediv__(self, s) -> Vec3:
        return Vec3(self.x / s, self.y / s, self.z / s)

    def dot(self, o: Vec3):
        return self.x * o.x + self.y * o.y + self.z * o.z

    def cross(self, o: Vec3) -> Vec3:
        return Vec3(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )

    def norm_sq(self):
        return self.dot(self)

    @property
    def kind(self) -> str:
        return scalar_kind(self.x)

    def to_float(self) -> Vec3:
        return Vec3(float(self.x), float(self.y), float(self.z))

    def to_array(self) -> np.ndarray:
        return np.array([float(self.x), float(self.y), float(self.z)])

    @classmethod
    def of(cls, values, convert=None) -> Vec3:
        x, y, z = values
        if convert is not None:
            x, y, z = convert(x), convert(y), convert(z)
        return cls(x, y, z)


def _canonical_cycle(facet: Sequence[int]) -> tuple[int, ...]:
    i = facet.index(min(facet))
    return tuple(facet[i:]) + tuple(facet[:i])


@dataclass(frozen=True)
class Combinatorics:
    """Vertex count plus outward-oriented facet cycles."""

    n_vertices: int
    facets: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        object.__setattr__(self, "facets", tuple(tuple(int(i) for i in f) for f in self.facets))

    def __eq__(self, other):
        # facets compare up to cyclic rotation and facet order, not reflection
        if not isinstance(other, Combinatorics):
            return NotImplemented
        return self.n_vertices == other.n_vertices and sorted(
            map(_canonical_cycle, self.facets)
        ) == sorted(map(_canonical_cycle, other.facets))

    def __hash__(self):
        return hash((self.n_vertices, tuple(sorted(map(_canonical_cycle, self.facets)))))

    @property
    def n_facets(self) -> int:
        return len(self.facets)

    def directed_edges(self):
        for fi, f in enumerate(self.facets):
            for k in range(len(f)):
                yield f[k], f[(k + 1) % len(f)], fi

    def vertex_edges(self, v: int) -> list[tuple[int, int]]:
        return [e for e in edges_of(self) if v in e]


def validate_combinatorics(c: Combinatorics) -> None:
    """Raise :class:`CombinatoricsError` describing the first violated invariant."""
    n = c.n_vertices
    if n < 4:
        raise CombinatoricsError(f"need at least 4 vertices, got {n}")
    if not c.facets:
        raise CombinatoricsError("no facets")
    seen = {}
    for fi, f in enumerate(c.facets):
        if len(f) < 3:
            raise CombinatoricsError(f"facet {fi} has {len(f)} vertices")
        if len(set(f)) != len(f):
            raise CombinatoricsError(f"facet {fi} repeats a vertex")
        for v in f:
            if not 0 <= v < n:
                raise CombinatoricsError(f"facet {fi} has out-of-range vertex {v}")
        for k in range(len(f)):
            de = (f[k], f[(k + 1) % len(f)])
            if de in seen:
                raise CombinatoricsError(
                    f"directed edge {de} appears in facets {seen[de]} and {fi}"
                )
            seen[de] = fi
    for (a, b), fi in seen.items():
        if (b, a) not in seen:
            raise CombinatoricsError(
                f"edge {{{a},{b}}} of facet {fi} has no oppositely oriented partner"
            )
    used = {v for f in c.facets for v in f}
    if len(used) != n:
        missing = sorted(set(range(n)) - used)
        raise CombinatoricsError(f"vertices {missing} lie on no facet")
    e = len(seen) // 2
    if n - e + len(c.facets) != 2:
        raise CombinatoricsError(f"Euler relation fails: v-e+f = {n - e + len(c.facets)}")


def edges_of(c: Combinatorics) -> list[tuple[int, int]]:
    validate_combinatorics(c)
    return sorted({(min(a, b), max(a, b)) for a, b, _ in c.directed_edges()})


def dual_combinatorics(c: Combinatorics) -> Combinatorics:
    """Dual face lattice; dual vertex ``i`` is facet ``i`` of ``c``.

    The dual facet of vertex ``v`` lists the facets around ``v`` in
    counterclockwise order seen from outside.
    """
    validate_combinatorics(c)
    owner = {(a, b): fi for a, b, fi in c.directed_edges()}
    pred = {}
    for fi, f in enumerate(c.facets):
        for k, v in enumerate(f):
            pred[(fi, v)] = f[k - 1]
    facets = []
    for v in range(c.n_vertices):
        start = next(fi for fi, f in enumerate(c.facets) if v in f)
        cycle = [start]
        cur = start
        while True:
            cur = owner[(v, pred[(cur, v)])]
            if cur == start:
                break
            cycle.append(cur)
        facets.append(tuple(cycle))
    return Combinatorics(c.n_facets, tuple(facets))


@dataclass(frozen=True)
class Realization:
    combinatorics: Combinatorics
    coordinates: tuple[Vec3, ...] = field()

    def __post_init__(self):
        coords = tuple(v if isinstance(v, Vec3) else Vec3.of(v) for v in self.coordinates)
        # ints are promoted so that exact division never falls back to float
        coords = tuple(
            Vec3.of(v, Fraction) if any(type(s) is int for s in v) else v for v in coords
        )
        object.__setattr__(self, "coordinates", coords)
        if len(coords) != self.combinatorics.n_vertices:
            raise GeometryError(
                f"{len(coords)} coordinates for {self.combinatorics.n_vertices} vertices"
            )
        kinds = {scalar_kind(s) for v in coords for s in v}
        if len(kinds) > 1:
            raise GeometryError(f"mixed scalar kinds {sorted(kinds)}")

    @property
    def kind(self) -> str:
        return scalar_kind(self.coordinates[0].x)

    @property
    def is_exact(self) -> bool:
        return self.kind != "float"

    def edges(self) -> list[tuple[int, int]]:
        return edges_of(self.combinatorics)

    def to_float(self) -> Realization:
        return Realization(self.combinatorics, tuple(v.to_float() for v in self.coordinates))

    def to_array(self) -> np.ndarray:
        return np.array([v.to_array() for v in self.coordinates])

    @classmethod
    def from_array(cls, combinatorics: Combinatorics, points) -> Realization:
        return cls(combinatorics, tuple(Vec3.of(p, float) for p in np.asarray(points, dtype=float)))

    def map(self, fn) -> Realization:
        return Realization(self.combinatorics, tuple(fn(v) for v in self.coordinates))


def det3(a: Vec3, b: Vec3, c: Vec3):
    """det of the 3x3 matrix with columns a, b, c."""
    return a.dot(b.cross(c))


def orient4(a: Vec3, b: Vec3, c: Vec3, d: Vec3):
    """det [[1,1,1,1],[a,b,c,d]] = ((b-a) x (c-a)) . (d-a)."""
    return (b - a).cross(c - a).dot(d - a)


def homogeneous_int(v: Vec3) -> tuple[int, int, int, int]:
    """Integer homogeneous coordinates ``(w, X, Y, Z)`` with ``v = (X, Y, Z) / w``, ``w > 0``."""
    fx, fy, fz = (Fraction(s) for s in v)
    w = math.lcm(fx.denominator, fy.denominator, fz.denominator)
    return (w, fx.numerator * (w // fx.denominator), fy.numerator * (w // fy.denominator),
            fz.numerator * (w // fz.denominator))


def orient4_sign_int(a, b, c, d) -> int:
    """Sign of :func:`orient4` from integer homogeneous coordinates."""
    # det of the 4x4 matrix with columns a, b, c, d (rows w, X, Y, Z)
    m = (a, b, c, d)
    a0, a1, a2, a3 = (m[0][r] for r in range(4))
    b0, b1, b2, b3 = (m[1][r] for r in range(4))
    c0, c1, c2, c3 = (m[2][r] for r in range(4))
    d0, d1, d2, d3 = (m[3][r] for r in range(4))
    s01 = a0 * b1 - a1 * b0
    s02 = a0 * b2 - a2 * b0
    s03 = a0 * b3 - a3 * b0
    s12 = a1 * b2 - a2 * b1
    s13 = a1 * b3 - a3 * b1
    s23 = a2 * b3 - a3 * b2
    c23 = c2 * d3 - c3 * d2
    c13 = c1 * d3 - c3 * d1
    c12 = c1 * d2 - c2 * d1
    c03 = c0 * d3 - c3 * d0
    c02 = c0 * d2 - c2 * d0
    c01 = c0 * d1 - c1 * d0
    det = s01 * c23 - s02 * c13 + s03 * c12 + s12 * c03 - s13 * c02 + s23 * c01
    return (det > 0) - (det < 0)


def solve3(rows: Sequence[Vec3], rhs: Sequence):
    """Solve ``rows[i] . x = rhs[i]`` by Cramer's rule (exact for exact scalars)."""
    r0, r1, r2 = rows
    det = det3(r0, r1, r2)
    if is_zero(det):
        raise GeometryError("singular 3x3 system")
    # columns of the transposed system
    c0 = Vec3(r0.x, r1.x, r2.x)
    c1 = Vec3(r0.y, r1.y, r2.y)
    c2 = Vec3(r0.z, r1.z, r2.z)
    b = Vec3(*rhs)
    return Vec3(det3(b, c1, c2) / det, det3(c0, b, c2) / det, det3(c0, c1, b) / det)


def _facet_triple(coords, f: Sequence[int]) -> tuple[int, int, int]:
    """First triple (f[0], f[1], f[k]) in facet order that is not collinear."""
    a, b = coords[f[0]], coords[f[1]]
    for k in range(2, len(f)):
        n = (b - a).cross(coords[f[k]] - a)
        if not _vec_is_zero(n):
            return f[0], f[1], f[k]
    raise GeometryError(f"degenerate facet {tuple(f)}: all vertices collinear")


def _vec_is_zero(v: Vec3) -> bool:
    if v.kind == "float":
        return float(v.norm_sq()) <= 1e-24
    return all(is_zero(s) for s in v)


def _zero_within(value, scale: float, exact: bool) -> bool:
    if exact:
        return is_zero(value)
    return abs(float(value)) <= FLOAT_PLANARITY_TOL * max(scale, 1.0)


def _check_planar(r: Realization) -> None:
    coords = r.coordinates
    exact = r.is_exact
    for fi, f in enumerate(r.combinatorics.facets):
        if len(f) == 3:
            continue
        i, j, k = _facet_triple(coords, f)
        scale = max(float(coords[v].norm_sq()) for v in f) ** 1.5
        for v in f:
            if v in (i, j, k):
                continue
            if not _zero_within(orient4(coords[i], coords[j], coords[k], coords[v]), scale, exact):
                raise GeometryError(f"facet {fi} is not planar (vertex {v})")


def _check_origin_interior(r: Realization) -> None:
    coords = r.coordinates
    for fi, f in enumerate(r.combinatorics.facets):
        i, j, k = _facet_triple(coords, f)
        if sign(det3(coords[i], coords[j], coords[k])) <= 0:
            raise GeometryError(f"origin is not strictly inside (facet {fi})")


def volume(r: Realization):
    """Volume via fan triangulation of each facet coned from the origin."""
    validate_combinatorics(r.combinatorics)
    _check_planar(r)
    _check_origin_interior(r)
    coords = r.coordinates
    total = 0
    for f in r.combinatorics.facets:
        a = coords[f[0]]
        for k in range(1, len(f) - 1):
            total = total + det3(a, coords[f[k]], coords[f[k + 1]])
    if r.kind == "rational":
        return Fraction(total) / 6
    return total / 6


def polar(r: Realization) -> Realization:
    """Polar polytope; dual vertex ``i`` solves ``a . v = 1`` on facet ``i``."""
    validate_combinatorics(r.combinatorics)
    _check_planar(r)
    _check_origin_interior(r)
    coords = r.coordinates
    one = 1 if r.is_exact else 1.0
    dual_pts = []
    for f in r.combinatorics.facets:
        i, j, k = _facet_triple(coords, f)
        dual_pts.append(solve3([coords[i], coords[j], coords[k]], [one, one, one]))
    if r.kind == "rational":
        dual_pts = [Vec3.of(p, Fraction) for p in dual_pts]
    return Realization(dual_combinatorics(r.combinatorics), tuple(dual_pts))


@dataclass(frozen=True)
class CongruenceReport:
    gram_match: bool
    distance_match: bool
    gram_error: float
    distance_error: float

    def __bool__(self):
        return self.gram_match or self.distance_match


def congruent(r1: Realization, r2: Realization, tol: float = 1e-9) -> CongruenceReport:
    """Compare two realizations up to orthogonal maps.

    Two checks are reported: label-aware Gram matrices of the vertex vectors
    (equality means an orthogonal map carrying vertex i to vertex i), and
    label-free sorted pairwise distances.  The report is truthy if either
    agrees within ``tol``.
    """
    if r1.combinatorics.n_vertices != r2.combinatorics.n_vertices:
        raise GeometryError("different vertex counts")
    a, b = r1.to_array(), r2.to_array()
    gram_err = float(np.max(np.abs(a @ a.T - b @ b.T)))
    iu = np.triu_indices(len(a), 1)
    da = np.sort(np.linalg.norm(a[:, None] - a[None], axis=-1)[iu])
    db = np.sort(np.linalg.norm(b[:, None] - b[None], axis=-1)[iu])
    dist_err = float(np.max(np.abs(da - db))) if len(da) else 0.0
    return CongruenceReport(gram_err <= tol, dist_err <= tol, gram_err, dist_err)
