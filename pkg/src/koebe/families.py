"""Explicit edge-tangent realizations of the Platonic solids and bipyramids.

Vertex orders are fixed:

* tetrahedron: (-1,1,1), (1,-1,1), (1,1,-1), (-1,-1,-1).
* octahedron_springborn: sqrt2*(e1, e2, e3, -e1, -e2, -e3); vertex i+3 is
  opposite vertex i.
* octahedron_koebe4: (-1,1,1), (1,-1,1), (1,1,-1), (x,-y,-y), (-y,x,-y),
  (-y,-y,x) with x = (7 - 4 sqrt2)/17, y = sqrt(137 + 48 sqrt2)/17
  = (3 + 8 sqrt2)/17.
* cube_springborn, icosahedron: polars of octahedron_springborn and
  dodecahedron (dual vertex i = facet i of the primal).
* dodecahedron: the orbit (0, +-1, +-psi^2), (+-psi^2, 0, +-1),
  (+-1, +-psi^2, 0), (+-psi, +-psi, +-psi), psi = 2/(1 + sqrt5), signs
  enumerated with the first coordinate varying slowest.
* bipyramid(k): equator j = 0..k-1 at angle 2 pi j / k and radius
  1/cos(pi/k), then the apexes (0, 0, +-1/sin(pi/k)).
"""

from __future__ import annotations

import itertools
import math
from fractions import Fraction

import numpy as np

from .geometry import Combinatorics, Realization, Vec3, polar
from .scalars import QuadraticNumber, sqrt_of

__all__ = [
    "FAMILY_NAMES",
    "FamilyError",
    "family",
    "bipyramid_combinatorics",
    "bipyramid_realization",
    "bipyramid_volume",
    "octahedron_koebe4_parameters",
]

FAMILY_NAMES = (
    "tetrahedron",
    "octahedron_springborn",
    "octahedron_koebe4",
    "cube_springborn",
    "dodecahedron",
    "icosahedron",
    "bipyramid",
)

EXACT_BIPYRAMIDS = (3, 4, 6)


class FamilyError(ValueError):
    pass


def _orient_facets(points, facets):
    """Reorder each facet counterclockwise seen from outside (origin inside)."""
    p = np.array([[float(s) for s in v] for v in points])
    out = []
    for f in facets:
        c = p[list(f)].mean(axis=0)
        n = c / np.linalg.norm(c)
        u = p[f[0]] - c
        u -= n * (u @ n)
        u /= np.linalg.norm(u)
        w = np.cross(n, u)
        ang = [math.atan2((p[i] - c) @ w, (p[i] - c) @ u) for i in f]
        out.append(tuple(f[i] for i in np.argsort(ang)))
    return tuple(out)


def _facets_by_normals(points, normals):
    """Vertices maximizing each normal direction form a facet."""
    p = np.array([[float(s) for s in v] for v in points])
    facets = []
    for n in normals:
        h = p @ np.asarray(n, dtype=float)
        facets.append(tuple(int(i) for i in np.flatnonzero(h > h.max() - 1e-9)))
    return _orient_facets(points, facets)


# one vertex from each opposite pair {i, i + 3}
_OCTAHEDRON_FACET_SETS = [
    tuple(i if si > 0 else i + 3 for i, si in enumerate(signs))
    for signs in itertools.product((1, -1), repeat=3)
]


def _octahedron_combinatorics() -> Combinatorics:
    # vertex i and i + 3 are opposite
    pts = [(1, 0, 0), (0, 1, 0), (0, 0, 1), (-1, 0, 0), (0, -1, 0), (0, 0, -1)]
    return Combinatorics(6, _orient_facets(pts, _OCTAHEDRON_FACET_SETS))


def octahedron_koebe4_parameters(exact: bool):
    """(x, y) of the octahedron with three rational contact points.

    y = sqrt(137 + 48 sqrt2) / 17, and 137 + 48 sqrt2 = (3 + 8 sqrt2)^2, so
    y = (3 + 8 sqrt2) / 17 and both parameters lie in Q[sqrt2].
    """
    if not exact:
        r2 = math.sqrt(2)
        return (7 - 4 * r2) / 17, math.sqrt(137 + 48 * r2) / 17
    s2 = sqrt_of(2)
    return (7 - 4 * s2) / 17, (3 + 8 * s2) / 17


def _tetrahedron(exact):
    from .exact_stack import TETRAHEDRON_COORDS, TETRAHEDRON_FACETS

    conv = Fraction if exact else float
    return Realization(
        Combinatorics(4, TETRAHEDRON_FACETS),
        tuple(Vec3.of(p, conv) for p in TETRAHEDRON_COORDS),
    )


def _octahedron_springborn(exact):
    a = sqrt_of(2) if exact else math.sqrt(2)
    zero = QuadraticNumber(0, 0, 2) if exact else 0.0
    pts = []
    for sgn in (1, -1):
        for i in range(3):
            pts.append(Vec3(*(sgn * a if j == i else zero for j in range(3))))
    return Realization(_octahedron_combinatorics(), tuple(pts))


def _octahedron_koebe4(exact):
    x, y = octahedron_koebe4_parameters(exact)
    one = x * 0 + 1
    pts = [
        (-one, one, one),
        (one, -one, one),
        (one, one, -one),
        (x, -y, -y),
        (-y, x, -y),
        (-y, -y, x),
    ]
    return Realization(
        Combinatorics(6, _orient_facets(pts, _OCTAHEDRON_FACET_SETS)), tuple(Vec3(*p) for p in pts)
    )


def _dodecahedron(exact):
    if exact:
        psi = 2 / (1 + sqrt_of(5))
        one = QuadraticNumber(1, 0, 5)
    else:
        psi = 2 / (1 + math.sqrt(5))
        one = 1.0
    zero = one * 0
    psi2 = psi * psi
    pts = []
    for s1, s2 in itertools.product((1, -1), repeat=2):
        pts.append((zero, s1 * one, s2 * psi2))
    for s1, s2 in itertools.product((1, -1), repeat=2):
        pts.append((s1 * psi2, zero, s2 * one))
    for s1, s2 in itertools.product((1, -1), repeat=2):
        pts.append((s1 * one, s2 * psi2, zero))
    for s in itertools.product((1, -1), repeat=3):
        pts.append(tuple(si * psi for si in s))
    phi = (1 + math.sqrt(5)) / 2
    normals = []
    for s1, s2 in itertools.product((1, -1), repeat=2):
        normals += [(0, s1, s2 * phi), (s1, s2 * phi, 0), (s2 * phi, 0, s1)]
    facets = _facets_by_normals(pts, normals)
    return Realization(Combinatorics(20, facets), tuple(Vec3(*p) for p in pts))


def bipyramid_combinatorics(k: int) -> Combinatorics:
    if k < 3:
        raise FamilyError(f"bipyramid needs k >= 3, got {k}")
    top, bottom = k, k + 1
    facets = [(j, (j + 1) % k, top) for j in range(k)]
    facets += [((j + 1) % k, j, bottom) for j in range(k)]
    return Combinatorics(k + 2, tuple(facets))


def _exact_trig(k: int):
    """cos(2 pi j/k)/cos(pi/k), sin(2 pi j/k)/cos(pi/k) and 1/sin(pi/k) for k in {3,4,6}."""
    if k == 3:
        s3 = sqrt_of(3)
        eq = [(2 + 0 * s3, 0 * s3), (-1 + 0 * s3, s3), (-1 + 0 * s3, -s3)]
        return eq, 2 * s3 / 3
    if k == 4:
        s2 = sqrt_of(2)
        z = 0 * s2
        return [(s2, z), (z, s2), (-s2, z), (z, -s2)], s2
    if k == 6:
        s3 = sqrt_of(3)
        z = 0 * s3
        c = 2 * s3 / 3
        h = s3 / 3
        one = z + 1
        eq = [(c, z), (h, one), (-h, one), (-c, z), (-h, -one), (h, -one)]
        return eq, z + 2
    raise FamilyError(f"no exact bipyramid for k={k}; available for {EXACT_BIPYRAMIDS}")


def bipyramid_realization(k: int, exact: bool = False) -> Realization:
    comb = bipyramid_combinatorics(k)
    if exact:
        eq, apex = _exact_trig(k)
        z = apex * 0
        pts = [Vec3(x, y, z) for x, y in eq] + [Vec3(z, z, apex), Vec3(z, z, -apex)]
        return Realization(comb, tuple(pts))
    c = math.cos(math.pi / k)
    h = 1 / math.sin(math.pi / k)
    pts = [
        Vec3(math.cos(2 * math.pi * j / k) / c, math.sin(2 * math.pi * j / k) / c, 0.0)
        for j in range(k)
    ]
    pts += [Vec3(0.0, 0.0, h), Vec3(0.0, 0.0, -h)]
    return Realization(comb, tuple(pts))


def bipyramid_volume(k: int, exact: bool = False):
    """2k / (3 cos(pi/k)); exact (Fraction or QuadraticNumber) for k in {3, 4, 6}."""
    if k < 3:
        raise FamilyError(f"bipyramid needs k >= 3, got {k}")
    if not exact:
        return 2 * k / (3 * math.cos(math.pi / k))
    if k == 3:
        return Fraction(4)
    if k == 4:
        return 8 * sqrt_of(2) / 3
    if k == 6:
        return 8 * sqrt_of(3) / 3
    raise FamilyError(f"no exact volume for k={k}; available for {EXACT_BIPYRAMIDS}")


def family(name: str, k: int | None = None, exact: bool = False) -> Realization:
    """Named realization; ``exact`` requests the exact scalar field."""
    if name == "tetrahedron":
        return _tetrahedron(exact)
    if name == "octahedron_springborn":
        return _octahedron_springborn(exact)
    if name == "octahedron_koebe4":
        return _octahedron_koebe4(exact)
    if name in ("cube_springborn", "cube"):
        return polar(_octahedron_springborn(exact))
    if name == "dodecahedron":
        return _dodecahedron(exact)
    if name == "icosahedron":
        return polar(_dodecahedron(exact))
    if name == "bipyramid":
        if k is None:
            raise FamilyError("bipyramid requires k")
        if exact and k not in EXACT_BIPYRAMIDS:
            raise FamilyError(f"no exact bipyramid for k={k}; available for {EXACT_BIPYRAMIDS}")
        return bipyramid_realization(k, exact)
    raise FamilyError(f"unknown family {name!r}; choose from {FAMILY_NAMES}")
