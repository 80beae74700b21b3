"""Tangency, convexity and centering checks for realizations.

The contact point of a tangent edge is computed without square roots,
from the squared tangent lengths and their product, so that it stays in the
scalar field of the vertex coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .geometry import (
    Realization,
    Vec3,
    _facet_triple,
    edges_of,
    homogeneous_int,
    orient4,
    orient4_sign_int,
    validate_combinatorics,
)
from .scalars import is_zero, sign

__all__ = [
    "DEFAULT_TOL",
    "TangencyError",
    "TangencyReport",
    "ConvexityReport",
    "SpringbornReport",
    "tangency_residual",
    "pair_product",
    "contact_point",
    "contact_points",
    "edge_barycenter",
    "is_koebe",
    "convexity_check",
    "is_springborn",
]

DEFAULT_TOL = 1e-9


class TangencyError(ValueError):
    pass


def tangency_residual(v: Vec3, w: Vec3):
    """(v.(w-v))^2 - |v-w|^2 (|v|^2 - 1); zero iff line vw touches the unit sphere."""
    d = w - v
    t = v.dot(d)
    return t * t - d.norm_sq() * (v.norm_sq() - 1)


def pair_product(v: Vec3, w: Vec3):
    """The product of tangent lengths l_v*l_w of a tangent edge.

    Uses 2 l_v l_w = |w-v|^2 - |w|^2 - |v|^2 + 2, valid because the edge
    length of a tangent edge is l_v + l_w.
    """
    d = w - v
    two = 2 if v.kind != "float" else 2.0
    p = (d.norm_sq() - w.norm_sq() - v.norm_sq() + two) / two
    if v.kind == "rational":
        p = Fraction(p)
    if sign(p) <= 0:
        raise TangencyError(f"non-positive tangent-length product {p} (not an edge outside the sphere)")
    return p


def contact_point(v: Vec3, w: Vec3, tol: float = DEFAULT_TOL) -> Vec3:
    """Point where the tangent edge vw touches the unit sphere."""
    res = tangency_residual(v, w)
    if v.kind == "float":
        scale = max(float(v.norm_sq()), float(w.norm_sq()), 1.0) ** 2
        if abs(res) > tol * scale:
            raise TangencyError(f"edge not tangent (residual {res:.3e})")
    elif not is_zero(res):
        raise TangencyError(f"edge not tangent (residual {res})")
    lv2 = v.norm_sq() - 1
    lw2 = w.norm_sq() - 1
    if sign(lv2) <= 0 or sign(lw2) <= 0:
        raise TangencyError("vertex on or inside the unit sphere")
    lvw = pair_product(v, w)
    return v + (w - v) * ((lv2 + lvw) / (lv2 + 2 * lvw + lw2))


def contact_points(r: Realization, tol: float = DEFAULT_TOL) -> dict[tuple[int, int], Vec3]:
    c = r.coordinates
    return {e: contact_point(c[e[0]], c[e[1]], tol) for e in edges_of(r.combinatorics)}


def edge_barycenter(r: Realization, tol: float = DEFAULT_TOL) -> Vec3:
    pts = list(contact_points(r, tol).values())
    total = pts[0]
    for p in pts[1:]:
        total = total + p
    m = len(pts)
    return total / m


@dataclass(frozen=True)
class TangencyReport:
    edges: list
    residuals: list
    max_abs: float
    exact_zero: bool | None
    outside: bool
    passed: bool

    def __bool__(self):
        return self.passed


def is_koebe(r: Realization, tol: float = DEFAULT_TOL) -> TangencyReport:
    edges = edges_of(r.combinatorics)
    c = r.coordinates
    residuals = [tangency_residual(c[i], c[j]) for i, j in edges]
    max_abs = max(abs(float(x)) for x in residuals)
    outside = all(sign(v.norm_sq() - 1) > 0 for v in c)
    if r.is_exact:
        exact_zero = all(is_zero(x) for x in residuals)
        passed = exact_zero and outside
    else:
        exact_zero = None
        passed = max_abs <= tol and outside
    return TangencyReport(edges, residuals, max_abs, exact_zero, outside, passed)


@dataclass(frozen=True)
class ConvexityReport:
    # (facet index, vertex, sign of eps*det); sign 0 for coplanar members
    records: list = field(repr=False)
    coplanar_ok: bool
    all_strict: bool

    @property
    def passed(self) -> bool:
        return self.coplanar_ok and self.all_strict

    def __bool__(self):
        return self.passed


def _sign_within(value, scale: float, exact: bool, tol: float) -> int:
    if exact:
        return sign(value)
    x = float(value)
    if abs(x) <= tol * scale:
        return 0
    return 1 if x > 0 else -1


def convexity_check(r: Realization, tol: float = DEFAULT_TOL) -> ConvexityReport:
    """Orientation signs of every facet against every vertex.

    With facets counterclockwise from outside, the normal of the chosen
    triple points outward, so non-members need det < 0 (eps = -1).
    """
    validate_combinatorics(r.combinatorics)
    c = r.coordinates
    exact = r.is_exact
    scale = max(float(v.norm_sq()) for v in c) ** 1.5
    if r.kind == "rational":
        hom = [homogeneous_int(v) for v in c]

        def side(i, j, k, v):
            return -orient4_sign_int(hom[i], hom[j], hom[k], hom[v])
    else:

        def side(i, j, k, v):
            return -_sign_within(orient4(c[i], c[j], c[k], c[v]), scale, exact, tol)

    records = []
    coplanar_ok = True
    all_strict = True
    for fi, f in enumerate(r.combinatorics.facets):
        i, j, k = _facet_triple(c, f)
        members = set(f)
        for v in range(len(c)):
            if v in (i, j, k):
                continue
            s = side(i, j, k, v)
            records.append((fi, v, s))
            if v in members:
                coplanar_ok &= s == 0
            else:
                all_strict &= s > 0
    return ConvexityReport(records, coplanar_ok, all_strict)


@dataclass(frozen=True)
class SpringbornReport:
    koebe: TangencyReport
    barycenter: Vec3 | None
    barycenter_norm: float
    passed: bool

    def __bool__(self):
        return self.passed


def is_springborn(r: Realization, tol: float = DEFAULT_TOL) -> SpringbornReport:
    kr = is_koebe(r, tol)
    if not kr.passed:
        return SpringbornReport(kr, None, float("nan"), False)
    try:
        beta = edge_barycenter(r, tol)
    except TangencyError:
        return SpringbornReport(kr, None, float("nan"), False)
    norm = float(beta.norm_sq()) ** 0.5
    if r.is_exact:
        passed = all(is_zero(s) for s in beta)
    else:
        passed = norm <= tol
    return SpringbornReport(kr, beta, norm, passed)
