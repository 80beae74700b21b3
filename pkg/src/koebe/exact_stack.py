"""Exact rational Koebe realizations of stacked 3-polytopes.

Starting from the rational tetrahedron with vertices (-1,1,1), (1,-1,1),
(1,1,-1), (-1,-1,-1), each stacking step places a new vertex over a
triangular facet so that the three new edges are tangent to the unit
sphere.  Everything is done in rational arithmetic: only squared tangent
lengths ``l_i^2`` and pairwise products ``l_i l_j`` are ever formed.

For a tangent triangle with tangent lengths l_1, l_2, l_3 and incircle
radius r (the circle cut from the sphere by the facet plane), the apex
tangent length l_4 satisfies, with u = 1/l_4 and S = sum 1/l_i,

    u^2 - 2 S u + (4 + sum 1/l_i^2 - 2/r^2) = 0,   disc/4 = 4 (1 - r^2) / r^2.

The two roots are u = S +- sqrt(disc/4).  The products S*sqrt(.) and
l_i*sqrt(.) are rational because r sqrt(1 - r^2) (l_1 + l_2 + l_3) equals
half of |det(v1|v2|v3)|.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Sequence

from .geometry import (
    Combinatorics,
    Realization,
    Vec3,
    det3,
    homogeneous_int,
    orient4,
    orient4_sign_int,
    solve3,
)
from .verify import pair_product as _pair_product
from .verify import tangency_residual

__all__ = [
    "StackingError",
    "LengthAlgebra",
    "StackingProgram",
    "TETRAHEDRON_COORDS",
    "TETRAHEDRON_FACETS",
    "tetrahedron",
    "tangent_length_sq",
    "pair_product",
    "length_algebra",
    "apex_length_data",
    "small_simplex_apex",
    "stack",
    "check_program",
    "build_stacked",
    "random_program",
    "coordinate_bits",
]

Side = Literal["near", "far"]

TETRAHEDRON_COORDS = ((-1, 1, 1), (1, -1, 1), (1, 1, -1), (-1, -1, -1))
TETRAHEDRON_FACETS = ((0, 1, 2), (0, 3, 1), (1, 3, 2), (0, 2, 3))


class StackingError(ValueError):
    pass


def tetrahedron() -> Realization:
    return Realization(
        Combinatorics(4, TETRAHEDRON_FACETS),
        tuple(Vec3.of(p, Fraction) for p in TETRAHEDRON_COORDS),
    )


def _rational(v: Vec3) -> Vec3:
    if v.kind != "rational":
        raise StackingError(f"expected rational coordinates, got {v.kind}")
    return v


def tangent_length_sq(v: Vec3) -> Fraction:
    """|v|^2 - 1, the squared length of a tangent segment from v to the sphere."""
    lsq = Fraction(_rational(v).norm_sq()) - 1
    if lsq <= 0:
        raise StackingError(f"{tuple(v)} is not strictly outside the unit sphere")
    return lsq


def pair_product(v: Vec3, w: Vec3) -> Fraction:
    _rational(v), _rational(w)
    if v == w:
        raise StackingError("pair_product of a vertex with itself")
    tangent_length_sq(v), tangent_length_sq(w)
    if tangency_residual(v, w) != 0:
        raise StackingError(f"edge {tuple(v)}-{tuple(w)} is not tangent")
    return Fraction(_pair_product(v, w))


@dataclass(frozen=True)
class LengthAlgebra:
    lsq: tuple[Fraction, Fraction, Fraction]
    # lprod[i][j] = l_i l_j for i != j, lprod[i][i] = lsq[i]
    lprod: tuple[tuple[Fraction, ...], ...]
    det3: Fraction
    rsq: Fraction

    def pair_sum(self) -> Fraction:
        p = self.lprod
        return p[0][1] + p[0][2] + p[1][2]


def length_algebra(v1: Vec3, v2: Vec3, v3: Vec3) -> LengthAlgebra:
    vs = (v1, v2, v3)
    lsq = tuple(tangent_length_sq(v) for v in vs)
    lprod = [[lsq[i] if i == j else None for j in range(3)] for i in range(3)]
    for i in range(3):
        for j in range(i + 1, 3):
            lprod[i][j] = lprod[j][i] = pair_product(vs[i], vs[j])
    for i in range(3):
        for j in range(i + 1, 3):
            assert lprod[i][j] ** 2 == lsq[i] * lsq[j]
    d = Fraction(det3(v1, v2, v3))
    if d == 0:
        raise StackingError("facet plane passes through the origin")
    rsq = 1 / (1 / lprod[0][1] + 1 / lprod[0][2] + 1 / lprod[1][2])
    if not 0 < rsq < 1:
        raise StackingError(f"inradius^2 {rsq} outside (0, 1)")
    return LengthAlgebra(lsq, tuple(map(tuple, lprod)), d, rsq)


def apex_length_data(la: LengthAlgebra, side: Side = "near"):
    """Return ``(l4^2, (l1 l4, l2 l4, l3 l4))`` for the apex on the given side.

    ``near`` is the larger root u = S + sqrt(D) (smaller apex tangent length,
    apex on the side of the smaller ball portion); ``far`` is u = S - sqrt(D).
    """
    if side not in ("near", "far"):
        raise ValueError(f"side must be 'near' or 'far', got {side!r}")
    s = 1 if side == "near" else -1
    lsq, lp = la.lsq, la.lprod
    absdet = abs(la.det3)
    inv_sq = sum(1 / x for x in lsq)
    inv_pair = 1 / lp[0][1] + 1 / lp[0][2] + 1 / lp[1][2]
    S_sq = inv_sq + 2 * inv_pair
    disc = 4 * (1 - la.rsq) / la.rsq
    S_root = la.pair_sum() * absdet / (lsq[0] * lsq[1] * lsq[2])
    if side == "far" and S_sq <= disc:
        raise StackingError("no far apex outside the sphere (S - sqrt(D) <= 0)")
    u_sq = S_sq + disc + 2 * s * S_root
    l4sq = 1 / u_sq
    prods = []
    for i in range(3):
        j, k = [x for x in range(3) if x != i]
        # l_i * u = l_i S +- l_i sqrt(D)
        li_S = 1 + lp[i][j] / lsq[j] + lp[i][k] / lsq[k]
        li_root = absdet / lp[j][k]
        li_u = li_S + s * li_root
        prods.append(lsq[i] / li_u)
    for i in range(3):
        assert prods[i] ** 2 == lsq[i] * l4sq
    return l4sq, tuple(prods)


def small_simplex_apex(v1: Vec3, v2: Vec3, v3: Vec3, side: Side = "near") -> Vec3:
    """Fourth vertex completing the tangent triangle to a Koebe tetrahedron.

    Solves the linear system ``x . v_i = 1 - l_i l_4``.
    """
    la = length_algebra(v1, v2, v3)
    l4sq, prods = apex_length_data(la, side)
    x = Vec3.of(solve3((v1, v2, v3), [1 - p for p in prods]), Fraction)
    if x.norm_sq() != l4sq + 1:
        raise StackingError("apex norm inconsistent with its tangent length")
    for v in (v1, v2, v3):
        if tangency_residual(v, x) != 0:
            raise StackingError("apex edge not tangent")
    # near apex must be on the opposite side of the facet plane from the origin
    o = orient4(v1, v2, v3, x) * orient4(v1, v2, v3, Vec3(Fraction(0), Fraction(0), Fraction(0)))
    if (side == "near") != (o < 0):
        raise StackingError(f"{side} apex on the wrong side of the facet plane")
    return x


@dataclass(frozen=True)
class StackingProgram:
    steps: tuple[tuple[int, int, int], ...] = ()
    base: str = "tetrahedron"

    def __post_init__(self):
        if self.base != "tetrahedron":
            raise StackingError(f"unsupported base {self.base!r}")
        steps = tuple(tuple(int(i) for i in s) for s in self.steps)
        for s in steps:
            if len(s) != 3 or len(set(s)) != 3:
                raise StackingError(f"step {s} is not a vertex triple")
        object.__setattr__(self, "steps", steps)


def _find_facet(c: Combinatorics, triple) -> int:
    want = set(triple)
    for fi, f in enumerate(c.facets):
        if set(f) == want:
            return fi
    raise StackingError(f"{tuple(triple)} is not a facet")


def stack(r: Realization, facet: Sequence[int]) -> Realization:
    """Stack the small simplex over a triangular facet of an exact Koebe realization.

    Only the parts of the convexity certificate that change are rechecked:
    the new vertex against every old facet, and every vertex against the
    three new facets.
    """
    if r.kind != "rational":
        raise StackingError("stacking requires rational coordinates")
    c = r.combinatorics
    fi = _find_facet(c, facet)
    f = c.facets[fi]
    if len(f) != 3:
        raise StackingError(f"facet {f} is not a triangle")
    coords = r.coordinates
    a, b, cc = f
    x = small_simplex_apex(coords[a], coords[b], coords[cc], "near")
    n = len(coords)
    new_coords = coords + (x,)
    new_facets = [g for k, g in enumerate(c.facets) if k != fi]
    new_facets += [(a, b, n), (b, cc, n), (cc, a, n)]
    hom = [homogeneous_int(v) for v in new_coords]
    if orient4_sign_int(hom[a], hom[b], hom[cc], hom[n]) <= 0:
        raise StackingError("apex is not beyond the stacked facet")
    for g in new_facets[:-3]:
        if orient4_sign_int(hom[g[0]], hom[g[1]], hom[g[2]], hom[n]) >= 0:
            raise StackingError(f"apex violates facet {g}")
    for g in new_facets[-3:]:
        for v in range(n):
            if v not in g and orient4_sign_int(*(hom[i] for i in g), hom[v]) >= 0:
                raise StackingError(f"vertex {v} violates new facet {g}")
        if det3(*(new_coords[i] for i in g)) <= 0:
            raise StackingError("origin left the interior")
    return Realization(Combinatorics(n + 1, tuple(new_facets)), new_coords)


def check_program(program: StackingProgram) -> None:
    """Combinatorial dry run: every step must name a current facet."""
    facets = {frozenset(f) for f in TETRAHEDRON_FACETS}
    n = 4
    for i, step in enumerate(program.steps):
        key = frozenset(step)
        if key not in facets:
            raise StackingError(f"step {i}: {tuple(step)} is not a facet of the current polytope")
        facets.remove(key)
        a, b, c = step
        facets |= {frozenset((a, b, n)), frozenset((b, c, n)), frozenset((c, a, n))}
        n += 1


def build_stacked(program: StackingProgram | Sequence, on_step=None) -> Realization:
    if not isinstance(program, StackingProgram):
        program = StackingProgram(tuple(program))
    r = tetrahedron()
    for i, step in enumerate(program.steps):
        r = stack(r, step)
        if on_step is not None:
            on_step(i, r)
    return r


def random_program(n_steps: int, rng: random.Random | None = None) -> StackingProgram:
    """Random stacking program; every facet of a stacked polytope is a triangle."""
    rng = rng or random.Random()
    facets = [tuple(f) for f in TETRAHEDRON_FACETS]
    steps = []
    n = 4
    for _ in range(n_steps):
        k = rng.randrange(len(facets))
        a, b, c = facets.pop(k)
        steps.append(tuple(sorted((a, b, c))))
        facets += [(a, b, n), (b, c, n), (c, a, n)]
        n += 1
    return StackingProgram(tuple(steps))


def coordinate_bits(r: Realization) -> int:
    """Largest numerator/denominator bit length among the coordinates."""
    return max(
        max(s.numerator.bit_length(), s.denominator.bit_length())
        for v in r.coordinates
        for s in v
    )
