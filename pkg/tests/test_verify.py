from fractions import Fraction

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from koebe.exact_stack import tetrahedron
from koebe.families import family
from koebe.geometry import Realization, Vec3
from koebe.verify import (
    TangencyError,
    contact_point,
    contact_points,
    convexity_check,
    edge_barycenter,
    is_koebe,
    is_springborn,
    tangency_residual,
)


def test_tetrahedron_contact_points_are_octahedron():
    cps = contact_points(tetrahedron())
    got = {tuple(p) for p in cps.values()}
    units = {tuple(s * (i == j) for j in range(3)) for i in range(3) for s in (1, -1)}
    assert got == units
    assert all(isinstance(s, Fraction) for p in cps.values() for s in p)


def test_residual_nonzero_off_sphere():
    v, w = Vec3(Fraction(2), Fraction(0), Fraction(0)), Vec3(Fraction(0), Fraction(2), Fraction(0))
    assert tangency_residual(v, w) != 0
    with pytest.raises(TangencyError):
        contact_point(v, w)


@settings(max_examples=200)
@given(st.floats(0.05, 3.0), st.floats(0.05, 3.0), st.floats(0, 2 * np.pi), st.floats(-1, 1))
def test_contact_point_on_tangent_segment(la, lb, phi, zc):
    # build a tangent edge from a contact point t and direction u orthogonal to t
    t = np.array([np.sqrt(1 - zc**2) * np.cos(phi), np.sqrt(1 - zc**2) * np.sin(phi), zc])
    u = np.cross(t, [0.3, -0.7, 0.64])
    u /= np.linalg.norm(u)
    v, w = t + la * u, t - lb * u
    p = contact_point(Vec3(*v), Vec3(*w)).to_array()
    assert np.allclose(p, t, atol=1e-9)


@pytest.mark.parametrize("name", ["tetrahedron", "octahedron_springborn", "cube_springborn", "dodecahedron", "icosahedron"])
def test_springborn_families(name):
    assert is_springborn(family(name), 1e-10)
    assert is_springborn(family(name, exact=True))


def test_koebe4_is_koebe_but_not_springborn():
    r = family("octahedron_koebe4", exact=True)
    assert is_koebe(r).exact_zero
    assert not is_springborn(r)
    beta = edge_barycenter(r)
    assert float(beta.norm_sq()) > 1e-3


def test_convexity_detects_dent():
    r = family("icosahedron")
    pts = r.to_array()
    pts[0] *= 0.3  # below the plane of its five neighbours
    rep = convexity_check(Realization.from_array(r.combinatorics, pts))
    assert not rep.passed


def test_convexity_detects_reflection():
    r = family("dodecahedron")
    rep = convexity_check(Realization.from_array(r.combinatorics, -r.to_array() * [1, 1, -1]))
    assert rep.passed
    mirrored = Realization.from_array(r.combinatorics, r.to_array() * [1, 1, -1])
    assert not convexity_check(mirrored).passed


def test_vertex_inside_sphere_not_koebe():
    c = tetrahedron().combinatorics
    r = Realization(c, tuple(Vec3(*(Fraction(s, 2) for s in v)) for v in tetrahedron().coordinates))
    assert not is_koebe(r)
