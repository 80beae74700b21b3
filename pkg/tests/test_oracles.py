"""Independent checks of derived reference values (sympy, scipy, brute force)."""

import math
from fractions import Fraction

import numpy as np
import pytest
import sympy as sp
from scipy.spatial import ConvexHull

from koebe.families import bipyramid_realization, bipyramid_volume, family, octahedron_koebe4_parameters
from koebe.geometry import volume
from koebe.invariants import bipyramid_alpha, totient


def test_apex_solutions_by_elimination():
    x, y, z = sp.symbols("x y z", real=True)
    X = sp.Matrix([x, y, z])
    base = [sp.Matrix(v) for v in [(-1, 1, 1), (1, -1, 1), (1, 1, -1)]]

    def residual(v, w):
        return (v.dot(w - v)) ** 2 - (v - w).dot(v - w) * (v.dot(v) - 1)

    sols = sp.solve([residual(v, X) for v in base], [x, y, z], dict=True)
    points = {(s[x], s[y], s[z]) for s in sols}
    assert (sp.Rational(3, 5),) * 3 in points
    assert (-1, -1, -1) in points


def test_alpha_identity_symbolic():
    t = sp.symbols("t", real=True)
    zeta = sp.exp(sp.I * t)
    alpha = (zeta**2 - 1) ** 2 / ((zeta - 1) * (zeta**3 - 1))
    simple = (2 + 2 * sp.cos(t)) / (1 + 2 * sp.cos(t))
    for k in range(4, 41):
        diff = (alpha - simple).subs(t, 2 * sp.pi / k)
        assert abs(complex(sp.N(diff, 30))) < 1e-25


def test_alpha_exact_values():
    assert bipyramid_alpha(4) == 2
    assert bipyramid_alpha(6) == Fraction(3, 2)
    assert bipyramid_alpha(5) == pytest.approx(float((1 + sp.sqrt(5)) / 2), abs=1e-14)


def test_koebe4_radicand_is_a_square():
    assert sp.sqrtdenest(sp.sqrt(137 + 48 * sp.sqrt(2))) == 3 + 8 * sp.sqrt(2)
    x, y = octahedron_koebe4_parameters(exact=True)
    assert float(y) == pytest.approx(math.sqrt(137 + 48 * math.sqrt(2)) / 17, rel=1e-15)


@pytest.mark.parametrize("k", [3, 4, 5, 6, 7, 11, 20])
def test_bipyramid_volume_against_hull(k):
    hull = ConvexHull(bipyramid_realization(k).to_array())
    assert hull.volume == pytest.approx(bipyramid_volume(k), rel=1e-12)
    assert volume(bipyramid_realization(k)) == pytest.approx(hull.volume, rel=1e-12)


@pytest.mark.parametrize("name", ["octahedron_koebe4", "dodecahedron", "icosahedron", "cube_springborn"])
def test_family_volume_against_hull(name):
    r = family(name)
    assert volume(r) == pytest.approx(ConvexHull(r.to_array()).volume, rel=1e-12)


def test_totient_against_sympy():
    for k in range(1, 2000):
        assert totient(k) == int(sp.totient(k))
    assert [totient(k) for k in (1, 4, 12)] == [1, 2, 4]


def test_cross_ratio_of_quarter_turns():
    pts = np.exp(2j * np.pi * np.arange(4) / 4)
    a, b, c, d = pts
    assert (c - a) * (d - b) / ((c - b) * (d - a)) == pytest.approx(2)
