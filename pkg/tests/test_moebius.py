import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from koebe.families import family
from koebe.geometry import congruent
from koebe.moebius import (
    INFINITY,
    AdmissibilityError,
    apply_lorentz,
    boost_to_origin,
    contact_cross_ratio,
    cross_ratio,
    inverse_stereographic,
    is_lorentz,
    lorentz_from_moebius,
    lorentz_inverse,
    minkowski_q,
    moebius_apply,
    moebius_matrix,
    projective_point,
    rotation_lorentz,
    stereographic,
)
from koebe.verify import is_springborn

coord = st.floats(-3, 3, allow_nan=False)


def random_moebius(rng):
    while True:
        A = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        if abs(np.linalg.det(A)) > 0.1:
            return moebius_matrix(*A.ravel())


def test_stereographic_lands_on_null_cone():
    rng = np.random.default_rng(0)
    for _ in range(100):
        p = projective_point(complex(*rng.normal(size=2)), complex(*rng.normal(size=2)))
        x = stereographic(p)
        assert minkowski_q(x) == pytest.approx(0, abs=1e-12)
        assert x[0] > 0


def test_infinity_maps_to_pole():
    x = stereographic(INFINITY)
    assert np.allclose(x[1:] / x[0], [1, 0, 0])


def test_inverse_stereographic_round_trip():
    rng = np.random.default_rng(1)
    for _ in range(200):
        s = rng.normal(size=3)
        s /= np.linalg.norm(s)
        x = stereographic(inverse_stereographic(s))
        assert np.allclose(x[1:] / x[0], s, atol=1e-12)
    for s in ([1, 0, 0], [-1, 0, 0]):
        x = stereographic(inverse_stereographic(s))
        assert np.allclose(x[1:] / x[0], s)


def test_homomorphism_equivariance_and_q(rng):
    for _ in range(1000):
        A, B = random_moebius(rng), random_moebius(rng)
        LA, LB = lorentz_from_moebius(A), lorentz_from_moebius(B)
        L_AB = lorentz_from_moebius(A @ B)
        assert np.allclose(L_AB, LA @ LB, atol=1e-9 * max(1.0, np.abs(L_AB).max()))
        p = projective_point(complex(*rng.normal(size=2)))
        lhs = stereographic(moebius_apply(A, p))
        rhs = LA @ stereographic(p)
        assert np.allclose(lhs / lhs[0], rhs / rhs[0], atol=1e-9)
        x = rng.normal(size=4)
        assert minkowski_q(LA @ x) == pytest.approx(minkowski_q(x), abs=1e-9 * np.abs(LA).max() ** 2 * (x @ x))


def test_sign_of_matrix_irrelevant(rng):
    A = random_moebius(rng)
    assert np.allclose(lorentz_from_moebius(-A), lorentz_from_moebius(A), rtol=0, atol=1e-15 * np.abs(lorentz_from_moebius(A)).max())


def test_lorentz_inverse_and_boost():
    for a in ([0.3, -0.2, 0.5], [0, 0, 0], [0.9, 0, 0]):
        M = boost_to_origin(a)
        assert is_lorentz(M)
        assert np.allclose(lorentz_inverse(M) @ M, np.eye(4))
        img = M @ np.r_[1, a]
        assert np.allclose(img[1:], 0, atol=1e-12)
    with pytest.raises(ValueError):
        boost_to_origin([1.0, 0, 0])


@settings(max_examples=300)
@given(*[coord] * 8)
def test_cross_ratio_moebius_invariant(a, b, c, d, e, f, g, h):
    pts = [complex(a, b), complex(c, d), complex(e, f), complex(g, h)]
    if min(abs(p - q) for i, p in enumerate(pts) for q in pts[i + 1:]) < 1e-2:
        return
    A = moebius_matrix(1 + 0.5j, -0.3, 0.7j, 1.2)
    img = [moebius_apply(A, projective_point(p)) for p in pts]
    cr, cr2 = cross_ratio(*pts), cross_ratio(*img)
    assert abs(cr - cr2) <= 1e-8 * max(1.0, abs(cr))


def test_cross_ratio_infinity_and_coincident():
    assert cross_ratio(0, 1, 2, INFINITY) == pytest.approx(2)
    with pytest.raises(ValueError):
        cross_ratio(0, 1, 1, 2)


def test_cross_ratio_real_for_concyclic_points():
    z = np.exp(1j * np.array([0.1, 1.0, 2.5, 4.0]))
    assert abs(cross_ratio(*z).imag) < 1e-12


@pytest.mark.parametrize("k", [4, 5, 9, 40])
def test_bipyramid_cross_ratio(k):
    r = family("bipyramid", k=k)
    cr = contact_cross_ratio(r, [(j, (j + 1) % k) for j in range(4)])
    c = np.cos(2 * np.pi / k)
    assert abs(cr - (2 + 2 * c) / (1 + 2 * c)) <= 1e-9


def test_contact_cross_ratio_bad_edges():
    r = family("bipyramid", k=5)
    with pytest.raises(ValueError):
        contact_cross_ratio(r, [(0, 2), (1, 2), (2, 3), (3, 4)])
    with pytest.raises(ValueError):
        contact_cross_ratio(r, [(0, 1), (1, 0), (2, 3), (3, 4)])


def test_apply_rotation_preserves_springborn():
    r = family("cube_springborn")
    q, _ = np.linalg.qr(np.random.default_rng(2).normal(size=(3, 3)))
    img = apply_lorentz(r, rotation_lorentz(q))
    assert is_springborn(img, 1e-10)
    assert congruent(img, r, 1e-10)


def test_boost_breaks_springborn_but_not_koebe():
    r = family("dodecahedron")
    img = apply_lorentz(r, boost_to_origin([0.2, 0.1, -0.3]))
    assert not is_springborn(img, 1e-6)
    assert is_springborn(img, 1e-6).koebe.passed


def test_inadmissible_boost_rejected():
    r = family("tetrahedron")
    with pytest.raises(AdmissibilityError):
        apply_lorentz(r, boost_to_origin([0.6, -0.6, 0.5]))
