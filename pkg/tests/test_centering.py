import numpy as np
import pytest

from koebe.centering import (
    HemisphereDegeneracy,
    contact_array,
    distance_sum,
    distance_sum_gradient,
    distance_sum_hessian,
    gradient_polynomials,
    min_distance_point,
    springbornize,
)
from koebe.families import family
from koebe.geometry import congruent, volume
from koebe.moebius import apply_lorentz, boost_to_origin, lorentz_inverse


def random_ball_points(rng, contacts, n, radius=0.8):
    out = []
    while len(out) < n:
        x = rng.uniform(-radius, radius, 3)
        if x @ x < radius**2 and np.all(1 - contacts @ x > 0.05):
            out.append(x)
    return out


def central_difference(fn, x, h=1e-6):
    return np.array([(fn(x + h * e) - fn(x - h * e)) / (2 * h) for e in np.eye(3)])


def test_gradient_matches_finite_differences(rng):
    contacts = contact_array(family("icosahedron"))
    for x in random_ball_points(rng, contacts, 100):
        g = distance_sum_gradient(contacts, x)
        fd = central_difference(lambda y: distance_sum(contacts, y), x)
        assert np.linalg.norm(g - fd) <= 1e-6 * max(1.0, np.linalg.norm(g))


def test_hessian_matches_finite_differences(rng):
    contacts = contact_array(family("dodecahedron"))
    for x in random_ball_points(rng, contacts, 30):
        H = distance_sum_hessian(contacts, x)
        fd = np.column_stack(
            [
                (distance_sum_gradient(contacts, x + 1e-6 * e) - distance_sum_gradient(contacts, x - 1e-6 * e)) / 2e-6
                for e in np.eye(3)
            ]
        )
        assert np.allclose(H, fd, rtol=1e-5, atol=1e-5)
        assert np.all(np.linalg.eigvalsh(H) > 0)


def test_gradient_polynomials_clear_denominators(rng):
    contacts = contact_array(family("octahedron_koebe4"))
    for x in random_ball_points(rng, contacts, 20, 0.5):
        s = 1 - contacts @ x
        b = 1 - x @ x
        expected = b * np.prod(s) * distance_sum_gradient(contacts, x)
        assert np.allclose(gradient_polynomials(contacts, x), expected, atol=1e-12)


def test_gradient_at_origin_is_minus_m_barycenter():
    contacts = contact_array(family("octahedron_koebe4"))
    g = distance_sum_gradient(contacts, np.zeros(3))
    assert np.allclose(g, -len(contacts) * contacts.mean(axis=0))


def test_springborn_minimum_at_origin():
    contacts = contact_array(family("cube_springborn"))
    x, rep = min_distance_point(contacts)
    assert np.linalg.norm(x) < 1e-14
    assert rep.iterations == 0


def test_outside_domain_raises():
    contacts = contact_array(family("tetrahedron"))
    with pytest.raises(ValueError):
        distance_sum(contacts, np.array([1.0, 0.0, 0.0]))


def test_concentrated_contacts_diverge():
    rng = np.random.default_rng(4)
    pts = rng.normal(size=(8, 3))
    pts[:5] = [0.0, 0.0, 1.0]
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    with pytest.raises(HemisphereDegeneracy):
        min_distance_point(pts)


def test_hemisphere_contacts_still_have_a_minimum():
    rng = np.random.default_rng(4)
    pts = rng.normal(size=(8, 3))
    pts[:, 2] = np.abs(pts[:, 2]) + 0.1
    pts /= np.linalg.norm(pts, axis=1, keepdims=True)
    x, rep = min_distance_point(pts)
    assert np.linalg.norm(x) < 1
    assert rep.gradient_norm <= 1e-12 * len(pts)


def test_value_zero_at_origin():
    for name in ("tetrahedron", "octahedron_koebe4"):
        assert distance_sum(contact_array(family(name)), np.zeros(3)) == 0


def test_not_euclidean_convex_for_concentrated_contacts():
    contacts = np.array([[0.0, 0.0, 1.0]] * 5 + [[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [0.0, -1.0, 0.0]])
    w = np.linalg.eigvalsh(distance_sum_hessian(contacts, np.array([0.0, 0.0, 0.6])))
    assert w.min() < 0


def test_convexity_inequality(rng):
    contacts = contact_array(family("octahedron_koebe4"))
    pts = random_ball_points(rng, contacts, 200)
    for x, y in zip(pts[::2], pts[1::2]):
        lam = rng.uniform()
        mid = lam * x + (1 - lam) * y
        assert distance_sum(contacts, mid) <= lam * distance_sum(contacts, x) + (1 - lam) * distance_sum(contacts, y) + 1e-12


def test_equivariance_of_minimum(rng):
    r = family("tetrahedron")
    for _ in range(10):
        a = rng.normal(size=3)
        a *= 0.3 / np.linalg.norm(a)
        T = boost_to_origin(a)
        x, _ = min_distance_point(contact_array(apply_lorentz(r, T)))
        back = lorentz_inverse(T) @ np.r_[1.0, x]
        assert np.allclose(back[1:] / back[0], 0, atol=1e-8)


def test_objective_decreases_monotonically():
    moved = apply_lorentz(family("icosahedron"), boost_to_origin([0.5, 0.2, -0.1]))
    _, rep = min_distance_point(contact_array(moved))
    values = [h[1] for h in rep.history]
    assert all(b <= a for a, b in zip(values, values[1:]))


def test_bipyramid_minimum_at_origin():
    x, _ = min_distance_point(contact_array(family("bipyramid", k=9)))
    assert np.linalg.norm(x) <= 1e-10


def test_koebe4_centers_to_springborn_octahedron():
    out, rep = springbornize(family("octahedron_koebe4", exact=True))
    assert congruent(out, family("octahedron_springborn"), 1e-8)
    assert rep.barycenter_norm <= 1e-12


def test_volume_invariant_after_centering(rng):
    base = family("dodecahedron")
    vols = []
    for _ in range(4):
        a = rng.normal(size=3)
        a *= 0.35 / np.linalg.norm(a)
        out, _ = springbornize(apply_lorentz(base, boost_to_origin(a)))
        vols.append(volume(out))
    assert max(vols) - min(vols) <= 1e-8


@pytest.mark.parametrize("name", ["tetrahedron", "octahedron_koebe4", "icosahedron"])
def test_round_trip(name, rng):
    reference, _ = springbornize(family(name))
    for _ in range(5):
        a = rng.normal(size=3)
        a *= 0.4 / np.linalg.norm(a)
        try:
            moved = apply_lorentz(family(name), boost_to_origin(a))
        except ValueError:
            continue
        out, rep = springbornize(moved)
        assert rep.barycenter_norm <= 1e-12
        assert congruent(out, reference, 1e-8)


def test_springbornize_rejects_non_koebe():
    r = family("cube_springborn").map(lambda v: v * 1.1)
    with pytest.raises(ValueError):
        springbornize(r)
