
import pytest

from koebe.families import (
    FAMILY_NAMES,
    FamilyError,
    bipyramid_combinatorics,
    bipyramid_realization,
    bipyramid_volume,
    family,
    octahedron_koebe4_parameters,
)
from koebe.geometry import dual_combinatorics, polar, volume
from koebe.scalars import sqrt_of
from koebe.verify import contact_points, convexity_check, is_koebe, is_springborn

PLATONIC = [n for n in FAMILY_NAMES if n != "bipyramid"]


@pytest.mark.parametrize("name", PLATONIC)
@pytest.mark.parametrize("exact", [False, True])
def test_family_is_koebe_and_convex(name, exact):
    r = family(name, exact=exact)
    assert is_koebe(r, 1e-10)
    assert convexity_check(r)
    assert r.is_exact == exact


def test_counts():
    counts = {name: (family(name).combinatorics.n_vertices, family(name).combinatorics.n_facets) for name in PLATONIC}
    assert counts == {
        "tetrahedron": (4, 4),
        "octahedron_springborn": (6, 8),
        "octahedron_koebe4": (6, 8),
        "cube_springborn": (8, 6),
        "dodecahedron": (20, 12),
        "icosahedron": (12, 20),
    }


def test_octahedron_volume_exact():
    assert volume(family("octahedron_springborn", exact=True)) == 8 * sqrt_of(2) / 3


def test_koebe4_three_rational_contacts():
    cps = contact_points(family("octahedron_koebe4", exact=True))
    got = {e: tuple(cps[e]) for e in [(0, 1), (0, 2), (1, 2)]}
    assert got == {(0, 1): (0, 0, 1), (0, 2): (0, 1, 0), (1, 2): (1, 0, 0)}
    rational = [e for e, p in cps.items() if all(s.b == 0 for s in p)]
    assert sorted(rational) == [(0, 1), (0, 2), (1, 2)]


def test_koebe4_parameters_agree():
    xf, yf = octahedron_koebe4_parameters(exact=False)
    xe, ye = octahedron_koebe4_parameters(exact=True)
    assert float(xe) == pytest.approx(xf, rel=1e-15)
    assert float(ye) == pytest.approx(yf, rel=1e-15)


@pytest.mark.parametrize("k", range(3, 41))
def test_bipyramid_springborn_and_volume(k):
    r = bipyramid_realization(k)
    assert is_springborn(r, 1e-9)
    assert convexity_check(r)
    assert volume(r) == pytest.approx(bipyramid_volume(k), rel=1e-9)


@pytest.mark.parametrize("k", [3, 4, 6])
def test_exact_bipyramids(k):
    r = family("bipyramid", k=k, exact=True)
    assert is_springborn(r).passed
    assert volume(r) == bipyramid_volume(k, exact=True)


def test_bipyramid_combinatorics_shape():
    c = bipyramid_combinatorics(6)
    assert (c.n_vertices, c.n_facets) == (8, 12)
    with pytest.raises(FamilyError):
        bipyramid_combinatorics(2)


def test_family_errors():
    with pytest.raises(FamilyError):
        family("bipyramid")
    with pytest.raises(FamilyError):
        family("bipyramid", k=5, exact=True)
    with pytest.raises(FamilyError):
        family("prism")


@pytest.mark.parametrize("name", PLATONIC + ["bipyramid"])
def test_polar_is_koebe_with_dual_combinatorics(name):
    for exact in ([False, True] if name != "bipyramid" else [False]):
        r = family(name, k=7, exact=exact) if name == "bipyramid" else family(name, exact=exact)
        p = polar(r)
        assert p.combinatorics == dual_combinatorics(r.combinatorics)
        rep = is_koebe(p, 1e-9)
        assert rep.passed
        if exact:
            assert rep.exact_zero
