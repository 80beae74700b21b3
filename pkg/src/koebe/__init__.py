"""Exact and numerical edge-tangent (Koebe) realizations of 3-polytopes."""

from .centering import min_distance_point, springbornize
from .exact_stack import StackingProgram, build_stacked, random_program, small_simplex_apex, stack
from .families import FAMILY_NAMES, family
from .geometry import Combinatorics, Realization, Vec3, congruent, dual_combinatorics, polar, volume
from .invariants import bipyramid_alpha, koebe_lower_bound, springborn_degree_prediction, totient
from .moebius import apply_lorentz, boost_to_origin, contact_cross_ratio, cross_ratio, lorentz_from_moebius
from .scalars import QuadraticNumber, sqrt_of
from .verify import contact_points, convexity_check, edge_barycenter, is_koebe, is_springborn

__all__ = [
    "Combinatorics",
    "Realization",
    "Vec3",
    "QuadraticNumber",
    "sqrt_of",
    "StackingProgram",
    "FAMILY_NAMES",
    "apply_lorentz",
    "bipyramid_alpha",
    "boost_to_origin",
    "build_stacked",
    "congruent",
    "contact_cross_ratio",
    "contact_points",
    "convexity_check",
    "cross_ratio",
    "dual_combinatorics",
    "edge_barycenter",
    "family",
    "is_koebe",
    "is_springborn",
    "koebe_lower_bound",
    "lorentz_from_moebius",
    "min_distance_point",
    "polar",
    "random_program",
    "small_simplex_apex",
    "springborn_degree_prediction",
    "springbornize",
    "stack",
    "totient",
    "volume",
]
