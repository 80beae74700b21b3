"""Degree predictions for bipyramids and reference cross-ratio values."""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction

__all__ = [
    "DegreePrediction",
    "totient",
    "springborn_degree_prediction",
    "koebe_lower_bound",
    "bipyramid_alpha",
    "bipyramid_alpha_from_roots",
    "degree_report",
]


def totient(k: int) -> int:
    """Euler's phi, by trial-division factorization."""
    if k < 1:
        raise ValueError(f"totient needs k >= 1, got {k}")
    result, n, p = k, k, 2
    while p * p <= n:
        if n % p == 0:
            while n % p == 0:
                n //= p
            result -= result // p
        p += 1
    if n > 1:
        result -= result // n
    return result


@dataclass(frozen=True)
class DegreePrediction:
    k: int
    springborn_candidates: tuple[int, ...]
    koebe_lower: int

    @property
    def springborn(self) -> int | None:
        """The Springborn degree when it is determined (even k), else None."""
        if len(self.springborn_candidates) == 1:
            return self.springborn_candidates[0]
        return None


def _check_k(k: int) -> None:
    if k < 4:
        raise ValueError(f"degree bounds are stated for k >= 4, got {k}")


def springborn_degree_prediction(k: int) -> DegreePrediction:
    _check_k(k)
    phi = totient(k)
    cands = (phi,) if k % 2 == 0 else (phi // 2, phi)
    return DegreePrediction(k, cands, koebe_lower_bound(k))


def koebe_lower_bound(k: int) -> int:
    """ceil(phi(k) / 4)."""
    _check_k(k)
    return -(-totient(k) // 4)


def bipyramid_alpha(k: int):
    """Cross ratio of four consecutive equatorial contact points of B_k.

    Equal to (2 + 2 cos t) / (1 + 2 cos t) with t = 2 pi / k; exact for k = 4, 6.
    """
    _check_k(k)
    if k == 4:
        return Fraction(2)
    if k == 6:
        return Fraction(3, 2)
    c = math.cos(2 * math.pi / k)
    return (2 + 2 * c) / (1 + 2 * c)


def bipyramid_alpha_from_roots(k: int) -> complex:
    """(z^2 - 1)^2 / ((z - 1)(z^3 - 1)) at z = exp(2 pi i / k)."""
    z = cmath.exp(2j * math.pi / k)
    return (z * z - 1) ** 2 / ((z - 1) * (z**3 - 1))


def degree_report(k: int) -> dict:
    pred = springborn_degree_prediction(k)
    alpha = bipyramid_alpha(k)
    return {
        "k": k,
        "totient": totient(k),
        "springborn_degree": pred.springborn,
        "springborn_candidates": list(pred.springborn_candidates),
        "koebe_lower_bound": pred.koebe_lower,
        "cross_ratio_alpha": float(alpha),
        "cross_ratio_alpha_exact": str(alpha) if isinstance(alpha, Fraction) else None,
        "cos_pi_over_k_degree": totient(2 * k) // 2,
    }
