"""Point of minimal distance sum and normalization to Springborn position.

For unit contact points tau_e (m of them) and x in the open unit ball the
horosphere distance sum is, up to an additive constant,

    f(x) = sum_e log(1 - tau_e . x) - (m/2) log(1 - |x|^2),

a function that is convex along hyperbolic geodesics (though not always in
the Euclidean sense) and whose gradient at 0 is -m times the edge
barycenter.  Its minimizer is moved to the origin by a hyperbolic
translation, which yields a Springborn realization.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field

import numpy as np

from .geometry import Realization
from .moebius import apply_lorentz, boost_to_origin
from .verify import contact_points, is_koebe

__all__ = [
    "CenteringError",
    "MaxIterations",
    "HemisphereDegeneracy",
    "CenteringReport",
    "distance_sum",
    "distance_sum_gradient",
    "distance_sum_hessian",
    "gradient_polynomials",
    "min_distance_point",
    "springbornize",
    "contact_array",
]

log = logging.getLogger(__name__)

BALL_MARGIN = 1e-12
FULL_STEP_DECREMENT = 1e-6


class CenteringError(RuntimeError):
    pass


class MaxIterations(CenteringError):
    pass


class HemisphereDegeneracy(CenteringError):
    """Iterates approach the sphere, so the minimum is not attained inside the ball.

    This happens when at least half of the contacts coincide.  Contact sets of
    convex polytopes never do; merely lying in a hemisphere is harmless.
    """


def _domain(contacts, x):
    contacts = np.asarray(contacts, dtype=float)
    x = np.asarray(x, dtype=float)
    s = 1 - contacts @ x
    b = 1 - x @ x
    if b <= 0 or np.sqrt(x @ x) >= 1 - BALL_MARGIN or np.any(s <= 0):
        raise ValueError(f"{x} is outside the domain of the distance sum")
    return contacts, x, s, b


def distance_sum(contacts, x) -> float:
    contacts, x, s, b = _domain(contacts, x)
    m = len(contacts)
    return float(np.sum(np.log(s)) - m / 2 * np.log(b))


def distance_sum_gradient(contacts, x) -> np.ndarray:
    contacts, x, s, b = _domain(contacts, x)
    m = len(contacts)
    return -(contacts / s[:, None]).sum(axis=0) + m * x / b


def distance_sum_hessian(contacts, x) -> np.ndarray:
    contacts, x, s, b = _domain(contacts, x)
    m = len(contacts)
    w = contacts / s[:, None]
    return -w.T @ w + m * (np.eye(3) / b + 2 * np.outer(x, x) / b**2)


def gradient_polynomials(contacts, x) -> np.ndarray:
    """The gradient with denominators cleared:

    p_k(x) = m x_k prod_e (1 - tau_e.x) - sum_e tau_ek (1 - |x|^2) prod_{f != e} (1 - tau_f.x).
    """
    contacts = np.asarray(contacts, dtype=float)
    x = np.asarray(x, dtype=float)
    m = len(contacts)
    s = 1 - contacts @ x
    b = 1 - x @ x
    full = np.prod(s)
    others = np.array([np.prod(np.delete(s, e)) for e in range(m)])
    return m * x * full - b * (contacts * others[:, None]).sum(axis=0)


@dataclass
class CenteringReport:
    iterations: int = 0
    gradient_norm: float = float("nan")
    barycenter_norm: float = float("nan")
    outer_iterations: int = 0
    # (iteration, objective, gradient norm, step length)
    history: list = field(default_factory=list)
    barycenter_history: list = field(default_factory=list)


def min_distance_point(
    contacts,
    grad_tol: float | None = None,
    max_iter: int = 100,
    report: CenteringReport | None = None,
) -> tuple[np.ndarray, CenteringReport]:
    """Damped Newton with Armijo backtracking, started at the origin.

    Directions of negative curvature (possible far from the minimum) are
    flipped, so every accepted step decreases the objective.

    Stops once the gradient norm is below ``grad_tol`` (default 1e-12 * m)
    or when no further decrease is possible at working precision.
    """
    contacts = np.asarray(contacts, dtype=float)
    m = len(contacts)
    grad_tol = 1e-12 * m if grad_tol is None else grad_tol
    report = report or CenteringReport()
    x = np.zeros(3)
    f = distance_sum(contacts, x)
    for it in range(max_iter):
        g = distance_sum_gradient(contacts, x)
        gn = float(np.linalg.norm(g))
        report.iterations = it
        report.gradient_norm = gn
        if gn <= grad_tol:
            return x, report
        # f is convex near a well-spread minimum but not on the whole ball, so
        # negative curvature is flipped to keep the step a descent direction
        w, V = np.linalg.eigh(distance_sum_hessian(contacts, x))
        positive = bool(w.min() > 0)
        w = np.maximum(np.abs(w), 1e-12 * max(1.0, np.abs(w).max()))
        step = -V @ ((V.T @ g) / w)
        decrement = -float(g @ step)
        y, fy, t = None, np.inf, 1.0
        if positive and decrement < FULL_STEP_DECREMENT:
            # inside the quadratic-convergence region; the rounding noise of f
            # (about m * 1e-16) would make the Armijo test reject good steps
            try:
                y = x + step
                fy = distance_sum(contacts, y)
            except ValueError:
                y = None
        if y is None:
            while True:
                y = x + t * step
                try:
                    fy = distance_sum(contacts, y)
                except ValueError:
                    fy = np.inf
                if fy <= f - 1e-4 * t * decrement:
                    break
                t /= 2
                if t < 1e-12:
                    if np.linalg.norm(x) > 1 - 1e-6:
                        raise HemisphereDegeneracy("minimizer escapes to the boundary of the ball")
                    raise MaxIterations(f"line search stalled at |grad| = {gn:.3e}")
        if np.linalg.norm(y) > 1 - 1e-9:
            raise HemisphereDegeneracy("minimizer escapes to the boundary of the ball")
        report.history.append((it, fy, gn, t))
        x, f = y, fy
    g = distance_sum_gradient(contacts, x)
    report.gradient_norm = float(np.linalg.norm(g))
    if report.gradient_norm <= grad_tol:
        return x, report
    raise MaxIterations(f"no convergence in {max_iter} Newton steps (|grad| = {report.gradient_norm:.3e})")


def contact_array(r: Realization, tol: float = 1e-8) -> np.ndarray:
    cps = contact_points(r.to_float(), tol)
    return np.array([p.to_array() for p in cps.values()])


def springbornize(
    r: Realization,
    tol: float = 1e-12,
    max_outer: int = 20,
    koebe_tol: float = 1e-8,
    max_iter: int = 100,
) -> tuple[Realization, CenteringReport]:
    """Move a Koebe realization to Springborn position.

    Repeats: locate the point of minimal distance sum, translate it to the
    origin, recompute the contact points, until the edge barycenter norm is
    at most ``tol``.  ``max_iter`` bounds the Newton steps of each search.
    """
    cur = r.to_float()
    if not is_koebe(cur, koebe_tol):
        raise ValueError("input is not a Koebe realization")
    report = CenteringReport()
    for outer in range(max_outer + 1):
        contacts = contact_array(cur, koebe_tol)
        beta = float(np.linalg.norm(contacts.mean(axis=0)))
        report.barycenter_norm = beta
        report.barycenter_history.append(beta)
        report.outer_iterations = outer
        if beta <= tol:
            return cur, report
        if outer == max_outer:
            break
        a, _ = min_distance_point(contacts, max_iter=max_iter, report=report)
        log.debug("outer %d: |beta| = %.3e, |a| = %.3e", outer, beta, np.linalg.norm(a))
        cur = apply_lorentz(cur, boost_to_origin(a), koebe_tol)
    raise MaxIterations(
        f"edge barycenter {report.barycenter_norm:.3e} above {tol:.1e} after {max_outer} boosts"
    )
