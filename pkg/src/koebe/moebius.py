"""Lorentz and Moebius actions on the unit sphere and on Koebe realizations.

Minkowski 4-space carries q(x) = x0^2 - x1^2 - x2^2 - x3^2.  The unit sphere
is the set of null directions, dehomogenized at x0 = 1.  A point (z, w) of
the complex projective line maps to the sphere by

    sigma(z, w) = (|z|^2 + |w|^2, |z|^2 - |w|^2, z w* + w z*, -i (z w* - w z*)),

whose Hermitian matrix [[x0 + x1, x2 + i x3], [x2 - i x3, x0 - x1]] equals
2 v v^* for v = (z, w).  So SL2(C) acts linearly through X -> A X A^*, and
sigma(A v) = L(A) sigma(v) exactly.  Note that sigma sends infinity = (1, 0)
to the sphere point (1, 0, 0).
"""

from __future__ import annotations

from typing import NamedTuple, Sequence

import numpy as np

from .geometry import Realization
from .verify import contact_points, convexity_check, is_koebe

__all__ = [
    "MINKOWSKI",
    "AdmissibilityError",
    "ProjectivePoint",
    "projective_point",
    "INFINITY",
    "minkowski_q",
    "dehomogenize",
    "stereographic",
    "inverse_stereographic",
    "hermitian_of",
    "minkowski_of",
    "moebius_matrix",
    "moebius_apply",
    "lorentz_from_moebius",
    "is_lorentz",
    "lorentz_inverse",
    "rotation_lorentz",
    "boost_to_origin",
    "cross_ratio",
    "contact_cross_ratio",
    "apply_lorentz",
]

MINKOWSKI = np.diag([1.0, -1.0, -1.0, -1.0])


class AdmissibilityError(ValueError):
    """The transformation sends part of the realization through the far hyperplane."""


class ProjectivePoint(NamedTuple):
    z: complex
    w: complex


def projective_point(z, w=1.0) -> ProjectivePoint:
    """Normalized representative with max(|z|, |w|) = 1."""
    z, w = complex(z), complex(w)
    s = max(abs(z), abs(w))
    if s == 0:
        raise ValueError("(0, 0) is not a projective point")
    return ProjectivePoint(z / s, w / s)


INFINITY = ProjectivePoint(1 + 0j, 0j)


def minkowski_q(x) -> float:
    x = np.asarray(x)
    return x[..., 0] ** 2 - x[..., 1] ** 2 - x[..., 2] ** 2 - x[..., 3] ** 2


def dehomogenize(x) -> np.ndarray:
    x = np.asarray(x, dtype=float)
    return x[..., 1:] / x[..., :1]


def stereographic(p: ProjectivePoint) -> np.ndarray:
    z, w = p
    zz, ww, zw = (z * z.conjugate()).real, (w * w.conjugate()).real, z * w.conjugate()
    return np.array([zz + ww, zz - ww, 2 * zw.real, 2 * zw.imag])


def inverse_stereographic(s) -> ProjectivePoint:
    """Preimage of a unit vector under sigma, using the better-conditioned chart."""
    s1, s2, s3 = (float(t) for t in s)
    if abs(s1 * s1 + s2 * s2 + s3 * s3 - 1) > 1e-10:
        raise ValueError(f"{(s1, s2, s3)} is not on the unit sphere")
    if s1 >= 0:
        return projective_point(1 + s1, complex(s2, -s3))
    return projective_point(complex(s2, s3), 1 - s1)


def hermitian_of(x) -> np.ndarray:
    x0, x1, x2, x3 = (float(t) for t in x)
    return np.array([[x0 + x1, complex(x2, x3)], [complex(x2, -x3), x0 - x1]])


def minkowski_of(X) -> np.ndarray:
    """Inverse of :func:`hermitian_of`."""
    X = np.asarray(X)
    return np.array(
        [(X[0, 0].real + X[1, 1].real) / 2, (X[0, 0].real - X[1, 1].real) / 2, X[0, 1].real, X[0, 1].imag]
    )


def moebius_matrix(a, b, c, d) -> np.ndarray:
    """2x2 complex matrix scaled to determinant 1."""
    A = np.array([[a, b], [c, d]], dtype=complex)
    det = A[0, 0] * A[1, 1] - A[0, 1] * A[1, 0]
    if abs(det) < 1e-300:
        raise ValueError("singular Moebius matrix")
    return A / np.sqrt(det)


def moebius_apply(A, p: ProjectivePoint) -> ProjectivePoint:
    v = np.asarray(A) @ np.array([p.z, p.w])
    return projective_point(v[0], v[1])


_HERMITIAN_BASIS = [hermitian_of(e) for e in np.eye(4)]


def lorentz_from_moebius(A) -> np.ndarray:
    """The 4x4 matrix of X -> A X A^* in the basis of :func:`hermitian_of`."""
    A = np.asarray(A, dtype=complex)
    Ah = A.conj().T
    return np.column_stack([minkowski_of(A @ E @ Ah) for E in _HERMITIAN_BASIS])


def is_lorentz(M, tol: float = 1e-10) -> bool:
    """M^T J M = J and M00 > 0."""
    M = np.asarray(M, dtype=float)
    return bool(np.max(np.abs(M.T @ MINKOWSKI @ M - MINKOWSKI)) <= tol and M[0, 0] > 0)


def lorentz_inverse(M) -> np.ndarray:
    return MINKOWSKI @ np.asarray(M, dtype=float).T @ MINKOWSKI


def rotation_lorentz(R) -> np.ndarray:
    """Embed an orthogonal 3x3 matrix acting on the spatial coordinates."""
    M = np.eye(4)
    M[1:, 1:] = R
    return M


def boost_to_origin(a) -> np.ndarray:
    """Hyperbolic translation sending the ball point ``a`` to the origin."""
    a = np.asarray(a, dtype=float)
    n2 = float(a @ a)
    if n2 >= (1 - 1e-12) ** 2:
        raise ValueError(f"point {a} is not inside the unit ball")
    M = np.eye(4)
    if n2 == 0:
        return M
    g = 1 / np.sqrt(1 - n2)
    M[0, 0] = g
    M[0, 1:] = -g * a
    M[1:, 0] = -g * a
    M[1:, 1:] = np.eye(3) + (g - 1) * np.outer(a, a) / n2
    return M


def _bracket(p: ProjectivePoint, q: ProjectivePoint) -> complex:
    return p.z * q.w - p.w * q.z


def cross_ratio(a, b, c, d) -> complex:
    """(a, b; c, d) = (c - a)(d - b) / ((c - b)(d - a)), in homogeneous form.

    Arguments may be complex numbers or :class:`ProjectivePoint`.
    """
    pts = [p if isinstance(p, ProjectivePoint) else projective_point(p) for p in (a, b, c, d)]
    pts = [projective_point(*p) for p in pts]
    a, b, c, d = pts
    ca, db, cb, da = _bracket(c, a), _bracket(d, b), _bracket(c, b), _bracket(d, a)
    for x, y in [(a, b), (a, c), (a, d), (b, c), (b, d), (c, d)]:
        if abs(_bracket(x, y)) < 1e-14:
            raise ValueError("cross ratio of coincident points")
    return ca * db / (cb * da)


def contact_cross_ratio(r: Realization, edges: Sequence[tuple[int, int]], tol: float = 1e-9) -> complex:
    """Cross ratio of the contact points of four edges, given as vertex pairs."""
    keys = [tuple(sorted(e)) for e in edges]
    if len(keys) != 4 or len(set(keys)) != 4:
        raise ValueError("need four distinct edges")
    cps = contact_points(r.to_float(), tol)
    missing = [e for e in keys if e not in cps]
    if missing:
        raise ValueError(f"not edges: {missing}")
    pts = [inverse_stereographic(cps[e].to_array() / np.linalg.norm(cps[e].to_array())) for e in keys]
    return cross_ratio(*pts)


def apply_lorentz(
    r: Realization,
    T,
    tol: float = 1e-8,
    max_condition: float = 1e12,
) -> Realization:
    """Image of a Koebe realization under a Lorentz transformation.

    Contact points are mapped projectively and each vertex is recovered as
    the common point of the tangent planes ``p . x = 1`` at its incident
    contact points (least squares).  The result is a float realization.
    """
    T = np.asarray(T, dtype=float)
    rf = r.to_float()
    if not is_koebe(rf, tol):
        raise ValueError("input is not a Koebe realization")
    verts = rf.to_array()
    hv = np.column_stack([np.ones(len(verts)), verts]) @ T.T
    scale = np.abs(hv).max()
    if np.any(hv[:, 0] <= 1e-12 * scale):
        raise AdmissibilityError("a vertex is sent to or beyond the far hyperplane")
    cps = contact_points(rf, tol)
    edges = list(cps)
    tau = np.array([cps[e].to_array() for e in edges])
    ht = np.column_stack([np.ones(len(tau)), tau]) @ T.T
    if np.any(ht[:, 0] <= 1e-12):
        raise AdmissibilityError("a contact point is sent to the far hyperplane")
    new_tau = ht[:, 1:] / ht[:, :1]
    new_tau /= np.linalg.norm(new_tau, axis=1, keepdims=True)
    incident = [[] for _ in range(len(verts))]
    for k, (i, j) in enumerate(edges):
        incident[i].append(k)
        incident[j].append(k)
    out = np.empty_like(verts)
    for v, ks in enumerate(incident):
        P = new_tau[ks]
        if np.linalg.cond(P) > max_condition:
            raise AdmissibilityError(f"tangent planes at vertex {v} are nearly parallel")
        x, *_ = np.linalg.lstsq(P, np.ones(len(ks)), rcond=None)
        if np.max(np.abs(P @ x - 1)) > tol * max(1.0, float(np.abs(x).max())):
            raise AdmissibilityError(f"tangent planes at vertex {v} do not meet in a point")
        out[v] = x
    result = Realization.from_array(r.combinatorics, out)
    if not is_koebe(result, tol):
        raise AdmissibilityError("image is not edge-tangent within tolerance")
    if not convexity_check(result):
        raise AdmissibilityError("image is not convex with the original combinatorics")
    return result
