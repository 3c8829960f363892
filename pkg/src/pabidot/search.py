"""Privacy-guarantee grid search over rotation angle and reflection axis.

The privacy model scores a candidate transform by the *minimum privacy
guarantee*: the smallest per-attribute variance of the difference between the
normalized input and its transformed image.  A small value means some
attribute barely moved, so an adversary's naive estimate (the perturbed value
itself) would be close to the truth for that attribute.

The search evaluates every (angle, axis) pair on a fixed grid of integer
degrees.  Multiples of 30 and 45 degrees are excluded: their sine/cosine
values are "nice" constants that make the rotation easier to guess, so the
grid is the 172 integer angles in 1..179 minus {30,45,60,90,120,135,150}.

For z-scored data the guarantee can be computed from the covariance matrix
alone: with W the n x n linear part (rotation times reflection) and C the
covariance of the normalized data,

    Var(x_j - p_j) = 1 + Var(p_j) - 2 Cov(x_j, p_j)
    Var(p_j)       = (W C W^T)[j, j]
    Cov(x_j, p_j)  = sum_k W[j, k] C[j, k]

so each grid cell costs two small matrix products instead of a full data
transform.  Translation offsets shift every value by a constant and cancel
out of the variance, which is why they do not appear.  The data-level and
covariance-level routes agree to machine precision because sample statistics
(ddof=1) are used throughout.

The selected parameters are the max-min cell: for each angle take the
minimum guarantee across axes, then pick the angle maximizing that minimum.
Ties resolve to the smallest angle, then the smallest axis.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DataShapeError, ParameterError
from .transforms import (
    apply_composite,
    make_reflection_matrix,
    make_rotation_matrix,
    rotation_block,
)

#: Angles whose sine/cosine are well-known closed forms; never searched.
EXCLUDED_DEGREES = frozenset({30, 45, 60, 90, 120, 135, 150})


def angle_grid() -> np.ndarray:
    """The 172 candidate integer angles: 1..179 degrees minus the exclusions."""
    return np.array([d for d in range(1, 180) if d not in EXCLUDED_DEGREES])


@dataclass(frozen=True)
class PrivacyGrid:
    """Full grid-search result.

    Attributes:
        angles: searched angles in degrees, shape (len(angles),).
        phi: guarantee per (angle, axis) cell, shape (len(angles), n).
        per_angle_min: minimum of each phi row (the worst axis per angle).
        phi_optimal: max over angles of per_angle_min (the selected guarantee).
        theta_optimal: angle (degrees) of the selected cell.
        rif_optimal: 1-based reflection axis of the selected cell.
    """

    angles: np.ndarray
    phi: np.ndarray
    per_angle_min: np.ndarray
    phi_optimal: float
    theta_optimal: int
    rif_optimal: int


def guarantee_bruteforce(
    normalized: np.ndarray,
    theta_deg: float,
    axis: int,
    translation: np.ndarray,
) -> float:
    """Guarantee by actually transforming the data.

    Builds the composite transform for (theta_deg, axis) with the given
    homogeneous translation matrix, applies it to the normalized data, and
    returns the minimum over columns of the sample variance of
    (normalized - transformed).  Reference implementation: O(m n^2) per
    call, used to validate the covariance route.
    """
    normalized = np.asarray(normalized, dtype=float)
    if normalized.ndim != 2 or normalized.shape[0] < 2:
        raise DataShapeError(f"normalized data must be 2-D with >= 2 rows, got {normalized.shape}")
    n = normalized.shape[1]
    rot = make_rotation_matrix(n, theta_deg)
    ref = make_reflection_matrix(n, axis)
    transformed = apply_composite(rot, translation, ref, normalized)
    diff = normalized - transformed
    return float(diff.var(axis=0, ddof=1).min())


def _check_covariance(cov: np.ndarray) -> np.ndarray:
    cov = np.asarray(cov, dtype=float)
    if cov.ndim != 2 or cov.shape[0] != cov.shape[1]:
        raise DataShapeError(f"covariance must be square, got {cov.shape}")
    if cov.shape[0] < 2:
        raise DataShapeError(f"covariance must be at least 2x2, got {cov.shape}")
    if np.max(np.abs(np.diag(cov) - 1.0)) > 1e-6:
        raise ParameterError(
            "covariance diagonal must be 1 (z-scored data, sample variance)"
        )
    return cov


def guarantee_from_covariance(cov: np.ndarray, theta_deg: float, axis: int) -> float:
    """Guarantee for (theta_deg, axis) from the covariance matrix alone.

    `cov` must be the sample covariance of z-scored data (unit diagonal
    within 1e-6).  Returns min_j of 1 + Var(p_j) - 2 Cov(x_j, p_j); see the
    module docstring for the identities used.
    """
    cov = _check_covariance(cov)
    n = cov.shape[0]
    if not 1 <= axis <= n:
        raise ParameterError(f"reflection axis must be in 1..{n}, got {axis}")
    rot = rotation_block(n, theta_deg)
    # Reflection as a sign vector: RF C RF flips row and column `axis`.
    signs = np.ones(n)
    signs[axis - 1] = -1.0
    reflected = cov * np.outer(signs, signs)
    var_p = ((rot @ reflected) * rot).sum(axis=1)        # diag(W C W^T)
    cov_xp = ((cov * signs) * rot).sum(axis=1)           # row sums of (C RF) o RT
    return float((1.0 + var_p - 2.0 * cov_xp).min())


def search_optimal(cov: np.ndarray, angles: np.ndarray | None = None) -> PrivacyGrid:
    """Exhaustive (angle, axis) search on the covariance of z-scored data.

    Pure function of `cov`: no randomness, bit-for-bit repeatable.  The
    rotation for each angle is built once and shared across all axes.
    """
    cov = _check_covariance(cov)
    n = cov.shape[0]
    if angles is None:
        angles = angle_grid()
    angles = np.asarray(angles)
    if angles.size == 0:
        raise ParameterError("angle grid must not be empty")

    phi = np.empty((angles.size, n))
    sign_rows = np.ones((n, n)) - 2.0 * np.eye(n)  # row ax = signs vector for axis ax+1
    for i, theta in enumerate(angles):
        rot = rotation_block(n, float(theta))
        for ax in range(n):
            signs = sign_rows[ax]
            reflected = cov * np.outer(signs, signs)
            var_p = ((rot @ reflected) * rot).sum(axis=1)
            cov_xp = ((cov * signs) * rot).sum(axis=1)
            phi[i, ax] = (1.0 + var_p - 2.0 * cov_xp).min()

    per_angle_min = phi.min(axis=1)
    best_angle = int(np.argmax(per_angle_min))           # first max -> smallest angle
    best_axis = int(np.argmin(phi[best_angle]))          # first min -> smallest axis
    return PrivacyGrid(
        angles=angles,
        phi=phi,
        per_angle_min=per_angle_min,
        phi_optimal=float(per_angle_min[best_angle]),
        theta_optimal=int(angles[best_angle]),
        rif_optimal=best_axis + 1,
    )
