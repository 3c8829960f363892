"""Homogeneous geometric transformation matrices.

All transforms operate in homogeneous coordinates: an n-dimensional dataset
is manipulated with (n+1)x(n+1) matrices so that rotation, reflection and
translation compose by plain matrix multiplication.  The n-dimensional
rotation is the product of one Givens rotation per coordinate plane, all
sharing a single angle, which keeps the search space one-dimensional in the
angle while still mixing every pair of attributes.
"""

from __future__ import annotations

import numpy as np

from .errors import DataShapeError, ParameterError


def plane_pairs(n: int) -> list[tuple[int, int]]:
    """All n(n-1)/2 rotation plane index pairs (i, j), i < j, 0-based,
    in lexicographic order."""
    if n < 2:
        raise ParameterError(f"dimension must be >= 2, got {n}")
    return [(i, j) for i in range(n) for j in range(i + 1, n)]


def rotation_block(n: int, theta_deg: float) -> np.ndarray:
    """n x n rotation: the ordered product of per-plane Givens rotations.

    For each plane pair (i, j) the Givens factor G has
    G[i,i] = G[j,j] = cos(theta), G[j,i] = sin(theta), G[i,j] = -sin(theta).
    The accumulated matrix is M = G_(1,2) G_(1,3) ... G_(n-1,n), earlier
    pairs leftmost.  Right-multiplying by G only touches columns i and j,
    so the product is built with O(n) work per pair instead of a full
    matrix multiply.
    """
    pairs = plane_pairs(n)
    c = np.cos(np.deg2rad(theta_deg))
    s = np.sin(np.deg2rad(theta_deg))
    m = np.eye(n)
    for i, j in pairs:
        col_i = m[:, i].copy()
        col_j = m[:, j].copy()
        m[:, i] = c * col_i + s * col_j
        m[:, j] = -s * col_i + c * col_j
    return m


def make_rotation_matrix(n: int, theta_deg: float) -> np.ndarray:
    """(n+1)x(n+1) homogeneous rotation about all coordinate planes.

    The n x n block from :func:`rotation_block` is embedded top-left; the
    homogeneous row/column stay those of the identity.  The result is
    orthogonal with determinant +1 (an even number of planes never flips
    orientation; each Givens factor has determinant +1).
    """
    h = np.eye(n + 1)
    h[:n, :n] = rotation_block(n, theta_deg)
    return h


def make_reflection_matrix(n: int, axis: int) -> np.ndarray:
    """(n+1)x(n+1) homogeneous reflection negating the single 1-based axis.

    Identity except for a -1 at (axis, axis).  Involutory: RF @ RF = I.
    """
    if n < 2:
        raise ParameterError(f"dimension must be >= 2, got {n}")
    if not 1 <= axis <= n:
        raise ParameterError(f"reflection axis must be in 1..{n}, got {axis}")
    h = np.eye(n + 1)
    h[axis - 1, axis - 1] = -1.0
    return h


def make_translation_matrix(n: int, rng: np.random.Generator) -> np.ndarray:
    """(n+1)x(n+1) homogeneous translation with i.i.d. uniform offsets.

    The last column above the homogeneous 1 holds n draws from the open
    interval (0, 1).  numpy samples [0, 1), so exact zeros (measure zero,
    but contractually excluded) are redrawn.
    """
    if n < 2:
        raise ParameterError(f"dimension must be >= 2, got {n}")
    t = rng.uniform(0.0, 1.0, n)
    while np.any(t == 0.0):  # pragma: no cover - probability ~0
        redo = t == 0.0
        t[redo] = rng.uniform(0.0, 1.0, int(redo.sum()))
    h = np.eye(n + 1)
    h[:n, n] = t
    return h


def apply_composite(
    rotation: np.ndarray,
    translation: np.ndarray,
    reflection: np.ndarray,
    data: np.ndarray,
) -> np.ndarray:
    """Apply the composite transform (rotation @ translation @ reflection)
    to every row of an m x n matrix.

    Rows are treated as homogeneous column vectors: reflection first, then
    translation, then rotation.  The homogeneous coordinate is folded
    analytically — with K = R @ T @ RF the transformed rows are
    data @ K[:n,:n].T + K[:n,n], identical to augmenting each row with 1.
    """
    data = np.asarray(data, dtype=float)
    if data.ndim != 2:
        raise DataShapeError(f"data must be 2-D, got ndim={data.ndim}")
    n = data.shape[1]
    for name, mat in (("rotation", rotation), ("translation", translation),
                      ("reflection", reflection)):
        if mat.shape != (n + 1, n + 1):
            raise DataShapeError(
                f"{name} matrix must be {(n + 1, n + 1)} for {n}-column data, "
                f"got {mat.shape}"
            )
    k = rotation @ translation @ reflection
    return data @ k[:n, :n].T + k[:n, n]
