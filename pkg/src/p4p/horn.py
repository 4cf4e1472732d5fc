"""Closed-form absolute orientation with unit quaternions (Horn, 1987).

Finds the rotation and translation minimizing ``sum |R s_i + t - t_i|^2``.
Scale is not estimated: the perspective problem is metric.
"""

from __future__ import annotations

import numpy as np

from .errors import DegenerateAlignment
from .geometry import Pose, apply_pose, quat_to_matrix

COLLINEAR_RTOL = 1e-9


def _profile_matrix(M: np.ndarray) -> np.ndarray:
    """Horn's symmetric 4x4 matrix from the cross-covariance ``M = sum s t^T``."""
    Sxx, Sxy, Sxz = M[..., 0, 0], M[..., 0, 1], M[..., 0, 2]
    Syx, Syy, Syz = M[..., 1, 0], M[..., 1, 1], M[..., 1, 2]
    Szx, Szy, Szz = M[..., 2, 0], M[..., 2, 1], M[..., 2, 2]
    rows = [
        [Sxx + Syy + Szz, Syz - Szy, Szx - Sxz, Sxy - Syx],
        [Syz - Szy, Sxx - Syy - Szz, Sxy + Syx, Szx + Sxz],
        [Szx - Sxz, Sxy + Syx, -Sxx + Syy - Szz, Syz + Szy],
        [Sxy - Syx, Szx + Sxz, Syz + Szy, -Sxx - Syy + Szz],
    ]
    return np.stack([np.stack(r, axis=-1) for r in rows], axis=-2)


def horn_align(source, target) -> tuple[Pose, float]:
    """Rigid pose mapping ``source`` onto ``target`` in the least-squares sense.

    Args:
        source: points (n, 3), n >= 3.
        target: matched points (n, 3).

    Returns:
        ``(pose, rms)`` where ``rms`` is the root-mean-square residual distance.

    Raises:
        DegenerateAlignment: if the source points are coincident or collinear.
    """
    S = np.asarray(source, dtype=float)
    T = np.asarray(target, dtype=float)
    if S.shape != T.shape or S.ndim != 2 or S.shape[1] != 3:
        raise ValueError(f"mismatched point sets {S.shape} and {T.shape}")
    if len(S) < 3:
        raise ValueError("at least three point pairs are required")
    s_bar, t_bar = S.mean(axis=0), T.mean(axis=0)
    Sc, Tc = S - s_bar, T - t_bar
    sv = np.linalg.svd(Sc, compute_uv=False)
    if sv[0] == 0.0 or sv[1] <= COLLINEAR_RTOL * sv[0]:
        raise DegenerateAlignment("source points are coincident or collinear")
    _, vecs = np.linalg.eigh(_profile_matrix(Sc.T @ Tc))
    q = vecs[:, -1]  # eigh sorts eigenvalues ascending
    R = quat_to_matrix(q)
    pose = Pose(q, t_bar - R @ s_bar)
    rms = float(np.sqrt(np.mean(np.sum((apply_pose(pose, S) - T) ** 2, axis=-1))))
    return pose, rms


def horn_align_batch(source, target) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Stacked :func:`horn_align` without degeneracy checks.

    Args:
        source, target: shape (N, n, 3).

    Returns:
        ``(quaternions (N, 4), translations (N, 3), rms (N,))``. Rows with
        non-finite input come back as NaN.
    """
    S = np.asarray(source, dtype=float)
    T = np.asarray(target, dtype=float)
    finite = np.all(np.isfinite(S), axis=(1, 2)) & np.all(np.isfinite(T), axis=(1, 2))
    S = np.where(finite[:, None, None], S, 0.0)
    T = np.where(finite[:, None, None], T, 0.0)
    s_bar = S.mean(axis=1, keepdims=True)
    t_bar = T.mean(axis=1, keepdims=True)
    Sc, Tc = S - s_bar, T - t_bar
    M = np.einsum("nki,nkj->nij", Sc, Tc)
    _, vecs = np.linalg.eigh(_profile_matrix(M))
    q = vecs[..., -1]
    q = np.where(q[:, :1] < 0, -q, q)
    R = quat_to_matrix(q)
    t = t_bar[:, 0] - np.einsum("nij,nj->ni", R, s_bar[:, 0])
    moved = np.einsum("nij,nkj->nki", R, S) + t[:, None, :]
    rms = np.sqrt(np.mean(np.sum((moved - T) ** 2, axis=-1), axis=-1))
    q[~finite] = np.nan
    t[~finite] = np.nan
    rms[~finite] = np.nan
    return q, t, rms
