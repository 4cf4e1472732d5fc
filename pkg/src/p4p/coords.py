"""Invariant coordinates of a four-point problem.

Index 3 is the anchor. With cyclic indexing ``j = (i + 1) % 3`` and
``k = (i + 2) % 3`` for ``i`` in 0..2:

* ``a_i = |P_j - P_k|^2`` and ``c_i = |P_i - P_3|^2`` (rigid invariants of the
  3D quadruple),
* ``b_i = (L_i.L_i)(L_3.L_3) / (L_i.L_3)^2`` and
  ``d_i = (L_j.L_k)(L_3.L_3) / ((L_j.L_3)(L_k.L_3))`` (invariants of the four
  lines through the origin under rescaling and rotation).

All functions accept leading batch dimensions.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import OrthogonalToAnchor
from .geometry import lift

ANCHOR_EPS = 1e-12
_J = (1, 2, 0)
_K = (2, 0, 1)


@dataclass(frozen=True, eq=False)
class CoordVector:
    """The twelve invariants; each field has shape ``(..., 3)``."""

    a: np.ndarray
    b: np.ndarray
    c: np.ndarray
    d: np.ndarray

    @classmethod
    def from_array(cls, values) -> "CoordVector":
        """From ``(..., 12)`` values ordered a0..a2, b0..b2, c0..c2, d0..d2."""
        v = np.asarray(values)
        return cls(v[..., 0:3], v[..., 3:6], v[..., 6:9], v[..., 9:12])

    def as_array(self) -> np.ndarray:
        return np.concatenate([self.a, self.b, self.c, self.d], axis=-1)

    def columns(self) -> list:
        """The twelve values as separate (possibly batched) arguments."""
        arr = self.as_array()
        return [arr[..., i] for i in range(12)]

    def transposed(self, i: int, j: int) -> "CoordVector":
        """Swap indices ``i`` and ``j`` in every family at once."""
        perm = [0, 1, 2]
        perm[i], perm[j] = j, i
        return CoordVector(self.a[..., perm], self.b[..., perm], self.c[..., perm], self.d[..., perm])

    def __repr__(self) -> str:
        return f"CoordVector(a={self.a}, b={self.b}, c={self.c}, d={self.d})"


def squared_distance_coords(points) -> tuple[np.ndarray, np.ndarray]:
    """``(c, a)`` for a quadruple ``(..., 4, 3)`` of 3D points."""
    P = np.asarray(points)
    c = np.sum((P[..., :3, :] - P[..., 3:4, :]) ** 2, axis=-1)
    a = np.sum((P[..., _J, :] - P[..., _K, :]) ** 2, axis=-1)
    return c, a


def line_dots(lines) -> tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    """Raw ingredients of the line invariants.

    Returns ``(b, d, anchor_dots, ok)`` where ``anchor_dots[..., i] = L_i.L_3``
    and ``ok`` flags (per line) whether it is safely non-orthogonal to the
    anchor. ``b`` and ``d`` are NaN-free only where every ``ok`` holds.
    """
    L = np.asarray(lines)
    L3 = L[..., 3:4, :]
    n3 = np.sum(L3 * L3, axis=-1)  # (..., 1)
    sq = np.sum(L[..., :3, :] * L[..., :3, :], axis=-1)
    dots = np.sum(L[..., :3, :] * L3, axis=-1)
    ok = np.abs(dots) > ANCHOR_EPS * np.sqrt(sq * n3)
    safe = np.where(ok, dots, 1)
    b = sq * n3 / (safe * safe)
    cross = np.sum(L[..., _J, :] * L[..., _K, :], axis=-1)
    d = cross * n3 / (safe[..., _J] * safe[..., _K])
    return b, d, dots, ok


def canvas_dot_coords(points) -> tuple[np.ndarray, np.ndarray]:
    """``(b, d)`` for four canvas points ``(4, 2)`` or four line vectors ``(4, 3)``.

    Raises:
        OrthogonalToAnchor: if some line is orthogonal to line 3 (relative
            threshold 1e-12 of the product of norms).
    """
    p = np.asarray(points, dtype=float)
    lines = lift(p) if p.shape[-1] == 2 else p
    b, d, _, ok = line_dots(lines)
    if not np.all(ok):
        bad = np.argwhere(~ok.reshape(-1, 3))[0, 1]
        raise OrthogonalToAnchor(int(bad))
    return b, d


def coord_vector(world, canvas) -> CoordVector:
    """Full invariant vector of a four-point problem (world points, canvas points)."""
    c, a = squared_distance_coords(np.asarray(world, dtype=float))
    b, d = canvas_dot_coords(canvas)
    return CoordVector(a, b, c, d)


def planar_cayley_menger(b, d) -> float:
    """Cayley-Menger determinant of the canvas points written in (b, d).

    In the rotated frame ``|p_i - p_j|^2 = b_i + b_j - 2 d_k`` and
    ``|p_i - p_3|^2 = b_i - 1``; coplanar points make the determinant vanish.
    """
    b0, b1, b2 = (float(x) for x in b)
    d0, d1, d2 = (float(x) for x in d)
    e01 = b0 + b1 - 2 * d2
    e02 = b0 + b2 - 2 * d1
    e12 = b1 + b2 - 2 * d0
    M = np.array([
        [0.0, e01, e02, b0 - 1, 1],
        [e01, 0.0, e12, b1 - 1, 1],
        [e02, e12, 0.0, b2 - 1, 1],
        [b0 - 1, b1 - 1, b2 - 1, 0.0, 1],
        [1, 1, 1, 1, 0.0],
    ])
    return float(np.linalg.det(M))


def distance_matrix_from_coords(a, c) -> np.ndarray:
    """Symmetric 4x4 matrix of squared distances encoded by ``(a, c)``."""
    a0, a1, a2 = a
    c0, c1, c2 = c
    return np.array([
        [0.0, a2, a1, c0],
        [a2, 0.0, a0, c1],
        [a1, a0, 0.0, c2],
        [c0, c1, c2, 0.0],
    ], dtype=float)


def cayley_menger(D: np.ndarray) -> float:
    """Cayley-Menger determinant of a squared-distance matrix (bordered by ones)."""
    n = len(D)
    M = np.ones((n + 1, n + 1))
    M[:n, :n] = D
    M[n, n] = 0.0
    return float(np.linalg.det(M))


def realizability_check(a, c, rtol: float = 1e-9) -> bool:
    """Whether ``(a, c)`` are the squared distances of some real quadruple.

    Requires nonnegative values, every face satisfying the (non-strict)
    triangle inequality, and a nonnegative tetrahedral Cayley-Menger
    determinant, each up to a relative tolerance.
    """
    vals = np.concatenate([np.asarray(a, float), np.asarray(c, float)])
    if not np.all(np.isfinite(vals)) or np.any(vals < 0):
        return False
    scale = float(vals.max())
    if scale == 0.0:
        return True
    D = distance_matrix_from_coords(a, c)
    for face in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
        x, y, z = D[face[0], face[1]], D[face[0], face[2]], D[face[1], face[2]]
        # 16 * area^2 (Heron) = -det of the 3-point Cayley-Menger matrix
        heron = 2 * (x * y + y * z + z * x) - (x * x + y * y + z * z)
        if heron < -rtol * scale**2:
            return False
    # 288 * volume^2 for four points
    return cayley_menger(D) >= -rtol * scale**3
