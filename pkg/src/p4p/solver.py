"""Closed-form four-point solver: invariant coordinates to depths along the rays.

The solver never computes a pose. It returns, for each canvas point, the
depth ``z_orig`` such that the points ``z_orig_i * (u_i, v_i, 1)`` are a rigid
image of the given 3D points, together with the incidence residual that
measures how well that is possible. Turning depths into a pose is the job of
:mod:`p4p.horn`.

Two paths are provided. :func:`solve_p4p` handles one problem and branches
freely; :func:`solve_p4p_batch` runs many problems in lockstep on arrays,
keeping branches out of the arithmetic.
"""

from __future__ import annotations

import enum
import itertools
from dataclasses import dataclass

import numpy as np

from .coords import CoordVector, line_dots, squared_distance_coords
from .errors import DegenerateInput, NoCandidates, NoRealRoots, OrthogonalToAnchor, P4PError
from .geometry import lift
from .quadratics import eval_all_X, solve_row, solve_rows

ALPHA_RTOL = 1e-9
DEGENERATE_RTOL = 1e-20
_J = (1, 2, 0)
_K = (2, 0, 1)


@dataclass(frozen=True, eq=False)
class DepthQuadruple:
    """Depths in the rotated frame (anchor ray on the optical axis) and their residual."""

    z: np.ndarray
    residual: float

    def __repr__(self) -> str:
        return f"DepthQuadruple(z={self.z}, residual={self.residual:.3g})"


@dataclass(frozen=True, eq=False)
class P4PSolution:
    """Depths along the original canvas rays.

    Attributes:
        z_orig: depths w.r.t. the z = 1 canvas, shape (4,).
        residual: raw incidence residual (squared scene units, squared).
        rotated: the selected rotated-frame depths.
        rays: lifted canvas points, shape (4, 3).
        residual_scale: ``(sum(a) + sum(c))^2 / 36``, for scale-free thresholds.
    """

    z_orig: np.ndarray
    residual: float
    rotated: DepthQuadruple
    rays: np.ndarray
    residual_scale: float = 1.0

    @property
    def normalized_residual(self) -> float:
        return self.residual / self.residual_scale if self.residual_scale > 0 else float("inf")

    def points(self) -> np.ndarray:
        """Reconstructed camera-frame points ``z_orig_i * ray_i``, shape (4, 3)."""
        return self.z_orig[:, None] * self.rays


def residual(coords: CoordVector, z) -> np.ndarray:
    """Sum of squared violations of the six incidence equations.

    ``a_i = b_j z_j^2 + b_k z_k^2 - 2 d_i z_j z_k`` and
    ``c_i = z_3^2 + b_i z_i^2 - 2 z_i z_3`` for ``i`` in 0..2. Broadcasts over
    leading dimensions of ``z`` (shape ``(..., 4)``) and ``coords``.
    """
    z = np.asarray(z)
    a, b, c, d = coords.a, coords.b, coords.c, coords.d
    zi, z3 = z[..., :3], z[..., 3:4]
    zj, zk = zi[..., _J], zi[..., _K]
    bj, bk = b[..., _J], b[..., _K]
    ea = bj * zj * zj + bk * zk * zk - 2 * d * zj * zk - a
    ec = z3 * z3 + b * zi * zi - 2 * zi * z3 - c
    return np.sum(ea * ea + ec * ec, axis=-1)


def residual_scale(coords: CoordVector) -> np.ndarray:
    s = np.sum(coords.a, axis=-1) + np.sum(coords.c, axis=-1)
    return s * s / 36


def _selection_key(q: DepthQuadruple):
    z = q.z
    return (q.residual, -z[3], z[0], z[1], z[2])


def candidate_depths(coords: CoordVector, signs) -> list[DepthQuadruple]:
    """All admissible depth quadruples (at most 16) with their residuals.

    ``signs[i]`` is the sign of ``p_i . p_3``; it fixes the sign of ``z_i``
    for ``i < 3`` while ``z_3`` is always the positive root.

    Raises:
        NoCandidates: if some row has no admissible (real, nonnegative) root.
    """
    X = eval_all_X(coords).X
    per_row: list[list[float]] = []
    for i in range(4):
        try:
            roots = solve_row(X[i]).roots
        except NoRealRoots:
            roots = ()
        tol = ALPHA_RTOL * max((abs(r) for r in roots), default=0.0)
        admissible = []
        for r in roots:
            if r >= 0:
                admissible.append(r)
            elif r >= -tol:
                admissible.append(0.0)
        if not admissible:
            raise NoCandidates(f"row {i} has no admissible root")
        per_row.append(admissible)
    out = []
    for alphas in itertools.product(*per_row):
        z = np.sqrt(np.array(alphas))
        z[:3] *= np.asarray(signs, dtype=float)
        out.append(DepthQuadruple(z, float(residual(coords, z))))
    return out


def best_depths(coords: CoordVector, signs) -> DepthQuadruple:
    """Candidate with the smallest residual (ties: larger z3, then lexicographic z)."""
    return min(candidate_depths(coords, signs), key=_selection_key)


def _rescale_factors(lines: np.ndarray) -> np.ndarray:
    """``|p_3| / (p_i . p_3)`` for i = 0..3, shape ``(..., 4)``."""
    n3sq = np.sum(lines[..., 3, :] * lines[..., 3, :], axis=-1)
    dots = np.sum(lines * lines[..., 3:4, :], axis=-1)
    dots = np.concatenate([dots[..., :3], n3sq[..., None]], axis=-1)
    return np.sqrt(n3sq)[..., None] / dots


def rescale_depths(z: DepthQuadruple, canvas) -> P4PSolution:
    """Convert rotated-frame depths to depths along the original canvas rays.

    Raises:
        OrthogonalToAnchor: if some ray is orthogonal to the anchor ray.
        ValueError: if ``z3 <= 0``.
    """
    p = np.asarray(canvas, dtype=float)
    lines = lift(p) if p.shape[-1] == 2 else p
    _, _, _, ok = line_dots(lines)
    if not np.all(ok):
        raise OrthogonalToAnchor(int(np.argmin(ok)))
    if not z.z[3] > 0:
        raise ValueError("anchor depth z3 must be positive")
    z_orig = _rescale_factors(lines) * z.z
    return P4PSolution(z_orig, z.residual, z, lines)


def _check_distinct(c: np.ndarray, a: np.ndarray) -> bool:
    vals = np.concatenate([c, a], axis=-1)
    top = np.max(vals, axis=-1)
    return (top > 0) & (np.min(vals, axis=-1) > DEGENERATE_RTOL * top)


def solve_p4p(world, canvas) -> P4PSolution:
    """Solve one four-point problem.

    Args:
        world: four 3D points, shape (4, 3).
        canvas: four canvas points (4, 2), or four ray vectors (4, 3).

    Raises:
        DegenerateInput: repeated 3D points.
        OrthogonalToAnchor: a ray orthogonal to ray 3.
        NoCandidates: no admissible root combination.
    """
    P = np.asarray(world, dtype=float)
    p = np.asarray(canvas, dtype=float)
    lines = lift(p) if p.shape[-1] == 2 else p
    c, a = squared_distance_coords(P)
    if not _check_distinct(c, a):
        raise DegenerateInput("the four 3D points must be distinct")
    b, d, dots, ok = line_dots(lines)
    if not np.all(ok):
        raise OrthogonalToAnchor(int(np.argmin(ok)))
    coords = CoordVector(a, b, c, d)
    best = best_depths(coords, np.sign(dots))
    sol = rescale_depths(best, lines)
    return P4PSolution(sol.z_orig, sol.residual, best, lines, float(residual_scale(coords)))


class BatchStatus(enum.IntEnum):
    OK = 0
    DEGENERATE_INPUT = 1
    ORTHOGONAL_TO_ANCHOR = 2
    NO_CANDIDATES = 3


@dataclass(eq=False)
class BatchSolution:
    """Column-oriented results of :func:`solve_p4p_batch`.

    Failed elements carry NaN depths and an infinite residual.
    """

    z_orig: np.ndarray
    z_rot: np.ndarray
    residual: np.ndarray
    residual_scale: np.ndarray
    status: np.ndarray
    rays: np.ndarray

    def __len__(self) -> int:
        return len(self.status)

    def accepted(self, threshold: float, normalize: bool = False) -> np.ndarray:
        r = self.residual / self.residual_scale if normalize else self.residual
        return (self.status == BatchStatus.OK) & (r <= threshold)

    def points(self) -> np.ndarray:
        return self.z_orig[..., None] * self.rays

    def results(self) -> list[P4PSolution | P4PError]:
        """Per-element :class:`P4PSolution`, or the error instance for failures."""
        out: list[P4PSolution | P4PError] = []
        for n in range(len(self)):
            st = BatchStatus(int(self.status[n]))
            if st == BatchStatus.OK:
                rot = DepthQuadruple(self.z_rot[n].astype(float), float(self.residual[n]))
                out.append(P4PSolution(
                    self.z_orig[n].astype(float), float(self.residual[n]), rot,
                    self.rays[n].astype(float), float(self.residual_scale[n]),
                ))
            elif st == BatchStatus.DEGENERATE_INPUT:
                out.append(DegenerateInput("the four 3D points must be distinct"))
            elif st == BatchStatus.ORTHOGONAL_TO_ANCHOR:
                out.append(OrthogonalToAnchor(-1))
            else:
                out.append(NoCandidates("no admissible root combination"))
        return out


# bit i of combination m picks root slot of row i
_COMBOS = np.array([[(m >> i) & 1 for i in range(4)] for m in range(16)])


def solve_p4p_batch(world, canvas, dtype=np.float64) -> BatchSolution:
    """Solve ``N`` four-point problems in lockstep.

    Args:
        world: shape (N, 4, 3).
        canvas: canvas points (N, 4, 2) or ray vectors (N, 4, 3).
        dtype: arithmetic precision; ``np.float32`` mimics a single-precision
            SIMD kernel.

    Returns:
        A :class:`BatchSolution`; per-element failures never abort the batch.
    """
    P = np.asarray(world, dtype=dtype).reshape(-1, 4, 3)
    p = np.asarray(canvas, dtype=dtype)
    lines = (lift(p) if p.shape[-1] == 2 else p).reshape(-1, 4, 3)
    n = len(P)

    c, a = squared_distance_coords(P)
    distinct = _check_distinct(c, a)
    b, d, dots, ok = line_dots(lines)
    anchor_ok = np.all(ok, axis=-1)
    coords = CoordVector(a, b, c, d)

    roots, _ = solve_rows(eval_all_X(coords).X)  # (N, 4, 2)
    mag = np.max(np.abs(np.where(np.isnan(roots), 0, roots)), axis=-1, keepdims=True)
    alpha = roots[:, np.arange(4), _COMBOS]  # (N, 16, 4)
    tol = ALPHA_RTOL * mag[:, None, :, 0]
    alpha = np.where((alpha < 0) & (alpha >= -tol), 0, alpha)
    alpha = np.where(alpha < 0, np.nan, alpha)
    z = np.sqrt(alpha)
    z[..., :3] *= np.sign(dots)[:, None, :]

    bc = CoordVector(a[:, None], b[:, None], c[:, None], d[:, None])
    res = residual(bc, z)
    res = np.where(np.isnan(res), np.inf, res)
    zkey = np.where(np.isnan(z), 0, z)
    order = np.lexsort((zkey[..., 2], zkey[..., 1], zkey[..., 0], -zkey[..., 3], res), axis=-1)
    pick = order[:, 0]
    rows = np.arange(n)
    best_res = res[rows, pick]
    z_rot = z[rows, pick]

    status = np.full(n, BatchStatus.OK, dtype=np.int8)
    status[~np.isfinite(best_res)] = BatchStatus.NO_CANDIDATES
    status[~anchor_ok] = BatchStatus.ORTHOGONAL_TO_ANCHOR
    status[~distinct] = BatchStatus.DEGENERATE_INPUT
    failed = status != BatchStatus.OK
    best_res = np.where(failed, np.inf, best_res).astype(dtype)
    z_rot = np.where(failed[:, None], np.nan, z_rot)
    with np.errstate(divide="ignore", invalid="ignore"):
        z_orig = _rescale_factors(lines) * z_rot
    return BatchSolution(z_orig, z_rot, best_res, residual_scale(coords), status, lines)
