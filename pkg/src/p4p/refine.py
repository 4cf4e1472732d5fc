"""Levenberg-Marquardt refinement of a pose against its reprojection error.

The pose is updated through a 6-vector ``delta = (rotvec, dt)``:
``R <- exp([rotvec]x) R`` (world-frame, left composition) and ``t <- t + dt``.
Damping follows Fletcher's scheme: the damping term is scaled by the
diagonal of ``J^T J`` and adapted from the gain ratio between the actual and
the predicted decrease.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .geometry import PROJECTION_EPS, CorrespondenceSet, Pose, quat_multiply, rotvec_to_quat

BEHIND_CAMERA_WEIGHT = 1e3
LAMBDA_MAX = 1e16


@dataclass(frozen=True)
class LMConfig:
    max_iters: int = 50
    initial_lambda: float = 1e-3
    lambda_up: float = 2.0
    lambda_down: float = 3.0
    gradient_tol: float = 1e-12
    step_tol: float = 1e-12

    def __post_init__(self):
        if self.max_iters < 0:
            raise ValueError("max_iters must be nonnegative")
        if min(self.initial_lambda, self.gradient_tol, self.step_tol) <= 0:
            raise ValueError("lambda and tolerances must be positive")
        if self.lambda_up <= 1 or self.lambda_down <= 1:
            raise ValueError("lambda_up and lambda_down must exceed 1")


@dataclass
class LMResult:
    pose: Pose
    final_error: float
    iters: int
    accepted_steps: int
    initial_error: float
    singular: bool = False
    reason: str = ""
    history: list[float] = field(default_factory=list)

    def __iter__(self):
        # unpacks as (pose, final_error, iters)
        return iter((self.pose, self.final_error, self.iters))


def perturb(pose: Pose, delta) -> Pose:
    delta = np.asarray(delta, dtype=float)
    return Pose(quat_multiply(rotvec_to_quat(delta[:3]), pose.rotation), pose.translation + delta[3:])


def _camera_points(pose: Pose, world: np.ndarray) -> np.ndarray:
    return world @ pose.matrix.T + pose.translation


def reprojection_residuals(pose: Pose, corr: CorrespondenceSet) -> np.ndarray:
    """Stacked residual vector ``(2n,)``.

    A point with depth ``<= 1e-12`` contributes ``(1e3 * (1 - z), 0)``
    instead of a projection residual.
    """
    Y = _camera_points(pose, corr.world)
    z = Y[:, 2]
    front = z > PROJECTION_EPS
    safe = np.where(front, z, 1.0)
    r = Y[:, :2] / safe[:, None] - corr.image
    r[~front, 0] = BEHIND_CAMERA_WEIGHT * (1.0 - z[~front])
    r[~front, 1] = 0.0
    return r.reshape(-1)


def reprojection_error(pose: Pose, corr: CorrespondenceSet) -> float:
    """Sum over points of the squared canvas distance between projection and observation."""
    r = reprojection_residuals(pose, corr)
    return float(r @ r)


def reprojection_jacobian(pose: Pose, corr: CorrespondenceSet) -> np.ndarray:
    """``d residuals / d delta`` at ``delta = 0``, shape ``(2n, 6)``."""
    RX = corr.world @ pose.matrix.T
    Y = RX + pose.translation
    x, y, z = Y[:, 0], Y[:, 1], Y[:, 2]
    front = z > PROJECTION_EPS
    safe = np.where(front, z, 1.0)
    n = len(Y)
    # d(proj)/dY for proj = (x/z, y/z)
    dP = np.zeros((n, 2, 3))
    dP[:, 0, 0] = 1.0 / safe
    dP[:, 0, 2] = -x / safe**2
    dP[:, 1, 1] = 1.0 / safe
    dP[:, 1, 2] = -y / safe**2
    # dY/d(rotvec) = -[RX]x, dY/dt = I
    dY = np.zeros((n, 3, 6))
    px, py, pz = RX[:, 0], RX[:, 1], RX[:, 2]
    dY[:, 0, 1], dY[:, 0, 2] = pz, -py
    dY[:, 1, 0], dY[:, 1, 2] = -pz, px
    dY[:, 2, 0], dY[:, 2, 1] = py, -px
    dY[:, :, 3:] = np.eye(3)
    J = dP @ dY
    J[~front, 0, :] = -BEHIND_CAMERA_WEIGHT * dY[~front, 2, :]
    J[~front, 1, :] = 0.0
    return J.reshape(2 * n, 6)


def lm_refine(pose: Pose, corr: CorrespondenceSet, cfg: LMConfig | None = None) -> LMResult:
    """Polish ``pose`` by damped Gauss-Newton on the reprojection residuals.

    Accepted steps strictly decrease the error; rejected steps only raise
    the damping. If the damped normal equations stay singular up to the
    maximal damping, the best pose so far is returned with ``singular=True``.
    """
    cfg = cfg or LMConfig()
    if len(corr) < 3:
        raise ValueError("at least three correspondences are required")
    r = reprojection_residuals(pose, corr)
    err = float(r @ r)
    result = LMResult(pose, err, 0, 0, err, history=[err])
    lam = cfg.initial_lambda
    J = reprojection_jacobian(pose, corr)
    for it in range(1, cfg.max_iters + 1):
        g = J.T @ r
        if np.max(np.abs(g)) <= cfg.gradient_tol:
            result.reason = "gradient"
            break
        H = J.T @ J
        diag = np.diag(H).copy()
        diag[diag <= 0] = 1.0
        result.iters = it
        try:
            step = np.linalg.solve(H + lam * np.diag(diag), -g)
        except np.linalg.LinAlgError:
            step = None
        if step is None or not np.all(np.isfinite(step)):
            lam *= cfg.lambda_up
            if lam > LAMBDA_MAX:
                result.singular = True
                result.reason = "singular"
                break
            continue
        candidate = perturb(pose, step)
        r_new = reprojection_residuals(candidate, corr)
        err_new = float(r_new @ r_new)
        predicted = -(2.0 * step @ g + step @ H @ step)
        actual = err - err_new
        rho = actual / predicted if predicted > 0 else -1.0
        if actual > 0:
            pose, r, err = candidate, r_new, err_new
            J = reprojection_jacobian(pose, corr)
            result.accepted_steps += 1
            result.history.append(err)
            if rho > 0.75:
                lam /= cfg.lambda_down
            elif rho < 0.25:
                lam *= cfg.lambda_up
            if np.linalg.norm(step) <= cfg.step_tol * (1.0 + np.linalg.norm(pose.translation)):
                result.reason = "step"
                break
        else:
            lam *= cfg.lambda_up
            if lam > LAMBDA_MAX:
                result.reason = "damping"
                break
    else:
        result.reason = "max_iters"
    result.pose = pose
    result.final_error = err
    return result
