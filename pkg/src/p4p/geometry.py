"""Points, canvas points, rigid poses and projection to the z = 1 canvas.

Points are plain float arrays: a 3D point is shape ``(3,)`` and a canvas point
is shape ``(2,)``; the canvas is the plane z = 1 in camera coordinates, so a
canvas point ``(u, v)`` lifts to the ray direction ``(u, v, 1)``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import DegenerateProjection

PROJECTION_EPS = 1e-12


# -- quaternions (w, x, y, z) --------------------------------------------------


def quat_multiply(q: np.ndarray, r: np.ndarray) -> np.ndarray:
    w1, x1, y1, z1 = q
    w2, x2, y2, z2 = r
    return np.array([
        w1 * w2 - x1 * x2 - y1 * y2 - z1 * z2,
        w1 * x2 + x1 * w2 + y1 * z2 - z1 * y2,
        w1 * y2 - x1 * z2 + y1 * w2 + z1 * x2,
        w1 * z2 + x1 * y2 - y1 * x2 + z1 * w2,
    ])


def quat_to_matrix(q: np.ndarray) -> np.ndarray:
    """Rotation matrix of a unit quaternion; works on stacks ``(..., 4)``."""
    q = np.asarray(q, dtype=float)
    w, x, y, z = np.moveaxis(q, -1, 0)
    R = np.stack([
        1 - 2 * (y * y + z * z), 2 * (x * y - w * z), 2 * (x * z + w * y),
        2 * (x * y + w * z), 1 - 2 * (x * x + z * z), 2 * (y * z - w * x),
        2 * (x * z - w * y), 2 * (y * z + w * x), 1 - 2 * (x * x + y * y),
    ], axis=-1)
    return R.reshape(q.shape[:-1] + (3, 3))


def matrix_to_quat(R: np.ndarray) -> np.ndarray:
    """Shepperd's method: branch on the largest diagonal combination."""
    R = np.asarray(R, dtype=float)
    tr = R[0, 0] + R[1, 1] + R[2, 2]
    cands = np.array([tr, R[0, 0], R[1, 1], R[2, 2]])
    k = int(np.argmax(cands))
    if k == 0:
        s = 2.0 * np.sqrt(1.0 + tr)
        q = [0.25 * s, (R[2, 1] - R[1, 2]) / s, (R[0, 2] - R[2, 0]) / s, (R[1, 0] - R[0, 1]) / s]
    elif k == 1:
        s = 2.0 * np.sqrt(1.0 + R[0, 0] - R[1, 1] - R[2, 2])
        q = [(R[2, 1] - R[1, 2]) / s, 0.25 * s, (R[0, 1] + R[1, 0]) / s, (R[0, 2] + R[2, 0]) / s]
    elif k == 2:
        s = 2.0 * np.sqrt(1.0 + R[1, 1] - R[0, 0] - R[2, 2])
        q = [(R[0, 2] - R[2, 0]) / s, (R[0, 1] + R[1, 0]) / s, 0.25 * s, (R[1, 2] + R[2, 1]) / s]
    else:
        s = 2.0 * np.sqrt(1.0 + R[2, 2] - R[0, 0] - R[1, 1])
        q = [(R[1, 0] - R[0, 1]) / s, (R[0, 2] + R[2, 0]) / s, (R[1, 2] + R[2, 1]) / s, 0.25 * s]
    return np.array(q)


def rotvec_to_quat(v: np.ndarray) -> np.ndarray:
    """Exponential map from a rotation vector (axis * angle in radians)."""
    v = np.asarray(v, dtype=float)
    theta = float(np.linalg.norm(v))
    half = 0.5 * theta
    # sin(x)/x series below the point where it is exact in double precision
    k = 0.5 - theta * theta / 48.0 if theta < 1e-4 else np.sin(half) / theta
    return np.concatenate([[np.cos(half)], k * v])


def _canonical_quat(q) -> np.ndarray:
    q = np.asarray(q, dtype=float).reshape(4)
    n = np.linalg.norm(q)
    if not np.isfinite(n) or n == 0.0:
        raise ValueError(f"invalid quaternion {q}")
    q = q / n
    return -q if q[0] < 0 else q


@dataclass(frozen=True, eq=False)
class Pose:
    """Rigid transformation ``x -> R x + t`` mapping world into camera coordinates.

    The rotation is a unit quaternion ``(w, x, y, z)``, renormalized and
    canonicalized to ``w >= 0`` on construction.
    """

    rotation: np.ndarray
    translation: np.ndarray

    def __post_init__(self):
        t = np.asarray(self.translation, dtype=float).reshape(3)
        if not np.all(np.isfinite(t)):
            raise ValueError(f"non-finite translation {t}")
        object.__setattr__(self, "rotation", _canonical_quat(self.rotation))
        object.__setattr__(self, "translation", t)

    @classmethod
    def identity(cls) -> "Pose":
        return cls(np.array([1.0, 0, 0, 0]), np.zeros(3))

    @classmethod
    def from_matrix(cls, R: np.ndarray, t) -> "Pose":
        return cls(matrix_to_quat(R), t)

    @classmethod
    def from_rotvec(cls, rotvec, t) -> "Pose":
        return cls(rotvec_to_quat(rotvec), t)

    @property
    def matrix(self) -> np.ndarray:
        return quat_to_matrix(self.rotation)

    def inverse(self) -> "Pose":
        w, x, y, z = self.rotation
        conj = np.array([w, -x, -y, -z])
        return Pose(conj, -quat_to_matrix(conj) @ self.translation)

    def compose(self, other: "Pose") -> "Pose":
        """``self ∘ other``: apply ``other`` first."""
        return Pose(
            quat_multiply(self.rotation, other.rotation),
            self.matrix @ other.translation + self.translation,
        )

    def __repr__(self) -> str:
        return f"Pose(rotation={np.round(self.rotation, 6)}, translation={np.round(self.translation, 6)})"


def apply_pose(pose: Pose, points: np.ndarray) -> np.ndarray:
    """``R p + t`` for a point ``(3,)`` or a stack of points ``(n, 3)``."""
    pts = np.asarray(points, dtype=float)
    return pts @ pose.matrix.T + pose.translation


def project(points: np.ndarray) -> np.ndarray:
    """Central projection onto the z = 1 canvas.

    Raises:
        DegenerateProjection: if any point has ``|z| < 1e-12``.
    """
    pts = np.asarray(points, dtype=float)
    z = pts[..., 2]
    if np.any(np.abs(z) < PROJECTION_EPS):
        raise DegenerateProjection(f"point with |z| < {PROJECTION_EPS} cannot be projected")
    return pts[..., :2] / z[..., None]


def lift(canvas: np.ndarray) -> np.ndarray:
    """Canvas point(s) ``(..., 2)`` to ray vectors ``(..., 3)`` on the z = 1 plane."""
    c = np.asarray(canvas)
    return np.concatenate([c, np.ones(c.shape[:-1] + (1,), dtype=c.dtype)], axis=-1)


def rotation_angle_deg(q: np.ndarray) -> float:
    q = np.asarray(q, dtype=float)
    return float(np.degrees(2.0 * np.arctan2(np.linalg.norm(q[1:]), abs(q[0]))))


def pose_errors(estimate: Pose, truth: Pose) -> tuple[float, float]:
    """Rotation error in degrees (in [0, 180]) and Euclidean translation error."""
    w, x, y, z = truth.rotation
    rel = quat_multiply(estimate.rotation, np.array([w, -x, -y, -z]))
    return rotation_angle_deg(rel), float(np.linalg.norm(estimate.translation - truth.translation))


@dataclass(frozen=True)
class Correspondence:
    world: np.ndarray
    image: np.ndarray


class CorrespondenceSet:
    """Matched 3D points ``world (n, 3)`` and canvas points ``image (n, 2)``."""

    def __init__(self, world, image):
        world = np.array(world, dtype=float)
        image = np.array(image, dtype=float)
        if world.ndim != 2 or world.shape[1] != 3:
            raise ValueError(f"world points must have shape (n, 3), got {world.shape}")
        if image.ndim != 2 or image.shape[1] != 2:
            raise ValueError(f"image points must have shape (n, 2), got {image.shape}")
        if len(world) != len(image):
            raise ValueError(f"{len(world)} world points but {len(image)} image points")
        if not (np.all(np.isfinite(world)) and np.all(np.isfinite(image))):
            raise ValueError("correspondences must be finite")
        self.world = world
        self.image = image

    @classmethod
    def from_pairs(cls, pairs) -> "CorrespondenceSet":
        pairs = list(pairs)
        return cls([c.world for c in pairs], [c.image for c in pairs])

    def __len__(self) -> int:
        return len(self.world)

    def __getitem__(self, i: int) -> Correspondence:
        return Correspondence(self.world[i], self.image[i])

    def subset(self, indices) -> "CorrespondenceSet":
        idx = np.asarray(indices, dtype=int)
        return CorrespondenceSet(self.world[idx], self.image[idx])
