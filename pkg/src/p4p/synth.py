"""Synthetic four-point scenarios and the experiment sweeps built on them.

Every scenario follows the same recipe. Four base points are drawn from a
configuration family, a random rotation and a random unit translation move
them into place, and the result is the ground-truth world. The canvas
points are projections of the clean world shifted 2.5 units along the
optical axis, so the true pose is always ``R = I, t = (0, 0, 2.5)``. Noise
of a given magnitude, in a uniformly random direction, is then added to the
3D points only.
"""

from __future__ import annotations

import csv
import enum
import io
import math
from dataclasses import dataclass, field

import numpy as np

from .coords import ANCHOR_EPS
from .geometry import Pose, apply_pose, lift, project, quat_to_matrix
from .horn import horn_align_batch
from .solver import _check_distinct, solve_p4p_batch

CAMERA_OFFSET = 2.5
MAX_RESAMPLES = 100
CSV_HEADER = [
    "kind", "noise", "threshold", "trials", "successes",
    "rot_mean_deg", "rot_std_deg", "trans_mean_milli", "trans_std_milli",
]
REJECTION_HEADER = ["kind", "noise", "threshold", "trials", "rejected", "rejection_rate"]


class ScenarioKind(enum.Enum):
    GENERAL = "general"
    PLANAR = "planar"
    THREE_COLLINEAR = "three_collinear"

    @classmethod
    def parse(cls, name: str) -> "ScenarioKind":
        key = name.strip().lower().replace("-", "_")
        aliases = {"collinear": "three_collinear", "threecollinear": "three_collinear"}
        return cls(aliases.get(key, key))


def truth_pose() -> Pose:
    return Pose(np.array([1.0, 0, 0, 0]), np.array([0.0, 0.0, CAMERA_OFFSET]))


def sphere_points(rng: np.random.Generator, size) -> np.ndarray:
    """Uniform samples on the unit sphere surface, shape ``size + (3,)``."""
    size = (size,) if isinstance(size, int) else tuple(size)
    v = rng.standard_normal(size + (3,))
    norm = np.linalg.norm(v, axis=-1, keepdims=True)
    while np.any(norm == 0):  # measure zero, but cheap to guard
        bad = norm[..., 0] == 0
        v[bad] = rng.standard_normal((int(bad.sum()), 3))
        norm = np.linalg.norm(v, axis=-1, keepdims=True)
    return v / norm


def random_quaternions(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-uniform unit quaternions with ``w >= 0``, shape (n, 4)."""
    q = rng.standard_normal((n, 4))
    q /= np.linalg.norm(q, axis=-1, keepdims=True)
    return np.where(q[:, :1] < 0, -q, q)


def _circle_points(rng, size) -> np.ndarray:
    size = (size,) if isinstance(size, int) else tuple(size)
    phi = rng.uniform(0.0, 2.0 * np.pi, size)
    return np.stack([np.cos(phi), np.sin(phi), np.zeros_like(phi)], axis=-1)


def _segment_points(rng, size) -> np.ndarray:
    # standard normal truncated to (-1, 1) by rejection
    size = (size,) if isinstance(size, int) else tuple(size)
    x = rng.standard_normal(size)
    bad = np.abs(x) >= 1
    while np.any(bad):
        x[bad] = rng.standard_normal(int(bad.sum()))
        bad = np.abs(x) >= 1
    zeros = np.zeros_like(x)
    return np.stack([x, zeros, zeros], axis=-1)


def base_points(kind: ScenarioKind, rng: np.random.Generator, n: int) -> np.ndarray:
    """Pre-pose four-point configurations, shape (n, 4, 3)."""
    if kind is ScenarioKind.GENERAL:
        return sphere_points(rng, (n, 4))
    if kind is ScenarioKind.PLANAR:
        return _circle_points(rng, (n, 4))
    out = np.empty((n, 4, 3))
    out[:, 0] = (1.0, 0.0, 0.0)
    out[:, 1] = (-1.0, 0.0, 0.0)
    out[:, 2] = _segment_points(rng, n)
    out[:, 3] = sphere_points(rng, n)
    return out


def replacement_points(kind: ScenarioKind, slots: np.ndarray, rng) -> np.ndarray:
    """A fresh draw from the family's distribution for the given point slots.

    The two fixed points of the collinear family have no distribution of
    their own, so a sphere point stands in for them.
    """
    n = len(slots)
    if kind is ScenarioKind.GENERAL:
        return sphere_points(rng, n)
    if kind is ScenarioKind.PLANAR:
        return _circle_points(rng, n)
    seg = _segment_points(rng, n)
    sph = sphere_points(rng, n)
    return np.where((slots == 2)[:, None], seg, sph)


@dataclass
class ScenarioBatch:
    """Column-oriented scenarios; field meanings as in :class:`Scenario`."""

    kind: ScenarioKind
    noise: float
    base: np.ndarray
    world: np.ndarray
    noisy: np.ndarray
    canvas: np.ndarray
    replaced: np.ndarray

    def __len__(self) -> int:
        return len(self.world)

    def __getitem__(self, i: int) -> "Scenario":
        return Scenario(
            self.world[i], self.noisy[i], self.canvas[i], truth_pose(), self.noise,
            self.kind, self.base[i], int(self.replaced[i]),
        )


@dataclass
class Scenario:
    """One synthetic problem.

    Attributes:
        world: clean ground-truth 3D points (n, 3).
        noisy: the 3D points handed to the solver (n, 3).
        canvas: canvas points (n, 2), projections of the clean points.
        truth: pose mapping ``world`` onto the camera frame.
        noise: noise magnitude in scene units.
        kind: configuration family.
        base: pre-pose points.
        replaced: index of the swapped point in a mismatch scenario, else -1.
    """

    world: np.ndarray
    noisy: np.ndarray
    canvas: np.ndarray
    truth: Pose
    noise: float
    kind: ScenarioKind | None = None
    base: np.ndarray | None = None
    replaced: int = -1

    @property
    def correspondences(self):
        from .geometry import CorrespondenceSet

        return CorrespondenceSet(self.noisy, self.canvas)


def _valid(world: np.ndarray, canvas: np.ndarray) -> np.ndarray:
    P = world + np.array([0.0, 0.0, CAMERA_OFFSET])
    front = np.all(P[..., 2] > ANCHOR_EPS, axis=-1)
    d = world[..., :, None, :] - world[..., None, :, :]
    sq = np.sum(d * d, axis=-1)
    iu = np.triu_indices(4, 1)
    pair = sq[..., iu[0], iu[1]]
    distinct = _check_distinct(pair[..., :3], pair[..., 3:])
    L = lift(canvas)
    dots = np.sum(L * L[..., 3:4, :], axis=-1)
    norms = np.linalg.norm(L, axis=-1) * np.linalg.norm(L[..., 3, :], axis=-1)[..., None]
    anchor = np.all(np.abs(dots) > ANCHOR_EPS * norms, axis=-1)
    return front & distinct & anchor


def _place(kind, rng, n):
    base = base_points(kind, rng, n)
    R = quat_to_matrix(random_quaternions(rng, n))
    t = sphere_points(rng, n)
    world = np.einsum("nij,nkj->nki", R, base) + t[:, None, :]
    with np.errstate(divide="ignore", invalid="ignore"):
        canvas = (world[..., :2]) / (world[..., 2:] + CAMERA_OFFSET)
    return base, R, t, world, canvas


def gen_batch(kind: ScenarioKind, noise: float, n: int, rng: np.random.Generator,
              mismatch: bool = False) -> ScenarioBatch:
    """``n`` independent four-point scenarios.

    Degenerate draws (a ray orthogonal to the anchor ray, coincident points,
    a point behind the camera) are redrawn, at most 100 times.

    Args:
        kind: configuration family.
        noise: 3D noise magnitude, >= 0.
        n: number of scenarios.
        rng: source of randomness.
        mismatch: replace one 3D point per scenario after projection.
    """
    if noise < 0:
        raise ValueError("noise must be nonnegative")
    kind = ScenarioKind(kind)
    base, R, t, world, canvas = _place(kind, rng, n)
    for _ in range(MAX_RESAMPLES):
        bad = ~_valid(world, canvas)
        if not np.any(bad):
            break
        b2, R2, t2, w2, c2 = _place(kind, rng, int(bad.sum()))
        base[bad], R[bad], t[bad], world[bad], canvas[bad] = b2, R2, t2, w2, c2
    else:
        raise RuntimeError("could not draw a nondegenerate configuration")

    replaced = np.full(n, -1)
    solver_world = world.copy()
    if mismatch:
        replaced = rng.integers(0, 4, n)
        fresh = replacement_points(kind, replaced, rng)
        moved = np.einsum("nij,nj->ni", R, fresh) + t
        solver_world[np.arange(n), replaced] = moved
    noisy = solver_world + noise * sphere_points(rng, (n, 4))
    return ScenarioBatch(kind, float(noise), base, world, noisy, canvas, replaced)


def gen_scenario(kind: ScenarioKind, noise: float, rng: np.random.Generator) -> Scenario:
    """A single four-point scenario of the given family."""
    return gen_batch(kind, noise, 1, rng)[0]


def gen_mismatch_scenario(kind: ScenarioKind, noise: float, rng: np.random.Generator) -> Scenario:
    """Like :func:`gen_scenario`, with one 3D point swapped for a fresh draw after projection."""
    return gen_batch(kind, noise, 1, rng, mismatch=True)[0]


def gen_pnp_scene(n_points: int, noise: float, rng: np.random.Generator,
                  n_outliers: int = 0, depth: float = 5.0) -> Scenario:
    """A general-position scene for the n-point pipeline.

    World points are uniform in ``[-1, 1]^3``; the camera looks at them from
    a random orientation at distance ``depth``. Noise is added to the 3D side,
    and ``n_outliers`` randomly chosen points are replaced after projection.
    """
    if n_points < 4:
        raise ValueError("a scene needs at least four points")
    q = random_quaternions(rng, 1)[0]
    t = np.array([*rng.uniform(-0.3, 0.3, 2), depth])
    truth = Pose(q, t)
    world = rng.uniform(-1.0, 1.0, (n_points, 3))
    canvas = project(apply_pose(truth, world))
    noisy = world + noise * sphere_points(rng, n_points)
    replaced = -1
    if n_outliers:
        idx = rng.choice(n_points, n_outliers, replace=False)
        noisy[idx] = rng.uniform(-1.0, 1.0, (n_outliers, 3))
        replaced = int(idx[0])
    return Scenario(world, noisy, canvas, truth, float(noise), ScenarioKind.GENERAL, world, replaced)


def _kind_key(kind: ScenarioKind) -> int:
    return list(ScenarioKind).index(kind)


def sweep_rng(seed: int, kind: ScenarioKind, noise: float, mismatch: bool = False) -> np.random.Generator:
    """Independent, reproducible stream for one (kind, noise) cell of a sweep."""
    return np.random.default_rng([seed, _kind_key(kind), int(round(noise * 1e9)), int(mismatch)])


def solve_batch(batch: ScenarioBatch, precision: str = "double"):
    """Run the four-point reduction on a scenario batch.

    ``precision="single"`` uses float32 arithmetic throughout the reduction,
    mirroring a single-precision SIMD kernel; ``"double"`` uses the compiled
    float64 kernel.
    """
    if precision == "single":
        return solve_p4p_batch(batch.noisy, batch.canvas, dtype=np.float32)
    if precision == "double":
        from .kernels import solve_p4p_batch_compiled

        return solve_p4p_batch_compiled(batch.noisy, batch.canvas)
    raise ValueError(f"unknown precision {precision!r}")


def batch_pose_errors(batch: ScenarioBatch, sol) -> tuple[np.ndarray, np.ndarray]:
    """Rotation error (degrees) and translation error per scenario; NaN where unsolved."""
    target = sol.points().astype(np.float64)
    q, t, _ = horn_align_batch(batch.noisy, target)
    rot = np.degrees(2.0 * np.arctan2(np.linalg.norm(q[:, 1:], axis=-1), np.abs(q[:, 0])))
    trans = np.linalg.norm(t - truth_pose().translation, axis=-1)
    return rot, trans


@dataclass
class SweepRow:
    kind: str
    noise: float
    threshold: float
    trials: int
    successes: int
    rot_mean_deg: float
    rot_std_deg: float
    trans_mean_milli: float
    trans_std_milli: float

    def as_list(self) -> list:
        return [getattr(self, k) for k in CSV_HEADER]


@dataclass
class RejectionRow:
    kind: str
    noise: float
    threshold: float
    trials: int
    rejected: int
    rejection_rate: float = field(init=False)

    def __post_init__(self):
        self.rejection_rate = self.rejected / self.trials if self.trials else float("nan")

    def as_list(self) -> list:
        return [getattr(self, k) for k in REJECTION_HEADER]


def _stats(x: np.ndarray) -> tuple[float, float]:
    if len(x) == 0:
        return float("nan"), float("nan")
    return float(np.mean(x)), float(np.std(x))


def run_sweep(kinds, noises, trials: int, thresholds, seed: int = 0,
              precision: str = "double") -> list[SweepRow]:
    """Success counts and pose-error statistics per (kind, noise, threshold).

    A trial succeeds when the reduction returns a solution whose incidence
    residual is at most the threshold. Error statistics cover successful
    trials only; translation errors are reported in thousandths of a unit.
    """
    if trials < 0:
        raise ValueError("trials must be nonnegative")
    rows: list[SweepRow] = []
    if trials == 0:
        return rows
    for kind in kinds:
        kind = ScenarioKind(kind)
        for noise in noises:
            batch = gen_batch(kind, noise, trials, sweep_rng(seed, kind, noise))
            sol = solve_batch(batch, precision)
            rot, trans = batch_pose_errors(batch, sol)
            for thr in thresholds:
                ok = sol.accepted(thr)
                r_mean, r_std = _stats(rot[ok])
                t_mean, t_std = _stats(trans[ok] * 1000.0)
                rows.append(SweepRow(kind.value, float(noise), float(thr), trials, int(ok.sum()),
                                     r_mean, r_std, t_mean, t_std))
    return rows


def run_rejection_sweep(kinds, noises, trials: int, thresholds, seed: int = 0,
                        precision: str = "double") -> list[RejectionRow]:
    """Fraction of mismatch scenarios the residual test turns away."""
    rows: list[RejectionRow] = []
    if trials <= 0:
        return rows
    for kind in kinds:
        kind = ScenarioKind(kind)
        for noise in noises:
            batch = gen_batch(kind, noise, trials, sweep_rng(seed, kind, noise, True), mismatch=True)
            sol = solve_batch(batch, precision)
            for thr in thresholds:
                # an infinite threshold disables the test altogether
                accepted = sol.accepted(thr) if math.isfinite(thr) else np.ones(len(sol), dtype=bool)
                rows.append(RejectionRow(kind.value, float(noise), float(thr), trials, int((~accepted).sum())))
    return rows


def write_csv(rows, path=None, header=CSV_HEADER) -> str:
    """Serialize sweep rows; writes to ``path`` when given and returns the text."""
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([f"{v:.6g}" if isinstance(v, float) else v for v in row.as_list()])
    text = buf.getvalue()
    if path is not None:
        with open(path, "w", newline="") as fh:
            fh.write(text)
    return text
