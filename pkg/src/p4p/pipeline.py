"""n-point pose estimation from residual-gated four-point seeds.

1. Draw ``N`` random 4-subsets (seeds) of the correspondences.
2. Solve every seed with the batched four-point reduction.
3. Drop seeds whose incidence residual exceeds the threshold, then unite
   seeds that share three indices and agree on the shared depths.
4. Align the largest united sets with Horn's method.
5. Polish each candidate pose by Levenberg-Marquardt.
6. Keep the candidate with the most inliers, breaking ties by reprojection error.

No pose is computed for a rejected seed, so a scene without a consistent
four-point subset is turned away after step 3 (:class:`NoViableSeeds`).
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field

import numpy as np

from .errors import DegenerateAlignment, NoViableSeeds, TooFewPoints
from .geometry import CorrespondenceSet, Pose, lift
from .horn import horn_align
from .refine import LMConfig, LMResult, lm_refine, reprojection_residuals
from .solver import BatchStatus, P4PSolution


@dataclass(frozen=True)
class PipelineConfig:
    """Pipeline parameters.

    Attributes:
        n_seeds: number of 4-subsets to draw; ``None`` means ``min(C(n, 4), 8 n)``.
        residual_threshold: seeds with a larger incidence residual are rejected.
        depth_agreement_tol: relative tolerance for shared depths when uniting.
        max_candidates_for_horn: how many united sets become pose candidates.
        inlier_tolerance: canvas distance below which a correspondence is an inlier.
        normalize_residual: compare ``residual / residual_scale`` to the
            threshold instead of the raw residual, making it scale-free.
        lm: refinement settings.
        seed: seed for the subset sampler.
    """

    n_seeds: int | None = None
    residual_threshold: float = 0.1
    depth_agreement_tol: float = 0.01
    max_candidates_for_horn: int = 8
    inlier_tolerance: float = 0.01
    normalize_residual: bool = False
    lm: LMConfig = field(default_factory=LMConfig)
    seed: int = 0

    def __post_init__(self):
        if self.n_seeds is not None and self.n_seeds <= 0:
            raise ValueError("n_seeds must be positive")
        for name in ("residual_threshold", "depth_agreement_tol", "inlier_tolerance"):
            if not getattr(self, name) > 0:
                raise ValueError(f"{name} must be positive")
        if self.max_candidates_for_horn <= 0:
            raise ValueError("max_candidates_for_horn must be positive")

    def seed_count(self, n: int) -> int:
        if self.n_seeds is not None:
            return self.n_seeds
        return min(math.comb(n, 4), 8 * n)


@dataclass
class Seed:
    """A 4-subset of correspondence indices and, once solved, its depths."""

    indices: tuple[int, int, int, int]
    solution: P4PSolution | None = None
    residual: float = math.inf
    rejected: bool = False

    def __post_init__(self):
        idx = tuple(int(i) for i in self.indices)
        if len(idx) != 4 or len(set(idx)) != 4 or min(idx) < 0:
            raise ValueError(f"a seed needs four distinct nonnegative indices, got {self.indices}")
        self.indices = tuple(sorted(idx))

    @property
    def depths(self) -> dict[int, float]:
        if self.solution is None:
            return {}
        return dict(zip(self.indices, (float(z) for z in self.solution.z_orig)))


@dataclass
class UnitedSet:
    """Union of compatible seeds with pooled depth estimates per index."""

    estimates: dict[int, list[float]] = field(default_factory=dict)
    residual: float = 0.0
    seeds: list[Seed] = field(default_factory=list)

    @property
    def members(self) -> list[int]:
        return sorted(self.estimates)

    def __len__(self) -> int:
        return len(self.estimates)

    def depth(self, i: int) -> float:
        return float(np.mean(self.estimates[i]))

    def depths(self) -> np.ndarray:
        return np.array([self.depth(i) for i in self.members])

    def spread(self) -> float:
        """Largest relative deviation of any single estimate from its index mean."""
        worst = 0.0
        for vals in self.estimates.values():
            m = np.mean(vals)
            if m != 0:
                worst = max(worst, float(np.max(np.abs(np.asarray(vals) - m)) / abs(m)))
        return worst

    def add(self, seed: Seed) -> None:
        for i, z in seed.depths.items():
            self.estimates.setdefault(i, []).append(z)
        self.residual += seed.residual
        self.seeds.append(seed)

    def absorb(self, other: "UnitedSet") -> None:
        for i, vals in other.estimates.items():
            self.estimates.setdefault(i, []).extend(vals)
        self.residual += other.residual
        self.seeds.extend(other.seeds)


def _agree(z1: float, z2: float, tol: float) -> bool:
    top = max(abs(z1), abs(z2))
    return top == 0 or abs(z1 - z2) <= tol * top


def _compatible(depths_a: dict[int, float], depths_b: dict[int, float], tol: float) -> bool:
    shared = depths_a.keys() & depths_b.keys()
    return len(shared) >= 3 and all(_agree(depths_a[i], depths_b[i], tol) for i in shared)


def sample_seeds(n: int, cfg: PipelineConfig, rng: np.random.Generator | None = None) -> list[Seed]:
    """Distinct random 4-subsets of ``range(n)``; every subset when there are few enough.

    Raises:
        TooFewPoints: for ``n < 4``.
    """
    if n < 4:
        raise TooFewPoints(f"need at least four correspondences, got {n}")
    rng = np.random.default_rng(cfg.seed) if rng is None else rng
    N = cfg.seed_count(n)
    if math.comb(n, 4) <= N:
        return [Seed(c) for c in itertools.combinations(range(n), 4)]
    seen: dict[tuple, None] = {}
    while len(seen) < N:
        for row in np.sort(rng.random((N, n)).argsort(axis=1)[:, :4], axis=1):
            seen.setdefault(tuple(int(i) for i in row), None)
            if len(seen) == N:
                break
    return [Seed(c) for c in seen]


def solve_seeds(corr: CorrespondenceSet, seeds: list[Seed], cfg: PipelineConfig) -> list[Seed]:
    """Solve all seeds in one batch and mark those above the residual threshold."""
    from .kernels import solve_p4p_batch_compiled

    if not seeds:
        return []
    idx = np.array([s.indices for s in seeds])
    batch = solve_p4p_batch_compiled(corr.world[idx], corr.image[idx])
    results = batch.results()
    for s, sol, res, st, scale in zip(seeds, results, batch.residual, batch.status, batch.residual_scale):
        ok = st == BatchStatus.OK
        s.solution = sol if ok else None
        s.residual = float(res) if ok else math.inf
        score = s.residual / scale if cfg.normalize_residual and ok else s.residual
        s.rejected = not (ok and score <= cfg.residual_threshold)
    return seeds


def unite_seeds(solved: list[Seed], cfg: PipelineConfig) -> list[UnitedSet]:
    """Greedy agglomeration of accepted seeds.

    Seeds are visited in ascending residual order. A seed joins the first
    set that holds at least three of its indices with depths agreeing
    within ``depth_agreement_tol``; otherwise it opens a new set. Sets that
    end up overlapping in three agreeing indices are merged afterwards.
    """
    tol = cfg.depth_agreement_tol
    accepted = sorted((s for s in solved if not s.rejected), key=lambda s: (s.residual, s.indices))
    sets: list[UnitedSet] = []
    for s in accepted:
        mine = s.depths
        for u in sets:
            pooled = {i: u.depth(i) for i in mine if i in u.estimates}
            if _compatible(mine, pooled, tol):
                u.add(s)
                break
        else:
            u = UnitedSet()
            u.add(s)
            sets.append(u)

    merged = True
    while merged:
        merged = False
        for a, b in itertools.combinations(range(len(sets)), 2):
            da = {i: sets[a].depth(i) for i in sets[a].estimates}
            db = {i: sets[b].depth(i) for i in sets[b].estimates}
            if _compatible(da, db, tol):
                sets[a].absorb(sets.pop(b))
                merged = True
                break
    return sets


@dataclass
class Candidate:
    """A pose hypothesis built from one united set."""

    united: UnitedSet
    horn_pose: Pose
    horn_rms: float
    refined: LMResult
    inliers: list[int]
    error: float

    @property
    def pose(self) -> Pose:
        return self.refined.pose


@dataclass
class PipelineReport:
    n_seeds: int
    n_accepted: int
    min_residual: float
    united: list[UnitedSet]
    candidates: list[Candidate]
    timings: dict[str, float]


@dataclass
class PnPResult:
    pose: Pose
    inliers: list[int]
    reprojection_error: float
    report: PipelineReport

    def __iter__(self):
        return iter((self.pose, self.inliers, self.report))


def point_distances(pose: Pose, corr: CorrespondenceSet) -> np.ndarray:
    """Per-correspondence canvas distance (penalty value for points behind the camera)."""
    r = reprojection_residuals(pose, corr).reshape(-1, 2)
    return np.linalg.norm(r, axis=-1)


def _candidate(u: UnitedSet, corr: CorrespondenceSet, cfg: PipelineConfig) -> Candidate | None:
    idx = u.members
    target = u.depths()[:, None] * lift(corr.image[idx])
    try:
        pose, rms = horn_align(corr.world[idx], target)
    except DegenerateAlignment:
        return None
    refined = lm_refine(pose, corr.subset(idx), cfg.lm)
    dist = point_distances(refined.pose, corr)
    inliers = [int(i) for i in np.flatnonzero(dist <= cfg.inlier_tolerance)]
    error = float(np.sum(dist[inliers] ** 2))
    return Candidate(u, pose, rms, refined, inliers, error)


def solve_pnp(corr: CorrespondenceSet, cfg: PipelineConfig | None = None) -> PnPResult:
    """Estimate the camera pose from ``n >= 4`` correspondences.

    Raises:
        TooFewPoints: for fewer than four correspondences.
        NoViableSeeds: every seed failed the residual test (fast rejection).
        DegenerateAlignment: the accepted seeds only span collinear 3D points.
    """
    cfg = cfg or PipelineConfig()
    timings: dict[str, float] = {}
    t0 = time.perf_counter()
    seeds = sample_seeds(len(corr), cfg)
    t1 = time.perf_counter()
    solve_seeds(corr, seeds, cfg)
    t2 = time.perf_counter()
    timings["sample"] = t1 - t0
    timings["reduce"] = t2 - t1
    finite = [s.residual for s in seeds if math.isfinite(s.residual)]
    min_residual = min(finite) if finite else math.inf
    n_accepted = sum(not s.rejected for s in seeds)
    if n_accepted == 0:
        raise NoViableSeeds(min_residual, len(seeds))

    united = unite_seeds(seeds, cfg)
    united.sort(key=lambda u: (-len(u), u.residual))
    t3 = time.perf_counter()
    timings["unite"] = t3 - t2

    candidates = []
    for u in united[: cfg.max_candidates_for_horn]:
        c = _candidate(u, corr, cfg)
        if c is not None:
            candidates.append(c)
    timings["align_refine"] = time.perf_counter() - t3
    report = PipelineReport(len(seeds), n_accepted, min_residual, united, candidates, timings)
    if not candidates:
        raise DegenerateAlignment("every united set is collinear in 3D")
    best = min(candidates, key=lambda c: (-len(c.inliers), c.error))
    return PnPResult(best.pose, best.inliers, best.error, report)
