import math

import numpy as np
import pytest

from p4p.errors import NoViableSeeds, TooFewPoints
from p4p.geometry import CorrespondenceSet, pose_errors
from p4p.horn import horn_align
from p4p.pipeline import (
    PipelineConfig,
    Seed,
    UnitedSet,
    sample_seeds,
    solve_pnp,
    solve_seeds,
    unite_seeds,
)
from p4p.refine import lm_refine, reprojection_error
from p4p.solver import solve_p4p
from p4p.synth import gen_pnp_scene


def test_config_defaults_and_validation():
    cfg = PipelineConfig()
    assert cfg.seed_count(5) == 5
    assert cfg.seed_count(100) == 800
    with pytest.raises(ValueError):
        PipelineConfig(residual_threshold=0)
    with pytest.raises(ValueError):
        PipelineConfig(n_seeds=0)


def test_seed_validation():
    assert Seed((3, 1, 2, 0)).indices == (0, 1, 2, 3)
    with pytest.raises(ValueError):
        Seed((0, 0, 1, 2))


def test_sample_seeds_small():
    assert [s.indices for s in sample_seeds(4, PipelineConfig())] == [(0, 1, 2, 3)]
    five = sample_seeds(5, PipelineConfig(n_seeds=10))
    assert len(five) == 5 and len({s.indices for s in five}) == 5
    with pytest.raises(TooFewPoints):
        sample_seeds(3, PipelineConfig())


def test_sample_seeds_deterministic():
    cfg = PipelineConfig(n_seeds=800, seed=42)
    a = [s.indices for s in sample_seeds(100, cfg)]
    b = [s.indices for s in sample_seeds(100, cfg)]
    assert a == b
    assert len(a) == 800 == len(set(a))
    assert all(0 <= i < 100 for s in a for i in s)
    other = [s.indices for s in sample_seeds(100, PipelineConfig(n_seeds=800, seed=43))]
    assert a != other


def test_solve_seeds_noiseless(rng):
    sc = gen_pnp_scene(8, 0.0, rng)
    cfg = PipelineConfig()
    seeds = solve_seeds(sc.correspondences, sample_seeds(8, cfg), cfg)
    assert all(not s.rejected and s.residual < 1e-12 for s in seeds)


def test_single_seed_equals_scalar(rng):
    sc = gen_pnp_scene(4, 0.0, rng)
    cfg = PipelineConfig()
    (seed,) = solve_seeds(sc.correspondences, sample_seeds(4, cfg), cfg)
    ref = solve_p4p(sc.noisy, sc.canvas)
    assert np.allclose(seed.solution.z_orig, ref.z_orig, rtol=1e-12)


def test_mismatched_point_rejects_its_seeds():
    rng = np.random.default_rng(3)
    containing = rejected = 0
    for _ in range(40):
        sc = gen_pnp_scene(8, 0.0, rng, n_outliers=1)
        bad = sc.replaced
        cfg = PipelineConfig(residual_threshold=0.05)
        for s in solve_seeds(sc.correspondences, sample_seeds(8, cfg), cfg):
            if bad in s.indices:
                containing += 1
                rejected += s.rejected
    assert rejected / containing >= 0.95


def _seed(indices, depths, residual=0.0):
    s = Seed(indices)
    s.residual = residual

    class _Sol:
        z_orig = np.array([depths[i] for i in s.indices])

    s.solution = _Sol()
    return s


def test_unite_two_consistent_seeds():
    depths = {i: 3.0 + i for i in range(5)}
    sets = unite_seeds([_seed((0, 1, 2, 3), depths), _seed((1, 2, 3, 4), depths, 1e-3)], PipelineConfig())
    assert len(sets) == 1 and sets[0].members == [0, 1, 2, 3, 4]
    assert sets[0].spread() == 0


def test_unite_disagreeing_seeds():
    good = {i: 3.0 + i for i in range(5)}
    off = dict(good)
    off[2] *= 1.2
    sets = unite_seeds([_seed((0, 1, 2, 3), good), _seed((1, 2, 3, 4), off, 1e-3)], PipelineConfig())
    assert len(sets) == 2


def test_unite_skips_rejected_and_empty():
    assert unite_seeds([], PipelineConfig()) == []
    s = _seed((0, 1, 2, 3), {i: 1.0 for i in range(4)})
    s.rejected = True
    assert unite_seeds([s], PipelineConfig()) == []


def test_united_sets_merge_late():
    depths = {i: 2.0 + 0.1 * i for i in range(8)}
    seeds = [
        _seed((0, 1, 2, 3), depths, 0.0),
        _seed((2, 3, 4, 5), depths, 1e-9),  # only two shared indices: opens a second set
        _seed((1, 2, 3, 4), depths, 2e-9),  # joins the first, which now overlaps the second in {2, 3, 4}
    ]
    sets = unite_seeds(seeds, PipelineConfig())
    assert len(sets) == 1 and sets[0].members == [0, 1, 2, 3, 4, 5]


def test_noiseless_n10_unites_everything(rng):
    sc = gen_pnp_scene(10, 0.0, rng)
    cfg = PipelineConfig()
    seeds = solve_seeds(sc.correspondences, sample_seeds(10, cfg), cfg)
    sets = unite_seeds(seeds, cfg)
    assert sets[0].members == list(range(10))


def test_noiseless_scene(rng):
    for _ in range(20):
        sc = gen_pnp_scene(8, 0.0, rng)
        res = solve_pnp(sc.correspondences)
        rot, trans = pose_errors(res.pose, sc.truth)
        assert rot <= 1e-5 and trans <= 1e-7
        assert res.inliers == list(range(8))


def test_four_points_collapse_to_horn(rng):
    sc = gen_pnp_scene(4, 0.0, rng)
    res = solve_pnp(sc.correspondences)
    sol = solve_p4p(sc.noisy, sc.canvas)
    horn, _ = horn_align(sc.noisy, sol.points())
    rot, trans = pose_errors(res.pose, horn)
    assert rot < 1e-6 and trans < 1e-8


def test_outliers_are_excluded(rng):
    for _ in range(10):
        sc = gen_pnp_scene(12, 0.0, rng, n_outliers=2)
        res = solve_pnp(sc.correspondences)
        assert len(res.inliers) >= 10
        assert pose_errors(res.pose, sc.truth)[0] < 1e-5


def test_all_mismatched_is_rejected():
    rng = np.random.default_rng(11)
    rejected = 0
    for _ in range(100):
        sc = gen_pnp_scene(8, 0.0, rng)
        corr = CorrespondenceSet(rng.uniform(-1, 1, (8, 3)), sc.canvas)
        try:
            solve_pnp(corr, PipelineConfig(residual_threshold=0.05))
        except NoViableSeeds as exc:
            assert exc.min_residual > 0.05 and exc.n_seeds == PipelineConfig().seed_count(8)
            rejected += 1
    assert rejected >= 80


def test_rejection_soundness_and_ordering(rng):
    sc = gen_pnp_scene(10, 0.01, rng, n_outliers=2)
    cfg = PipelineConfig()
    res = solve_pnp(sc.correspondences, cfg)
    for u in res.report.united:
        assert all(s.residual <= cfg.residual_threshold and not s.rejected for s in u.seeds)
    # Horn ran on united sets only, at most max_candidates_for_horn of them
    assert len(res.report.candidates) <= min(len(res.report.united), cfg.max_candidates_for_horn)
    assert res.report.n_accepted <= res.report.n_seeds
    assert set(res.report.timings) >= {"reduce", "unite", "align_refine"}


def test_determinism(rng):
    sc = gen_pnp_scene(15, 0.005, rng, n_outliers=3)
    a = solve_pnp(sc.correspondences, PipelineConfig(seed=5))
    b = solve_pnp(sc.correspondences, PipelineConfig(seed=5))
    assert np.array_equal(a.pose.rotation, b.pose.rotation)
    assert a.inliers == b.inliers
    assert [u.members for u in a.report.united] == [u.members for u in b.report.united]


def test_uniting_beats_single_seeds():
    """Median all-point error of the united pose vs. the best refined single seed."""
    rng = np.random.default_rng(2024)
    united, single = [], []
    for _ in range(100):
        sc = gen_pnp_scene(10, 0.01, rng)
        corr = sc.correspondences
        cfg = PipelineConfig()
        try:
            res = solve_pnp(corr, cfg)
        except NoViableSeeds:
            continue
        united.append(reprojection_error(res.pose, corr))
        best = math.inf
        for s in res.report.united[0].seeds:
            idx = list(s.indices)
            pose, _ = horn_align(corr.world[idx], s.solution.points())
            refined = lm_refine(pose, corr.subset(idx), cfg.lm)
            best = min(best, reprojection_error(refined.pose, corr))
        single.append(best)
    assert len(united) >= 90
    assert np.median(united) <= np.median(single)


def test_too_few_points():
    with pytest.raises(TooFewPoints):
        solve_pnp(CorrespondenceSet(np.eye(3), np.zeros((3, 2))))


def test_result_unpacks(rng):
    sc = gen_pnp_scene(6, 0.0, rng)
    pose, inliers, report = solve_pnp(sc.correspondences)
    assert isinstance(report.united[0], UnitedSet)
    assert len(inliers) == 6
