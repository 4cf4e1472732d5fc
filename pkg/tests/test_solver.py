from fractions import Fraction as F

import numpy as np
import pytest
from conftest import EXAMPLE_A, EXAMPLE_B, EXAMPLE_C, EXAMPLE_CANVAS, EXAMPLE_D, EXAMPLE_RAYS, EXAMPLE_WORLD, EXAMPLE_Z, EXAMPLE_Z_ORIG, general_position, rotated_depths
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from p4p.coords import CoordVector, coord_vector, line_dots
from p4p.errors import DegenerateInput, NoCandidates, OrthogonalToAnchor
from p4p.geometry import lift
from p4p.solver import (
    BatchStatus,
    DepthQuadruple,
    best_depths,
    candidate_depths,
    rescale_depths,
    residual,
    solve_p4p,
    solve_p4p_batch,
)
from p4p.synth import ScenarioKind, gen_batch

EXAMPLE_CV = CoordVector(
    np.array(EXAMPLE_A, float), np.array([float(x) for x in EXAMPLE_B]),
    np.array(EXAMPLE_C, float), np.array([float(x) for x in EXAMPLE_D]),
)


def _exact_residual(z):
    # the six incidence equations in exact arithmetic
    a, b, c, d = EXAMPLE_A, EXAMPLE_B, EXAMPLE_C, EXAMPLE_D
    total = F(0)
    for i in range(3):
        j, k = (i + 1) % 3, (i + 2) % 3
        total += (b[j] * z[j] ** 2 + b[k] * z[k] ** 2 - 2 * d[i] * z[j] * z[k] - a[i]) ** 2
        total += (z[3] ** 2 + b[i] * z[i] ** 2 - 2 * z[i] * z[3] - c[i]) ** 2
    return total


def test_example_residual():
    assert _exact_residual(EXAMPLE_Z) == 0
    assert residual(EXAMPLE_CV, np.array([float(x) for x in EXAMPLE_Z])) <= 1e-18
    flipped = np.array([-1, 5 / 3, 4 / 3, 3])
    assert residual(EXAMPLE_CV, flipped) > 1
    assert _exact_residual((-1, *EXAMPLE_Z[1:])) > 0


def test_residual_matches_direct_evaluation(rng):
    for _ in range(50):
        v = rng.uniform(0.2, 3, 12)
        z = rng.normal(size=4)
        cv = CoordVector.from_array(v)
        a, b, c, d = v[0:3], v[3:6], v[6:9], v[9:12]
        ref = 0.0
        for i in range(3):
            j, k = (i + 1) % 3, (i + 2) % 3
            ref += (b[j] * z[j] ** 2 + b[k] * z[k] ** 2 - 2 * d[i] * z[j] * z[k] - a[i]) ** 2
            ref += (z[3] ** 2 + b[i] * z[i] ** 2 - 2 * z[i] * z[3] - c[i]) ** 2
        assert residual(cv, z) == pytest.approx(ref, rel=1e-12)


@settings(max_examples=200)
@given(arrays(np.float64, 12, elements=st.floats(-5, 5)), arrays(np.float64, 4, elements=st.floats(-5, 5)))
def test_residual_sign_change_invariance(v, z):
    cv = CoordVector.from_array(v)
    assert residual(cv, z) == residual(cv, -z)


def test_example_candidates_and_best():
    cands = candidate_depths(EXAMPLE_CV, [1, 1, 1])
    assert 1 <= len(cands) <= 16
    truth = np.array([float(x) for x in EXAMPLE_Z])
    assert any(np.allclose(q.z, truth, rtol=1e-12) for q in cands)
    best = best_depths(EXAMPLE_CV, [1, 1, 1])
    assert np.allclose(best.z, truth, rtol=1e-12)
    assert best.residual < 1e-20


def test_example_rescale(example):
    _, canvas = example
    best = DepthQuadruple(np.array([float(x) for x in EXAMPLE_Z]), 0.0)
    sol = rescale_depths(best, canvas)
    assert np.allclose(sol.z_orig, [float(x) for x in EXAMPLE_Z_ORIG], rtol=1e-14)
    # exact version of the same formula
    lines = [(u, v, F(1)) for u, v in EXAMPLE_CANVAS]
    n3sq = sum(x * x for x in lines[3])
    for i in range(3):
        dot = sum(x * y for x, y in zip(lines[i], lines[3]))
        # |p3| z_i / dot, squared to stay rational
        assert (n3sq * EXAMPLE_Z[i] ** 2 / dot**2) == EXAMPLE_Z_ORIG[i] ** 2
    assert EXAMPLE_Z[3] ** 2 / n3sq == EXAMPLE_Z_ORIG[3] ** 2
    # and the rescaled points are the documented rays
    for zo, (u, v, _), ray in zip(EXAMPLE_Z_ORIG, lines, EXAMPLE_RAYS):
        assert (zo * u, zo * v, zo) == ray


def test_rescale_on_axis_anchor():
    canvas = np.array([[0.2, 0.1], [-0.3, 0.4], [0.5, -0.5], [0.0, 0.0]])
    z = DepthQuadruple(np.array([1.0, 2.0, 3.0, 4.0]), 0.0)
    assert np.allclose(rescale_depths(z, canvas).z_orig, z.z)


def test_rescale_errors():
    canvas = np.array([[0.2, 0.1], [-1.0, 0.4], [0.5, -0.5], [1.0, 0.0]])
    with pytest.raises(OrthogonalToAnchor):
        rescale_depths(DepthQuadruple(np.ones(4), 0.0), canvas)
    with pytest.raises(ValueError):
        rescale_depths(DepthQuadruple(np.array([1, 1, 1, 0.0]), 0.0), np.zeros((4, 2)))


def test_solve_example(example):
    world, canvas = example
    sol = solve_p4p(world, canvas)
    assert np.allclose(sol.z_orig, [float(x) for x in EXAMPLE_Z_ORIG], rtol=1e-12)
    assert sol.residual < 1e-20
    pts = sol.points()
    assert np.allclose(pts, [[float(x) for x in r] for r in EXAMPLE_RAYS], rtol=1e-12)


def test_solve_errors(example):
    world, canvas = example
    with pytest.raises(DegenerateInput):
        solve_p4p(np.zeros((4, 3)), canvas)
    bad = canvas.copy()
    bad[3] = (1.0, 0.0)
    bad[0] = (-1.0, 0.5)
    with pytest.raises(OrthogonalToAnchor):
        solve_p4p(world, bad)


def test_no_candidates():
    # every row of an all-ones coord vector is degenerate
    with pytest.raises(NoCandidates):
        candidate_depths(CoordVector.from_array(np.zeros(12)), [1, 1, 1])


def _distance_error(sol, world):
    pts = sol.points() if hasattr(sol, "points") else sol
    D1 = np.linalg.norm(pts[:, None] - pts[None], axis=-1)
    D2 = np.linalg.norm(world[:, None] - world[None], axis=-1)
    return np.max(np.abs(D1 - D2)) / np.max(D2)


def test_noiseless_correctness(rng):
    batch = gen_batch(ScenarioKind.GENERAL, 0.0, 2000, rng)
    keep = np.flatnonzero(general_position(batch.world))[:1000]
    assert len(keep) == 1000
    batch = type(batch)(batch.kind, 0.0, *(x[keep] for x in (batch.base, batch.world, batch.noisy, batch.canvas, batch.replaced)))
    truth_depth = batch.world[..., 2] + 2.5
    zbar = rotated_depths(batch.world, batch.canvas)
    closest = []
    for k in range(len(batch)):
        sol = solve_p4p(batch.noisy[k], batch.canvas[k])
        cv = coord_vector(batch.noisy[k], batch.canvas[k])
        scale = (cv.a.sum() + cv.c.sum()) ** 2
        assert sol.residual <= 1e-10 * scale
        assert _distance_error(sol, batch.world[k]) <= 1e-6
        assert np.allclose(sol.z_orig, truth_depth[k], rtol=1e-6)
        assert np.all(sol.z_orig > 0)
        # the ground truth is among the candidates
        signs = np.sign(line_dots(lift(batch.canvas[k]))[2])
        cands = candidate_depths(cv, signs)
        closest.append(min(np.max(np.abs(q.z / zbar[k] - 1)) for q in cands))
    # a handful of nearly-double roots lose a few digits
    closest = np.array(closest)
    assert np.mean(closest <= 1e-7) >= 0.99
    assert np.all(closest <= 1e-6)


def test_sign_soundness(rng):
    batch = gen_batch(ScenarioKind.GENERAL, 0.01, 2000, rng)
    sol = solve_p4p_batch(batch.noisy, batch.canvas)
    ok = sol.accepted(1.0)
    assert ok.sum() > 1000
    assert np.all(sol.z_orig[ok] > 0)


def test_residual_grows_with_noise():
    medians = []
    for noise in (0.0, 0.005, 0.01, 0.02):
        batch = gen_batch(ScenarioKind.GENERAL, noise, 1000, np.random.default_rng(7))
        medians.append(np.median(solve_p4p_batch(batch.noisy, batch.canvas).residual))
    assert medians == sorted(medians)


def test_mismatch_residual_large(rng):
    batch = gen_batch(ScenarioKind.GENERAL, 0.0, 2000, rng, mismatch=True)
    sol = solve_p4p_batch(batch.noisy, batch.canvas)
    assert np.mean(~sol.accepted(0.05)) >= 0.95


def test_batch_matches_scalar(rng):
    batch = gen_batch(ScenarioKind.GENERAL, 0.01, 10_000, rng, mismatch=False)
    # include some mismatches and degenerate rows
    mixed = gen_batch(ScenarioKind.PLANAR, 0.0, 200, rng, mismatch=True)
    world = np.concatenate([batch.noisy, mixed.noisy, np.zeros((1, 4, 3))])
    canvas = np.concatenate([batch.canvas, mixed.canvas, mixed.canvas[:1]])
    sol = solve_p4p_batch(world, canvas)
    results = sol.results()
    assert sol.status[-1] == BatchStatus.DEGENERATE_INPUT
    for k in range(0, len(world), 7):
        try:
            ref = solve_p4p(world[k], canvas[k])
        except (DegenerateInput, NoCandidates, OrthogonalToAnchor) as exc:
            assert isinstance(results[k], type(exc))
            continue
        assert sol.status[k] == BatchStatus.OK
        assert np.allclose(sol.z_orig[k], ref.z_orig, rtol=1e-12, atol=0)
        assert sol.residual[k] == pytest.approx(ref.residual, rel=1e-9, abs=1e-24)
        assert (sol.residual[k] <= 0.05) == (ref.residual <= 0.05)


def test_batch_edge_cases(example):
    world, canvas = example
    one = solve_p4p_batch(world[None], canvas[None])
    ref = solve_p4p(world, canvas)
    assert np.allclose(one.z_orig[0], ref.z_orig)
    empty = solve_p4p_batch(np.zeros((0, 4, 3)), np.zeros((0, 4, 2)))
    assert len(empty) == 0 and empty.results() == []


def test_single_precision_path(example):
    world, canvas = example
    sol = solve_p4p_batch(world[None], canvas[None], dtype=np.float32)
    assert sol.z_orig.dtype == np.float32
    assert np.allclose(sol.z_orig[0], [float(x) for x in EXAMPLE_Z_ORIG], rtol=1e-4)


def test_world_is_rigid_image_of_example():
    world = np.array(EXAMPLE_WORLD, float)
    rays = np.array([[float(x) for x in r] for r in EXAMPLE_RAYS])
    assert _distance_error(rays, world) < 1e-14
