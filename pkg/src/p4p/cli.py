"""Command-line interface: ``p4p solve | experiment | bench | reject``.

Exit codes: 0 on success, 1 on malformed input or bad flags, 2 when the
pipeline rejects the problem (no four-point subset passes the residual test).
"""

from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .errors import NoViableSeeds, P4PError
from .geometry import CorrespondenceSet
from .pipeline import PipelineConfig, solve_pnp
from .synth import REJECTION_HEADER, ScenarioKind, run_rejection_sweep, run_sweep, write_csv

DEFAULT_SEED = 0


class InputError(ValueError):
    pass


def load_problem(path: str) -> CorrespondenceSet:
    """Read ``{"points3d": [[x, y, z], ...], "points2d": [[u, v], ...]}``."""
    try:
        with open(path) as fh:
            doc = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    if not isinstance(doc, dict) or "points3d" not in doc or "points2d" not in doc:
        raise InputError("problem must be an object with 'points3d' and 'points2d'")
    try:
        world = np.array(doc["points3d"], dtype=float)
        image = np.array(doc["points2d"], dtype=float)
    except (TypeError, ValueError) as exc:
        raise InputError(f"points must be numeric arrays: {exc}") from exc
    if world.ndim != 2 or world.shape[1] != 3:
        raise InputError(f"points3d must be a list of [x, y, z], got shape {world.shape}")
    if image.ndim != 2 or image.shape[1] != 2:
        raise InputError(f"points2d must be a list of [u, v], got shape {image.shape}")
    if len(world) != len(image):
        raise InputError(f"{len(world)} 3D points but {len(image)} 2D points")
    if len(world) < 4:
        raise InputError(f"need at least 4 correspondences, got {len(world)}")
    if not (np.all(np.isfinite(world)) and np.all(np.isfinite(image))):
        raise InputError("points must be finite")
    return CorrespondenceSet(world, image)


def _floats(text: str) -> list[float]:
    try:
        vals = [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}")
    if not vals:
        raise argparse.ArgumentTypeError("empty list")
    return vals


def _kinds(text: str) -> list[ScenarioKind]:
    if text.strip().lower() == "all":
        return list(ScenarioKind)
    try:
        return [ScenarioKind.parse(k) for k in text.split(",")]
    except ValueError:
        raise argparse.ArgumentTypeError(f"unknown configuration kind in {text!r}")


def _milli(vals: list[float], milli: bool) -> list[float]:
    return [v / 1000.0 for v in vals] if milli else vals


def cmd_solve(args) -> int:
    try:
        corr = load_problem(args.input)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    cfg = PipelineConfig(
        n_seeds=args.seeds,
        residual_threshold=args.threshold,
        inlier_tolerance=args.inlier_tol,
        normalize_residual=args.normalize_residual,
        seed=args.seed,
    )
    try:
        result = solve_pnp(corr, cfg)
    except NoViableSeeds as exc:
        print(json.dumps({"rejected": True, "min_residual": exc.min_residual}))
        return 2
    except P4PError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    out = {
        "rotation_quat": [float(v) for v in result.pose.rotation],
        "translation": [float(v) for v in result.pose.translation],
        "inliers": result.inliers,
        "reprojection_error": result.reprojection_error,
    }
    print(json.dumps(out))
    return 0


def cmd_experiment(args) -> int:
    rows = run_sweep(args.kind, _milli(args.noise, args.milli), args.trials, args.thresholds,
                     seed=args.seed, precision=args.precision)
    text = write_csv(rows, args.out)
    if args.out is None:
        sys.stdout.write(text)
    return 0


def cmd_bench(args) -> int:
    from .bench import run_bench

    res = run_bench(args.batch_size, args.repeats, args.seed)
    if args.csv:
        print("batch_size,repeats,reduction_us,reduction_horn_us,ratio")
        print(f"{res.batch_size},{res.repeats},{res.reduction_us:.4f},{res.total_us:.4f},{res.ratio:.3f}")
    else:
        print(res.summary())
    return 0


def cmd_reject(args) -> int:
    rows = run_rejection_sweep(args.kind, _milli(args.noise, args.milli), args.trials, args.thresholds,
                               seed=args.seed, precision=args.precision)
    if args.csv:
        sys.stdout.write(write_csv(rows, header=REJECTION_HEADER))
        return 0
    for r in rows:
        print(f"{r.kind:16s} noise {r.noise:<8g} threshold {r.threshold:<6g} "
              f"rejected {r.rejected}/{r.trials} ({100 * r.rejection_rate:.1f}%)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="p4p", description="Four-point pose reduction and n-point pipeline.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("solve", help="estimate a pose from a JSON problem file")
    s.add_argument("input", help="JSON file with points3d and points2d")
    s.add_argument("--threshold", type=float, default=0.1, help="seed residual threshold (default 0.1)")
    s.add_argument("--seeds", type=int, default=None, help="number of 4-subsets (default min(C(n,4), 8n))")
    s.add_argument("--inlier-tol", type=float, default=0.01, help="inlier canvas distance (default 0.01)")
    s.add_argument("--normalize-residual", action="store_true", help="divide residuals by (sum a + sum c)^2 / 36")
    s.add_argument("--seed", type=int, default=DEFAULT_SEED)
    s.set_defaults(func=cmd_solve)

    def sweep_flags(sp, thresholds):
        sp.add_argument("--kind", type=_kinds, default=[ScenarioKind.GENERAL],
                        help="general, planar, three_collinear, a comma list, or all")
        sp.add_argument("--noise", type=_floats, default=[0.0], help="comma-separated noise levels")
        sp.add_argument("--milli", action="store_true", help="noise levels are in thousandths of a unit")
        sp.add_argument("--trials", type=int, default=10000)
        sp.add_argument("--thresholds", type=_floats, default=thresholds)
        sp.add_argument("--precision", choices=["single", "double"], default="double")
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED)

    e = sub.add_parser("experiment", help="accuracy and success-count sweep, CSV output")
    sweep_flags(e, [0.05, 0.1, 1.0])
    e.add_argument("--out", default=None, help="CSV path (default: stdout)")
    e.set_defaults(func=cmd_experiment)

    b = sub.add_parser("bench", help="time the reduction with and without Horn")
    b.add_argument("--batch-size", type=int, default=10000)
    b.add_argument("--repeats", type=int, default=5)
    b.add_argument("--csv", action="store_true")
    b.add_argument("--seed", type=int, default=DEFAULT_SEED)
    b.set_defaults(func=cmd_bench)

    r = sub.add_parser("reject", help="rejection rate on scenarios with one mismatched point")
    sweep_flags(r, [0.05, 0.1])
    r.add_argument("--csv", action="store_true")
    r.set_defaults(func=cmd_reject)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code == 0 else 1
    if getattr(args, "trials", 0) < 0:
        print("error: --trials must be nonnegative", file=sys.stderr)
        return 1
    if args.command == "bench" and (args.batch_size <= 0 or args.repeats <= 0):
        print("error: --batch-size and --repeats must be positive", file=sys.stderr)
        return 1
    try:
        return args.func(args)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
