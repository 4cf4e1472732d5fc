"""Accuracy and success counts of the four-point reduction as 3D noise grows.

Mirrors the experiment table: four points on the unit sphere, a random rigid
motion, the camera 2.5 units away, and noise added to the 3D points only.

Run with ``python3 demos/noise_sweep.py [trials]``.
"""

import sys

from p4p.synth import ScenarioKind, run_sweep, write_csv

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 2000
noises = [0.0, 0.005, 0.01, 0.02]
for precision in ("single", "double"):
    print(f"# {precision} precision, {trials} trials per cell")
    rows = run_sweep(list(ScenarioKind), noises, trials, [0.05, 0.1, 1.0], seed=0, precision=precision)
    print(write_csv(rows))
