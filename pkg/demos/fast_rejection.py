"""How often the residual test alone discards a quadruple with one wrong match.

After projection one 3D point is swapped for a fresh draw, so the four
correspondences no longer come from a single pose. No pose is ever computed.

Run with ``python3 demos/fast_rejection.py [trials]``.
"""

import sys

from p4p.synth import ScenarioKind, run_rejection_sweep

trials = int(sys.argv[1]) if len(sys.argv) > 1 else 10000
rows = run_rejection_sweep(list(ScenarioKind), [0.0, 0.01], trials, [0.05, 0.1, 1.0], seed=0)
print(f"{'kind':16s} {'noise':>6s} {'threshold':>9s} {'rejected':>9s}")
for r in rows:
    print(f"{r.kind:16s} {r.noise:6.3f} {r.threshold:9.2f} {100 * r.rejection_rate:8.2f}%")
