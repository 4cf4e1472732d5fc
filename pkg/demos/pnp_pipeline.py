"""The n-point pipeline on a scene with wrong matches.

Random 4-subsets are solved in a batch, those with a large residual are
dropped, agreeing ones are united into larger point sets, and only the
best united sets go through Horn alignment and refinement.

Run with ``python3 demos/pnp_pipeline.py``.
"""

import numpy as np

from p4p import PipelineConfig, solve_pnp
from p4p.geometry import pose_errors
from p4p.synth import gen_pnp_scene

rng = np.random.default_rng(7)
scene = gen_pnp_scene(30, noise=0.002, rng=rng, n_outliers=6)
# noise moves a point by exactly 0.002; a replaced point moves much further
outliers = np.flatnonzero(np.linalg.norm(scene.noisy - scene.world, axis=1) > 0.01).tolist()

result = solve_pnp(scene.correspondences, PipelineConfig(seed=1))
rep = result.report
print(f"seeds solved        {rep.n_seeds}")
print(f"seeds accepted      {rep.n_accepted}  (smallest residual {rep.min_residual:.2e})")
print(f"united sets         {len(rep.united)}, largest has {len(rep.united[0])} points")
print(f"candidates aligned  {len(rep.candidates)}")
print(f"inliers             {len(result.inliers)} of 30")
print(f"planted outliers    {outliers}")
print(f"flagged outliers    {sorted(set(range(30)) - set(result.inliers))}")
rot, trans = pose_errors(result.pose, scene.truth)
print(f"pose error          {rot:.4f} deg, {trans * 1000:.3f} milli-units")
print("timings (s)        ", {k: round(v, 4) for k, v in rep.timings.items()})
