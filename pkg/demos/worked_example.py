"""Walk the four-point reduction through a small example with rational answers.

Run with ``python3 demos/worked_example.py``.
"""

import numpy as np

from p4p import horn_align, solve_p4p
from p4p.coords import coord_vector
from p4p.geometry import apply_pose
from p4p.quadratics import eval_all_X

world = np.array([[0, 0, 0], [1, 0, 0], [1, 1, 0], [0, 0, 3]], dtype=float)
canvas = np.array([[2, 1], [17 / 13, 9 / 13], [11 / 15, 4 / 5], [1 / 2, -11 / 16]])

cv = coord_vector(world, canvas)
print("invariant coordinates")
for name in "abcd":
    print(f"  {name} = {np.round(getattr(cv, name), 12)}")

X = eval_all_X(cv)
print("\nquadratic coefficients in z^2 (constant, linear, square)")
for i in range(4):
    print(f"  Q{i}: {X.row(i)}")

sol = solve_p4p(world, canvas)
print("\nrotated-frame depths   ", sol.rotated.z, "(expect 1, 5/3, 4/3, 3)")
print("depths along the rays  ", sol.z_orig, "(expect 1, 13/7, 15/7, 16/7)")
print("incidence residual     ", sol.residual)

pose, rms = horn_align(world, sol.points())
print("\nHorn pose: quaternion", pose.rotation, "translation", pose.translation)
print("alignment rms", rms)
print("world points in the camera frame:\n", apply_pose(pose, world) * 7, "/ 7")
