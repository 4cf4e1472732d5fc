"""Perspective-n-point pose estimation built on a closed-form four-point reduction.

The four-point solver maps 3D points and their canvas images to invariant
coordinates, reads the squared depths off four quadratics, and picks the
root combination that best satisfies the incidence equations. Its residual
doubles as a consistency test, so bad correspondences are rejected before
any pose is computed.
"""

from .coords import CoordVector, coord_vector
from .errors import (
    DegenerateAlignment,
    DegenerateInput,
    DegenerateProjection,
    NoCandidates,
    NoRealRoots,
    NoViableSeeds,
    OrthogonalToAnchor,
    P4PError,
    SingularNormalEquations,
    TooFewPoints,
)
from .geometry import CorrespondenceSet, Pose, apply_pose, lift, pose_errors, project
from .horn import horn_align, horn_align_batch
from .pipeline import PipelineConfig, PnPResult, solve_pnp
from .quadratics import QuadraticCoeffs, eval_all_X, solve_row
from .refine import LMConfig, lm_refine, reprojection_error
from .solver import BatchSolution, P4PSolution, residual, solve_p4p, solve_p4p_batch

__version__ = "0.1.0"

__all__ = [
    "BatchSolution", "CoordVector", "CorrespondenceSet", "DegenerateAlignment", "DegenerateInput",
    "DegenerateProjection", "LMConfig", "NoCandidates", "NoRealRoots", "NoViableSeeds",
    "OrthogonalToAnchor", "P4PError", "P4PSolution", "PipelineConfig", "PnPResult", "Pose",
    "QuadraticCoeffs", "SingularNormalEquations", "TooFewPoints", "apply_pose", "coord_vector",
    "eval_all_X", "horn_align", "horn_align_batch", "lift", "lm_refine", "pose_errors", "project",
    "reprojection_error", "residual", "solve_p4p", "solve_p4p_batch", "solve_pnp", "solve_row",
]
