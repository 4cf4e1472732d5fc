"""Exception types raised by the solver stack."""

from __future__ import annotations


class P4PError(Exception):
    """Base class for all solver errors."""


class DegenerateProjection(P4PError):
    """A point sits (numerically) on the camera plane z = 0."""


class OrthogonalToAnchor(P4PError):
    """Canvas line ``index`` is orthogonal to the anchor line (index 3)."""

    def __init__(self, index: int):
        super().__init__(f"canvas line {index} is orthogonal to the anchor line")
        self.index = index


class NoRealRoots(P4PError):
    """A quadratic row has a clearly negative discriminant."""


class NoCandidates(P4PError):
    """No admissible depth quadruple could be formed."""


class DegenerateInput(P4PError):
    """Repeated 3D points in a four-point problem."""


class DegenerateAlignment(P4PError):
    """Source points are coincident or collinear, so the rotation is ambiguous."""


class SingularNormalEquations(P4PError):
    """Damped normal equations could not be solved even at maximal damping."""


class TooFewPoints(P4PError):
    """Fewer than four correspondences."""


class NoViableSeeds(P4PError):
    """Every seed was rejected by the residual threshold.

    This is the pipeline's fast-rejection outcome, not a malfunction.
    """

    def __init__(self, min_residual: float, n_seeds: int):
        super().__init__(
            f"all {n_seeds} seeds rejected (smallest residual {min_residual:.6g})"
        )
        self.min_residual = min_residual
        self.n_seeds = n_seeds
