"""Quadratics ``Q_i(x) = X_i2 x^2 + X_i1 x + X_i0`` whose roots are the squared depths.

Rows 0 and 3 come straight from the generated Horner kernels. Rows 1 and 2
reuse the row-0 kernel on coordinates with indices 0<->1 (resp. 0<->2)
swapped. Rows are only meaningful up to a common scalar factor.
"""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .coords import CoordVector
from .errors import NoRealRoots

DISC_RTOL = 1e-9
LINEAR_RTOL = 1e-12


class RootStatus(enum.IntEnum):
    TWO_REAL = 0
    DOUBLE = 1
    NONE = 2
    LINEAR_FALLBACK = 3


@dataclass(frozen=True, eq=False)
class QuadraticCoeffs:
    """Coefficient matrix ``X[..., i, j]``: row ``i`` is the depth, column ``j`` the power of x."""

    X: np.ndarray

    def row(self, i: int) -> np.ndarray:
        return self.X[..., i, :]

    def evaluate(self, x) -> np.ndarray:
        """``Q_i(x_i)`` for each row; ``x`` has shape ``(..., 4)``."""
        x = np.asarray(x)
        return self.X[..., 0] + x * (self.X[..., 1] + x * self.X[..., 2])


@dataclass(frozen=True)
class RootPair:
    """Roots of one row in descending order, as values of ``x = z^2``."""

    roots: tuple[float, ...]
    status: RootStatus

    @property
    def negative(self) -> tuple[bool, ...]:
        """Per-root flag: a negative root cannot come from a real depth."""
        return tuple(r < 0 for r in self.roots)


def eval_X_row0(coords: CoordVector):
    return _kernels.row0(*coords.columns())


def eval_X_row3(coords: CoordVector):
    return _kernels.row3(*coords.columns())


def eval_all_X(coords: CoordVector) -> QuadraticCoeffs:
    rows = [
        eval_X_row0(coords),
        eval_X_row0(coords.transposed(0, 1)),
        eval_X_row0(coords.transposed(0, 2)),
        eval_X_row3(coords),
    ]
    X = np.stack([np.stack(np.broadcast_arrays(*r), axis=-1) for r in rows], axis=-2)
    return QuadraticCoeffs(X)


def solve_row(row) -> RootPair:
    """Real roots of ``X2 x^2 + X1 x + X0`` for ``row = (X0, X1, X2)``.

    The row is normalized by its largest coefficient. A discriminant in
    ``[-1e-9 X1^2, 0)`` is clamped to a double root; below that the row has
    no real roots. A vanishing leading coefficient (below 1e-12 of the
    others) falls back to the linear root ``-X0 / X1``.

    Raises:
        NoRealRoots: for a clearly negative discriminant or an all-zero row.
    """
    x0, x1, x2 = (float(v) for v in row)
    scale = max(abs(x0), abs(x1), abs(x2))
    if not math.isfinite(scale) or scale == 0.0:
        raise NoRealRoots(f"degenerate row {row!r}")
    x0, x1, x2 = x0 / scale, x1 / scale, x2 / scale
    if abs(x2) < LINEAR_RTOL * max(abs(x1), abs(x0)):
        if x1 == 0.0:
            raise NoRealRoots(f"constant row {row!r}")
        return RootPair((-x0 / x1,), RootStatus.LINEAR_FALLBACK)
    disc = x1 * x1 - 4.0 * x2 * x0
    if disc < -DISC_RTOL * x1 * x1:
        raise NoRealRoots(f"negative discriminant {disc:.3g}")
    if disc <= 0.0:
        return RootPair((-x1 / (2.0 * x2),), RootStatus.DOUBLE)
    q = -0.5 * (x1 + math.copysign(math.sqrt(disc), x1))
    r1, r2 = q / x2, x0 / q
    return RootPair((max(r1, r2), min(r1, r2)), RootStatus.TWO_REAL)


def solve_rows(X: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Vectorized :func:`solve_row` over rows ``X[..., 3]``.

    Returns ``(roots, status)``: ``roots[..., 2]`` in descending order with
    NaN where a root is absent (a double or linear root fills slot 0 only).
    The arithmetic mirrors :func:`solve_row` operation for operation.
    """
    X = np.asarray(X)
    scale = np.max(np.abs(X), axis=-1)
    good = np.isfinite(scale) & (scale > 0)
    s = np.where(good, scale, 1)
    x0, x1, x2 = X[..., 0] / s, X[..., 1] / s, X[..., 2] / s
    linear = np.abs(x2) < LINEAR_RTOL * np.maximum(np.abs(x1), np.abs(x0))
    disc = x1 * x1 - 4 * x2 * x0
    none = disc < -DISC_RTOL * x1 * x1
    double = ~none & (disc <= 0)
    root = np.sqrt(np.where(double | none, 0, disc))
    q = -0.5 * (x1 + np.copysign(root, x1))
    with np.errstate(divide="ignore", invalid="ignore"):
        r1 = q / x2
        r2 = x0 / q
        r_double = -x1 / (2 * x2)
        r_lin = -x0 / x1
    hi = np.where(double, r_double, np.maximum(r1, r2))
    lo = np.where(double, np.nan, np.minimum(r1, r2))
    hi = np.where(linear, r_lin, hi)
    lo = np.where(linear, np.nan, lo)
    status = np.where(double, RootStatus.DOUBLE, RootStatus.TWO_REAL)
    status = np.where(none, RootStatus.NONE, status)
    lin_ok = linear & (x1 != 0)
    status = np.where(linear, np.where(lin_ok, RootStatus.LINEAR_FALLBACK, RootStatus.NONE), status)
    status = np.where(good, status, RootStatus.NONE)
    dead = status == RootStatus.NONE
    hi = np.where(dead, np.nan, hi)
    lo = np.where(dead, np.nan, lo)
    return np.stack([hi, lo], axis=-1), status
