"""Compiled batch kernels (numba) for the four-point reduction and for Horn.

Each kernel walks a batch in a flat loop with no Python objects inside; the
arithmetic follows :mod:`p4p.solver` and :mod:`p4p.horn` step for step, so
results agree with the numpy paths to rounding.
"""

from __future__ import annotations

import math

import numba
import numpy as np

from . import _kernels
from .quadratics import DISC_RTOL, LINEAR_RTOL
from .coords import ANCHOR_EPS
from .solver import ALPHA_RTOL, DEGENERATE_RTOL, BatchSolution, BatchStatus

_row0 = numba.njit(cache=True, error_model="numpy")(_kernels.row0)
_row3 = numba.njit(cache=True, error_model="numpy")(_kernels.row3)

_OK = int(BatchStatus.OK)
_DEGENERATE = int(BatchStatus.DEGENERATE_INPUT)
_ORTHOGONAL = int(BatchStatus.ORTHOGONAL_TO_ANCHOR)
_NO_CANDIDATES = int(BatchStatus.NO_CANDIDATES)


@numba.njit(cache=True, error_model="numpy")
def _solve_row(x0, x1, x2, out):
    """Roots into ``out[0:2]`` (NaN when absent); mirrors ``quadratics.solve_row``."""
    out[0] = np.nan
    out[1] = np.nan
    scale = max(abs(x0), abs(x1), abs(x2))
    if not math.isfinite(scale) or scale == 0.0:
        return
    x0, x1, x2 = x0 / scale, x1 / scale, x2 / scale
    if abs(x2) < LINEAR_RTOL * max(abs(x1), abs(x0)):
        if x1 != 0.0:
            out[0] = -x0 / x1
        return
    disc = x1 * x1 - 4.0 * x2 * x0
    if disc < -DISC_RTOL * x1 * x1:
        return
    if disc <= 0.0:
        out[0] = -x1 / (2.0 * x2)
        return
    q = -0.5 * (x1 + math.copysign(math.sqrt(disc), x1))
    r1 = q / x2
    r2 = x0 / q
    out[0] = max(r1, r2)
    out[1] = min(r1, r2)


@numba.njit(cache=True, error_model="numpy")
def _better(res, z, best_res, best_z):
    if res != best_res:
        return res < best_res
    if z[3] != best_z[3]:
        return z[3] > best_z[3]
    for i in range(3):
        if z[i] != best_z[i]:
            return z[i] < best_z[i]
    return False


@numba.njit(cache=True, error_model="numpy")
def p4p_kernel(P, L, z_orig, z_rot, res_out, scale_out, status):
    J = (1, 2, 0)
    K = (2, 0, 1)
    n = P.shape[0]
    a = np.empty(3)
    b = np.empty(3)
    c = np.empty(3)
    d = np.empty(3)
    dots = np.empty(3)
    X = np.empty((4, 3))
    roots = np.empty((4, 2))
    z = np.empty(4)
    best = np.empty(4)
    for m in range(n):
        # invariant coordinates
        for i in range(3):
            j, k = J[i], K[i]
            c[i] = 0.0
            a[i] = 0.0
            for e in range(3):
                c[i] += (P[m, i, e] - P[m, 3, e]) ** 2
                a[i] += (P[m, j, e] - P[m, k, e]) ** 2
        top = max(max(c[0], c[1]), max(c[2], max(a[0], max(a[1], a[2]))))
        low = min(min(c[0], c[1]), min(c[2], min(a[0], min(a[1], a[2]))))
        s = c[0] + c[1] + c[2] + a[0] + a[1] + a[2]
        scale_out[m] = s * s / 36
        n3 = L[m, 3, 0] * L[m, 3, 0] + L[m, 3, 1] * L[m, 3, 1] + L[m, 3, 2] * L[m, 3, 2]
        anchor_ok = True
        for i in range(3):
            sq = L[m, i, 0] * L[m, i, 0] + L[m, i, 1] * L[m, i, 1] + L[m, i, 2] * L[m, i, 2]
            dots[i] = L[m, i, 0] * L[m, 3, 0] + L[m, i, 1] * L[m, 3, 1] + L[m, i, 2] * L[m, 3, 2]
            if not abs(dots[i]) > ANCHOR_EPS * math.sqrt(sq * n3):
                anchor_ok = False
            b[i] = sq * n3 / (dots[i] * dots[i])
        if not (top > 0 and low > DEGENERATE_RTOL * top):
            status[m] = _DEGENERATE
        elif not anchor_ok:
            status[m] = _ORTHOGONAL
        else:
            status[m] = _OK
        if status[m] != _OK:
            res_out[m] = np.inf
            for i in range(4):
                z_orig[m, i] = np.nan
                z_rot[m, i] = np.nan
            continue
        for i in range(3):
            j, k = J[i], K[i]
            cross = L[m, j, 0] * L[m, k, 0] + L[m, j, 1] * L[m, k, 1] + L[m, j, 2] * L[m, k, 2]
            d[i] = cross * n3 / (dots[j] * dots[k])

        # quadratic coefficients; rows 1 and 2 by index transposition
        X[0, 0], X[0, 1], X[0, 2] = _row0(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2], d[0], d[1], d[2])
        X[1, 0], X[1, 1], X[1, 2] = _row0(a[1], a[0], a[2], b[1], b[0], b[2], c[1], c[0], c[2], d[1], d[0], d[2])
        X[2, 0], X[2, 1], X[2, 2] = _row0(a[2], a[1], a[0], b[2], b[1], b[0], c[2], c[1], c[0], d[2], d[1], d[0])
        X[3, 0], X[3, 1], X[3, 2] = _row3(a[0], a[1], a[2], b[0], b[1], b[2], c[0], c[1], c[2], d[0], d[1], d[2])
        for i in range(4):
            _solve_row(X[i, 0], X[i, 1], X[i, 2], roots[i])

        # enumerate the 16 root combinations
        best_res = np.inf
        for i in range(4):
            best[i] = 0.0
        for combo in range(16):
            valid = True
            for i in range(4):
                r = roots[i, (combo >> i) & 1]
                mag = 0.0
                for slot in range(2):
                    if not math.isnan(roots[i, slot]):
                        mag = max(mag, abs(roots[i, slot]))
                if math.isnan(r):
                    valid = False
                    break
                if r < 0:
                    if r >= -ALPHA_RTOL * mag:
                        r = 0.0
                    else:
                        valid = False
                        break
                z[i] = math.sqrt(r)
            if not valid:
                continue
            for i in range(3):
                if dots[i] < 0:
                    z[i] = -z[i]
            total = 0.0
            for i in range(3):
                j, k = J[i], K[i]
                ea = b[j] * z[j] * z[j] + b[k] * z[k] * z[k] - 2 * d[i] * z[j] * z[k] - a[i]
                ec = z[3] * z[3] + b[i] * z[i] * z[i] - 2 * z[i] * z[3] - c[i]
                total += ea * ea + ec * ec
            if _better(total, z, best_res, best):
                best_res = total
                for i in range(4):
                    best[i] = z[i]
        if not best_res < np.inf:
            status[m] = _NO_CANDIDATES
            res_out[m] = np.inf
            for i in range(4):
                z_orig[m, i] = np.nan
                z_rot[m, i] = np.nan
            continue
        res_out[m] = best_res
        norm3 = math.sqrt(n3)
        for i in range(3):
            z_rot[m, i] = best[i]
            z_orig[m, i] = norm3 / dots[i] * best[i]
        z_rot[m, 3] = best[3]
        z_orig[m, 3] = norm3 / n3 * best[3]


def solve_p4p_batch_compiled(world, canvas) -> BatchSolution:
    """Compiled equivalent of :func:`p4p.solver.solve_p4p_batch` (double precision)."""
    P = np.ascontiguousarray(world, dtype=np.float64).reshape(-1, 4, 3)
    p = np.asarray(canvas, dtype=np.float64)
    if p.shape[-1] == 2:
        L = np.concatenate([p, np.ones(p.shape[:-1] + (1,))], axis=-1)
    else:
        L = p
    L = np.ascontiguousarray(L).reshape(-1, 4, 3)
    n = len(P)
    z_orig = np.empty((n, 4))
    z_rot = np.empty((n, 4))
    res = np.empty(n)
    scale = np.empty(n)
    status = np.empty(n, dtype=np.int8)
    p4p_kernel(P, L, z_orig, z_rot, res, scale, status)
    return BatchSolution(z_orig, z_rot, res, scale, status, L)


@numba.njit(cache=True, error_model="numpy")
def horn_kernel(S, T, q_out, t_out, rms_out):
    n, k = S.shape[0], S.shape[1]
    Nm = np.empty((4, 4))
    M = np.empty((3, 3))
    R = np.empty((3, 3))
    sb = np.empty(3)
    tb = np.empty(3)
    for m in range(n):
        finite = True
        for i in range(k):
            for e in range(3):
                if not (math.isfinite(S[m, i, e]) and math.isfinite(T[m, i, e])):
                    finite = False
        if not finite:
            for e in range(4):
                q_out[m, e] = np.nan
            for e in range(3):
                t_out[m, e] = np.nan
            rms_out[m] = np.nan
            continue
        for e in range(3):
            sb[e] = 0.0
            tb[e] = 0.0
            for i in range(k):
                sb[e] += S[m, i, e]
                tb[e] += T[m, i, e]
            sb[e] /= k
            tb[e] /= k
        for r in range(3):
            for s in range(3):
                acc = 0.0
                for i in range(k):
                    acc += (S[m, i, r] - sb[r]) * (T[m, i, s] - tb[s])
                M[r, s] = acc
        Sxx, Sxy, Sxz = M[0, 0], M[0, 1], M[0, 2]
        Syx, Syy, Syz = M[1, 0], M[1, 1], M[1, 2]
        Szx, Szy, Szz = M[2, 0], M[2, 1], M[2, 2]
        Nm[0, 0] = Sxx + Syy + Szz
        Nm[0, 1] = Nm[1, 0] = Syz - Szy
        Nm[0, 2] = Nm[2, 0] = Szx - Sxz
        Nm[0, 3] = Nm[3, 0] = Sxy - Syx
        Nm[1, 1] = Sxx - Syy - Szz
        Nm[1, 2] = Nm[2, 1] = Sxy + Syx
        Nm[1, 3] = Nm[3, 1] = Szx + Sxz
        Nm[2, 2] = -Sxx + Syy - Szz
        Nm[2, 3] = Nm[3, 2] = Syz + Szy
        Nm[3, 3] = -Sxx - Syy + Szz
        _, vecs = np.linalg.eigh(Nm)
        w, x, y, z = vecs[0, 3], vecs[1, 3], vecs[2, 3], vecs[3, 3]
        if w < 0:
            w, x, y, z = -w, -x, -y, -z
        q_out[m, 0], q_out[m, 1], q_out[m, 2], q_out[m, 3] = w, x, y, z
        R[0, 0] = 1 - 2 * (y * y + z * z)
        R[0, 1] = 2 * (x * y - w * z)
        R[0, 2] = 2 * (x * z + w * y)
        R[1, 0] = 2 * (x * y + w * z)
        R[1, 1] = 1 - 2 * (x * x + z * z)
        R[1, 2] = 2 * (y * z - w * x)
        R[2, 0] = 2 * (x * z - w * y)
        R[2, 1] = 2 * (y * z + w * x)
        R[2, 2] = 1 - 2 * (x * x + y * y)
        for r in range(3):
            t_out[m, r] = tb[r] - (R[r, 0] * sb[0] + R[r, 1] * sb[1] + R[r, 2] * sb[2])
        acc = 0.0
        for i in range(k):
            for r in range(3):
                v = R[r, 0] * S[m, i, 0] + R[r, 1] * S[m, i, 1] + R[r, 2] * S[m, i, 2] + t_out[m, r] - T[m, i, r]
                acc += v * v
        rms_out[m] = math.sqrt(acc / k)


def horn_align_batch_compiled(source, target):
    """Compiled :func:`p4p.horn.horn_align_batch` for finite inputs."""
    S = np.ascontiguousarray(source, dtype=np.float64)
    T = np.ascontiguousarray(target, dtype=np.float64)
    n = len(S)
    q = np.empty((n, 4))
    t = np.empty((n, 3))
    rms = np.empty(n)
    horn_kernel(S, T, q, t, rms)
    return q, t, rms
