"""Numerical radius by eigenvalue optimisation over rotations.

``w(A) = max_theta lambda_max(Re(e^{i theta} A))``. The maximum is bracketed
on a uniform theta grid and polished with golden-section search; the
witness is the top eigenvector at the best angle.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from .errors import EvaluationError, NormalizationError
from .linalg import as_matrix, cartesian_decompose, hermitianize, operator_norm

__all__ = [
    "RadiusResult", "SupEstimate", "numerical_radius", "numerical_range_sample",
    "sup_unit_sphere", "random_unit_vectors",
]

DEFAULT_GRID = 512
DEFAULT_TOL = 1e-12
MAX_PEAKS = 4
MIN_ANGLE = 1e-10
_GOLD = (np.sqrt(5.0) - 1.0) / 2.0
TWO_PI = 2.0 * np.pi


@dataclass(frozen=True)
class RadiusResult:
    value: float
    argmax_theta: float
    witness_vector: np.ndarray
    grid_size: int
    refinement_residual: float
    norm: float


def _top_eigenvalues(B, C, thetas, both_ends=False):
    """``lambda_max(cos(t) B - sin(t) C)`` for each angle ``t``.

    ``cos(t) B - sin(t) C`` is the Hermitian part of ``e^{it} A``. With
    ``both_ends`` the values at ``t + pi`` come back too, as ``-lambda_min``.
    2x2 blocks use the closed form ``mean + sqrt(half-difference^2 + |h12|^2)``.
    """
    c = np.cos(thetas)[:, None, None]
    s = np.sin(thetas)[:, None, None]
    H = c * B - s * C
    if B.shape[0] == 2:
        h11 = H[:, 0, 0].real
        h22 = H[:, 1, 1].real
        mean = 0.5 * (h11 + h22)
        rad = np.hypot(0.5 * (h11 - h22), np.abs(H[:, 0, 1]))
        top, bottom = mean + rad, mean - rad
    else:
        lam = np.linalg.eigvalsh(H)
        top, bottom = lam[:, -1], lam[:, 0]
    if both_ends:
        return top, -bottom
    return top


def _scalar_top(B, C):
    """Single-angle version of :func:`_top_eigenvalues` returning a float."""
    if B.shape[0] == 2:
        b11, b22, b12 = B[0, 0].real, B[1, 1].real, complex(B[0, 1])
        c11, c22, c12 = C[0, 0].real, C[1, 1].real, complex(C[0, 1])

        def top(t):
            co, si = math.cos(t), math.sin(t)
            h11 = co * b11 - si * c11
            h22 = co * b22 - si * c22
            return 0.5 * (h11 + h22) + math.hypot(0.5 * (h11 - h22), abs(co * b12 - si * c12))
    else:
        def top(t):
            return float(np.linalg.eigvalsh(math.cos(t) * B - math.sin(t) * C)[-1])
    return top


def _golden_max(f, lo, hi, tol):
    """Golden-section search for a maximum of ``f`` on ``[lo, hi]``."""
    c = hi - _GOLD * (hi - lo)
    d = lo + _GOLD * (hi - lo)
    fc, fd = f(c), f(d)
    while hi - lo >= tol:
        if fc >= fd:
            hi, d, fd = d, c, fc
            c = hi - _GOLD * (hi - lo)
            fc = f(c)
        else:
            lo, c, fc = c, d, fd
            d = lo + _GOLD * (hi - lo)
            fd = f(d)
    mid = 0.5 * (lo + hi)
    return mid, f(mid)


def _canonical_phase(x):
    k = int(np.argmax(np.abs(x) > 1e-12 * np.max(np.abs(x))))
    return x * (abs(x[k]) / x[k])


def numerical_radius(A, grid=DEFAULT_GRID, tol=DEFAULT_TOL):
    """Numerical radius ``w(A) = sup_{||x||=1} |<Ax, x>|``.

    Grid cells that are local maxima within the Lipschitz margin
    ``||A|| * (2 pi / grid)`` of the best sample (at most ``MAX_PEAKS`` of
    them, best first) are refined by golden-section search on
    ``[theta_{k-1}, theta_{k+1}]`` until the bracket is shorter than ``tol``.

    ``refinement_residual`` is ``| |<Ax, x>| - value |`` at the witness plus
    ``||A|| * tol``; it bounds how far ``value`` may sit from the true
    maximum of the refined peak.
    """
    A = as_matrix(A)
    if grid < 64:
        raise ValueError("grid must have at least 64 points")
    if tol <= 0:
        raise ValueError("tol must be positive")
    n = A.shape[0]
    norm = operator_norm(A)
    if norm == 0.0:
        x = np.zeros(n, dtype=complex)
        x[0] = 1.0
        return RadiusResult(0.0, 0.0, x, grid, 0.0, 0.0)

    B, C = cartesian_decompose(A)
    step = TWO_PI / grid
    thetas = step * np.arange(grid)
    if grid % 2 == 0:
        # H(t + pi) = -H(t): half the grid gives both extremes
        top, opposite = _top_eigenvalues(B, C, thetas[: grid // 2], both_ends=True)
        vals = np.concatenate([top, opposite])
    else:
        vals = _top_eigenvalues(B, C, thetas)
    best = vals.max()
    is_peak = (vals >= np.roll(vals, 1)) & (vals >= np.roll(vals, -1))
    cand = np.flatnonzero(is_peak & (vals >= best - norm * step))
    # a disk-shaped numerical range makes every cell a peak; keep the best few
    cand = cand[np.argsort(-vals[cand], kind="stable")[:MAX_PEAKS]]

    top = _scalar_top(B, C)
    theta, peak = 0.0, -np.inf
    for k in cand:
        t, v = _golden_max(top, thetas[k] - step, thetas[k] + step, tol)
        if v > peak:
            theta, peak = t, v
    theta = float(np.mod(theta, TWO_PI))

    Hs = hermitianize(np.exp(1j * theta) * A)
    lam, U = np.linalg.eigh(Hs)
    value = float(lam[-1])
    # ties: lowest index among eigenvalues equal to the top one
    top = int(np.flatnonzero(lam >= lam[-1] - 1e-14 * (1.0 + abs(lam[-1])))[0])
    x = _canonical_phase(U[:, top])
    modulus = abs(np.vdot(x, A @ x))
    residual = abs(modulus - value) + norm * tol
    return RadiusResult(value, theta, x, grid, float(residual), norm)


def numerical_range_sample(A, x):
    """``<Ax, x>`` for a unit vector ``x`` (unit length to within 1e-12)."""
    A = as_matrix(A)
    x = np.asarray(x, dtype=complex)
    if x.shape != (A.shape[0],):
        raise ValueError(f"vector of length {A.shape[0]} expected, got shape {x.shape}")
    nrm = np.linalg.norm(x)
    if abs(nrm - 1.0) > 1e-12:
        raise NormalizationError(f"vector norm is {nrm!r}, not 1")
    return complex(np.vdot(x, A @ x))


def random_unit_vectors(rng, count, dim):
    """``count`` Haar-distributed unit vectors in ``C^dim`` as rows."""
    z = rng.standard_normal((count, dim)) + 1j * rng.standard_normal((count, dim))
    return z / np.linalg.norm(z, axis=1, keepdims=True)


class SupEstimate(NamedTuple):
    value: float
    witness: np.ndarray


def _normalize_rows(X):
    return X / np.linalg.norm(X, axis=-1, keepdims=True)


def _dot(X, Y):
    """Row-wise dot product of real arrays."""
    return np.einsum("ij,ij->i", X, Y)


if hasattr(np, "vecdot"):  # numpy >= 2.0, about twice as fast on small rows
    _dot = np.vecdot  # noqa: F811


def sup_unit_sphere(objective, dim, restarts=16, tol=1e-12, *, seed=0,
                    starts=None, max_iter=200, fd_step=1e-6, vectorized=False):
    """Lower estimate of ``sup_{||x|| = 1} objective(x)``.

    Projected gradient ascent, run for all starting points in lockstep.
    The gradient is a central finite difference with step ``fd_step`` on
    the real and imaginary part of every coordinate, taken through the
    normalisation so only tangent directions count. The search direction
    adds a Polak-Ribiere+ multiple of the previous one (plain gradient
    after a rejected step). Each step tries the previous angle and the top
    of the parabola through the current value, the slope and that trial,
    keeping the better; a start stops once its step angle
    falls below ``MIN_ANGLE``, an accepted step gains less than
    ``tol * (1 + |value|)``, the tangent gradient norm drops below
    ``sqrt(tol) * (1 + |value|)``, or ``max_iter`` is reached.

    Parameters
    ----------
    objective : callable
        Real-valued. With ``vectorized=True`` it receives a ``(k, dim)``
        array of unit rows and returns ``k`` values.
    restarts : int
        Random Haar starting points, drawn in a fixed order from
        ``numpy.random.default_rng(seed)``.
    starts : array_like, optional
        Extra starting points (rows), normalised and tried first.

    Returns
    -------
    SupEstimate
        ``value`` is ``objective(witness)``; every value is attained, so it
        never exceeds the true supremum.
    """
    if dim < 1:
        raise ValueError("dim must be >= 1")
    if restarts < 1:
        raise ValueError("restarts must be >= 1")

    if vectorized:
        def evaluate(X):
            v = np.asarray(objective(X), dtype=float).reshape(X.shape[0])
            if not np.isfinite(v).all():
                raise EvaluationError("objective returned a non-finite value")
            return v
    else:
        def evaluate(X):
            v = np.array([float(objective(x)) for x in X])
            if not np.isfinite(v).all():
                raise EvaluationError("objective returned a non-finite value")
            return v

    rng = np.random.default_rng(seed)
    X = random_unit_vectors(rng, restarts, dim)
    if starts is not None:
        S = np.atleast_2d(np.asarray(starts, dtype=complex))
        X = np.vstack([_normalize_rows(S), X])
    k = X.shape[0]
    fx = evaluate(X)
    # work on R^{2 dim}: interleaved (re, im) pairs, so Re<x, y> is a dot product
    R = np.ascontiguousarray(X).view(np.float64)
    m = 2 * dim
    angle = np.full(k, 0.1)
    active = np.ones(k, dtype=bool)
    prev_g = np.zeros((k, m))
    prev_d = np.zeros((k, m))
    E = np.vstack([np.eye(m), -np.eye(m)])[None] * fd_step
    sqtol = np.sqrt(tol)

    def on_sphere(Y):
        Y = Y / np.sqrt(np.einsum("...i,...i->...", Y, Y))[..., None]
        return Y, evaluate(Y.reshape(-1, m).view(np.complex128).reshape(-1, dim))

    def rotate(Ra, D, a):
        # unit to rounding already; accepted points are renormalised below
        Y = np.cos(a)[:, None] * Ra + np.sin(a)[:, None] * D
        return Y, evaluate(Y.view(np.complex128))

    for _ in range(max_iter):
        idx = np.flatnonzero(active)
        if idx.size == 0:
            break
        Ra, f0 = R[idx], fx[idx]
        vals = on_sphere(Ra[:, None, :] + E)[1].reshape(idx.size, 2 * m)
        grad = (vals[:, :m] - vals[:, m:]) / (2.0 * fd_step)
        # drop the radial component: it does not move on the sphere
        grad -= _dot(Ra, grad)[:, None] * Ra
        gg = _dot(grad, grad)
        gnorm = np.sqrt(gg)
        flat = gnorm <= 1e-300
        # near a maximum the remaining gain is O(gnorm^2)
        done = gnorm <= sqtol * (1.0 + np.abs(f0))

        # Polak-Ribiere+ direction, reset whenever it is not an ascent direction
        pg, pd = prev_g[idx], prev_d[idx]
        beta = np.maximum(_dot(grad, grad - pg), 0.0) / np.maximum(_dot(pg, pg), 1e-300)
        pd -= _dot(Ra, pd)[:, None] * Ra
        d = grad + beta[:, None] * pd
        slope = _dot(grad, d)
        reset = ~(slope > 0)
        if reset.any():
            d[reset] = grad[reset]
            slope[reset] = gg[reset]
        dnorm = np.where(flat, 1.0, np.sqrt(_dot(d, d)))
        direction = d / dnorm[:, None]
        slope = slope / dnorm  # derivative along the unit direction

        # trial angle, then the top of the parabola through f(0), slope, f(a)
        a = angle[idx]
        r1, f1 = rotate(Ra, direction, a)
        curv = 2.0 * (f1 - f0 - slope * a) / (a * a)
        a2 = np.where(curv < 0, -slope / np.minimum(curv, -1e-300), 2.0 * a)
        a2 = np.minimum(a2, 1.0)
        r2, f2 = rotate(Ra, direction, a2)
        use2 = f2 >= f1
        fc = np.where(use2, f2, f1)
        gain = fc - f0
        better = (gain > 0) & ~flat
        acc = idx[better]
        Y = np.where(use2[:, None], r2, r1)[better]
        R[acc] = Y / np.sqrt(_dot(Y, Y))[:, None]
        fx[acc] = fc[better]
        keep = better[:, None]
        prev_g[idx] = np.where(keep, grad, 0.0)
        prev_d[idx] = np.where(keep, d, 0.0)
        angle[idx] = np.where(better, np.where(use2, a2, a), 0.25 * np.minimum(a, a2))
        stalled = better & (gain <= tol * (1.0 + np.abs(fc)))
        active[idx] = ~(flat | done | stalled) & (angle[idx] >= MIN_ANGLE)
    X = R.view(np.complex128)
    j = int(np.argmax(fx))
    return SupEstimate(float(fx[j]), X[j].copy())
