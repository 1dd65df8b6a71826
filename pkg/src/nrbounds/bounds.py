"""Numerical radius and norm inequality chains.

Each chain function returns a :class:`ChainReport`: the chain's terms in
order, left to right, and one assertion per adjacent pair. An assertion
``left <= right`` is satisfied when ``right - left >= -(tol * scale + extra)``
with ``scale = max(|left|, |right|)``; ``extra`` carries the numerical
radius refinement residual for terms built from ``w(A)`` and the one-sided
allowance for supremum estimates.

Every chain accepts either a matrix or an :class:`OperatorData`; the latter
caches ``|A|``, ``|A^*|``, the Cartesian parts and ``w(A)`` so that several
chains evaluated on the same matrix share that work.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import NamedTuple

import numpy as np

from .errors import AdmissibilityError
from .functions import IDENTITY, SQUARE, ScalarFn, power
from .hh import DEFAULT_NODES, quadrature_for, segment_integral
from .linalg import (as_matrix, hermitian_norm, hermitianize, matrix_function)
from .radius import DEFAULT_GRID, numerical_radius, sup_unit_sphere

__all__ = [
    "Assertion", "ChainReport", "OperatorData", "CHAINS", "DEFAULT_TOL", "SUP_TOL",
    "kittaneh_chain", "abs_sum_chain", "prop_mean_chain", "power_mean_chain",
    "convex_sup_chain", "bourin_norm_check", "cartesian_lower_chain",
    "cartesian_power_chain", "cartesian_parts_chain", "upper_fourpoint",
    "fourpoint_vs_integral", "squared_refinement_chain",
    "additive_refinement_chain", "weighted_refined_chain", "weighted_power_chain",
    "sharpness_chain",
]

DEFAULT_TOL = 1e-8
SUP_TOL = 1e-6
SUP_SEARCH_TOL = 1e-10
BOUNDARY_ANGLES = 16


class Assertion(NamedTuple):
    left: int
    right: int
    satisfied: bool
    gap: float


@dataclass
class ChainReport:
    chain_id: str
    terms: list
    assertions: list
    params: dict = field(default_factory=dict)
    sup_is_estimate: bool = False

    @property
    def values(self):
        return [v for _, v in self.terms]

    @property
    def labels(self):
        return [lab for lab, _ in self.terms]

    @property
    def ok(self):
        return all(a.satisfied for a in self.assertions)

    def to_dict(self):
        return {
            "chain_id": self.chain_id,
            "params": dict(self.params),
            "terms": [{"label": lab, "value": float(v)} for lab, v in self.terms],
            "assertions": [
                {"left": a.left, "right": a.right, "satisfied": bool(a.satisfied),
                 "gap": float(a.gap)}
                for a in self.assertions
            ],
            "sup_is_estimate": self.sup_is_estimate,
        }


def _check(terms, i, j, tol, extra=0.0):
    lv, rv = terms[i][1], terms[j][1]
    gap = rv - lv
    scale = max(abs(lv), abs(rv))
    return Assertion(i, j, bool(gap >= -(tol * scale + extra)), float(gap))


def _report(chain_id, terms, tol, extras=None, params=None, sup=False):
    labels = [lab for lab, _ in terms]
    if len(set(labels)) != len(labels):  # pragma: no cover - programming error
        raise ValueError(f"duplicate labels in {chain_id}: {labels}")
    extras = extras or {}
    terms = [(lab, float(v)) for lab, v in terms]
    asserts = [_check(terms, k, k + 1, tol, extras.get(k, 0.0))
               for k in range(len(terms) - 1)]
    return ChainReport(chain_id, terms, asserts, dict(params or {}), sup)


def _fn_params(f):
    return {"f": f.describe()}


def _require(f, *flags):
    missing = [fl for fl in flags if not getattr(f, fl)]
    if missing:
        raise AdmissibilityError(
            f"{f.describe()} lacks required properties: {', '.join(missing)}")


def _require_r(r, lo, hi, name="r"):
    if not lo <= r <= hi:
        raise AdmissibilityError(f"{name} = {r} is outside [{lo:g}, {hi:g}]")


class OperatorData:
    """Per-matrix cache of the quantities shared by the chains."""

    def __init__(self, A, grid=DEFAULT_GRID):
        self.A = as_matrix(A)
        self.grid = grid
        self._integrals = {}

    @cached_property
    def A_star(self):
        return self.A.conj().T

    @cached_property
    def AsA(self):
        return hermitianize(self.A_star @ self.A)

    @cached_property
    def AAs(self):
        return hermitianize(self.A @ self.A_star)

    @cached_property
    def _abs_eig(self):
        """Eigenvalues and vectors of ``|A|`` and ``|A^*|`` (stacked)."""
        lam, U = np.linalg.eigh(np.stack([self.AsA, self.AAs]))
        return np.sqrt(np.maximum(lam, 0.0)), U

    def _from_abs_eig(self, vals):
        U = self._abs_eig[1]
        return hermitianize((U * vals[..., None, :]) @ np.conj(np.swapaxes(U, -1, -2)))

    @cached_property
    def _abs_pair(self):
        return self._from_abs_eig(self._abs_eig[0])

    def abs_function(self, f):
        """Memoised ``f(|A|)``."""
        k = ("abs-function", f)
        if k not in self._integrals:
            self._integrals[k] = self._from_abs_eig(f(self._abs_eig[0]))[0]
        return self._integrals[k]

    def pair(self, other):
        """Shared data for ``(|A|, |B|)`` with ``B`` the operator of ``other``."""
        k = ("pair", id(other))
        if k not in self._integrals:
            self._integrals[k] = (other, _PairData(self, other))
        return self._integrals[k][1]

    @property
    def abs_A(self):
        return self._abs_pair[0]

    @property
    def abs_A_star(self):
        return self._abs_pair[1]

    @cached_property
    def cartesian(self):
        B = hermitianize(self.A)
        C = hermitianize(-0.5j * (self.A - self.A_star))
        return B, C

    @cached_property
    def squares(self):
        B, C = self.cartesian
        return hermitianize(B @ B), hermitianize(C @ C)

    @cached_property
    def sum_squares(self):
        """``A^* A + A A^*``."""
        return self.AsA + self.AAs

    @cached_property
    def abs_sum_norm(self):
        """``|| |A| + |A^*| ||``."""
        return hermitian_norm(self.abs_A + self.abs_A_star)

    @cached_property
    def sum_squares_norm(self):
        return hermitian_norm(self.sum_squares)

    @cached_property
    def norm(self):
        return float(np.sqrt(max(np.linalg.eigvalsh(self.AsA)[-1], 0.0)))

    @cached_property
    def radius(self):
        return numerical_radius(self.A, grid=self.grid)

    @property
    def w(self):
        return self.radius.value

    @property
    def w_residual(self):
        return self.radius.refinement_residual

    def w_power_slack(self, g):
        """Possible change of ``g(w)`` when ``w`` moves by its residual."""
        w, d = self.w, self.w_residual
        return abs(float(g(w + d)) - float(g(w)))

    def square_values(self, f):
        """Memoised ``f`` at ``|A|^2``, ``|A^*|^2`` and their mean."""
        k = ("square-values", f)
        if k not in self._integrals:
            P, Q = self.AsA, self.AAs
            self._integrals[k] = matrix_function(np.stack([P, Q, 0.5 * (P + Q)]), f,
                                                 trusted=True)
        return self._integrals[k]

    def integral(self, key, X, Y, f, nodes):
        """Memoised ``int_0^1 f((1-t) X + t Y) dt`` under ``key``."""
        k = (key, f, nodes)
        if k not in self._integrals:
            self._integrals[k] = segment_integral(X, Y, f, nodes)
        return self._integrals[k]


class _PairData:
    """Per-pair cache for the two-operator chains."""

    def __init__(self, da, db):
        self.da, self.db = da, db
        self.P, self.Q = da.abs_A, db.abs_A
        self._memo = {}

    @cached_property
    def mean_eigenvalues(self):
        """Spectrum of ``(|A| + |B|)/2``, clamped at zero."""
        return np.maximum(np.linalg.eigvalsh(0.5 * (self.P + self.Q)), 0.0)

    def mean_norm_f(self, f):
        """``||f((|A|+|B|)/2)||``."""
        return float(np.max(np.abs(f(self.mean_eigenvalues))))

    def half_sum_norm_f(self, f):
        """``||f(|A|) + f(|B|)|| / 2``."""
        if f not in self._memo:
            S = self.da.abs_function(f) + self.db.abs_function(f)
            self._memo[f] = 0.5 * hermitian_norm(S)
        return self._memo[f]

    @cached_property
    def boundary_vectors(self):
        """Top eigenvectors of ``P + Q`` and of ``cos(phi) P + sin(phi) Q``.

        The latter expose the boundary of the joint numerical range of
        ``(P, Q)``; ``BOUNDARY_ANGLES`` angles are used.
        """
        P, Q = self.P, self.Q
        phi = np.linspace(0.0, 2 * np.pi, BOUNDARY_ANGLES, endpoint=False)
        M = np.cos(phi)[:, None, None] * P + np.sin(phi)[:, None, None] * Q
        _, U = np.linalg.eigh(np.concatenate([(P + Q)[None], M]))
        return U[:, :, -1]


def _data(A):
    return A if isinstance(A, OperatorData) else OperatorData(A)


def _norms(*Hs):
    """Operator norms of several Hermitian matrices with one eigensolver call."""
    lam = np.linalg.eigvalsh(np.stack(Hs))
    return [float(v) for v in np.maximum(np.maximum(-lam[:, 0], lam[:, -1]), 0.0)]


def _norm_f_psd(f, M):
    return hermitian_norm(matrix_function(M, f, trusted=True))


# ---------------------------------------------------------------- chains


def kittaneh_chain(A, tol=DEFAULT_TOL):
    """``||A^*A + AA^*|| / 4 <= w^2(A) <= ||A^*A + AA^*|| / 2``."""
    d = _data(A)
    s = d.sum_squares_norm
    terms = [("quarter norm of A*A+AA*", s / 4), ("w(A)^2", d.w ** 2),
             ("half norm of A*A+AA*", s / 2)]
    e = d.w_power_slack(np.square)
    return _report("kittaneh", terms, tol, {0: e, 1: e})


def abs_sum_chain(A, tol=DEFAULT_TOL):
    d = _data(A)
    s = d.abs_sum_norm
    terms = [("quarter norm of |A|+|A*|", s / 4), ("half norm of A", d.norm / 2),
             ("w(A)", d.w), ("half norm of |A|+|A*|", s / 2)]
    e = d.w_residual
    return _report("abs_sum", terms, tol, {1: e, 2: e})


def prop_mean_chain(A, B, f: ScalarFn = SQUARE, nodes=DEFAULT_NODES, tol=DEFAULT_TOL):
    """Mean bounds for ``f`` applied to ``|A|/2`` and ``|B|/2``.

    ``||f((|A|+|B|)/4)|| <= ||int f(((1-t)|A| + t|B|)/2) dt||
    <= f(||A||/2)/2 + f(||B||/2)/2`` for increasing, nonnegative, operator
    convex ``f``.
    """
    _require(f, "increasing", "operator_convex", "nonnegative")
    da, db = _data(A), _data(B)
    P, Q = da.abs_A, db.abs_A
    integral = segment_integral(0.5 * P, 0.5 * Q, f, nodes)
    terms = [
        ("norm f((|A|+|B|)/4)", _norm_f_psd(f, 0.25 * (P + Q))),
        ("norm of integral", hermitian_norm(integral)),
        ("mean of f(norm/2)", 0.5 * float(f(da.norm / 2)) + 0.5 * float(f(db.norm / 2))),
    ]
    return _report("prop_mean", terms, tol, params={**_fn_params(f), "nodes": nodes})


def power_mean_chain(A, r, nodes=DEFAULT_NODES, tol=DEFAULT_TOL):
    """``||(|A|+|A^*|)||^r / 4^r <= ||int (((1-t)|A| + t|A^*|)/2)^r dt|| <= ||A||^r / 2^r``."""
    _require_r(r, 1.0, 2.0)
    d = _data(A)
    f = power(r)
    P, Q = d.abs_A, d.abs_A_star
    integral = d.integral("half-abs", 0.5 * P, 0.5 * Q, f, nodes)
    terms = [
        ("4^-r norm(|A|+|A*|)^r", d.abs_sum_norm ** r / 4 ** r),
        ("norm of integral", hermitian_norm(integral)),
        ("2^-r norm(A)^r", d.norm ** r / 2 ** r),
    ]
    return _report("power_mean", terms, tol, params={"r": r, "nodes": nodes})


def _power_segment_mean(a, b, r):
    """``int_0^1 ((1-t) a + t b)^r dt`` for ``a, b >= 0``, elementwise.

    With ``hi = max(a, b)`` and ``L = log(min / hi)`` the integral is
    ``hi^r * expm1((r+1) L) / ((r+1) expm1(L))``, which has no cancellation
    as ``a -> b``.
    """
    lo, hi = np.minimum(a, b), np.maximum(a, b)
    rho = np.maximum(lo / np.where(hi > 0, hi, 1.0), 1e-300)
    L = np.log(rho)
    moved = L < 0
    ratio = np.expm1((r + 1.0) * L) / ((r + 1.0) * np.where(moved, np.expm1(L), 1.0))
    return hi ** r * np.where(moved, ratio, 1.0)


def _sup_objective(P, Q, f, nodes):
    """Vectorised ``x -> int_0^1 f(||((1-t)P + tQ)^{1/2} x||^2) dt``.

    ``||M^{1/2} x||^2 = <Mx, x>`` for ``M >= 0``, so the integrand only needs
    the two quadratic forms ``<Px, x>`` and ``<Qx, x>``. Powers are
    integrated in closed form, other functions by quadrature.
    """
    n = P.shape[0]
    PQ = np.hstack([P, Q])

    def forms(X):
        Y = (X.conj() @ PQ).reshape(-1, 2, n)
        ab = np.einsum("kjn,kn->jk", Y, X).real
        return np.maximum(ab[0], 0.0), np.maximum(ab[1], 0.0)

    if f.degree == 1:
        def objective(X):
            a, b = forms(X)
            return 0.5 * (a + b)
    elif f.degree == 2:
        def objective(X):
            a, b = forms(X)
            return (a * a + a * b + b * b) / 3.0
    elif f.kind == "power":
        def objective(X):
            return _power_segment_mean(*forms(X), f.r)
    else:
        t, w = quadrature_for(f, nodes)
        weights = np.vstack([1.0 - t, t])

        def objective(X):
            return f(np.stack(forms(X), axis=1) @ weights) @ w
    return objective


def _boundary_starts(pair, objective, keep=2):
    """Warm starts for the supremum search.

    A convex function of ``(<Px,x>, <Qx,x>)`` is largest on the boundary
    of the joint numerical range, so the best ``keep`` boundary vectors are
    used. The top eigenvector of ``P + Q`` is always included: it attains
    the left end of the chain.
    """
    V = pair.boundary_vectors
    vals = objective(V[1:])
    best = 1 + np.argsort(-vals, kind="stable")[:keep]
    return V[np.concatenate([[0], best])]


def convex_sup_chain(A, B, f: ScalarFn = SQUARE, restarts=16, nodes=DEFAULT_NODES,
                     tol=DEFAULT_TOL, sup_tol=SUP_TOL, seed=0):
    """Bounds on ``sup_x int_0^1 f(||((1-t)|A| + t|B|)^{1/2} x||^2) dt``.

    Left term is ``||f((|A|+|B|)/2)||`` for increasing ``f`` and
    ``f(||(|A|+|B|)/2||)`` otherwise; right term ``||f(|A|) + f(|B|)|| / 2``.
    The supremum is estimated from below with :func:`sup_unit_sphere`,
    started from the random restarts and from boundary directions of the
    joint numerical range of ``(|A|, |B|)``. Only ``convex`` is required.
    """
    _require(f, "convex", "nonnegative")
    pair = _data(A).pair(_data(B))
    if f.increasing:
        left = ("norm f((|A|+|B|)/2)", pair.mean_norm_f(f))
    else:
        left = ("f(norm (|A|+|B|)/2)", float(f(pair.mean_eigenvalues[-1])))
    objective = _sup_objective(pair.P, pair.Q, f, nodes)
    est = sup_unit_sphere(objective, pair.P.shape[0], restarts, SUP_SEARCH_TOL, seed=seed,
                          starts=_boundary_starts(pair, objective), vectorized=True)
    terms = [left, ("sup estimate", est.value),
             ("half norm f(|A|)+f(|B|)", pair.half_sum_norm_f(f))]
    params = {**_fn_params(f), "restarts": restarts, "nodes": nodes}
    return _report("convex_sup", terms, tol, {0: sup_tol}, params, sup=True)


def bourin_norm_check(A, B, f: ScalarFn = SQUARE, tol=DEFAULT_TOL):
    """``||f((|A|+|B|)/2)|| <= ||f(|A|) + f(|B|)|| / 2`` for increasing convex ``f``."""
    _require(f, "increasing", "convex")
    pair = _data(A).pair(_data(B))
    terms = [("norm f((|A|+|B|)/2)", pair.mean_norm_f(f)),
             ("half norm f(|A|)+f(|B|)", pair.half_sum_norm_f(f))]
    return _report("bourin", terms, tol, params=_fn_params(f))


def cartesian_lower_chain(A, f: ScalarFn = SQUARE, nodes=DEFAULT_NODES, tol=DEFAULT_TOL):
    """Lower refinement through the Cartesian parts ``A = B + iC``::

        ||f((A^*A + AA^*)/4)|| <= ||int f((1-t)B^2 + tC^2) dt||
                               <= ||f(B^2) + f(C^2)|| / 2 <= f(w^2(A))
    """
    _require(f, "increasing", "operator_convex", "nonnegative")
    d = _data(A)
    B2, C2 = d.squares
    integral = d.integral("cartesian", B2, C2, f, nodes)
    fS, fB, fC = matrix_function(np.stack([0.25 * d.sum_squares, B2, C2]), f, trusted=True)
    n_s, n_int, n_bc = _norms(fS, integral, fB + fC)
    terms = [
        ("norm f((A*A+AA*)/4)", n_s),
        ("norm of integral", n_int),
        ("half norm f(B^2)+f(C^2)", 0.5 * n_bc),
        ("f(w(A)^2)", float(f(d.w ** 2))),
    ]
    e = d.w_power_slack(lambda w: f(w * w))
    return _report("cartesian_lower", terms, tol, {2: e},
                   params={**_fn_params(f), "nodes": nodes})


def cartesian_power_chain(A, r, nodes=DEFAULT_NODES, tol=DEFAULT_TOL):
    """``||A^*A + AA^*||^r / 4^r <= ||int ((1-t)B^2 + tC^2)^r dt|| <= w^{2r}(A)``."""
    _require_r(r, 1.0, 2.0)
    d = _data(A)
    B2, C2 = d.squares
    integral = d.integral("cartesian", B2, C2, power(r), nodes)
    terms = [
        ("4^-r norm(A*A+AA*)^r", d.sum_squares_norm ** r / 4 ** r),
        ("norm of integral", hermitian_norm(integral)),
        ("w(A)^(2r)", d.w ** (2 * r)),
    ]
    e = d.w_power_slack(lambda w: w ** (2 * r))
    return _report("cartesian_power", terms, tol, {1: e}, params={"r": r, "nodes": nodes})


def cartesian_parts_chain(A, tol=DEFAULT_TOL):
    """``||B||^2`` and ``||C||^2`` are both at most ``w^2(A)``."""
    d = _data(A)
    B, C = d.cartesian
    nb, nc = _norms(B, C)
    terms = [("norm(B)^2", nb ** 2), ("norm(C)^2", nc ** 2), ("w(A)^2", d.w ** 2)]
    e = d.w_power_slack(np.square)
    labels_values = [(lab, float(v)) for lab, v in terms]
    asserts = [_check(labels_values, 0, 2, tol, e), _check(labels_values, 1, 2, tol, e)]
    return ChainReport("cartesian_parts", labels_values, asserts)


def _fourpoint(d, f):
    P, Q = d.abs_A, d.abs_A_star
    F1, F3 = matrix_function(np.stack([0.25 * (3 * P + Q), 0.25 * (P + 3 * Q)]), f,
                             trusted=True)
    return 0.5 * hermitian_norm(F1 + F3)


def upper_fourpoint(A, f: ScalarFn = SQUARE, tol=DEFAULT_TOL):
    """``f(w(A)) <= ||f((3|A|+|A^*|)/4) + f((|A|+3|A^*|)/4)|| / 2``."""
    _require(f, "increasing", "convex")
    d = _data(A)
    terms = [("f(w(A))", float(f(d.w))), ("four-point mean", _fourpoint(d, f))]
    return _report("upper_fourpoint", terms, tol, {0: d.w_power_slack(f)},
                   params=_fn_params(f))


def fourpoint_vs_integral(A, f: ScalarFn = SQUARE, nodes=DEFAULT_NODES, tol=DEFAULT_TOL):
    """Four-point mean ``<= ||int_0^1 f(t|A| + (1-t)|A^*|) dt||`` for operator convex ``f``."""
    _require(f, "operator_convex", "nonnegative")
    d = _data(A)
    integral = d.integral("abs-pair", d.abs_A_star, d.abs_A, f, nodes)
    terms = [("four-point mean", _fourpoint(d, f)),
             ("norm of integral", hermitian_norm(integral))]
    return _report("fourpoint_vs_integral", terms, tol,
                   params={**_fn_params(f), "nodes": nodes})


def squared_refinement_chain(A, nodes=DEFAULT_NODES, tol=DEFAULT_TOL):
    """``w^2 <= ||(3|A|+|A^*|)^2 + (|A|+3|A^*|)^2|| / 32
    <= ||int (t|A| + (1-t)|A^*|)^2 dt|| <= ||A^*A + AA^*|| / 2``."""
    d = _data(A)
    integral = d.integral("abs-pair", d.abs_A_star, d.abs_A, SQUARE, nodes)
    terms = [
        ("w(A)^2", d.w ** 2),
        ("four-point mean of squares", _fourpoint(d, SQUARE)),
        ("norm of integral", hermitian_norm(integral)),
        ("half norm of A*A+AA*", 0.5 * d.sum_squares_norm),
    ]
    return _report("squared_refinement", terms, tol, {0: d.w_power_slack(np.square)},
                   params={"nodes": nodes})


def additive_refinement_chain(A, tol=DEFAULT_TOL):
    """``||S||/4 <= ||S^2 + |T|^2||^{1/2} / 4 <= w^2(A)`` with
    ``S = A^*A + AA^*`` and ``T = A^2 + (A^*)^2``."""
    d = _data(A)
    S = d.sum_squares
    T = hermitianize(d.A @ d.A + d.A_star @ d.A_star)
    inner = hermitianize(S @ S + T.conj().T @ T)
    terms = [
        ("quarter norm of A*A+AA*", 0.25 * d.sum_squares_norm),
        ("additive middle term", 0.25 * np.sqrt(hermitian_norm(inner))),
        ("w(A)^2", d.w ** 2),
    ]
    return _report("additive_refinement", terms, tol, {1: d.w_power_slack(np.square)})


def weighted_refined_chain(A, t, f: ScalarFn = IDENTITY, tol=DEFAULT_TOL, params=None):
    """Refined weighted bound with ``r = min(t, 1 - t)``::

        f(w^2(A)) <= ||(1-t) f(|A|^2) + t f(|A^*|^2) - 2r (mean f - f(mean))||
                  <= ||(1-t) f(|A|^2) + t f(|A^*|^2)||

    where the means are over ``|A|^2`` and ``|A^*|^2``.
    """
    if not 0.0 <= t <= 1.0:
        raise AdmissibilityError(f"t = {t} is outside [0, 1]")
    _require(f, "increasing", "operator_convex", "nonnegative")
    d = _data(A)
    r = min(t, 1.0 - t)
    fP, fQ, fM = d.square_values(f)
    weighted = (1.0 - t) * fP + t * fQ
    refined = weighted - 2.0 * r * (0.5 * (fP + fQ) - fM)
    n_refined, n_weighted = _norms(refined, weighted)
    terms = [
        ("f(w(A)^2)", float(f(d.w ** 2))),
        ("refined weighted norm", n_refined),
        ("weighted norm", n_weighted),
    ]
    e = d.w_power_slack(lambda w: f(w * w))
    p = {**_fn_params(f), "t": t, **(params or {})}
    return _report("weighted_refined", terms, tol, {0: e}, params=p)


def weighted_power_chain(A, t, p, tol=DEFAULT_TOL):
    """The weighted chain for ``f(s) = s^{p/2}``: ``w^p(A) <= ... <= ||(1-t)|A|^p + t|A^*|^p||``."""
    _require_r(p, 2.0, 4.0, "p")
    return weighted_refined_chain(A, t, power(p / 2), tol, params={"p": p})


def sharpness_chain(A, tol=DEFAULT_TOL):
    """Equality ``w^2(A) = ||(3|A|+|A^*|)^2 + (|A|+3|A^*|)^2|| / 32`` for normal ``A``.

    Encoded as two assertions, each direction once.
    """
    d = _data(A)
    terms = [("w(A)^2", d.w ** 2), ("four-point mean of squares", _fourpoint(d, SQUARE))]
    e = d.w_power_slack(np.square)
    asserts = [_check(terms, 0, 1, tol, e), _check(terms, 1, 0, tol, e)]
    return ChainReport("sharpness", [(lab, float(v)) for lab, v in terms], asserts)


CHAINS = {
    "kittaneh": kittaneh_chain,
    "abs_sum": abs_sum_chain,
    "prop_mean": prop_mean_chain,
    "power_mean": power_mean_chain,
    "convex_sup": convex_sup_chain,
    "bourin": bourin_norm_check,
    "cartesian_lower": cartesian_lower_chain,
    "cartesian_power": cartesian_power_chain,
    "cartesian_parts": cartesian_parts_chain,
    "upper_fourpoint": upper_fourpoint,
    "fourpoint_vs_integral": fourpoint_vs_integral,
    "squared_refinement": squared_refinement_chain,
    "additive_refinement": additive_refinement_chain,
    "weighted_refined": weighted_power_chain,
}
