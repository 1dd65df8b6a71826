"""Operator Hermite-Hadamard integrals and the five-term Loewner chain."""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import AdmissibilityError
from .functions import ScalarFn
from .linalg import _same_shape, as_hermitian, hermitian_norm, lambda_min, matrix_function
from .quadrature import gauss_legendre, graded_rule

__all__ = ["HHChain", "hh_integral", "hh_chain", "segment_integral", "quadrature_for",
           "DEFAULT_NODES"]

DEFAULT_NODES = 32

HH_LABELS = (
    "f(midpoint)",
    "mean of f at quarter points",
    "integral",
    "mean of midpoint and trapezoid",
    "trapezoid",
)


class HHChain(NamedTuple):
    terms: tuple
    gaps: tuple
    tol: float

    @property
    def holds(self):
        return all(g >= -self.tol * s for g, s in zip(self.gaps, self.scales))

    @property
    def scales(self):
        norms = [hermitian_norm(T) for T in self.terms]
        return tuple(1.0 + norms[k] + norms[k + 1] for k in range(4))


def quadrature_for(f, nodes):
    """Plain Gauss-Legendre for the polynomials (identity, square), else
    the endpoint-graded rule.

    Along a segment between PSD matrices the smallest eigenvalue is
    concave in ``t``, so a non-smooth ``f`` like ``s^r`` only misbehaves at
    the endpoints, which is where the graded rule puts its nodes.
    """
    return gauss_legendre(nodes) if f.degree is not None else graded_rule(nodes)


def segment_integral(X, Y, f, nodes=DEFAULT_NODES):
    """Quadrature value of ``int_0^1 f((1-t) X + t Y) dt``.

    No input validation; ``X`` and ``Y`` must be exactly Hermitian arrays
    of equal shape. The weighted sum over nodes runs in node order.
    """
    t, w = quadrature_for(f, nodes)
    path = (1.0 - t)[:, None, None] * X + t[:, None, None] * Y
    values = matrix_function(path, f, trusted=True)
    return np.tensordot(w, values, axes=1)


def hh_integral(X, Y, f: ScalarFn, nodes=DEFAULT_NODES):
    """Operator integral ``int_0^1 f((1-t) X + t Y) dt``.

    Identity and square use ``nodes``-point Gauss-Legendre and are exact up
    to rounding. Other functions use the endpoint-graded rule of
    :func:`~nrbounds.quadrature.graded_rule`.
    """
    if nodes < 2:
        raise ValueError("need at least 2 quadrature nodes")
    X = as_hermitian(X)
    Y = as_hermitian(Y)
    _same_shape(X, Y)
    return segment_integral(X, Y, f, nodes)


def hh_chain(X, Y, f: ScalarFn, nodes=DEFAULT_NODES, tol=1e-8):
    """Evaluate the five terms of the operator Hermite-Hadamard chain.

    ``gaps[k]`` is ``lambda_min(T[k+1] - T[k])``; for an operator convex
    ``f`` every gap is nonnegative up to rounding.
    """
    if not f.operator_convex:
        raise AdmissibilityError(
            f"{f.describe()} is not flagged operator convex; the Loewner chain "
            "does not apply")
    X = as_hermitian(X)
    Y = as_hermitian(Y)
    _same_shape(X, Y)
    if nodes < 2:
        raise ValueError("need at least 2 quadrature nodes")
    fx, fy, fmid, fq1, fq3 = matrix_function(
        np.stack([X, Y, 0.5 * (X + Y), 0.25 * (3 * X + Y), 0.25 * (X + 3 * Y)]), f,
        trusted=True)
    trap = 0.5 * (fx + fy)
    terms = (
        fmid,
        0.5 * (fq1 + fq3),
        segment_integral(X, Y, f, nodes),
        0.5 * (fmid + trap),
        trap,
    )
    gaps = tuple(lambda_min(terms[k + 1] - terms[k]) for k in range(4))
    return HHChain(terms, gaps, tol)
