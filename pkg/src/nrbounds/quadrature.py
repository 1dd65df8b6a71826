"""Gauss-Legendre rules on [0, 1], computed by Newton iteration."""
from __future__ import annotations

from functools import lru_cache
from typing import NamedTuple

import numpy as np

__all__ = ["QuadratureRule", "gauss_legendre", "graded_rule", "legendre_nodes"]


class QuadratureRule(NamedTuple):
    nodes: np.ndarray
    weights: np.ndarray


def _legendre(n, x):
    """``P_n(x)`` and ``P_n'(x)`` by the three-term recurrence."""
    p0 = np.ones_like(x)
    p1 = x.copy()
    for k in range(2, n + 1):
        p0, p1 = p1, ((2 * k - 1) * x * p1 - (k - 1) * p0) / k
    return p1, n * (x * p1 - p0) / (x * x - 1.0)


def legendre_nodes(n, tol=1e-15, max_iter=100):
    """Nodes and weights of the ``n``-point rule on ``[-1, 1]``.

    Newton's method on ``P_n`` from the Tricomi-type initial guess
    ``cos(pi (i - 1/4) / (n + 1/2))``; ``P_n`` and ``P_n'`` come from the
    three-term recurrence. Nodes are returned ascending.
    """
    if n < 1:
        raise ValueError("need at least one node")
    i = np.arange(1, n + 1)
    x = np.cos(np.pi * (i - 0.25) / (n + 0.5))
    for _ in range(max_iter):
        p, dp = _legendre(n, x)
        dx = p / dp
        x = x - dx
        if np.max(np.abs(dx)) < tol:
            break
    _, dp = _legendre(n, x)
    w = 2.0 / ((1.0 - x * x) * dp * dp)
    return x[::-1].copy(), w[::-1].copy()


@lru_cache(maxsize=None)
def gauss_legendre(n):
    """``n``-point Gauss-Legendre rule mapped to ``[0, 1]`` (weights sum to 1)."""
    x, w = legendre_nodes(n)
    t = 0.5 * (x + 1.0)
    w = 0.5 * w
    t.flags.writeable = False
    w.flags.writeable = False
    return QuadratureRule(t, w)


@lru_cache(maxsize=None)
def graded_rule(n):
    """Gauss-Legendre after the substitution ``t = s^2 (3 - 2 s)``.

    ``dt/ds = 6 s (1 - s)`` vanishes at both ends, which clusters the nodes
    there. An integrand such as ``((1 - t) a + t b)^r`` with ``a`` at or
    near zero has a branch point at the endpoint; in ``s`` it becomes
    ``~ s^{2r}``, smooth for ``r = 1.5`` and much smoother in general.
    Weights stay positive and sum to 1. Polynomial exactness drops to
    degree ``(2n - 3) / 3`` in ``t``.
    """
    s, w = gauss_legendre(n)
    t = s * s * (3.0 - 2.0 * s)
    w = w * 6.0 * s * (1.0 - s)
    t.flags.writeable = False
    w.flags.writeable = False
    return QuadratureRule(t, w)
