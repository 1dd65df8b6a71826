"""Random matrix ensembles with per-matrix deterministic streams.

Every matrix gets its own Philox-4x64 (counter-based) generator keyed by
``SeedSequence(seed, spawn_key=(kind code, dim, index, role))``, so a
matrix does not depend on how many others were drawn before it.
Complex Gaussians come from Box-Muller on that stream:
``sqrt(-log u1) * exp(2 pi i u2)`` has real and imaginary parts that are
independent ``N(0, 1/2)``.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import ConfigError

__all__ = ["Ensemble", "KINDS", "stream", "complex_gaussian", "haar_unitary",
           "gen_matrix", "gen_partner"]

KINDS = ("ginibre", "normal", "hermitian", "nilpotent_shift", "rank_one")
_KIND_CODE = {k: i for i, k in enumerate(KINDS)}

ROLE_MATRIX = 0
ROLE_PARTNER = 1


@dataclass(frozen=True)
class Ensemble:
    kind: str
    dim: int
    count: int
    seed: int = 0

    def __post_init__(self):
        if self.kind not in _KIND_CODE:
            raise ConfigError(f"unknown ensemble kind {self.kind!r}; choose from {KINDS}")
        if self.dim < 1:
            raise ConfigError("dim must be >= 1")
        if self.count < 0:
            raise ConfigError("count must be >= 0")
        if not 0 <= self.seed < 2 ** 64:
            raise ConfigError("seed must be a 64-bit unsigned integer")


def stream(seed, kind, dim, index, role=ROLE_MATRIX):
    ss = np.random.SeedSequence(seed, spawn_key=(_KIND_CODE[kind], dim, index, role))
    return np.random.Generator(np.random.Philox(ss))


def complex_gaussian(rng, shape):
    """Standard complex Gaussian samples (``E|z|^2 = 1``) by Box-Muller."""
    u1 = 1.0 - rng.random(shape)  # in (0, 1]
    u2 = rng.random(shape)
    return np.sqrt(-np.log(u1)) * np.exp(2j * np.pi * u2)


def haar_unitary(rng, n):
    """Haar unitary from the QR factorisation of a Ginibre matrix."""
    q, r = np.linalg.qr(complex_gaussian(rng, (n, n)))
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def _unit(rng, n):
    z = complex_gaussian(rng, n)
    return z / np.linalg.norm(z)


def _draw(kind, rng, n):
    if kind == "ginibre":
        return complex_gaussian(rng, (n, n))
    if kind == "normal":
        U = haar_unitary(rng, n)
        return (U * complex_gaussian(rng, n)) @ U.conj().T
    if kind == "hermitian":
        G = complex_gaussian(rng, (n, n))
        return 0.5 * (G + G.conj().T)
    if kind == "nilpotent_shift":
        return np.eye(n, k=1, dtype=complex)
    if kind == "rank_one":
        return np.outer(_unit(rng, n), _unit(rng, n).conj())
    raise ConfigError(f"unknown ensemble kind {kind!r}")  # pragma: no cover


def gen_matrix(e: Ensemble, index):
    """The ``index``-th matrix of ensemble ``e``."""
    if not 0 <= index < e.count:
        raise IndexError(f"index {index} outside ensemble of {e.count}")
    return _draw(e.kind, stream(e.seed, e.kind, e.dim, index), e.dim)


def gen_partner(e: Ensemble, index):
    """Second operator paired with matrix ``index`` for two-operator chains.

    Drawn from the same ensemble on an independent stream.
    """
    if not 0 <= index < e.count:
        raise IndexError(f"index {index} outside ensemble of {e.count}")
    return _draw(e.kind, stream(e.seed, e.kind, e.dim, index, ROLE_PARTNER), e.dim)
