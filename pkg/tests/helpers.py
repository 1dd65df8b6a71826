"""Random test matrices drawn from a numpy Generator (independent of nrbounds.ensembles)."""
import numpy as np


def rng_for(seed):
    return np.random.default_rng(seed)


def ginibre(rng, n):
    return (rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))) / np.sqrt(2)


def hermitian(rng, n):
    G = ginibre(rng, n)
    return 0.5 * (G + G.conj().T)


def psd(rng, n, scale=1.0):
    G = ginibre(rng, n)
    return scale * (G @ G.conj().T) / n


def unitary(rng, n):
    q, r = np.linalg.qr(ginibre(rng, n))
    return q * (np.diagonal(r) / np.abs(np.diagonal(r)))


def normal(rng, n):
    U = unitary(rng, n)
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return (U * z) @ U.conj().T


def unit_vector(rng, n):
    z = rng.standard_normal(n) + 1j * rng.standard_normal(n)
    return z / np.linalg.norm(z)
