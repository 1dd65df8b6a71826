"""Acceptance criteria, one test each; the terminal summary prints PASS/FAIL per criterion."""
import time

import numpy as np
import pytest
from scipy.optimize import minimize

from helpers import ginibre, hermitian, normal, psd, rng_for

from nrbounds import (OperatorData, additive_refinement_chain, hermitian_eig, hh_chain,
                      hh_integral, jacobi_eig, kittaneh_chain, numerical_radius, power,
                      run_suite, sharpness_experiment, weighted_power_chain, SQUARE)
from nrbounds.suite import SuiteConfig, default_config
from nrbounds.ensembles import Ensemble


def _rel_gap(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)


@pytest.mark.slow
def test_criterion_01_zero_violation_suite():
    cfg = default_config(count=500)
    start = time.perf_counter()
    report = run_suite(cfg, keep_reports=False)
    wall = time.perf_counter() - start
    s = report.summary
    print(f"matrices={s['matrices']} assertions={s['total_assertions']} "
          f"violations={s['violations']} wall={wall:.1f}s")
    assert s["matrices"] == 500 * 5 * 4
    assert s["violations"] == 0
    assert wall < 120.0


def test_criterion_02_kittaneh_equality_cases():
    shift = kittaneh_chain(np.array([[0, 1], [0, 0]], dtype=complex)).values
    assert _rel_gap(shift[0], 0.25) <= 1e-10
    assert _rel_gap(shift[1], 0.25) <= 1e-10
    assert _rel_gap(shift[0], shift[1]) <= 1e-10
    herm = kittaneh_chain(np.diag([1.0, 0.0]).astype(complex)).values
    assert _rel_gap(herm[1], 1.0) <= 1e-10
    assert _rel_gap(herm[2], 1.0) <= 1e-10
    assert _rel_gap(herm[1], herm[2]) <= 1e-10


@pytest.mark.parametrize("n", [2, 4, 8])
def test_criterion_03_sharpness_of_constant(n):
    report = sharpness_experiment(100, n, seed=2024)
    assert len(report.results) == 100
    for m in report.results:
        w2, fourpoint = m.reports[0].values
        assert _rel_gap(w2, fourpoint) <= 1e-8


def test_criterion_04_square_quadrature_oracle():
    rng = rng_for(4)
    for k in range(100):
        n = 1 + k % 8
        X, Y = psd(rng, n), psd(rng, n)
        closed = (X @ X + Y @ Y) / 3 + (X @ Y + Y @ X) / 6
        got = hh_integral(X, Y, SQUARE)
        assert np.max(np.abs(got - closed)) <= 1e-12


def _brute_force_w(A, rng, samples=10 ** 6, chunk=250_000):
    """Max |<Ax,x>| over Haar samples, polished by Nelder-Mead from the best one."""
    best, best_x = -1.0, None
    for _ in range(samples // chunk):
        Z = rng.standard_normal((chunk, 2)) + 1j * rng.standard_normal((chunk, 2))
        Z /= np.linalg.norm(Z, axis=1, keepdims=True)
        vals = np.abs(np.einsum("ki,ij,kj->k", Z.conj(), A, Z))
        k = int(np.argmax(vals))
        if vals[k] > best:
            best, best_x = float(vals[k]), Z[k]
    # x = (cos a, e^{ib} sin a) up to a global phase
    x = best_x * np.exp(-1j * np.angle(best_x[0]))
    a0, b0 = np.arctan2(abs(x[1]), abs(x[0])), np.angle(x[1])

    def neg(p):
        v = np.array([np.cos(p[0]), np.exp(1j * p[1]) * np.sin(p[0])])
        return -abs(np.vdot(v, A @ v))

    res = minimize(neg, [a0, b0], method="Nelder-Mead",
                   options={"xatol": 1e-12, "fatol": 1e-15, "maxiter": 4000})
    return best, max(best, -res.fun)


def test_criterion_05_numerical_radius_oracle():
    rng = rng_for(5)
    for _ in range(100):
        A = ginibre(rng, 2)
        w = numerical_radius(A).value
        sampled, polished = _brute_force_w(A, rng)
        assert sampled <= w + 1e-12
        assert abs(polished - w) <= 1e-6
    for n in (2, 3, 5, 8):
        for _ in range(25):
            A = normal(rng, n)
            assert abs(numerical_radius(A).value - np.linalg.norm(A, 2)) <= 1e-8


@pytest.mark.parametrize("r", [1.0, 1.5, 2.0])
def test_criterion_06_operator_hh_chain(r):
    rng = rng_for(6)
    f = power(r)
    for k in range(200):
        n = 1 + k % 8
        ch = hh_chain(psd(rng, n), psd(rng, n), f)
        for g, s in zip(ch.gaps, ch.scales):
            assert g >= -1e-8 * s
        assert ch.holds


@pytest.mark.parametrize("method", ["lapack", "jacobi"])
def test_criterion_07_eigensolver_quality(method):
    rng = rng_for(7)
    for k in range(1000):
        n = 1 + k % 16
        H = hermitian(rng, n)
        dec = hermitian_eig(H, method=method) if method == "lapack" else jacobi_eig(H)
        U, lam = dec.unitary, dec.eigenvalues
        assert np.all(np.diff(lam) >= 0)
        resid = np.linalg.norm((U * lam) @ U.conj().T - H, 2)
        assert resid <= 1e-10 * (1 + np.linalg.norm(H, 2))
        assert np.linalg.norm(U.conj().T @ U - np.eye(n), 2) <= 1e-10


def test_criterion_08_additive_refinement_sandwich():
    rng = rng_for(8)
    tol = 1e-8
    for k in range(500):
        n = 2 + k % 7
        A = ginibre(rng, n)
        S = A.conj().T @ A + A @ A.conj().T
        lower = 0.25 * np.linalg.norm(S, 2)
        w2 = numerical_radius(A).value ** 2
        mid = additive_refinement_chain(A).values[1]
        assert lower - tol * max(lower, 1.0) <= mid <= w2 + tol * max(w2, 1.0)
    for k in range(50):
        H = hermitian(rng, 2 + k % 7)
        H /= np.linalg.norm(H, 2)
        assert abs(additive_refinement_chain(H).values[1] - np.sqrt(8) / 4) <= 1e-9


def test_criterion_09_weighted_endpoint_identity():
    rng = rng_for(9)
    for k in range(200):
        A = ginibre(rng, 1 + k % 8)
        # telescoping: (1/2)(P + Q) - (P + Q)/2 + (P + Q)/2 with P = A*A, Q = AA*
        oracle = 0.5 * np.linalg.norm(A.conj().T @ A + A @ A.conj().T, 2)
        term2 = weighted_power_chain(OperatorData(A), 0.5, 2.0).values[1]
        assert abs(term2 - oracle) <= 1e-10


def test_criterion_10_determinism():
    ens = [Ensemble(k, n, 3, seed=11) for k in ("ginibre", "normal", "rank_one")
           for n in (2, 5)]
    a = run_suite(SuiteConfig(ensembles=ens)).to_json()
    b = run_suite(SuiteConfig(ensembles=list(ens))).to_json()
    assert a.encode() == b.encode()
