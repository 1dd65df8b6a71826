import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from helpers import ginibre, hermitian, psd, rng_for, unitary, unit_vector

from nrbounds import (IDENTITY, SQUARE, ConvergenceError, DimensionError, DomainError,
                      cartesian_decompose, hermitian_eig, jacobi_eig, loewner_leq,
                      matrix_function, operator_abs, operator_norm, power)
from nrbounds.linalg import as_hermitian

SEEDS = st.integers(0, 2 ** 32 - 1)
DIMS = st.integers(1, 8)
FAST = settings(max_examples=60, deadline=None)


class TestCartesian:
    def test_shift(self):
        B, C = cartesian_decompose([[0, 1], [0, 0]])
        assert np.array_equal(B, [[0, 0.5], [0.5, 0]])
        assert np.array_equal(C, [[0, -0.5j], [0.5j, 0]])

    def test_hermitian_input(self, rng):
        H = hermitian(rng, 4)
        B, C = cartesian_decompose(H)
        assert np.allclose(B, H, atol=0, rtol=0)
        assert not np.any(C)

    def test_i_identity(self):
        B, C = cartesian_decompose(1j * np.eye(2))
        assert not np.any(B)
        assert np.array_equal(C, np.eye(2))

    def test_non_square(self):
        with pytest.raises(DimensionError):
            cartesian_decompose(np.zeros((2, 3)))

    def test_non_finite(self):
        with pytest.raises(ValueError):
            cartesian_decompose([[np.nan, 0], [0, 1]])

    @FAST
    @given(SEEDS, DIMS)
    def test_identities(self, seed, n):
        A = ginibre(rng_for(seed), n)
        As = A.conj().T
        B, C = cartesian_decompose(A)
        assert np.array_equal(B, B.conj().T) and np.array_equal(C, C.conj().T)
        # reconstruction exact to rounding of the halving and i-multiplication
        assert np.max(np.abs(B + 1j * C - A)) <= 4e-16 * np.max(np.abs(A))
        assert np.allclose(B @ B + C @ C, (As @ A + A @ As) / 2, atol=1e-10)
        assert np.allclose(B @ B - C @ C, (A @ A + As @ As) / 2, atol=1e-10)


class TestEig:
    def test_diagonal(self):
        dec = hermitian_eig(np.diag([3.0, 1.0]))
        assert np.allclose(dec.eigenvalues, [1, 3])
        assert np.allclose(np.abs(dec.unitary), [[0, 1], [1, 0]])

    def test_swap(self):
        assert np.allclose(hermitian_eig([[0, 1], [1, 0]]).eigenvalues, [-1, 1])

    def test_identity(self):
        dec = hermitian_eig(np.eye(3))
        assert np.allclose(dec.eigenvalues, 1)
        assert np.allclose(dec.reconstruct(), np.eye(3))

    @pytest.mark.parametrize("H", [np.diag([3.0, 1.0]), [[0, 1], [1, 0]], np.eye(3)])
    def test_jacobi_examples(self, H):
        H = np.asarray(H, dtype=complex)
        dec = jacobi_eig(H)
        assert np.allclose(dec.eigenvalues, np.linalg.eigvalsh(H), atol=1e-14)
        assert np.allclose(dec.reconstruct(), H, atol=1e-14)

    def test_unknown_method(self):
        with pytest.raises(ValueError):
            hermitian_eig(np.eye(2), method="qr")

    def test_not_hermitian(self):
        with pytest.raises(ValueError):
            hermitian_eig([[0, 1], [0, 0]])

    def test_jacobi_iteration_cap(self, rng):
        with pytest.raises(ConvergenceError) as err:
            jacobi_eig(hermitian(rng, 6), max_sweeps=1)
        assert err.value.residual > 0

    def test_jacobi_degenerate(self):
        H = np.diag([2.0, 2.0, 1.0]).astype(complex)
        dec = jacobi_eig(H)
        assert np.array_equal(dec.eigenvalues, [1.0, 2.0, 2.0])

    @FAST
    @given(SEEDS, st.integers(1, 12))
    def test_jacobi_matches_lapack(self, seed, n):
        H = hermitian(rng_for(seed), n)
        lam, U = jacobi_eig(H)
        assert np.allclose(lam, np.linalg.eigvalsh(H), atol=1e-12 * (1 + np.abs(lam).max()))
        assert np.linalg.norm(U.conj().T @ U - np.eye(n)) <= 1e-12


class TestMatrixFunction:
    def test_identity_fn(self, rng):
        H = hermitian(rng, 3)
        assert np.array_equal(matrix_function(H, IDENTITY), as_hermitian(H))

    def test_sqrt_diag(self):
        assert np.allclose(matrix_function(np.diag([4.0, 9.0]), power(0.5)), np.diag([2, 3]))

    def test_square(self):
        H = np.array([[2.0, 1.0], [1.0, 2.0]])
        assert np.array_equal(matrix_function(H, SQUARE).real, [[5, 4], [4, 5]])

    def test_clamp_small_negative(self):
        out = matrix_function(np.diag([1.0, -1e-13]), power(1.5))
        assert np.allclose(out, np.diag([1.0, 0.0]))

    def test_domain_error(self):
        with pytest.raises(DomainError):
            matrix_function(np.diag([1.0, -0.1]), power(1.5))

    def test_polynomials_on_whole_line(self):
        H = np.diag([-2.0, 1.0])
        assert np.allclose(matrix_function(H, SQUARE), np.diag([4.0, 1.0]))

    @FAST
    @given(SEEDS, DIMS, st.sampled_from([0.5, 1.0, 1.25, 1.5, 2.0, 3.0]))
    def test_commutes_and_hermitian(self, seed, n, r):
        H = psd(rng_for(seed), n)
        F = matrix_function(H, power(r))
        assert np.array_equal(F, F.conj().T)
        assert np.allclose(F @ H, H @ F, atol=1e-10 * (1 + np.linalg.norm(F) * np.linalg.norm(H)))

    @FAST
    @given(SEEDS, DIMS, st.sampled_from([1.0, 1.5, 2.0, 3.0]))
    def test_norm_of_increasing_fn(self, seed, n, r):
        X = hermitian(rng_for(seed), n)
        lhs = np.linalg.norm(matrix_function(operator_abs(X), power(r)), 2)
        rhs = np.linalg.norm(X, 2) ** r
        assert abs(lhs - rhs) <= 1e-9 * rhs

    @FAST
    @given(SEEDS, DIMS, st.sampled_from(["square", "1.5"]))
    def test_convex_inner_product(self, seed, n, which):
        rng = rng_for(seed)
        f = SQUARE if which == "square" else power(1.5)
        H = psd(rng, n)
        x = unit_vector(rng, n)
        lhs = f(np.vdot(x, H @ x).real)
        rhs = np.vdot(x, matrix_function(H, f) @ x).real
        assert lhs <= rhs + 1e-9


class TestAbsAndNorm:
    def test_shift_abs(self):
        assert np.allclose(operator_abs([[0, 1], [0, 0]]), np.diag([0, 1]))

    def test_psd_fixed(self, rng):
        P = psd(rng, 4)
        assert np.allclose(operator_abs(P), P, atol=1e-12)

    def test_scaled_unitary(self, rng):
        assert np.allclose(operator_abs(2 * unitary(rng, 3)), 2 * np.eye(3), atol=1e-12)

    @pytest.mark.parametrize("A, expected", [
        (np.eye(3), 1.0), ([[0, 1], [0, 0]], 1.0), (np.diag([1, -3j]), 3.0),
        (np.zeros((2, 2)), 0.0)])
    def test_norm_examples(self, A, expected):
        assert operator_norm(A) == pytest.approx(expected, abs=1e-15)

    @FAST
    @given(SEEDS, DIMS)
    def test_abs_norm_consistency(self, seed, n):
        A = ginibre(rng_for(seed), n)
        nA = operator_norm(A)
        assert nA == pytest.approx(np.linalg.norm(A, 2), rel=1e-12)
        for M in (operator_abs(A), operator_abs(A.conj().T)):
            assert abs(np.linalg.norm(M, 2) - nA) <= 1e-10
            assert np.linalg.eigvalsh(M)[0] >= -1e-12


class TestLoewner:
    def test_examples(self):
        assert loewner_leq(np.zeros((2, 2)), np.eye(2))
        assert not loewner_leq(np.eye(2), np.zeros((2, 2)))
        assert loewner_leq(np.diag([1.0, 0.0]), np.eye(2))

    def test_mismatch(self):
        with pytest.raises(DimensionError):
            loewner_leq(np.eye(2), np.eye(3))

    def test_slack_is_relative(self):
        P = np.diag([1e6, 0.0])
        assert loewner_leq(P, P - 1e-4 * np.diag([1.0, 0.0]))
        assert not loewner_leq(P, P - 1.0 * np.diag([1.0, 0.0]))

    @FAST
    @given(SEEDS, DIMS)
    def test_midpoint_square(self, seed, n):
        rng = rng_for(seed)
        X, Y = hermitian(rng, n), hermitian(rng, n)
        M = (X + Y) / 2
        assert loewner_leq(M @ M, (X @ X + Y @ Y) / 2)
