"""Dense complex matrix helpers: Hermitian eigensolvers, functional calculus,
absolute value, Cartesian decomposition, norms and the Loewner order.

Matrices are plain ``numpy`` arrays of dtype ``complex128``. Hermitian
results are symmetrised as ``(M + M^*) / 2``, which makes them Hermitian to
the last bit (the diagonal is exactly real).
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

from .errors import ConvergenceError, DimensionError, DomainError
from .functions import ScalarFn

__all__ = [
    "EigenDecomposition", "adjoint", "as_matrix", "as_hermitian",
    "hermitianize", "cartesian_decompose", "hermitian_eig", "jacobi_eig",
    "matrix_function", "operator_abs", "operator_norm", "hermitian_norm",
    "lambda_min", "loewner_leq", "CLAMP_REL",
]

CLAMP_REL = 1e-10
HERMITIAN_CHECK_REL = 1e-12


class EigenDecomposition(NamedTuple):
    eigenvalues: np.ndarray
    unitary: np.ndarray

    def reconstruct(self):
        U, lam = self.unitary, self.eigenvalues
        return (U * lam) @ U.conj().T


def adjoint(A):
    return np.conj(np.swapaxes(A, -1, -2))


def as_matrix(A):
    """Validate a square, finite matrix and return it as ``complex128``."""
    A = np.asarray(A, dtype=complex)
    if A.ndim != 2 or A.shape[0] != A.shape[1] or A.shape[0] == 0:
        raise DimensionError(f"expected a non-empty square matrix, got shape {A.shape}")
    if not np.all(np.isfinite(A)):
        raise ValueError("matrix has non-finite entries")
    return A


def hermitianize(M):
    """Exactly Hermitian part ``(M + M^*) / 2`` (works on stacks)."""
    return 0.5 * (M + adjoint(M))


def as_hermitian(H, check=True):
    """Return ``H`` as an exactly Hermitian matrix.

    With ``check`` the input must already be Hermitian up to
    ``1e-12 * (1 + max|H_ij|)``; the rounding residue is then removed.
    """
    H = as_matrix(H)
    if check:
        defect = np.max(np.abs(H - H.conj().T))
        if defect > HERMITIAN_CHECK_REL * (1.0 + np.max(np.abs(H))):
            raise ValueError(f"matrix is not Hermitian (defect {defect:.3e})")
    return hermitianize(H)


def _same_shape(P, Q):
    if P.shape != Q.shape:
        raise DimensionError(f"dimension mismatch: {P.shape} vs {Q.shape}")


def cartesian_decompose(A):
    """Split ``A = B + iC`` with ``B = (A + A^*)/2`` and ``C = (A - A^*)/(2i)``."""
    A = as_matrix(A)
    As = A.conj().T
    B = 0.5 * (A + As)
    C = -0.5j * (A - As)
    # C is built from a skew-Hermitian difference; hermitianize removes the
    # signed-zero/rounding asymmetry of the multiplication by -i/2.
    return hermitianize(B), hermitianize(C)


def jacobi_eig(H, tol=1e-14, max_sweeps=100):
    """Cyclic complex Jacobi eigensolver for a Hermitian matrix.

    Each rotation first removes the phase of the pivot ``H[p, q]`` with a
    diagonal unitary and then applies the classical real rotation. Sweeps
    stop once the off-diagonal Frobenius mass is below ``tol * ||H||_F``.

    Returns
    -------
    EigenDecomposition
        Eigenvalues ascending (stable order for ties) and unitary columns.
    """
    a = as_hermitian(H).copy()
    n = a.shape[0]
    v = np.eye(n, dtype=complex)
    scale = np.linalg.norm(a)
    if scale == 0.0 or n == 1:
        return EigenDecomposition(np.real(np.diag(a)).copy(), v)
    iu = np.triu_indices(n, 1)
    for _ in range(max_sweeps):
        off = np.sqrt(2.0) * np.linalg.norm(a[iu])
        if off <= tol * scale:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                g = a[p, q]
                mod = abs(g)
                if mod <= 1e-300:
                    continue
                phase = g / mod
                app = a[p, p].real
                aqq = a[q, q].real
                theta = (aqq - app) / (2.0 * mod)
                t = 1.0 / (abs(theta) + np.sqrt(theta * theta + 1.0))
                if theta < 0.0:
                    t = -t
                c = 1.0 / np.sqrt(t * t + 1.0)
                s = t * c
                # G = diag(1, conj(phase)) @ [[c, s], [-s, c]]
                g2 = np.array([[c, s], [-s * np.conj(phase), c * np.conj(phase)]])
                cols = a[:, [p, q]] @ g2
                a[:, p], a[:, q] = cols[:, 0], cols[:, 1]
                rows = g2.conj().T @ a[[p, q], :]
                a[p, :], a[q, :] = rows[0], rows[1]
                a[p, q] = a[q, p] = 0.0
                a[p, p] = a[p, p].real
                a[q, q] = a[q, q].real
                vc = v[:, [p, q]] @ g2
                v[:, p], v[:, q] = vc[:, 0], vc[:, 1]
    else:
        off = np.sqrt(2.0) * np.linalg.norm(a[iu])
        if off > tol * scale:
            raise ConvergenceError(
                f"Jacobi did not converge in {max_sweeps} sweeps "
                f"(off-diagonal {off:.3e})", off)
    lam = np.real(np.diag(a))
    order = np.argsort(lam, kind="stable")
    return EigenDecomposition(lam[order], v[:, order])


def hermitian_eig(H, tol=1e-10, method="lapack"):
    """Eigendecomposition ``H = U diag(lam) U^*`` with a residual check.

    ``method`` is ``"lapack"`` (``numpy.linalg.eigh``) or ``"jacobi"``.
    Raises :class:`ConvergenceError` when the reconstruction residual
    exceeds ``tol * (1 + ||H||)``.
    """
    H = as_hermitian(H)
    if method == "lapack":
        lam, U = np.linalg.eigh(H)
    elif method == "jacobi":
        lam, U = jacobi_eig(H)
    else:
        raise ValueError(f"unknown eigensolver {method!r}")
    dec = EigenDecomposition(lam, U)
    scale = 1.0 + np.max(np.abs(lam))
    resid = np.linalg.norm(dec.reconstruct() - H, 2)
    if resid > tol * scale:
        raise ConvergenceError(f"eigendecomposition residual {resid:.3e}", resid)
    return dec


def _clamped_values(lam, f):
    """Apply the nonnegative-domain clamp to eigenvalues (any leading shape)."""
    if not f.nonneg_domain:
        return lam
    bound = CLAMP_REL * (1.0 + np.max(np.abs(lam), axis=-1, keepdims=True))
    if np.any(lam < -bound):
        worst = float(np.min(lam))
        raise DomainError(f"{f.describe()} needs a spectrum in [0, inf); "
                          f"found eigenvalue {worst:.3e}")
    return np.maximum(lam, 0.0)


def matrix_function(H, f: ScalarFn, *, trusted=False):
    """Functional calculus ``f(H) = U f(Lambda) U^*``.

    Accepts a single matrix or a stack ``(..., n, n)``. Identity and square
    are evaluated as matrix polynomials. Eigenvalues in
    ``[-1e-10 (1 + ||H||), 0)`` are treated as zero when ``f`` lives on
    ``[0, inf)``; anything more negative raises :class:`DomainError`.
    ``trusted`` skips input validation for internal callers that already
    hold exactly Hermitian arrays.
    """
    if not trusted:
        H = np.asarray(H, dtype=complex)
        if H.ndim == 2:
            H = as_hermitian(H)
        else:
            H = hermitianize(H)
    if f.degree == 1:
        return H.copy()
    if f.degree == 2:
        return hermitianize(H @ H)
    lam, U = np.linalg.eigh(H)
    vals = f(_clamped_values(lam, f))
    return hermitianize((U * vals[..., None, :]) @ adjoint(U))


def operator_abs(A):
    """``|A| = (A^* A)^{1/2}``, positive semidefinite."""
    A = as_matrix(A)
    lam, U = np.linalg.eigh(hermitianize(A.conj().T @ A))
    lam = np.sqrt(np.maximum(lam, 0.0))
    return hermitianize((U * lam) @ U.conj().T)


def operator_norm(A):
    """Largest singular value, computed as ``sqrt(lambda_max(A^* A))``."""
    A = as_matrix(A)
    lam = np.linalg.eigvalsh(hermitianize(A.conj().T @ A))
    return float(np.sqrt(max(lam[-1], 0.0)))


def hermitian_norm(H):
    """Operator norm of a Hermitian matrix (largest ``|eigenvalue|``)."""
    lam = np.linalg.eigvalsh(H)
    return float(max(-lam[0], lam[-1], 0.0))


def lambda_min(H):
    return float(np.linalg.eigvalsh(H)[0])


def loewner_leq(P, Q, tol=1e-8):
    """``P <= Q`` in the Loewner order, with slack ``tol (1 + ||P|| + ||Q||)``."""
    P = as_hermitian(P)
    Q = as_hermitian(Q)
    _same_shape(P, Q)
    slack = tol * (1.0 + hermitian_norm(P) + hermitian_norm(Q))
    return lambda_min(Q - P) >= -slack
