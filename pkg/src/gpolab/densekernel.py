"""Dense complex-matrix substrate shared by every other module.

Matrices are plain ``numpy.ndarray`` objects of dtype complex128 in row-major
layout.  The helpers here add the input validation and the Hermitian
eigendecomposition contract that the rest of the package relies on; heavy
lifting is delegated to LAPACK through numpy.
"""

from dataclasses import dataclass

import numpy as np

__all__ = [
    "EigenDecomposition",
    "EigenSolverError",
    "as_matrix",
    "commutator",
    "dagger",
    "hermitian_eig",
    "matmul",
    "matrix_power",
    "max_norm",
]

HERMITICITY_TOL = 1e-9
ORTHONORMALITY_TOL = 1e-10
EIG_RESIDUAL_TOL = 1e-9


class EigenSolverError(RuntimeError):
    """The eigensolver failed to converge or broke its output contract."""


def as_matrix(m, square: bool = False) -> np.ndarray:
    """Validate ``m`` as a finite 2-D complex128 array and return it."""
    out = np.asarray(m, dtype=np.complex128)
    if out.ndim != 2:
        raise ValueError(f"expected a 2-D matrix, got ndim={out.ndim}")
    if not np.isfinite(out).all():
        raise ValueError("matrix entries must be finite (no NaN/Inf)")
    if square and out.shape[0] != out.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {out.shape}")
    return out


def max_norm(m) -> float:
    """Entrywise max-norm, the tolerance yardstick used throughout."""
    m = np.asarray(m)
    return float(np.abs(m).max()) if m.size else 0.0


def matmul(a, b) -> np.ndarray:
    """Matrix product with an explicit shape check."""
    a = as_matrix(a)
    b = as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise ValueError(f"dimension mismatch: {a.shape} @ {b.shape}")
    return a @ b


def dagger(m) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(m).conj().T


def commutator(a, b) -> np.ndarray:
    """ab - ba for square matrices of equal size."""
    a = as_matrix(a, square=True)
    b = as_matrix(b, square=True)
    if a.shape != b.shape:
        raise ValueError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return a @ b - b @ a


def matrix_power(m, k: int) -> np.ndarray:
    """k-fold product of ``m`` with itself by repeated multiplication.

    Only k >= 0 is defined here; callers that need inverse powers of a
    unitary should pass ``dagger(m)`` instead.
    """
    m = as_matrix(m, square=True)
    k = int(k)
    if k < 0:
        raise ValueError("negative powers are not supported; pass dagger(m)")
    out = np.eye(m.shape[0], dtype=np.complex128)
    for _ in range(k):
        out = out @ m
    return out


@dataclass(frozen=True)
class EigenDecomposition:
    """Spectral factorization h = V diag(w) V-dagger of a Hermitian matrix.

    ``eigenvalues`` is real and ascending; ``eigenvectors[:, k]`` is the
    orthonormal eigenvector belonging to ``eigenvalues[k]``.
    """

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def hermitian_eig(h) -> EigenDecomposition:
    """Eigendecomposition of a Hermitian matrix with ascending eigenvalues.

    The input must be Hermitian to within ``1e-9 * max_norm(h)``.  The
    returned factors satisfy ``max_norm(V†V - I) <= 1e-10`` and
    ``max_norm(hV - V diag(w)) <= 1e-9 * max_norm(h)``; both are verified
    before returning.  Deterministic for identical input.
    """
    h = as_matrix(h, square=True)
    scale = max_norm(h)
    defect = max_norm(h - h.conj().T)
    if defect > HERMITICITY_TOL * scale:
        raise ValueError(
            f"matrix is not Hermitian: defect {defect:.3e} exceeds "
            f"{HERMITICITY_TOL:.0e} * {scale:.3e}"
        )
    try:
        w, v = np.linalg.eigh(h)
    except np.linalg.LinAlgError as exc:
        raise EigenSolverError(f"eigensolver did not converge: {exc}") from exc
    ortho = max_norm(v.conj().T @ v - np.eye(v.shape[0]))
    residual = max_norm(h @ v - v * w)
    if ortho > ORTHONORMALITY_TOL or residual > EIG_RESIDUAL_TOL * max(scale, 1.0):
        raise EigenSolverError(
            f"eigendecomposition broke its contract: orthonormality defect "
            f"{ortho:.3e}, residual {residual:.3e}"
        )
    return EigenDecomposition(eigenvalues=w, eigenvectors=v)
