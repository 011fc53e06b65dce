"""Finite-dimensional harmonic oscillator.

The Hamiltonian h = pi^2/2 + omega^2 phi^2/2 is built from the dense
conjugate matrices at the equal-scale choice alpha = beta.  Its spectrum is
bounded, pinned between 0 and pi l^2 (1 + omega^2) / n, and approaches the
equispaced (k + 1/2) omega ladder from the infinite-dimensional oscillator
only at the bottom; the top of the spectrum grows linearly with n.
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .densekernel import hermitian_eig, max_norm
from .gpo import ConjugatePair, Dimension, build_conjugate_pair

__all__ = [
    "OscillatorSpec",
    "SpectrumResult",
    "SweepRow",
    "build_hamiltonian",
    "cosecant_form_deviation",
    "cosecant_hamiltonian",
    "eigenvalue_bound",
    "ladder_operators",
    "spectrum",
    "sweep",
]

SYMMETRIC_SCALE_TOL = 1e-12


@dataclass(frozen=True)
class OscillatorSpec:
    """Dimension plus the dimensionless frequency of one oscillator."""

    dim: Dimension
    omega_freq: float

    def __post_init__(self):
        if not self.omega_freq > 0:
            raise ValueError(f"omega_freq must be positive, got {self.omega_freq}")


def _check_pair(spec: OscillatorSpec, pair: ConjugatePair) -> None:
    if pair.dim != spec.dim:
        raise ValueError("pair and oscillator spec have different dimensions")
    if abs(pair.alpha - pair.beta) > SYMMETRIC_SCALE_TOL * pair.alpha:
        raise ValueError(
            "oscillator requires the symmetric scale alpha = beta "
            f"(got alpha={pair.alpha}, beta={pair.beta})"
        )


def build_hamiltonian(spec: OscillatorSpec, pair: ConjugatePair) -> np.ndarray:
    """h = pi^2/2 + omega^2 phi^2/2, symmetrized to exact Hermiticity."""
    _check_pair(spec, pair)
    om = spec.omega_freq
    h = (pair.pi @ pair.pi) / 2 + om**2 * (pair.phi @ pair.phi) / 2
    return (h + h.conj().T) / 2


def cosecant_hamiltonian(spec: OscillatorSpec) -> np.ndarray:
    """Closed-form cosecant-sum matrix elements for the same Hamiltonian.

    Kept purely as a cross-check: see :func:`cosecant_form_deviation` for
    how it compares against the matrix-built operator (its off-diagonal
    entries come out with the opposite sign).
    """
    n, l = spec.dim.n, spec.dim.l
    j = spec.dim.indices()
    d = j[:, None] - j[None, :]
    csc = np.zeros((n, n))
    off = d != 0
    csc[off] = 1.0 / np.sin(2 * np.pi * l * d[off] / n)
    out = (np.pi / (4 * n)) * (csc @ csc)
    out[np.arange(n), np.arange(n)] = (np.pi / (4 * n)) * (csc**2).sum(axis=1) + (
        spec.omega_freq**2 * np.pi / n
    ) * j.astype(np.float64) ** 2
    return out.astype(np.complex128)


def cosecant_form_deviation(spec: OscillatorSpec, pair: ConjugatePair) -> dict:
    """Entrywise distance between the matrix-built Hamiltonian and the
    closed cosecant form, both as written and with the off-diagonal sign
    flipped.  The flipped variant is the one that matches; the matrix-built
    operator stays authoritative either way.
    """
    h = build_hamiltonian(spec, pair)
    cf = cosecant_hamiltonian(spec)
    flipped = -cf
    idx = np.arange(spec.dim.n)
    flipped[idx, idx] = cf[idx, idx]
    return {
        "cosecant_form": max_norm(h - cf),
        "cosecant_form_off_diagonal_negated": max_norm(h - flipped),
    }


def eigenvalue_bound(l: int, omega_freq: float) -> float:
    """pi l^2 (1 + omega^2) / n: the largest eigenvalue either quadratic
    piece of the Hamiltonian can contribute, summed."""
    return float(np.pi * l**2 * (1 + omega_freq**2) / (2 * l + 1))


@dataclass(frozen=True)
class SpectrumResult:
    """Sorted oscillator eigenvalues plus their distance from the
    equispaced (k + 1/2) omega ladder."""

    spec: OscillatorSpec
    eigenvalues: np.ndarray
    lambda_min: float
    lambda_max: float
    vanilla_deviation: np.ndarray


def spectrum(spec: OscillatorSpec) -> SpectrumResult:
    """Eigenvalues of the oscillator at the default symmetric scale."""
    pair = build_conjugate_pair(spec.dim)
    return _spectrum_with_pair(spec, pair)


def _spectrum_with_pair(spec: OscillatorSpec, pair: ConjugatePair) -> SpectrumResult:
    h = build_hamiltonian(spec, pair)
    w = hermitian_eig(h).eigenvalues
    bound = eigenvalue_bound(spec.dim.l, spec.omega_freq)
    if w[-1] > bound + 1e-9 or w[0] < -1e-9:
        raise RuntimeError(
            f"spectrum escaped its bounds: min {w[0]:.6e}, max {w[-1]:.6e}, "
            f"allowed [0, {bound:.6e}]"
        )
    k = np.arange(w.size)
    return SpectrumResult(
        spec=spec,
        eigenvalues=w,
        lambda_min=float(w[0]),
        lambda_max=float(w[-1]),
        vanilla_deviation=w / spec.omega_freq - (k + 0.5),
    )


def ladder_operators(spec: OscillatorSpec, pair: ConjugatePair):
    """Would-be lowering/raising pair built from the conjugate variables.

    lower = sqrt(omega/2) phi + i/sqrt(2 omega) pi and its adjoint satisfy
    h = omega (raise-lower product + half their commutator) exactly, but
    their commutator is the witness z rather than the identity, so they do
    not ladder the finite spectrum.
    """
    _check_pair(spec, pair)
    om = spec.omega_freq
    lower = np.sqrt(om / 2) * pair.phi + (1j / np.sqrt(2 * om)) * pair.pi
    return lower, lower.conj().T


@dataclass(frozen=True)
class SweepRow:
    """Spectrum extremes of one (l, omega) cell, all normalized by omega."""

    l: int
    n: int
    omega: float
    lambda_min_over_omega: float
    lambda_max_over_omega: float
    bound_over_omega: float
    eigenvalues: Optional[np.ndarray] = None


def sweep(ls, omegas, keep_spectra: bool = False) -> list:
    """Spectrum extremes for every (l, omega) cell, sorted by (l, omega).

    One conjugate pair is built per l and reused across frequencies; rows
    come back in deterministic sorted order regardless of input order.
    """
    ls = [int(v) for v in ls]
    omegas = [float(v) for v in omegas]
    if not ls or not omegas:
        raise ValueError("sweep needs at least one l and one omega")
    rows = []
    for l in sorted(ls):
        dim = Dimension(l)
        pair = build_conjugate_pair(dim)
        for om in sorted(omegas):
            spec = OscillatorSpec(dim=dim, omega_freq=om)
            result = _spectrum_with_pair(spec, pair)
            rows.append(
                SweepRow(
                    l=l,
                    n=dim.n,
                    omega=om,
                    lambda_min_over_omega=result.lambda_min / om,
                    lambda_max_over_omega=result.lambda_max / om,
                    bound_over_omega=eigenvalue_bound(l, om) / om,
                    eigenvalues=result.eigenvalues if keep_spectra else None,
                )
            )
    return rows
