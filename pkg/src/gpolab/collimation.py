"""Shift profiles and operator collimation.

A coefficient grid over the unitary product basis tells how an operator
spreads eigenstates of the two conjugate variables: the shift-power index p
moves phi eigenstates by p steps, the clock-power index q moves pi
eigenstates by q steps.  Marginalizing the normalized coefficient magnitudes
over one index gives a shift profile along the other; averaging a profile
against a decaying kernel gives a single collimation number in (0, 1], with
1 meaning the operator induces no spread at all in that direction.
"""

from dataclasses import dataclass

import numpy as np

from .gpo import Dimension
from .schwinger import SchwingerCoefficients

__all__ = [
    "CollimationReport",
    "ShiftProfile",
    "collimation",
    "collimation_report",
    "exponential_kernel",
    "normalize",
    "random_hermitian",
    "shift_profile",
]


def normalize(coeffs: SchwingerCoefficients) -> np.ndarray:
    """Grid rescaled so its coefficient magnitudes sum to one.

    Undefined (and rejected) for the zero operator.
    """
    total = float(np.abs(coeffs.grid).sum())
    if not total > 0:
        raise ValueError("zero operator: normalized amplitudes are undefined")
    return coeffs.grid / total


@dataclass(frozen=True)
class ShiftProfile:
    """Marginal spread weights of one operator along one conjugate axis.

    ``weights[k + l]`` is the total normalized amplitude for a shift of k
    steps, k = -l..l; the weights are non-negative and sum to one.
    """

    dim: Dimension
    axis: str
    weights: np.ndarray


def shift_profile(coeffs: SchwingerCoefficients, axis: str) -> ShiftProfile:
    """Marginal of the normalized magnitudes along one conjugate direction.

    axis="phi" sums over clock powers, leaving the profile of shifts induced
    on phi eigenstates; axis="pi" sums over shift powers.
    """
    if axis not in ("phi", "pi"):
        raise ValueError(f"axis must be 'phi' or 'pi', got {axis!r}")
    tilde = np.abs(normalize(coeffs))
    weights = tilde.sum(axis=0) if axis == "phi" else tilde.sum(axis=1)
    return ShiftProfile(dim=coeffs.dim, axis=axis, weights=weights)


def exponential_kernel(shifts: np.ndarray, n: int) -> np.ndarray:
    """Default suppression factor exp(-|k|/n) for a k-step shift."""
    return np.exp(-np.abs(shifts) / n)


def collimation(profile: ShiftProfile, kernel=exponential_kernel) -> float:
    """Kernel-weighted average of a shift profile.

    With the default exponential kernel the value lies between exp(-l/n)
    and 1; other monotone decay kernels can be plugged in through
    ``kernel(shifts, n)``.
    """
    k = profile.dim.indices()
    return float(np.sum(profile.weights * kernel(k, profile.dim.n)))


@dataclass(frozen=True)
class CollimationReport:
    """Collimation along both conjugate directions plus the two profiles."""

    dim: Dimension
    c_phi: float
    c_pi: float
    phi_profile: ShiftProfile
    pi_profile: ShiftProfile


def collimation_report(coeffs: SchwingerCoefficients, kernel=exponential_kernel) -> CollimationReport:
    """Profiles and collimation numbers of one operator in a single record."""
    phi_p = shift_profile(coeffs, "phi")
    pi_p = shift_profile(coeffs, "pi")
    return CollimationReport(
        dim=coeffs.dim,
        c_phi=collimation(phi_p, kernel),
        c_pi=collimation(pi_p, kernel),
        phi_profile=phi_p,
        pi_profile=pi_p,
    )


def random_hermitian(dim: Dimension, seed: int) -> np.ndarray:
    """Hermitian matrix with standard-normal entries in the phi basis.

    The diagonal is real standard normal; above the diagonal the real and
    imaginary parts are drawn independently standard normal and mirrored by
    conjugation below.  Deterministic for a given seed.
    """
    rng = np.random.default_rng(seed)
    n = dim.n
    out = np.zeros((n, n), dtype=np.complex128)
    out[np.arange(n), np.arange(n)] = rng.standard_normal(n)
    upper = np.triu_indices(n, k=1)
    re = rng.standard_normal(upper[0].size)
    im = rng.standard_normal(upper[0].size)
    out[upper] = re + 1j * im
    out[upper[1], upper[0]] = re - 1j * im
    return out
