"""Generalized Pauli operators and the conjugate variables they generate.

For an odd dimension n = 2l + 1 the generators are the cyclic shift matrix
``a`` and the diagonal clock matrix ``b = diag(omega^j)``, j = -l..l, with
omega = exp(2*pi*i/n).  They obey the braiding relation a b = omega^{-1} b a,
wrap to the identity after n steps, and are swapped into each other by the
discrete Fourier matrix ``s`` with entries omega^{jk}/sqrt(n).

Self-adjoint conjugate variables come from the principal logarithms of the
generators through the identification a = exp(-i*alpha*pi_op) and
b = exp(i*beta*phi_op), with the scales tied by alpha * beta * n = 2*pi.
Their commutator [phi, pi] = i z is not central; ``z`` is exposed as an
explicit witness matrix.

Index convention used by every matrix in this package: lattice label
j in {-l..l} is stored at row/column j + l.
"""

import math
from dataclasses import dataclass

import numpy as np

from .densekernel import as_matrix, commutator, max_norm

__all__ = [
    "CommutatorWitness",
    "ConjugatePair",
    "Dimension",
    "GpoGenerators",
    "build_conjugate_pair",
    "build_generators",
    "commutator_witness",
    "conjugate_pair_checks",
    "generator_checks",
    "momentum_cosecant_form",
    "momentum_finite_sum",
]

CONSTRAINT_TOL = 1e-12
WITNESS_AGREEMENT_TOL = 1e-10
MOMENTUM_SERIES_TOL = 1e-10


@dataclass(frozen=True)
class Dimension:
    """Odd Hilbert-space dimension n = 2l + 1, the one input that fixes
    everything else."""

    l: int

    def __post_init__(self):
        if isinstance(self.l, bool) or not isinstance(self.l, (int, np.integer)):
            raise ValueError(f"l must be a non-negative integer, got {self.l!r}")
        if self.l < 0:
            raise ValueError(f"l must be non-negative, got {self.l}")

    @property
    def n(self) -> int:
        return 2 * self.l + 1

    @property
    def omega(self) -> complex:
        """Primitive n-th root of unity exp(2*pi*i/n)."""
        return complex(np.exp(2j * np.pi / self.n))

    def indices(self) -> np.ndarray:
        """Lattice labels -l..l; storage row is j + l."""
        return np.arange(-self.l, self.l + 1)


@dataclass(frozen=True)
class GpoGenerators:
    """Unitary generator pair plus the Fourier matrix linking them."""

    dim: Dimension
    a: np.ndarray
    b: np.ndarray
    s: np.ndarray


@dataclass(frozen=True)
class ConjugatePair:
    """Self-adjoint (phi, pi) with a = exp(-i alpha pi), b = exp(i beta phi)."""

    dim: Dimension
    alpha: float
    beta: float
    phi: np.ndarray
    pi: np.ndarray


@dataclass(frozen=True)
class CommutatorWitness:
    """Hermitian z with [phi, pi] = i z; not central at finite n."""

    dim: Dimension
    z: np.ndarray
    source: str


def build_generators(dim: Dimension) -> GpoGenerators:
    """Construct the shift, clock, and Fourier matrices for one dimension.

    ``a`` has entries delta_{j,k+1} with cyclic wrap (a sends basis state j
    to j + 1), ``b`` is diag(omega^{-l}, ..., omega^{l}), and ``s`` has
    entries omega^{jk}/sqrt(n), so that s a s^{-1} = b.
    """
    n = dim.n
    j = dim.indices()
    a = np.zeros((n, n), dtype=np.complex128)
    a[(np.arange(n) + 1) % n, np.arange(n)] = 1.0
    b = np.zeros((n, n), dtype=np.complex128)
    b[np.arange(n), np.arange(n)] = np.exp(2j * np.pi * j / n)
    s = np.exp(2j * np.pi * np.outer(j, j) / n) / np.sqrt(n)
    return GpoGenerators(dim=dim, a=a, b=b, s=s)


def generator_checks(gens: GpoGenerators) -> dict:
    """Max-norm residuals of the defining generator identities.

    Covers unitarity of all three matrices, the braiding relation, Fourier
    conjugation of a into b, the fourth power of s, the n-step wrap back to
    the identity, and the trace condition over every power 1..n-1.

    Powers of ``a`` are taken by row rotation, which is exact for a 0/1
    permutation, and powers of ``b`` by stepping its diagonal, which agrees
    with repeated dense products to the ulp.
    """
    dim = gens.dim
    n = dim.n
    a, b, s = gens.a, gens.b, gens.s
    eye = np.eye(n)
    # phases are periodic mod n; reducing the exponent keeps n = 1 exact
    omega_inv = complex(np.exp(-2j * np.pi * (1 % n) / n))
    checks = {
        "unitarity_a": max_norm(a.conj().T @ a - eye),
        "unitarity_b": max_norm(b.conj().T @ b - eye),
        "unitarity_s": max_norm(s.conj().T @ s - eye),
        "braiding": max_norm(a @ b - omega_inv * (b @ a)),
        "dft_conjugation": max_norm(s @ a @ s.conj().T - b),
    }
    s2 = s @ s
    checks["fourier_fourth_power"] = max_norm(s2 @ s2 - eye)

    apow = eye.astype(np.complex128)
    bdiag = np.ones(n, dtype=np.complex128)
    bstep = np.exp(2j * np.pi * dim.indices() / n)
    trace_a = 0.0
    trace_b = 0.0
    for _ in range(n - 1):
        apow = np.roll(apow, 1, axis=0)
        bdiag = bdiag * bstep
        trace_a = max(trace_a, abs(np.trace(apow)))
        trace_b = max(trace_b, abs(bdiag.sum()))
    checks["trace_a"] = trace_a
    checks["trace_b"] = trace_b
    apow = np.roll(apow, 1, axis=0)
    bdiag = bdiag * bstep
    checks["toroidal_a"] = max_norm(apow - eye)
    checks["toroidal_b"] = max_norm(bdiag - 1.0)
    return checks


def momentum_finite_sum(dim: Dimension, alpha: float) -> np.ndarray:
    """Momentum matrix elements from the defining finite Fourier sum.

    Entry (j, j') is (2*pi / (n^2 alpha)) * sum_m m exp(2*pi*i (j - j') m / n)
    with m running over -l..l.  The sum only depends on (j - j') mod n, so a
    single length-n transform fills the whole matrix.
    """
    n = dim.n
    j = dim.indices()
    kernel = np.exp(2j * np.pi * np.outer(np.arange(n), j) / n)
    shifts = kernel @ j.astype(np.float64)
    d = (j[:, None] - j[None, :]) % n
    return (2 * np.pi / (n**2 * alpha)) * shifts[d]


def momentum_cosecant_form(dim: Dimension, alpha: float) -> np.ndarray:
    """Piecewise closed form of the momentum matrix: zero diagonal and
    (i*pi / (n*alpha)) * csc(2*pi*l*(j - j')/n) off it.

    Agrees entrywise with :func:`momentum_finite_sum`; kept as an
    independent cross-check of the summed form.
    """
    n, l = dim.n, dim.l
    j = dim.indices()
    d = j[:, None] - j[None, :]
    out = np.zeros((n, n), dtype=np.complex128)
    off = d != 0
    out[off] = (1j * np.pi / (n * alpha)) / np.sin(2 * np.pi * l * d[off] / n)
    return out


def build_conjugate_pair(dim: Dimension, alpha: "float | None" = None) -> ConjugatePair:
    """Build the conjugate pair for ``dim`` with eigenvalue scale ``alpha``.

    phi is diagonal with entries j * alpha.  pi comes from the principal
    logarithm of the shift generator, pi = (-beta/alpha) s^{-1} phi s,
    symmetrized so it is exactly Hermitian, and is verified entrywise
    against the finite Fourier sum.  beta is fixed by alpha * beta * n =
    2*pi; the default alpha = sqrt(2*pi/n) makes the two scales equal.
    """
    if alpha is None:
        alpha = math.sqrt(2 * np.pi / dim.n)
    alpha = float(alpha)
    if not alpha > 0:
        raise ValueError(f"alpha must be positive, got {alpha}")
    beta = 2 * np.pi / (dim.n * alpha)
    n = dim.n
    j = dim.indices()
    phi = np.zeros((n, n), dtype=np.complex128)
    phi[np.arange(n), np.arange(n)] = j * alpha
    s = build_generators(dim).s
    raw = (-beta / alpha) * (s.conj().T @ phi @ s)
    pi = (raw + raw.conj().T) / 2
    drift = max_norm(pi - momentum_finite_sum(dim, alpha))
    if drift > MOMENTUM_SERIES_TOL:
        raise RuntimeError(
            f"momentum construction drifted from its defining sum by {drift:.3e}"
        )
    return ConjugatePair(dim=dim, alpha=alpha, beta=beta, phi=phi, pi=pi)


def conjugate_pair_checks(pair: ConjugatePair, gens: GpoGenerators) -> dict:
    """Residuals of the conjugate-pair identities (parity flips, scale
    constraint, Hermiticity, agreement of both momentum routes, and the
    matching of the two spectra when the scales are equal)."""
    if pair.dim != gens.dim:
        raise ValueError("pair and generators have different dimensions")
    s = gens.s
    s2 = s @ s
    out = {
        "constraint": abs(pair.alpha * pair.beta * pair.dim.n - 2 * np.pi),
        "hermiticity_phi": max_norm(pair.phi - pair.phi.conj().T),
        "hermiticity_pi": max_norm(pair.pi - pair.pi.conj().T),
        "fourier_fourth_power": max_norm(s2 @ s2 - np.eye(pair.dim.n)),
        "parity_phi": max_norm(s2 @ pair.phi @ s2.conj().T + pair.phi),
        "parity_pi": max_norm(s2 @ pair.pi @ s2.conj().T + pair.pi),
        "momentum_series": max_norm(pair.pi - momentum_finite_sum(pair.dim, pair.alpha)),
        "momentum_cosecant": max_norm(pair.pi - momentum_cosecant_form(pair.dim, pair.alpha)),
    }
    if abs(pair.alpha - pair.beta) <= 1e-12 * pair.alpha:
        phi_spec = np.sort(np.linalg.eigvalsh(pair.phi))
        pi_spec = np.sort(np.linalg.eigvalsh(pair.pi))
        out["spectra_match"] = float(np.abs(phi_spec - pi_spec).max())
    return out


def commutator_witness(
    pair: ConjugatePair, gens: GpoGenerators, source: str = "direct"
) -> CommutatorWitness:
    """Witness z of [phi, pi] = i z, from either construction route.

    source="direct" takes z = -i (phi pi - pi phi); source="closed_form"
    fills the cosecant expression pi*(j-j')/n * csc(2*pi*l*(j-j')/n) off the
    diagonal.  Both routes are computed and must agree entrywise to 1e-10,
    whichever one is returned.
    """
    if source not in ("direct", "closed_form"):
        raise ValueError(f"source must be 'direct' or 'closed_form', got {source!r}")
    if pair.dim != gens.dim:
        raise ValueError("pair and generators have different dimensions")
    n, l = pair.dim.n, pair.dim.l
    if abs(pair.alpha * pair.beta * n - 2 * np.pi) > CONSTRAINT_TOL:
        raise ValueError("alpha * beta * n = 2*pi constraint violated")
    direct = -1j * commutator(pair.phi, pair.pi)
    j = pair.dim.indices()
    d = j[:, None] - j[None, :]
    closed = np.zeros((n, n), dtype=np.complex128)
    off = d != 0
    closed[off] = (np.pi * d[off] / n) / np.sin(2 * np.pi * l * d[off] / n)
    agreement = max_norm(direct - closed)
    # the direct route inherits roundoff of order |phi| * |pi| * ulp from
    # the dense products, so the consistency gate scales with that product
    tol = WITNESS_AGREEMENT_TOL * max(1.0, max_norm(pair.phi) * max_norm(pair.pi))
    if agreement > tol:
        raise RuntimeError(
            f"direct and closed-form commutator disagree by {agreement:.3e}"
        )
    z = direct if source == "direct" else closed
    return CommutatorWitness(dim=pair.dim, z=z, source=source)
