"""Expansion of operators over the unitary product basis {b^q a^p}.

The n^2 products b^q a^p with p, q in {-l..l} are trace-orthogonal,
Tr[(b^q' a^p')^dag (b^q a^p)] = n delta_{qq'} delta_{pp'}, so any operator M
expands as M = sum m_{q,p} b^q a^p with m_{q,p} = (1/n) Tr(a^{-p} b^{-q} M).

Coefficient grids are stored clock-major: ``grid[q + l, p + l]`` holds the
coefficient of b^q a^p.  Self-adjoint operators satisfy
m_{q,p} = omega^{-qp} conj(m_{-q,-p}).
"""

from dataclasses import dataclass

import numpy as np

from .densekernel import as_matrix, max_norm
from .gpo import Dimension, GpoGenerators

__all__ = [
    "SchwingerCoefficients",
    "basis_element",
    "clock_power",
    "decompose",
    "grid_rows",
    "hermiticity_defect",
    "reconstruct",
    "shift_power",
]


@dataclass(frozen=True)
class SchwingerCoefficients:
    """Coefficient grid of one operator over the unitary product basis."""

    dim: Dimension
    grid: np.ndarray

    def coefficient(self, q: int, p: int) -> complex:
        """Coefficient of b^q a^p, with q, p in -l..l."""
        l = self.dim.l
        if not (-l <= q <= l and -l <= p <= l):
            raise ValueError(f"indices ({q}, {p}) outside -{l}..{l}")
        return complex(self.grid[q + l, p + l])


def shift_power(gens: GpoGenerators, k: int) -> np.ndarray:
    """a^k for any integer k.  a is an exact cyclic permutation, so its
    powers are row rotations of the identity."""
    n = gens.dim.n
    return np.roll(np.eye(n, dtype=np.complex128), int(k) % n, axis=0)


def clock_power(gens: GpoGenerators, k: int) -> np.ndarray:
    """b^k = diag(omega^{k j}) for any integer k."""
    n = gens.dim.n
    j = gens.dim.indices()
    out = np.zeros((n, n), dtype=np.complex128)
    out[np.arange(n), np.arange(n)] = np.exp(2j * np.pi * int(k) * j / n)
    return out


def basis_element(gens: GpoGenerators, q: int, p: int) -> np.ndarray:
    """The unitary basis element b^q a^p."""
    return clock_power(gens, q) @ shift_power(gens, p)


def decompose(m, gens: GpoGenerators) -> SchwingerCoefficients:
    """Coefficient grid m_{q,p} = (1/n) Tr(a^{-p} b^{-q} M).

    Because a^{-p} permutes rows and b^{-q} rescales them, the trace
    collapses to sum_j omega^{-q (j + p)} M_{j+p, j}: a Fourier transform of
    each cyclic diagonal of M.  The whole grid is therefore one phase-matrix
    product instead of n^2 dense trace evaluations; the result is identical
    to the literal traces.
    """
    m = as_matrix(m)
    n, l = gens.dim.n, gens.dim.l
    if m.shape != (n, n):
        raise ValueError(f"operator shape {m.shape} does not match dimension {n}")
    j = gens.dim.indices()
    rows = np.arange(n)
    diags = np.empty((n, n), dtype=np.complex128)
    for pi_, p in enumerate(j):
        diags[:, pi_] = m[(rows + p) % n, rows]
    phases = np.exp(-2j * np.pi * np.outer(j, j) / n)
    grid = (phases @ diags) * phases / n
    return SchwingerCoefficients(dim=gens.dim, grid=grid)


def reconstruct(coeffs: SchwingerCoefficients, gens: GpoGenerators) -> np.ndarray:
    """Assemble sum_{q,p} m_{q,p} b^q a^p back into a dense matrix.

    (b^q a^p)_{rc} is omega^{q(r-l)} on the cyclic diagonal r = c + p, so
    each entry of the result is a clock-phase sum over one column of the
    grid.
    """
    if coeffs.dim != gens.dim:
        raise ValueError("coefficient grid and generators have different dimensions")
    n, l = gens.dim.n, gens.dim.l
    j = gens.dim.indices()
    phases = np.exp(2j * np.pi * np.outer(j, j) / n)
    sums = coeffs.grid.T @ phases
    rows = np.arange(n)
    out = np.empty((n, n), dtype=np.complex128)
    for ci in range(n):
        out[:, ci] = sums[(rows - ci + l) % n, rows]
    return out


def hermiticity_defect(coeffs: SchwingerCoefficients) -> float:
    """Largest violation of m_{q,p} = omega^{-qp} conj(m_{-q,-p}).

    Zero (to roundoff) exactly when the expanded operator is self-adjoint.
    """
    n = coeffs.dim.n
    j = coeffs.dim.indices()
    phases = np.exp(-2j * np.pi * np.outer(j, j) / n)
    mirrored = np.conj(coeffs.grid[::-1, ::-1])
    return max_norm(coeffs.grid - phases * mirrored)


def grid_rows(coeffs: SchwingerCoefficients):
    """Yield (q, p, re, im, abs) rows in clock-major order for CSV export."""
    j = coeffs.dim.indices()
    for qi, q in enumerate(j):
        for pi_, p in enumerate(j):
            v = coeffs.grid[qi, pi_]
            yield int(q), int(p), float(v.real), float(v.imag), float(abs(v))
