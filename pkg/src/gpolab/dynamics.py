"""Finite-difference derivative operators and equations of motion.

Conjugating an operator with the shift generator moves it one lattice step
along phi, so (a† h a - a h a†) / (2 alpha) is a central-difference stand-in
for the derivative of h with respect to phi (and the clock generator gives
the pi derivative).  Expanding the conjugations as nested-commutator series
ties these derivatives to the Heisenberg rates i[h, pi] and i[h, phi], up to
an odd-order tail that vanishes as the truncation grows; ``eom_residual``
measures that tail order by order.
"""

import math
from dataclasses import dataclass

import numpy as np

from .densekernel import as_matrix, commutator, max_norm
from .gpo import ConjugatePair, Dimension, GpoGenerators

__all__ = [
    "EomReport",
    "dh_dphi",
    "dh_dpi",
    "eom_residual",
    "heisenberg_rate",
    "nested_commutator",
]

HERMITICITY_TOL = 1e-9


def _check_operator(h, gens: GpoGenerators, pair: ConjugatePair) -> np.ndarray:
    h = as_matrix(h, square=True)
    n = gens.dim.n
    if h.shape != (n, n):
        raise ValueError(f"operator shape {h.shape} does not match dimension {n}")
    if pair.dim != gens.dim:
        raise ValueError("pair and generators have different dimensions")
    return h


def dh_dphi(h, gens: GpoGenerators, pair: ConjugatePair) -> np.ndarray:
    """Central-difference derivative of h along phi:
    (a† h a - a h a†) / (2 alpha).

    Exact cyclic construction; near the lattice edges the wrap-around makes
    it differ from the flat-lattice difference quotient.
    """
    h = _check_operator(h, gens, pair)
    a = gens.a
    return (a.conj().T @ h @ a - a @ h @ a.conj().T) / (2 * pair.alpha)


def dh_dpi(h, gens: GpoGenerators, pair: ConjugatePair) -> np.ndarray:
    """Central-difference derivative of h along pi:
    (b† h b - b h b†) / (2 beta)."""
    h = _check_operator(h, gens, pair)
    b = gens.b
    return (b.conj().T @ h @ b - b @ h @ b.conj().T) / (2 * pair.beta)


def heisenberg_rate(h, o) -> np.ndarray:
    """i [h, o]: rate of change of o under evolution generated by h."""
    return 1j * commutator(h, o)


def nested_commutator(x, h, order: int) -> np.ndarray:
    """order-fold nested commutator [x, [x, ... [x, h]]]; order 0 returns h."""
    x = as_matrix(x, square=True)
    h = as_matrix(h, square=True)
    if x.shape != h.shape:
        raise ValueError(f"dimension mismatch: {x.shape} vs {h.shape}")
    order = int(order)
    if order < 0:
        raise ValueError(f"order must be non-negative, got {order}")
    out = h
    for _ in range(order):
        out = x @ out - out @ x
    return out


@dataclass(frozen=True)
class EomReport:
    """Defect of one truncated equation of motion, order by order.

    ``residual_norm_by_order[k]`` is the max-norm of the defect after all
    odd series terms up to k have been subtracted; k runs over 1, 3, ...,
    ``truncation_order``.
    """

    dim: Dimension
    variable: str
    truncation_order: int
    residual_norm_by_order: dict

    @property
    def final_residual(self) -> float:
        return self.residual_norm_by_order[self.truncation_order]

    def as_dict(self) -> dict:
        return {
            "dim": {"l": self.dim.l, "n": self.dim.n},
            "variable": self.variable,
            "truncation_order": self.truncation_order,
            "orders": [
                {"n": k, "residual": v}
                for k, v in sorted(self.residual_norm_by_order.items())
            ],
            "final_residual": self.final_residual,
        }


def eom_residual(
    h,
    pair: ConjugatePair,
    gens: GpoGenerators,
    variable: str,
    truncation: int = 25,
) -> EomReport:
    """Measure the defect of the truncated equation of motion for ``variable``.

    For variable="pi" the defect after truncation at odd order K is

        i[h, pi] + dh_dphi(h) - sum_{m=3,5,...,K} (i^m / m!) alpha^(m-1) [pi, h]_m

    with [pi, h]_m the m-fold nested commutator; variable="phi" uses the
    mirrored identity i[h, phi] - dh_dpi(h) - sum (i^m/m!) beta^(m-1) [phi, h]_m.
    Both defects shrink to roundoff as K grows.
    """
    if variable not in ("phi", "pi"):
        raise ValueError(f"variable must be 'phi' or 'pi', got {variable!r}")
    truncation = int(truncation)
    if truncation < 3 or truncation % 2 == 0:
        raise ValueError(f"truncation must be an odd integer >= 3, got {truncation}")
    h = _check_operator(h, gens, pair)
    defect = max_norm(h - h.conj().T)
    if defect > HERMITICITY_TOL * max_norm(h):
        raise ValueError(f"operator is not Hermitian: defect {defect:.3e}")

    if variable == "pi":
        x, scale = pair.pi, pair.alpha
        running = heisenberg_rate(h, pair.pi) + dh_dphi(h, gens, pair)
    else:
        x, scale = pair.phi, pair.beta
        running = heisenberg_rate(h, pair.phi) - dh_dpi(h, gens, pair)

    residuals = {1: max_norm(running)}
    nested = x @ h - h @ x
    for order in range(3, truncation + 1, 2):
        nested = x @ nested - nested @ x
        nested = x @ nested - nested @ x
        term = (1j**order / math.factorial(order)) * scale ** (order - 1) * nested
        running = running - term
        residuals[order] = max_norm(running)
    return EomReport(
        dim=pair.dim,
        variable=variable,
        truncation_order=truncation,
        residual_norm_by_order=residuals,
    )
