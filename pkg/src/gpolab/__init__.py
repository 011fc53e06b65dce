"""Finite-dimensional quantum mechanics on generalized Pauli operators.

The package builds the clock/shift generator pair for any odd dimension
n = 2l + 1, derives self-adjoint conjugate variables from their principal
logarithms, expands operators over the unitary product basis, quantifies the
spread an operator induces along each conjugate direction (collimation),
checks the finite-difference equations of motion against their
nested-commutator series, and solves the finite harmonic oscillator.
"""

from .collimation import (
    CollimationReport,
    ShiftProfile,
    collimation,
    collimation_report,
    exponential_kernel,
    normalize,
    random_hermitian,
    shift_profile,
)
from .densekernel import (
    EigenDecomposition,
    EigenSolverError,
    as_matrix,
    commutator,
    dagger,
    hermitian_eig,
    matmul,
    matrix_power,
    max_norm,
)
from .dynamics import (
    EomReport,
    dh_dphi,
    dh_dpi,
    eom_residual,
    heisenberg_rate,
    nested_commutator,
)
from .gpo import (
    CommutatorWitness,
    ConjugatePair,
    Dimension,
    GpoGenerators,
    build_conjugate_pair,
    build_generators,
    commutator_witness,
    conjugate_pair_checks,
    generator_checks,
    momentum_cosecant_form,
    momentum_finite_sum,
)
from .oscillator import (
    OscillatorSpec,
    SpectrumResult,
    SweepRow,
    build_hamiltonian,
    cosecant_form_deviation,
    cosecant_hamiltonian,
    eigenvalue_bound,
    ladder_operators,
    spectrum,
    sweep,
)
from .schwinger import (
    SchwingerCoefficients,
    basis_element,
    clock_power,
    decompose,
    grid_rows,
    hermiticity_defect,
    reconstruct,
    shift_power,
)

__version__ = "0.1.0"

__all__ = [
    "CollimationReport",
    "CommutatorWitness",
    "ConjugatePair",
    "Dimension",
    "EigenDecomposition",
    "EigenSolverError",
    "EomReport",
    "GpoGenerators",
    "OscillatorSpec",
    "SchwingerCoefficients",
    "ShiftProfile",
    "SpectrumResult",
    "SweepRow",
    "as_matrix",
    "basis_element",
    "build_conjugate_pair",
    "build_generators",
    "build_hamiltonian",
    "clock_power",
    "collimation",
    "collimation_report",
    "commutator",
    "commutator_witness",
    "conjugate_pair_checks",
    "cosecant_form_deviation",
    "cosecant_hamiltonian",
    "dagger",
    "decompose",
    "dh_dphi",
    "dh_dpi",
    "eigenvalue_bound",
    "eom_residual",
    "exponential_kernel",
    "generator_checks",
    "grid_rows",
    "heisenberg_rate",
    "hermitian_eig",
    "hermiticity_defect",
    "ladder_operators",
    "matmul",
    "matrix_power",
    "max_norm",
    "momentum_cosecant_form",
    "momentum_finite_sum",
    "nested_commutator",
    "normalize",
    "random_hermitian",
    "reconstruct",
    "shift_power",
    "shift_profile",
    "spectrum",
    "sweep",
]
