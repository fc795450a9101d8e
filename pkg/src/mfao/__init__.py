"""Exact and mean-field dynamics of the two-mode fermionic anharmonic oscillator in a magnetic field."""

__version__ = "0.1.0"

from .bogoliubov import (
    BcsAngles,
    ParameterizationKind,
    TransformBlocks,
    assemble_transform,
    build_blocks,
    quasiparticle_op,
    special_parameterization,
    unitarity_residual,
)
from .classical import (
    ClassicalState,
    action_angle_hamiltonian,
    effective_hamiltonian,
    equivalence_check,
    hamilton_rates,
    to_action_angle,
)
from .fock import (
    ModelParams,
    StateVector,
    annihilation_op,
    creation_op,
    evolve_exact,
    expectation,
    hamiltonian,
    observable,
    spectrum,
)
from .meanfield import (
    AngleRates,
    Occupations,
    Trajectory,
    closed_form_rates,
    eom_residual_general,
    eom_rhs_trace,
    integrate,
    meanfield_density,
    reduced_rates,
)
from .symmetry import conservation_probe, decompose, probe_all_kinds
