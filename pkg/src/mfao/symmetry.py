"""Which symmetries of the exact model a Bogoliubov transformation breaks."""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .bogoliubov import (
    BcsAngles,
    ParameterizationKind,
    SPECIAL_KINDS,
    assemble_transform,
    build_blocks,
    quasiparticle_ops,
    special_parameterization,
)
from .fock import DIM, ModelParams, annihilation_op, commutator, creation_op, max_abs, observable
from .meanfield import AngleRates, StaticSolutionSet, reduced_rates

CONSERVED_TOL = 1e-12
DECOMPOSE_TOL = 1e-9

# Bilinear basis for quasiparticle number operators. The identity and
# a2 a2^dag are not independent (I = a2^dag a2 + a2 a2^dag), so fits are
# done without the identity and any constant part lands on a2 a2^dag.
BASIS_NAMES = ("I", "n1", "n2", "h2", "a1+a2", "a2+a1", "a1+a2+", "a2a1")


def _basis_ops() -> dict[str, np.ndarray]:
    c1, c2 = creation_op(1), creation_op(2)
    a1, a2 = annihilation_op(1), annihilation_op(2)
    return {
        "I": np.eye(DIM, dtype=complex),
        "n1": c1 @ a1,
        "n2": c2 @ a2,
        "h2": a2 @ c2,
        "a1+a2": c1 @ a2,
        "a2+a1": c2 @ a1,
        "a1+a2+": c1 @ c2,
        "a2a1": a2 @ a1,
    }


class DecompositionError(ValueError):
    """Operator lies outside the span of the bilinear basis."""


@dataclass(frozen=True)
class OperatorExpansion:
    coefficients: dict[str, complex]

    def __getitem__(self, name: str) -> complex:
        return self.coefficients[name]

    def reassemble(self) -> np.ndarray:
        ops = _basis_ops()
        return sum(c * ops[name] for name, c in self.coefficients.items())


def decompose(op: np.ndarray) -> OperatorExpansion:
    """Expand ``op`` over :data:`BASIS_NAMES`.

    The identity coefficient is always zero; see the note on the basis.
    Raises :class:`DecompositionError` if the fit leaves a residual above
    ``DECOMPOSE_TOL``.
    """
    ops = _basis_ops()
    fit_names = [n for n in BASIS_NAMES if n != "I"]
    design = np.column_stack([ops[n].ravel() for n in fit_names])
    target = np.asarray(op, dtype=complex).ravel()
    coef, *_ = np.linalg.lstsq(design, target, rcond=None)
    resid = float(np.max(np.abs(design @ coef - target)))
    if resid > DECOMPOSE_TOL:
        raise DecompositionError(f"operator outside bilinear span (residual {resid:.3g})")
    coeffs = {"I": 0j}
    coeffs.update({n: complex(c) for n, c in zip(fit_names, coef)})
    return OperatorExpansion({n: coeffs[n] for n in BASIS_NAMES})


def quasiparticle_number(a: BcsAngles, mode: int = 1) -> np.ndarray:
    lam, lam_dag = quasiparticle_ops(a)
    return lam_dag[mode - 1] @ lam[mode - 1]


class Classification(Enum):
    IDENTITY = "identity"
    PAIRING_BREAKING = "pairing_breaking"
    SPIN_BREAKING = "spin_breaking"
    RELABELING = "relabeling"
    MIXED = "mixed"


@dataclass(frozen=True)
class SymmetryReport:
    number_conserved: bool
    spin_conserved: bool
    number_commutator_norm: float
    spin_commutator_norm: float
    classification: Classification


def conservation_probe(a: BcsAngles) -> SymmetryReport:
    """Commute ``l1^dag l1`` with the fermion number and spin-z charges."""
    probe = quasiparticle_number(a, 1)
    n_norm = max_abs(commutator(observable("number"), probe))
    s_norm = max_abs(commutator(observable("spin_z"), probe))
    n_ok = n_norm <= CONSERVED_TOL
    s_ok = s_norm <= CONSERVED_TOL
    if n_ok and s_ok:
        is_identity = max_abs(assemble_transform(build_blocks(a)) - np.eye(4)) <= CONSERVED_TOL
        cls = Classification.IDENTITY if is_identity else Classification.RELABELING
    elif s_ok:
        cls = Classification.PAIRING_BREAKING
    elif n_ok:
        cls = Classification.SPIN_BREAKING
    else:
        cls = Classification.MIXED
    return SymmetryReport(n_ok, s_ok, n_norm, s_norm, cls)


DEFAULT_SAMPLE_ANGLES: dict[ParameterizationKind, dict[str, float]] = {
    ParameterizationKind.PAIRING: {"theta": 0.3, "xi": math.pi / 4},
    ParameterizationKind.SPIN: {"phi": 0.3, "gamma": math.pi / 4},
    ParameterizationKind.IDENTITY: {"theta": 0.0, "phi": 0.0},
    ParameterizationKind.ORTHOGONAL: {"theta": 0.7, "gamma": math.pi / 2},
    ParameterizationKind.STATIC_PAIR: {"gamma": math.pi / 2, "xi": math.pi / 2},
    ParameterizationKind.LABEL_SWAP: {"phi": 0.3, "xi": math.pi / 4},
}


@dataclass(frozen=True)
class KindSurvey:
    kind: ParameterizationKind
    angles: BcsAngles
    report: SymmetryReport
    has_dynamics: bool
    dynamics: AngleRates | StaticSolutionSet
    on_static_solution: bool | None  # None for kinds with an effective dynamics


def probe_all_kinds(p: ModelParams, sample_angles=None) -> list[KindSurvey]:
    """Symmetry report plus reduced dynamics for each special parameterization.

    ``sample_angles`` maps a kind to its free-angle values; missing kinds
    fall back to :data:`DEFAULT_SAMPLE_ANGLES`, which put the static kinds
    on their stationary solutions.
    """
    samples = dict(DEFAULT_SAMPLE_ANGLES)
    samples.update(sample_angles or {})
    out = []
    for kind in SPECIAL_KINDS:
        free = {n: v for n, v in samples[kind].items() if n in kind.free}
        angles = special_parameterization(kind, free)
        dyn = reduced_rates(kind, p)
        dynamic = isinstance(dyn, AngleRates)
        on_static = None if dynamic else dyn.contains(angles)
        out.append(KindSurvey(kind, angles, conservation_probe(angles), dynamic, dyn, on_static))
    return out
