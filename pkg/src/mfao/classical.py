"""Classical precession picture of the mean-field dynamics.

The mean-field rates are constants, so the angle dynamics is generated by
a Hamiltonian linear in two actions ``j1 = cos(gamma)`` and ``j2 =
cos(xi)``, conjugate to ``theta`` and ``phi``. The actions are the
projections of two unit moments on the field; ``gamma`` and ``xi`` are
their colatitudes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bogoliubov import BcsAngles
from .fock import ModelParams
from .meanfield import Occupations, closed_form_rates, integrate


@dataclass(frozen=True)
class ClassicalState:
    alpha1: float
    alpha2: float
    j1: float
    j2: float

    def __post_init__(self):
        for name in ("j1", "j2"):
            if abs(getattr(self, name)) > 1.0:
                raise ValueError(f"{name} must lie in [-1, 1], got {getattr(self, name)!r}")


def _couplings(p: ModelParams) -> tuple[float, float]:
    return 2 * p.gb_b + 2 * p.hbar_omega + p.u, 2 * p.gb_b


def effective_hamiltonian(p: ModelParams, gamma: float, xi: float) -> float:
    """Angle-form Hamiltonian: ``xi`` and ``gamma`` act as momenta of ``theta`` and ``phi``."""
    c_pair, c_spin = _couplings(p)
    return c_pair * xi + c_spin * gamma


def action_angle_hamiltonian(p: ModelParams, s: ClassicalState) -> float:
    c_pair, c_spin = _couplings(p)
    return c_pair * s.j1 + c_spin * s.j2


def to_action_angle(a: BcsAngles) -> ClassicalState:
    return ClassicalState(alpha1=a.theta, alpha2=a.phi, j1=math.cos(a.gamma), j2=math.cos(a.xi))


def hamilton_rates(p: ModelParams) -> tuple[float, float, float, float]:
    """``(d alpha1, d alpha2, d j1, d j2)`` from Hamilton's equations.

    ``d alpha_k = dH/dj_k`` and ``d j_k = -dH/d alpha_k``; H does not
    depend on the angles, so the actions are frozen.
    """
    c_pair, c_spin = _couplings(p)
    return (c_pair, c_spin, 0.0, 0.0)


def angle_form_rates(p: ModelParams) -> dict[str, float]:
    """Rates generated by :func:`effective_hamiltonian` under its own pairing.

    There ``phi`` is conjugate to ``gamma`` and ``theta`` to ``xi``, so
    ``d phi = dH/d gamma``, ``d gamma = -dH/d phi`` and likewise for the
    other pair. Derivatives are taken by central differences, which are
    exact for a linear function up to roundoff.
    """
    h = 1e-3
    d_dgamma = (effective_hamiltonian(p, h, 0.0) - effective_hamiltonian(p, -h, 0.0)) / (2 * h)
    d_dxi = (effective_hamiltonian(p, 0.0, h) - effective_hamiltonian(p, 0.0, -h)) / (2 * h)
    return {"d_theta": d_dxi, "d_phi": d_dgamma, "d_gamma": 0.0, "d_xi": 0.0}


@dataclass(frozen=True)
class EquivalenceReport:
    passed: bool
    rate_deviation: float
    action_drift: float
    angle_slope_deviation: float
    energy_drift: float
    action_bound_ok: bool
    tolerance: float


def equivalence_check(
    p: ModelParams,
    a0: BcsAngles | None = None,
    occ: Occupations | None = None,
    t_end: float = 10.0,
    steps: int = 1000,
    method: str = "rk4",
    tol: float = 1e-12,
) -> EquivalenceReport:
    """Compare classical precession with the quantum mean-field rates.

    Checks that the classical angular velocities equal the quantum phase
    rates, that the actions stay constant and bounded along an integrated
    mean-field trajectory, and that the angles advance with the classical
    slopes. Angle deviations are measured relative to ``1 + |angle|`` since
    the angles grow without bound.
    """
    a0 = a0 or BcsAngles(0.3, -0.2, 0.9, 1.4)
    occ = occ or Occupations(0.25, 0.6)
    q = closed_form_rates(p)
    cl = hamilton_rates(p)
    rate_dev = max(
        abs(cl[0] - q.d_theta),
        abs(cl[1] - q.d_phi),
        abs(cl[2] - q.d_gamma),
        abs(cl[3] - q.d_xi),
    )

    times = np.linspace(0.0, t_end, steps + 1) if t_end > 0 else np.array([0.0])
    traj = integrate(a0, occ, p, times, method=method)
    states = [to_action_angle(BcsAngles.from_array(row)) for row in traj.angles]
    j1 = np.array([s.j1 for s in states])
    j2 = np.array([s.j2 for s in states])
    alpha = np.array([[s.alpha1, s.alpha2] for s in states])
    action_drift = float(max(np.max(np.abs(j1 - j1[0])), np.max(np.abs(j2 - j2[0]))))
    bound_ok = bool(np.all(np.abs(j1) <= 1.0) and np.all(np.abs(j2) <= 1.0))

    predicted = alpha[0][None, :] + np.outer(times, cl[:2])
    slope_dev = float(np.max(np.abs(alpha - predicted) / (1.0 + np.abs(predicted))))

    energies = np.array([action_angle_hamiltonian(p, s) for s in states])
    energy_drift = float(np.max(np.abs(energies - energies[0])))

    passed = (
        rate_dev <= tol
        and action_drift <= tol
        and slope_dev <= tol
        and energy_drift <= tol
        and bound_ok
    )
    return EquivalenceReport(passed, rate_dev, action_drift, slope_dev, energy_drift, bound_ok, tol)
