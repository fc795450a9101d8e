"""Self-check suite behind ``mfao validate``.

Each check draws random inputs from a seeded generator, measures a worst
case deviation and compares it with a fixed tolerance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .bogoliubov import (
    BcsAngles,
    ParameterizationKind as Kind,
    assemble_transform,
    build_blocks,
    quasiparticle_ops,
    special_parameterization,
    unitarity_residual,
)
from .classical import equivalence_check, hamilton_rates
from .fock import (
    ModelParams,
    StateVector,
    annihilation_op,
    anticommutator,
    creation_op,
    energies,
    evolve_exact,
    hamiltonian,
    max_abs,
)
from .meanfield import (
    Occupations,
    closed_form_rates,
    eom_residual_general,
    eom_residual_matrix,
    eom_rhs_trace,
    integrate,
)
from .symmetry import Classification, decompose, probe_all_kinds, quasiparticle_number


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    deviation: float
    tolerance: float


def random_params(rng) -> ModelParams:
    return ModelParams(*rng.uniform(-3.0, 3.0, 3))


def random_angles(rng) -> BcsAngles:
    return BcsAngles.from_array(rng.uniform(-2 * math.pi, 2 * math.pi, 4))


def random_occupations(rng) -> Occupations:
    return Occupations(*rng.uniform(0.0, 1.0, 2))


def car_deviation(lam, lam_dag) -> float:
    worst = 0.0
    eye = np.eye(lam[0].shape[0])
    for i in range(2):
        for j in range(2):
            worst = max(
                worst,
                max_abs(anticommutator(lam[i], lam_dag[j]) - (i == j) * eye),
                max_abs(anticommutator(lam[i], lam[j])),
                max_abs(anticommutator(lam_dag[i], lam_dag[j])),
            )
    return worst


def _check(name, deviation, tol) -> CheckResult:
    deviation = float(deviation)
    return CheckResult(name, bool(deviation <= tol), deviation, tol)


def run_validation(seed: int = 0, draws: int = 200) -> list[CheckResult]:
    rng = np.random.default_rng(seed)
    results = []

    ann = [annihilation_op(1), annihilation_op(2)]
    cre = [creation_op(1), creation_op(2)]
    results.append(_check("particle CAR", car_deviation(ann, cre), 1e-15))

    dev = 0.0
    for _ in range(draws):
        p = random_params(rng)
        dev = max(dev, float(np.max(np.abs(np.sort(np.linalg.eigvalsh(hamiltonian(p))) - np.sort(energies(p))))))
    results.append(_check("exact spectrum", dev, 1e-12))

    dev = 0.0
    for _ in range(draws):
        p = random_params(rng)
        s = StateVector(rng.normal(size=4) + 1j * rng.normal(size=4))
        t = rng.uniform(-10, 10)
        w, v = np.linalg.eigh(hamiltonian(p))
        ref = v @ (np.exp(-1j * w * t) * (v.conj().T @ s.amplitudes))
        dev = max(dev, max_abs(evolve_exact(s, p, t).amplitudes - ref))
    results.append(_check("exact evolution vs eigen-propagator", dev, 1e-10))

    dev_u = dev_car = 0.0
    for _ in range(draws):
        a = random_angles(rng)
        dev_u = max(dev_u, unitarity_residual(assemble_transform(build_blocks(a))))
        dev_car = max(dev_car, car_deviation(*quasiparticle_ops(a)))
    results.append(_check("transform unitarity", dev_u, 1e-12))
    results.append(_check("quasiparticle CAR", dev_car, 1e-12))

    dev_gen = dev_mat = dev_occ = 0.0
    for _ in range(draws):
        a, occ, p = random_angles(rng), random_occupations(rng), random_params(rng)
        r = closed_form_rates(p)
        dev_gen = max(dev_gen, *(abs(x) for x in eom_residual_general(a, r, occ, p)))
        first, second = eom_residual_matrix(a, r, occ, p)
        dev_mat = max(dev_mat, max_abs(first), max_abs(second))
        dev_occ = max(dev_occ, float(np.max(np.abs(np.diag(eom_rhs_trace(a, occ, p)[0])))))
    results.append(_check("closed-form rates solve explicit equations", dev_gen, 1e-10))
    results.append(_check("closed-form rates solve trace equations", dev_mat, 1e-10))
    results.append(_check("occupation stationarity", dev_occ, 1e-12))

    dev = 0.0
    for xi in np.linspace(-math.pi, math.pi, 9):
        for theta in np.linspace(-math.pi, math.pi, 9):
            e = decompose(quasiparticle_number(special_parameterization(Kind.PAIRING, {"xi": xi, "theta": theta})))
            sc = math.sin(xi) * math.cos(xi)
            dev = max(dev, abs(e["n1"] - math.cos(xi) ** 2), abs(e["h2"] - math.sin(xi) ** 2),
                      abs(e["a1+a2+"] - np.exp(-1j * theta) * sc), abs(e["a2a1"] - np.exp(1j * theta) * sc))
    results.append(_check("pairing expansion closed form", dev, 1e-12))

    expected = {
        Kind.PAIRING: Classification.PAIRING_BREAKING,
        Kind.SPIN: Classification.SPIN_BREAKING,
        Kind.IDENTITY: Classification.IDENTITY,
        Kind.ORTHOGONAL: Classification.RELABELING,
        Kind.STATIC_PAIR: Classification.RELABELING,
        Kind.LABEL_SWAP: Classification.PAIRING_BREAKING,
    }
    mismatches = sum(
        row.report.classification is not expected[row.kind]
        or row.has_dynamics != (row.kind in (Kind.PAIRING, Kind.SPIN, Kind.LABEL_SWAP))
        for row in probe_all_kinds(ModelParams())
    )
    results.append(_check("symmetry survey", mismatches, 0))

    dev = 0.0
    for _ in range(20):
        p = random_params(rng)
        q = closed_form_rates(p)
        dev = max(dev, max_abs(np.array(hamilton_rates(p)) - np.array([q.d_theta, q.d_phi, 0.0, 0.0])))
        rep = equivalence_check(p, a0=random_angles(rng), occ=random_occupations(rng), steps=100, method="closed_form")
        if not rep.passed:
            dev = max(dev, 1.0)
    results.append(_check("classical equivalence", dev, 0.0))

    p = random_params(rng)
    a0, occ = random_angles(rng), random_occupations(rng)
    times = np.linspace(0.0, 10.0, 1001)
    cf = integrate(a0, occ, p, times, "closed_form")
    rk = integrate(a0, occ, p, times, "rk4")
    results.append(_check("rk4 vs closed form", np.max(np.abs(cf.angles - rk.angles)), 1e-8))

    return results
