"""Acceptance criteria, one test each.

Run ``pytest tests/test_acceptance.py`` (a summary line per criterion is
printed at the end of the session) or ``python tests/test_acceptance.py``.
"""

import math
import os
import subprocess
import sys
import tempfile

import numpy as np
import pytest

from mfao.bogoliubov import (
    BcsAngles,
    ParameterizationKind as Kind,
    assemble_transform,
    build_blocks,
    quasiparticle_ops,
    special_parameterization,
    unitarity_residual,
)
from mfao.classical import hamilton_rates, to_action_angle
from mfao.fock import ModelParams, annihilation_op, creation_op, hamiltonian
from mfao.meanfield import (
    Occupations,
    closed_form_rates,
    eom_residual_general,
    eom_rhs_trace,
    fit_reduced_rates,
    integrate,
    reduced_rates,
)
from mfao.symmetry import Classification, conservation_probe, decompose, probe_all_kinds, quasiparticle_number
from mfao.validation import car_deviation

RESULTS: dict[int, str] = {}


def rng(seed):
    return np.random.default_rng(seed)


def rand_params(g):
    return ModelParams(*g.uniform(-3, 3, 3))


def rand_angles(g):
    return BcsAngles.from_array(g.uniform(-2 * math.pi, 2 * math.pi, 4))


def rand_occ(g):
    return Occupations(*g.uniform(0, 1, 2))


def record(n, title, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {n:2d}: {title} ({detail})"
    RESULTS[n] = line
    print(line)
    assert ok, line


def test_c01_exact_spectrum():
    g, dev = rng(1), 0.0
    for _ in range(100):
        p = rand_params(g)
        eig = np.sort(np.linalg.eigvalsh(hamiltonian(p)))
        ref = np.sort([0.0, p.hbar_omega + p.gb_b, p.hbar_omega - p.gb_b, 2 * p.hbar_omega + p.u])
        dev = max(dev, float(np.max(np.abs(eig - ref))))
    record(1, "exact spectrum, 100 draws", dev <= 1e-12, f"max dev {dev:.2e} <= 1e-12")


def test_c02_car():
    dev_p = car_deviation([annihilation_op(1), annihilation_op(2)], [creation_op(1), creation_op(2)])
    g, dev_q = rng(2), 0.0
    for _ in range(1000):
        dev_q = max(dev_q, car_deviation(*quasiparticle_ops(rand_angles(g))))
    ok = dev_p <= 1e-15 and dev_q <= 1e-12
    record(2, "CAR particles / quasiparticles (1000 draws)", ok,
           f"particle {dev_p:.2e} <= 1e-15, quasiparticle {dev_q:.2e} <= 1e-12")


def test_c03_unitarity():
    g, dev = rng(3), 0.0
    for _ in range(1000):
        dev = max(dev, unitarity_residual(assemble_transform(build_blocks(rand_angles(g)))))
    record(3, "transform unitarity, 1000 draws", dev <= 1e-12, f"max residual {dev:.2e} <= 1e-12")


def test_c04_eom_oracles():
    g, dev = rng(4), 0.0
    for _ in range(1000):
        a, occ, p = rand_angles(g), rand_occ(g), rand_params(g)
        dev = max(dev, *(abs(r) for r in eom_residual_general(a, closed_form_rates(p), occ, p)))

    # source prefactors from the Fock-space traces at the two special kinds
    dev_src = 0.0
    for _ in range(200):
        occ, p = rand_occ(g), rand_params(g)
        gam, phi, xi, th = g.uniform(-math.pi, math.pi, 4)
        normal, _ = eom_rhs_trace(special_parameterization(Kind.SPIN, {"gamma": gam, "phi": phi}), occ, p)
        spin_pref = -1j * p.gb_b * (occ.p2 - occ.p1) * math.sin(2 * gam)
        # Hermitian normal matrix: the (1, 2) entry carries the conjugate phase e^{+i phi}
        dev_src = max(dev_src, abs(normal[0, 1] * np.exp(-1j * phi) - spin_pref))
        _, anomalous = eom_rhs_trace(special_parameterization(Kind.PAIRING, {"xi": xi, "theta": th}), occ, p)
        pair_pref = 0.5j * (1 - occ.p1 - occ.p2) * (2 * p.hbar_omega + p.u) * math.sin(2 * xi)
        dev_src = max(dev_src, abs(anomalous[1, 0] * np.exp(1j * th) - pair_pref))
    ok = dev <= 1e-10 and dev_src <= 1e-10
    record(4, "closed-form rates vs explicit equations; trace source prefactors", ok,
           f"residual {dev:.2e} <= 1e-10, prefactor dev {dev_src:.2e} <= 1e-10")


def test_c05_occupations_stationary():
    g, dev = rng(5), 0.0
    for _ in range(1000):
        normal, _ = eom_rhs_trace(rand_angles(g), rand_occ(g), rand_params(g))
        dev = max(dev, float(np.max(np.abs(np.diag(normal)))))
    record(5, "occupation stationarity, 1000 draws", dev <= 1e-12, f"max |diag| {dev:.2e} <= 1e-12")


def test_c06_symmetry_survey():
    g = rng(6)
    p = ModelParams(1.3, 0.7, 0.45)
    problems = []
    rows = {row.kind: row for row in probe_all_kinds(p)}

    for _ in range(50):
        xi, th = g.uniform(-math.pi, math.pi, 2)
        if abs(math.sin(2 * xi)) < 1e-3:
            continue
        r = conservation_probe(special_parameterization(Kind.PAIRING, {"xi": xi, "theta": th}))
        e = decompose(quasiparticle_number(special_parameterization(Kind.PAIRING, {"xi": xi, "theta": th})))
        mag = abs(math.sin(xi) * math.cos(xi))
        if r.classification is not Classification.PAIRING_BREAKING:
            problems.append("pairing classification")
        if abs(abs(e["a1+a2+"]) - mag) > 1e-12 or abs(abs(e["a2a1"]) - mag) > 1e-12:
            problems.append("pairing term magnitude")

        gam, phi = g.uniform(-math.pi, math.pi, 2)
        if abs(math.sin(2 * gam)) >= 1e-3:
            r = conservation_probe(special_parameterization(Kind.SPIN, {"gamma": gam, "phi": phi}))
            if r.classification is not Classification.SPIN_BREAKING:
                problems.append("spin classification")

    if not (rows[Kind.PAIRING].has_dynamics and rows[Kind.SPIN].has_dynamics):
        problems.append("pairing/spin dynamics")
    for kind in (Kind.IDENTITY, Kind.ORTHOGONAL, Kind.STATIC_PAIR):
        for k in (-2, -1, 0, 1, 2):
            free = {
                Kind.IDENTITY: {"theta": k * 0.7, "phi": k * 0.3},
                Kind.ORTHOGONAL: {"gamma": k * math.pi / 2, "theta": 0.4 * k},
                Kind.STATIC_PAIR: {"gamma": k * math.pi / 2, "xi": (k + 1) * math.pi / 2},
            }[kind]
            r = conservation_probe(special_parameterization(kind, free))
            if not (r.number_conserved and r.spin_conserved):
                problems.append(f"{kind.name} breaks a symmetry")
        if rows[kind].has_dynamics:
            problems.append(f"{kind.name} has dynamics")

    swap = rows[Kind.LABEL_SWAP]
    if swap.report.number_conserved or not swap.has_dynamics:
        problems.append("label swap")
    # label-swap dynamics equal pairing under theta -> -phi, confirmed by the traces
    pair_rate = reduced_rates(Kind.PAIRING, p).d_theta
    swap_rate = reduced_rates(Kind.LABEL_SWAP, p).d_phi
    _, resid = fit_reduced_rates(Kind.LABEL_SWAP, swap.angles, Occupations(0.2, 0.65), p)
    if swap_rate != -pair_rate or resid > 1e-12:
        problems.append("label swap rate")

    record(6, "symmetry classification of the six kinds", not problems,
           "all kinds as expected" if not problems else "; ".join(sorted(set(problems))))


def test_c07_decomposition_grid():
    grid = np.linspace(-math.pi, math.pi, 20)
    dev = 0.0
    for u in grid:
        for v in grid:
            e = decompose(quasiparticle_number(special_parameterization(Kind.PAIRING, {"xi": u, "theta": v})))
            sc = math.sin(u) * math.cos(u)
            dev = max(dev, abs(e["n1"] - math.cos(u) ** 2), abs(e["h2"] - math.sin(u) ** 2),
                      abs(e["a1+a2+"] - np.exp(-1j * v) * sc), abs(e["a2a1"] - np.exp(1j * v) * sc),
                      abs(e["n2"]), abs(e["a1+a2"]), abs(e["a2+a1"]), abs(e["I"]))
            e = decompose(quasiparticle_number(special_parameterization(Kind.SPIN, {"gamma": u, "phi": v})))
            sc = math.sin(u) * math.cos(u)
            dev = max(dev, abs(e["n1"] - math.cos(u) ** 2), abs(e["n2"] - math.sin(u) ** 2),
                      abs(e["a1+a2"] - np.exp(-1j * v) * sc), abs(e["a2+a1"] - np.exp(1j * v) * sc),
                      abs(e["h2"]), abs(e["a1+a2+"]), abs(e["a2a1"]), abs(e["I"]))
    record(7, "pairing/spin expansions on 20x20 grid", dev <= 1e-12, f"max dev {dev:.2e} <= 1e-12")


def test_c08_classical_equivalence():
    g = rng(8)
    exact = True
    for _ in range(100):
        p = rand_params(g)
        q = closed_form_rates(p)
        exact &= hamilton_rates(p) == (q.d_theta, q.d_phi, 0.0, 0.0)
    drift, bounded = 0.0, True
    times = np.linspace(0, 10, 1001)
    for method in ("closed_form", "rk4"):
        for _ in range(10):
            traj = integrate(rand_angles(g), rand_occ(g), rand_params(g), times, method)
            states = [to_action_angle(BcsAngles.from_array(r)) for r in traj.angles]
            j = np.array([[s.j1, s.j2] for s in states])
            drift = max(drift, float(np.max(np.abs(j - j[0]))))
            bounded &= bool(np.all(np.abs(j) <= 1))
    ok = exact and drift <= 1e-12 and bounded
    record(8, "classical rates and action constancy", ok,
           f"rates exact={exact}, action drift {drift:.2e} <= 1e-12, bounded={bounded}")


def test_c09_rk4_vs_closed_form():
    g, dev = rng(9), 0.0
    times = np.linspace(0, 10, 1001)
    for _ in range(10):
        a0, occ, p = rand_angles(g), rand_occ(g), rand_params(g)
        cf = integrate(a0, occ, p, times, "closed_form")
        rk = integrate(a0, occ, p, times, "rk4")
        dev = max(dev, float(np.max(np.abs(cf.angles - rk.angles))))
    record(9, "rk4 vs closed form on [0, 10], 1000 steps", dev <= 1e-8, f"max dev {dev:.2e} <= 1e-8")


def _cli(args, out):
    return subprocess.run([sys.executable, "-m", "mfao.cli", *args, "--out", out], capture_output=True)


def test_c10_cli_determinism():
    args = ["evolve-meanfield", "--format", "json", "--gamma0", "0.4", "--xi0", "0.9", "--p1", "0.3", "--method", "rk4"]
    with tempfile.TemporaryDirectory() as tmp:
        outs = []
        for name in ("a.json", "b.json"):
            path = os.path.join(tmp, name)
            proc = _cli(args, path)
            with open(path, "rb") as fh:
                outs.append((proc.returncode, fh.read()))
        proc = _cli(["validate"], os.path.join(tmp, "v.csv"))
    identical = outs[0] == outs[1] and outs[0][0] == 0
    ok = identical and proc.returncode == 0
    record(10, "CLI byte-identical output; validate exits 0", ok,
           f"identical={identical}, validate exit {proc.returncode}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
