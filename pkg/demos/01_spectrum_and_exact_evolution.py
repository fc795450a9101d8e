"""Exact spectrum of the two-mode oscillator and closed-form evolution.

Prints the four eigenvalues, then follows a superposition in time and
checks that number, spin and energy expectations stay constant.
"""

import numpy as np

from mfao.fock import ModelParams, StateVector, evolve_exact, expectation, hamiltonian, observable, spectrum

p = ModelParams(hbar_omega=1.0, u=0.5, gb_b=0.25)
print("spectrum (energy, basis index):")
for e, k in spectrum(p):
    print(f"  {k}: {e:+.4f}")

state = StateVector.from_components(1.0, 0.5, 0.5j, 0.3)
h, n, sz = hamiltonian(p), observable("number"), observable("spin_z")
for t in np.linspace(0.0, 5.0, 6):
    s = evolve_exact(state, p, float(t))
    print(f"t={t:4.1f}  <N>={expectation(n, s).real:.6f}  <Sz>={expectation(sz, s).real:+.6f}  <H>={expectation(h, s).real:.6f}")
