"""Mean-field angle trajectory: closed form against an RK4 integration."""

import numpy as np

from mfao.bogoliubov import BcsAngles
from mfao.fock import ModelParams
from mfao.meanfield import Occupations, closed_form_rates, integrate

p = ModelParams(1.0, 0.5, 0.25)
a0, occ = BcsAngles(0.1, 0.2, 0.7, 1.1), Occupations(0.3, 0.6)
print("rates:", closed_form_rates(p))
times = np.linspace(0.0, 10.0, 1001)
cf = integrate(a0, occ, p, times, "closed_form")
rk = integrate(a0, occ, p, times, "rk4")
print("final angles (theta, phi, gamma, xi):", cf.angles[-1])
print("max |rk4 - closed form|:", float(np.max(np.abs(cf.angles - rk.angles))))
