"""The mean-field angles as a classical precession in action-angle form."""

from mfao.classical import equivalence_check, hamilton_rates
from mfao.fock import ModelParams

p = ModelParams(1.0, 0.5, 0.25)
print("classical angular velocities and action rates:", hamilton_rates(p))
print(equivalence_check(p))
