import math

import numpy as np
import pytest
from hypothesis import strategies as st

from mfao.bogoliubov import BcsAngles
from mfao.fock import ModelParams
from mfao.meanfield import Occupations

angle = st.floats(-4 * math.pi, 4 * math.pi, allow_nan=False)
energy = st.floats(-5.0, 5.0, allow_nan=False)
occupation = st.floats(0.0, 1.0)

angles_st = st.builds(BcsAngles, angle, angle, angle, angle)
params_st = st.builds(ModelParams, energy, energy, energy)
occ_st = st.builds(Occupations, occupation, occupation)

REF_PARAMS = ModelParams(hbar_omega=1.0, u=0.5, gb_b=0.25)


@pytest.fixture
def rng():
    return np.random.default_rng(12345)


def pytest_terminal_summary(terminalreporter):
    try:
        import test_acceptance
    except ImportError:
        return
    if test_acceptance.RESULTS:
        terminalreporter.section("acceptance criteria")
        for n in sorted(test_acceptance.RESULTS):
            terminalreporter.write_line(test_acceptance.RESULTS[n])
