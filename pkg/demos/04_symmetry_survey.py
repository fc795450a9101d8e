"""Which symmetries each special parameterization breaks, and its dynamics."""

from mfao.fock import ModelParams
from mfao.symmetry import probe_all_kinds

for row in probe_all_kinds(ModelParams(1.0, 0.5, 0.25)):
    print(f"{row.kind.name:12s} {row.report.classification.value:17s} dynamics={row.has_dynamics}  {row.dynamics}")
