"""Build a Bogoliubov transformation and check the quasiparticle algebra."""

from mfao.bogoliubov import BcsAngles, assemble_transform, build_blocks, quasiparticle_ops, unitarity_residual
from mfao.validation import car_deviation

a = BcsAngles(theta=0.4, phi=-1.1, gamma=0.7, xi=1.2)
u = assemble_transform(build_blocks(a))
print("transform unitarity residual:", unitarity_residual(u))
print("quasiparticle CAR deviation:", car_deviation(*quasiparticle_ops(a)))
