"""Four-angle Bogoliubov (BCS-type) transformation of the two fermion modes.

The transformation is parameterized by real angles ``(theta, phi, gamma,
xi)``.  It is stored as two 2x2 blocks, ``omega2`` (particle-particle) and
``z2`` (particle-hole), and realized on the Fock space as quasiparticle
operators

    lambda_i^dag = sum_j  omega2[j, i] a_j^dag  +  PAIR_SIGN * z2[j, i] a_j

with ``PAIR_SIGN = -1``.  The minus sign is the choice that reproduces the
explicit pairing operators (``lambda_1^dag = cos(xi) a1^dag + e^{i theta}
sin(xi) a2`` at ``phi = gamma = 0``); taking ``+1`` instead is the same
family of transformations with ``theta`` shifted by pi.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from enum import Enum

import numpy as np

from .fock import DIM, annihilation_op, creation_op, max_abs

PAIR_SIGN = -1.0

ANGLE_NAMES = ("theta", "phi", "gamma", "xi")


@dataclass(frozen=True)
class BcsAngles:
    theta: float = 0.0
    phi: float = 0.0
    gamma: float = 0.0
    xi: float = 0.0

    def __post_init__(self):
        for name in ANGLE_NAMES:
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, float(value))

    def as_array(self) -> np.ndarray:
        return np.array([self.theta, self.phi, self.gamma, self.xi])

    @classmethod
    def from_array(cls, values) -> "BcsAngles":
        theta, phi, gamma, xi = (float(v) for v in values)
        return cls(theta, phi, gamma, xi)


@dataclass(frozen=True)
class TransformBlocks:
    omega2: np.ndarray
    z2: np.ndarray


class ParameterizationKind(Enum):
    """Special transformations obtained by pinning two angles to zero."""

    GENERAL = ()
    PAIRING = ("phi", "gamma")
    SPIN = ("xi", "theta")
    IDENTITY = ("xi", "gamma")
    ORTHOGONAL = ("xi", "phi")
    STATIC_PAIR = ("phi", "theta")
    LABEL_SWAP = ("gamma", "theta")

    @property
    def pinned(self) -> tuple[str, ...]:
        return self.value

    @property
    def free(self) -> tuple[str, ...]:
        return tuple(n for n in ANGLE_NAMES if n not in self.value)


SPECIAL_KINDS = tuple(k for k in ParameterizationKind if k is not ParameterizationKind.GENERAL)


def special_parameterization(kind: ParameterizationKind, free: dict[str, float] | None = None) -> BcsAngles:
    """Angles for ``kind`` with pinned angles at zero and the rest taken from ``free``.

    Raises ``ValueError`` if ``free`` names a pinned angle or omits a free one.
    """
    free = dict(free or {})
    unknown = set(free) - set(ANGLE_NAMES)
    if unknown:
        raise ValueError(f"unknown angle names: {sorted(unknown)}")
    pinned = set(free) & set(kind.pinned)
    if pinned:
        raise ValueError(f"{kind.name} pins {sorted(pinned)} to zero; do not supply them")
    missing = set(kind.free) - set(free)
    if missing:
        raise ValueError(f"{kind.name} needs values for {sorted(missing)}")
    values = {name: 0.0 for name in ANGLE_NAMES}
    values.update(free)
    return BcsAngles(**values)


def _trig(a: BcsAngles):
    cg, sg = math.cos(a.gamma), math.sin(a.gamma)
    cx, sx = math.cos(a.xi), math.sin(a.xi)
    return cg, sg, cx, sx


def _phase_exponents(theta: float, phi: float):
    omega_ph = np.array([[0.0, -phi], [phi, 0.0]])
    z_ph = np.array([[theta, theta - phi], [theta - phi, theta - 2.0 * phi]])
    return omega_ph, z_ph


def build_blocks(a: BcsAngles) -> TransformBlocks:
    cg, sg, cx, sx = _trig(a)
    omega_ph, z_ph = _phase_exponents(a.theta, a.phi)
    omega2 = np.array([[cg, -sg], [sg, cg]]) * cx * np.exp(1j * omega_ph)
    z2 = np.array([[sg, cg], [-cg, sg]]) * sx * np.exp(1j * z_ph)
    return TransformBlocks(omega2, z2)


def block_rates(a: BcsAngles, rates) -> TransformBlocks:
    """Time derivatives of ``omega2`` and ``z2`` for angle rates ``rates``.

    ``rates`` is ordered like :data:`ANGLE_NAMES`; the chain rule is
    applied analytically.
    """
    d_theta, d_phi, d_gamma, d_xi = (float(r) for r in rates)
    cg, sg, cx, sx = _trig(a)
    omega_ph, z_ph = _phase_exponents(a.theta, a.phi)
    d_omega_ph, d_z_ph = _phase_exponents(d_theta, d_phi)

    g_om = np.array([[cg, -sg], [sg, cg]])
    dg_om = np.array([[-sg, -cg], [cg, -sg]])
    g_z = np.array([[sg, cg], [-cg, sg]])
    dg_z = np.array([[cg, -sg], [sg, cg]])

    amp_om = g_om * cx
    d_amp_om = dg_om * cx * d_gamma - g_om * sx * d_xi
    amp_z = g_z * sx
    d_amp_z = dg_z * sx * d_gamma + g_z * cx * d_xi

    d_omega = np.exp(1j * omega_ph) * (d_amp_om + 1j * d_omega_ph * amp_om)
    d_z = np.exp(1j * z_ph) * (d_amp_z + 1j * d_z_ph * amp_z)
    return TransformBlocks(d_omega, d_z)


def assemble_transform(b: TransformBlocks) -> np.ndarray:
    """4x4 matrix taking ``(a1, a2, a1^dag, a2^dag)`` to ``(l1, l2, l1^dag, l2^dag)``.

    Layout::

        [[ omega2^H,  s z2^H ],
         [ s z2^T,    omega2^T ]]      s = PAIR_SIGN

    so the lower-right block is the complex conjugate of the upper-left one.
    """
    om, z = b.omega2, PAIR_SIGN * b.z2
    return np.block([[om.conj().T, z.conj().T], [z.T, om.T]])


def unitarity_residual(m: np.ndarray) -> float:
    m = np.asarray(m)
    return max_abs(m @ m.conj().T - np.eye(m.shape[0]))


def quasiparticle_ops(a: BcsAngles) -> tuple[list[np.ndarray], list[np.ndarray]]:
    """``([l1, l2], [l1^dag, l2^dag])`` as Fock-space matrices."""
    b = build_blocks(a)
    cre = [creation_op(1), creation_op(2)]
    ann = [annihilation_op(1), annihilation_op(2)]
    daggered = []
    for i in range(2):
        op = np.zeros((DIM, DIM), dtype=complex)
        for j in range(2):
            op += b.omega2[j, i] * cre[j] + PAIR_SIGN * b.z2[j, i] * ann[j]
        daggered.append(op)
    plain = [op.conj().T for op in daggered]
    return plain, daggered


def quasiparticle_op(a: BcsAngles, mode: int, daggered: bool) -> np.ndarray:
    if mode not in (1, 2):
        raise ValueError(f"mode must be 1 or 2, got {mode!r}")
    plain, dag = quasiparticle_ops(a)
    return (dag if daggered else plain)[mode - 1]


def operator_vector() -> list[np.ndarray]:
    """``(a1, a2, a1^dag, a2^dag)`` in the order :func:`assemble_transform` acts on."""
    return [annihilation_op(1), annihilation_op(2), creation_op(1), creation_op(2)]
