"""Exact four-state Fock representation of the magnetic fermionic anharmonic oscillator.

Basis ordering (fixed, used by every matrix in the package)::

    0  |0>            vacuum
    1  a1^dag |0>      one fermion, spin up
    2  a2^dag |0>      one fermion, spin down
    3  a1^dag a2^dag |0>  spin-paired double occupancy

Sign convention: ``a1^dag = |1><0| + |3><2|`` and ``a2^dag = |2><0| - |3><1|``.
Units have hbar = 1, so ``hbar_omega`` is both an energy and a frequency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

DIM = 4
BASIS_LABELS = ("vac", "up", "down", "pair")

_CREATE = {
    1: np.array(
        [[0, 0, 0, 0],
         [1, 0, 0, 0],
         [0, 0, 0, 0],
         [0, 0, 1, 0]], dtype=complex),
    2: np.array(
        [[0, 0, 0, 0],
         [0, 0, 0, 0],
         [1, 0, 0, 0],
         [0, -1, 0, 0]], dtype=complex),
}
for _m in _CREATE.values():
    _m.flags.writeable = False


@dataclass(frozen=True)
class ModelParams:
    """Energies entering the Hamiltonian.

    ``gb_b`` is the product of the magnetic coupling and the field
    intensity; the two never appear separately.
    """

    hbar_omega: float = 1.0
    u: float = 0.5
    gb_b: float = 0.25

    def __post_init__(self):
        for name in ("hbar_omega", "u", "gb_b"):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise ValueError(f"{name} must be finite, got {value!r}")
            object.__setattr__(self, name, float(value))


@dataclass(frozen=True)
class StateVector:
    """Normalized amplitudes ``(rho, beta, alpha, tau)`` over the Fock basis.

    ``renormalized`` records that the input amplitudes did not have unit
    norm and were rescaled on construction.
    """

    amplitudes: np.ndarray
    renormalized: bool = field(default=False, compare=False)

    def __post_init__(self):
        amps = np.array(self.amplitudes, dtype=complex).reshape(-1)
        if amps.shape != (DIM,):
            raise ValueError(f"expected {DIM} amplitudes, got {amps.shape[0]}")
        if not np.all(np.isfinite(amps)):
            raise ValueError("amplitudes must be finite")
        norm = np.linalg.norm(amps)
        if norm == 0.0:
            raise ValueError("zero state cannot be normalized")
        renorm = self.renormalized
        if abs(norm - 1.0) > 1e-12:
            amps = amps / norm
            renorm = True
        amps.flags.writeable = False
        object.__setattr__(self, "amplitudes", amps)
        object.__setattr__(self, "renormalized", renorm)

    @classmethod
    def basis(cls, index: int) -> "StateVector":
        amps = np.zeros(DIM, dtype=complex)
        amps[index] = 1.0
        return cls(amps)

    @classmethod
    def from_components(cls, rho=0.0, beta=0.0, alpha=0.0, tau=0.0) -> "StateVector":
        """Build ``(rho + beta a1^dag + alpha a2^dag + tau a1^dag a2^dag)|0>``, normalized."""
        return cls(np.array([rho, beta, alpha, tau], dtype=complex))

    @property
    def norm(self) -> float:
        return float(np.linalg.norm(self.amplitudes))


def _check_mode(mode: int) -> None:
    if mode not in (1, 2):
        raise ValueError(f"mode must be 1 or 2, got {mode!r}")


def creation_op(mode: int) -> np.ndarray:
    _check_mode(mode)
    return _CREATE[mode].copy()


def annihilation_op(mode: int) -> np.ndarray:
    _check_mode(mode)
    return _CREATE[mode].conj().T.copy()


def number_op(mode: int) -> np.ndarray:
    return creation_op(mode) @ annihilation_op(mode)


def observable(kind: str) -> np.ndarray:
    """Matrix of a conserved charge or pair operator.

    ``kind`` is one of ``number`` (total fermion number), ``spin_z``
    (``n1 - n2``, i.e. spin in units of hbar/2 so eigenvalues are
    integers), ``pair_create`` (``a1^dag a2^dag``) or ``pair_annihilate``
    (``a2 a1``).
    """
    if kind == "number":
        return number_op(1) + number_op(2)
    if kind == "spin_z":
        return number_op(1) - number_op(2)
    if kind == "pair_create":
        return creation_op(1) @ creation_op(2)
    if kind == "pair_annihilate":
        return annihilation_op(2) @ annihilation_op(1)
    raise ValueError(f"unknown observable kind {kind!r}")


def hamiltonian(p: ModelParams) -> np.ndarray:
    n1, n2 = number_op(1), number_op(2)
    return p.hbar_omega * (n1 + n2) + p.u * (n1 @ n2) + p.gb_b * (n1 - n2)


def energies(p: ModelParams) -> np.ndarray:
    """Closed-form eigenvalues, indexed by Fock basis state."""
    return np.array([
        0.0,
        p.hbar_omega + p.gb_b,
        p.hbar_omega - p.gb_b,
        2.0 * p.hbar_omega + p.u,
    ])


def spectrum(p: ModelParams) -> list[tuple[float, int]]:
    """``(energy, basis index)`` pairs for the four eigenstates."""
    return [(float(e), k) for k, e in enumerate(energies(p))]


def evolve_exact(s: StateVector, p: ModelParams, t: float) -> StateVector:
    """Propagate ``s`` for time ``t`` under the exact Hamiltonian.

    H is diagonal in the Fock basis, so each amplitude just picks up
    ``exp(-i E_k t)``.
    """
    if not math.isfinite(t):
        raise ValueError("t must be finite")
    phases = np.exp(-1j * energies(p) * t)
    return StateVector(s.amplitudes * phases, renormalized=s.renormalized)


def expectation(op: np.ndarray, s: StateVector) -> complex:
    v = s.amplitudes
    return complex(np.vdot(v, op @ v))


def commutator(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return x @ y - y @ x


def anticommutator(x: np.ndarray, y: np.ndarray) -> np.ndarray:
    return x @ y + y @ x


def max_abs(m: np.ndarray) -> float:
    """Largest entry magnitude; the matrix norm used for every tolerance check."""
    return float(np.max(np.abs(m))) if np.size(m) else 0.0
