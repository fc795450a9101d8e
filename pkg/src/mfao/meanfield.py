"""Mean-field (time-dependent Hartree-Fock-Bogoliubov) dynamics of the angles.

Two independent routes to the equations of motion live here:

* :func:`eom_rhs_trace` builds the mean-field density operator on the Fock
  space and evaluates ``-i Tr([O, H] F0)`` for the quasiparticle bilinears
  by brute 4x4 algebra.
* :func:`eom_residual_general` evaluates the explicit trigonometric form
  of the same equations, with time derivatives expanded by the chain rule,
  and :func:`closed_form_rates` is its solution.

:func:`eom_residual_matrix` ties the two together as a full 2x2 matrix
identity, which is also what :func:`fit_reduced_rates` solves for the
special parameterizations.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .bogoliubov import (
    ANGLE_NAMES,
    PAIR_SIGN,
    BcsAngles,
    ParameterizationKind,
    block_rates,
    build_blocks,
    quasiparticle_ops,
)
from .fock import DIM, ModelParams, commutator, hamiltonian

Kind = ParameterizationKind


@dataclass(frozen=True)
class Occupations:
    """Quasiparticle occupation numbers, constants of the mean-field motion."""

    p1: float = 0.0
    p2: float = 0.0

    def __post_init__(self):
        for name in ("p1", "p2"):
            value = float(getattr(self, name))
            if not (0.0 <= value <= 1.0):
                raise ValueError(f"{name} must lie in [0, 1], got {value!r}")
            object.__setattr__(self, name, value)

    def matrix(self) -> np.ndarray:
        return np.diag([self.p1, self.p2]).astype(complex)


@dataclass(frozen=True)
class AngleRates:
    d_theta: float = 0.0
    d_phi: float = 0.0
    d_gamma: float = 0.0
    d_xi: float = 0.0

    def as_array(self) -> np.ndarray:
        return np.array([self.d_theta, self.d_phi, self.d_gamma, self.d_xi])

    @classmethod
    def from_array(cls, values) -> "AngleRates":
        return cls(*(float(v) for v in values))


@dataclass(frozen=True)
class StaticSolutionSet:
    """Stationary solutions of a special parameterization.

    ``quantized`` angles must be integer multiples of pi/2; ``arbitrary``
    angles are left undetermined by the equations. An empty ``quantized``
    tuple means the transformation has no dynamics at all.
    """

    kind: ParameterizationKind
    quantized: tuple[str, ...] = ()
    arbitrary: tuple[str, ...] = ()

    def contains(self, a: BcsAngles, atol: float = 1e-12) -> bool:
        for name in self.kind.pinned:
            if getattr(a, name) != 0.0:
                return False
        for name in self.quantized:
            k = getattr(a, name) / (math.pi / 2)
            if abs(k - round(k)) * (math.pi / 2) > atol:
                return False
        return True


def meanfield_density(a: BcsAngles, occ: Occupations) -> np.ndarray:
    """``F0 = prod_i [p_i l_i^dag l_i + (1 - p_i) l_i l_i^dag]`` on the Fock space."""
    lam, lam_dag = quasiparticle_ops(a)
    rho = np.eye(DIM, dtype=complex)
    for i, p_i in enumerate((occ.p1, occ.p2)):
        rho = rho @ (p_i * lam_dag[i] @ lam[i] + (1.0 - p_i) * lam[i] @ lam_dag[i])
    return rho


def eom_rhs_trace(a: BcsAngles, occ: Occupations, p: ModelParams) -> tuple[np.ndarray, np.ndarray]:
    """Trace side of the mean-field equations.

    Returns ``(N, K)`` with ``N[i, j] = -i Tr([l_i^dag l_j, H] F0)`` and
    ``K[i, j] = -i Tr([l_i l_j, H] F0)``.  ``N`` is Hermitian and ``K``
    antisymmetric.
    """
    lam, lam_dag = quasiparticle_ops(a)
    h = hamiltonian(p)
    rho = meanfield_density(a, occ)
    normal = np.empty((2, 2), dtype=complex)
    anomalous = np.empty((2, 2), dtype=complex)
    for i in range(2):
        for j in range(2):
            normal[i, j] = -1j * np.trace(commutator(lam_dag[i] @ lam[j], h) @ rho)
            anomalous[i, j] = -1j * np.trace(commutator(lam[i] @ lam[j], h) @ rho)
    return normal, anomalous


def eom_residual_matrix(a: BcsAngles, r: AngleRates, occ: Occupations, p: ModelParams):
    """Residuals of the two 2x2 matrix equations of motion.

    With ``W``, ``Z`` the blocks that actually build the operators (``Z``
    carries ``PAIR_SIGN``) and ``P = diag(p1, p2)``::

        [P, W'^H W + Z'^H Z]              - N^T
        {P, W'^H Z* + Z'^H W*} - (same)   - K^T

    ``P`` has no derivative term because occupations are held fixed; the
    diagonal of ``N`` is checked separately for that.
    """
    blocks = build_blocks(a)
    rates = block_rates(a, r.as_array())
    om, z = blocks.omega2, PAIR_SIGN * blocks.z2
    d_om, d_z = rates.omega2, PAIR_SIGN * rates.z2
    pm = occ.matrix()
    normal, anomalous = eom_rhs_trace(a, occ, p)

    m = d_om.conj().T @ om + d_z.conj().T @ z
    n = d_om.conj().T @ z.conj() + d_z.conj().T @ om.conj()
    first = pm @ m - m @ pm - normal.T
    second = pm @ n + n @ pm - n - anomalous.T
    return first, second


def eom_residual_general(a: BcsAngles, r: AngleRates, occ: Occupations, p: ModelParams) -> tuple[complex, complex]:
    """LHS minus RHS of the explicit off-diagonal equations.

    The first residual is the spin-flip (normal) equation, whose source term
    is ``-i gB (p2 - p1) e^{-i phi} sin 2 gamma``; the second is the pairing
    (anomalous) equation with source ``i/2 (1 - p1 - p2)(2 hw + U)
    e^{-i(theta - phi)} sin 2 xi``.
    """
    th, ph, g, x = a.theta, a.phi, a.gamma, a.xi
    dth, dph, dg, dx = r.d_theta, r.d_phi, r.d_gamma, r.d_xi
    cg, sg, cx, sx = math.cos(g), math.sin(g), math.cos(x), math.sin(x)
    e = lambda arg: complex(math.cos(arg), math.sin(arg))  # noqa: E731

    # d/dt of the four braced quantities
    d_cgcx = -dg * sg * cx - dx * cg * sx
    d_sgcx = e(-ph) * (-1j * dph * sg * cx + dg * cg * cx - dx * sg * sx)
    d_sgsx = e(-th) * (-1j * dth * sg * sx + dg * cg * sx + dx * sg * cx)
    d_cgsx = e(-(th - ph)) * (-1j * (dth - dph) * cg * sx - dg * sg * sx + dx * cg * cx)

    spin_source = -1j * p.gb_b * (occ.p2 - occ.p1) * e(-ph) * math.sin(2 * g)
    spin_rhs = (occ.p2 - occ.p1) * (
        -e(-ph) * sg * cx * d_cgcx
        + cg * cx * d_sgcx
        + e(th - ph) * cg * sx * d_sgsx
        - e(th - 2 * ph) * sg * sx * d_cgsx
    )

    pair_source = 0.5j * (1 - occ.p1 - occ.p2) * (2 * p.hbar_omega + p.u) * e(-(th - ph)) * math.sin(2 * x)
    pair_rhs = (1 - occ.p1 - occ.p2) * (
        -e(ph) * sg * cx * d_sgsx
        - cg * cx * d_cgsx
        + e(-(th - ph)) * cg * sx * d_cgcx
        + e(-(th - 2 * ph)) * sg * sx * d_sgcx
    )
    return spin_source - spin_rhs, pair_source - pair_rhs


def closed_form_rates(p: ModelParams) -> AngleRates:
    return AngleRates(
        d_theta=2 * p.gb_b + 2 * p.hbar_omega + p.u,
        d_phi=2 * p.gb_b,
        d_gamma=0.0,
        d_xi=0.0,
    )


def reduced_rates(kind: ParameterizationKind, p: ModelParams) -> AngleRates | StaticSolutionSet:
    """Effective dynamics when ``kind`` pins two of the angles.

    Pinned angles get zero rate. Kinds without an effective dynamics return
    the :class:`StaticSolutionSet` their stationary equations allow.

    For ``LABEL_SWAP`` the pair phase is ``e^{-i phi}`` where the pairing
    kind has ``e^{i theta}``, so ``phi`` runs at ``-(2 hw + U)``; the
    trace equations confirm the sign (see :func:`fit_reduced_rates`).
    """
    pair_freq = 2 * p.hbar_omega + p.u
    if kind is Kind.GENERAL:
        raise ValueError("GENERAL has no reduced dynamics; use closed_form_rates")
    if kind is Kind.PAIRING:
        return AngleRates(d_theta=pair_freq)
    if kind is Kind.SPIN:
        return AngleRates(d_phi=2 * p.gb_b)
    if kind is Kind.LABEL_SWAP:
        return AngleRates(d_phi=-pair_freq)
    if kind is Kind.IDENTITY:
        return StaticSolutionSet(kind)
    if kind is Kind.ORTHOGONAL:
        return StaticSolutionSet(kind, quantized=("gamma",), arbitrary=("theta",))
    if kind is Kind.STATIC_PAIR:
        return StaticSolutionSet(kind, quantized=("gamma", "xi"))
    raise ValueError(f"unhandled kind {kind!r}")


def has_dynamics(kind: ParameterizationKind, p: ModelParams | None = None) -> bool:
    return isinstance(reduced_rates(kind, p or ModelParams()), AngleRates)


def _stack_residual(a, r, occ, p) -> np.ndarray:
    first, second = eom_residual_matrix(a, AngleRates.from_array(r), occ, p)
    flat = np.concatenate([first.ravel(), second.ravel()])
    return np.concatenate([flat.real, flat.imag])


def fit_reduced_rates(kind: ParameterizationKind, a: BcsAngles, occ: Occupations, p: ModelParams):
    """Least-squares rates of the free angles of ``kind`` at ``a``.

    The matrix equations are affine in the rates, so this is an exact
    linear solve. Returns ``(AngleRates, max residual)``; a residual above
    roundoff means no rates keep the state inside the parameterization.
    """
    free_idx = [ANGLE_NAMES.index(n) for n in kind.free]
    base = _stack_residual(a, np.zeros(4), occ, p)
    cols = []
    for k in free_idx:
        unit = np.zeros(4)
        unit[k] = 1.0
        cols.append(_stack_residual(a, unit, occ, p) - base)
    rates = np.zeros(4)
    if cols:
        coef, *_ = np.linalg.lstsq(np.column_stack(cols), -base, rcond=None)
        rates[free_idx] = coef
    resid = float(np.max(np.abs(_stack_residual(a, rates, occ, p))))
    return AngleRates.from_array(rates), resid


@dataclass(frozen=True)
class Trajectory:
    times: np.ndarray
    angles: np.ndarray  # shape (n, 4), columns ordered like ANGLE_NAMES
    occupations: Occupations
    method: str
    params: ModelParams | None = field(default=None, compare=False)

    def __len__(self) -> int:
        return len(self.times)

    @property
    def samples(self) -> list[tuple[BcsAngles, Occupations]]:
        return [(BcsAngles.from_array(row), self.occupations) for row in self.angles]


METHODS = ("closed_form", "rk4")


def _rk4(rate_fn, y0: np.ndarray, times: np.ndarray, steps_per_unit: float) -> np.ndarray:
    out = np.empty((len(times), len(y0)))
    out[0] = y = np.array(y0, dtype=float)
    for k in range(1, len(times)):
        span = times[k] - times[k - 1]
        n = max(1, math.ceil(span * steps_per_unit - 1e-9))
        h = span / n
        t = times[k - 1]
        for _ in range(n):
            k1 = rate_fn(t, y)
            k2 = rate_fn(t + h / 2, y + h / 2 * k1)
            k3 = rate_fn(t + h / 2, y + h / 2 * k2)
            k4 = rate_fn(t + h, y + h * k3)
            y = y + h / 6 * (k1 + 2 * k2 + 2 * k3 + k4)
            t += h
        out[k] = y
    return out


def integrate(
    a0: BcsAngles,
    occ: Occupations,
    p: ModelParams,
    times,
    method: str = "closed_form",
    rates: AngleRates | None = None,
    steps_per_unit: float = 1000.0,
) -> Trajectory:
    """Angle trajectory on the grid ``times`` (strictly increasing, from 0).

    ``rates`` defaults to :func:`closed_form_rates`; pass a reduced rate set
    to follow a special parameterization. ``rk4`` takes at least one step
    per grid interval and at least ``steps_per_unit`` steps per unit time.
    """
    times = np.asarray(times, dtype=float)
    if times.ndim != 1 or times.size == 0:
        raise ValueError("times must be a non-empty 1-d grid")
    if times[0] != 0.0:
        raise ValueError("times must start at 0")
    if np.any(np.diff(times) <= 0):
        raise ValueError("times must be strictly increasing")
    if method not in METHODS:
        raise ValueError(f"method must be one of {METHODS}, got {method!r}")
    r = (rates or closed_form_rates(p)).as_array()
    y0 = a0.as_array()
    if method == "closed_form":
        angles = y0[None, :] + times[:, None] * r[None, :]
    else:
        angles = _rk4(lambda t, y: r, y0, times, steps_per_unit)
    return Trajectory(times, angles, occ, method, p)
