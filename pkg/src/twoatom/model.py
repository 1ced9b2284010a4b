"""Dissipative generator for collective spontaneous emission and its RK4 solver.

Two identical two-level atoms decay with single-atom rate gamma0; photon
exchange between them adds a cross-damping channel with rate
gamma = g * gamma0, 0 <= g <= 1.  The generator is purely dissipative (no
Hamiltonian part):

    L(rho) = (gamma0/2) [2 sA rho sA+ + 2 sB rho sB+ - {sA+ sA + sB+ sB, rho}]
           + (gamma/2)  [2 sA rho sB+ + 2 sB rho sA+ - {sA+ sB + sB+ sA, rho}]

with sA = sigma_minus x I and sB = I x sigma_minus.  The numerical solver
here is the independent oracle for every closed-form result in
:mod:`twoatom.propagator`.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import qmat

SIGMA_MINUS_A = qmat.kron(qmat.SIGMA_MINUS, qmat.IDENTITY_2)
SIGMA_PLUS_A = qmat.kron(qmat.SIGMA_PLUS, qmat.IDENTITY_2)
SIGMA_MINUS_B = qmat.kron(qmat.IDENTITY_2, qmat.SIGMA_MINUS)
SIGMA_PLUS_B = qmat.kron(qmat.IDENTITY_2, qmat.SIGMA_PLUS)

# number-like and exchange-like anticommutator operators, precomputed
_N_OP = SIGMA_PLUS_A @ SIGMA_MINUS_A + SIGMA_PLUS_B @ SIGMA_MINUS_B
_M_OP = SIGMA_PLUS_A @ SIGMA_MINUS_B + SIGMA_PLUS_B @ SIGMA_MINUS_A

#: positivity slack allowed on integrator output before StepTooLargeError
POSITIVITY_GUARD = 1e-6


class StepTooLargeError(RuntimeError):
    """The integrator produced a state violating positivity beyond the guard."""


@dataclass(frozen=True)
class ModelParams:
    """Emission rate gamma0 > 0 and exchange ratio g in [0, 1]."""

    gamma0: float
    g: float

    def __post_init__(self):
        if not self.gamma0 > 0:
            raise ValueError(f"gamma0 must be positive, got {self.gamma0}")
        if not 0.0 <= self.g <= 1.0:
            raise ValueError(f"g must lie in [0, 1], got {self.g}")

    @property
    def gamma(self) -> float:
        """Photon exchange rate gamma = g * gamma0."""
        return self.g * self.gamma0


@dataclass(frozen=True)
class IntegratorConfig:
    """Fixed-step classical 4th-order Runge-Kutta configuration."""

    step: float = 1e-3
    method: str = "rk4"

    def __post_init__(self):
        if not self.step > 0:
            raise ValueError(f"step must be positive, got {self.step}")
        if self.method != "rk4":
            raise ValueError(f"unsupported method {self.method!r}")


def lindblad_rhs(rho: np.ndarray, params: ModelParams) -> np.ndarray:
    """Right-hand side L(rho): traceless, Hermitian for Hermitian input."""
    rho = np.asarray(rho, dtype=complex)
    own = (
        2.0 * SIGMA_MINUS_A @ rho @ SIGMA_PLUS_A
        + 2.0 * SIGMA_MINUS_B @ rho @ SIGMA_PLUS_B
        - _N_OP @ rho
        - rho @ _N_OP
    )
    cross = (
        2.0 * SIGMA_MINUS_A @ rho @ SIGMA_PLUS_B
        + 2.0 * SIGMA_MINUS_B @ rho @ SIGMA_PLUS_A
        - _M_OP @ rho
        - rho @ _M_OP
    )
    return 0.5 * params.gamma0 * own + 0.5 * params.gamma * cross


def liouvillian(params: ModelParams) -> np.ndarray:
    """16x16 matrix representing L on row-major vec(rho).

    Uses vec(A rho B) = (A kron B^T) vec(rho).  Agrees elementwise with
    :func:`lindblad_rhs`; the integrator steps this matrix.
    """

    def sandwich(a, b):
        return np.kron(a, b.T)

    i4 = qmat.IDENTITY_4
    own = (
        2.0 * sandwich(SIGMA_MINUS_A, SIGMA_PLUS_A)
        + 2.0 * sandwich(SIGMA_MINUS_B, SIGMA_PLUS_B)
        - sandwich(_N_OP, i4)
        - sandwich(i4, _N_OP)
    )
    cross = (
        2.0 * sandwich(SIGMA_MINUS_A, SIGMA_PLUS_B)
        + 2.0 * sandwich(SIGMA_MINUS_B, SIGMA_PLUS_A)
        - sandwich(_M_OP, i4)
        - sandwich(i4, _M_OP)
    )
    return 0.5 * params.gamma0 * own + 0.5 * params.gamma * cross


def _rk4_advance(y: np.ndarray, lv: np.ndarray, h: float, nsteps: int) -> np.ndarray:
    for _ in range(nsteps):
        k1 = lv @ y
        k2 = lv @ (y + 0.5 * h * k1)
        k3 = lv @ (y + 0.5 * h * k2)
        k4 = lv @ (y + h * k3)
        y = y + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return y


def _advance_interval(y: np.ndarray, lv: np.ndarray, dt: float, step: float) -> np.ndarray:
    """Whole steps of size ``step`` plus one shorter remainder step."""
    nsteps = int(np.floor(dt / step + 1e-12))
    y = _rk4_advance(y, lv, step, nsteps)
    rem = dt - nsteps * step
    if rem > 1e-15:
        y = _rk4_advance(y, lv, rem, 1)
    return y


def _check_positivity(rho: np.ndarray, t: float) -> None:
    min_eig = float(np.linalg.eigvalsh(0.5 * (rho + rho.conj().T))[0])
    if not np.isfinite(min_eig) or min_eig < -POSITIVITY_GUARD:
        raise StepTooLargeError(
            f"state at t={t:g} has minimum eigenvalue {min_eig:.3e}; shrink the step"
        )


def integrate(
    rho0: np.ndarray,
    params: ModelParams,
    t: float,
    config: IntegratorConfig = IntegratorConfig(),
) -> np.ndarray:
    """Propagate rho0 to time t with fixed-step RK4.  t = 0 returns rho0 as is."""
    if t < 0:
        raise ValueError(f"t must be nonnegative, got {t}")
    rho0 = np.asarray(rho0, dtype=complex)
    if t == 0:
        return rho0.copy()
    lv = liouvillian(params)
    y = _advance_interval(rho0.reshape(16).copy(), lv, t, config.step)
    rho = y.reshape(4, 4)
    _check_positivity(rho, t)
    return rho


def evolve_series(
    rho0: np.ndarray,
    params: ModelParams,
    t_grid,
    config: IntegratorConfig = IntegratorConfig(),
) -> list[np.ndarray]:
    """States at every grid time from a single integrator pass.

    The grid must be nonnegative and strictly ascending.  Results agree with
    one-shot :func:`integrate` calls at each time to well below the scheme's
    local error.
    """
    t_grid = np.asarray(t_grid, dtype=float)
    if t_grid.size == 0:
        return []
    if t_grid[0] < 0:
        raise ValueError("grid times must be nonnegative")
    if np.any(np.diff(t_grid) <= 0):
        raise ValueError("grid times must be strictly ascending")
    rho0 = np.asarray(rho0, dtype=complex)
    lv = liouvillian(params)
    out: list[np.ndarray] = []
    y = rho0.reshape(16).copy()
    t_prev = 0.0
    for t in t_grid:
        if t > t_prev:
            y = _advance_interval(y, lv, t - t_prev, config.step)
            t_prev = t
        rho = y.reshape(4, 4).copy()
        _check_positivity(rho, t)
        out.append(rho)
    return out
