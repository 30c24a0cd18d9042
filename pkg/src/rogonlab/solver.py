"""Periodic pseudospectral split-step integrator for the coupled system.

Strang splitting: half-step of the linear dispersion (exact in Fourier space,
each mode multiplied by exp(-i*kappa^2*dt/4)), full nonlinear step (exact
pointwise phase rotation, the combined intensity is invariant under it), then
the second linear half-step.  Both substeps preserve the per-component L^2
norms to roundoff.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .params import RogonParams
from .rogon import eval_arrays


class CarrierPeriodicityError(ValueError):
    """Carrier wavenumber incompatible with the periodic domain."""

    def __init__(self, k: float, L: float, nearest: float):
        self.k = k
        self.L = L
        self.nearest = nearest
        super().__init__(
            f"k = {k} does not satisfy k*L in 2*pi*Z on L = {L}; "
            f"nearest admissible k = {nearest!r} (use snapping to accept it)"
        )


class NumericalBlowupError(RuntimeError):
    """Non-finite field values during time stepping."""

    def __init__(self, step_index: int, t: float):
        self.step_index = step_index
        self.t = t
        super().__init__(f"non-finite field at step {step_index}, t = {t}")


@dataclass(frozen=True)
class Grid:
    L: float
    N: int
    S: np.ndarray  # (N,) points -L/2 + j*dS
    dS: float
    kappa: np.ndarray  # (N,) wavenumbers 2*pi*j/L in FFT layout


def make_grid(L: float, N: int) -> Grid:
    if not (isinstance(N, int) and N >= 16 and (N & (N - 1)) == 0):
        raise ValueError(f"N must be a power of two >= 16, got {N}")
    if not (L > 0 and math.isfinite(L)):
        raise ValueError(f"L must be positive and finite, got {L}")
    dS = L / N
    S = -L / 2 + dS * np.arange(N)
    kappa = 2.0 * np.pi * np.fft.fftfreq(N, d=dS)
    return Grid(L=float(L), N=N, S=S, dS=dS, kappa=kappa)


@dataclass
class SimState:
    t: float
    sigma: np.ndarray  # (N,) complex
    psi: np.ndarray  # (N,) complex

    def copy(self) -> "SimState":
        return SimState(t=self.t, sigma=self.sigma.copy(), psi=self.psi.copy())


@dataclass(frozen=True)
class SolverConfig:
    dt: float
    beta: float
    record_every: int = 1
    dealias: bool = False

    def __post_init__(self) -> None:
        if not (0.0 < self.dt <= 0.1):
            raise ValueError(f"dt must be in (0, 0.1], got {self.dt}")
        if self.beta <= 0.0:
            raise ValueError(f"beta must be > 0, got {self.beta}")
        if self.record_every < 1:
            raise ValueError(f"record_every must be >= 1, got {self.record_every}")


@dataclass
class ConservedReport:
    n_sigma: float
    n_psi: float
    momentum: float
    hamiltonian: float


def nearest_admissible_k(k: float, L: float) -> float:
    """Nearest wavenumber satisfying k*L in 2*pi*Z."""
    m = round(k * L / (2.0 * np.pi))
    return 2.0 * np.pi * m / L


def carrier_is_admissible(k: float, L: float, rtol: float = 1e-12) -> bool:
    return abs(k - nearest_admissible_k(k, L)) <= rtol * max(1.0, abs(k))


def snap_carrier(p: RogonParams, L: float) -> RogonParams:
    return p.with_k(nearest_admissible_k(p.k, L))


def init_from_analytic(p: RogonParams, order: int, g: Grid, t0: float) -> SimState:
    """Seed the discrete state from the closed-form solution at time t0.

    Rejects carriers that are discontinuous across the periodic seam; snap
    with :func:`snap_carrier` first if approximate k is acceptable.
    """
    if not carrier_is_admissible(p.k, g.L):
        raise CarrierPeriodicityError(p.k, g.L, nearest_admissible_k(p.k, g.L))
    sigma, psi = eval_arrays(p, order, g.S, np.array([float(t0)]))
    return SimState(t=float(t0), sigma=sigma[0].copy(), psi=psi[0].copy())


def _dealias_mask(g: Grid) -> np.ndarray:
    cutoff = (2.0 / 3.0) * np.max(np.abs(g.kappa))
    return (np.abs(g.kappa) <= cutoff).astype(float)


def _half_linear(g: Grid, dt: float, dealias: bool) -> np.ndarray:
    phase = np.exp(-0.25j * g.kappa**2 * dt)
    if dealias:
        phase = phase * _dealias_mask(g)
    return phase


def _apply_spectral(state: SimState, mult: np.ndarray) -> None:
    state.sigma = np.fft.ifft(np.fft.fft(state.sigma) * mult)
    state.psi = np.fft.ifft(np.fft.fft(state.psi) * mult)


def _strang_step(state: SimState, cfg: SolverConfig, dt: float, half: np.ndarray) -> None:
    _apply_spectral(state, half)
    _kernels.nonlinear_phase(state.sigma, state.psi, cfg.beta * dt)
    _apply_spectral(state, half)


def step(state: SimState, g: Grid, cfg: SolverConfig, dt: float | None = None) -> SimState:
    """Advance one Strang step of size dt (default cfg.dt; negative allowed
    for reversibility checks)."""
    if dt is None:
        dt = cfg.dt
    if abs(dt) > 0.1:
        raise ValueError(f"|dt| must be <= 0.1, got {dt}")
    _strang_step(state, cfg, dt, _half_linear(g, dt, cfg.dealias))
    state.t += dt
    if not (np.all(np.isfinite(state.sigma.view(float))) and np.all(np.isfinite(state.psi.view(float)))):
        raise NumericalBlowupError(0, state.t)
    return state

MAX_STEPS = 10**8


def evolve(
    state: SimState,
    g: Grid,
    cfg: SolverConfig,
    t_end: float,
    observer=None,
):
    """Evolve in place to t_end; the last step is shortened to land exactly.

    ``observer(state, g)``, when given, is sampled before the first step,
    every ``cfg.record_every`` steps, and after the final step; it returns a
    dict merged into the recorded row.  Returns (state, records).
    """
    if t_end < state.t:
        raise ValueError(f"t_end = {t_end} is before state.t = {state.t}")
    span = t_end - state.t
    n_full = int(math.floor(span / cfg.dt + 1e-12))
    if n_full > MAX_STEPS:
        raise ValueError(f"{n_full} steps exceeds the {MAX_STEPS} step cap")

    records: list[dict] = []

    def record(s: SimState) -> None:
        if observer is not None:
            row = {"t": s.t}
            row.update(observer(s, g))
            records.append(row)

    record(state)
    t0 = state.t
    half = _half_linear(g, cfg.dt, cfg.dealias)
    for n in range(1, n_full + 1):
        _strang_step(state, cfg, cfg.dt, half)
        state.t = t0 + n * cfg.dt
        if not np.all(np.isfinite(state.sigma.view(float))):
            raise NumericalBlowupError(n, state.t)
        if n % cfg.record_every == 0:
            record(state)
    dt_last = t_end - state.t
    if dt_last > 1e-12 * max(1.0, abs(t_end)):
        _strang_step(state, cfg, dt_last, _half_linear(g, dt_last, cfg.dealias))
        state.t = t_end
        if not np.all(np.isfinite(state.sigma.view(float))):
            raise NumericalBlowupError(n_full + 1, state.t)
        record(state)
    else:
        state.t = t_end
        if n_full % cfg.record_every != 0:
            record(state)
    return state, records


def _spectral_deriv(u: np.ndarray, g: Grid) -> np.ndarray:
    return np.fft.ifft(1j * g.kappa * np.fft.fft(u))


def conserved_quantities(state: SimState, g: Grid, cfg: SolverConfig) -> ConservedReport:
    """Norms, momentum, and Hamiltonian by spectral derivative and periodic
    rectangle-rule quadrature."""
    dS = g.dS
    n_sigma = dS * float(np.sum(np.abs(state.sigma) ** 2))
    n_psi = dS * float(np.sum(np.abs(state.psi) ** 2))
    sigma_s = _spectral_deriv(state.sigma, g)
    psi_s = _spectral_deriv(state.psi, g)
    momentum = dS * float(
        np.sum(np.imag(np.conj(state.sigma) * sigma_s + np.conj(state.psi) * psi_s))
    )
    inten = np.abs(state.sigma) ** 2 + np.abs(state.psi) ** 2
    hamiltonian = dS * float(
        np.sum(
            0.5 * (np.abs(sigma_s) ** 2 + np.abs(psi_s) ** 2)
            - 0.5 * cfg.beta * inten**2
        )
    )
    return ConservedReport(
        n_sigma=n_sigma, n_psi=n_psi, momentum=momentum, hamiltonian=hamiltonian
    )


def compare_to_analytic(state: SimState, p: RogonParams, order: int, g: Grid) -> dict:
    """Joint relative L2 and Linf error of (sigma, psi) against the closed form
    at state.t."""
    sigma_a, psi_a = eval_arrays(p, order, g.S, np.array([state.t]))
    d_sigma = state.sigma - sigma_a[0]
    d_psi = state.psi - psi_a[0]
    ref_l2 = math.sqrt(float(np.sum(np.abs(sigma_a) ** 2 + np.abs(psi_a) ** 2)))
    ref_inf = float(max(np.max(np.abs(sigma_a)), np.max(np.abs(psi_a))))
    l2 = math.sqrt(float(np.sum(np.abs(d_sigma) ** 2 + np.abs(d_psi) ** 2)))
    linf = float(max(np.max(np.abs(d_sigma)), np.max(np.abs(d_psi))))
    return {"l2_rel": l2 / ref_l2, "linf_rel": linf / ref_inf}
