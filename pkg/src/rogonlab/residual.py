"""Finite-difference residual oracle for the coupled wave model.

The governing system (constant market potential ``beta``) is

    i*sigma_t = -(1/2)*sigma_SS - beta*(|sigma|^2 + |psi|^2)*sigma
    i*psi_t   = -(1/2)*psi_SS   - beta*(|sigma|^2 + |psi|^2)*psi

and the residual of a candidate field is the left-hand side minus the
right-hand side, i.e. ``r = i*u_t + (1/2)*u_SS + beta*I*u``.  Derivatives are
taken by central differences applied to the field evaluator itself, so the
check stays independent of any analytic derivative transcription.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

import numpy as np

from .params import RogonParams
from .rogon import background_amplitudes, carrier_phase, eval_field, rogon1_factor, rogon2_factor

# Central-difference weights for the first and second derivative,
# symmetric stencils, truncation order 2/4/6/8.
_D1_WEIGHTS = {
    2: np.array([-0.5, 0.0, 0.5]),
    4: np.array([1 / 12, -2 / 3, 0.0, 2 / 3, -1 / 12]),
    6: np.array([-1 / 60, 3 / 20, -3 / 4, 0.0, 3 / 4, -3 / 20, 1 / 60]),
    8: np.array(
        [1 / 280, -4 / 105, 1 / 5, -4 / 5, 0.0, 4 / 5, -1 / 5, 4 / 105, -1 / 280]
    ),
}
_D2_WEIGHTS = {
    2: np.array([1.0, -2.0, 1.0]),
    4: np.array([-1 / 12, 4 / 3, -5 / 2, 4 / 3, -1 / 12]),
    6: np.array([1 / 90, -3 / 20, 3 / 2, -49 / 18, 3 / 2, -3 / 20, 1 / 90]),
    8: np.array(
        [-1 / 560, 8 / 315, -1 / 5, 8 / 5, -205 / 72, 8 / 5, -1 / 5, 8 / 315, -1 / 560]
    ),
}

MIN_SAFE_H = 1e-4


@dataclass(frozen=True)
class ResidualSample:
    S: float
    t: float
    r_sigma: complex
    r_psi: complex


@dataclass
class ResidualReport:
    s_range: tuple[float, float]
    t_range: tuple[float, float]
    ns: int
    nt: int
    fd_order: int
    h: float
    max_abs_r_sigma: float
    max_abs_r_psi: float

    @property
    def max_abs(self) -> float:
        return max(self.max_abs_r_sigma, self.max_abs_r_psi)

    def to_dict(self) -> dict:
        return {
            "s_range": list(self.s_range),
            "t_range": list(self.t_range),
            "ns": self.ns,
            "nt": self.nt,
            "fd_order": self.fd_order,
            "h": self.h,
            "max_abs_r_sigma": self.max_abs_r_sigma,
            "max_abs_r_psi": self.max_abs_r_psi,
        }


def _check_stencil_args(h: float, fd_order: int) -> None:
    if h <= 0:
        raise ValueError(f"step h must be > 0, got {h}")
    if fd_order not in _D1_WEIGHTS:
        raise ValueError(f"fd_order must be one of 2, 4, 6, 8, got {fd_order}")
    if h < MIN_SAFE_H:
        warnings.warn(
            f"h = {h} is below {MIN_SAFE_H}; high-order stencils are "
            "roundoff-dominated at this step size",
            stacklevel=3,
        )


def residual_arrays(field_fn, p: RogonParams, S, t, h: float = 1e-2, fd_order: int = 8):
    """Residuals (r_sigma, r_psi) of the coupled system, broadcasting over S, t.

    ``field_fn(p, S, t) -> (sigma, psi)`` must accept array arguments.
    """
    _check_stencil_args(h, fd_order)
    S = np.asarray(S, dtype=float)
    t = np.asarray(t, dtype=float)
    w1 = _D1_WEIGHTS[fd_order]
    w2 = _D2_WEIGHTS[fd_order]
    half = len(w1) // 2

    sigma, psi = field_fn(p, S, t)
    sigma_t = np.zeros_like(np.asarray(sigma, dtype=complex))
    psi_t = np.zeros_like(sigma_t)
    sigma_ss = np.zeros_like(sigma_t)
    psi_ss = np.zeros_like(sigma_t)
    for m, (c1, c2) in enumerate(zip(w1, w2)):
        off = (m - half) * h
        if c1 != 0.0:
            sg, ps = field_fn(p, S, t + off)
            sigma_t += c1 * sg
            psi_t += c1 * ps
        sg, ps = field_fn(p, S + off, t)
        sigma_ss += c2 * sg
        psi_ss += c2 * ps
    sigma_t /= h
    psi_t /= h
    sigma_ss /= h * h
    psi_ss /= h * h

    inten = np.abs(sigma) ** 2 + np.abs(psi) ** 2
    r_sigma = 1j * sigma_t + 0.5 * sigma_ss + p.beta * inten * sigma
    r_psi = 1j * psi_t + 0.5 * psi_ss + p.beta * inten * psi
    return r_sigma, r_psi


def residual_at(
    field_fn, p: RogonParams, S: float, t: float, h: float = 1e-2, fd_order: int = 8
) -> ResidualSample:
    r_sigma, r_psi = residual_arrays(field_fn, p, S, t, h=h, fd_order=fd_order)
    return ResidualSample(S=float(S), t=float(t), r_sigma=complex(r_sigma), r_psi=complex(r_psi))


def residual_scan(
    field_fn,
    p: RogonParams,
    s_range: tuple[float, float] = (-5.0, 5.0),
    t_range: tuple[float, float] = (-3.0, 3.0),
    ns: int = 101,
    nt: int = 61,
    h: float = 5e-3,
    fd_order: int = 8,
) -> ResidualReport:
    """Max |residual| of both equations over an ns x nt sample grid."""
    if ns < 2 or nt < 2:
        raise ValueError(f"need at least 2 samples per axis, got ns={ns}, nt={nt}")
    S = np.linspace(s_range[0], s_range[1], ns)[None, :]
    t = np.linspace(t_range[0], t_range[1], nt)[:, None]
    r_sigma, r_psi = residual_arrays(field_fn, p, S, t, h=h, fd_order=fd_order)
    return ResidualReport(
        s_range=tuple(s_range),
        t_range=tuple(t_range),
        ns=ns,
        nt=nt,
        fd_order=fd_order,
        h=h,
        max_abs_r_sigma=float(np.max(np.abs(r_sigma))),
        max_abs_r_psi=float(np.max(np.abs(r_psi))),
    )


@dataclass
class ConvergenceStudy:
    h_list: list[float]
    r_sigma: list[float]
    r_psi: list[float]
    roundoff: list[bool]  # per h: residual at or below the roundoff floor
    exact: bool  # all entries roundoff-dominated (field solves the PDE exactly)
    slope_sigma: float | None = None
    slope_psi: float | None = None

    def rows(self):
        return list(zip(self.h_list, self.r_sigma, self.r_psi, self.roundoff))


def convergence_study(
    field_fn,
    p: RogonParams,
    S: float,
    t: float,
    fd_order: int = 8,
    h_list=(0.08, 0.04, 0.02, 0.01),
) -> ConvergenceStudy:
    """Measured truncation order of the residual at one point.

    Fits the least-squares slope of log|r| against log h; entries flagged as
    roundoff-dominated are excluded from the fit.
    """
    h_list = [float(h) for h in h_list]
    if len(h_list) < 4 or any(b >= a for a, b in zip(h_list, h_list[1:])):
        raise ValueError("h_list must be strictly decreasing with >= 4 entries")
    sigma0, psi0 = field_fn(p, S, t)
    scale = max(1.0, abs(complex(np.asarray(sigma0).item())), abs(complex(np.asarray(psi0).item())))

    rs, rp, flags = [], [], []
    eps = np.finfo(float).eps
    for h in h_list:
        sample = residual_at(field_fn, p, S, t, h=h, fd_order=fd_order)
        rs.append(abs(sample.r_sigma))
        rp.append(abs(sample.r_psi))
        # cancellation floor of the second-derivative stencil
        floor = 100.0 * eps * scale / (h * h)
        flags.append(max(rs[-1], rp[-1]) < floor)

    study = ConvergenceStudy(
        h_list=h_list, r_sigma=rs, r_psi=rp, roundoff=flags, exact=all(flags)
    )
    keep = [i for i, f in enumerate(flags) if not f]
    if len(keep) >= 2:
        lh = np.log([h_list[i] for i in keep])
        if all(rs[i] > 0 for i in keep):
            study.slope_sigma = float(np.polyfit(lh, np.log([rs[i] for i in keep]), 1)[0])
        if all(rp[i] > 0 for i in keep):
            study.slope_psi = float(np.polyfit(lh, np.log([rp[i] for i in keep]), 1)[0])
    return study


def analytic_field(order: int):
    """Field function for the order-1 or order-2 closed form."""

    def fn(p, S, t):
        return eval_field(p, order, S, t)

    fn.__name__ = f"rogon{order}_field"
    return fn


def plane_wave_field(p_unused=None):
    """Background plane wave; exact solution since A_s^2+A_p^2 = alpha^2/(2*beta)."""

    def fn(p, S, t):
        a_sig, a_psi = background_amplitudes(p)
        carrier = carrier_phase(p, S, t)
        return a_sig * carrier, a_psi * carrier

    fn.__name__ = "plane_wave_field"
    return fn


def corrupted_field(order: int):
    """Negative control: rational factor without the carrier (not a solution)."""
    factor = rogon1_factor if order == 1 else rogon2_factor

    def fn(p, S, t):
        a_sig, a_psi = background_amplitudes(p)
        core = factor(p, S, t)
        return a_sig * core, a_psi * core

    fn.__name__ = f"corrupted_rogon{order}_field"
    return fn
