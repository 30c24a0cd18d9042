"""Closed-form evaluators for the one- and two-rogon solution families.

All evaluators broadcast over NumPy arrays for ``S`` and ``t``.  The rational
structure is written in the comoving variable ``xi = S - k*t`` through the
scale-invariant combinations ``u = (alpha*xi)**2`` and ``w = (alpha**2 * t)**2``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .params import ParameterError, RogonParams


class SingularityError(RuntimeError):
    """The two-rogon denominator polynomial was non-positive.

    This never happens for real arguments; hitting it signals a defect in the
    evaluator, not a user error.
    """


def background_amplitudes(p: RogonParams) -> tuple[float, float]:
    """Plane-wave background amplitudes (A_sigma, A_psi).

    A_sigma = alpha*a / sqrt(2*beta*(a^2+b^2)) and likewise with b for A_psi,
    so that A_sigma^2 + A_psi^2 = alpha^2 / (2*beta).
    """
    pref = p.alpha / np.sqrt(2.0 * p.beta * (p.a * p.a + p.b * p.b))
    return pref * p.a, pref * p.b


def carrier_phase(p: RogonParams, S, t):
    """Unit-modulus carrier exp(i*[k*S + (alpha^2 - k^2)*t/2])."""
    phase = p.k * np.asarray(S) + 0.5 * (p.alpha**2 - p.k**2) * np.asarray(t)
    return np.exp(1j * phase)


def _uw(p: RogonParams, S, t):
    xi = np.asarray(S, dtype=float) - p.k * np.asarray(t, dtype=float)
    a2 = p.alpha * p.alpha
    u = a2 * xi * xi
    w = (a2 * np.asarray(t, dtype=float)) ** 2
    return u, w


def rogon1_factor(p: RogonParams, S, t):
    """Rational bracket of the one-rogon: 1 - 4*(1 + i*alpha^2*t)/D with
    D = 1 + 2*alpha^2*(S-k*t)^2 + alpha^4*t^2 >= 1."""
    u, w = _uw(p, S, t)
    den = 1.0 + 2.0 * u + w
    return 1.0 - 4.0 * (1.0 + 1j * (p.alpha**2) * np.asarray(t)) / den


def poly_P2(p: RogonParams, S, t):
    """Real part numerator polynomial of the two-rogon bracket."""
    u, w = _uw(p, S, t)
    return -0.5 * u * u - 1.5 * u * w - 0.625 * w * w - 1.5 * u - 2.25 * w + 0.375


def poly_Q2(p: RogonParams, S, t):
    """Odd-in-t numerator polynomial of the two-rogon bracket."""
    u, w = _uw(p, S, t)
    return u * u + u * w + 0.25 * w * w - 3.0 * u + 0.5 * w - 3.75


def poly_H2(p: RogonParams, S, t):
    """Denominator polynomial of the two-rogon bracket; positive for real
    arguments."""
    u, w = _uw(p, S, t)
    return (
        u * u * u / 12.0
        + 0.125 * u * u * w
        + 0.0625 * u * w * w
        + w * w * w / 96.0
        + 0.125 * u * u
        - 0.375 * u * w
        + 0.28125 * w * w
        + 0.5625 * u
        + 1.03125 * w
        + 0.09375
    )


def rogon2_factor(p: RogonParams, S, t):
    """Rational bracket of the two-rogon: 1 + (P2 - (1/2)*i*alpha^2*t*Q2)/H2."""
    h2 = poly_H2(p, S, t)
    if np.any(h2 <= 0.0):
        bad = np.argmin(np.asarray(h2))
        raise SingularityError(
            f"H2 <= 0 encountered (min {np.min(h2)!r} at flat index {bad}); "
            "the two-rogon denominator must be positive for real arguments"
        )
    num = poly_P2(p, S, t) - 0.5j * (p.alpha**2) * np.asarray(t) * poly_Q2(p, S, t)
    return 1.0 + num / h2


def eval_rogon1(p: RogonParams, S, t):
    """One-rogon fields (sigma, psi) at (S, t)."""
    a_sig, a_psi = background_amplitudes(p)
    core = rogon1_factor(p, S, t) * carrier_phase(p, S, t)
    return a_sig * core, a_psi * core


def eval_rogon2(p: RogonParams, S, t):
    """Two-rogon fields (sigma, psi) at (S, t)."""
    a_sig, a_psi = background_amplitudes(p)
    core = rogon2_factor(p, S, t) * carrier_phase(p, S, t)
    return a_sig * core, a_psi * core


def eval_field(p: RogonParams, order: int, S, t):
    """Dispatch on solution order (1 or 2)."""
    if order == 1:
        return eval_rogon1(p, S, t)
    if order == 2:
        return eval_rogon2(p, S, t)
    raise ParameterError(f"order must be 1 or 2, got {order}")


@dataclass(frozen=True)
class PeakInfo:
    location: tuple[float, float]  # (S, t)
    amplitude_ratio: float

    @property
    def intensity_ratio(self) -> float:
        return self.amplitude_ratio**2


def peak_info(p: RogonParams, order: int) -> PeakInfo:
    """Analytic peak of the rational bracket: at S - k*t = 0, t = 0 the
    one-rogon factor is -3 and the two-rogon factor is 5."""
    if order == 1:
        return PeakInfo(location=(0.0, 0.0), amplitude_ratio=3.0)
    if order == 2:
        return PeakInfo(location=(0.0, 0.0), amplitude_ratio=5.0)
    raise ParameterError(f"order must be 1 or 2, got {order}")


@dataclass
class FieldGrid:
    """Batched evaluation on the tensor grid t_range x s_range (t-major)."""

    S: np.ndarray  # (ns,)
    t: np.ndarray  # (nt,)
    sigma: np.ndarray  # (nt, ns) complex
    psi: np.ndarray  # (nt, ns) complex

    @property
    def i_sigma(self) -> np.ndarray:
        return np.abs(self.sigma) ** 2

    @property
    def i_psi(self) -> np.ndarray:
        return np.abs(self.psi) ** 2


def eval_arrays(p: RogonParams, order: int, S: np.ndarray, t: np.ndarray):
    """Field arrays of shape (t.size, S.size) via the active kernel backend."""
    from . import _kernels

    if order not in (1, 2):
        raise ParameterError(f"order must be 1 or 2, got {order}")
    S = np.ascontiguousarray(S, dtype=float)
    t = np.ascontiguousarray(t, dtype=float)
    return _kernels.rogon_grid(order, p.alpha, p.beta, p.a, p.b, p.k, S, t)


def eval_grid(
    p: RogonParams,
    order: int,
    s_range: tuple[float, float],
    t_range: tuple[float, float],
    ns: int,
    nt: int,
) -> FieldGrid:
    if ns < 1 or nt < 1:
        raise ParameterError(f"ns and nt must be >= 1, got ns={ns}, nt={nt}")
    if not (np.isfinite(s_range).all() and np.isfinite(t_range).all()):
        raise ParameterError("grid ranges must be finite")
    S = np.linspace(s_range[0], s_range[1], ns)
    t = np.linspace(t_range[0], t_range[1], nt)
    sigma, psi = eval_arrays(p, order, S, t)
    return FieldGrid(S=S, t=t, sigma=sigma, psi=psi)
