"""Pure-NumPy fallback for the compiled kernels.

Mirrors the arithmetic of ``_kernels_cy`` so that either backend produces the
same values to the last few ulps.
"""

from __future__ import annotations

import numpy as np

BACKEND = "numpy"


def rogon_grid(order, alpha, beta, a, b, k, S, t):
    """Closed-form fields on the tensor grid t x S; shape (t.size, S.size)."""
    tt = t[:, None]
    ss = S[None, :]
    pref = alpha / np.sqrt(2.0 * beta * (a * a + b * b))
    a_sig = pref * a
    a_psi = pref * b
    a2 = alpha * alpha
    xi = ss - k * tt
    u = a2 * xi * xi
    w = (a2 * tt) ** 2
    if order == 1:
        den = 1.0 + 2.0 * u + w
        factor = (1.0 - 4.0 / den) + 1j * (-4.0 * a2 * tt / den)
    else:
        p2 = -0.5 * u * u - 1.5 * u * w - 0.625 * w * w - 1.5 * u - 2.25 * w + 0.375
        q2 = u * u + u * w + 0.25 * w * w - 3.0 * u + 0.5 * w - 3.75
        h2 = (
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
        if np.any(h2 <= 0.0):
            raise RuntimeError(f"H2 <= 0 encountered (min {h2.min()!r})")
        factor = (1.0 + p2 / h2) + 1j * (-0.5 * a2 * tt * q2 / h2)
    ph = k * ss + 0.5 * (a2 - k * k) * tt
    carrier = np.cos(ph) + 1j * np.sin(ph)
    core = factor * carrier
    return a_sig * core, a_psi * core


def nonlinear_phase(sigma, psi, beta_dt):
    """In-place rotation u -> u * exp(i*beta_dt*(|sigma|^2+|psi|^2))."""
    inten = sigma.real**2 + sigma.imag**2 + psi.real**2 + psi.imag**2
    ph = beta_dt * inten
    rot = np.cos(ph) + 1j * np.sin(ph)
    sigma *= rot
    psi *= rot
