# cython: boundscheck=False, wraparound=False, cdivision=True
# cython: language_level=3
"""Compiled inner loops: closed-form field evaluation on tensor grids and the
pointwise nonlinear phase rotation used by the split-step integrator."""

import numpy as np

cimport numpy as cnp
from libc.math cimport cos, sin, sqrt

cnp.import_array()

BACKEND = "cython"


class KernelSingularityError(RuntimeError):
    pass


def rogon_grid(int order, double alpha, double beta, double a, double b,
               double k, double[::1] S, double[::1] t):
    """Evaluate the order-1 or order-2 closed-form fields on t x S.

    Returns complex128 arrays (sigma, psi) of shape (t.size, S.size).
    """
    cdef Py_ssize_t ns = S.shape[0], nt = t.shape[0], i, j
    sigma = np.empty((nt, ns), dtype=np.complex128)
    psi = np.empty((nt, ns), dtype=np.complex128)
    cdef double complex[:, ::1] sg = sigma
    cdef double complex[:, ::1] ps = psi
    cdef double pref = alpha / sqrt(2.0 * beta * (a * a + b * b))
    cdef double a_sig = pref * a
    cdef double a_psi = pref * b
    cdef double a2 = alpha * alpha
    cdef double tt, xi, u, w, den, fre, fim, p2, q2, h2
    cdef double ph, cre, cim, tre, tim

    for i in range(nt):
        tt = t[i]
        w = (a2 * tt) * (a2 * tt)
        for j in range(ns):
            xi = S[j] - k * tt
            u = a2 * xi * xi
            if order == 1:
                den = 1.0 + 2.0 * u + w
                fre = 1.0 - 4.0 / den
                fim = -4.0 * a2 * tt / den
            else:
                p2 = (-0.5 * u * u - 1.5 * u * w - 0.625 * w * w
                      - 1.5 * u - 2.25 * w + 0.375)
                q2 = u * u + u * w + 0.25 * w * w - 3.0 * u + 0.5 * w - 3.75
                h2 = (u * u * u / 12.0 + 0.125 * u * u * w + 0.0625 * u * w * w
                      + w * w * w / 96.0 + 0.125 * u * u - 0.375 * u * w
                      + 0.28125 * w * w + 0.5625 * u + 1.03125 * w + 0.09375)
                if h2 <= 0.0:
                    raise KernelSingularityError(
                        "H2 <= 0 at (S=%r, t=%r): %r" % (S[j], tt, h2))
                fre = 1.0 + p2 / h2
                fim = -0.5 * a2 * tt * q2 / h2
            ph = k * S[j] + 0.5 * (a2 - k * k) * tt
            cre = cos(ph)
            cim = sin(ph)
            tre = fre * cre - fim * cim
            tim = fre * cim + fim * cre
            sg[i, j] = a_sig * tre + 1j * (a_sig * tim)
            ps[i, j] = a_psi * tre + 1j * (a_psi * tim)
    return sigma, psi


def nonlinear_phase(double complex[::1] sigma, double complex[::1] psi,
                    double beta_dt):
    """In-place rotation u -> u * exp(i*beta_dt*(|sigma|^2+|psi|^2))."""
    cdef Py_ssize_t n = sigma.shape[0], i
    cdef double inten, ph, c, s, sr, si, pr, pi
    for i in range(n):
        sr = sigma[i].real
        si = sigma[i].imag
        pr = psi[i].real
        pi = psi[i].imag
        inten = sr * sr + si * si + pr * pr + pi * pi
        ph = beta_dt * inten
        c = cos(ph)
        s = sin(ph)
        sigma[i] = (sr * c - si * s) + 1j * (sr * s + si * c)
        psi[i] = (pr * c - pi * s) + 1j * (pr * s + pi * c)
