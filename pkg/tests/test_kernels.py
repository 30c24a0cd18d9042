"""Compiled kernels against the NumPy fallback and the reference evaluators."""

import numpy as np
import pytest

from rogonlab import _kernels, _kernels_np
from rogonlab.rogon import eval_field
from conftest import random_params


def test_backend_identifies_itself():
    assert _kernels.BACKEND in ("cython", "numpy")


@pytest.mark.parametrize("order", [1, 2])
def test_active_backend_matches_numpy_fallback(order, rng):
    for p in random_params(rng, 5):
        S = np.linspace(-6, 6, 97)
        t = np.linspace(-3, 3, 33)
        sg_a, ps_a = _kernels.rogon_grid(order, p.alpha, p.beta, p.a, p.b, p.k, S, t)
        sg_b, ps_b = _kernels_np.rogon_grid(order, p.alpha, p.beta, p.a, p.b, p.k, S, t)
        assert np.allclose(sg_a, sg_b, rtol=1e-14, atol=1e-16)
        assert np.allclose(ps_a, ps_b, rtol=1e-14, atol=1e-16)


@pytest.mark.parametrize("order", [1, 2])
def test_grid_kernel_matches_reference(order, rng):
    for p in random_params(rng, 5):
        S = np.linspace(-6, 6, 97)
        t = np.linspace(-3, 3, 33)
        sg, ps = _kernels.rogon_grid(order, p.alpha, p.beta, p.a, p.b, p.k, S, t)
        sg_ref, ps_ref = eval_field(p, order, S[None, :], t[:, None])
        assert np.allclose(sg, sg_ref, rtol=1e-13, atol=1e-15)
        assert np.allclose(ps, ps_ref, rtol=1e-13, atol=1e-15)


def test_nonlinear_phase_backends_agree(rng):
    sigma = rng.normal(size=256) + 1j * rng.normal(size=256)
    psi = rng.normal(size=256) + 1j * rng.normal(size=256)
    s1, p1 = sigma.copy(), psi.copy()
    s2, p2 = sigma.copy(), psi.copy()
    _kernels.nonlinear_phase(s1, p1, 0.37)
    _kernels_np.nonlinear_phase(s2, p2, 0.37)
    assert np.allclose(s1, s2, rtol=1e-14)
    assert np.allclose(p1, p2, rtol=1e-14)


def test_nonlinear_phase_preserves_modulus(rng):
    sigma = rng.normal(size=512) + 1j * rng.normal(size=512)
    psi = rng.normal(size=512) + 1j * rng.normal(size=512)
    m_sig = np.abs(sigma).copy()
    m_psi = np.abs(psi).copy()
    _kernels.nonlinear_phase(sigma, psi, 1.3)
    assert np.allclose(np.abs(sigma), m_sig, rtol=1e-14)
    assert np.allclose(np.abs(psi), m_psi, rtol=1e-14)


def test_thread_cap_parses_env(monkeypatch):
    monkeypatch.delenv("ROGONLAB_THREADS", raising=False)
    assert _kernels.thread_cap() is None
    monkeypatch.setenv("ROGONLAB_THREADS", "4")
    assert _kernels.thread_cap() == 4
    monkeypatch.setenv("ROGONLAB_THREADS", "bogus")
    assert _kernels.thread_cap() is None
