import numpy as np
import pytest

from rogonlab import RogonParams


@pytest.fixture
def fig1_params():
    """Reference figure parameters (order-1 surface, zero gauge)."""
    return RogonParams(alpha=1.5, beta=1.0, a=2.0, b=5.0, k=0.0)


@pytest.fixture
def rng():
    return np.random.default_rng(20260824)


def random_params(rng, n, k_zero=False):
    """Admissible random parameter draws for property checks."""
    out = []
    for _ in range(n):
        out.append(
            RogonParams(
                alpha=float(rng.uniform(0.2, 3.0)),
                beta=float(rng.uniform(0.1, 4.0)),
                a=float(rng.uniform(-3.0, 3.0)) or 1.0,
                b=float(rng.uniform(-3.0, 3.0)) or 1.0,
                k=0.0 if k_zero else float(rng.uniform(-1.5, 1.5)),
            )
        )
    return out
