import math

import pytest

from rogonlab import ParameterError, RogonParams


def test_valid_params_are_floats():
    p = RogonParams(alpha=1, beta=2, a=3, b=0, k=1)
    assert isinstance(p.alpha, float) and p.alpha == 1.0


@pytest.mark.parametrize(
    "kwargs",
    [
        dict(alpha=0.0, beta=1.0, a=1.0, b=1.0),
        dict(alpha=-1.0, beta=1.0, a=1.0, b=1.0),
        dict(alpha=1.0, beta=0.0, a=1.0, b=1.0),
        dict(alpha=1.0, beta=-2.0, a=1.0, b=1.0),
        dict(alpha=1.0, beta=1.0, a=0.0, b=0.0),
        dict(alpha=math.nan, beta=1.0, a=1.0, b=1.0),
        dict(alpha=1.0, beta=1.0, a=1.0, b=math.inf),
    ],
)
def test_invalid_params_rejected(kwargs):
    with pytest.raises(ParameterError):
        RogonParams(**kwargs)


def test_with_k_replaces_only_k():
    p = RogonParams(alpha=1.0, beta=1.0, a=2.0, b=5.0, k=0.0)
    q = p.with_k(0.5)
    assert q.k == 0.5 and q.alpha == p.alpha and q.a == p.a
