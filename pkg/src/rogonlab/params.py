"""Parameter family shared by the one- and two-rogon closed-form solutions."""

from __future__ import annotations

import math
from dataclasses import dataclass, replace


class ParameterError(ValueError):
    """Parameter set outside the validity domain of the solution family."""


@dataclass(frozen=True)
class RogonParams:
    """The five free parameters (alpha, beta, a, b, k).

    alpha : overall scaling of the rational core, restricted to alpha > 0
    beta  : constant adaptive market potential (the interest rate), beta > 0
    a, b  : amplitude weights of the volatility and option-price components
    k     : carrier wavenumber in the stock-price coordinate
    """

    alpha: float
    beta: float
    a: float
    b: float
    k: float = 0.0

    def __post_init__(self) -> None:
        for name in ("alpha", "beta", "a", "b", "k"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(float(v)):
                raise ParameterError(f"{name} must be a finite real, got {v!r}")
            object.__setattr__(self, name, float(v))
        if self.alpha <= 0.0:
            raise ParameterError(f"alpha must be > 0, got {self.alpha}")
        if self.beta <= 0.0:
            raise ParameterError(
                f"beta must be > 0 (real square root in the amplitude prefactor), "
                f"got {self.beta}"
            )
        if self.a == 0.0 and self.b == 0.0:
            raise ParameterError("a and b cannot both be zero (prefactor undefined)")

    def with_k(self, k: float) -> "RogonParams":
        return replace(self, k=k)
