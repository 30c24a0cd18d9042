"""Coupled nonlinear volatility / option-pricing wave model toolkit.

Closed-form rogue-wave evaluators, a finite-difference residual oracle for
the governing coupled system, and a periodic split-step pseudospectral
integrator, with a compiled kernel core and a NumPy fallback.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .params import ParameterError, RogonParams
from .rogon import (
    FieldGrid,
    PeakInfo,
    SingularityError,
    background_amplitudes,
    carrier_phase,
    eval_field,
    eval_grid,
    eval_rogon1,
    eval_rogon2,
    peak_info,
    poly_H2,
    poly_P2,
    poly_Q2,
    rogon1_factor,
    rogon2_factor,
)

__version__ = "0.1.0"

__all__ = [
    "KERNEL_BACKEND",
    "ParameterError",
    "RogonParams",
    "FieldGrid",
    "PeakInfo",
    "SingularityError",
    "background_amplitudes",
    "carrier_phase",
    "eval_field",
    "eval_grid",
    "eval_rogon1",
    "eval_rogon2",
    "peak_info",
    "poly_H2",
    "poly_P2",
    "poly_Q2",
    "rogon1_factor",
    "rogon2_factor",
    "__version__",
]
