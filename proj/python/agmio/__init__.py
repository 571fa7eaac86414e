"""Adaptive composite minimization with inexact first-order oracles.

The heavy lifting lives in the C++ extension; this package re-exports the
main operations: catalog solves with bound verification, prox-mapping
primitives and the oracle contract checker.
"""

from agmio._core import (
    CapabilityError,
    HolderParams,
    bregman_divergence,
    catalog_names,
    gradient_mapping,
    holder_l_of_delta,
    holder_m_ceiling,
    holder_params_from_inner_max,
    oracle_check,
    prox_certificate,
    prox_step,
    solve,
    stationarity_residual,
)

__all__ = [
    "CapabilityError",
    "HolderParams",
    "bregman_divergence",
    "catalog_names",
    "gradient_mapping",
    "holder_l_of_delta",
    "holder_m_ceiling",
    "holder_params_from_inner_max",
    "oracle_check",
    "prox_certificate",
    "prox_step",
    "solve",
    "stationarity_residual",
]

__version__ = "0.1.0"
