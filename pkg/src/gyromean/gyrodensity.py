"""Gyrovector-space structure on invertible density matrices.

Carrier: positive definite Hermitian matrices of unit trace.  Operations are
the trace-normalized cone operations; the identity element is I/n and the
inverse of rho is rho^{-1}/tr(rho^{-1}).  Gyrolines and cogyrolines are the
trace-normalized weighted geometric and spectral means.
"""

from __future__ import annotations

import numpy as np

from .errors import NotDensity
from .kernel import (
    DEFAULT_TOL,
    TolerancePolicy,
    as_matrix,
    hermitian_part,
    pd_eigh,
    powm,
    require_same_dim,
    sqrtm,
)
from .gyrocone import gyration_unitary
from .means import geo_mean, spectral_mean

TRACE_TOL = 1e-10


def require_density(rho, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Validate an invertible density matrix (PD Hermitian, trace one)."""
    M = as_matrix(rho)
    try:
        pd_eigh(M, tol)
    except Exception as exc:
        raise NotDensity(str(exc)) from exc
    trace = float(np.trace(M).real)
    if abs(trace - 1.0) > TRACE_TOL:
        raise NotDensity(f"trace {trace!r} differs from 1 beyond tolerance")
    return M


def normalize_to_density(A) -> np.ndarray:
    """Project a positive definite matrix onto unit trace."""
    M = as_matrix(A)
    return M / np.trace(M).real


def dens_add(rho, sigma, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """rho (*) sigma = rho^{1/2} sigma rho^{1/2} / tr(rho sigma)."""
    r = require_density(rho, tol)
    s = require_density(sigma, tol)
    require_same_dim(r, s)
    root = sqrtm(r, tol)
    return normalize_to_density(hermitian_part(root @ s @ root))


def dens_scalar(t: float, rho, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """t (*) rho = rho^t / tr(rho^t)."""
    r = require_density(rho, tol)
    return normalize_to_density(powm(r, t, tol))


def dens_neg(rho, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Inverse element rho^{-1} / tr(rho^{-1})."""
    return dens_scalar(-1.0, rho, tol)


def dens_identity(dim: int) -> np.ndarray:
    return np.eye(dim, dtype=complex) / dim


def dens_gyration(rho, sigma, tau, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Gyration on densities: the same unitary conjugation as on the cone.

    Unitary conjugation preserves the trace, so the cone gyration descends
    to the trace-normalized carrier unchanged.
    """
    r = require_density(rho, tol)
    s = require_density(sigma, tol)
    x = require_density(tau, tol)
    U = gyration_unitary(r, s, tol)
    return hermitian_part(U @ x @ U.conj().T)


def dens_gyroline(t: float, rho, sigma, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """L(t; rho, sigma): the trace-normalized weighted geometric mean."""
    r = require_density(rho, tol)
    s = require_density(sigma, tol)
    return normalize_to_density(geo_mean(r, s, t, tol))


def dens_cogyroline(t: float, rho, sigma, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Lc(t; rho, sigma): the trace-normalized weighted spectral mean."""
    r = require_density(rho, tol)
    s = require_density(sigma, tol)
    return normalize_to_density(spectral_mean(r, s, t, tol))


def density_model(dim: int, tol: TolerancePolicy = DEFAULT_TOL):
    """GyroModel adapter for the generic axiom suite."""
    from .gyroaxioms import GyroModel

    return GyroModel(
        name="density",
        identity=dens_identity(dim),
        add=lambda a, b: dens_add(a, b, tol),
        neg=lambda a: dens_neg(a, tol),
        scalar=lambda t, a: dens_scalar(t, a, tol),
        gyr=lambda a, b, x: dens_gyration(a, b, x, tol),
        residual=lambda x, y: float(np.linalg.norm(np.asarray(x) - np.asarray(y))),
    )
