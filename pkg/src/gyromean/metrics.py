"""Distances on the positive definite cone.

Four kinds are exposed:

* ``thompson`` -- operator norm of log(A^{-1/2} B A^{-1/2}).
* ``riemannian`` -- Frobenius norm of the same log (the trace metric, whose
  midpoint is the geometric mean).
* ``semimetric_op`` / ``semimetric_frob`` -- 2 ||log(A^{-1} # B)|| in the
  operator / Frobenius norm.  This satisfies every metric axiom except the
  triangle inequality, and the spectral mean is its midpoint.
"""

from __future__ import annotations

import numpy as np

from .errors import UnknownCase
from .kernel import (
    DEFAULT_TOL,
    TolerancePolicy,
    as_matrix,
    hermitian_part,
    invm,
    logm,
    pd_eigh,
    powm,
    require_same_dim,
)
from .means import geo_mean

DISTANCE_KINDS = ("thompson", "riemannian", "semimetric_op", "semimetric_frob")


def _log_whitened(A, B, tol):
    """log(A^{-1/2} B A^{-1/2})."""
    Am, Bm = as_matrix(A), as_matrix(B)
    require_same_dim(Am, Bm)
    inv_root = powm(Am, -0.5, tol)
    return logm(hermitian_part(inv_root @ Bm @ inv_root), tol)


def _log_inv_sharp(A, B, tol):
    """log(A^{-1} # B)."""
    Am, Bm = as_matrix(A), as_matrix(B)
    require_same_dim(Am, Bm)
    return logm(geo_mean(invm(Am, tol), Bm, 0.5, tol), tol)


def _opnorm(H) -> float:
    return float(np.max(np.abs(np.linalg.eigvalsh(H))))


def distance(kind: str, A, B, tol: TolerancePolicy = DEFAULT_TOL) -> float:
    """Distance between positive definite matrices under the given kind."""
    if kind == "thompson":
        return _opnorm(_log_whitened(A, B, tol))
    if kind == "riemannian":
        return float(np.linalg.norm(_log_whitened(A, B, tol)))
    if kind == "semimetric_op":
        return 2.0 * _opnorm(_log_inv_sharp(A, B, tol))
    if kind == "semimetric_frob":
        return 2.0 * float(np.linalg.norm(_log_inv_sharp(A, B, tol)))
    raise UnknownCase(f"unknown distance kind {kind!r}")


def sup_ratio(A, B, tol: TolerancePolicy = DEFAULT_TOL) -> float:
    """Least alpha > 0 with B <= alpha A: the top eigenvalue of A^{-1/2} B A^{-1/2}.

    The Thompson distance equals max(log sup_ratio(A, B), log sup_ratio(B, A)).
    """
    Am, Bm = as_matrix(A), as_matrix(B)
    require_same_dim(Am, Bm)
    pd_eigh(Bm, tol)
    inv_root = powm(Am, -0.5, tol)
    w = np.linalg.eigvalsh(hermitian_part(inv_root @ Bm @ inv_root))
    return float(w[-1])


def midpoint_deviation(kind: str, A, B, M,
                       tol: TolerancePolicy = DEFAULT_TOL) -> tuple[float, float]:
    """How far M is from being the metric midpoint of A and B.

    Returns (|dist(A, M) - dist(A, B)/2|, |dist(B, M) - dist(A, B)/2|).
    """
    half = 0.5 * distance(kind, A, B, tol)
    return (
        abs(distance(kind, A, M, tol) - half),
        abs(distance(kind, B, M, tol) - half),
    )
