"""The two weighted geometric means and their defining-equation residuals.

``geo_mean`` is the metric geodesic A^{1/2}(A^{-1/2} B A^{-1/2})^t A^{1/2};
``spectral_mean`` is the curve (A^{-1} # B)^t A (A^{-1} # B)^t.  Both accept
any real parameter t (the curves extend beyond [0,1], and the component-wise
bijection inverses need 1/t).
"""

from __future__ import annotations

import numpy as np

from .errors import UnknownCase, WeightOutOfRange
from .kernel import (
    DEFAULT_TOL,
    TolerancePolicy,
    as_matrix,
    hermitian_part,
    invm,
    logm,
    min_eig,
    pd_eigh,
    powm,
    require_hermitian,
    require_same_dim,
    sqrtm,
)

MEAN_KINDS = ("metric", "spectral")


def geo_mean(A, B, t: float = 0.5, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Weighted geometric mean A #_t B on the positive definite cone.

    Parameters
    ----------
    A, B : array_like, shape (n, n)
        Positive definite matrices.
    t : float
        Curve parameter; 0 gives A, 1 gives B. Any real value is accepted.

    Returns
    -------
    ndarray
        A^{1/2} (A^{-1/2} B A^{-1/2})^t A^{1/2}, positive definite.
    """
    Am, Bm = as_matrix(A), as_matrix(B)
    require_same_dim(Am, Bm)
    dec = pd_eigh(Am, tol)
    w = dec.eigenvalues
    V = dec.vectors
    rootA = (V * np.sqrt(w)) @ V.conj().T
    inv_rootA = (V * (1.0 / np.sqrt(w))) @ V.conj().T
    inner = powm(hermitian_part(inv_rootA @ Bm @ inv_rootA), t, tol)
    return hermitian_part(rootA @ inner @ rootA)


def spectral_mean(A, B, t: float = 0.5, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Weighted spectral geometric mean A natural_t B.

    Computed as W^t A W^t with W = A^{-1} # B.  At t = 1/2 its eigenvalues
    are the positive square roots of the eigenvalues of A B.
    """
    Am, Bm = as_matrix(A), as_matrix(B)
    require_same_dim(Am, Bm)
    W = geo_mean(invm(Am, tol), Bm, 0.5, tol)
    Wt = powm(W, t, tol)
    return hermitian_part(Wt @ Am @ Wt)


def mean(kind: str, A, B, t: float = 0.5, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Dispatch on mean kind: ``"metric"`` -> #_t, ``"spectral"`` -> natural_t."""
    if kind == "metric":
        return geo_mean(A, B, t, tol)
    if kind == "spectral":
        return spectral_mean(A, B, t, tol)
    raise UnknownCase(f"unknown mean kind {kind!r}")


def riccati_residual(A, B, X, tol: TolerancePolicy = DEFAULT_TOL) -> float:
    """Frobenius residual of the Riccati equation X A^{-1} X = B."""
    Am, Bm, Xm = as_matrix(A), as_matrix(B), as_matrix(X)
    require_same_dim(Am, Bm, Xm)
    return float(np.linalg.norm(Xm @ invm(Am, tol) @ Xm - Bm))


def karcher_residual(A, B, t: float, X, tol: TolerancePolicy = DEFAULT_TOL) -> float:
    """Residual of the two-variable weighted stationarity equation.

    Frobenius norm of
    (1-t) log(X^{1/2} A^{-1} X^{1/2}) + t log(X^{1/2} B^{-1} X^{1/2}),
    which vanishes exactly at X = A #_t B.
    """
    Am, Bm, Xm = as_matrix(A), as_matrix(B), as_matrix(X)
    require_same_dim(Am, Bm, Xm)
    rootX = sqrtm(Xm, tol)
    term_a = logm(hermitian_part(rootX @ invm(Am, tol) @ rootX), tol)
    term_b = logm(hermitian_part(rootX @ invm(Bm, tol) @ rootX), tol)
    return float(np.linalg.norm((1.0 - t) * term_a + t * term_b))


def spectral_defining_residual(A, B, t: float, X,
                               tol: TolerancePolicy = DEFAULT_TOL) -> float:
    """Frobenius residual of (A^{-1} # B)^t = A^{-1} # X.

    Zero (to tolerance) exactly when X = A natural_t B, since the right side
    determines X uniquely.
    """
    Am, Bm, Xm = as_matrix(A), as_matrix(B), as_matrix(X)
    require_same_dim(Am, Bm, Xm)
    Ainv = invm(Am, tol)
    lhs = powm(geo_mean(Ainv, Bm, 0.5, tol), t, tol)
    rhs = geo_mean(Ainv, Xm, 0.5, tol)
    return float(np.linalg.norm(lhs - rhs))


def mean_left_inverse(kind: str, A, C, t: float,
                      tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Solve kind-mean(A, X, t) = C for X, as the extended curve at 1/t.

    Raises WeightOutOfRange at t = 0, where the mean ignores X.
    """
    if t == 0:
        raise WeightOutOfRange("no left inverse at t = 0")
    return mean(kind, A, C, 1.0 / t, tol)


def block_psd_margin(A, B, X, tol: TolerancePolicy = DEFAULT_TOL) -> float:
    """Smallest eigenvalue of the block matrix [[A, X], [X, B]].

    Nonnegative exactly when the Hermitian X is admissible in the
    maximum characterization of the geometric mean; the maximizer A # B
    sits on the boundary with margin zero.
    """
    Am, Bm = as_matrix(A), as_matrix(B)
    Xm = require_hermitian(X, tol.hermiticity_tol)
    require_same_dim(Am, Bm, Xm)
    n = Am.shape[0]
    block = np.zeros((2 * n, 2 * n), dtype=complex)
    block[:n, :n] = Am
    block[:n, n:] = Xm
    block[n:, :n] = Xm.conj().T
    block[n:, n:] = Bm
    return min_eig(block, tol)
