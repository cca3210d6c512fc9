"""Gyrovector-space structure on the positive definite cone.

The operations are A (+) B = A^{1/2} B A^{1/2} and t (.) A = A^t, with
identity I.  The gyration generated by A and B is conjugation by the unitary
polar factor of A^{1/2} B^{1/2}.  Gyrolines of this structure trace the
weighted geometric mean; cogyrolines trace the weighted spectral mean.
"""

from __future__ import annotations

import numpy as np

from .kernel import (
    DEFAULT_TOL,
    TolerancePolicy,
    as_matrix,
    hermitian_part,
    pd_eigh,
    polar_unitary,
    powm,
    require_same_dim,
    sqrtm,
)


def cone_add(A, B, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """A (+) B = A^{1/2} B A^{1/2}."""
    Am, Bm = as_matrix(A), as_matrix(B)
    require_same_dim(Am, Bm)
    pd_eigh(Bm, tol)
    rootA = sqrtm(Am, tol)
    return hermitian_part(rootA @ Bm @ rootA)


def cone_scalar(t: float, A, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """t (.) A = A^t."""
    return powm(A, t, tol)


def cone_neg(A, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Gyrogroup inverse (-1) (.) A = A^{-1}."""
    return powm(A, -1.0, tol)


def gyration_unitary(A, B, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """U(A, B) = (A^{1/2} B A^{1/2})^{-1/2} A^{1/2} B^{1/2}.

    The unitary polar factor of A^{1/2} B^{1/2}, so that
    A^{1/2} B^{1/2} = (A (+) B)^{1/2} U(A, B).
    """
    Am, Bm = as_matrix(A), as_matrix(B)
    require_same_dim(Am, Bm)
    return polar_unitary(sqrtm(Am, tol) @ sqrtm(Bm, tol), tol)


def gyration(A, B, X, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """gyr[A, B] X = U(A, B) X U(A, B)^{-1}; preserves positive definiteness."""
    Xm = as_matrix(X)
    pd_eigh(Xm, tol)
    U = gyration_unitary(A, B, tol)
    return hermitian_part(U @ Xm @ U.conj().T)


def cooperation(A, B, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """A [+] B = A (+) gyr[A, (-)B] B; commutative on this cone."""
    Bm = as_matrix(B)
    return cone_add(A, gyration(A, cone_neg(Bm, tol), Bm, tol), tol)


def gyroline(t: float, A, B, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """L(t; A, B) = A (+) t (.) ((-)A (+) B), built from the gyro primitives.

    Coincides with the weighted geometric mean A #_t B.
    """
    step = cone_add(cone_neg(A, tol), B, tol)
    return cone_add(A, cone_scalar(t, step, tol), tol)


def cogyroline(t: float, A, B, tol: TolerancePolicy = DEFAULT_TOL) -> np.ndarray:
    """Lc(t; A, B) = t (.) ((-)A [+] B) (+) A, built from the gyro primitives.

    Coincides with the weighted spectral mean A natural_t B.
    """
    step = cooperation(cone_neg(A, tol), B, tol)
    return cone_add(cone_scalar(t, step, tol), A, tol)


def cone_model(dim: int, tol: TolerancePolicy = DEFAULT_TOL):
    """GyroModel adapter for the generic axiom suite."""
    from .gyroaxioms import GyroModel

    return GyroModel(
        name="cone",
        identity=np.eye(dim, dtype=complex),
        add=lambda a, b: cone_add(a, b, tol),
        neg=lambda a: cone_neg(a, tol),
        scalar=lambda t, a: cone_scalar(t, a, tol),
        gyr=lambda a, b, x: gyration(a, b, x, tol),
        residual=lambda x, y: float(np.linalg.norm(np.asarray(x) - np.asarray(y))),
    )


def axiom_suite(samples, scalars=None, tol: TolerancePolicy = DEFAULT_TOL,
                threshold: float = 1e-8):
    """Run the gyrovector-space axiom suite over a list of PD triples.

    Returns the per-axiom max-residual report from
    :func:`gyromean.gyroaxioms.run_axiom_suite`.
    """
    from .gyroaxioms import run_axiom_suite

    samples = [tuple(as_matrix(M) for M in triple) for triple in samples]
    if not samples:
        raise ValueError("axiom suite needs at least one sample triple")
    dim = samples[0][0].shape[0]
    return run_axiom_suite(cone_model(dim, tol), samples, scalars=scalars,
                           threshold=threshold)
