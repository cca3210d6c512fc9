"""Seeded random generation with order-independent substreams.

The harness derives an independent Philox (counter-based) stream for every
(property, dim, trial) coordinate by folding the coordinates into the 64-bit
key with a stable hash.  Parallel or reordered execution therefore cannot
change any draw, which is what makes campaign reports byte-reproducible.

Also home to the premise-forcing samplers: the conditional theorems are
tested with constructive inputs (rescaling, congruence by contractions),
because rejection sampling essentially never hits their premises.
"""

from __future__ import annotations

import hashlib

import numpy as np

from .errors import GenerationFailure
from .kernel import hermitian_part, powm, sqrtm

MAX_RESAMPLES = 100


def substream(seed: int, *coords) -> np.random.Generator:
    """Independent generator for one trial coordinate.

    The stream key is ``seed`` XOR a stable 64-bit digest of the coordinate
    tuple, so streams do not depend on execution order.
    """
    h = hashlib.blake2b(digest_size=8)
    for c in coords:
        h.update(str(c).encode())
        h.update(b"\x1f")
    key = (int(seed) ^ int.from_bytes(h.digest(), "little")) & (2**64 - 1)
    return np.random.Generator(np.random.Philox(key=key))


def complex_gaussian(rng: np.random.Generator, shape) -> np.ndarray:
    return rng.standard_normal(shape) + 1j * rng.standard_normal(shape)


def gen_random_pd(rng: np.random.Generator, dim: int, cond_cap: float = 1e4,
                  unit_det: bool = False) -> np.ndarray:
    """Random positive definite matrix with bounded condition number.

    Builds A = G G* + eps I with complex standard-normal G and
    eps = 1e-3 * (mean eigenvalue of G G*), resampling until the condition
    number is at most ``cond_cap``.  With ``unit_det`` the result is scaled
    by det(A)^{-1/dim}.

    Raises
    ------
    GenerationFailure
        After 100 unsuccessful resamples.
    """
    for _ in range(MAX_RESAMPLES):
        G = complex_gaussian(rng, (dim, dim))
        A = hermitian_part(G @ G.conj().T)
        eps = 1e-3 * float(np.trace(A).real) / dim
        A = A + eps * np.eye(dim)
        w = np.linalg.eigvalsh(A)
        if w[-1] / w[0] <= cond_cap:
            if unit_det:
                A = A / np.exp(np.mean(np.log(w)))
            return A
    raise GenerationFailure(
        f"no matrix with condition number <= {cond_cap} in {MAX_RESAMPLES} tries")


def gen_random_hermitian(rng: np.random.Generator, dim: int) -> np.ndarray:
    return hermitian_part(complex_gaussian(rng, (dim, dim)))


def gen_random_unitary(rng: np.random.Generator, dim: int) -> np.ndarray:
    """Haar-ish unitary via QR with a deterministic phase convention."""
    Q, R = np.linalg.qr(complex_gaussian(rng, (dim, dim)))
    d = np.diagonal(R)
    return Q * (d / np.abs(d))


def gen_commuting_pair(rng: np.random.Generator, dim: int,
                       spread: float = 2.0) -> tuple[np.ndarray, np.ndarray]:
    """Two positive definite matrices sharing an eigenbasis."""
    U = gen_random_unitary(rng, dim)
    wa = np.exp(rng.uniform(-spread, spread, dim))
    wb = np.exp(rng.uniform(-spread, spread, dim))
    A = hermitian_part((U * wa) @ U.conj().T)
    B = hermitian_part((U * wb) @ U.conj().T)
    return A, B


def gen_spread_pd(rng: np.random.Generator, dim: int,
                  spread: float = 1.0) -> np.ndarray:
    """PD matrix with log-uniform spectrum; condition number <= e^{2 spread}.

    The order-inequality battery raises its inputs to p-th powers, which
    raises conditioning to kappa**p; these spectrum-controlled samples keep
    that inside the certifiable double-precision window.
    """
    U = gen_random_unitary(rng, dim)
    w = np.exp(rng.uniform(-spread, spread, dim))
    return hermitian_part((U * w) @ U.conj().T)


def gen_dominated_pair(rng: np.random.Generator, dim: int,
                       spread: float = 0.8) -> tuple[np.ndarray, np.ndarray]:
    """(A, B) with B <= A, via B = A^{1/2} K A^{1/2}, ||K|| <= 1."""
    A = gen_spread_pd(rng, dim, spread)
    K = gen_spread_pd(rng, dim, spread / 2.0)
    K = 0.98 * K / np.linalg.eigvalsh(K)[-1]
    root = sqrtm(A)
    return A, hermitian_part(root @ K @ root)


def gen_sharp_contracted_pair(rng: np.random.Generator, dim: int,
                              spread: float = 0.8) -> tuple[np.ndarray, np.ndarray]:
    """(A, B) with A # B <= I, by joint rescaling (homogeneity of #)."""
    from .means import geo_mean

    A = gen_spread_pd(rng, dim, spread)
    B = gen_spread_pd(rng, dim, spread)
    top = np.linalg.eigvalsh(geo_mean(A, B, 0.5))[-1]
    s = 0.999 / top
    return s * A, s * B


def gen_contraction_for(rng: np.random.Generator, X: np.ndarray,
                        hermitian_only: bool = True,
                        margin: float = 0.97) -> np.ndarray:
    """Hermitian (or PD) S with S X S <= X for the given PD X.

    S X S <= X is equivalent to ||X^{-1/2} S X^{1/2}|| <= 1, so any sample
    is admissible after scaling by that norm.
    """
    dim = X.shape[0]
    if hermitian_only:
        S = gen_random_hermitian(rng, dim)
    else:
        S = gen_random_pd(rng, dim)
    root = sqrtm(X)
    inv_root = powm(X, -0.5)
    op = float(np.linalg.norm(inv_root @ S @ root, ord=2))
    return (margin / op) * S


def gen_spectral_premise_pair(rng: np.random.Generator, dim: int,
                              t: float) -> tuple[np.ndarray, np.ndarray]:
    """(A, B) with A^{-1} natural_t B <= A^{-1}.

    The premise says S A^{-1} S <= A^{-1} for S = (A # B)^t, which holds iff
    ||A^{1/2} S A^{-1/2}|| <= 1.  Draw the sharp value A # B = s P directly
    (P a congruence perturbation of A, s the scalar making S a strict
    contraction) and recover B as the parameter-2 point of the curve through
    A and sP, which by the halving of curve parameters makes A # B = sP.
    """
    from .means import geo_mean

    A = gen_spread_pd(rng, dim, 0.8)
    root, inv_root = sqrtm(A), powm(A, -0.5)
    # sharp value proportional to a congruence-perturbation of A, so that the
    # recovered B keeps a small condition number (the conclusion raises the
    # pair to p-th powers, which raises conditioning to kappa**p)
    H = gen_random_hermitian(rng, dim)
    H = H / float(np.max(np.abs(np.linalg.eigvalsh(H))))
    P = hermitian_part(root @ (np.eye(dim) + 0.15 * H) @ root)
    nu = float(np.linalg.norm(root @ powm(P, t) @ inv_root, ord=2))
    s = (0.97 / nu) ** (1.0 / t)
    return A, geo_mean(A, s * P, 2.0)


def gen_log_sum_pair(rng: np.random.Generator,
                     dim: int) -> tuple[np.ndarray, np.ndarray]:
    """(A, B) positive definite with log A + log B <= 0.

    Built in log space: log B = -log A - P for a modest positive P, with
    both log factors normalized so the pair stays well conditioned.
    """
    from .kernel import expm

    H = gen_random_hermitian(rng, dim)
    H = H / float(np.max(np.abs(np.linalg.eigvalsh(H))))
    P = gen_spread_pd(rng, dim, 0.5)
    return expm(H), expm(-H - P)


def gen_psd_block_triple(rng: np.random.Generator, dim: int,
                         cond_cap: float = 1e4):
    """(A, B, X) with the block matrix [[A, X], [X*, B]] positive semidefinite.

    Any such X factors as A^{1/2} K B^{1/2} with ||K|| <= 1.
    """
    A = gen_random_pd(rng, dim, cond_cap)
    B = gen_random_pd(rng, dim, cond_cap)
    K = complex_gaussian(rng, (dim, dim))
    K = K / np.linalg.norm(K, ord=2)
    X = sqrtm(A) @ K @ sqrtm(B)
    return A, B, X


def gen_ball_vector(rng: np.random.Generator, dim: int = 3,
                    rmax: float = 0.95) -> np.ndarray:
    """Vector strictly inside the unit ball: uniform direction, radius <= rmax."""
    v = rng.standard_normal(dim)
    v /= np.linalg.norm(v)
    return v * rng.uniform(0.0, rmax)


def gen_density(rng: np.random.Generator, dim: int,
                spread: float = 2.0) -> np.ndarray:
    """Random invertible density matrix with log-uniform spectrum."""
    A = gen_spread_pd(rng, dim, spread)
    return A / np.trace(A).real
