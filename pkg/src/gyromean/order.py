"""Executable checkers for the Loewner-order theorems.

Each case evaluates a premise and, when it holds, asserts the conclusion at a
small negative eigenvalue slack (chained matrix functions amplify rounding,
so conclusions use the looser ``loewner_tol`` rather than equality
tolerance).  The result records both truth values and the worst margin, so a
randomized campaign can distinguish "premise never sampled" from "conclusion
violated".
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatch, NonPositiveEntry, UnknownCase
from .kernel import (
    DEFAULT_TOL,
    TolerancePolicy,
    as_matrix,
    hermitian_part,
    invm,
    logm,
    min_eig,
    powm,
    require_hermitian,
    require_same_dim,
    sqrtm,
)
from .means import geo_mean, spectral_mean
from .metrics import distance

INEQUALITY_CASES = (
    "loewner_heinz",
    "furuta",
    "ando_hiai",
    "main_spectral_AH",
    "power_chain",
    "equivalence_five",
    "contraction",
    "bounds_spectral",
    "log_sum_condition",
    "d_le_delta",
    "logmaj_mean",
)


@dataclass
class CheckResult:
    """Outcome of a single inequality check.

    ``margin`` is the most negative eigenvalue slack across the orderings the
    case asserts (a scalar gap for the scalar cases); when the premise holds,
    a margin below -loewner_tol is an implementation bug, not a data state.
    """

    case: str
    premise_held: bool
    conclusion_held: bool
    margin: float
    witness: str = ""


def _gap(X, Y) -> float:
    """Eigenvalue slack of X <= Y: min-eig(Y - X)."""
    return min_eig(hermitian_part(as_matrix(Y) - as_matrix(X)))


def _combine(case, premise, gaps, slack, witness=""):
    margin = min(gaps) if gaps else 0.0
    conclusion = (margin >= -slack) if premise else True
    return CheckResult(case, premise, premise and conclusion and margin >= -slack,
                       margin, witness)


def check_loewner_heinz(A, B, C, tol: TolerancePolicy = DEFAULT_TOL) -> CheckResult:
    """C^2 <= A <= B implies C <= A^{1/2} <= B^{1/2} (C Hermitian, A, B PD)."""
    Am, Bm = as_matrix(A), as_matrix(B)
    Cm = require_hermitian(C, tol.hermiticity_tol)
    require_same_dim(Am, Bm, Cm)
    slack = tol.loewner_tol
    premise = (_gap(Cm @ Cm, Am) >= -slack) and (_gap(Am, Bm) >= -slack)
    gaps = [_gap(Cm, sqrtm(Am, tol)), _gap(sqrtm(Am, tol), sqrtm(Bm, tol))]
    return _combine("loewner_heinz", premise, gaps, slack)


def check_furuta(A, B, p: float, tol: TolerancePolicy = DEFAULT_TOL) -> CheckResult:
    """0 <= B <= A implies A^p # B^{-p} >= I for any p > 0."""
    Am, Bm = as_matrix(A), as_matrix(B)
    require_same_dim(Am, Bm)
    slack = tol.loewner_tol
    premise = _gap(Bm, Am) >= -slack and p > 0
    G = geo_mean(powm(Am, p, tol), powm(Bm, -p, tol), 0.5, tol)
    gaps = [_gap(np.eye(Am.shape[0]), G)]
    return _combine("furuta", premise, gaps, slack, witness=f"p={p}")


def check_ando_hiai(A, B, p: float, tol: TolerancePolicy = DEFAULT_TOL) -> CheckResult:
    """A # B <= I implies A^p # B^p <= I for p >= 1."""
    Am, Bm = as_matrix(A), as_matrix(B)
    require_same_dim(Am, Bm)
    slack = tol.loewner_tol
    eye = np.eye(Am.shape[0])
    premise = _gap(geo_mean(Am, Bm, 0.5, tol), eye) >= -slack and p >= 1
    G = geo_mean(powm(Am, p, tol), powm(Bm, p, tol), 0.5, tol)
    return _combine("ando_hiai", premise, [_gap(G, eye)], slack, witness=f"p={p}")


def check_main_spectral_AH(A, B, t: float, p: float,
                           tol: TolerancePolicy = DEFAULT_TOL) -> CheckResult:
    """A^{-1} natural_t B <= A^{-1} implies A^p # B^p <= I for p >= 1."""
    Am, Bm = as_matrix(A), as_matrix(B)
    require_same_dim(Am, Bm)
    slack = tol.loewner_tol
    Ainv = invm(Am, tol)
    premise = (_gap(spectral_mean(Ainv, Bm, t, tol), Ainv) >= -slack
               and 0 < t <= 1 and p >= 1)
    eye = np.eye(Am.shape[0])
    G = geo_mean(powm(Am, p, tol), powm(Bm, p, tol), 0.5, tol)
    return _combine("main_spectral_AH", premise, [_gap(G, eye)], slack,
                    witness=f"t={t}, p={p}")


def check_power_chain(A, B, p: float, tol: TolerancePolicy = DEFAULT_TOL) -> CheckResult:
    """A # B <= I implies A^{p+1} # (A #_{p/2} B) <= A for p > 0.

    At p = 2 the conclusion reads A^3 # B <= A, which is also asserted
    directly on the same inputs.
    """
    Am, Bm = as_matrix(A), as_matrix(B)
    require_same_dim(Am, Bm)
    slack = tol.loewner_tol
    eye = np.eye(Am.shape[0])
    premise = _gap(geo_mean(Am, Bm, 0.5, tol), eye) >= -slack and p > 0
    G = geo_mean(powm(Am, p + 1.0, tol), geo_mean(Am, Bm, p / 2.0, tol), 0.5, tol)
    gaps = [_gap(G, Am)]
    if p == 2:
        gaps.append(_gap(geo_mean(powm(Am, 3.0, tol), Bm, 0.5, tol), Am))
    return _combine("power_chain", premise, gaps, slack, witness=f"p={p}")


def check_equivalence_five(A, B, tol: TolerancePolicy = DEFAULT_TOL) -> CheckResult:
    """The five order statements must share one truth value on every input."""
    flags = equivalence_statements(A, B, tol)
    consistent = len(set(flags)) == 1
    return CheckResult("equivalence_five", True, consistent, 0.0,
                       witness=f"statements={flags}")


def check_contraction(S, X, tol: TolerancePolicy = DEFAULT_TOL) -> CheckResult:
    """S X S <= X (S Hermitian, X PD) implies S <= I."""
    Sm = require_hermitian(S, tol.hermiticity_tol)
    Xm = as_matrix(X)
    require_same_dim(Sm, Xm)
    slack = tol.loewner_tol
    premise = _gap(hermitian_part(Sm @ Xm @ Sm), Xm) >= -slack
    return _combine("contraction", premise, [_gap(Sm, np.eye(Sm.shape[0]))], slack)


def check_bounds_spectral(A, B, t: float,
                          tol: TolerancePolicy = DEFAULT_TOL) -> CheckResult:
    """Two-sided bound on the weighted spectral mean.

    Lower: 2^{1+t}(A + B^{-1})^{-t} - A^{-1} <= A natural_t B.  The upper
    bound is asserted in its inverse-free form
    2^{1+t}(A^{-1} + B)^{-t} - A <= (A natural_t B)^{-1}, which is the same
    statement whenever the left side is positive definite (then the familiar
    A natural_t B <= [...]^{-1} is also checked directly); for indefinite
    left sides the inverted form is not an ordering and only the inverse-free
    form is meaningful.
    """
    Am, Bm = as_matrix(A), as_matrix(B)
    require_same_dim(Am, Bm)
    slack = tol.loewner_tol
    S = spectral_mean(Am, Bm, t, tol)
    scale = 2.0 ** (1.0 + t)
    lower = scale * powm(Am + invm(Bm, tol), -t, tol) - invm(Am, tol)
    dual = scale * powm(invm(Am, tol) + Bm, -t, tol) - Am
    gaps = [_gap(lower, S), _gap(dual, invm(S, tol))]
    if min_eig(dual, tol) > tol.pd_tol:
        gaps.append(_gap(S, invm(dual, tol)))
    return _combine("bounds_spectral", True, gaps, slack, witness=f"t={t}")


def check_log_sum_condition(A, B, tol: TolerancePolicy = DEFAULT_TOL) -> CheckResult:
    """log A + log B <= 0 implies A # B <= I."""
    Am, Bm = as_matrix(A), as_matrix(B)
    require_same_dim(Am, Bm)
    slack = tol.loewner_tol
    n = Am.shape[0]
    premise = _gap(logm(Am, tol) + logm(Bm, tol), np.zeros((n, n))) >= -slack
    gap = _gap(geo_mean(Am, Bm, 0.5, tol), np.eye(n))
    return _combine("log_sum_condition", premise, [gap], slack)


def check_d_le_delta(A, B, tol: TolerancePolicy = DEFAULT_TOL) -> CheckResult:
    """Frobenius semi-metric never exceeds the Riemannian trace metric."""
    d = distance("semimetric_frob", A, B, tol)
    delta = distance("riemannian", A, B, tol)
    margin = delta - d
    return CheckResult("d_le_delta", True, margin >= -tol.loewner_tol, margin,
                       witness=f"d={d:.6g}, delta={delta:.6g}")


def check_logmaj_mean(A, B, t: float,
                      tol: TolerancePolicy = DEFAULT_TOL) -> CheckResult:
    """Eigenvalues of A #_t B are log-majorized by those of A^{1-t} B^t."""
    Am, Bm = as_matrix(A), as_matrix(B)
    require_same_dim(Am, Bm)
    x = np.linalg.eigvalsh(geo_mean(Am, Bm, t, tol))[::-1]
    # A^{1-t} B^t has the eigenvalues of the Hermitian form B^{t/2} A^{1-t} B^{t/2}
    half = powm(Bm, t / 2.0, tol)
    y = np.linalg.eigvalsh(hermitian_part(half @ powm(Am, 1.0 - t, tol) @ half))[::-1]
    lx, ly = np.log(x), np.log(y)
    prefix_gaps = np.cumsum(ly) - np.cumsum(lx)
    margin = float(prefix_gaps.min())
    totals_equal = abs(prefix_gaps[-1]) <= tol.loewner_tol
    held = margin >= -tol.loewner_tol and totals_equal
    return CheckResult("logmaj_mean", True, held, margin,
                       witness=f"t={t}, det-gap={prefix_gaps[-1]:.3e}")


_DISPATCH = {
    "loewner_heinz": check_loewner_heinz,
    "furuta": check_furuta,
    "ando_hiai": check_ando_hiai,
    "main_spectral_AH": check_main_spectral_AH,
    "power_chain": check_power_chain,
    "equivalence_five": check_equivalence_five,
    "contraction": check_contraction,
    "bounds_spectral": check_bounds_spectral,
    "log_sum_condition": check_log_sum_condition,
    "d_le_delta": check_d_le_delta,
    "logmaj_mean": check_logmaj_mean,
}


def check(case: str, *args, tol: TolerancePolicy = DEFAULT_TOL, **kwargs) -> CheckResult:
    """Run one inequality case on case-specific inputs."""
    try:
        fn = _DISPATCH[case]
    except KeyError:
        raise UnknownCase(f"unknown inequality case {case!r}") from None
    return fn(*args, tol=tol, **kwargs)


def equivalence_statements(A, B, tol: TolerancePolicy = DEFAULT_TOL) -> tuple:
    """Truth values of the five equivalent order statements.

    (1) A^{-1} natural B <= I, (2) A natural B^{-1} >= I, (3) A # B <= A,
    (4) A # B >= B, (5) B <= A -- all evaluated independently at loewner_tol.
    """
    Am, Bm = as_matrix(A), as_matrix(B)
    require_same_dim(Am, Bm)
    slack = tol.loewner_tol
    eye = np.eye(Am.shape[0])
    Ainv, Binv = invm(Am, tol), invm(Bm, tol)
    sharp = geo_mean(Am, Bm, 0.5, tol)
    return (
        _gap(spectral_mean(Ainv, Bm, 0.5, tol), eye) >= -slack,
        _gap(eye, spectral_mean(Am, Binv, 0.5, tol)) >= -slack,
        _gap(sharp, Am) >= -slack,
        _gap(Bm, sharp) >= -slack,
        _gap(Bm, Am) >= -slack,
    )


def weak_majorize(x, y, log_scale: bool = False,
                  tol: float = DEFAULT_TOL.loewner_tol) -> tuple[bool, bool]:
    """Prefix-dominance of descending vectors, with a totals-equal flag.

    Linear scale compares prefix sums; log scale compares prefix products
    (via log sums) and requires strictly positive entries.  Returns
    (dominates, totals_equal); both true together means majorization proper.
    """
    xv = np.asarray(x, dtype=float)
    yv = np.asarray(y, dtype=float)
    if xv.shape != yv.shape or xv.ndim != 1:
        raise LengthMismatch(f"shapes {xv.shape} and {yv.shape} differ")
    for v in (xv, yv):
        if np.any(np.diff(v) > tol):
            raise ValueError("vectors must be sorted in descending order")
    if log_scale:
        if np.any(xv <= 0) or np.any(yv <= 0):
            raise NonPositiveEntry("log-scale majorization needs positive entries")
        xv, yv = np.log(xv), np.log(yv)
    gaps = np.cumsum(yv) - np.cumsum(xv)
    dominates = bool(gaps.min() >= -tol)
    scale = max(1.0, float(np.abs(np.cumsum(yv)).max()))
    totals_equal = bool(abs(gaps[-1]) <= tol * scale)
    return dominates, totals_equal
