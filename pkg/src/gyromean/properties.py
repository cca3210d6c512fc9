"""The randomized property campaign.

Every runner draws its inputs from per-(property, trial) substreams, records
the worst violation it sees, and leaves pass/fail policy to the registry.
Matrix-dimension coverage: properties cycle through ``config.dims`` across
trials, except the defining-equation residual properties, which run the full
trial count at every dimension.
"""

from __future__ import annotations

import numpy as np

from . import ball as bl
from . import closedform2x2 as cf
from . import gyrocone as gc
from . import gyrodensity as gd
from .fixtures import contraction_converse_witness, triangle_measurements
from .gyroaxioms import run_axiom_suite
from .kernel import (
    hermitian_part,
    invm,
    logm,
    min_eig,
    powm,
    sqrtm,
)
from .means import (
    block_psd_margin,
    geo_mean,
    karcher_residual,
    mean,
    mean_left_inverse,
    riccati_residual,
    spectral_defining_residual,
    spectral_mean,
)
from .metrics import distance, midpoint_deviation, sup_ratio
from .order import (
    check_ando_hiai,
    check_bounds_spectral,
    check_contraction,
    check_d_le_delta,
    check_equivalence_five,
    check_furuta,
    check_loewner_heinz,
    check_log_sum_condition,
    check_logmaj_mean,
    check_main_spectral_AH,
    check_power_chain,
    equivalence_statements,
    weak_majorize,
)
from .randgen import (
    complex_gaussian,
    gen_ball_vector,
    gen_commuting_pair,
    gen_contraction_for,
    gen_density,
    gen_dominated_pair,
    gen_log_sum_pair,
    gen_psd_block_triple,
    gen_random_hermitian,
    gen_random_pd,
    gen_random_unitary,
    gen_sharp_contracted_pair,
    gen_spectral_premise_pair,
    gen_spread_pd,
    substream,
)
from .registry import prop


def _cycle(seq, i):
    return seq[i % len(seq)]


def _relerr(X, Y) -> float:
    X, Y = np.asarray(X), np.asarray(Y)
    return float(np.linalg.norm(X - Y) / max(1.0, np.linalg.norm(Y)))


def _flag(ok: bool, threshold: float) -> float:
    """Boolean sub-check encoded as a violation value."""
    return 0.0 if ok else 2.0 * threshold


def _pd_pair(config, pid, i, dim=None, unit_det=False):
    rng = substream(config.seed, pid, i)
    d = dim if dim is not None else _cycle(config.dims, i)
    A = gen_random_pd(rng, d, config.cond_cap, unit_det)
    B = gen_random_pd(rng, d, config.cond_cap, unit_det)
    return rng, d, A, B


# --------------------------------------------------------------------------
# weighted geometric mean
# --------------------------------------------------------------------------

@prop("geodesic-curve-identities", "geodesic-curve")
def _geo_identities(config):
    pid, thr = "geodesic-curve-identities", 1e-9
    worst = 0.0
    for i in range(config.trials):
        rng, d, A, B = _pd_pair(config, pid, i)
        t = _cycle(config.t_grid, i)
        worst = max(worst, _relerr(geo_mean(A, B, 0.0), A))
        worst = max(worst, _relerr(geo_mean(A, B, 1.0), B))
        G = geo_mean(A, B, t)
        worst = max(worst, _flag(min_eig(G) > 0, thr))
        worst = max(worst, _relerr(G, geo_mean(B, A, 1.0 - t)))
        a, b = rng.uniform(0.2, 3.0, 2)
        worst = max(worst, _relerr(geo_mean(a * A, b * B, t),
                                   a ** (1 - t) * b ** t * G))
        U = gen_random_unitary(rng, d)
        worst = max(worst, _relerr(geo_mean(U.conj().T @ A @ U, U.conj().T @ B @ U, t),
                                   U.conj().T @ G @ U))
        Ac, Bc = gen_commuting_pair(rng, d)
        worst = max(worst, _relerr(geo_mean(Ac, Bc, t),
                                   powm(Ac, 1 - t) @ powm(Bc, t)))
    return config.trials, config.trials, worst, thr, ""


@prop("riccati-residual", "riccati-equation")
def _riccati(config):
    pid, thr = "riccati-residual", 1e-9
    worst, n = 0.0, 0
    for d in config.dims:
        for i in range(config.trials):
            _, _, A, B = _pd_pair(config, pid, i, dim=d)
            X = geo_mean(A, B, 0.5)
            worst = max(worst, riccati_residual(A, B, X)
                        / max(1.0, float(np.linalg.norm(B))))
            n += 1
    return n, n, worst, thr, "relative Frobenius residual"


@prop("karcher-residual", "karcher-equation")
def _karcher(config):
    pid, thr = "karcher-residual", 1e-9
    worst = 0.0
    grid = [t for t in config.t_grid if 0.0 <= t <= 1.0]
    for i in range(config.trials):
        _, _, A, B = _pd_pair(config, pid, i)
        t = _cycle(grid, i)
        worst = max(worst, karcher_residual(A, B, t, geo_mean(A, B, t)))
    return config.trials, config.trials, worst, thr, ""


@prop("block-psd-maximality", "geometric-mean-block-characterization")
def _block_max(config):
    pid, thr = "block-psd-maximality", 1e-9
    worst = _flag(block_psd_margin(np.eye(2), np.eye(2), 2 * np.eye(2)) < 0, thr)
    for i in range(config.trials):
        _, _, A, B = _pd_pair(config, pid, i)
        margin = block_psd_margin(A, B, geo_mean(A, B, 0.5))
        worst = max(worst, max(0.0, -margin))
        # strictly inflating the maximizer must leave the block cone
        worst = max(worst, _flag(
            block_psd_margin(A, B, 1.01 * geo_mean(A, B, 0.5)) < 0, thr))
    return config.trials, config.trials, worst, thr, ""


@prop("mean-bijection-roundtrip", "mean-bijection")
def _bijection(config):
    # C is produced forward from a moderate X, so the 1/t-power inversion
    # stays inside the well-conditioned regime for every grid value of t
    pid, thr = "mean-bijection-roundtrip", 1e-8
    worst = 0.0
    grid = [t for t in config.t_grid if t > 0]
    for i in range(config.trials):
        _, _, A, X = _pd_pair(config, pid, i)
        t = _cycle(grid, i)
        for kind in ("metric", "spectral"):
            C = mean(kind, A, X, t)
            recovered = mean_left_inverse(kind, A, C, t)
            worst = max(worst, _relerr(recovered, X))
            worst = max(worst, _relerr(mean(kind, A, recovered, t), C))
    return config.trials, config.trials, worst, thr, ""


# --------------------------------------------------------------------------
# weighted spectral mean
# --------------------------------------------------------------------------

@prop("spectral-curve-identities", "spectral-curve")
def _spectral_identities(config):
    pid, thr = "spectral-curve-identities", 1e-9
    worst = 0.0
    for i in range(config.trials):
        rng, d, A, B = _pd_pair(config, pid, i)
        t = _cycle(config.t_grid, i)
        worst = max(worst, _relerr(spectral_mean(A, B, 0.0), A))
        worst = max(worst, _relerr(spectral_mean(A, B, 1.0), B))
        S = spectral_mean(A, B, t)
        worst = max(worst, _flag(min_eig(S) > 0, thr))
        Ac, Bc = gen_commuting_pair(rng, d)
        worst = max(worst, _relerr(spectral_mean(Ac, Bc, t),
                                   powm(Ac, 1 - t) @ powm(Bc, t)))
        # eigenvalues of the t=1/2 mean are the square roots of those of A B
        ev = np.linalg.eigvalsh(spectral_mean(A, B, 0.5))
        ev_ab = np.sqrt(np.sort(np.linalg.eigvals(A @ B).real))
        worst = max(worst, float(np.max(np.abs(ev - ev_ab)))
                    / max(1.0, float(ev_ab[-1])))
    # the two means genuinely differ away from commutativity
    A = np.diag([4.0, 1.0]).astype(complex)
    B = np.array([[2.0, 1.0], [1.0, 2.0]], dtype=complex)
    differ = np.linalg.norm(geo_mean(A, B, 0.5) - spectral_mean(A, B, 0.5)) > 1e-3
    worst = max(worst, _flag(differ, thr))
    return config.trials, config.trials, worst, thr, ""


@prop("spectral-defining-residual", "spectral-defining-equation")
def _spectral_defining(config):
    pid, thr = "spectral-defining-residual", 1e-9
    worst, n = 0.0, 0
    for d in config.dims:
        for i in range(config.trials):
            _, _, A, B = _pd_pair(config, pid, i, dim=d)
            t = _cycle((0.25, 0.5, 0.75), i)
            X = spectral_mean(A, B, t)
            worst = max(worst, spectral_defining_residual(A, B, t, X))
            n += 1
    return n, n, worst, thr, ""


@prop("spectral-mean-algebra", "spectral-mean-algebra")
def _spectral_algebra(config):
    pid, thr = "spectral-mean-algebra", 1e-9
    worst = 0.0
    for i in range(config.trials):
        rng, d, A, B = _pd_pair(config, pid, i)
        t = _cycle(config.t_grid, i)
        S = spectral_mean(A, B, t)
        a, b = rng.uniform(0.2, 3.0, 2)
        worst = max(worst, _relerr(spectral_mean(a * A, b * B, t),
                                   a ** (1 - t) * b ** t * S))
        U = gen_random_unitary(rng, d)
        worst = max(worst, _relerr(
            spectral_mean(U.conj().T @ A @ U, U.conj().T @ B @ U, t),
            U.conj().T @ S @ U))
        worst = max(worst, _relerr(spectral_mean(B, A, 1.0 - t), S))
        worst = max(worst, _relerr(spectral_mean(invm(A), invm(B), t), invm(S)))
        s, tt, u = rng.uniform(0.0, 1.0, 3)
        worst = max(worst, _relerr(
            spectral_mean(spectral_mean(A, B, s), spectral_mean(A, B, u), tt),
            spectral_mean(A, B, (1 - tt) * s + tt * u)))
    return config.trials, config.trials, worst, thr, ""


@prop("spectral-mean-bounds", "spectral-mean-bounds")
def _spectral_bounds(config):
    pid, thr = "spectral-mean-bounds", 1e-8
    worst = 0.0
    for i in range(config.trials):
        _, _, A, B = _pd_pair(config, pid, i)
        t = _cycle((0.25, 0.5, 0.75), i)
        res = check_bounds_spectral(A, B, t, tol=config.tolerances)
        worst = max(worst, max(0.0, -res.margin))
    return config.trials, config.trials, worst, thr, ""


# --------------------------------------------------------------------------
# semi-metric
# --------------------------------------------------------------------------

@prop("semimetric-axioms", "semimetric-axioms")
def _semimetric_axioms(config):
    pid, thr = "semimetric-axioms", 1e-8
    worst = 0.0
    for i in range(config.trials):
        rng, d, A, B = _pd_pair(config, pid, i)
        dv = distance("semimetric_op", A, B)
        worst = max(worst, _flag(dv >= 0, thr))
        worst = max(worst, abs(dv - distance("semimetric_op", B, A)))
        worst = max(worst, distance("semimetric_op", A, A.copy()))
        # identity of indiscernibles, probed at an adversarial near-equal pair
        H = gen_random_hermitian(rng, d)
        B2 = A + 1e-6 * H / np.linalg.norm(H)
        worst = max(worst, _flag(distance("semimetric_op", A, B2) > 1e-10, thr))
    return config.trials, config.trials, worst, thr, ""


@prop("semimetric-invariance", "semimetric-invariance")
def _semimetric_invariance(config):
    pid, thr = "semimetric-invariance", 1e-8
    worst = 0.0
    for i in range(config.trials):
        rng, d, A, B = _pd_pair(config, pid, i)
        dv = distance("semimetric_op", A, B)
        alpha = float(rng.uniform(0.2, 5.0))
        worst = max(worst, abs(distance("semimetric_op", alpha * A, alpha * B) - dv))
        worst = max(worst, abs(distance("semimetric_op", invm(A), invm(B)) - dv))
        U = gen_random_unitary(rng, d)
        worst = max(worst, abs(
            distance("semimetric_op", U @ A @ U.conj().T, U @ B @ U.conj().T) - dv))
        # power scaling holds on commuting pairs
        Ac, Bc = gen_commuting_pair(rng, d)
        t = float(rng.uniform(-2.0, 2.0))
        worst = max(worst, abs(distance("semimetric_op", powm(Ac, t), powm(Bc, t))
                               - abs(t) * distance("semimetric_op", Ac, Bc)))
    return config.trials, config.trials, worst, thr, ""


@prop("spectral-midpoint", "spectral-midpoint")
def _spectral_midpoint(config):
    pid, thr = "spectral-midpoint", 1e-8
    worst = 0.0
    for i in range(config.trials):
        _, _, A, B = _pd_pair(config, pid, i)
        M = spectral_mean(A, B, 0.5)
        worst = max(worst, *midpoint_deviation("semimetric_op", A, B, M))
        t = _cycle(config.t_grid, i)
        dv = distance("semimetric_op", A, B)
        St = spectral_mean(A, B, t)
        worst = max(worst, abs(distance("semimetric_op", A, St) - t * dv))
        worst = max(worst, abs(distance("semimetric_op", B, St) - (1 - t) * dv))
    return config.trials, config.trials, worst, thr, ""


@prop("riemannian-geodesic-midpoint", "geodesic-curve")
def _riemannian_midpoint(config):
    pid, thr = "riemannian-geodesic-midpoint", 1e-8
    worst = 0.0
    for i in range(config.trials):
        _, _, A, B = _pd_pair(config, pid, i)
        worst = max(worst, *midpoint_deviation(
            "riemannian", A, B, geo_mean(A, B, 0.5)))
    return config.trials, config.trials, worst, thr, ""


@prop("triangle-counterexample", "triangle-counterexample")
def _triangle(config):
    thr = 1e-5
    m = triangle_measurements(config.tolerances)
    worst = _flag(m["matched_variant"] is not None, thr)
    if m["matched_variant"] is not None:
        worst = max(worst, m["matched_error"])
    for kind in ("semimetric_op", "semimetric_frob"):
        worst = max(worst, _flag(m["variants"][kind]["triangle_gap"] > 0, thr))
    note = (f"matched {m['matched_variant']} at scale {m['matched_scale']}; "
            f"triangle gap (op) {m['variants']['semimetric_op']['triangle_gap']:.6f}")
    return 1, 1, worst, thr, note


@prop("semimetric-geodesic-question", "spectral-midpoint", asserted=False)
def _geodesic_question(config):
    pid = "semimetric-geodesic-question"
    devs = []
    for i in range(config.trials):
        rng, _, A, B = _pd_pair(config, pid, i)
        s, t = rng.uniform(0.0, 1.0, 2)
        lhs = distance("semimetric_op", spectral_mean(A, B, s),
                       spectral_mean(A, B, t))
        devs.append(abs(lhs - abs(s - t) * distance("semimetric_op", A, B)))
    devs = np.array(devs)
    note = (f"|d(Ns,Nt) - |s-t| d| over samples: max {devs.max():.3e}, "
            f"mean {devs.mean():.3e} (open question; recorded, not asserted)")
    return config.trials, config.trials, float(devs.max()), np.inf, note


@prop("thompson-sup-ratio", "thompson-metric")
def _thompson(config):
    pid, thr = "thompson-sup-ratio", 1e-10
    worst = 0.0
    for i in range(config.trials):
        _, _, A, B = _pd_pair(config, pid, i)
        dt = distance("thompson", A, B)
        m = max(np.log(sup_ratio(A, B)), np.log(sup_ratio(B, A)))
        worst = max(worst, abs(dt - m) / max(1.0, dt))
        worst = max(worst, abs(sup_ratio(A, A) - 1.0))
    return config.trials, config.trials, worst, thr, ""


# --------------------------------------------------------------------------
# order inequalities
# --------------------------------------------------------------------------

def _battery_cap(config) -> float:
    # p-th powers raise conditioning to kappa**p; keep kappa**5 inside the
    # window where the 1e-8 eigenvalue slack is trustworthy
    return min(config.cond_cap, 80.0)


def _premise_battery(config, pid, make_inputs, run_check):
    worst, held = 0.0, 0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        d = _cycle(config.dims, i)
        res = run_check(*make_inputs(rng, d, i))
        if res.premise_held:
            held += 1
            worst = max(worst, max(0.0, -res.margin))
    return config.trials, held, worst


@prop("loewner-heinz", "loewner-heinz", min_premise=50)
def _loewner_heinz(config):
    pid, thr = "loewner-heinz", 1e-8
    tol = config.tolerances
    worst, held = 0.0, 0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        d = _cycle(config.dims, i)
        A = gen_random_pd(rng, d, _battery_cap(config))
        G = complex_gaussian(rng, (d, d))
        B = A + hermitian_part(G @ G.conj().T)
        H = gen_random_hermitian(rng, d)
        inv_root = powm(A, -0.5)
        lam = np.linalg.eigvalsh(hermitian_part(inv_root @ H @ H @ inv_root))[-1]
        C = (0.99 / np.sqrt(lam)) * H
        res = check_loewner_heinz(A, B, C, tol=tol)
        if res.premise_held:
            held += 1
            worst = max(worst, max(0.0, -res.margin))
            # power monotonicity on the same dominated pair
            s = _cycle([t for t in config.t_grid if 0 < t < 1], i)
            worst = max(worst, max(0.0, -min_eig(powm(B, s) - powm(A, s))))
    return config.trials, held, worst, thr, ""


@prop("congruence-inversion-order", "congruence-inversion-order")
def _congruence_order(config):
    pid, thr = "congruence-inversion-order", 1e-8
    worst = 0.0
    for i in range(config.trials):
        rng, d, X, P = _pd_pair(config, pid, i)
        Y = X + P  # X <= Y by construction
        S = complex_gaussian(rng, (d, d))
        lhs = hermitian_part(S @ X @ S.conj().T)
        rhs = hermitian_part(S @ Y @ S.conj().T)
        worst = max(worst, max(0.0, -min_eig(rhs - lhs)))
        worst = max(worst, max(0.0, -min_eig(lhs)))
        worst = max(worst, max(0.0, -min_eig(invm(X) - invm(Y))))
    return config.trials, config.trials, worst, thr, ""


@prop("furuta", "furuta", min_premise=50)
def _furuta(config):
    pid, thr = "furuta", 1e-8
    def inputs(rng, d, i):
        A, B = gen_dominated_pair(rng, d)
        return A, B, _cycle(config.p_grid, i)
    n, held, worst = _premise_battery(
        config, pid, inputs, lambda A, B, p: check_furuta(A, B, p, tol=config.tolerances))
    return n, held, worst, thr, ""


@prop("ando-hiai", "ando-hiai", min_premise=50)
def _ando_hiai(config):
    pid, thr = "ando-hiai", 1e-8
    grid = [p for p in config.p_grid if p >= 1]
    def inputs(rng, d, i):
        A, B = gen_sharp_contracted_pair(rng, d)
        return A, B, _cycle(grid, i)
    n, held, worst = _premise_battery(
        config, pid, inputs,
        lambda A, B, p: check_ando_hiai(A, B, p, tol=config.tolerances))
    return n, held, worst, thr, ""


@prop("spectral-ando-hiai", "spectral-ando-hiai", min_premise=50)
def _spectral_ando_hiai(config):
    pid, thr = "spectral-ando-hiai", 1e-8
    grid_p = [p for p in config.p_grid if p >= 1]
    grid_t = [t for t in config.t_grid if 0 < t <= 1]
    def inputs(rng, d, i):
        t = _cycle(grid_t, i)
        A, B = gen_spectral_premise_pair(rng, d, t)
        return A, B, t, _cycle(grid_p, i)
    n, held, worst = _premise_battery(
        config, pid, inputs,
        lambda A, B, t, p: check_main_spectral_AH(A, B, t, p, tol=config.tolerances))
    return n, held, worst, thr, ""


@prop("power-chain", "power-chain", min_premise=50)
def _power_chain(config):
    pid, thr = "power-chain", 1e-8
    grid = [p for p in config.p_grid if p > 0]
    def inputs(rng, d, i):
        A, B = gen_sharp_contracted_pair(rng, d)
        # keep p = 2 in rotation so the displayed special case is exercised
        p = 2.0 if i % 3 == 0 else _cycle(grid, i)
        return A, B, p
    n, held, worst = _premise_battery(
        config, pid, inputs,
        lambda A, B, p: check_power_chain(A, B, p, tol=config.tolerances))
    return n, held, worst, thr, ""


@prop("five-way-equivalence", "five-way-equivalence", min_premise=50)
def _equivalence(config):
    # consistency must hold on generic pairs (usually all-false) and on
    # dominated pairs (all-true); the latter are counted as premise-held
    pid, thr = "five-way-equivalence", 1e-8
    worst, held = 0.0, 0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        d = _cycle(config.dims, i)
        A, B = gen_dominated_pair(rng, d)
        res = check_equivalence_five(A, B, tol=config.tolerances)
        worst = max(worst, _flag(res.conclusion_held, thr))
        if all(equivalence_statements(A, B, config.tolerances)):
            held += 1
        A = gen_random_pd(rng, d, config.cond_cap)
        B = gen_random_pd(rng, d, config.cond_cap)
        res = check_equivalence_five(A, B, tol=config.tolerances)
        worst = max(worst, _flag(res.conclusion_held, thr))
    return config.trials, held, worst, thr, "premise-held counts all-true samples"


@prop("contraction-lemma", "contraction-lemma", min_premise=50)
def _contraction(config):
    pid, thr = "contraction-lemma", 1e-8
    worst, held = 0.0, 0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        d = _cycle(config.dims, i)
        X = gen_random_pd(rng, d, config.cond_cap)
        S = gen_contraction_for(rng, X, hermitian_only=True)
        res = check_contraction(S, X, tol=config.tolerances)
        if res.premise_held:
            held += 1
            worst = max(worst, max(0.0, -res.margin))
    witness = contraction_converse_witness(config.tolerances)
    worst = max(worst, _flag(witness["converse_fails"], thr))
    return config.trials, held, worst, thr, f"converse witness: {witness['sxs_vs_x']}"


@prop("sufficient-conditions", "sufficient-conditions", min_premise=50)
def _sufficient_conditions(config):
    pid, thr = "sufficient-conditions", 1e-8
    tol = config.tolerances
    worst, held = 0.0, 0
    co_counts = {"cond1": 0, "cond2": 0}
    grid_t = [t for t in config.t_grid if 0 < t <= 1]
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        d = _cycle(config.dims, i)
        # (contractive inputs) implies (log-sum condition)
        A = gen_random_pd(rng, d, config.cond_cap)
        B = gen_random_pd(rng, d, config.cond_cap)
        A1 = 0.99 * A / np.linalg.eigvalsh(A)[-1]
        B1 = 0.99 * B / np.linalg.eigvalsh(B)[-1]
        worst = max(worst, max(0.0, np.linalg.eigvalsh(logm(A1) + logm(B1))[-1]))
        # (log-sum condition) implies the contracted geometric mean
        res = check_log_sum_condition(*gen_log_sum_pair(rng, d),
                                      tol=config.tolerances)
        if res.premise_held:
            held += 1
            worst = max(worst, max(0.0, -res.margin))
        # co-occurrence of the spectral condition with the other two
        t = _cycle(grid_t, i)
        As, Bs = gen_spectral_premise_pair(rng, d, t)
        if np.linalg.eigvalsh(logm(As) + logm(Bs))[-1] <= tol.loewner_tol:
            co_counts["cond2"] += 1
        if (np.linalg.eigvalsh(As)[-1] <= 1 + tol.loewner_tol
                and np.linalg.eigvalsh(Bs)[-1] <= 1 + tol.loewner_tol):
            co_counts["cond1"] += 1
    note = (f"spectral-condition samples also satisfying: contractive {co_counts['cond1']}, "
            f"log-sum {co_counts['cond2']} of {config.trials} (recorded only)")
    return config.trials, held, worst, thr, note


@prop("spectral-bounds-premise-free", "spectral-mean-bounds")
def _bounds_fixture(config):
    # scalar sanity fixtures for the two-sided bound, including the
    # indefinite-bracket regime where only the inverse-free form applies
    thr = 1e-10
    worst = 0.0
    for a, b, t in ((4.0, 1.0, 0.5), (1.0, 1.0, 0.3), (0.25, 9.0, 0.75)):
        A = np.array([[a]], dtype=complex)
        B = np.array([[b]], dtype=complex)
        res = check_bounds_spectral(A, B, t)
        worst = max(worst, max(0.0, -res.margin))
    return 3, 3, worst, thr, ""


@prop("d-le-delta", "semimetric-riemannian-bound")
def _d_le_delta(config):
    pid, thr = "d-le-delta", 1e-9
    worst = 0.0
    for i in range(config.trials):
        rng, d, A, B = _pd_pair(config, pid, i)
        res = check_d_le_delta(A, B, tol=config.tolerances)
        worst = max(worst, max(0.0, -res.margin))
        Ac, Bc = gen_commuting_pair(rng, d)
        worst = max(worst, abs(distance("semimetric_frob", Ac, Bc)
                               - distance("riemannian", Ac, Bc)))
    return config.trials, config.trials, worst, thr, "equality checked on commuting pairs"


@prop("logmaj-mean", "majorization-definitions")
def _logmaj(config):
    pid, thr = "logmaj-mean", 1e-8
    worst = 0.0
    for i in range(config.trials):
        _, _, A, B = _pd_pair(config, pid, i)
        t = _cycle(config.t_grid, i)
        res = check_logmaj_mean(A, B, t, tol=config.tolerances)
        worst = max(worst, _flag(res.conclusion_held, thr))
        worst = max(worst, max(0.0, -res.margin))
    return config.trials, config.trials, worst, thr, ""


@prop("majorization-prefix-rules", "majorization-definitions")
def _majorization_rules(config):
    pid, thr = "majorization-prefix-rules", 1e-10
    dom, tot = weak_majorize([1.0, 1.0], [2.0, 0.0])
    worst = _flag(dom and tot, thr)
    dom, _ = weak_majorize([3.0, 1.0], [2.0, 2.0])
    worst = max(worst, _flag(not dom, thr))
    for i in range(config.trials):
        rng, d, A, P = _pd_pair(config, pid, i)
        wa = np.linalg.eigvalsh(A)[::-1]
        wb = np.linalg.eigvalsh(A + P)[::-1]
        dom, _ = weak_majorize(wa, wb)
        worst = max(worst, _flag(dom, thr))
        dom_log, _ = weak_majorize(wa, np.exp(1.0) * wa, log_scale=True)
        worst = max(worst, _flag(dom_log, thr))
    return config.trials + 2, config.trials + 2, worst, thr, ""


# --------------------------------------------------------------------------
# gyrogroup structure on the cone
# --------------------------------------------------------------------------

def _cone_triples(config, pid, count=None):
    n = count or config.trials
    triples = []
    for i in range(n):
        rng = substream(config.seed, pid, i)
        d = _cycle(config.dims, i)
        # log-uniform spectra: the axiom identities chain several operations,
        # so sample conditioning is kept well inside the 1e-8 residual budget
        triples.append(tuple(gen_spread_pd(rng, d, 2.0) for _ in range(3)))
    return triples


def _suite_worst(report, names):
    return max(report.residuals[k] for k in names)


_G_AXIOMS = ("G1-left-identity", "G1-right-identity", "G2-left-inverse",
             "G2-right-inverse", "G3-gyroassociativity", "G4-identity-gyration",
             "G5-loop", "gyrocommutativity", "gyration-automorphism")
_V_AXIOMS = ("V1-unit", "V1-zero", "V1-negation", "V2-additive",
             "V3-multiplicative", "V4-gyration-scalar")


@prop("cone-gyrogroup-axioms", "gyrogroup-axioms")
def _cone_axioms_g(config):
    pid, thr = "cone-gyrogroup-axioms", 1e-8
    worst = 0.0
    for d in config.dims:
        triples = [t for t in _cone_triples(config, pid) if t[0].shape[0] == d]
        if triples:
            report = gc.axiom_suite(triples, tol=config.tolerances)
            worst = max(worst, _suite_worst(report, _G_AXIOMS))
    return config.trials, config.trials, worst, thr, ""


@prop("cone-gyrovector-axioms", "gyrovector-axioms")
def _cone_axioms_v(config):
    pid = "cone-gyrogroup-axioms"  # reuse the same sample set
    thr = 1e-8
    worst = 0.0
    for d in config.dims:
        triples = [t for t in _cone_triples(config, pid) if t[0].shape[0] == d]
        if triples:
            report = gc.axiom_suite(triples, tol=config.tolerances)
            worst = max(worst, _suite_worst(report, _V_AXIOMS))
    return config.trials, config.trials, worst, thr, ""


@prop("cone-operations", "cone-gyrovector-space")
def _cone_ops(config):
    pid, thr = "cone-operations", 1e-9
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        d = _cycle(config.dims, i)
        A = gen_random_pd(rng, d, config.cond_cap)
        B = gen_random_pd(rng, d, config.cond_cap)
        eye = np.eye(d)
        worst = max(worst, _relerr(gc.cone_add(eye, B), B))
        worst = max(worst, _relerr(gc.cone_add(A, eye), A))
        worst = max(worst, _relerr(gc.cone_add(A, gc.cone_neg(A)), eye))
        t = float(rng.uniform(-2, 2))
        worst = max(worst, _relerr(gc.cone_scalar(t, A), powm(A, t)))
        Ac, Bc = gen_commuting_pair(rng, d)
        worst = max(worst, _relerr(gc.cone_add(Ac, Bc), Ac @ Bc))
    # witness that the operation is neither commutative nor associative
    A = np.diag([4.0, 1.0]).astype(complex)
    B = np.array([[2.0, 1.0], [1.0, 2.0]], dtype=complex)
    C = np.array([[1.0, 0.5], [0.5, 3.0]], dtype=complex)
    worst = max(worst, _flag(
        np.linalg.norm(gc.cone_add(A, B) - gc.cone_add(B, A)) > 1e-3, thr))
    worst = max(worst, _flag(
        np.linalg.norm(gc.cone_add(A, gc.cone_add(B, C))
                       - gc.cone_add(gc.cone_add(A, B), C)) > 1e-3, thr))
    return config.trials, config.trials, worst, thr, ""


@prop("cone-gyration-unitarity", "cone-gyration")
def _cone_gyration(config):
    pid, thr = "cone-gyration-unitarity", 1e-10
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        d = _cycle(config.dims, i)
        A = gen_random_pd(rng, d, config.cond_cap)
        B = gen_random_pd(rng, d, config.cond_cap)
        U = gc.gyration_unitary(A, B)
        worst = max(worst, float(np.linalg.norm(U @ U.conj().T - np.eye(d))))
        # polar relation A^{1/2} B^{1/2} = (A (+) B)^{1/2} U
        worst = max(worst, _relerr(sqrtm(gc.cone_add(A, B)) @ U,
                                   sqrtm(A) @ sqrtm(B)))
        X = gen_random_pd(rng, d, config.cond_cap)
        worst = max(worst, _flag(min_eig(gc.gyration(A, B, X)) > 0, thr))
        Ac, Bc = gen_commuting_pair(rng, d)
        worst = max(worst, _relerr(gc.gyration(Ac, Bc, X), X))
    return config.trials, config.trials, worst, thr, ""


@prop("gyration-trace-invariance", "gyration-trace-invariance")
def _gyration_trace(config):
    pid, thr = "gyration-trace-invariance", 1e-9
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        d = _cycle(config.dims, i)
        A, B, X, Y = (gen_random_pd(rng, d, config.cond_cap) for _ in range(4))
        gx, gy = gc.gyration(A, B, X), gc.gyration(A, B, Y)
        lhs = complex(np.trace(gx @ gy.conj().T))
        rhs = complex(np.trace(X @ Y.conj().T))
        worst = max(worst, abs(lhs - rhs) / max(1.0, abs(rhs)))
    return config.trials, config.trials, worst, thr, ""


@prop("cooperation-commutativity", "cooperation")
def _cooperation(config):
    pid, thr = "cooperation-commutativity", 1e-9
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        d = _cycle(config.dims, i)
        A = gen_random_pd(rng, d, config.cond_cap)
        B = gen_random_pd(rng, d, config.cond_cap)
        worst = max(worst, _relerr(gc.cooperation(A, B), gc.cooperation(B, A)))
        worst = max(worst, _relerr(gc.cooperation(A, np.eye(d)), A))
        W = geo_mean(invm(A), B, 0.5)
        worst = max(worst, _relerr(gc.cooperation(gc.cone_neg(A), B), W @ W))
    return config.trials, config.trials, worst, thr, ""


@prop("cone-gyrolines", "cone-gyrolines")
def _cone_gyrolines(config):
    pid, thr = "cone-gyrolines", 1e-9
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        d = _cycle(config.dims, i)
        A = gen_random_pd(rng, d, config.cond_cap)
        B = gen_random_pd(rng, d, config.cond_cap)
        t = float(rng.uniform(0.0, 1.0))
        worst = max(worst, _relerr(gc.gyroline(t, A, B), geo_mean(A, B, t)))
        worst = max(worst, _relerr(gc.cogyroline(t, A, B), spectral_mean(A, B, t)))
        worst = max(worst, _relerr(gc.gyroline(0.5, A, B),
                                   gc.cone_scalar(0.5, gc.cooperation(A, B))))
    return config.trials, config.trials, worst, thr, ""


@prop("gyroline-translation", "gyroline-cogyroline-defs")
def _gyroline_translation(config):
    pid, thr = "gyroline-translation", 1e-8
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        d = _cycle(config.dims, i)
        A, B, X = (gen_random_pd(rng, d, config.cond_cap) for _ in range(3))
        t = float(rng.uniform(0.0, 1.0))
        lhs = gc.cone_add(X, gc.gyroline(t, A, B))
        rhs = gc.gyroline(t, gc.cone_add(X, A), gc.cone_add(X, B))
        worst = max(worst, _relerr(lhs, rhs))
    return config.trials, config.trials, worst, thr, ""


# --------------------------------------------------------------------------
# density matrices
# --------------------------------------------------------------------------

@prop("density-gyrovector-space", "density-gyrovector-space")
def _density_axioms(config):
    pid, thr = "density-gyrovector-space", 1e-8
    worst = 0.0
    by_dim = {}
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        d = _cycle(config.dims, i)
        by_dim.setdefault(d, []).append(
            tuple(gen_density(rng, d) for _ in range(3)))
    for d, triples in sorted(by_dim.items()):
        report = run_axiom_suite(gd.density_model(d, config.tolerances), triples)
        worst = max(worst, report.max_residual)
    for i in range(min(config.trials, 50)):
        rng = substream(config.seed, pid + "-elements", i)
        d = _cycle(config.dims, i)
        rho = gen_density(rng, d)
        sigma = gen_density(rng, d)
        worst = max(worst, _relerr(gd.dens_add(gd.dens_identity(d), sigma), sigma))
        inv = invm(rho)
        worst = max(worst, _relerr(gd.dens_neg(rho), inv / np.trace(inv).real))
        t = float(rng.uniform(-2.0, 2.0))
        out = gd.dens_scalar(t, rho)
        worst = max(worst, abs(float(np.trace(out).real) - 1.0))
        worst = max(worst, abs(float(np.trace(gd.dens_add(rho, sigma)).real) - 1.0))
    return config.trials, config.trials, worst, thr, ""


@prop("density-gyrolines", "density-gyrolines")
def _density_gyrolines(config):
    pid, thr = "density-gyrolines", 1e-9
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        d = _cycle(config.dims, i)
        rho = gen_density(rng, d)
        sigma = gen_density(rng, d)
        t = float(rng.uniform(0.0, 1.0))
        # primitive-composition paths as oracles for the closed forms
        prim = gd.dens_add(rho, gd.dens_scalar(t, gd.dens_add(gd.dens_neg(rho), sigma)))
        worst = max(worst, _relerr(gd.dens_gyroline(t, rho, sigma), prim))
        coop = gd.dens_add(
            gd.dens_neg(rho),
            gd.dens_gyration(gd.dens_neg(rho), gd.dens_neg(sigma), sigma))
        prim_co = gd.dens_add(gd.dens_scalar(t, coop), rho)
        worst = max(worst, _relerr(gd.dens_cogyroline(t, rho, sigma), prim_co))
        # trace projection commutes with the mean (joint homogeneity)
        A = gen_random_pd(rng, d, config.cond_cap)
        B = gen_random_pd(rng, d, config.cond_cap)
        G = geo_mean(A, B, t)
        worst = max(worst, _relerr(
            gd.dens_gyroline(t, A / np.trace(A).real, B / np.trace(B).real),
            G / np.trace(G).real))
    return config.trials, config.trials, worst, thr, ""


# --------------------------------------------------------------------------
# ball gyrogroups and the Bloch correspondence
# --------------------------------------------------------------------------

def _ball_triples(config, pid):
    triples = []
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        triples.append(tuple(gen_ball_vector(rng) for _ in range(3)))
    return triples


@prop("einstein-ball-axioms", "ball-gyrogroups")
def _einstein_axioms(config):
    pid, thr = "einstein-ball-axioms", 1e-8
    report = run_axiom_suite(bl.ball_model("einstein"), _ball_triples(config, pid))
    return config.trials, config.trials, report.max_residual, thr, ""


@prop("mobius-ball-axioms", "ball-gyrogroups")
def _mobius_axioms(config):
    pid, thr = "mobius-ball-axioms", 1e-8
    report = run_axiom_suite(bl.ball_model("mobius"), _ball_triples(config, pid))
    return config.trials, config.trials, report.max_residual, thr, ""


@prop("gamma-factor-identity", "mean-eigenvalue-rewrite")
def _gamma_identity(config):
    pid, thr = "gamma-factor-identity", 1e-10
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        u, v = gen_ball_vector(rng), gen_ball_vector(rng)
        lhs = bl.gamma_factor(bl.einstein_add(u, v))
        rhs = bl.gamma_factor(u) * bl.gamma_factor(v) * (1.0 + float(u @ v))
        worst = max(worst, abs(lhs - rhs) / max(1.0, rhs))
    return config.trials, config.trials, worst, thr, ""


@prop("rapidity-metric", "mean-eigenvalue-rewrite")
def _rapidity(config):
    pid, thr = "rapidity-metric", 1e-12
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        u, v = gen_ball_vector(rng), gen_ball_vector(rng)
        worst = max(worst, abs(bl.rapidity_distance(u, v)
                               - bl.rapidity_distance(v, u)))
        worst = max(worst, bl.rapidity_distance(u, u.copy()))
        worst = max(worst, _flag(bl.rapidity_distance(u, v) >= 0, thr))
        origin = np.zeros(3)
        worst = max(worst, abs(bl.rapidity_distance(origin, v)
                               - np.arctanh(np.linalg.norm(v))))
    return config.trials, config.trials, worst, thr, ""


@prop("einstein-gyromidpoint", "gyromidpoint-norm-bound")
def _gyromidpoint(config):
    pid, thr = "einstein-gyromidpoint", 1e-10
    worst = 0.0
    asym_violations = 0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        u, v = gen_ball_vector(rng), gen_ball_vector(rng)
        m = bl.gyromidpoint(u, v)
        gyro_half = bl.ball_scalar(0.5, bl.einstein_coaddition(u, v))
        worst = max(worst, float(np.linalg.norm(m - gyro_half)))
        worst = max(worst, max(0.0, -cf.midpoint_vector_check(u, v)))
        lhs = 2.0 * bl.rapidity_distance(np.zeros(3), m)
        rhs = (bl.rapidity_distance(np.zeros(3), u)
               + bl.rapidity_distance(np.zeros(3), v))
        worst = max(worst, max(0.0, lhs - rhs))
        # the asymmetric-denominator variant of the bound, recorded only
        nu, nv, nm = (np.linalg.norm(x) for x in (u, v, m))
        asym_rhs = np.sqrt((1 + nu) * (1 + nv) / ((1 - nu) * (1 + nv)))
        if (1 + nm) / (1 - nm) > asym_rhs + 1e-10:
            asym_violations += 1
    note = (f"asymmetric-denominator variant violated on {asym_violations} of "
            f"{config.trials} samples (recorded only)")
    return config.trials, config.trials, worst, thr, note


@prop("bloch-correspondence", "qubit-state")
def _bloch(config):
    pid, thr = "bloch-correspondence", 1e-12
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        v = gen_ball_vector(rng)
        rho = bl.bloch_to_density(v)
        worst = max(worst, float(np.linalg.norm(bl.density_to_bloch(rho) - v)))
        worst = max(worst, abs(float(np.trace(rho).real) - 1.0))
        worst = max(worst, _flag(min_eig(rho) > 0, thr))
    worst = max(worst, float(np.linalg.norm(
        bl.bloch_to_density(np.zeros(3)) - np.eye(2) / 2)))
    return config.trials, config.trials, worst, thr, ""


@prop("qubit-eigenvalues", "qubit-eigenvalues")
def _qubit_eigs(config):
    pid, thr = "qubit-eigenvalues", 1e-12
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        v = gen_ball_vector(rng)
        rho = bl.bloch_to_density(v)
        nv = float(np.linalg.norm(v))
        w = np.linalg.eigvalsh(rho)
        worst = max(worst, abs(w[0] - (1 - nv) / 2), abs(w[1] - (1 + nv) / 2))
        det = float(np.linalg.det(rho).real)
        worst = max(worst, abs(det - (1 - nv**2) / 4))
        worst = max(worst, abs(det - 1 / (4 * bl.gamma_factor(v) ** 2)))
    return config.trials, config.trials, worst, thr, ""


@prop("qubit-inverse-normalization", "qubit-inverse-normalization")
def _qubit_inverse(config):
    pid, thr = "qubit-inverse-normalization", 1e-10
    worst = 0.0
    err_plain, err_square = 0.0, 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        u = gen_ball_vector(rng)
        rho = bl.bloch_to_density(u)
        rho_neg = bl.bloch_to_density(-u)
        inv = invm(rho)
        worst = max(worst, _relerr(gd.dens_neg(rho), rho_neg))
        worst = max(worst, _relerr(inv / np.trace(inv).real, rho_neg))
        g = bl.gamma_factor(u)
        err_plain = max(err_plain, float(np.linalg.norm(inv / (4 * g) - rho_neg)))
        err_square = max(err_square, float(np.linalg.norm(inv / (4 * g**2) - rho_neg)))
    constant = "4*gamma^2" if err_square < err_plain else "4*gamma"
    note = (f"normalizing constant matching the inverse state: {constant} "
            f"(worst errors: 4*gamma {err_plain:.3e}, 4*gamma^2 {err_square:.3e})")
    return config.trials, config.trials, worst, thr, note


@prop("bloch-isomorphism", "qubit-state")
def _bloch_isomorphism(config):
    pid, thr = "bloch-isomorphism", 1e-10
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        u, v = gen_ball_vector(rng), gen_ball_vector(rng)
        t = float(rng.uniform(-2.0, 2.0))
        lhs = bl.bloch_to_density(bl.einstein_add(u, v))
        rhs = gd.dens_add(bl.bloch_to_density(u), bl.bloch_to_density(v))
        worst = max(worst, float(np.linalg.norm(lhs - rhs)))
        lhs = bl.bloch_to_density(bl.ball_scalar(t, v))
        rhs = gd.dens_scalar(t, bl.bloch_to_density(v))
        worst = max(worst, float(np.linalg.norm(lhs - rhs)))
    return config.trials, config.trials, worst, thr, ""


# --------------------------------------------------------------------------
# 2x2 closed forms
# --------------------------------------------------------------------------

@prop("lmap-identities", "difference-quotient-map")
def _lmap(config):
    # the difference quotient just outside the branch window carries
    # cancellation noise of order eps/|x-1| ~ 1e-9, which bounds how sharply
    # continuity across the switch can be asserted
    pid, thr = "lmap-identities", 1e-8
    worst = abs(cf.l_map(0.37, 1.0) - 0.37)
    worst = max(worst, abs(cf.l_map(0.5, 4.0) - 0.4))
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        t = float(rng.uniform(-2.0, 2.0))
        x = float(np.exp(rng.uniform(-3.0, 3.0)))
        worst = max(worst, abs(cf.l_map(t, x) - cf.l_map(t, 1.0 / x)))
        # continuity across the branch switch
        eps = 1.0000001e-7
        worst = max(worst, abs(cf.l_map(t, 1.0 + eps) - cf.l_map(t, 1.0)))
    return config.trials, config.trials, worst, thr, ""


@prop("two-by-two-mean-combination", "two-by-two-mean-combination")
def _gm2(config):
    pid, thr = "two-by-two-mean-combination", 1e-9
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        A = gen_random_pd(rng, 2, config.cond_cap, unit_det=True)
        B = gen_random_pd(rng, 2, config.cond_cap, unit_det=True)
        t = _cycle((0.2, 0.5, 0.7), i)
        worst = max(worst, _relerr(cf.gm2_det1(A, B, t), geo_mean(A, B, t)))
        # midpoint rewrite and the value of the half-weight coefficient
        S = A + B
        sqrt_det = np.sqrt(cf.det2(S).real)
        worst = max(worst, _relerr(geo_mean(A, B, 0.5), S / sqrt_det))
        lam = cf.relative_eigenvalue(A, B)
        worst = max(worst, abs(cf.l_map(0.5, lam) - 1.0 / sqrt_det))
        # branch independence: both eigenvalues of A B^{-1} give one answer
        combo_lo = (cf.l_map(1 - t, 1 / lam) * A + cf.l_map(t, 1 / lam) * B)
        worst = max(worst, _relerr(cf.gm2_det1(A, B, t), combo_lo))
    return config.trials, config.trials, worst, thr, ""


@prop("two-by-two-spectral-closed-form", "two-by-two-spectral-closed-form")
def _sgm2(config):
    pid, thr = "two-by-two-spectral-closed-form", 1e-9
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        t = _cycle((0.3, 0.5, 0.8), i)
        A = gen_random_pd(rng, 2, config.cond_cap, unit_det=True)
        B = gen_random_pd(rng, 2, config.cond_cap, unit_det=True)
        worst = max(worst, _relerr(cf.sgm2(A, B, t), spectral_mean(A, B, t)))
        A = gen_random_pd(rng, 2, config.cond_cap)
        B = gen_random_pd(rng, 2, config.cond_cap)
        worst = max(worst, _relerr(cf.sgm2(A, B, t), spectral_mean(A, B, t)))
    return config.trials, config.trials, worst, thr, ""


@prop("det-shift-identity", "det-shift-identity")
def _det_shift(config):
    pid, thr = "det-shift-identity", 1e-12
    worst = cf.det_shift_identity(1.0, np.array([[0.0, 1.0], [1.0, 0.0]]))
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        c = float(rng.uniform(-3.0, 3.0))
        X = complex_gaussian(rng, (2, 2))
        worst = max(worst, cf.det_shift_identity(c, X))
        worst = max(worst, cf.det_shift_identity(0.0, X))
    return config.trials, config.trials, worst, thr, ""


@prop("block-norm-bound", "block-norm-bound")
def _block_norm(config):
    pid, thr = "block-norm-bound", 1e-10
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        d = _cycle(config.dims, i)
        A, B, X = gen_psd_block_triple(rng, d, config.cond_cap)
        op = float(np.linalg.norm(X, ord=2))
        bound = np.sqrt(np.linalg.eigvalsh(A)[-1] * np.linalg.eigvalsh(B)[-1])
        worst = max(worst, max(0.0, op - bound))
    return config.trials, config.trials, worst, thr, ""


@prop("sum-norm-bound", "sum-norm-bound")
def _sum_norm(config):
    pid, thr = "sum-norm-bound", 1e-10
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        A = gen_random_pd(rng, 2, config.cond_cap, unit_det=True)
        B = gen_random_pd(rng, 2, config.cond_cap, unit_det=True)
        worst = max(worst, max(0.0, -cf.norm_product_check(A, B)))
        # rescaled form for general determinants
        A2 = gen_random_pd(rng, 2, config.cond_cap)
        B2 = gen_random_pd(rng, 2, config.cond_cap)
        a = np.sqrt(cf.det2(A2).real)
        b = np.sqrt(cf.det2(B2).real)
        S = A2 / a + B2 / b
        lhs = np.sqrt(a * b) * float(np.max(np.abs(np.linalg.eigvalsh(S))))
        rhs = np.sqrt(cf.det2(S).real
                      * np.max(np.abs(np.linalg.eigvalsh(A2)))
                      * np.max(np.abs(np.linalg.eigvalsh(B2))))
        worst = max(worst, max(0.0, lhs - rhs))
    return config.trials, config.trials, worst, thr, ""


@prop("qubit-mean-combination", "qubit-mean-combination")
def _qubit_geo(config):
    pid, thr = "qubit-mean-combination", 1e-9
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        u, v = gen_ball_vector(rng), gen_ball_vector(rng)
        t = _cycle((0.25, 0.5, 0.75), i)
        oracle = geo_mean(bl.bloch_to_density(u), bl.bloch_to_density(v), t)
        worst = max(worst, _relerr(cf.qubit_geo_mean(u, v, t), oracle))
        worst = max(worst, _relerr(cf.qubit_geo_mean(u, u.copy(), t),
                                   bl.bloch_to_density(u)))
    return config.trials, config.trials, worst, thr, ""


@prop("mu-eigenvalue-rewrite", "mean-eigenvalue-rewrite")
def _mu_rewrite(config):
    pid, thr = "mu-eigenvalue-rewrite", 1e-10
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        u, v = gen_ball_vector(rng), gen_ball_vector(rng)
        mu_hi, mu_lo = cf.qubit_mean_eigenvalues(u, v)
        worst = max(worst, abs(mu_hi * mu_lo - 1.0))
        d = bl.rapidity_distance(u, v)
        worst = max(worst, abs(mu_hi - np.exp(d)) / max(1.0, np.exp(d)))
        # they really are the spectrum of (2 g_u rho_u)(2 g_v rho_v)^{-1}
        A = 2 * bl.gamma_factor(u) * bl.bloch_to_density(u)
        B = 2 * bl.gamma_factor(v) * bl.bloch_to_density(v)
        spec = np.sort(np.linalg.eigvals(A @ invm(B)).real)
        worst = max(worst, float(np.max(np.abs(spec - np.sort([mu_hi, mu_lo])))))
    return config.trials, config.trials, worst, thr, ""


@prop("qubit-spectral-closed-form", "qubit-spectral-closed-form")
def _qubit_spectral(config):
    pid, thr = "qubit-spectral-closed-form", 1e-9
    worst = 0.0
    for i in range(config.trials):
        rng = substream(config.seed, pid, i)
        u, v = gen_ball_vector(rng), gen_ball_vector(rng)
        t = _cycle((0.25, 0.75, 0.5), i)
        oracle = spectral_mean(bl.bloch_to_density(u), bl.bloch_to_density(v), t)
        worst = max(worst, _relerr(cf.qubit_spectral_mean(u, v, t), oracle))
        worst = max(worst, _relerr(cf.qubit_spectral_mean(u, u.copy(), t),
                                   bl.bloch_to_density(u)))
    return config.trials, config.trials, worst, thr, ""


# --------------------------------------------------------------------------
# Frobenius-norm semi-metric variant
# --------------------------------------------------------------------------

@prop("frobenius-semimetric-properties", "frobenius-semimetric")
def _frobenius_semimetric(config):
    pid, thr = "frobenius-semimetric-properties", 1e-8
    worst = 0.0
    for i in range(config.trials):
        rng, d, A, B = _pd_pair(config, pid, i)
        dv = distance("semimetric_frob", A, B)
        worst = max(worst, abs(dv - distance("semimetric_frob", B, A)))
        worst = max(worst, distance("semimetric_frob", A, A.copy()))
        alpha = float(rng.uniform(0.2, 5.0))
        worst = max(worst, abs(distance("semimetric_frob", alpha * A, alpha * B) - dv))
        worst = max(worst, abs(distance("semimetric_frob", invm(A), invm(B)) - dv))
        M = spectral_mean(A, B, 0.5)
        worst = max(worst, *midpoint_deviation("semimetric_frob", A, B, M))
        t = _cycle(config.t_grid, i)
        worst = max(worst, abs(distance("semimetric_frob", A, spectral_mean(A, B, t))
                               - t * dv))
    return config.trials, config.trials, worst, thr, ""
