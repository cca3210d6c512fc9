"""Weighted geometric means of positive definite matrices and their gyro algebra.

Public surface: the spectral kernel, the two weighted means with their
defining-equation residuals, distances on the cone, the order-inequality
checkers, three gyrovector-space models (cone, densities, Einstein/Mobius
ball with the Bloch correspondence), 2x2 closed forms, and the randomized
verification harness behind the ``gyromean`` CLI.
"""

from .kernel import (
    DEFAULT_TOL,
    Loewner,
    SpectralDecomposition,
    TolerancePolicy,
    congruence,
    eigh,
    expm,
    invm,
    is_positive_definite,
    loewner_compare,
    logm,
    matrix_function,
    min_eig,
    norm,
    polar_unitary,
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
from .metrics import DISTANCE_KINDS, distance, midpoint_deviation, sup_ratio
from .order import (
    INEQUALITY_CASES,
    CheckResult,
    check,
    equivalence_statements,
    weak_majorize,
)
from .gyrocone import (
    axiom_suite,
    cogyroline,
    cone_add,
    cone_neg,
    cone_scalar,
    cooperation,
    gyration,
    gyration_unitary,
    gyroline,
)
from .gyrodensity import (
    dens_add,
    dens_cogyroline,
    dens_gyroline,
    dens_neg,
    dens_scalar,
    require_density,
)
from .ball import (
    ball_scalar,
    bloch_to_density,
    density_to_bloch,
    einstein_add,
    gamma_factor,
    gyromidpoint,
    mobius_add,
    rapidity_distance,
)
from .closedform2x2 import (
    det_shift_identity,
    gm2_det1,
    l_map,
    midpoint_vector_check,
    norm_product_check,
    qubit_geo_mean,
    qubit_spectral_mean,
    sgm2,
)
from .randgen import gen_random_pd, substream
from .harness import (
    CampaignConfig,
    Report,
    reproduce_counterexamples,
    run_campaign,
)
from . import errors

__version__ = "0.1.0"
