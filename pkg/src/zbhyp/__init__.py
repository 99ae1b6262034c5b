"""Zero-balanced Gauss hypergeometric ratios: evaluation, thresholds,
curvature classifiers, series coefficients and inequality verification."""

from ._kernels import BACKEND
from .errors import (
    ConfigError,
    DegenerateParameterError,
    DivergenceError,
    DomainError,
    NonConvergenceError,
    PreconditionError,
    StepUnderflowError,
    ZbhypError,
)
from .harness import (
    CLAIMS,
    Report,
    SuiteConfig,
    Violation,
    parse_config,
    run_suite,
    verify_corollary1,
    verify_corollary2,
    verify_lemma_probes,
    verify_sandwich,
    verify_series,
    verify_thresholds,
)
from .hyp2f1 import (
    AccuracyWarning,
    HypParams,
    d_hyp2f1,
    gauss_value,
    hyp2f1,
    hyp2f1_grid,
    hyp2f1_route,
    hyp2f1_series,
    hyp2f1_zb_near1,
)
from .phi import (
    AuxEval,
    ZbParams,
    aux_eval,
    c_threshold,
    f_ratio,
    f_second_derivative,
    phi,
    phi_plus_extended,
    phi_second_deriv0,
    psi_big,
    s_poly,
)
from .series import (
    CoeffTable,
    b1_three_ways,
    cm_probe,
    coeffs_f_final,
    coeffs_g_final,
    coeffs_R_B,
    eval_F_pro1,
    series_table,
)
from .special import (
    DirichletConstants,
    beta,
    digamma,
    dirichlet_constants,
    ln_gamma,
    pochhammer,
    ramanujan_R,
    trigamma,
)
from .thresholds import (
    CurvatureVerdict,
    MonotonicityVerdict,
    ThresholdBundle,
    classify_curvature,
    classify_g_ratio,
    classify_monotonicity,
    extrema_phi_pm,
    thresholds,
)

__version__ = "0.1.0"
