"""Numerically verified closed forms for Laguerre polynomial series.

The target quantity is

    e^{-x} sum_n  x^n L_n^{(nu)}(x) (f+m)_n / ((1 +- nu +- p)_n (f)_n)

for non-negative integers m, p.  Three independent routes are provided:
closed hypergeometric forms, a mixed finite-sum representation built on
generalized Kummer 2F1(-1) summations, and a brute-force series oracle.
"""
from .closed_forms import (
    CoefficientSet,
    HyperBlock,
    bessel_special,
    closed_route,
    closed_sum,
    hyper_block,
    hyper_block_m0,
    lemma_sum,
    s0_closed,
    sm_closed,
    sm_split,
)
from .gamma import (
    PoleError,
    binomial,
    gamma,
    gamma_ratio,
    pochhammer,
    rgamma,
)
from .kummer import (
    MINUS_NU_MINUS_J,
    MINUS_NU_PLUS_J,
    PLUS_NU_MINUS_J,
    PLUS_NU_PLUS_J,
    KummerCase,
    KummerCaseError,
    kummer_minus,
    kummer_plus,
    kummer_special,
)
from .laguerre import (
    InvalidSumSpecError,
    LaguerreSeq,
    SumSpec,
    laguerre_seq,
    oracle_sum,
)
from .pfq import (
    CONVERGED,
    MAX_TERMS_HIT,
    TERMINATED,
    ConvergenceError,
    EvalResult,
    PFQSpec,
    SeriesPoleError,
    is_terminating,
    pfq_eval,
)

__version__ = "0.1.0"

__all__ = [
    "CoefficientSet",
    "HyperBlock",
    "bessel_special",
    "closed_route",
    "closed_sum",
    "hyper_block",
    "hyper_block_m0",
    "lemma_sum",
    "s0_closed",
    "sm_closed",
    "sm_split",
    "PoleError",
    "binomial",
    "gamma",
    "gamma_ratio",
    "pochhammer",
    "rgamma",
    "KummerCase",
    "KummerCaseError",
    "kummer_minus",
    "kummer_plus",
    "kummer_special",
    "PLUS_NU_PLUS_J",
    "MINUS_NU_PLUS_J",
    "PLUS_NU_MINUS_J",
    "MINUS_NU_MINUS_J",
    "InvalidSumSpecError",
    "LaguerreSeq",
    "SumSpec",
    "laguerre_seq",
    "oracle_sum",
    "CONVERGED",
    "MAX_TERMS_HIT",
    "TERMINATED",
    "ConvergenceError",
    "EvalResult",
    "PFQSpec",
    "SeriesPoleError",
    "is_terminating",
    "pfq_eval",
    "__version__",
]
