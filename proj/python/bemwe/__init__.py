"""Bivariate exponentiated modified Weibull extension distribution.

Evaluation, sampling, marginal moments and maximum likelihood inference for
the Marshall-Olkin-type bivariate lifetime model X1 = max(U1, U3),
X2 = max(U2, U3) with EMWE-distributed shocks. The heavy lifting lives in the
C++ extension module; this package re-exports its public surface.
"""

from ._core import (  # noqa: F401
    AccuracyError,
    BemweParams,
    ConvergenceError,
    DomainError,
    EmweParams,
    InputError,
    OverflowSignal,
    RngStream,
    __version__,
    bemwe_sample,
    bivariate_hazard,
    conditional_pdf,
    emwe_cdf,
    emwe_hazard,
    emwe_moment,
    emwe_pdf,
    emwe_quantile,
    emwe_sample,
    emwe_survival,
    fit_nfl,
    fit_pairs,
    joint_cdf,
    joint_pdf,
    joint_survival,
    marginal_cdf,
    marginal_moment,
    marginal_pdf,
    max_cdf,
    min_cdf,
    moment_mc_estimate,
    nfl_pairs,
    partition_counts,
)
