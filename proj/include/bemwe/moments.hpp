#ifndef BEMWE_MOMENTS_HPP
#define BEMWE_MOMENTS_HPP

#include <cstddef>

#include "bemwe/bivariate.hpp"
#include "bemwe/emwe.hpp"
#include "bemwe/rng.hpp"

namespace bemwe {

/// Request for E[X_which^r] under a BEMWE law.
struct MomentRequest {
  BemweParams params;
  int which;       // 1 or 2
  int order;       // r >= 1
  double rel_tol;  // in (0, 1e-2]

  MomentRequest(const BemweParams& params, int which, int order, double rel_tol = 1e-8);
};

struct MonteCarloEstimate {
  double estimate;
  double std_error;
};

/// E[X^r] of a univariate EMWE law by quadrature of x^r f(x) over (0, cutoff],
/// the cutoff placed where the survival drops below 1e-14. The integrand decays
/// double-exponentially past the bulk, so the truncated tail is far below any
/// admissible rel_tol.
///
/// No series expansion is used here: expanding the outer bracket of the density
/// binomially and integrating term by term produces integrals of the form
/// \int_0^inf y^{r/beta} e^{y} dy, which diverge, so a closed series for this
/// family is not available along that route. Direct quadrature of the moment
/// integral is the method of record.
double emwe_moment(const EmweParams& p, int order, double rel_tol = 1e-8);

/// Marginal moment E[X_which^r]: the marginal is EMWE with shape
/// gamma_which + gamma3, so this delegates to emwe_moment at the composed shape.
double marginal_moment(const MomentRequest& req);

/// Monte Carlo estimate of the same moment from n sampler draws, with the
/// standard error of the mean. Validation oracle for marginal_moment.
MonteCarloEstimate moment_mc_estimate(const MomentRequest& req, RngStream& rng, std::size_t n);

}  // namespace bemwe

#endif
