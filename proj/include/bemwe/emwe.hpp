#ifndef BEMWE_EMWE_HPP
#define BEMWE_EMWE_HPP

#include <cstddef>
#include <vector>

#include "bemwe/rng.hpp"

namespace bemwe {

/// Parameters of the exponentiated modified Weibull extension distribution
///
///   F(x) = [1 - exp(-lambda*alpha*(e^{(x/alpha)^beta} - 1))]^gamma,  x >= 0.
///
/// All four parameters must be positive and finite; construction validates.
struct EmweParams {
  double gamma;
  double alpha;
  double beta;
  double lambda;

  EmweParams(double gamma, double alpha, double beta, double lambda);
};

/// Distribution function. Clamps to 1 once (x/alpha)^beta exceeds 700, where
/// the inner exponential is far past double range and F is 1 to full precision.
double emwe_cdf(const EmweParams& p, double x);

/// log F(x); -inf at x = 0.
double emwe_log_cdf(const EmweParams& p, double x);

/// Density. x = 0 is accepted and resolved by the x -> 0+ limit, which is
/// governed by gamma*beta: 0 above 1, gamma*lambda*beta*(lambda*alpha)^(gamma-1)
/// at exactly 1, and a domain error below 1 (the density diverges).
double emwe_pdf(const EmweParams& p, double x);

/// log f(x) for x > 0.
double emwe_log_pdf(const EmweParams& p, double x);

/// Closed-form inverse of the CDF, u in (0, 1):
///   x = alpha * [ln(1 - ln(1 - u^{1/gamma})/(lambda*alpha))]^{1/beta}.
double emwe_quantile(const EmweParams& p, double u);

/// 1 - F(x), evaluated without forming F when F is close to 1.
double emwe_survival(const EmweParams& p, double x);

/// f(x)/S(x) for x > 0. Throws OverflowError when S underflows to zero.
double emwe_hazard(const EmweParams& p, double x);

/// n i.i.d. draws by inverse transform.
std::vector<double> emwe_sample(const EmweParams& p, RngStream& rng, std::size_t n);

/// ln G(x) where G(x) = 1 - exp(-lambda*alpha*(e^{(x/alpha)^beta} - 1)) is the
/// gamma = 1 distribution function. This is the log term summed over samples in
/// the likelihood; every other module evaluates G through here.
double emwe_log_g(double x, double alpha, double beta, double lambda);

}  // namespace bemwe

#endif
