#include "bemwe/moments.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "bemwe/errors.hpp"
#include "bemwe/quadrature.hpp"

namespace bemwe {

MomentRequest::MomentRequest(const BemweParams& params_, int which_, int order_,
                             double rel_tol_)
    : params(params_), which(which_), order(order_), rel_tol(rel_tol_) {
  if (which != 1 && which != 2) {
    throw std::invalid_argument("MomentRequest: which must be 1 or 2");
  }
  if (order < 1) {
    throw DomainError("MomentRequest: order must be a positive integer, got " +
                      std::to_string(order));
  }
  if (!(rel_tol > 0.0) || rel_tol > 1e-2) {
    throw DomainError("MomentRequest: rel_tol must lie in (0, 1e-2]");
  }
}

double emwe_moment(const EmweParams& p, int order, double rel_tol) {
  if (order < 1) throw DomainError("emwe_moment: order must be >= 1");
  if (!(rel_tol > 0.0) || rel_tol > 1e-2) {
    throw DomainError("emwe_moment: rel_tol must lie in (0, 1e-2]");
  }
  const double cutoff = emwe_quantile(p, 1.0 - 1e-14);
  if (!std::isfinite(cutoff)) {
    // quantiles of this parameter set leave double range (tiny beta)
    throw AccuracyError("emwe_moment: integration cutoff exceeds double range",
                        std::numeric_limits<double>::quiet_NaN(),
                        std::numeric_limits<double>::infinity());
  }
  const double r = static_cast<double>(order);
  auto integrand = [&](double x) { return std::pow(x, r) * emwe_pdf(p, x); };
  return integrate_from_zero_checked(integrand, cutoff, rel_tol, "emwe_moment").value;
}

double marginal_moment(const MomentRequest& req) {
  return emwe_moment(req.params.marginal(req.which), req.order, req.rel_tol);
}

MonteCarloEstimate moment_mc_estimate(const MomentRequest& req, RngStream& rng,
                                      std::size_t n) {
  if (n < 2) throw DomainError("moment_mc_estimate: need at least 2 draws");
  const auto pairs = bemwe_sample(req.params, rng, n);
  const double r = static_cast<double>(req.order);
  double mean = 0.0, m2 = 0.0;
  std::size_t count = 0;
  for (const auto& pair : pairs) {
    const double x = req.which == 1 ? pair.x1 : pair.x2;
    const double v = std::pow(x, r);
    ++count;
    const double delta = v - mean;
    mean += delta / static_cast<double>(count);
    m2 += delta * (v - mean);
  }
  const double variance = m2 / static_cast<double>(n - 1);
  return {mean, std::sqrt(variance / static_cast<double>(n))};
}

}  // namespace bemwe
