#ifndef BEMWE_INFERENCE_HPP
#define BEMWE_INFERENCE_HPP

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "bemwe/bivariate.hpp"

namespace bemwe {

using GammaVector = std::array<double, 3>;
using Matrix3 = std::array<std::array<double, 3>, 3>;

/// alpha, beta, lambda held constant while the three shape parameters are fit.
struct FixedShape {
  double alpha;
  double beta;
  double lambda;

  FixedShape(double alpha, double beta, double lambda);

  bool operator==(const FixedShape&) const = default;
};

/// A sample split into the three likelihood regions, with the log terms
/// A1 = sum_{I1} ln G(x1), A2 = sum_{I1} ln G(x2), B1 = sum_{I2} ln G(x1),
/// B2 = sum_{I2} ln G(x2), C = sum_{I3} ln G(x) precomputed under the given
/// fixed shape. const_term collects every gamma-free summand of the
/// log-likelihood so reported values are absolute, not up to a constant.
struct RegionPartition {
  std::vector<std::size_t> idx1, idx2, idx3;
  std::size_t n1 = 0, n2 = 0, n3 = 0;
  double a1 = 0.0, a2 = 0.0, b1 = 0.0, b2 = 0.0, c = 0.0;
  double const_term = 0.0;
  FixedShape fixed{1.0, 1.0, 1.0};
  double tie_tol = 0.0;

  std::size_t size() const { return n1 + n2 + n3; }
};

/// Interval endpoints, lower already truncated at zero.
struct ConfInterval {
  double lower;
  double upper;

  bool operator==(const ConfInterval&) const = default;
};

struct FitReport {
  GammaVector estimates{};
  double loglik = 0.0;
  Matrix3 covariance{};
  std::array<ConfInterval, 3> conf_intervals{};
  GammaVector ci_lower_unclamped{};  // pre-truncation lower endpoints
  double level = 0.95;
  int iterations = 0;
  bool converged = false;
  bool boundary = false;  // an estimate was driven onto the gamma_i = 0 boundary
  double score_sup_norm = 0.0;
  std::string diagnostic;
  FixedShape fixed{1.0, 1.0, 1.0};

  bool operator==(const FitReport&) const = default;
};

/// Splits pairs into I1 (x1 < x2 - tie_tol), I2 (x2 < x1 - tie_tol), I3 (tie)
/// and accumulates the log-term sums. A zero coordinate makes ln G = -inf and
/// raises InputError naming the offending row.
RegionPartition partition_sample(const BivariateSample& sample, const FixedShape& fixed);

/// Log-likelihood of the three shape parameters given a partition. All
/// gamma-free terms are included.
double log_likelihood(const RegionPartition& part, const GammaVector& g);

/// Gradient of the log-likelihood in (gamma1, gamma2, gamma3).
GammaVector score(const RegionPartition& part, const GammaVector& g);

/// Negative Hessian; depends only on the region counts and the gammas.
Matrix3 observed_information(const RegionPartition& part, const GammaVector& g);

/// Inverse of the observed information. Throws ConvergenceError if singular.
Matrix3 covariance_matrix(const RegionPartition& part, const GammaVector& g);

/// Standard normal quantile at probability p, used for the Wald intervals.
double normal_quantile(double p);

struct FitOptions {
  GammaVector init{1.0, 1.0, 1.0};
  double tol = 1e-8;       // sup-norm of the score at convergence
  int max_iter = 100;
  double level = 0.95;     // confidence level 1 - delta
};

/// Newton iteration on the score with the closed-form Hessian, step-halving to
/// stay in the positive orthant. Returns estimates, the covariance from the
/// observed information, and Wald intervals with lower bounds truncated at 0
/// (the untruncated values are kept in ci_lower_unclamped). A fit pushed onto
/// the boundary of the parameter space is reported via converged = false and
/// boundary = true rather than an exception; a singular information matrix
/// throws ConvergenceError with the iterate in the message.
FitReport fit_mle(const RegionPartition& part, const FitOptions& options = {});

}  // namespace bemwe

#endif
