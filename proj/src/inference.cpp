#include "bemwe/inference.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <sstream>

#include "bemwe/emwe.hpp"
#include "bemwe/errors.hpp"

namespace bemwe {

namespace {

void check_gammas(const GammaVector& g) {
  for (double v : g) {
    if (!(v > 0.0) || !std::isfinite(v)) {
      throw DomainError("shape parameters must be positive and finite");
    }
  }
}

std::string format_iterate(const GammaVector& g, int iteration) {
  std::ostringstream out;
  out.precision(12);
  out << "iteration " << iteration << ", gamma = (" << g[0] << ", " << g[1] << ", "
      << g[2] << ")";
  return out.str();
}

// gamma-free part of ln f_EMWE(x; shape): ln(lambda*beta) + t + (beta-1)ln(x/alpha) - inner.
// The shape-dependent pieces ln(shape) and (shape-1) ln G are handled through
// the region counts and log-term sums.
double log_density_base(double x, const FixedShape& f) {
  const double t = std::pow(x / f.alpha, f.beta);
  return std::log(f.lambda * f.beta) + t + (f.beta - 1.0) * std::log(x / f.alpha) -
         f.lambda * f.alpha * std::expm1(t);
}

}  // namespace

FixedShape::FixedShape(double alpha_, double beta_, double lambda_)
    : alpha(alpha_), beta(beta_), lambda(lambda_) {
  if (!(alpha > 0.0) || !std::isfinite(alpha) || !(beta > 0.0) || !std::isfinite(beta) ||
      !(lambda > 0.0) || !std::isfinite(lambda)) {
    throw DomainError("FixedShape: alpha, beta, lambda must be positive and finite");
  }
}

RegionPartition partition_sample(const BivariateSample& sample, const FixedShape& fixed) {
  if (std::isnan(sample.tie_tol) || sample.tie_tol < 0.0) {
    throw DomainError("partition_sample: tie_tol must be non-negative");
  }
  RegionPartition part;
  part.fixed = fixed;
  part.tie_tol = sample.tie_tol;

  auto log_g_checked = [&](double x, std::size_t row) {
    if (x <= 0.0) {
      throw InputError("partition_sample: zero coordinate in row " + std::to_string(row + 1) +
                       " (ln G(0) is -inf)");
    }
    return emwe_log_g(x, fixed.alpha, fixed.beta, fixed.lambda);
  };

  for (std::size_t row = 0; row < sample.pairs.size(); ++row) {
    const auto& pr = sample.pairs[row];
    if (pr.x1 < pr.x2 - sample.tie_tol) {
      part.idx1.push_back(row);
      part.a1 += log_g_checked(pr.x1, row);
      part.a2 += log_g_checked(pr.x2, row);
      part.const_term += log_density_base(pr.x1, fixed) + log_density_base(pr.x2, fixed);
    } else if (pr.x2 < pr.x1 - sample.tie_tol) {
      part.idx2.push_back(row);
      part.b1 += log_g_checked(pr.x1, row);
      part.b2 += log_g_checked(pr.x2, row);
      part.const_term += log_density_base(pr.x1, fixed) + log_density_base(pr.x2, fixed);
    } else {
      part.idx3.push_back(row);
      part.c += log_g_checked(pr.x1, row);
      part.const_term += log_density_base(pr.x1, fixed);
    }
  }
  part.n1 = part.idx1.size();
  part.n2 = part.idx2.size();
  part.n3 = part.idx3.size();
  return part;
}

double log_likelihood(const RegionPartition& part, const GammaVector& g) {
  check_gammas(g);
  const auto [g1, g2, g3] = g;
  const double n1 = static_cast<double>(part.n1);
  const double n2 = static_cast<double>(part.n2);
  const double n3 = static_cast<double>(part.n3);
  return n1 * std::log((g1 + g3) * g2) + n2 * std::log(g1 * (g2 + g3)) +
         n3 * std::log(g3) + (g1 + g3 - 1.0) * part.a1 + (g2 - 1.0) * part.a2 +
         (g1 - 1.0) * part.b1 + (g2 + g3 - 1.0) * part.b2 +
         (g1 + g2 + g3 - 1.0) * part.c + part.const_term;
}

GammaVector score(const RegionPartition& part, const GammaVector& g) {
  check_gammas(g);
  const auto [g1, g2, g3] = g;
  const double n1 = static_cast<double>(part.n1);
  const double n2 = static_cast<double>(part.n2);
  const double n3 = static_cast<double>(part.n3);
  return {n1 / (g1 + g3) + n2 / g1 + part.a1 + part.b1 + part.c,
          n1 / g2 + n2 / (g2 + g3) + part.a2 + part.b2 + part.c,
          n1 / (g1 + g3) + n2 / (g2 + g3) + n3 / g3 + part.a1 + part.b2 + part.c};
}

Matrix3 observed_information(const RegionPartition& part, const GammaVector& g) {
  check_gammas(g);
  const auto [g1, g2, g3] = g;
  const double n1 = static_cast<double>(part.n1);
  const double n2 = static_cast<double>(part.n2);
  const double n3 = static_cast<double>(part.n3);
  const double s13 = (g1 + g3) * (g1 + g3);
  const double s23 = (g2 + g3) * (g2 + g3);
  Matrix3 info{};
  info[0][0] = n1 / s13 + n2 / (g1 * g1);
  info[0][1] = 0.0;
  info[0][2] = n1 / s13;
  info[1][0] = 0.0;
  info[1][1] = n1 / (g2 * g2) + n2 / s23;
  info[1][2] = n2 / s23;
  info[2][0] = info[0][2];
  info[2][1] = info[1][2];
  info[2][2] = n1 / s13 + n2 / s23 + n3 / (g3 * g3);
  return info;
}

namespace {

Eigen::Matrix3d to_eigen(const Matrix3& m) {
  Eigen::Matrix3d out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) out(i, j) = m[i][j];
  return out;
}

}  // namespace

Matrix3 covariance_matrix(const RegionPartition& part, const GammaVector& g) {
  const Eigen::Matrix3d info = to_eigen(observed_information(part, g));
  Eigen::FullPivLU<Eigen::Matrix3d> lu(info);
  if (!lu.isInvertible()) {
    throw ConvergenceError("observed information matrix is singular at gamma = (" +
                           std::to_string(g[0]) + ", " + std::to_string(g[1]) + ", " +
                           std::to_string(g[2]) + ")");
  }
  const Eigen::Matrix3d inv = lu.inverse();
  Matrix3 cov{};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) cov[i][j] = inv(i, j);
  // enforce exact symmetry of the returned matrix
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j) cov[j][i] = cov[i][j];
  return cov;
}

double normal_quantile(double p) {
  if (!(p > 0.0) || !(p < 1.0)) {
    throw DomainError("normal_quantile: probability must lie in (0, 1)");
  }
  return boost::math::quantile(boost::math::normal_distribution<double>(), p);
}

FitReport fit_mle(const RegionPartition& part, const FitOptions& options) {
  check_gammas(options.init);
  if (!(options.tol > 0.0)) throw DomainError("fit_mle: tol must be positive");
  if (options.max_iter < 1) throw DomainError("fit_mle: max_iter must be >= 1");
  if (std::isnan(options.level) || options.level < 0.0 || options.level >= 1.0) {
    throw DomainError("fit_mle: confidence level must lie in [0, 1)");
  }

  GammaVector g = options.init;
  FitReport report;
  report.fixed = part.fixed;
  report.level = options.level;

  bool converged = false;
  int iter = 0;
  for (; iter < options.max_iter; ++iter) {
    const GammaVector s = score(part, g);
    const double sup = std::max({std::abs(s[0]), std::abs(s[1]), std::abs(s[2])});
    if (sup < options.tol) {
      converged = true;
      break;
    }
    const Eigen::Matrix3d info = to_eigen(observed_information(part, g));
    Eigen::FullPivLU<Eigen::Matrix3d> lu(info);
    if (!lu.isInvertible()) {
      throw ConvergenceError("fit_mle: singular observed information; " +
                             format_iterate(g, iter));
    }
    const Eigen::Vector3d dir = lu.solve(Eigen::Vector3d(s[0], s[1], s[2]));
    // Newton step for a concave objective: g <- g + I0^{-1} s, halved until
    // the iterate stays in the positive orthant.
    double step = 1.0;
    auto stepped = [&](double w) {
      return GammaVector{g[0] + w * dir(0), g[1] + w * dir(1), g[2] + w * dir(2)};
    };
    while (step > 1e-16) {
      const GammaVector cand = stepped(step);
      if (cand[0] > 0.0 && cand[1] > 0.0 && cand[2] > 0.0) break;
      step *= 0.5;
    }
    const GammaVector cand = stepped(step);
    if (!(cand[0] > 0.0 && cand[1] > 0.0 && cand[2] > 0.0)) break;
    g = cand;
  }

  const GammaVector final_score = score(part, g);
  report.estimates = g;
  report.iterations = iter;
  report.converged = converged;
  report.score_sup_norm =
      std::max({std::abs(final_score[0]), std::abs(final_score[1]), std::abs(final_score[2])});
  report.loglik = log_likelihood(part, g);
  report.covariance = covariance_matrix(part, g);

  if (!converged) {
    const double floor = 1e-7;
    if (g[0] < floor || g[1] < floor || g[2] < floor) {
      report.boundary = true;
      std::ostringstream note;
      note << "estimate driven to the gamma = 0 boundary:";
      const char* names[] = {"gamma1", "gamma2", "gamma3"};
      for (int i = 0; i < 3; ++i) {
        if (g[i] < floor) note << ' ' << names[i];
      }
      note << "; score sup-norm " << report.score_sup_norm << " after " << iter
           << " iterations";
      report.diagnostic = note.str();
    } else {
      report.diagnostic = "no convergence within the iteration budget; " +
                          format_iterate(g, iter);
    }
  }

  const double z =
      options.level == 0.0 ? 0.0 : normal_quantile(0.5 + 0.5 * options.level);
  for (int i = 0; i < 3; ++i) {
    const double half_width = z * std::sqrt(std::max(report.covariance[i][i], 0.0));
    const double lower = g[i] - half_width;
    report.ci_lower_unclamped[i] = lower;
    report.conf_intervals[i] = {std::max(lower, 0.0), g[i] + half_width};
  }
  return report;
}

}  // namespace bemwe
