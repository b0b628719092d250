#include "bemwe/bivariate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "bemwe/errors.hpp"

namespace bemwe {

namespace {

void check_positive_finite(double v, const char* name) {
  if (!(v > 0.0) || !std::isfinite(v)) {
    throw DomainError(std::string(name) + " must be positive and finite, got " +
                      std::to_string(v));
  }
}

void check_coordinate(double x, const char* op) {
  if (!(x >= 0.0) || !std::isfinite(x)) {
    throw DomainError(std::string(op) + ": coordinates must be finite non-negative reals");
  }
}

int check_which(int which, const char* op) {
  if (which != 1 && which != 2) {
    throw std::invalid_argument(std::string(op) + ": component index must be 1 or 2, got " +
                                std::to_string(which));
  }
  return which;
}

void check_tie_tol(double tie_tol) {
  if (std::isnan(tie_tol) || tie_tol < 0.0) {
    throw DomainError("tie_tol must be non-negative");
  }
}

}  // namespace

BemweParams::BemweParams(double g1, double g2, double g3,
                         double alpha_, double beta_, double lambda_)
    : gamma1(g1), gamma2(g2), gamma3(g3), alpha(alpha_), beta(beta_), lambda(lambda_) {
  check_positive_finite(gamma1, "gamma1");
  check_positive_finite(gamma2, "gamma2");
  check_positive_finite(gamma3, "gamma3");
  check_positive_finite(alpha, "alpha");
  check_positive_finite(beta, "beta");
  check_positive_finite(lambda, "lambda");
}

double BemweParams::marginal_shape(int which) const {
  check_which(which, "marginal_shape");
  return (which == 1 ? gamma1 : gamma2) + gamma3;
}

EmweParams BemweParams::component(int which) const {
  check_which(which, "component");
  return emwe(which == 1 ? gamma1 : gamma2);
}

EmweParams BemweParams::marginal(int which) const {
  return emwe(marginal_shape(which));
}

BivariatePair::BivariatePair(double x1_, double x2_) : x1(x1_), x2(x2_) {
  check_coordinate(x1, "BivariatePair");
  check_coordinate(x2, "BivariatePair");
}

const char* to_string(Region r) {
  switch (r) {
    case Region::X1Less: return "X1_LESS";
    case Region::X2Less: return "X2_LESS";
    default: return "DIAGONAL";
  }
}

const char* to_string(DensityKind k) {
  return k == DensityKind::Density2D ? "density_2d" : "density_1d_singular";
}

double joint_cdf(const BemweParams& p, double x1, double x2) {
  check_coordinate(x1, "joint_cdf");
  check_coordinate(x2, "joint_cdf");
  if (x1 == x2) return emwe_cdf(p.total(), x1);
  if (x1 < x2) return emwe_cdf(p.marginal(1), x1) * emwe_cdf(p.component(2), x2);
  return emwe_cdf(p.component(1), x1) * emwe_cdf(p.marginal(2), x2);
}

DensityValue joint_pdf(const BemweParams& p, double x1, double x2, double tie_tol) {
  check_tie_tol(tie_tol);
  if (!(x1 > 0.0) || !(x2 > 0.0) || !std::isfinite(x1) || !std::isfinite(x2)) {
    throw DomainError("joint_pdf: coordinates must be finite positive reals");
  }
  if (x1 < x2 - tie_tol) {
    return {Region::X1Less, DensityKind::Density2D,
            emwe_pdf(p.component(2), x2) * emwe_pdf(p.marginal(1), x1)};
  }
  if (x2 < x1 - tie_tol) {
    return {Region::X2Less, DensityKind::Density2D,
            emwe_pdf(p.component(1), x1) * emwe_pdf(p.marginal(2), x2)};
  }
  const double weight = p.gamma3 / p.total_shape();
  return {Region::Diagonal, DensityKind::SingularDiagonal,
          weight * emwe_pdf(p.total(), x1)};
}

double marginal_cdf(const BemweParams& p, int which, double x) {
  check_which(which, "marginal_cdf");
  return emwe_cdf(p.marginal(which), x);
}

double marginal_pdf(const BemweParams& p, int which, double x) {
  check_which(which, "marginal_pdf");
  return emwe_pdf(p.marginal(which), x);
}

DensityValue conditional_pdf(const BemweParams& p, int i, double xi, double xj,
                             double tie_tol) {
  check_which(i, "conditional_pdf");
  const int j = 3 - i;
  const double denom = marginal_pdf(p, j, xj);
  if (denom == 0.0) {
    throw DomainError("conditional_pdf: conditioning density is zero at xj = " +
                      std::to_string(xj));
  }
  const DensityValue joint =
      (i == 1) ? joint_pdf(p, xi, xj, tie_tol) : joint_pdf(p, xj, xi, tie_tol);
  return {joint.region, joint.kind, joint.value / denom};
}

double joint_survival(const BemweParams& p, double x1, double x2) {
  check_coordinate(x1, "joint_survival");
  check_coordinate(x2, "joint_survival");
  const double s = 1.0 - marginal_cdf(p, 1, x1) - marginal_cdf(p, 2, x2) +
                   joint_cdf(p, x1, x2);
  return std::clamp(s, 0.0, 1.0);
}

double bivariate_hazard(const BemweParams& p, double x1, double x2) {
  const double s = joint_survival(p, x1, x2);
  if (s == 0.0) {
    throw OverflowError("bivariate_hazard: joint survival underflowed to zero");
  }
  return joint_pdf(p, x1, x2).value / s;
}

double max_cdf(const BemweParams& p, double y) {
  check_coordinate(y, "max_cdf");
  return emwe_cdf(p.total(), y);
}

double min_cdf(const BemweParams& p, double w) {
  check_coordinate(w, "min_cdf");
  return marginal_cdf(p, 1, w) + marginal_cdf(p, 2, w) - joint_cdf(p, w, w);
}

std::vector<BivariatePair> bemwe_sample(const BemweParams& p, RngStream& rng, std::size_t n) {
  const EmweParams u1 = p.component(1);
  const EmweParams u2 = p.component(2);
  const EmweParams u3 = p.emwe(p.gamma3);
  std::vector<BivariatePair> draws;
  draws.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double a = emwe_quantile(u1, rng.uniform01());
    const double b = emwe_quantile(u2, rng.uniform01());
    const double c = emwe_quantile(u3, rng.uniform01());
    draws.emplace_back(std::max(a, c), std::max(b, c));
  }
  return draws;
}

}  // namespace bemwe
