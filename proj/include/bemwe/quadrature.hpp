#ifndef BEMWE_QUADRATURE_HPP
#define BEMWE_QUADRATURE_HPP

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <limits>
#include <string>

#include "bemwe/errors.hpp"

namespace bemwe {

struct QuadratureResult {
  double value;
  double error;  // estimated absolute error
};

/// Adaptive Gauss-Kronrod on a finite interval with a smooth integrand.
template <typename F>
QuadratureResult integrate_gk(F&& f, double a, double b, double rel_tol = 1e-10,
                              unsigned max_depth = 15) {
  double error = 0.0;
  const double value = boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
      f, a, b, max_depth, rel_tol, &error);
  return {value, error};
}

/// Integral over (0, b] of an integrand that may have an integrable power
/// singularity at zero (x^{c-1} with c > 0). tanh_sinh places abscissae on a
/// double-exponentially graded mesh toward both endpoints, which resolves the
/// singularity without explicit panel splitting. Evaluations below
/// kZeroFloor*b are cut to zero; the neglected mass is O((1e-250)^c).
template <typename F>
QuadratureResult integrate_from_zero(F&& f, double b, double rel_tol = 1e-10,
                                     std::size_t max_refinements = 15) {
  constexpr double kZeroFloor = 1e-250;
  const double floor = kZeroFloor * b;
  auto guarded = [&](double x) -> double {
    if (x <= floor) return 0.0;
    return f(x);
  };
  boost::math::quadrature::tanh_sinh<double> integrator(max_refinements);
  double error = 0.0, l1 = 0.0;
  std::size_t levels = 0;
  const double value = integrator.integrate(guarded, 0.0, b, rel_tol, &error, &l1, &levels);
  return {value, error * l1};
}

/// tanh_sinh on a finite interval whose integrand may be steep (or integrably
/// singular) at either endpoint; abscissae cluster double-exponentially there.
template <typename F>
QuadratureResult integrate_ts(F&& f, double a, double b, double rel_tol = 1e-10,
                              std::size_t max_refinements = 15) {
  boost::math::quadrature::tanh_sinh<double> integrator(max_refinements);
  double error = 0.0, l1 = 0.0;
  std::size_t levels = 0;
  const double value = integrator.integrate(f, a, b, rel_tol, &error, &l1, &levels);
  return {value, error * l1};
}

/// integrate_from_zero with a retry at deeper refinement; throws AccuracyError
/// carrying the best estimate and its bound when the tolerance is out of reach.
template <typename F>
QuadratureResult integrate_from_zero_checked(F&& f, double b, double rel_tol,
                                             const char* what) {
  QuadratureResult r{0.0, std::numeric_limits<double>::infinity()};
  for (std::size_t refinements : {std::size_t{15}, std::size_t{20}}) {
    try {
      r = integrate_from_zero(f, b, rel_tol, refinements);
    } catch (const std::exception& e) {
      // the backend signals apparent divergence / non-finite values by throwing
      throw AccuracyError(std::string(what) + ": " + e.what(), r.value, r.error);
    }
    if (r.error <= rel_tol * std::abs(r.value) || r.error == 0.0) return r;
  }
  throw AccuracyError(std::string(what) + ": quadrature error bound " + std::to_string(r.error) +
                          " exceeds requested tolerance",
                      r.value, r.error);
}

}  // namespace bemwe

#endif
