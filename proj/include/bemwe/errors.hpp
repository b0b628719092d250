#ifndef BEMWE_ERRORS_HPP
#define BEMWE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace bemwe {

/// Invalid argument values: negative evaluation points, probabilities outside
/// (0,1), non-positive shape parameters, conditioning on a zero-density point.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Malformed or unreadable input data (CSV parsing, zero coordinates in a
/// sample). The message carries the file/row location when known.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ratio whose denominator underflowed to zero (hazard with survival == 0).
class OverflowError : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

/// Iterative solver failure (singular Hessian, iteration budget exhausted
/// without meeting the tolerance). The message includes the last iterate.
class ConvergenceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Quadrature could not meet the requested tolerance. Carries the best
/// estimate and the estimated error bound.
class AccuracyError : public std::runtime_error {
 public:
  AccuracyError(const std::string& what, double best_estimate, double error_bound)
      : std::runtime_error(what), best_estimate_(best_estimate), error_bound_(error_bound) {}

  double best_estimate() const { return best_estimate_; }
  double error_bound() const { return error_bound_; }

 private:
  double best_estimate_;
  double error_bound_;
};

/// Process exit codes used by the command line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitInputError = 2,
  kExitDomainError = 3,
  kExitNonConvergence = 4,
  kExitAccuracyFailure = 5,
};

}  // namespace bemwe

#endif
