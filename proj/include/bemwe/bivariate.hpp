#ifndef BEMWE_BIVARIATE_HPP
#define BEMWE_BIVARIATE_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "bemwe/emwe.hpp"
#include "bemwe/rng.hpp"

namespace bemwe {

/// Parameters of the bivariate distribution built from three independent
/// shock variables U_i ~ EMWE(gamma_i, alpha, beta, lambda) through
/// X1 = max(U1, U3), X2 = max(U2, U3). The shared shock U3 puts positive
/// probability mass gamma3/(gamma1+gamma2+gamma3) on the diagonal x1 = x2.
struct BemweParams {
  double gamma1;
  double gamma2;
  double gamma3;
  double alpha;
  double beta;
  double lambda;

  BemweParams(double gamma1, double gamma2, double gamma3,
              double alpha, double beta, double lambda);

  /// Shape of the marginal law of X_i: gamma_i + gamma3.
  double marginal_shape(int which) const;
  /// gamma1 + gamma2 + gamma3, evaluated in one fixed order everywhere.
  double total_shape() const { return gamma1 + gamma2 + gamma3; }

  /// Univariate parameters with the shared alpha, beta, lambda.
  EmweParams emwe(double shape) const { return {shape, alpha, beta, lambda}; }
  EmweParams component(int which) const;   // shape gamma_which
  EmweParams marginal(int which) const;    // shape gamma_which + gamma3
  EmweParams total() const { return emwe(total_shape()); }
};

/// One observation. Coordinates must be finite and non-negative.
struct BivariatePair {
  double x1;
  double x2;

  BivariatePair(double x1, double x2);
};

/// Observations plus the tolerance under which a pair counts as a tie.
struct BivariateSample {
  std::vector<BivariatePair> pairs;
  double tie_tol = 0.0;
};

enum class Region { X1Less, X2Less, Diagonal };
enum class DensityKind { Density2D, SingularDiagonal };

const char* to_string(Region r);        // "X1_LESS" / "X2_LESS" / "DIAGONAL"
const char* to_string(DensityKind k);   // "density_2d" / "density_1d_singular"

/// A density evaluation tagged with the branch it came from. The diagonal
/// branch is a density with respect to 1-D measure on {x1 = x2} and must never
/// be summed with the 2-D branches unlabelled.
struct DensityValue {
  Region region;
  DensityKind kind;
  double value;
};

/// Joint CDF: F1(x1; g1) * F2(x2; g2) * F(min(x1,x2); g3), combined so the
/// tie branch shares the exponent arithmetic with max_cdf.
double joint_cdf(const BemweParams& p, double x1, double x2);

/// Three-branch joint density:
///   x1 < x2 - tie_tol : f(x2; g2) * f(x1; g1+g3)
///   x2 < x1 - tie_tol : f(x1; g1) * f(x2; g2+g3)
///   otherwise         : (g3/(g1+g2+g3)) * f(x; g1+g2+g3)  on the diagonal
DensityValue joint_pdf(const BemweParams& p, double x1, double x2, double tie_tol = 0.0);

/// Marginal law of X_which: EMWE with shape gamma_which + gamma3.
double marginal_cdf(const BemweParams& p, int which, double x);
double marginal_pdf(const BemweParams& p, int which, double x);

/// Conditional density of X_i given X_j = xj, computed as the ratio
/// joint_pdf / marginal_pdf(j, xj) with the same three-branch split. On the
/// diagonal the value is the conditional probability of the atom {X_i = xj}.
DensityValue conditional_pdf(const BemweParams& p, int i, double xi, double xj,
                             double tie_tol = 0.0);

/// P(X1 > x1, X2 > x2) = 1 - F1(x1) - F2(x2) + F(x1, x2), clamped to [0, 1].
double joint_survival(const BemweParams& p, double x1, double x2);

/// Bivariate failure rate: region-dispatched joint density over joint survival.
/// Throws OverflowError when the survival underflows to zero.
double bivariate_hazard(const BemweParams& p, double x1, double x2);

/// CDF of max(X1, X2): EMWE with the total shape.
double max_cdf(const BemweParams& p, double y);

/// CDF of min(X1, X2): F1(w) + F2(w) - F(w, w).
double min_cdf(const BemweParams& p, double w);

/// n pairs from the shock construction. Ties X1 == X2 are exact when the
/// shared shock dominates, since both coordinates copy the same double.
std::vector<BivariatePair> bemwe_sample(const BemweParams& p, RngStream& rng, std::size_t n);

}  // namespace bemwe

#endif
