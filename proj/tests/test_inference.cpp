#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "bemwe/dataset.hpp"
#include "bemwe/errors.hpp"
#include "bemwe/inference.hpp"
#include "support/test_helpers.hpp"

using namespace bemwe;
using test::TestRng;

namespace {

const FixedShape kPaperShape(0.1, 0.3, 0.05);

RegionPartition nfl_partition() {
  return partition_sample(embedded_nfl_dataset().sample(0.0), kPaperShape);
}

BivariateSample synthetic_sample(std::uint64_t seed, const BemweParams& p, std::size_t n) {
  RngStream rng(seed);
  return {bemwe_sample(p, rng, n), 0.0};
}

// Values frozen from a 40-digit evaluation of the same sums and solver.
constexpr double kA1 = -25.8054942168365661;
constexpr double kA2 = -14.4112073326880295;
constexpr double kB1 = -2.16093178161426114;
constexpr double kB2 = -2.83073258977718603;
constexpr double kC = -48.5788909970096761;
constexpr double kMle1 = 0.0416134322335289;
constexpr double kMle2 = 0.253028581961717;
constexpr double kMle3 = 0.520107153491051;
constexpr double kLoglik = -250.289436359498;

}  // namespace

TEST_CASE("football data partitions into (16, 2, 24)") {
  const RegionPartition part = nfl_partition();
  CHECK(part.n1 == 16);
  CHECK(part.n2 == 2);
  CHECK(part.n3 == 24);
  CHECK(part.size() == 42);
  CHECK(part.a1 == doctest::Approx(kA1).epsilon(1e-13));
  CHECK(part.a2 == doctest::Approx(kA2).epsilon(1e-13));
  CHECK(part.b1 == doctest::Approx(kB1).epsilon(1e-13));
  CHECK(part.b2 == doctest::Approx(kB2).epsilon(1e-13));
  CHECK(part.c == doctest::Approx(kC).epsilon(1e-13));
  for (double s : {part.a1, part.a2, part.b1, part.b2, part.c}) {
    CHECK(s < 0.0);
    CHECK(std::isfinite(s));
  }
}

TEST_CASE("partition counts are invariant under a common positive rescale") {
  const Dataset base = embedded_nfl_dataset();
  for (double s : {0.01, 0.5, 3.0, 250.0}) {
    BivariateSample scaled;
    for (const auto& pr : base.pairs) scaled.pairs.emplace_back(pr.x1 / s, pr.x2 / s);
    const RegionPartition part = partition_sample(scaled, kPaperShape);
    CHECK(part.n1 == 16);
    CHECK(part.n2 == 2);
    CHECK(part.n3 == 24);
  }
}

TEST_CASE("all-tied sample lands entirely in the diagonal region") {
  BivariateSample sample;
  for (double x : {0.5, 1.0, 2.5}) sample.pairs.emplace_back(x, x);
  const RegionPartition part = partition_sample(sample, FixedShape(1.0, 1.0, 1.0));
  CHECK(part.n3 == 3);
  CHECK(part.n1 == 0);
  CHECK(part.n2 == 0);
}

TEST_CASE("swapping the columns swaps n1 and n2") {
  const Dataset base = embedded_nfl_dataset();
  BivariateSample swapped;
  for (const auto& pr : base.pairs) swapped.pairs.emplace_back(pr.x2, pr.x1);
  const RegionPartition part = partition_sample(swapped, kPaperShape);
  CHECK(part.n1 == 2);
  CHECK(part.n2 == 16);
  CHECK(part.n3 == 24);
}

TEST_CASE("a zero coordinate is a data error naming the row") {
  BivariateSample sample;
  sample.pairs.emplace_back(1.0, 2.0);
  sample.pairs.emplace_back(0.0, 1.0);
  bool threw = false;
  try {
    partition_sample(sample, kPaperShape);
  } catch (const InputError& e) {
    threw = true;
    CHECK(std::string(e.what()).find("row 2") != std::string::npos);
  }
  CHECK(threw);
}

TEST_CASE("log-likelihood reproduces the published value at the estimates") {
  const RegionPartition part = nfl_partition();
  CHECK(log_likelihood(part, {kMle1, kMle2, kMle3}) ==
        doctest::Approx(kLoglik).epsilon(1e-10));
  // the printed two-to-three digit estimates land within 0.05 of a score root
  const GammaVector printed{0.0416, 0.253, 0.52};
  CHECK(log_likelihood(part, printed) == doctest::Approx(-250.28).epsilon(0.5));
  const GammaVector s = score(part, printed);
  for (double v : s) CHECK(std::abs(v) < 0.05);
}

TEST_CASE("log-likelihood decomposes as the sum of region-dispatched joint densities") {
  const BemweParams p(0.8, 1.4, 0.6, 1.0, 1.2, 0.5);
  const BivariateSample sample = synthetic_sample(321, p, 80);
  const RegionPartition part = partition_sample(sample, FixedShape(1.0, 1.2, 0.5));
  TestRng rng(227);
  for (int trial = 0; trial < 5; ++trial) {
    const GammaVector g{rng.uniform(0.3, 2.0), rng.uniform(0.3, 2.0), rng.uniform(0.3, 2.0)};
    const BemweParams eval(g[0], g[1], g[2], 1.0, 1.2, 0.5);
    double direct = 0.0;
    for (const auto& pr : sample.pairs) {
      direct += std::log(joint_pdf(eval, pr.x1, pr.x2).value);
    }
    CHECK(log_likelihood(part, g) == doctest::Approx(direct).epsilon(1e-10));
  }
}

TEST_CASE("no flat directions: shifting the shapes moves the log-likelihood") {
  const RegionPartition part = nfl_partition();
  const GammaVector g{kMle1, kMle2, kMle3};
  const double base = log_likelihood(part, g);
  for (double shift : {1e-3, 0.1, 0.7}) {
    const GammaVector moved{g[0] + shift, g[1] + shift, g[2] + shift};
    CHECK(log_likelihood(part, moved) != base);
    CHECK(log_likelihood(part, moved) < base);  // interior maximum
  }
}

TEST_CASE("score matches the finite-difference gradient on three datasets") {
  std::vector<RegionPartition> parts;
  parts.push_back(nfl_partition());
  parts.push_back(partition_sample(
      synthetic_sample(7, BemweParams(1.0, 1.0, 1.0, 1.0, 1.0, 1.0), 60),
      FixedShape(1.0, 1.0, 1.0)));
  parts.push_back(partition_sample(
      synthetic_sample(99, BemweParams(0.8, 1.5, 0.6, 0.5, 1.2, 0.3), 80),
      FixedShape(0.5, 1.2, 0.3)));
  TestRng rng(229);
  for (const auto& part : parts) {
    for (int trial = 0; trial < 20; ++trial) {
      const GammaVector g{rng.uniform(0.1, 2.5), rng.uniform(0.1, 2.5),
                          rng.uniform(0.1, 2.5)};
      const GammaVector analytic = score(part, g);
      const GammaVector fd = test::fd_gradient(part, g);
      const double scale = std::max(
          {std::abs(analytic[0]), std::abs(analytic[1]), std::abs(analytic[2]), 1.0});
      for (int i = 0; i < 3; ++i) {
        CHECK(std::abs(analytic[i] - fd[i]) <= 1e-6 * scale);
      }
    }
  }
}

TEST_CASE("single-region score component has the closed-form root") {
  // only I1 occupied: dL/dgamma2 = n1/gamma2 + A2, root at -n1/A2
  BivariateSample sample;
  sample.pairs.emplace_back(0.5, 1.0);
  sample.pairs.emplace_back(0.3, 0.8);
  sample.pairs.emplace_back(0.9, 1.7);
  const RegionPartition part = partition_sample(sample, FixedShape(1.0, 1.0, 1.0));
  REQUIRE(part.n1 == 3);
  REQUIRE(part.n2 == 0);
  REQUIRE(part.n3 == 0);
  const double root = -static_cast<double>(part.n1) / part.a2;
  const GammaVector g{1.3, root, 0.7};
  CHECK(score(part, g)[1] == doctest::Approx(0.0).epsilon(1e-12));
}

TEST_CASE("observed information: published covariance, zero cross term, finite differences") {
  const RegionPartition part = nfl_partition();
  const GammaVector mle{kMle1, kMle2, kMle3};
  const Matrix3 info = observed_information(part, mle);
  CHECK(info[0][1] == 0.0);
  CHECK(info[1][0] == 0.0);

  const Matrix3 cov = covariance_matrix(part, mle);
  CHECK(cov[0][0] == doctest::Approx(0.000842).epsilon(0.01));
  CHECK(cov[1][1] == doctest::Approx(0.00394).epsilon(0.01));
  CHECK(cov[2][2] == doctest::Approx(0.00711).epsilon(0.01));
  CHECK(cov[0][2] == doctest::Approx(-0.000299).epsilon(0.01));
  CHECK(cov[0][1] == doctest::Approx(3.95e-6).epsilon(0.02));
  CHECK(cov[1][2] == doctest::Approx(-9.39e-5).epsilon(0.01));
  for (int i = 0; i < 3; ++i) {
    CHECK(cov[i][i] >= 0.0);
    for (int j = 0; j < 3; ++j) CHECK(cov[i][j] == cov[j][i]);
  }

  TestRng rng(233);
  for (int trial = 0; trial < 10; ++trial) {
    const GammaVector g{rng.uniform(0.1, 2.5), rng.uniform(0.1, 2.5), rng.uniform(0.1, 2.5)};
    const Matrix3 analytic = observed_information(part, g);
    const Matrix3 fd = test::fd_hessian(part, g);
    const double scale = test::matrix_sup_norm(analytic);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        CHECK(std::abs(fd[i][j] + analytic[i][j]) <= 1e-6 * scale);
      }
    }
  }
}

TEST_CASE("information matrix is positive semi-definite when all regions are occupied") {
  const RegionPartition part = nfl_partition();
  TestRng rng(239);
  for (int trial = 0; trial < 50; ++trial) {
    const GammaVector g{rng.log_uniform(0.02, 8.0), rng.log_uniform(0.02, 8.0),
                        rng.log_uniform(0.02, 8.0)};
    const Matrix3 m = observed_information(part, g);
    // leading principal minors of the negated Hessian
    const double d1 = m[0][0];
    const double d2 = m[0][0] * m[1][1];
    const double d3 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[1][2]) -
                      m[0][2] * (m[1][1] * m[0][2]);
    CHECK(d1 > 0.0);
    CHECK(d2 > 0.0);
    CHECK(d3 > 0.0);
  }
}

TEST_CASE("Newton fit reproduces the published analysis") {
  const RegionPartition part = nfl_partition();
  const FitReport report = fit_mle(part);
  CHECK(report.converged);
  CHECK(report.score_sup_norm < 1e-8);
  CHECK(report.estimates[0] == doctest::Approx(kMle1).epsilon(1e-10));
  CHECK(report.estimates[1] == doctest::Approx(kMle2).epsilon(1e-10));
  CHECK(report.estimates[2] == doctest::Approx(kMle3).epsilon(1e-10));
  CHECK(report.loglik == doctest::Approx(kLoglik).epsilon(1e-12));

  // published-rounded targets
  CHECK(report.estimates[0] == doctest::Approx(0.0416).epsilon(0.005));
  CHECK(report.estimates[1] == doctest::Approx(0.253).epsilon(0.005));
  CHECK(report.estimates[2] == doctest::Approx(0.52).epsilon(0.005));

  // 95% Wald intervals with the lower endpoint clamped at zero
  CHECK(report.conf_intervals[0].lower == 0.0);
  CHECK(report.ci_lower_unclamped[0] == doctest::Approx(-0.0152595).epsilon(1e-4));
  CHECK(report.conf_intervals[0].upper == doctest::Approx(0.098486).epsilon(1e-5));
  CHECK(report.conf_intervals[1].lower == doctest::Approx(0.129849).epsilon(1e-5));
  CHECK(report.conf_intervals[1].upper == doctest::Approx(0.376208).epsilon(1e-5));
  CHECK(report.conf_intervals[2].lower == doctest::Approx(0.354813).epsilon(1e-5));
  CHECK(report.conf_intervals[2].upper == doctest::Approx(0.685402).epsilon(1e-5));
  for (int i = 0; i < 3; ++i) {
    CHECK(report.conf_intervals[i].lower <= report.estimates[i]);
    CHECK(report.estimates[i] <= report.conf_intervals[i].upper);
  }
}

TEST_CASE("Newton converges from anywhere in the positive box") {
  const RegionPartition part = nfl_partition();
  TestRng rng(241);
  for (int trial = 0; trial < 20; ++trial) {
    FitOptions options;
    options.init = {rng.log_uniform(1e-3, 10.0), rng.log_uniform(1e-3, 10.0),
                    rng.log_uniform(1e-3, 10.0)};
    const FitReport report = fit_mle(part, options);
    CHECK(report.converged);
    CHECK(report.estimates[0] == doctest::Approx(kMle1).epsilon(1e-8));
    CHECK(report.estimates[1] == doctest::Approx(kMle2).epsilon(1e-8));
    CHECK(report.estimates[2] == doctest::Approx(kMle3).epsilon(1e-8));
  }
}

TEST_CASE("Newton agrees with a refined grid search") {
  const RegionPartition part = nfl_partition();
  const FitReport report = fit_mle(part);
  const auto grid = test::grid_search_mle(part, {1e-3, 1e-3, 1e-3}, {2.0, 2.0, 2.0});
  CHECK(grid.final_step <= 1e-3);
  for (int i = 0; i < 3; ++i) {
    CHECK(std::abs(grid.argmax[i] - report.estimates[i]) <= 1e-3);
  }
}

TEST_CASE("level zero gives zero-width intervals at the estimates") {
  const RegionPartition part = nfl_partition();
  FitOptions options;
  options.level = 0.0;  // delta = 1: z_{1/2} = 0
  const FitReport report = fit_mle(part, options);
  for (int i = 0; i < 3; ++i) {
    CHECK(report.conf_intervals[i].lower == report.estimates[i]);
    CHECK(report.conf_intervals[i].upper == report.estimates[i]);
  }
}

TEST_CASE("an empty shock-2 region can pin gamma1 to the boundary") {
  // A1 + C dominates n1: the gamma1 score stays negative as gamma1 -> 0 and
  // there is no n2/gamma1 barrier. The fit must say so instead of failing.
  BivariateSample sample;
  for (int i = 0; i < 5; ++i) sample.pairs.emplace_back(1e-4, 1.0);
  for (int i = 0; i < 5; ++i) sample.pairs.emplace_back(10.0, 10.0);
  const RegionPartition part = partition_sample(sample, FixedShape(0.1, 0.3, 0.05));
  REQUIRE(part.n2 == 0);
  const FitReport report = fit_mle(part);
  CHECK(!report.converged);
  CHECK(report.boundary);
  CHECK(report.estimates[0] < 1e-7);
  CHECK(report.diagnostic.find("gamma1") != std::string::npos);
}

TEST_CASE("degenerate all-tie partition raises a convergence error") {
  BivariateSample sample;
  for (double x : {0.4, 0.9, 1.8, 2.2}) sample.pairs.emplace_back(x, x);
  const RegionPartition part = partition_sample(sample, FixedShape(1.0, 1.0, 1.0));
  CHECK_THROWS_AS(fit_mle(part), ConvergenceError);
}

TEST_CASE("normal quantile") {
  CHECK(normal_quantile(0.975) == doctest::Approx(1.959964).epsilon(1e-6));
  CHECK(normal_quantile(0.5) == doctest::Approx(0.0));
  CHECK_THROWS_AS(normal_quantile(0.0), DomainError);
  CHECK_THROWS_AS(normal_quantile(1.5), DomainError);
}

TEST_CASE("argument validation") {
  const RegionPartition part = nfl_partition();
  CHECK_THROWS_AS(log_likelihood(part, {0.0, 1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(score(part, {1.0, -1.0, 1.0}), DomainError);
  CHECK_THROWS_AS(observed_information(part, {1.0, 1.0, std::nan("")}), DomainError);
  FitOptions bad;
  bad.level = 1.0;
  CHECK_THROWS_AS(fit_mle(part, bad), DomainError);
}
