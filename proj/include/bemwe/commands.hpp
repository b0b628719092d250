#ifndef BEMWE_COMMANDS_HPP
#define BEMWE_COMMANDS_HPP

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "bemwe/dataset.hpp"
#include "bemwe/moments.hpp"
#include "bemwe/report.hpp"

namespace bemwe {

/// In-process implementations of the CLI subcommands. The thin main() in
/// tools/ only parses flags and maps exceptions to exit codes, so everything
/// here is exercised directly by tests.

struct FitCommandOptions {
  FixedShape fixed{0.1, 0.3, 0.05};
  double level = 0.95;
  double tie_tol = 0.0;
  GammaVector init{1.0, 1.0, 1.0};
  double tol = 1e-8;
  int max_iter = 100;
};

/// partition + Newton fit + report assembly.
ReportDocument cmd_fit(const Dataset& dataset, const FitCommandOptions& options);

enum class EvalWhat { Pdf, Cdf, Survival, Hazard, MaxCdf, MinCdf };

EvalWhat eval_what_from_string(const std::string& name);

/// Point for evaluation; x2 is ignored by the single-coordinate functions
/// (max_cdf, min_cdf).
struct EvalPoint {
  double x1;
  double x2 = 0.0;
};

/// Writes one row per point ("x1 x2 [region kind] value"); rows whose
/// evaluation raises a domain error are reported in place. Returns the number
/// of failed rows.
int cmd_eval(std::ostream& out, const BemweParams& params, EvalWhat what,
             const std::vector<EvalPoint>& points, double tie_tol = 0.0);

struct SimulationSummary {
  std::size_t n = 0, n1 = 0, n2 = 0, n3 = 0;
  double tie_fraction = 0.0;
};

/// Writes "x1,x2" CSV rows (full precision, bit-stable for a fixed seed) and
/// returns the empirical region counts.
SimulationSummary cmd_simulate(std::ostream& csv_out, const BemweParams& params,
                               std::size_t n, std::uint64_t seed);

enum class MomentMethod { Quadrature, MonteCarlo };

/// One row per order: "order value" (quadrature) or "order value std_error"
/// (Monte Carlo over n draws).
void cmd_moments(std::ostream& out, const BemweParams& params, int which,
                 const std::vector<int>& orders, MomentMethod method,
                 std::size_t mc_n = 0, std::uint64_t seed = 0, double rel_tol = 1e-8);

}  // namespace bemwe

#endif
