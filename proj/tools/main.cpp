#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "bemwe/commands.hpp"
#include "bemwe/errors.hpp"
#include "bemwe/version.hpp"

namespace {

struct GammaFlags {
  double gamma1 = 1.0, gamma2 = 1.0, gamma3 = 1.0;
  double alpha = 0.1, beta = 0.3, lambda = 0.05;

  bemwe::BemweParams params() const {
    return {gamma1, gamma2, gamma3, alpha, beta, lambda};
  }
};

void add_shape_flags(CLI::App* cmd, GammaFlags& flags, bool with_gammas) {
  if (with_gammas) {
    cmd->add_option("--gamma1", flags.gamma1, "shape of shock source 1")->capture_default_str();
    cmd->add_option("--gamma2", flags.gamma2, "shape of shock source 2")->capture_default_str();
    cmd->add_option("--gamma3", flags.gamma3, "shape of the shared shock")->capture_default_str();
  }
  cmd->add_option("--alpha", flags.alpha, "scale parameter")->capture_default_str();
  cmd->add_option("--beta", flags.beta, "inner shape parameter")->capture_default_str();
  cmd->add_option("--lambda", flags.lambda, "rate parameter")->capture_default_str();
}

std::vector<bemwe::EvalPoint> parse_points(const std::vector<std::string>& raw,
                                           bool pair_valued) {
  std::vector<bemwe::EvalPoint> points;
  for (const auto& token : raw) {
    const auto comma = token.find(',');
    try {
      if (comma == std::string::npos) {
        if (pair_valued) {
          throw bemwe::InputError("point '" + token + "' needs the form x1,x2");
        }
        points.push_back({std::stod(token), 0.0});
      } else {
        points.push_back(
            {std::stod(token.substr(0, comma)), std::stod(token.substr(comma + 1))});
      }
    } catch (const std::invalid_argument&) {
      throw bemwe::InputError("cannot parse point '" + token + "'");
    }
  }
  return points;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bivariate exponentiated modified Weibull extension distribution tool"};
  app.set_version_flag("--version", std::string(bemwe::kVersion));
  app.require_subcommand(1);

  // fit
  auto* fit = app.add_subcommand("fit", "maximum likelihood fit of (gamma1, gamma2, gamma3)");
  std::string fit_data;
  bool fit_nfl = false;
  double fit_scale = 1.0;
  GammaFlags fit_flags;
  double fit_level = 0.95, fit_tie_tol = 0.0, fit_tol = 1e-8;
  int fit_max_iter = 100;
  std::vector<double> fit_init{1.0, 1.0, 1.0};
  std::string fit_json;
  fit->add_option("--data", fit_data, "two-column CSV of pairs");
  fit->add_flag("--nfl", fit_nfl, "use the embedded 1986 football first-score dataset");
  auto* scale_opt = fit->add_option("--scale", fit_scale,
                                    "divide every value by this on load (default 1; 100 with --nfl)");
  add_shape_flags(fit, fit_flags, false);
  fit->add_option("--level", fit_level, "confidence level")->capture_default_str();
  fit->add_option("--tie-tol", fit_tie_tol, "tie tolerance for region assignment")
      ->capture_default_str();
  fit->add_option("--init", fit_init, "Newton starting point")->expected(3);
  fit->add_option("--tol", fit_tol, "score sup-norm at convergence")->capture_default_str();
  fit->add_option("--max-iter", fit_max_iter, "iteration budget")->capture_default_str();
  fit->add_option("--json", fit_json, "write the full-precision report here");

  // eval
  auto* eval = app.add_subcommand("eval", "evaluate a distribution function on points");
  std::string eval_what = "cdf";
  GammaFlags eval_flags;
  double eval_tie_tol = 0.0;
  std::vector<std::string> eval_points;
  eval->add_option("--what", eval_what, "pdf|cdf|survival|hazard|max_cdf|min_cdf")
      ->capture_default_str();
  add_shape_flags(eval, eval_flags, true);
  eval->add_option("--tie-tol", eval_tie_tol, "tie tolerance")->capture_default_str();
  eval->add_option("points", eval_points, "points: x1,x2 (or a single x for max/min)")
      ->required();

  // simulate
  auto* simulate = app.add_subcommand("simulate", "draw pairs from the shock construction");
  GammaFlags sim_flags;
  std::size_t sim_n = 1000;
  std::uint64_t sim_seed = 1;
  std::string sim_out;
  add_shape_flags(simulate, sim_flags, true);
  simulate->add_option("--n", sim_n, "number of pairs")->capture_default_str();
  simulate->add_option("--seed", sim_seed, "random seed")->capture_default_str();
  simulate->add_option("--out", sim_out, "CSV destination (default: standard output)");

  // moments
  auto* moments = app.add_subcommand("moments", "marginal moments E[X_i^r]");
  GammaFlags mom_flags;
  int mom_which = 1;
  std::vector<int> mom_orders{1};
  std::string mom_method = "quadrature";
  std::size_t mom_n = 1000000;
  std::uint64_t mom_seed = 1;
  double mom_rel_tol = 1e-8;
  add_shape_flags(moments, mom_flags, true);
  moments->add_option("--which", mom_which, "marginal: 1 or 2")->capture_default_str();
  moments->add_option("--orders", mom_orders, "moment orders")->capture_default_str();
  moments->add_option("--method", mom_method, "quadrature|mc")->capture_default_str();
  moments->add_option("--n", mom_n, "Monte Carlo draws")->capture_default_str();
  moments->add_option("--seed", mom_seed, "Monte Carlo seed")->capture_default_str();
  moments->add_option("--rel-tol", mom_rel_tol, "quadrature relative tolerance")
      ->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? bemwe::kExitOk : bemwe::kExitInputError;
  }

  try {
    if (app.got_subcommand(fit)) {
      if (fit_nfl != fit_data.empty()) {
        // exactly one source: either --nfl or --data
        throw bemwe::InputError("fit: pass exactly one of --nfl or --data <csv>");
      }
      if (fit_nfl && scale_opt->count() == 0) fit_scale = 100.0;
      const bemwe::Dataset dataset =
          fit_nfl ? bemwe::embedded_nfl_dataset(fit_scale) : bemwe::load_csv(fit_data, fit_scale);
      bemwe::FitCommandOptions options;
      options.fixed = bemwe::FixedShape(fit_flags.alpha, fit_flags.beta, fit_flags.lambda);
      options.level = fit_level;
      options.tie_tol = fit_tie_tol;
      options.init = {fit_init[0], fit_init[1], fit_init[2]};
      options.tol = fit_tol;
      options.max_iter = fit_max_iter;
      const bemwe::ReportDocument doc = bemwe::cmd_fit(dataset, options);
      std::cout << doc.to_text();
      if (!fit_json.empty()) {
        std::ofstream out(fit_json);
        if (!out) throw bemwe::InputError("cannot write " + fit_json);
        out << doc.to_json_string();
      }
      return doc.fit.converged ? bemwe::kExitOk : bemwe::kExitNonConvergence;
    }

    if (app.got_subcommand(eval)) {
      const bemwe::EvalWhat what = bemwe::eval_what_from_string(eval_what);
      const bool pair_valued =
          what != bemwe::EvalWhat::MaxCdf && what != bemwe::EvalWhat::MinCdf;
      const auto points = parse_points(eval_points, pair_valued);
      const int failures =
          bemwe::cmd_eval(std::cout, eval_flags.params(), what, points, eval_tie_tol);
      return failures == 0 ? bemwe::kExitOk : bemwe::kExitDomainError;
    }

    if (app.got_subcommand(simulate)) {
      bemwe::SimulationSummary summary;
      if (sim_out.empty()) {
        summary = bemwe::cmd_simulate(std::cout, sim_flags.params(), sim_n, sim_seed);
      } else {
        std::ofstream out(sim_out);
        if (!out) throw bemwe::InputError("cannot write " + sim_out);
        summary = bemwe::cmd_simulate(out, sim_flags.params(), sim_n, sim_seed);
      }
      std::ostream& log = sim_out.empty() ? std::cerr : std::cout;
      log << "n: " << summary.n << "  n1: " << summary.n1 << "  n2: " << summary.n2
          << "  n3: " << summary.n3 << "  tie_fraction: " << summary.tie_fraction << "\n";
      return bemwe::kExitOk;
    }

    if (app.got_subcommand(moments)) {
      const bemwe::MomentMethod method = [&] {
        if (mom_method == "quadrature") return bemwe::MomentMethod::Quadrature;
        if (mom_method == "mc") return bemwe::MomentMethod::MonteCarlo;
        throw bemwe::InputError("moments: method must be quadrature or mc");
      }();
      bemwe::cmd_moments(std::cout, mom_flags.params(), mom_which, mom_orders, method,
                         mom_n, mom_seed, mom_rel_tol);
      return bemwe::kExitOk;
    }
  } catch (const bemwe::InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return bemwe::kExitInputError;
  } catch (const bemwe::AccuracyError& e) {
    std::cerr << "accuracy failure: " << e.what() << " (best estimate " << e.best_estimate()
              << ", bound " << e.error_bound() << ")\n";
    return bemwe::kExitAccuracyFailure;
  } catch (const bemwe::ConvergenceError& e) {
    std::cerr << "non-convergence: " << e.what() << "\n";
    return bemwe::kExitNonConvergence;
  } catch (const bemwe::DomainError& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return bemwe::kExitDomainError;
  } catch (const bemwe::OverflowError& e) {
    std::cerr << "domain error (overflow): " << e.what() << "\n";
    return bemwe::kExitDomainError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "domain error: " << e.what() << "\n";
    return bemwe::kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return bemwe::kExitInputError;
  }
  return bemwe::kExitOk;
}
