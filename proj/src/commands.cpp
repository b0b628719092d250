#include "bemwe/commands.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

#include "bemwe/errors.hpp"
#include "bemwe/version.hpp"

namespace bemwe {

ReportDocument cmd_fit(const Dataset& dataset, const FitCommandOptions& options) {
  if (dataset.pairs.empty()) {
    throw InputError("cmd_fit: dataset is empty");
  }
  const RegionPartition part = partition_sample(dataset.sample(options.tie_tol), options.fixed);
  FitOptions fit_options;
  fit_options.init = options.init;
  fit_options.tol = options.tol;
  fit_options.max_iter = options.max_iter;
  fit_options.level = options.level;
  const FitReport fit = fit_mle(part, fit_options);

  ReportDocument doc;
  doc.tool_version = kVersion;
  doc.source = dataset.source;
  doc.n = part.size();
  doc.n1 = part.n1;
  doc.n2 = part.n2;
  doc.n3 = part.n3;
  doc.scale = dataset.scale;
  doc.tie_tol = options.tie_tol;
  doc.fit = fit;
  return doc;
}

EvalWhat eval_what_from_string(const std::string& name) {
  if (name == "pdf") return EvalWhat::Pdf;
  if (name == "cdf") return EvalWhat::Cdf;
  if (name == "survival") return EvalWhat::Survival;
  if (name == "hazard") return EvalWhat::Hazard;
  if (name == "max_cdf") return EvalWhat::MaxCdf;
  if (name == "min_cdf") return EvalWhat::MinCdf;
  throw InputError("unknown eval function '" + name +
                   "' (expected pdf|cdf|survival|hazard|max_cdf|min_cdf)");
}

int cmd_eval(std::ostream& out, const BemweParams& params, EvalWhat what,
             const std::vector<EvalPoint>& points, double tie_tol) {
  out << std::setprecision(17);
  switch (what) {
    case EvalWhat::Pdf: out << "x1 x2 region kind value\n"; break;
    case EvalWhat::Hazard: out << "x1 x2 region value\n"; break;
    case EvalWhat::MaxCdf:
    case EvalWhat::MinCdf: out << "x value\n"; break;
    default: out << "x1 x2 value\n"; break;
  }
  int failures = 0;
  for (const auto& pt : points) {
    try {
      switch (what) {
        case EvalWhat::Pdf: {
          const DensityValue d = joint_pdf(params, pt.x1, pt.x2, tie_tol);
          out << pt.x1 << ' ' << pt.x2 << ' ' << to_string(d.region) << " kind="
              << to_string(d.kind) << ' ' << d.value << '\n';
          break;
        }
        case EvalWhat::Cdf:
          out << pt.x1 << ' ' << pt.x2 << ' ' << joint_cdf(params, pt.x1, pt.x2) << '\n';
          break;
        case EvalWhat::Survival:
          out << pt.x1 << ' ' << pt.x2 << ' ' << joint_survival(params, pt.x1, pt.x2) << '\n';
          break;
        case EvalWhat::Hazard: {
          const DensityValue d = joint_pdf(params, pt.x1, pt.x2, tie_tol);
          out << pt.x1 << ' ' << pt.x2 << ' ' << to_string(d.region) << ' '
              << bivariate_hazard(params, pt.x1, pt.x2) << '\n';
          break;
        }
        case EvalWhat::MaxCdf:
          out << pt.x1 << ' ' << max_cdf(params, pt.x1) << '\n';
          break;
        case EvalWhat::MinCdf:
          out << pt.x1 << ' ' << min_cdf(params, pt.x1) << '\n';
          break;
      }
    } catch (const std::exception& e) {
      ++failures;
      out << pt.x1;
      if (what != EvalWhat::MaxCdf && what != EvalWhat::MinCdf) out << ' ' << pt.x2;
      out << " error: " << e.what() << '\n';
    }
  }
  return failures;
}

SimulationSummary cmd_simulate(std::ostream& csv_out, const BemweParams& params,
                               std::size_t n, std::uint64_t seed) {
  if (n < 1) throw DomainError("cmd_simulate: n must be >= 1");
  RngStream rng(seed);
  const auto pairs = bemwe_sample(params, rng, n);

  csv_out << std::setprecision(17);
  csv_out << "x1,x2\n";
  SimulationSummary summary;
  summary.n = n;
  for (const auto& pr : pairs) {
    csv_out << pr.x1 << ',' << pr.x2 << '\n';
    if (pr.x1 < pr.x2) {
      ++summary.n1;
    } else if (pr.x2 < pr.x1) {
      ++summary.n2;
    } else {
      ++summary.n3;
    }
  }
  summary.tie_fraction = static_cast<double>(summary.n3) / static_cast<double>(n);
  return summary;
}

void cmd_moments(std::ostream& out, const BemweParams& params, int which,
                 const std::vector<int>& orders, MomentMethod method,
                 std::size_t mc_n, std::uint64_t seed, double rel_tol) {
  out << std::setprecision(17);
  if (method == MomentMethod::Quadrature) {
    out << "order value\n";
    for (int r : orders) {
      out << r << ' ' << marginal_moment(MomentRequest(params, which, r, rel_tol)) << '\n';
    }
  } else {
    out << "order value std_error\n";
    for (int r : orders) {
      RngStream rng(seed);  // one stream per order keeps rows independent of listing order
      const auto mc = moment_mc_estimate(MomentRequest(params, which, r, rel_tol), rng, mc_n);
      out << r << ' ' << mc.estimate << ' ' << mc.std_error << '\n';
    }
  }
}

}  // namespace bemwe
