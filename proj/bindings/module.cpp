#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "bemwe/commands.hpp"
#include "bemwe/dataset.hpp"
#include "bemwe/errors.hpp"
#include "bemwe/inference.hpp"
#include "bemwe/moments.hpp"
#include "bemwe/version.hpp"

namespace py = pybind11;
using namespace bemwe;

namespace {

py::dict density_to_dict(const DensityValue& d) {
  py::dict out;
  out["region"] = to_string(d.region);
  out["kind"] = to_string(d.kind);
  out["value"] = d.value;
  return out;
}

py::dict report_to_dict(const ReportDocument& doc) {
  py::dict out;
  out["tool_version"] = doc.tool_version;
  out["source"] = doc.source;
  out["n"] = doc.n;
  out["n1"] = doc.n1;
  out["n2"] = doc.n2;
  out["n3"] = doc.n3;
  out["scale"] = doc.scale;
  out["estimates"] = doc.fit.estimates;
  out["loglik"] = doc.fit.loglik;
  out["covariance"] = doc.fit.covariance;
  py::list cis;
  for (const auto& ci : doc.fit.conf_intervals) {
    cis.append(py::make_tuple(ci.lower, ci.upper));
  }
  out["conf_intervals"] = cis;
  out["ci_lower_unclamped"] = doc.fit.ci_lower_unclamped;
  out["level"] = doc.fit.level;
  out["iterations"] = doc.fit.iterations;
  out["converged"] = doc.fit.converged;
  out["boundary"] = doc.fit.boundary;
  out["text"] = doc.to_text();
  out["json"] = doc.to_json_string();
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "bivariate exponentiated modified Weibull extension distribution";
  m.attr("__version__") = kVersion;

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<ConvergenceError>(m, "ConvergenceError", PyExc_RuntimeError);
  py::register_exception<AccuracyError>(m, "AccuracyError", PyExc_RuntimeError);
  py::register_exception<OverflowError>(m, "OverflowSignal", PyExc_OverflowError);

  py::class_<RngStream>(m, "RngStream")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform01", &RngStream::uniform01);

  py::class_<EmweParams>(m, "EmweParams")
      .def(py::init<double, double, double, double>(), py::arg("gamma"), py::arg("alpha"),
           py::arg("beta"), py::arg("lambda_"))
      .def_readonly("gamma", &EmweParams::gamma)
      .def_readonly("alpha", &EmweParams::alpha)
      .def_readonly("beta", &EmweParams::beta)
      .def_readonly("lambda_", &EmweParams::lambda)
      .def("__repr__", [](const EmweParams& p) {
        std::ostringstream out;
        out << "EmweParams(gamma=" << p.gamma << ", alpha=" << p.alpha << ", beta=" << p.beta
            << ", lambda_=" << p.lambda << ")";
        return out.str();
      });

  py::class_<BemweParams>(m, "BemweParams")
      .def(py::init<double, double, double, double, double, double>(), py::arg("gamma1"),
           py::arg("gamma2"), py::arg("gamma3"), py::arg("alpha"), py::arg("beta"),
           py::arg("lambda_"))
      .def_readonly("gamma1", &BemweParams::gamma1)
      .def_readonly("gamma2", &BemweParams::gamma2)
      .def_readonly("gamma3", &BemweParams::gamma3)
      .def_readonly("alpha", &BemweParams::alpha)
      .def_readonly("beta", &BemweParams::beta)
      .def_readonly("lambda_", &BemweParams::lambda)
      .def("marginal_shape", &BemweParams::marginal_shape)
      .def("total_shape", &BemweParams::total_shape);

  m.def("emwe_cdf", &emwe_cdf);
  m.def("emwe_pdf", &emwe_pdf);
  m.def("emwe_quantile", &emwe_quantile);
  m.def("emwe_survival", &emwe_survival);
  m.def("emwe_hazard", &emwe_hazard);
  m.def("emwe_sample", &emwe_sample, py::arg("params"), py::arg("rng"), py::arg("n"));
  m.def("emwe_moment", &emwe_moment, py::arg("params"), py::arg("order"),
        py::arg("rel_tol") = 1e-8);

  m.def("joint_cdf", &joint_cdf);
  m.def("joint_pdf",
        [](const BemweParams& p, double x1, double x2, double tie_tol) {
          return density_to_dict(joint_pdf(p, x1, x2, tie_tol));
        },
        py::arg("params"), py::arg("x1"), py::arg("x2"), py::arg("tie_tol") = 0.0);
  m.def("marginal_cdf", &marginal_cdf);
  m.def("marginal_pdf", &marginal_pdf);
  m.def("conditional_pdf",
        [](const BemweParams& p, int i, double xi, double xj, double tie_tol) {
          return density_to_dict(conditional_pdf(p, i, xi, xj, tie_tol));
        },
        py::arg("params"), py::arg("i"), py::arg("xi"), py::arg("xj"), py::arg("tie_tol") = 0.0);
  m.def("joint_survival", &joint_survival);
  m.def("bivariate_hazard", &bivariate_hazard);
  m.def("max_cdf", &max_cdf);
  m.def("min_cdf", &min_cdf);
  m.def("bemwe_sample",
        [](const BemweParams& p, RngStream& rng, std::size_t n) {
          const auto pairs = bemwe_sample(p, rng, n);
          py::list out;
          for (const auto& pr : pairs) out.append(py::make_tuple(pr.x1, pr.x2));
          return out;
        },
        py::arg("params"), py::arg("rng"), py::arg("n"));

  m.def("marginal_moment",
        [](const BemweParams& p, int which, int order, double rel_tol) {
          return marginal_moment(MomentRequest(p, which, order, rel_tol));
        },
        py::arg("params"), py::arg("which"), py::arg("order"), py::arg("rel_tol") = 1e-8);
  m.def("moment_mc_estimate",
        [](const BemweParams& p, int which, int order, std::uint64_t seed, std::size_t n) {
          RngStream rng(seed);
          const auto mc = moment_mc_estimate(MomentRequest(p, which, order), rng, n);
          return py::make_tuple(mc.estimate, mc.std_error);
        },
        py::arg("params"), py::arg("which"), py::arg("order"), py::arg("seed"), py::arg("n"));

  m.def("partition_counts",
        [](const std::vector<std::pair<double, double>>& pairs, double alpha, double beta,
           double lambda, double tie_tol) {
          BivariateSample sample;
          sample.tie_tol = tie_tol;
          for (const auto& [x1, x2] : pairs) sample.pairs.emplace_back(x1, x2);
          const auto part = partition_sample(sample, FixedShape(alpha, beta, lambda));
          return py::make_tuple(part.n1, part.n2, part.n3);
        },
        py::arg("pairs"), py::arg("alpha"), py::arg("beta"), py::arg("lambda_"),
        py::arg("tie_tol") = 0.0);

  m.def("fit_nfl",
        [](double alpha, double beta, double lambda, double level, double scale) {
          FitCommandOptions options;
          options.fixed = FixedShape(alpha, beta, lambda);
          options.level = level;
          return report_to_dict(cmd_fit(embedded_nfl_dataset(scale), options));
        },
        py::arg("alpha") = 0.1, py::arg("beta") = 0.3, py::arg("lambda_") = 0.05,
        py::arg("level") = 0.95, py::arg("scale") = 100.0);

  m.def("fit_pairs",
        [](const std::vector<std::pair<double, double>>& pairs, double alpha, double beta,
           double lambda, double level, double tie_tol) {
          Dataset ds;
          ds.source = "<python>";
          for (const auto& [x1, x2] : pairs) ds.pairs.emplace_back(x1, x2);
          FitCommandOptions options;
          options.fixed = FixedShape(alpha, beta, lambda);
          options.level = level;
          options.tie_tol = tie_tol;
          return report_to_dict(cmd_fit(ds, options));
        },
        py::arg("pairs"), py::arg("alpha"), py::arg("beta"), py::arg("lambda_"),
        py::arg("level") = 0.95, py::arg("tie_tol") = 0.0);

  m.def("nfl_pairs", [](double scale) {
    const auto ds = embedded_nfl_dataset(scale);
    py::list out;
    for (const auto& pr : ds.pairs) out.append(py::make_tuple(pr.x1, pr.x2));
    return out;
  }, py::arg("scale") = 100.0);
}
