#include "bemwe/report.hpp"

#include <iomanip>
#include <json.hpp>
#include <sstream>

namespace bemwe {

namespace {

using nlohmann::json;

json matrix_to_json(const Matrix3& m) {
  json rows = json::array();
  for (const auto& row : m) rows.push_back({row[0], row[1], row[2]});
  return rows;
}

Matrix3 matrix_from_json(const json& j) {
  Matrix3 m{};
  for (int i = 0; i < 3; ++i)
    for (int k = 0; k < 3; ++k) m[i][k] = j.at(i).at(k).get<double>();
  return m;
}

}  // namespace

std::string ReportDocument::to_text() const {
  std::ostringstream out;
  out << std::setprecision(6);
  out << "bemwe fit report (v" << tool_version << ")\n";
  out << "source: " << source << "\n";
  out << "n: " << n << "  n1: " << n1 << "  n2: " << n2 << "  n3: " << n3 << "\n";
  out << "scale: " << scale << "  tie_tol: " << tie_tol << "\n";
  out << "fixed: alpha=" << fit.fixed.alpha << " beta=" << fit.fixed.beta
      << " lambda=" << fit.fixed.lambda << "\n";
  if (seed) out << "seed: " << *seed << "\n";
  out << "converged: " << (fit.converged ? "yes" : "no") << "  iterations: " << fit.iterations
      << "  score_sup_norm: " << fit.score_sup_norm << "\n";
  if (!fit.diagnostic.empty()) out << "diagnostic: " << fit.diagnostic << "\n";
  out << "loglik: " << fit.loglik << "\n";
  const char* names[] = {"gamma1", "gamma2", "gamma3"};
  out << "estimates:\n";
  for (int i = 0; i < 3; ++i) {
    out << "  " << names[i] << ": " << fit.estimates[i] << "  (var "
        << fit.covariance[i][i] << ")\n";
  }
  out << "covariance:\n";
  for (int i = 0; i < 3; ++i) {
    out << "  [" << fit.covariance[i][0] << ", " << fit.covariance[i][1] << ", "
        << fit.covariance[i][2] << "]\n";
  }
  out << "confidence_intervals (level " << fit.level << "):\n";
  for (int i = 0; i < 3; ++i) {
    out << "  " << names[i] << ": [" << fit.conf_intervals[i].lower << ", "
        << fit.conf_intervals[i].upper << "]";
    if (fit.ci_lower_unclamped[i] < 0.0) {
      out << "  (unclamped lower " << fit.ci_lower_unclamped[i] << ")";
    }
    out << "\n";
  }
  return out.str();
}

std::string ReportDocument::to_json_string() const {
  json j;
  j["tool_version"] = tool_version;
  j["source"] = source;
  j["n"] = n;
  j["n1"] = n1;
  j["n2"] = n2;
  j["n3"] = n3;
  j["scale"] = scale;
  j["tie_tol"] = tie_tol;
  if (seed) j["seed"] = *seed;

  json f;
  f["estimates"] = {fit.estimates[0], fit.estimates[1], fit.estimates[2]};
  f["loglik"] = fit.loglik;
  f["covariance"] = matrix_to_json(fit.covariance);
  json cis = json::array();
  for (const auto& ci : fit.conf_intervals) cis.push_back({ci.lower, ci.upper});
  f["conf_intervals"] = cis;
  f["ci_lower_unclamped"] = {fit.ci_lower_unclamped[0], fit.ci_lower_unclamped[1],
                             fit.ci_lower_unclamped[2]};
  f["level"] = fit.level;
  f["iterations"] = fit.iterations;
  f["converged"] = fit.converged;
  f["boundary"] = fit.boundary;
  f["score_sup_norm"] = fit.score_sup_norm;
  f["diagnostic"] = fit.diagnostic;
  f["fixed"] = {{"alpha", fit.fixed.alpha}, {"beta", fit.fixed.beta},
                {"lambda", fit.fixed.lambda}};
  j["fit"] = f;
  return j.dump(2) + "\n";
}

ReportDocument ReportDocument::from_json_string(const std::string& text) {
  const json j = json::parse(text);
  ReportDocument doc;
  doc.tool_version = j.at("tool_version").get<std::string>();
  doc.source = j.at("source").get<std::string>();
  doc.n = j.at("n").get<std::size_t>();
  doc.n1 = j.at("n1").get<std::size_t>();
  doc.n2 = j.at("n2").get<std::size_t>();
  doc.n3 = j.at("n3").get<std::size_t>();
  doc.scale = j.at("scale").get<double>();
  doc.tie_tol = j.at("tie_tol").get<double>();
  if (j.contains("seed")) doc.seed = j.at("seed").get<std::uint64_t>();

  const json& f = j.at("fit");
  FitReport fit;
  for (int i = 0; i < 3; ++i) fit.estimates[i] = f.at("estimates").at(i).get<double>();
  fit.loglik = f.at("loglik").get<double>();
  fit.covariance = matrix_from_json(f.at("covariance"));
  for (int i = 0; i < 3; ++i) {
    fit.conf_intervals[i] = {f.at("conf_intervals").at(i).at(0).get<double>(),
                             f.at("conf_intervals").at(i).at(1).get<double>()};
    fit.ci_lower_unclamped[i] = f.at("ci_lower_unclamped").at(i).get<double>();
  }
  fit.level = f.at("level").get<double>();
  fit.iterations = f.at("iterations").get<int>();
  fit.converged = f.at("converged").get<bool>();
  fit.boundary = f.at("boundary").get<bool>();
  fit.score_sup_norm = f.at("score_sup_norm").get<double>();
  fit.diagnostic = f.at("diagnostic").get<std::string>();
  fit.fixed = FixedShape(f.at("fixed").at("alpha").get<double>(),
                         f.at("fixed").at("beta").get<double>(),
                         f.at("fixed").at("lambda").get<double>());
  doc.fit = fit;
  return doc;
}

}  // namespace bemwe
