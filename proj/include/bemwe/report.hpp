#ifndef BEMWE_REPORT_HPP
#define BEMWE_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>

#include "bemwe/inference.hpp"

namespace bemwe {

/// Full record of a fit run: input summary, fixed shape, fit results, tool
/// version and seed where one was used. Serializes to a human-readable text
/// block (6 significant digits) and to JSON at full precision; the JSON form
/// round-trips losslessly.
struct ReportDocument {
  std::string tool_version;
  std::string source;
  std::size_t n = 0, n1 = 0, n2 = 0, n3 = 0;
  double scale = 1.0;
  double tie_tol = 0.0;
  FitReport fit;
  std::optional<std::uint64_t> seed;

  std::string to_text() const;
  std::string to_json_string() const;
  static ReportDocument from_json_string(const std::string& json);

  bool operator==(const ReportDocument&) const = default;
};

}  // namespace bemwe

#endif
