#include "bemwe/dataset.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "bemwe/errors.hpp"

namespace bemwe {

namespace {

// Splits on commas and/or runs of whitespace; empty fields from ",," count.
std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::string current;
  bool pending_comma = false;
  auto flush = [&]() {
    if (!current.empty() || pending_comma) fields.push_back(current);
    current.clear();
  };
  for (char ch : line) {
    if (ch == ',') {
      flush();
      pending_comma = true;
    } else if (std::isspace(static_cast<unsigned char>(ch))) {
      if (!current.empty()) flush();
    } else {
      current.push_back(ch);
    }
  }
  flush();
  return fields;
}

bool parse_double(const std::string& field, double& out) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [ptr, ec] = std::from_chars(begin, end, out);
  return ec == std::errc() && ptr == end;
}

}  // namespace

Dataset parse_csv(const std::string& text, double scale, const std::string& source) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InputError("scale must be positive and finite");
  }
  Dataset ds;
  ds.scale = scale;
  ds.source = source;

  std::istringstream stream(text);
  std::string line;
  std::size_t line_no = 0;
  bool seen_data = false;
  while (std::getline(stream, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto fields = split_fields(line);
    if (fields.empty()) continue;  // blank line
    if (fields.size() != 2) {
      throw InputError(source + ":" + std::to_string(line_no) + ": expected 2 columns, found " +
                       std::to_string(fields.size()));
    }
    double v1 = 0.0, v2 = 0.0;
    const bool numeric = parse_double(fields[0], v1) && parse_double(fields[1], v2);
    if (!numeric) {
      if (!seen_data && line_no == 1) continue;  // header row
      throw InputError(source + ":" + std::to_string(line_no) + ": non-numeric cell");
    }
    if (v1 < 0.0 || v2 < 0.0 || !std::isfinite(v1) || !std::isfinite(v2)) {
      throw InputError(source + ":" + std::to_string(line_no) +
                       ": values must be finite and non-negative");
    }
    ds.pairs.emplace_back(v1 / scale, v2 / scale);
    seen_data = true;
  }
  if (ds.pairs.empty()) {
    throw InputError(source + ": no data rows");
  }
  return ds;
}

Dataset load_csv(const std::filesystem::path& path, double scale) {
  std::ifstream in(path);
  if (!in) {
    throw InputError("cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_csv(buffer.str(), scale, path.string());
}

Dataset embedded_nfl_dataset(double scale) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw InputError("scale must be positive and finite");
  }
  Dataset ds;
  ds.scale = scale;
  ds.source = "nfl-1986-embedded";
  for (const auto& row : nfl_raw_rows()) {
    ds.pairs.emplace_back(row[0] / scale, row[1] / scale);
  }
  return ds;
}

}  // namespace bemwe
