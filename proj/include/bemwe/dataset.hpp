#ifndef BEMWE_DATASET_HPP
#define BEMWE_DATASET_HPP

#include <array>
#include <filesystem>
#include <string>
#include <vector>

#include "bemwe/bivariate.hpp"

namespace bemwe {

/// A loaded bivariate dataset. pairs hold the working values, i.e. the raw
/// input divided by scale.
struct Dataset {
  std::vector<BivariatePair> pairs;
  double scale = 1.0;
  std::string source;

  BivariateSample sample(double tie_tol = 0.0) const { return {pairs, tie_tol}; }
};

/// Reads a two-column CSV (comma or whitespace delimited, optional header
/// detected by a non-numeric first row) and divides every value by scale.
/// Malformed rows, negative values, a wrong column count or an empty file
/// raise InputError with the line number.
Dataset load_csv(const std::filesystem::path& path, double scale = 1.0);

/// Same parser over an in-memory buffer; source labels error messages.
Dataset parse_csv(const std::string& text, double scale = 1.0,
                  const std::string& source = "<memory>");

/// The 1986 American Football League first-score dataset: 42 pairs of game
/// times, each stored as the mmss-encoded number (2:05 becomes 205). Loading
/// at the default scale 100 yields the conventional working values (2.05, ...).
/// X1 is the time to the first field goal, X2 the time to the first touchdown;
/// ties are converted touchdowns and are encoded exactly.
const std::array<std::array<double, 2>, 42>& nfl_raw_rows();

Dataset embedded_nfl_dataset(double scale = 100.0);

}  // namespace bemwe

#endif
