#pragma once

#include <Eigen/Core>

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gmix/errors.hpp"
#include "gmix/mixture.hpp"

namespace gmix {

// Pick a column by header name or zero-based index.
struct ColumnSelector {
  std::optional<std::string> name;
  std::optional<int> index;

  static ColumnSelector by_name(std::string n) { return {std::move(n), {}}; }
  static ColumnSelector by_index(int i) { return {{}, i}; }

  // "price" -> name, "2" -> index.
  static ColumnSelector parse(const std::string& text);
};

// One-dimensional return series with a provenance note.
struct ReturnSeries {
  Eigen::ArrayXd values;
  std::string source;
};

// Reads one numeric column from comma- or tab-delimited text (delimiter
// autodetected from the first line). Locale-independent: decimal point only.
// Throws ParseError (with line number) and MissingColumn.
std::vector<double> load_series(const std::filesystem::path& path,
                                const ColumnSelector& column, bool has_header);

// First differences: values[t] = prices[t+1] - prices[t]. With log_returns
// set, log price ratios instead (prices must be positive). Throws TooShort.
ReturnSeries prices_to_returns(const Eigen::ArrayXd& prices, bool log_returns = false);

struct HistogramSpec {
  std::optional<int> bin_count;  // default: Freedman-Diaconis rule
  std::optional<std::pair<double, double>> range;
};

struct HistogramBin {
  double center = 0.0;
  double relative_count = 0.0;
};

// Relative-count histogram; counts sum to 1. Bins cover [min, max] of the
// data unless an explicit range is given (out-of-range values are dropped
// and the kept values renormalized).
std::vector<HistogramBin> histogram(const Eigen::ArrayXd& data,
                                    const HistogramSpec& spec = {});

// Evenly spaced (x, pdf) pairs over [lo, hi], endpoints included exactly.
std::vector<std::pair<double, double>> density_curve(const MixtureModel& model,
                                                     double lo, double hi, int points);

// Shortest round-trip decimal representation of v.
std::string format_double(double v);

// Two-column CSV with a one-line header.
void write_xy_csv(const std::filesystem::path& path, const std::string& x_name,
                  const std::string& y_name,
                  const std::vector<std::pair<double, double>>& rows);

// One value per line, no header.
void write_value_lines(const std::filesystem::path& path, const Eigen::ArrayXd& values);

}  // namespace gmix
