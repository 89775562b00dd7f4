#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppbench/casestudy.hpp"
#include "ppbench/distributions.hpp"

namespace ppbench::app {

/// A probability-paper plot: reduced variate on the abscissa, observations on
/// the ordinate, probability ticks on a secondary top axis.
struct PlotSpec {
  struct Point {
    double y;  // reduced variate
    double x;  // observation
  };
  struct Line {
    double a;
    double b;
  };

  std::vector<Point> points;  // sorted by y
  std::optional<Line> fitted_line;
  Family family = Family::Normal;
  std::vector<double> tick_probabilities = default_ticks();
  std::string title;
  std::string value_label = "x";

  static std::vector<double> default_ticks();
  /// Throws DomainError on fewer than 2 points, unsorted points or bad ticks.
  void validate() const;
};

/// Deterministic SVG text for `spec`.
std::string render_svg(const PlotSpec& spec);

/// Writes render_svg(spec) to `path`; throws Error on I/O failure.
void emit_probability_paper(const PlotSpec& spec, const std::filesystem::path& path);

/// Plot of one case-study month on log-normal paper (log(x - c) against y).
PlotSpec month_plot(const MonthReport& month, const PositionFormula& positions);

}  // namespace ppbench::app
