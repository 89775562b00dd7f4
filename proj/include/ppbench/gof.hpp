#pragma once

#include <span>
#include <string_view>

namespace ppbench {

enum class MadVerdict { Pass5pct, Pass2_5pct, Fail };

std::string_view to_string(MadVerdict verdict);

/// Modified Anderson-Darling statistic for normality (upper-tail test).
struct MadResult {
  static constexpr double kCritical5pct = 0.787;
  static constexpr double kCritical2_5pct = 0.918;

  double a2_raw = 0.0;
  double a2_modified = 0.0;
  std::size_t n = 0;
  MadVerdict verdict = MadVerdict::Fail;
  double mean = 0.0;  // parameters the statistic was evaluated with
  double sd = 0.0;
  bool tie_saturated = false;  // some u_(i) rounded to 0 or 1 and was clamped
};

/// A^2 = -n - (1/n) sum (2i-1)[ln u_(i) + ln(1 - u_(n+1-i))], u = Phi((x - mean)/sd),
/// with mean and sd (divisor n-1) estimated from x, then multiplied by
/// 1 + 0.75/n + 2.25/n^2. Requires n >= 5 and nonzero spread.
MadResult mad_case3(std::span<const double> x);

/// Same statistic with externally supplied (mean, sd); the small-sample
/// factor is still applied.
MadResult mad_known_params(std::span<const double> x, double mean, double sd);

/// 1 + 0.75/n + 2.25/n^2.
double mad_modification_factor(std::size_t n);

}  // namespace ppbench
