#include "ppbench/gof.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <vector>

#include "ppbench/distributions.hpp"
#include "ppbench/errors.hpp"

namespace ppbench {

namespace {

MadResult evaluate(std::span<const double> x, double mean, double sd) {
  const std::size_t n = x.size();
  std::vector<double> sorted(x.begin(), x.end());
  std::sort(sorted.begin(), sorted.end());

  MadResult result;
  result.n = n;
  result.mean = mean;
  result.sd = sd;

  constexpr double kTiny = std::numeric_limits<double>::min();
  std::vector<double> log_u(n);
  std::vector<double> log_1mu(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double z = (sorted[i] - mean) / sd;
    // Lower and upper tails computed separately so neither saturates early.
    double u = normal_cdf(z);
    double v = normal_cdf(-z);
    if (u < kTiny || v < kTiny) {
      result.tie_saturated = true;
      u = std::max(u, kTiny);
      v = std::max(v, kTiny);
    }
    log_u[i] = std::log(u);
    log_1mu[i] = std::log(v);
  }

  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    acc += (2.0 * (i + 1) - 1.0) * (log_u[i] + log_1mu[n - 1 - i]);
  }
  const double nn = static_cast<double>(n);
  result.a2_raw = -nn - acc / nn;
  result.a2_modified = result.a2_raw * mad_modification_factor(n);
  if (result.a2_modified <= MadResult::kCritical5pct) {
    result.verdict = MadVerdict::Pass5pct;
  } else if (result.a2_modified <= MadResult::kCritical2_5pct) {
    result.verdict = MadVerdict::Pass2_5pct;
  } else {
    result.verdict = MadVerdict::Fail;
  }
  return result;
}

}  // namespace

std::string_view to_string(MadVerdict verdict) {
  switch (verdict) {
    case MadVerdict::Pass5pct:
      return "pass-5pct";
    case MadVerdict::Pass2_5pct:
      return "pass-2.5pct";
    case MadVerdict::Fail:
      return "fail";
  }
  return "unknown";
}

double mad_modification_factor(std::size_t n) {
  const double nn = static_cast<double>(n);
  return 1.0 + 0.75 / nn + 2.25 / (nn * nn);
}

MadResult mad_case3(std::span<const double> x) {
  if (x.size() < 5) throw DomainError("mAD test needs n >= 5");
  const double n = static_cast<double>(x.size());
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  if (!(ss > 0.0)) throw DegenerateError("mAD test: sample has zero variance");
  return evaluate(x, mean, std::sqrt(ss / (n - 1.0)));
}

MadResult mad_known_params(std::span<const double> x, double mean, double sd) {
  if (x.size() < 5) throw DomainError("mAD test needs n >= 5");
  if (!(sd > 0.0) || !std::isfinite(sd) || !std::isfinite(mean)) {
    throw DomainError("mAD test: sd must be finite and > 0");
  }
  return evaluate(x, mean, sd);
}

}  // namespace ppbench
