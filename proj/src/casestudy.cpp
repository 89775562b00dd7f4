#include "ppbench/casestudy.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "bradyseism_data.hpp"
#include "ppbench/errors.hpp"

namespace ppbench {

namespace {

std::uint64_t fnv1a(const std::vector<long>& tenths) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (long v : tenths) {
    h ^= static_cast<std::uint64_t>(v);
    h *= 0x100000001b3ULL;
  }
  return h;
}

void mean_sd(const std::vector<double>& x, double& mean, double& sd) {
  const double n = static_cast<double>(x.size());
  mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  sd = std::sqrt(ss / (n - 1.0));
}

}  // namespace

std::vector<MagnitudeRecord> load_dataset() {
  std::vector<MagnitudeRecord> out;
  for (const auto& raw : detail::raw_months()) {
    std::vector<long> tenths;
    for (double v : raw.values) tenths.push_back(std::lround(v * 10.0));
    const long sum = std::accumulate(tenths.begin(), tenths.end(), 0L);
    if (raw.values.size() != raw.count || sum != raw.tenths_sum || fnv1a(tenths) != raw.fnv1a) {
      throw DataCorruption(std::string("bundled magnitudes for month ") + raw.label +
                           " fail their checksum");
    }
    out.push_back({raw.label, raw.calendar, {raw.values.begin(), raw.values.end()}});
  }
  return out;
}

std::vector<double> log_shifted(const MagnitudeRecord& record, double threshold,
                                bool drop_at_threshold) {
  std::vector<double> out;
  out.reserve(record.magnitudes.size());
  for (double m : record.magnitudes) {
    if (m <= threshold) {
      if (drop_at_threshold) continue;
      throw ThresholdViolation("month " + record.label + ": magnitude " + std::to_string(m) +
                               " is not above the threshold " + std::to_string(threshold));
    }
    out.push_back(std::log(m - threshold));
  }
  std::stable_sort(out.begin(), out.end());
  return out;
}

MonthReport analyze_month(const MagnitudeRecord& record, const CaseStudyOptions& options) {
  MonthReport report;
  report.label = record.label;
  report.calendar = record.calendar;
  report.n_total = record.magnitudes.size();
  report.log_values = log_shifted(record, options.threshold, options.drop_at_threshold);
  report.n_used = report.log_values.size();
  const int n = static_cast<int>(report.n_used);
  if (n < 5) throw DomainError("month " + record.label + ": fewer than 5 usable magnitudes");

  FitResult fit;
  const auto y = reduced_regressors(options.positions, Family::Normal, n);
  switch (options.method) {
    case Method::OLS:
      fit = fit_ols(report.log_values, y, Family::Normal);
      break;
    case Method::GLS: {
      auto moments = build_moments(Family::Normal, n, 4, CovMode::Expansion);
      moments.means = y;
      fit = fit_gls(report.log_values, moments);
      break;
    }
    case Method::MLE:
      fit = fit_mle(report.log_values, Family::Normal);
      break;
  }
  report.fit = as_lognormal3(std::move(fit), options.threshold);
  report.exceedance = exceedance_probability(report.fit, options.critical_magnitude);
  report.mad_self = mad_case3(report.log_values);
  return report;
}

CaseStudyReport run_case_study(const CaseStudyOptions& options) {
  CaseStudyReport report{options, {}};
  std::vector<double> pooled;
  for (const auto& record : load_dataset()) {
    MonthReport month;
    try {
      month = analyze_month(record, options);
      if (pooled.empty()) {
        month.mad_cumulative = month.mad_self;
      } else {
        double mean = 0.0;
        double sd = 0.0;
        mean_sd(pooled, mean, sd);
        month.mad_cumulative = mad_known_params(month.log_values, mean, sd);
      }
      pooled.insert(pooled.end(), month.log_values.begin(), month.log_values.end());
    } catch (const Error& e) {
      month.label = record.label;
      month.calendar = record.calendar;
      month.n_total = record.magnitudes.size();
      month.status = e.what();
    }
    report.months.push_back(std::move(month));
  }
  return report;
}

}  // namespace ppbench
