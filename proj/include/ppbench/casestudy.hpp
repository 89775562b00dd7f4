#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ppbench/estimation.hpp"
#include "ppbench/gof.hpp"
#include "ppbench/positions.hpp"

namespace ppbench {

/// Earthquake magnitudes (resolution 0.1) for one lunar month of the
/// 1983-1984 Campi Flegrei crisis.
struct MagnitudeRecord {
  std::string label;     // I .. XIII
  std::string calendar;  // catalogue heading, e.g. "July 1983"
  std::vector<double> magnitudes;
};

/// The 13 bundled months in order I..XIII. Throws DataCorruption if the
/// embedded values fail their checksums.
std::vector<MagnitudeRecord> load_dataset();

struct CaseStudyOptions {
  double threshold = 1.0;
  PositionFormula positions = PositionFormula::proposed(Family::Normal, 4);
  Method method = Method::OLS;       // OLS or GLS
  double critical_magnitude = 5.0;
  // Magnitudes at or below the threshold have no log(x - c); when true they
  // are left out (and counted), otherwise they raise ThresholdViolation.
  bool drop_at_threshold = true;
};

struct MonthReport {
  std::string label;
  std::string calendar;
  std::size_t n_total = 0;
  std::size_t n_used = 0;
  std::vector<double> log_values;  // sorted log(x - c)
  FitResult fit;                   // LogNormal3, on the log scale
  double exceedance = 0.0;         // P(X > critical magnitude)
  MadResult mad_self;
  std::optional<MadResult> mad_cumulative;
  std::string status = "ok";
};

MonthReport analyze_month(const MagnitudeRecord& record, const CaseStudyOptions& options = {});

struct CaseStudyReport {
  CaseStudyOptions options;
  std::vector<MonthReport> months;
};

/// All months, with the cumulative-parameter mAD: month m is tested against
/// the mean and sd of the pooled log data of months 1..m-1 (month I against
/// its own estimates).
CaseStudyReport run_case_study(const CaseStudyOptions& options = {});

/// log(x - c) of the magnitudes strictly above c, sorted ascending (stable).
std::vector<double> log_shifted(const MagnitudeRecord& record, double threshold,
                                bool drop_at_threshold);

}  // namespace ppbench
