#pragma once

#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "ppbench/benchmark.hpp"
#include "ppbench/casestudy.hpp"
#include "ppbench/estimation.hpp"
#include "ppbench/gof.hpp"
#include "ppbench/positions.hpp"

namespace ppbench::app {

inline constexpr std::string_view kSchemaVersion = "report-v1";

using nlohmann::json;

/// Shortest round-trip decimal form, independent of the C locale.
std::string format_number(double value);

/// Reads the single-column input format: header `value`, one number per row.
/// Blank lines are skipped; anything else non-numeric is a DomainError.
std::vector<double> read_values_csv(std::istream& in);

json fit_json(const FitResult& fit, const PositionFormula& positions, std::size_t n);
json quantile_json(const FitResult& fit, const std::vector<QuantileEstimate>& estimates);
json mad_json(const MadResult& mad);
json gof_json(const MadResult& mad, std::string_view params, std::optional<double> log_threshold);
json benchmark_json(const BenchmarkReport& report);
json bradyseism_json(const CaseStudyReport& report);

/// Wraps a payload with the schema tag and report kind.
json envelope(std::string_view kind, json payload);

void write_positions_csv(std::ostream& out, const PositionSet& set);
void write_benchmark_csv(std::ostream& out, const BenchmarkReport& report);
void write_exceedance_csv(std::ostream& out, const CaseStudyReport& report);

/// Two-space indented JSON followed by a newline.
void write_json(std::ostream& out, const json& doc);

}  // namespace ppbench::app
