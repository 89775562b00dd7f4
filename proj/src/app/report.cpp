#include "ppbench/app/report.hpp"

#include <charconv>
#include <cmath>
#include <sstream>

#include "ppbench/errors.hpp"

namespace ppbench::app {

namespace {

json optional_number(const std::optional<double>& v) {
  if (!v || !std::isfinite(*v)) return nullptr;
  return *v;
}

json index_json(const std::optional<IndexEstimate>& e) {
  if (!e) return nullptr;
  return json{{"value", e->value}, {"std_error", e->std_error}};
}

std::string trim(std::string s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

}  // namespace

std::string format_number(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::vector<double> read_values_csv(std::istream& in) {
  std::string line;
  std::size_t line_no = 0;
  bool header = false;
  std::vector<double> values;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    if (!header) {
      if (line != "value") throw DomainError("input CSV: expected header 'value', got '" + line + "'");
      header = true;
      continue;
    }
    double v = 0.0;
    const auto res = std::from_chars(line.data(), line.data() + line.size(), v);
    if (res.ec != std::errc() || res.ptr != line.data() + line.size() || !std::isfinite(v)) {
      throw DomainError("input CSV line " + std::to_string(line_no) + ": not a number: '" + line + "'");
    }
    values.push_back(v);
  }
  if (!header) throw DomainError("input CSV: missing header 'value'");
  return values;
}

json envelope(std::string_view kind, json payload) {
  json doc;
  doc["schema"] = kSchemaVersion;
  doc["kind"] = kind;
  for (auto& [key, value] : payload.items()) doc[key] = value;
  return doc;
}

json fit_json(const FitResult& fit, const PositionFormula& positions, std::size_t n) {
  double ss = 0.0;
  for (double r : fit.residuals) ss += r * r;
  json doc{
      {"a", fit.location},
      {"b", fit.scale},
      {"family", to_string(fit.family)},
      {"method", to_string(fit.method)},
      {"positions", fit.method == Method::MLE ? json(nullptr) : json(positions.name())},
      {"n", n},
  };
  if (fit.family == Family::LogNormal3) doc["threshold"] = fit.threshold;
  doc["diagnostics"] = {
      {"residual_rms", fit.residuals.empty() ? json(nullptr) : json(std::sqrt(ss / fit.residuals.size()))},
      {"ridge", fit.ridge},
      {"design", fit.design},
  };
  return doc;
}

json quantile_json(const FitResult& fit, const std::vector<QuantileEstimate>& estimates) {
  json rows = json::array();
  for (const auto& q : estimates) {
    rows.push_back({{"return_period", q.return_period}, {"level", q.level}, {"value", q.value}});
  }
  json doc{{"a", fit.location}, {"b", fit.scale}, {"family", to_string(fit.family)},
           {"method", to_string(fit.method)}, {"quantiles", rows}};
  if (fit.family == Family::LogNormal3) doc["threshold"] = fit.threshold;
  return doc;
}

json mad_json(const MadResult& mad) {
  return {
      {"n", mad.n},
      {"a2_raw", mad.a2_raw},
      {"a2_modified", mad.a2_modified},
      {"mean", mad.mean},
      {"sd", mad.sd},
      {"verdict", to_string(mad.verdict)},
      {"tie_saturated", mad.tie_saturated},
  };
}

json gof_json(const MadResult& mad, std::string_view params, std::optional<double> log_threshold) {
  json doc = mad_json(mad);
  doc["params"] = params;
  doc["log_threshold"] = optional_number(log_threshold);
  doc["critical_points"] = {{"5pct", MadResult::kCritical5pct}, {"2.5pct", MadResult::kCritical2_5pct}};
  return doc;
}

json benchmark_json(const BenchmarkReport& report) {
  json rows = json::array();
  for (const auto& row : report.rows) {
    rows.push_back({
        {"estimator", row.estimator},
        {"label", row.label},
        {"is_mle", row.is_mle},
        {"iqse", index_json(row.iqse)},
        {"iqse_grid", optional_number(row.iqse_grid)},
        {"ifse", index_json(row.ifse)},
        {"dse", optional_number(row.dse)},
        {"average", optional_number(row.average)},
        {"discarded", row.discarded},
        {"status", row.status},
    });
  }
  return {
      {"config",
       {
           {"family", to_string(report.family)},
           {"n", report.size},
           {"m", report.replicates},
           {"seed", report.seed},
           {"fit_method", to_string(report.fit_method)},
           {"grid_nodes", report.grid_nodes},
           {"location", report.location},
           {"scale", report.scale},
       }},
      {"rows", rows},
  };
}

json bradyseism_json(const CaseStudyReport& report) {
  json months = json::array();
  double max_exceedance = 0.0;
  for (const auto& m : report.months) {
    json row{
        {"label", m.label},
        {"calendar", m.calendar},
        {"n_total", m.n_total},
        {"n_used", m.n_used},
        {"status", m.status},
    };
    if (m.status == "ok") {
      row["a"] = m.fit.location;
      row["b"] = m.fit.scale;
      row["exceedance"] = m.exceedance;
      row["mad_self"] = mad_json(m.mad_self);
      row["mad_cumulative"] = m.mad_cumulative ? mad_json(*m.mad_cumulative) : json(nullptr);
      max_exceedance = std::max(max_exceedance, m.exceedance);
    }
    months.push_back(std::move(row));
  }
  const auto& o = report.options;
  return {
      {"config",
       {
           {"threshold", o.threshold},
           {"positions", o.positions.name()},
           {"method", to_string(o.method)},
           {"critical_magnitude", o.critical_magnitude},
           {"drop_at_threshold", o.drop_at_threshold},
       }},
      {"months", months},
      {"max_exceedance", max_exceedance},
  };
}

void write_positions_csv(std::ostream& out, const PositionSet& set) {
  out << "rank,i,p\n";
  for (int i = 1; i <= set.size; ++i) {
    out << (set.size - i + 1) << ',' << i << ',' << format_number(set.p[i - 1]) << '\n';
  }
}

void write_benchmark_csv(std::ostream& out, const BenchmarkReport& report) {
  auto cell = [](const std::optional<double>& v) { return v ? format_number(*v) : std::string(); };
  auto value = [](const std::optional<IndexEstimate>& e) {
    return e ? format_number(e->value) : std::string();
  };
  auto se = [](const std::optional<IndexEstimate>& e) {
    return e ? format_number(e->std_error) : std::string();
  };
  out << "family,n,m,seed,estimator,iqse,iqse_se,iqse_grid,ifse,ifse_se,dse,average,discarded,status\n";
  for (const auto& row : report.rows) {
    out << to_string(report.family) << ',' << report.size << ',' << report.replicates << ','
        << report.seed << ',' << row.estimator << ',' << value(row.iqse) << ',' << se(row.iqse)
        << ',' << cell(row.iqse_grid) << ',' << value(row.ifse) << ',' << se(row.ifse) << ','
        << cell(row.dse) << ',' << cell(row.average) << ',' << row.discarded << ','
        << (row.status.find(',') == std::string::npos ? row.status : "\"" + row.status + "\"")
        << '\n';
  }
}

void write_exceedance_csv(std::ostream& out, const CaseStudyReport& report) {
  out << "month,calendar,n_used,exceedance\n";
  for (const auto& m : report.months) {
    out << m.label << ',' << m.calendar << ',' << m.n_used << ','
        << (m.status == "ok" ? format_number(m.exceedance) : std::string()) << '\n';
  }
}

void write_json(std::ostream& out, const json& doc) { out << doc.dump(2) << '\n'; }

}  // namespace ppbench::app
