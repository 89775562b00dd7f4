#include "ppbench/app/svg.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "ppbench/app/report.hpp"
#include "ppbench/errors.hpp"
#include "ppbench/positions.hpp"

namespace ppbench::app {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 480.0;
constexpr double kLeft = 70.0;
constexpr double kRight = 30.0;
constexpr double kTop = 70.0;
constexpr double kBottom = 60.0;

std::string fixed(double v, int digits = 2) {
  if (std::abs(v) < 0.5 * std::pow(10.0, -digits)) v = 0.0;
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed, digits);
  return std::string(buf, res.ptr);
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo;
  double hi;
};

Range padded(double lo, double hi) {
  if (hi <= lo) {
    lo -= 0.5;
    hi += 0.5;
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad};
}

double nice_step(double span) {
  const double raw = span / 6.0;
  const double mag = std::pow(10.0, std::floor(std::log10(raw)));
  for (double m : {1.0, 2.0, 5.0}) {
    if (m * mag >= raw) return m * mag;
  }
  return 10.0 * mag;
}

}  // namespace

std::vector<double> PlotSpec::default_ticks() {
  return {0.01, 0.05, 0.1, 0.25, 0.5, 0.75, 0.9, 0.95, 0.99};
}

void PlotSpec::validate() const {
  if (points.size() < 2) throw DomainError("plot needs at least 2 points");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].y < points[i - 1].y) throw DomainError("plot points must be sorted by y");
  }
  for (const auto& p : points) {
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw DomainError("plot point is not finite");
  }
  for (std::size_t i = 0; i < tick_probabilities.size(); ++i) {
    const double f = tick_probabilities[i];
    if (!(f > 0.0 && f < 1.0)) throw DomainError("tick probability outside (0,1)");
    if (i > 0 && f <= tick_probabilities[i - 1]) throw DomainError("tick probabilities must increase");
  }
  if (fitted_line && !(std::isfinite(fitted_line->a) && std::isfinite(fitted_line->b))) {
    throw DomainError("fitted line is not finite");
  }
}

std::string render_svg(const PlotSpec& spec) {
  spec.validate();
  const Family axis = spec.family == Family::LogNormal3 ? Family::Normal : spec.family;

  double ylo = spec.points.front().y, yhi = spec.points.back().y;
  double xlo = spec.points.front().x, xhi = xlo;
  for (const auto& p : spec.points) {
    xlo = std::min(xlo, p.x);
    xhi = std::max(xhi, p.x);
  }
  const Range hr = padded(ylo, yhi);
  Range vr = padded(xlo, xhi);
  if (spec.fitted_line) {
    const double l0 = spec.fitted_line->a + spec.fitted_line->b * hr.lo;
    const double l1 = spec.fitted_line->a + spec.fitted_line->b * hr.hi;
    vr = padded(std::min({xlo, l0, l1}), std::max({xhi, l0, l1}));
  }

  const double pw = kWidth - kLeft - kRight;
  const double ph = kHeight - kTop - kBottom;
  auto sx = [&](double y) { return kLeft + (y - hr.lo) / (hr.hi - hr.lo) * pw; };
  auto sy = [&](double x) { return kTop + (vr.hi - x) / (vr.hi - vr.lo) * ph; };

  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << fixed(kWidth, 0) << "\" height=\""
    << fixed(kHeight, 0) << "\" viewBox=\"0 0 " << fixed(kWidth, 0) << ' ' << fixed(kHeight, 0)
    << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  o << "  <rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!spec.title.empty()) {
    o << "  <text class=\"title\" x=\"" << fixed(kWidth / 2) << "\" y=\"20.00\" text-anchor=\"middle\" font-size=\"14\">"
      << escape(spec.title) << "</text>\n";
  }
  o << "  <rect class=\"frame\" x=\"" << fixed(kLeft) << "\" y=\"" << fixed(kTop) << "\" width=\""
    << fixed(pw) << "\" height=\"" << fixed(ph) << "\" fill=\"none\" stroke=\"black\"/>\n";

  // Reduced-variate axis (bottom).
  o << "  <g class=\"axis-reduced\">\n";
  const double hs = nice_step(hr.hi - hr.lo);
  for (double t = std::ceil(hr.lo / hs) * hs; t <= hr.hi + 1e-12; t += hs) {
    const double px = sx(t);
    o << "    <line x1=\"" << fixed(px) << "\" y1=\"" << fixed(kTop + ph) << "\" x2=\"" << fixed(px)
      << "\" y2=\"" << fixed(kTop + ph + 5) << "\" stroke=\"black\"/>\n";
    o << "    <text x=\"" << fixed(px) << "\" y=\"" << fixed(kTop + ph + 18)
      << "\" text-anchor=\"middle\">" << fixed(t, hs < 1 ? 1 : 0) << "</text>\n";
  }
  o << "    <text x=\"" << fixed(kLeft + pw / 2) << "\" y=\"" << fixed(kHeight - 15)
    << "\" text-anchor=\"middle\">reduced variate (" << to_string(axis) << ")</text>\n";
  o << "  </g>\n";

  // Probability axis (top).
  o << "  <g class=\"axis-probability\">\n";
  for (double f : spec.tick_probabilities) {
    const double t = reduced_quantile(axis, f);
    if (t < hr.lo || t > hr.hi) continue;
    const double px = sx(t);
    o << "    <line x1=\"" << fixed(px) << "\" y1=\"" << fixed(kTop) << "\" x2=\"" << fixed(px)
      << "\" y2=\"" << fixed(kTop + ph) << "\" stroke=\"#dddddd\"/>\n";
    o << "    <text x=\"" << fixed(px) << "\" y=\"" << fixed(kTop - 8)
      << "\" text-anchor=\"middle\">" << escape(format_number(f)) << "</text>\n";
  }
  o << "    <text x=\"" << fixed(kLeft + pw / 2) << "\" y=\"" << fixed(kTop - 28)
    << "\" text-anchor=\"middle\">F</text>\n";
  o << "  </g>\n";

  // Observation axis (left).
  o << "  <g class=\"axis-value\">\n";
  const double vs = nice_step(vr.hi - vr.lo);
  for (double t = std::ceil(vr.lo / vs) * vs; t <= vr.hi + 1e-12; t += vs) {
    const double py = sy(t);
    o << "    <line x1=\"" << fixed(kLeft - 5) << "\" y1=\"" << fixed(py) << "\" x2=\"" << fixed(kLeft)
      << "\" y2=\"" << fixed(py) << "\" stroke=\"black\"/>\n";
    o << "    <text x=\"" << fixed(kLeft - 8) << "\" y=\"" << fixed(py + 4)
      << "\" text-anchor=\"end\">" << fixed(t, vs < 0.1 ? 2 : (vs < 1 ? 1 : 0)) << "</text>\n";
  }
  o << "    <text x=\"15.00\" y=\"" << fixed(kTop + ph / 2) << "\" text-anchor=\"middle\" transform=\"rotate(-90 15.00 "
    << fixed(kTop + ph / 2) << ")\">" << escape(spec.value_label) << "</text>\n";
  o << "  </g>\n";

  if (spec.fitted_line) {
    const auto& l = *spec.fitted_line;
    o << "  <line class=\"fit\" x1=\"" << fixed(sx(hr.lo)) << "\" y1=\"" << fixed(sy(l.a + l.b * hr.lo))
      << "\" x2=\"" << fixed(sx(hr.hi)) << "\" y2=\"" << fixed(sy(l.a + l.b * hr.hi))
      << "\" stroke=\"#c0392b\" stroke-width=\"1.5\"/>\n";
  }
  o << "  <g class=\"markers\" fill=\"none\" stroke=\"#1f4e79\">\n";
  for (const auto& p : spec.points) {
    o << "    <circle class=\"marker\" cx=\"" << fixed(sx(p.y)) << "\" cy=\"" << fixed(sy(p.x))
      << "\" r=\"3\"/>\n";
  }
  o << "  </g>\n";
  o << "</svg>\n";
  return o.str();
}

void emit_probability_paper(const PlotSpec& spec, const std::filesystem::path& path) {
  const std::string text = render_svg(spec);
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path.string() + " for writing");
  out << text;
  if (!out) throw Error("write failed: " + path.string());
}

PlotSpec month_plot(const MonthReport& month, const PositionFormula& positions) {
  PlotSpec spec;
  spec.family = Family::Normal;
  spec.title = "Month " + month.label + " (" + month.calendar + ")";
  spec.value_label = "log(magnitude - " + format_number(month.fit.threshold) + ")";
  const auto y = reduced_regressors(positions, Family::Normal, static_cast<int>(month.log_values.size()));
  for (std::size_t i = 0; i < y.size(); ++i) spec.points.push_back({y[i], month.log_values[i]});
  if (month.status == "ok") spec.fitted_line = PlotSpec::Line{month.fit.location, month.fit.scale};
  return spec;
}

}  // namespace ppbench::app
