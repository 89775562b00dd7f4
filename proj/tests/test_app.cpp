#include <cmath>
#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "doctest.h"
#include "ppbench/app/cli.hpp"
#include "ppbench/app/report.hpp"
#include "ppbench/app/svg.hpp"
#include "ppbench/errors.hpp"

using namespace ppbench;
using namespace ppbench::app;

namespace {

struct Circle {
  double cx;
  double cy;
};

std::vector<Circle> markers(const std::string& svg) {
  static const std::regex re(R"re(<circle class="marker" cx="([-0-9.]+)" cy="([-0-9.]+)")re");
  std::vector<Circle> out;
  for (auto it = std::sregex_iterator(svg.begin(), svg.end(), re); it != std::sregex_iterator(); ++it) {
    out.push_back({std::stod((*it)[1]), std::stod((*it)[2])});
  }
  return out;
}

std::array<double, 4> fit_line(const std::string& svg) {
  static const std::regex re(
      R"re(<line class="fit" x1="([-0-9.]+)" y1="([-0-9.]+)" x2="([-0-9.]+)" y2="([-0-9.]+)")re");
  std::smatch m;
  REQUIRE(std::regex_search(svg, m, re));
  return {std::stod(m[1]), std::stod(m[2]), std::stod(m[3]), std::stod(m[4])};
}

std::filesystem::path temp_dir(const std::string& name) {
  auto dir = std::filesystem::temp_directory_path() / ("ppbench_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

int run(std::vector<std::string> args) {
  args.insert(args.begin(), "ppbench");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return cli_main(static_cast<int>(argv.size()), argv.data());
}

}  // namespace

TEST_CASE("number formatting is shortest round-trip") {
  CHECK(format_number(0.5) == "0.5");
  CHECK(format_number(0.1) == "0.1");
  CHECK(format_number(1e-20) == "1e-20");
  CHECK(std::stod(format_number(0.1 + 0.2)) == 0.1 + 0.2);
}

TEST_CASE("input CSV parsing") {
  std::istringstream ok("value\n1.5\n\n-2\r\n3e1\n");
  CHECK(read_values_csv(ok) == std::vector<double>{1.5, -2.0, 30.0});
  std::istringstream no_header("1\n2\n");
  CHECK_THROWS_AS(read_values_csv(no_header), DomainError);
  std::istringstream junk("value\n1\nabc\n");
  CHECK_THROWS_AS(read_values_csv(junk), DomainError);
  std::istringstream comma("value\n1,5\n");
  CHECK_THROWS_AS(read_values_csv(comma), DomainError);
}

TEST_CASE("positions CSV") {
  std::ostringstream s;
  write_positions_csv(s, classical_positions(PositionFormula::classical(FormulaId::Weibull), 9));
  const std::string text = s.str();
  CHECK(text.rfind("rank,i,p\n", 0) == 0);
  CHECK(text.find("\n5,5,0.5\n") != std::string::npos);
}

TEST_CASE("report envelope") {
  const auto doc = envelope("gof", gof_json(mad_case3(std::vector<double>{1, 2, 4, 3, 6, 5}), "self", std::nullopt));
  CHECK(doc["schema"] == "report-v1");
  CHECK(doc["kind"] == "gof");
  CHECK(doc["log_threshold"].is_null());
  CHECK(doc["critical_points"]["5pct"] == 0.787);
}

TEST_CASE("two collinear points lie on the fitted line") {
  PlotSpec spec;
  spec.points = {{-1.0, 1.0}, {2.0, 7.0}};
  spec.fitted_line = PlotSpec::Line{3.0, 2.0};
  const std::string svg = render_svg(spec);
  const auto pts = markers(svg);
  REQUIRE(pts.size() == 2);
  const auto l = fit_line(svg);
  for (const auto& p : pts) {
    // Distance from the marker centre to the segment's supporting line, in pixels.
    const double dx = l[2] - l[0], dy = l[3] - l[1];
    const double dist = std::abs(dy * (p.cx - l[0]) - dx * (p.cy - l[1])) / std::hypot(dx, dy);
    CHECK(dist < 0.02);
  }
}

TEST_CASE("markers-only plot and validation") {
  PlotSpec spec;
  spec.points = {{0.0, 1.0}, {1.0, 1.5}, {2.0, 1.2}};
  const std::string svg = render_svg(spec);
  CHECK(markers(svg).size() == 3);
  CHECK(svg.find("class=\"fit\"") == std::string::npos);
  CHECK(svg.rfind("<?xml", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);

  PlotSpec one;
  one.points = {{0.0, 1.0}};
  CHECK_THROWS_AS(render_svg(one), DomainError);
  PlotSpec unsorted;
  unsorted.points = {{1.0, 1.0}, {0.0, 2.0}};
  CHECK_THROWS_AS(render_svg(unsorted), DomainError);
  PlotSpec ticks = spec;
  ticks.tick_probabilities = {0.5, 0.2};
  CHECK_THROWS_AS(render_svg(ticks), DomainError);
}

TEST_CASE("month plot has one marker per used magnitude and is deterministic") {
  const auto data = load_dataset();
  const auto month = analyze_month(data[0]);
  const auto spec = month_plot(month, PositionFormula::proposed(Family::Normal, 4));
  const std::string a = render_svg(spec);
  CHECK(markers(a).size() == month.n_used);
  CHECK(month.n_used == 42);
  CHECK(a == render_svg(month_plot(month, PositionFormula::proposed(Family::Normal, 4))));
  // Probability ticks are present on the secondary axis.
  CHECK(a.find(">0.5</text>") != std::string::npos);
}

TEST_CASE("cli exit codes") {
  const auto dir = temp_dir("exit");
  CHECK(run({"--help"}) == 0);
  CHECK(run({}) == 1);
  CHECK(run({"nonsense"}) == 1);
  CHECK(run({"positions"}) == 1);
  CHECK(run({"positions", "--n", "9", "--formula", "bogus"}) == 1);
  CHECK(run({"positions", "--n", "9", "--out", (dir / "w.csv").string()}) == 0);
  CHECK(slurp(dir / "w.csv").find("\n5,5,0.5\n") != std::string::npos);

  {
    std::ofstream f(dir / "flat.csv");
    f << "value\n1\n1\n1\n1\n1\n";
  }
  CHECK(run({"fit", "--input", (dir / "flat.csv").string(), "--family", "gumbel", "--method", "mle",
             "--out", (dir / "fit.json").string()}) == 2);
  CHECK(run({"gof", "--input", (dir / "flat.csv").string(), "--out", (dir / "g.json").string()}) == 2);
  CHECK(run({"fit", "--input", (dir / "missing.csv").string()}) == 2);
  CHECK(run({"quantile", "--family", "gumbel", "-T", "1"}) == 2);
  CHECK(run({"benchmark", "--m", "10"}) == 1);
}

TEST_CASE("cli fit, quantile and gof outputs") {
  const auto dir = temp_dir("fit");
  {
    std::ofstream f(dir / "x.csv");
    f << "value\n";
    for (double v : sample(DistributionSpec::gumbel(10.0, 2.0), 30, 5)) f << format_number(v) << '\n';
  }
  const auto in = (dir / "x.csv").string();
  REQUIRE(run({"fit", "-i", in, "--family", "gumbel", "--method", "gls", "-o", (dir / "f.json").string()}) == 0);
  const auto doc = json::parse(slurp(dir / "f.json"));
  CHECK(doc["kind"] == "fit");
  CHECK(doc["method"] == "gls");
  CHECK(doc["positions"] == "proposed-k4");
  CHECK(doc["b"].get<double>() > 0.0);

  REQUIRE(run({"quantile", "--family", "gumbel", "-T", "10", "-o", (dir / "q.json").string()}) == 0);
  const auto q = json::parse(slurp(dir / "q.json"));
  CHECK(q["quantiles"][0]["value"].get<double>() == doctest::Approx(2.25037).epsilon(1e-5));

  REQUIRE(run({"gof", "-i", in, "--log-threshold", "0", "--params", "fixed:2.3,0.2", "-o",
               (dir / "g.json").string()}) == 0);
  CHECK(json::parse(slurp(dir / "g.json"))["params"] == "fixed");

  REQUIRE(run({"plot", "-i", in, "--family", "gumbel", "-o", (dir / "p.svg").string()}) == 0);
  CHECK(markers(slurp(dir / "p.svg")).size() == 30);
}

TEST_CASE("cli bradyseism writes report, series and plots") {
  const auto dir = temp_dir("brady");
  REQUIRE(run({"bradyseism", "--out", dir.string()}) == 0);
  CHECK(std::filesystem::exists(dir / "report.json"));
  CHECK(std::filesystem::exists(dir / "exceedance.csv"));
  for (const char* m : {"I", "VII", "XIII"}) {
    CHECK(std::filesystem::exists(dir / (std::string("month_") + m + ".svg")));
  }
  CHECK(markers(slurp(dir / "month_I.svg")).size() == 42);
  const std::string first = slurp(dir / "report.json");
  REQUIRE(run({"bradyseism", "--out", dir.string()}) == 0);
  CHECK(slurp(dir / "report.json") == first);
}
