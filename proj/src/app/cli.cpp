#include "ppbench/app/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "ppbench/app/report.hpp"
#include "ppbench/app/svg.hpp"
#include "ppbench/errors.hpp"

namespace ppbench::app {

namespace {

constexpr std::uint64_t kDefaultSeed = 20240501;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::vector<double> read_input(const std::string& path) {
  if (path == "-") return read_values_csv(std::cin);
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  return read_values_csv(in);
}

// Writes to `path`, or to stdout for "" and "-".
void write_text(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open " + path + " for writing");
  out << text;
  if (!out) throw Error("write failed: " + path);
}

std::string json_text(const json& doc) {
  std::ostringstream o;
  write_json(o, doc);
  return o.str();
}

// Options shared by the probability-paper subcommands.
struct PaperOptions {
  std::string input;
  std::string family = "normal";
  std::string positions = "proposed";
  int k = 4;
  std::string method = "ols";
  std::string cov = "expansion";
  double threshold = 0.0;
  bool threshold_set = false;

  void add_to(CLI::App& cmd, bool need_input = true) {
    auto* in = cmd.add_option("--input,-i", input, "CSV file with header 'value' ('-' for stdin)");
    if (need_input) in->required();
    cmd.add_option("--family", family, "gumbel | normal | lognormal3")->capture_default_str();
    cmd.add_option("--positions", positions, "plotting-position formula name or 'proposed'")
        ->capture_default_str();
    cmd.add_option("--k", k, "expansion order for proposed positions (0..4)")
        ->check(CLI::Range(0, 4))
        ->capture_default_str();
    cmd.add_option("--method", method, "ols | gls | mle")->capture_default_str();
    cmd.add_option("--cov", cov, "GLS covariance: expansion | exact | diagonal | identity")
        ->capture_default_str();
    cmd.add_option("--threshold,-c", threshold, "lognormal3 threshold c (fit on log(x - c))");
  }

  Family parsed_family() const {
    try {
      return parse_family(family);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }

  PositionFormula parsed_positions() const {
    const Family f = parsed_family() == Family::LogNormal3 ? Family::Normal : parsed_family();
    try {
      auto formula = parse_formula(positions, f, k);
      if (formula.is_proposed() && cov == "exact") formula.means_mode = CovMode::Exact;
      return formula;
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }

  Method parsed_method() const {
    try {
      return parse_method(method);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }

  CovMode parsed_cov() const {
    try {
      return parse_cov_mode(cov);
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
};

struct PaperFit {
  FitResult fit;
  PositionFormula positions;
  std::vector<double> data;  // sorted, on the fitting scale
};

PaperFit fit_paper(const PaperOptions& o, std::vector<double> x) {
  const Family family = o.parsed_family();
  const Method method = o.parsed_method();
  PaperFit out{{}, o.parsed_positions(), {}};
  if (family == Family::LogNormal3) {
    if (!o.threshold_set) throw UsageError("--threshold is required for lognormal3");
    for (double& v : x) {
      if (v <= o.threshold) {
        throw ThresholdViolation("observation " + format_number(v) + " is not above the threshold " +
                                 format_number(o.threshold));
      }
      v = std::log(v - o.threshold);
    }
  }
  const Family base = family == Family::LogNormal3 ? Family::Normal : family;
  out.data = sorted_observations(x);
  const int n = static_cast<int>(out.data.size());
  switch (method) {
    case Method::OLS:
      out.fit = fit_ols(out.data, reduced_regressors(out.positions, base, n), base);
      break;
    case Method::GLS: {
      auto moments = build_moments(base, n, o.k, o.parsed_cov());
      moments.means = reduced_regressors(out.positions, base, n);
      out.fit = fit_gls(out.data, moments);
      break;
    }
    case Method::MLE:
      out.fit = fit_mle(out.data, base);
      break;
  }
  if (family == Family::LogNormal3) out.fit = as_lognormal3(std::move(out.fit), o.threshold);
  return out;
}

int run_positions(const std::string& formula, int n, const std::string& family, int k,
                  const std::string& cov, const std::string& out) {
  PaperOptions o;
  o.positions = formula;
  o.family = family;
  o.k = k;
  o.cov = cov;
  const auto set = make_positions(o.parsed_positions(), n);
  std::ostringstream s;
  write_positions_csv(s, set);
  write_text(out, s.str());
  return 0;
}

std::vector<PositionFormula> parse_formula_list(const std::string& list, Family family, int k,
                                                bool& include_mle) {
  std::vector<PositionFormula> out;
  include_mle = false;
  std::vector<std::string> names = split(list, ',');
  if (list == "all") {
    for (FormulaId id : classical_catalogue()) out.push_back(PositionFormula::classical(id));
    out.push_back(PositionFormula::proposed(family, k));
    include_mle = true;
    return out;
  }
  for (const auto& name : names) {
    if (name == "mle") {
      include_mle = true;
      continue;
    }
    try {
      out.push_back(parse_formula(name, family, k));
    } catch (const DomainError& e) {
      throw UsageError(e.what());
    }
  }
  return out;
}

}  // namespace

int cli_main(int argc, char** argv) {
  CLI::App app{"Plotting-position benchmark and probability-paper toolkit"};
  app.name("ppbench");
  app.require_subcommand(1);

  // positions
  std::string pos_formula = "weibull", pos_family = "normal", pos_cov = "expansion", pos_out;
  int pos_n = 0, pos_k = 4;
  auto* positions = app.add_subcommand("positions", "Print plotting positions as CSV (rank,i,p)");
  positions->add_option("--formula,-f", pos_formula, "formula name or 'proposed'")->capture_default_str();
  positions->add_option("--n", pos_n, "sample size")->required()->check(CLI::PositiveNumber);
  positions->add_option("--family", pos_family, "family for proposed positions")->capture_default_str();
  positions->add_option("--k", pos_k, "expansion order for proposed positions")
      ->check(CLI::Range(0, 4))
      ->capture_default_str();
  positions->add_option("--cov", pos_cov, "'exact' uses quadrature means for proposed positions")
      ->capture_default_str();
  positions->add_option("--out,-o", pos_out, "output file (default stdout)");

  // fit
  PaperOptions fit_opts;
  std::string fit_out;
  auto* fit = app.add_subcommand("fit", "Fit location and scale on probability paper");
  fit_opts.add_to(*fit);
  fit->add_option("--out,-o", fit_out, "output JSON file (default stdout)");

  // quantile
  PaperOptions q_opts;
  std::string q_out;
  std::vector<double> q_periods{10.0};
  double q_a = 0.0, q_b = 1.0;
  auto* quant = app.add_subcommand("quantile", "Return-period quantiles from data or from given (a, b)");
  q_opts.add_to(*quant, false);
  quant->add_option("--return-period,-T", q_periods, "return periods T > 1")->capture_default_str();
  auto* qa = quant->add_option("--a", q_a, "location (instead of --input)");
  auto* qb = quant->add_option("--b", q_b, "scale (instead of --input)");
  quant->add_option("--out,-o", q_out, "output JSON file (default stdout)");

  // benchmark
  std::string b_family = "gumbel", b_formulas = "all", b_method = "ols", b_out, b_format;
  int b_n = 5, b_m = 10000, b_k = 4;
  std::uint64_t b_seed = kDefaultSeed;
  unsigned b_threads = 0;
  double b_loc = 0.0, b_scale = 1.0;
  auto* bench = app.add_subcommand("benchmark", "Monte Carlo IQSE / IFSE / DSE indices");
  bench->add_option("--family", b_family, "gumbel | normal")->capture_default_str();
  bench->add_option("--n", b_n, "sample size")->capture_default_str();
  bench->add_option("--m", b_m, "replicates")->capture_default_str();
  bench->add_option("--seed", b_seed, "random seed")->capture_default_str();
  bench->add_option("--formulas", b_formulas, "comma list of formulas (and 'mle'), or 'all'")
      ->capture_default_str();
  bench->add_option("--k", b_k, "expansion order for 'proposed'")->check(CLI::Range(0, 4))->capture_default_str();
  bench->add_option("--method", b_method, "ols | gls")->capture_default_str();
  bench->add_option("--threads", b_threads, "worker threads (0 = automatic)")->capture_default_str();
  bench->add_option("--location", b_loc, "sampling location")->capture_default_str();
  bench->add_option("--scale", b_scale, "sampling scale")->capture_default_str();
  bench->add_option("--out,-o", b_out, "output file; .csv selects CSV (default stdout JSON)");
  bench->add_option("--format", b_format, "json | csv (overrides the extension)");

  // gof
  std::string g_input, g_params = "self", g_out;
  double g_c = 0.0;
  auto* gof = app.add_subcommand("gof", "Modified Anderson-Darling normality test");
  gof->add_option("--input,-i", g_input, "CSV file with header 'value'")->required();
  auto* gc = gof->add_option("--log-threshold", g_c, "test log(x - c) instead of x");
  gof->add_option("--params", g_params, "self | fixed:MEAN,SD")->capture_default_str();
  gof->add_option("--out,-o", g_out, "output JSON file (default stdout)");

  // bradyseism
  std::string br_month = "all", br_positions = "proposed", br_method = "ols", br_dir;
  int br_k = 4;
  double br_c = 1.0, br_level = 5.0;
  auto* brady = app.add_subcommand("bradyseism", "Campi Flegrei 1983-84 case study");
  brady->add_option("--month", br_month, "I..XIII or all")->capture_default_str();
  brady->add_option("--positions", br_positions, "plotting-position formula")->capture_default_str();
  brady->add_option("--k", br_k, "expansion order for proposed positions")
      ->check(CLI::Range(0, 4))
      ->capture_default_str();
  brady->add_option("--method", br_method, "ols | gls")->capture_default_str();
  brady->add_option("--threshold,-c", br_c, "threshold c")->capture_default_str();
  brady->add_option("--magnitude", br_level, "critical magnitude")->capture_default_str();
  brady->add_option("--out,-o", br_dir,
                    "output directory for report.json, exceedance.csv and month SVGs (default: JSON to stdout)");

  // plot
  PaperOptions p_opts;
  std::string p_out, p_title;
  bool p_no_line = false;
  auto* plot = app.add_subcommand("plot", "Draw a probability paper as SVG");
  p_opts.add_to(*plot);
  plot->add_option("--out,-o", p_out, "output SVG file")->required();
  plot->add_option("--title", p_title, "plot title");
  plot->add_flag("--no-line", p_no_line, "omit the fitted line");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    for (auto* o : {&fit_opts, &q_opts, &p_opts}) o->threshold_set = false;
    fit_opts.threshold_set = fit->count("--threshold") > 0;
    q_opts.threshold_set = quant->count("--threshold") > 0;
    p_opts.threshold_set = plot->count("--threshold") > 0;

    if (*positions) return run_positions(pos_formula, pos_n, pos_family, pos_k, pos_cov, pos_out);

    if (*fit) {
      const auto pf = fit_paper(fit_opts, read_input(fit_opts.input));
      write_text(fit_out, json_text(envelope("fit", fit_json(pf.fit, pf.positions, pf.data.size()))));
      return 0;
    }

    if (*quant) {
      FitResult f;
      if (!q_opts.input.empty()) {
        if (qa->count() || qb->count()) throw UsageError("give either --input or --a/--b");
        f = fit_paper(q_opts, read_input(q_opts.input)).fit;
      } else {
        f.family = q_opts.parsed_family();
        if (f.family == Family::LogNormal3) {
          if (!q_opts.threshold_set) throw UsageError("--threshold is required for lognormal3");
          f.threshold = q_opts.threshold;
        }
        f.location = q_a;
        f.scale = q_b;
        f.method = q_opts.parsed_method();
        f.distribution();
      }
      std::vector<QuantileEstimate> est;
      for (double t : q_periods) est.push_back(predict_quantile(f, t));
      write_text(q_out, json_text(envelope("quantile", quantile_json(f, est))));
      return 0;
    }

    if (*bench) {
      ExperimentConfig cfg;
      PaperOptions fam;
      fam.family = b_family;
      cfg.family = fam.parsed_family();
      if (cfg.family == Family::LogNormal3) throw UsageError("benchmark supports gumbel and normal");
      cfg.size = b_n;
      cfg.replicates = b_m;
      cfg.seed = b_seed;
      cfg.formulas = parse_formula_list(b_formulas, cfg.family, b_k, cfg.include_mle);
      cfg.threads = b_threads;
      cfg.location = b_loc;
      cfg.scale = b_scale;
      fam.method = b_method;
      cfg.fit_method = fam.parsed_method();
      if (cfg.fit_method == Method::MLE) throw UsageError("--method must be ols or gls");
      try {
        cfg.validate();
      } catch (const DomainError& e) {
        throw UsageError(e.what());
      }
      const auto report = run_suite(cfg);
      std::string format = b_format;
      if (format.empty()) {
        format = std::filesystem::path(b_out).extension() == ".csv" ? "csv" : "json";
      }
      if (format == "csv") {
        std::ostringstream s;
        write_benchmark_csv(s, report);
        write_text(b_out, s.str());
      } else if (format == "json") {
        write_text(b_out, json_text(envelope("benchmark", benchmark_json(report))));
      } else {
        throw UsageError("--format must be json or csv");
      }
      return 0;
    }

    if (*gof) {
      auto x = read_input(g_input);
      std::optional<double> c;
      if (gc->count()) {
        c = g_c;
        for (double& v : x) {
          if (v <= g_c) throw ThresholdViolation("observation " + format_number(v) + " is not above " + format_number(g_c));
          v = std::log(v - g_c);
        }
      }
      MadResult mad;
      if (g_params == "self") {
        mad = mad_case3(x);
      } else if (g_params.rfind("fixed:", 0) == 0) {
        const auto parts = split(g_params.substr(6), ',');
        if (parts.size() != 2) throw UsageError("--params fixed:MEAN,SD");
        double mean = 0.0, sd = 0.0;
        try {
          mean = std::stod(parts[0]);
          sd = std::stod(parts[1]);
        } catch (const std::exception&) {
          throw UsageError("--params fixed:MEAN,SD needs two numbers");
        }
        mad = mad_known_params(x, mean, sd);
      } else {
        throw UsageError("--params must be 'self' or 'fixed:MEAN,SD'");
      }
      write_text(g_out, json_text(envelope("gof", gof_json(mad, g_params == "self" ? "self" : "fixed", c))));
      return 0;
    }

    if (*brady) {
      CaseStudyOptions opts;
      opts.threshold = br_c;
      opts.critical_magnitude = br_level;
      PaperOptions po;
      po.positions = br_positions;
      po.k = br_k;
      po.method = br_method;
      opts.positions = po.parsed_positions();
      opts.method = po.parsed_method();
      if (opts.method == Method::MLE) throw UsageError("--method must be ols or gls");

      CaseStudyReport report;
      if (br_month == "all") {
        report = run_case_study(opts);
      } else {
        report = run_case_study(opts);
        auto it = std::find_if(report.months.begin(), report.months.end(),
                               [&](const MonthReport& m) { return m.label == br_month; });
        if (it == report.months.end()) throw UsageError("--month must be I..XIII or all");
        MonthReport chosen = *it;
        report.months = {std::move(chosen)};
      }

      const std::string doc = json_text(envelope("bradyseism", bradyseism_json(report)));
      if (br_dir.empty()) {
        std::cout << doc;
        return 0;
      }
      std::filesystem::create_directories(br_dir);
      const std::filesystem::path dir(br_dir);
      write_text((dir / "report.json").string(), doc);
      std::ostringstream csv;
      write_exceedance_csv(csv, report);
      write_text((dir / "exceedance.csv").string(), csv.str());
      for (const auto& m : report.months) {
        if (m.status != "ok") continue;
        emit_probability_paper(month_plot(m, opts.positions), dir / ("month_" + m.label + ".svg"));
      }
      return 0;
    }

    if (*plot) {
      const auto pf = fit_paper(p_opts, read_input(p_opts.input));
      const Family base = pf.fit.family == Family::LogNormal3 ? Family::Normal : pf.fit.family;
      PlotSpec spec;
      spec.family = base;
      spec.title = p_title;
      if (pf.fit.family == Family::LogNormal3) {
        spec.value_label = "log(x - " + format_number(p_opts.threshold) + ")";
      }
      const auto y = reduced_regressors(pf.positions, base, static_cast<int>(pf.data.size()));
      for (std::size_t i = 0; i < y.size(); ++i) spec.points.push_back({y[i], pf.data[i]});
      if (!p_no_line) spec.fitted_line = PlotSpec::Line{pf.fit.location, pf.fit.scale};
      emit_probability_paper(spec, p_out);
      return 0;
    }
  } catch (const UsageError& e) {
    std::cerr << "ppbench: " << e.what() << '\n';
    return 1;
  } catch (const Error& e) {
    std::cerr << "ppbench: " << e.what() << '\n';
    return 2;
  } catch (const std::filesystem::filesystem_error& e) {
    std::cerr << "ppbench: " << e.what() << '\n';
    return 2;
  }
  return 1;
}

}  // namespace ppbench::app
