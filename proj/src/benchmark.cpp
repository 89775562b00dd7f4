#include "ppbench/benchmark.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>

#include "ppbench/errors.hpp"

namespace ppbench {

namespace {

struct Estimator {
  std::string name;
  std::string label;
  bool is_mle = false;
  PositionFormula formula;
  std::vector<double> regressors;
  std::optional<OrderStatMoments> moments;  // GLS only
};

// Reduced-scale estimates per replicate: (a_hat - a)/b and b_hat/b.
struct ReplicateFits {
  std::vector<double> location;
  std::vector<double> scale;
  std::vector<std::uint8_t> valid;
  std::size_t discarded() const {
    return static_cast<std::size_t>(std::count(valid.begin(), valid.end(), std::uint8_t{0}));
  }
};

Estimator make_estimator(const ExperimentConfig& cfg, const PositionFormula& formula) {
  Estimator e;
  e.name = formula.name();
  e.label = formula.label();
  e.formula = formula;
  e.regressors = reduced_regressors(formula, cfg.family, cfg.size);
  if (cfg.fit_method == Method::GLS) {
    auto m = build_moments(cfg.family, cfg.size, 4, CovMode::Expansion);
    m.means = e.regressors;
    e.moments = std::move(m);
  }
  return e;
}

Estimator make_mle_estimator() {
  Estimator e;
  e.name = "mle";
  e.label = "MLE";
  e.is_mle = true;
  return e;
}

FitResult fit_one(const Estimator& e, std::span<const double> sorted, Family family) {
  if (e.is_mle) return fit_mle(sorted, family);
  if (e.moments) return fit_gls(sorted, *e.moments);
  return fit_ols(sorted, e.regressors, family);
}

std::vector<ReplicateFits> simulate(const ExperimentConfig& cfg,
                                    const std::vector<Estimator>& estimators) {
  const auto m = static_cast<std::size_t>(cfg.replicates);
  std::vector<ReplicateFits> fits(estimators.size());
  for (auto& f : fits) {
    f.location.assign(m, 0.0);
    f.scale.assign(m, 1.0);
    f.valid.assign(m, 0);
  }

  const DistributionSpec parent =
      cfg.family == Family::Gumbel ? DistributionSpec::gumbel(cfg.location, cfg.scale)
                                   : DistributionSpec::normal(cfg.location, cfg.scale);

  auto run_range = [&](std::size_t begin, std::size_t end) {
    for (std::size_t r = begin; r < end; ++r) {
      auto x = sample(parent, static_cast<std::size_t>(cfg.size), cfg.seed, r);
      std::sort(x.begin(), x.end());
      for (std::size_t k = 0; k < estimators.size(); ++k) {
        try {
          const FitResult fit = fit_one(estimators[k], x, cfg.family);
          fits[k].location[r] = (fit.location - cfg.location) / cfg.scale;
          fits[k].scale[r] = fit.scale / cfg.scale;
          fits[k].valid[r] = 1;
        } catch (const NonPositiveScale&) {
        } catch (const DegenerateError&) {
        } catch (const ConvergenceError&) {
        }
      }
    }
  };

  const unsigned workers = std::min<unsigned>(worker_count(cfg.threads),
                                              static_cast<unsigned>(std::max<std::size_t>(m, 1)));
  if (workers <= 1) {
    run_range(0, m);
    return fits;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> pool;
    const std::size_t chunk = (m + workers - 1) / workers;
    for (unsigned w = 0; w < workers; ++w) {
      const std::size_t begin = w * chunk;
      const std::size_t end = std::min(m, begin + chunk);
      if (begin >= end) break;
      pool.emplace_back([&, begin, end] {
        try {
          run_range(begin, end);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
  return fits;
}

IndexEstimate mean_and_error(const std::vector<double>& values, const ReplicateFits& fits) {
  std::vector<double> kept;
  kept.reserve(values.size());
  for (std::size_t r = 0; r < values.size(); ++r) {
    if (fits.valid[r]) kept.push_back(values[r]);
  }
  if (kept.empty()) throw Error("all replicates discarded");
  const double n = static_cast<double>(kept.size());
  const double mean = pairwise_sum(kept) / n;
  std::vector<double> sq(kept.size());
  for (std::size_t r = 0; r < kept.size(); ++r) sq[r] = (kept[r] - mean) * (kept[r] - mean);
  const double var = kept.size() > 1 ? pairwise_sum(sq) / (n - 1.0) : 0.0;
  return {mean, std::sqrt(var / n)};
}

double trapezoid(std::span<const double> f, std::span<const double> grid) {
  double acc = 0.0;
  for (std::size_t k = 1; k < grid.size(); ++k) {
    acc += 0.5 * (f[k] + f[k - 1]) * (grid[k] - grid[k - 1]);
  }
  return acc;
}

struct PerReplicate {
  std::vector<double> iqse_exact;
  std::vector<double> iqse_grid;
  std::vector<double> ifse;
};

PerReplicate per_replicate_indices(const ExperimentConfig& cfg, const ReplicateFits& fits) {
  const std::size_t m = fits.location.size();
  const double ez = reduced_mean(cfg.family);
  const double ez2 = reduced_second_moment(cfg.family);
  std::vector<double> z(cfg.grid.size());
  for (std::size_t k = 0; k < z.size(); ++k) z[k] = reduced_quantile(cfg.family, cfg.grid[k]);

  PerReplicate out{std::vector<double>(m), std::vector<double>(m), std::vector<double>(m)};
  std::vector<double> qse(z.size());
  std::vector<double> fse(z.size());
  for (std::size_t r = 0; r < m; ++r) {
    if (!fits.valid[r]) continue;
    const double a = fits.location[r];
    const double b = fits.scale[r];
    const double slope = b - 1.0;
    out.iqse_exact[r] = a * a + 2.0 * a * slope * ez + slope * slope * ez2;
    for (std::size_t k = 0; k < z.size(); ++k) {
      const double err = a + slope * z[k];
      qse[k] = err * err;
      const double dF = reduced_cdf(cfg.family, (z[k] - a) / b) - cfg.grid[k];
      fse[k] = dF * dF;
    }
    out.iqse_grid[r] = trapezoid(qse, cfg.grid);
    out.ifse[r] = trapezoid(fse, cfg.grid);
  }
  return out;
}

ExperimentConfig single_formula(const ExperimentConfig& cfg, const PositionFormula& formula) {
  ExperimentConfig one = cfg;
  one.formulas = {formula};
  one.include_mle = false;
  one.validate();
  return one;
}

}  // namespace

std::vector<double> default_grid() {
  std::vector<double> grid(399);
  for (int k = 0; k < 399; ++k) grid[k] = 0.0025 * (k + 1);
  return grid;
}

void ExperimentConfig::validate() const {
  if (family != Family::Gumbel && family != Family::Normal) {
    throw DomainError("benchmark parent must be gumbel or normal");
  }
  if (size < 3) throw DomainError("benchmark sample size must be >= 3");
  if (replicates < 100) throw DomainError("benchmark needs M >= 100 replicates");
  if (grid.size() < 2) throw DomainError("F grid needs at least 2 nodes");
  for (std::size_t k = 0; k < grid.size(); ++k) {
    if (!(grid[k] > 0.0 && grid[k] < 1.0)) throw DomainError("F grid must lie inside (0,1)");
    if (k > 0 && !(grid[k] > grid[k - 1])) throw DomainError("F grid must be strictly increasing");
  }
  if (!(scale > 0.0)) throw DomainError("sampling scale must be > 0");
  if (fit_method == Method::MLE) throw DomainError("fit method must be ols or gls");
  if (formulas.empty() && !include_mle) throw DomainError("no estimators requested");
}

unsigned worker_count(unsigned requested) {
  unsigned n = requested != 0 ? requested : std::max(1u, std::thread::hardware_concurrency());
  if (const char* cap = std::getenv("PPBENCH_THREADS")) {
    const long limit = std::strtol(cap, nullptr, 10);
    if (limit >= 1) n = std::min<unsigned>(n, static_cast<unsigned>(limit));
  }
  return std::max(1u, n);
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double acc = 0.0;
    for (double v : values) acc += v;
    return acc;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

std::vector<double> qse_curve(const ExperimentConfig& cfg, const PositionFormula& formula) {
  const auto one = single_formula(cfg, formula);
  const std::vector<Estimator> estimators{make_estimator(one, formula)};
  const auto fits = simulate(one, estimators).front();
  if (fits.discarded() == fits.valid.size()) throw Error("qse_curve: all replicates discarded");

  std::vector<double> curve(one.grid.size());
  std::vector<double> column;
  column.reserve(fits.valid.size());
  for (std::size_t k = 0; k < one.grid.size(); ++k) {
    const double z = reduced_quantile(one.family, one.grid[k]);
    column.clear();
    for (std::size_t r = 0; r < fits.valid.size(); ++r) {
      if (!fits.valid[r]) continue;
      const double err = fits.location[r] + (fits.scale[r] - 1.0) * z;
      column.push_back(err * err);
    }
    curve[k] = pairwise_sum(column) / static_cast<double>(column.size());
  }
  return curve;
}

double iqse(std::span<const double> curve, std::span<const double> grid) {
  if (curve.size() != grid.size()) throw SizeMismatch("iqse: curve and grid differ in size");
  for (double v : curve) {
    if (!std::isfinite(v)) throw DomainError("iqse: curve is not finite");
  }
  return trapezoid(curve, grid);
}

double iqse_exact(const ExperimentConfig& cfg, const PositionFormula& formula) {
  const auto one = single_formula(cfg, formula);
  const std::vector<Estimator> estimators{make_estimator(one, formula)};
  const auto fits = simulate(one, estimators).front();
  return mean_and_error(per_replicate_indices(one, fits).iqse_exact, fits).value;
}

double ifse(const ExperimentConfig& cfg, const PositionFormula& formula) {
  const auto one = single_formula(cfg, formula);
  const std::vector<Estimator> estimators{make_estimator(one, formula)};
  const auto fits = simulate(one, estimators).front();
  return mean_and_error(per_replicate_indices(one, fits).ifse, fits).value;
}

double dse(std::span<const double> exact_means, std::span<const double> regressors) {
  if (exact_means.size() != regressors.size() || exact_means.empty()) {
    throw SizeMismatch("dse: means and regressors differ in size");
  }
  double acc = 0.0;
  for (std::size_t i = 0; i < exact_means.size(); ++i) {
    const double d = regressors[i] - exact_means[i];
    acc += d * d;
  }
  return std::sqrt(acc / static_cast<double>(exact_means.size()));
}

double dse(Family family, int size, const PositionFormula& formula) {
  const auto exact = exact_means(family, size);
  const auto y = reduced_regressors(formula, family, size);
  return dse(exact, y);
}

double rm_index(Family family, int size, const PositionFormula& formula, double location,
                double scale) {
  if (!(scale > 0.0)) throw DomainError("rm_index: scale must be > 0");
  const auto exact = exact_means(family, size);
  const auto y = reduced_regressors(formula, family, size);
  double acc = 0.0;
  for (int i = 0; i < size; ++i) {
    const double expected = location + scale * exact[i];
    if (std::abs(expected) < 1e-12) {
      throw DomainError("rm_index: E[X_(" + std::to_string(i + 1) + ")] is zero");
    }
    const double rel = (location + scale * y[i] - expected) / expected;
    acc += rel * rel;
  }
  return std::sqrt(acc / size);
}

const BenchmarkRow* BenchmarkReport::find(std::string_view estimator) const {
  for (const auto& row : rows) {
    if (row.estimator == estimator) return &row;
  }
  return nullptr;
}

BenchmarkReport run_suite(const ExperimentConfig& cfg) {
  cfg.validate();
  BenchmarkReport report{cfg.family,      cfg.size,        cfg.replicates, cfg.seed, cfg.fit_method,
                         cfg.grid.size(), cfg.location,    cfg.scale,      {}};

  std::vector<Estimator> estimators;
  std::vector<BenchmarkRow> failed;
  if (cfg.include_mle) estimators.push_back(make_mle_estimator());
  for (const auto& f : cfg.formulas) {
    try {
      estimators.push_back(make_estimator(cfg, f));
    } catch (const Error& e) {
      BenchmarkRow row;
      row.estimator = f.name();
      row.label = f.label();
      row.status = e.what();
      failed.push_back(std::move(row));
    }
  }

  const auto fits = simulate(cfg, estimators);
  const auto exact = exact_means(cfg.family, cfg.size);

  for (std::size_t k = 0; k < estimators.size(); ++k) {
    const auto& e = estimators[k];
    BenchmarkRow row;
    row.estimator = e.name;
    row.label = e.label;
    row.is_mle = e.is_mle;
    row.discarded = fits[k].discarded();
    try {
      const auto per = per_replicate_indices(cfg, fits[k]);
      row.iqse = mean_and_error(per.iqse_exact, fits[k]);
      row.iqse_grid = mean_and_error(per.iqse_grid, fits[k]).value;
      row.ifse = mean_and_error(per.ifse, fits[k]);
      if (!e.is_mle) {
        row.dse = dse(exact, e.regressors);
        row.average = (row.iqse->value + row.ifse->value + *row.dse) / 3.0;
      }
    } catch (const Error& err) {
      row.status = err.what();
    }
    report.rows.push_back(std::move(row));
  }
  for (auto& row : failed) report.rows.push_back(std::move(row));
  return report;
}

}  // namespace ppbench
