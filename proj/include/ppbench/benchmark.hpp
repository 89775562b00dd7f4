#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ppbench/distributions.hpp"
#include "ppbench/estimation.hpp"
#include "ppbench/positions.hpp"

namespace ppbench {

/// F nodes 0.0025, 0.0050, ..., 0.9975 (399 nodes, endpoints excluded).
std::vector<double> default_grid();

/// One Monte Carlo cell: M samples of size N from one parent, each fitted on
/// probability paper with every requested formula (common random numbers).
struct ExperimentConfig {
  Family family = Family::Gumbel;
  int size = 5;
  int replicates = 10000;
  std::uint64_t seed = 1;
  std::vector<PositionFormula> formulas;
  bool include_mle = false;
  std::vector<double> grid = default_grid();
  // Sampling parent; the indices are reported on the reduced scale.
  double location = 0.0;
  double scale = 1.0;
  Method fit_method = Method::OLS;  // OLS, or GLS with the expansion covariance
  unsigned threads = 0;             // 0: hardware concurrency, capped by PPBENCH_THREADS

  /// Throws DomainError if M < 100, N < 3, the grid is not strictly increasing
  /// inside (0,1), or nothing is to be estimated.
  void validate() const;
};

/// Number of workers for a requested count (0 = automatic), honouring PPBENCH_THREADS.
unsigned worker_count(unsigned requested);

/// QSE(T)/b^2 at each grid node, averaged over the non-discarded replicates.
std::vector<double> qse_curve(const ExperimentConfig& cfg, const PositionFormula& formula);

/// Trapezoid rule of a curve sampled on `grid`.
double iqse(std::span<const double> curve, std::span<const double> grid);

/// Integral over the whole of (0,1) of QSE((1-F)^-1)/b^2, formed from the
/// per-replicate quadratic in Q(F) and the parent's E[Z], E[Z^2].
double iqse_exact(const ExperimentConfig& cfg, const PositionFormula& formula);

double ifse(const ExperimentConfig& cfg, const PositionFormula& formula);

/// Root mean squared distance between Q(p_i) and the exact E[Z_(i)].
double dse(Family family, int size, const PositionFormula& formula);
double dse(std::span<const double> exact_means, std::span<const double> regressors);

/// Relative-error descriptive index with E[X_(i)] = a + b E[Z_(i)]; depends on (a, b).
double rm_index(Family family, int size, const PositionFormula& formula, double location,
                double scale);

struct IndexEstimate {
  double value = 0.0;
  double std_error = 0.0;
};

struct BenchmarkRow {
  std::string estimator;  // formula name or "mle"
  std::string label;
  bool is_mle = false;
  std::optional<IndexEstimate> iqse;
  std::optional<double> iqse_grid;
  std::optional<IndexEstimate> ifse;
  std::optional<double> dse;      // position formulas only; no Monte Carlo error
  std::optional<double> average;  // (iqse + ifse + dse)/3, position formulas only
  std::size_t discarded = 0;
  std::string status = "ok";
};

struct BenchmarkReport {
  Family family;
  int size;
  int replicates;
  std::uint64_t seed;
  Method fit_method;
  std::size_t grid_nodes;
  double location;
  double scale;
  std::vector<BenchmarkRow> rows;

  const BenchmarkRow* find(std::string_view estimator) const;
};

BenchmarkReport run_suite(const ExperimentConfig& cfg);

/// Pairwise (cascade) sum; result depends only on the order of `values`.
double pairwise_sum(std::span<const double> values);

}  // namespace ppbench
