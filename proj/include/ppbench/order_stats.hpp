#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include <Eigen/Dense>

#include "ppbench/distributions.hpp"

namespace ppbench {

/// Law of U_(i) = F(X_(i)): Beta(i, N - i + 1), independent of the parent.
class BetaOrderLaw {
 public:
  BetaOrderLaw(int rank, int size);

  int rank() const { return rank_; }
  int size() const { return size_; }
  double shape_a() const { return rank_; }
  double shape_b() const { return size_ - rank_ + 1; }
  double mean() const { return static_cast<double>(rank_) / (size_ + 1); }
  double variance() const { return mean() * (1.0 - mean()) / (size_ + 2); }
  double pdf(double t) const;

 private:
  int rank_;
  int size_;
  double log_norm_;
};

enum class CovMode { Expansion, Exact, Diagonal, Identity };

std::string_view to_string(CovMode mode);
CovMode parse_cov_mode(std::string_view name);

/// Approximate moments of the reduced order statistics for one sample size.
struct OrderStatMoments {
  Family family;
  int size;
  int order;
  CovMode mode;
  std::vector<double> means;   // y_(i), strictly increasing
  Eigen::MatrixXd covariance;  // symmetric positive definite after repair
  double ridge = 0.0;          // delta added to the diagonal, 0 when none was needed
};

/// Truncated Taylor expansion of E[Z_(i)] around mu = i/(N+1).
///
/// `order` is the highest quantile-derivative order kept: 0 (or 1) gives
/// Q(mu), which is the Weibull position on the reduced scale; 2 adds the
/// variance term, 3 the third-moment term and 4 the leading fourth-moment term.
double expansion_mean(Family family, int rank, int size, int order);

/// Second-order expansion of Cov(Z_(i), Z_(j)); symmetric in (i, j).
double expansion_cov(Family family, int i, int j, int size);

using QuantileFn = std::function<double(double)>;

/// E[Z_(i)] by adaptive Gauss-Kronrod quadrature against the Beta(i, N-i+1)
/// density. Absolute tolerance 1e-9; throws QuadratureError when not reached.
double exact_mean(Family family, int rank, int size);
double exact_mean(const QuantileFn& quantile, int rank, int size);

/// Cov(Z_(i), Z_(j)) by nested quadrature over 0 < s < t < 1 with the joint
/// density of (U_(i), U_(j)). Requires N <= 10 (CostGuardError otherwise).
double exact_cov(Family family, int i, int j, int size);
double exact_cov(const QuantileFn& quantile, int i, int j, int size);

/// Exact means E[Z_(1..N)] (no size limit beyond exact_mean's).
std::vector<double> exact_means(Family family, int size);

OrderStatMoments build_moments(Family family, int size, int order, CovMode mode);

/// Adds the smallest ridge delta*I (delta = 1e-10 trace/N, doubling) that
/// lets Cholesky succeed. Returns the ridge used (0 if V was already SPD).
double repair_positive_definite(Eigen::MatrixXd& v);

}  // namespace ppbench
