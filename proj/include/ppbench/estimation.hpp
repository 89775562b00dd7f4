#pragma once

#include <span>
#include <string_view>
#include <vector>

#include "ppbench/distributions.hpp"
#include "ppbench/order_stats.hpp"

namespace ppbench {

enum class Method { OLS, GLS, MLE };

std::string_view to_string(Method method);
Method parse_method(std::string_view name);

/// Location/scale estimate. Probability-paper fits regress the observations
/// on the reduced regressors, x_(i) = a + b y_(i) + e_(i).
///
/// For LogNormal3 the estimates refer to log(x - threshold).
struct FitResult {
  double location = 0.0;
  double scale = 1.0;
  Method method = Method::OLS;
  Family family = Family::Normal;
  double threshold = 0.0;       // LogNormal3 only
  std::vector<double> design;   // y_(i); empty for MLE
  std::vector<double> residuals;
  double ridge = 0.0;           // covariance repair applied before a GLS solve

  DistributionSpec distribution() const;
};

struct QuantileEstimate {
  double return_period;
  double value;
  double level;  // 1 - 1/T
};

/// Least squares of x on y. Needs |x| = |y| >= 3 and non-constant y.
FitResult fit_ols(std::span<const double> x_sorted, std::span<const double> y,
                  Family family = Family::Normal);

/// Generalized least squares with V from `moments`, solved through the
/// Cholesky factor of V (no explicit inverse).
FitResult fit_gls(std::span<const double> x_sorted, const OrderStatMoments& moments);

/// Maximum likelihood. Normal: sample mean and sqrt of the divisor-N variance.
/// Gumbel: Newton iteration on the scale profile equation.
FitResult fit_mle(std::span<const double> x, Family family);

/// Re-tags a fit made on log(x - c) as a LogNormal3 fit with threshold c.
FitResult as_lognormal3(FitResult fit, double threshold);

QuantileEstimate predict_quantile(const FitResult& fit, double return_period);

/// 1 - F(level; a_hat, b_hat).
double exceedance_probability(const FitResult& fit, double level);

}  // namespace ppbench
