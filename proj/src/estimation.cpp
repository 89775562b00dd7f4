#include "ppbench/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <string>

#include "ppbench/errors.hpp"

namespace ppbench {

namespace {

constexpr int kMaxNewtonIterations = 200;

void check_scale(double b, Method method) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw NonPositiveScale(std::string(to_string(method)) + " fit gave scale " + std::to_string(b));
  }
}

void fill_residuals(FitResult& fit, std::span<const double> x) {
  fit.residuals.resize(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    fit.residuals[i] = x[i] - fit.location - fit.scale * fit.design[i];
  }
}

FitResult gumbel_mle(std::span<const double> x) {
  const double n = static_cast<double>(x.size());
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  if (!(ss > 0.0)) throw DegenerateError("Gumbel MLE: observations have zero spread");

  // Work with x - shift so exp(-(x - shift)/b) stays in range.
  const double shift = *std::min_element(x.begin(), x.end());
  auto sums = [&](double b, double& s0, double& s1, double& s2) {
    s0 = s1 = s2 = 0.0;
    for (double v : x) {
      const double d = v - shift;
      const double w = std::exp(-d / b);
      s0 += w;
      s1 += d * w;
      s2 += d * d * w;
    }
  };

  // Profile equation g(b) = b - mean + sum(x w)/sum(w) = 0, w = exp(-x/b).
  double b = std::sqrt(6.0 * ss / n) / std::numbers::pi;
  const double centred_mean = mean - shift;
  for (int iter = 0; iter < kMaxNewtonIterations; ++iter) {
    double s0, s1, s2;
    sums(b, s0, s1, s2);
    const double weighted = s1 / s0;
    const double g = b - centred_mean + weighted;
    const double dg = 1.0 + (s2 / s0 - weighted * weighted) / (b * b);
    double step = g / dg;
    while (b - step <= 0.0) step *= 0.5;
    b -= step;
    if (std::abs(step) < 1e-10) {
      sums(b, s0, s1, s2);
      FitResult fit;
      fit.scale = b;
      fit.location = shift - b * std::log(s0 / n);
      fit.method = Method::MLE;
      fit.family = Family::Gumbel;
      check_scale(fit.scale, Method::MLE);
      return fit;
    }
  }
  throw ConvergenceError("Gumbel MLE: Newton iteration did not converge in 200 steps");
}

}  // namespace

std::string_view to_string(Method method) {
  switch (method) {
    case Method::OLS:
      return "ols";
    case Method::GLS:
      return "gls";
    case Method::MLE:
      return "mle";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "ols") return Method::OLS;
  if (name == "gls") return Method::GLS;
  if (name == "mle") return Method::MLE;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

DistributionSpec FitResult::distribution() const {
  switch (family) {
    case Family::Gumbel:
      return DistributionSpec::gumbel(location, scale);
    case Family::Normal:
      return DistributionSpec::normal(location, scale);
    case Family::LogNormal3:
      return DistributionSpec::lognormal3(location, scale, threshold);
  }
  throw DomainError("unknown family");
}

FitResult fit_ols(std::span<const double> x_sorted, std::span<const double> y, Family family) {
  if (x_sorted.size() != y.size()) throw SizeMismatch("fit_ols: |x| != |y|");
  if (x_sorted.size() < 3) throw DomainError("fit_ols needs at least 3 points");
  const double n = static_cast<double>(y.size());
  const double ybar = std::accumulate(y.begin(), y.end(), 0.0) / n;
  const double xbar = std::accumulate(x_sorted.begin(), x_sorted.end(), 0.0) / n;
  double syy = 0.0;
  double sxy = 0.0;
  for (std::size_t i = 0; i < y.size(); ++i) {
    syy += (y[i] - ybar) * (y[i] - ybar);
    sxy += (y[i] - ybar) * (x_sorted[i] - xbar);
  }
  if (!(syy > 0.0)) throw DegenerateError("fit_ols: regressors are constant");

  FitResult fit;
  fit.scale = sxy / syy;
  fit.location = xbar - fit.scale * ybar;
  fit.method = Method::OLS;
  fit.family = family;
  fit.design.assign(y.begin(), y.end());
  check_scale(fit.scale, Method::OLS);
  fill_residuals(fit, x_sorted);
  return fit;
}

FitResult fit_gls(std::span<const double> x_sorted, const OrderStatMoments& moments) {
  const auto n = static_cast<Eigen::Index>(x_sorted.size());
  if (n != moments.covariance.rows() || moments.means.size() != x_sorted.size()) {
    throw SizeMismatch("fit_gls: observations and moments differ in size");
  }
  if (n < 3) throw DomainError("fit_gls needs at least 3 points");

  const Eigen::LLT<Eigen::MatrixXd> chol(moments.covariance);
  if (chol.info() != Eigen::Success) throw SingularMatrix("fit_gls: V is not positive definite");

  Eigen::MatrixXd design(n, 2);
  design.col(0).setOnes();
  design.col(1) = Eigen::Map<const Eigen::VectorXd>(moments.means.data(), n);
  const Eigen::VectorXd x = Eigen::Map<const Eigen::VectorXd>(x_sorted.data(), n);

  // Whiten with L^{-1}: theta = (A' V^-1 A)^-1 A' V^-1 x.
  const Eigen::MatrixXd wa = chol.matrixL().solve(design);
  const Eigen::VectorXd wx = chol.matrixL().solve(x);
  const Eigen::Matrix2d normal = wa.transpose() * wa;
  const Eigen::LDLT<Eigen::Matrix2d> normal_solver(normal);
  if (normal_solver.info() != Eigen::Success || std::abs(normal.determinant()) <= 0.0) {
    throw DegenerateError("fit_gls: regressors are constant");
  }
  const Eigen::Vector2d theta = normal_solver.solve(wa.transpose() * wx);

  FitResult fit;
  fit.location = theta(0);
  fit.scale = theta(1);
  fit.method = Method::GLS;
  fit.family = moments.family;
  fit.design = moments.means;
  fit.ridge = moments.ridge;
  check_scale(fit.scale, Method::GLS);
  fill_residuals(fit, x_sorted);
  return fit;
}

FitResult fit_mle(std::span<const double> x, Family family) {
  if (x.size() < 2) throw DomainError("fit_mle needs at least 2 observations");
  if (family == Family::Gumbel) return gumbel_mle(x);
  if (family != Family::Normal) throw DomainError("fit_mle supports gumbel and normal only");

  const double n = static_cast<double>(x.size());
  const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
  double ss = 0.0;
  for (double v : x) ss += (v - mean) * (v - mean);
  if (!(ss > 0.0)) throw DegenerateError("Normal MLE: observations have zero spread");
  FitResult fit;
  fit.location = mean;
  fit.scale = std::sqrt(ss / n);
  fit.method = Method::MLE;
  fit.family = Family::Normal;
  return fit;
}

FitResult as_lognormal3(FitResult fit, double threshold) {
  fit.family = Family::LogNormal3;
  fit.threshold = threshold;
  return fit;
}

QuantileEstimate predict_quantile(const FitResult& fit, double return_period) {
  if (!(return_period > 1.0) || !std::isfinite(return_period)) {
    throw DomainError("return period must be > 1, got " + std::to_string(return_period));
  }
  const double level = 1.0 - 1.0 / return_period;
  return {return_period, quantile(fit.distribution(), level), level};
}

double exceedance_probability(const FitResult& fit, double level) {
  return survival(fit.distribution(), level);
}

}  // namespace ppbench
