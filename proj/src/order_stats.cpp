#include "ppbench/order_stats.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "ppbench/errors.hpp"

namespace ppbench {

namespace {

constexpr double kMeanTolerance = 1e-9;
constexpr double kCovTolerance = 1e-7;
constexpr int kExactCovMaxSize = 10;

void require_rank(int rank, int size) {
  if (size < 1 || rank < 1 || rank > size) {
    throw DomainError("rank " + std::to_string(rank) + " outside 1.." + std::to_string(size));
  }
}

void require_family(Family family) {
  if (family == Family::LogNormal3) {
    throw DomainError("order-statistic moments are defined on the reduced Gumbel or Normal scale");
  }
}

double log_factorial(int n) { return std::lgamma(n + 1.0); }

constexpr double kEndpointCut = 1e-14;

// Adaptive bisection around a fixed 31-point Gauss-Kronrod rule. The Kronrod
// minus Gauss difference is rescaled to the panel width here, because the
// library routine reports it on its reference interval.
template <class F>
double adapt(F& f, double a, double b, double tol, int depth, double* error) {
  using boost::math::quadrature::gauss_kronrod;
  double e = 0.0;
  const double value = gauss_kronrod<double, 31>::integrate(f, a, b, 0, 0.0, &e);
  e *= 0.5 * (b - a);
  if (e <= tol || depth == 0) {
    *error += e;
    return value;
  }
  const double mid = 0.5 * (a + b);
  return adapt(f, a, mid, 0.5 * tol, depth - 1, error) + adapt(f, mid, b, 0.5 * tol, depth - 1, error);
}

// Integrates f over (0,1) cut at kEndpointCut from each end, on panels that
// shrink by decades toward both endpoints so the singularities of Q stay
// inside well-resolved pieces. `mid` is an extra breakpoint.
template <class F>
double integrate_unit(F&& f, double mid, double tol, double* error) {
  std::vector<double> cuts;
  for (double e = kEndpointCut; e < 0.1; e *= 10.0) cuts.push_back(e);
  cuts.push_back(0.1);
  for (double e = 0.1; e >= kEndpointCut * 0.5; e /= 10.0) cuts.push_back(1.0 - e);
  if (mid > cuts.front() && mid < cuts.back()) cuts.push_back(mid);
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

  const double panel_tol = tol / static_cast<double>(cuts.size());
  double total = 0.0;
  *error = 0.0;
  for (std::size_t k = 1; k < cuts.size(); ++k) {
    total += adapt(f, cuts[k - 1], cuts[k], panel_tol, 16, error);
  }
  return total;
}

}  // namespace

BetaOrderLaw::BetaOrderLaw(int rank, int size) : rank_(rank), size_(size) {
  require_rank(rank, size);
  log_norm_ = log_factorial(size) - log_factorial(rank - 1) - log_factorial(size - rank);
}

double BetaOrderLaw::pdf(double t) const {
  if (t <= 0.0 || t >= 1.0) return 0.0;
  return std::exp(log_norm_ + (shape_a() - 1.0) * std::log(t) +
                  (shape_b() - 1.0) * std::log1p(-t));
}

std::string_view to_string(CovMode mode) {
  switch (mode) {
    case CovMode::Expansion:
      return "expansion";
    case CovMode::Exact:
      return "exact";
    case CovMode::Diagonal:
      return "diagonal";
    case CovMode::Identity:
      return "identity";
  }
  return "unknown";
}

CovMode parse_cov_mode(std::string_view name) {
  if (name == "expansion") return CovMode::Expansion;
  if (name == "exact") return CovMode::Exact;
  if (name == "diagonal") return CovMode::Diagonal;
  if (name == "identity") return CovMode::Identity;
  throw DomainError("unknown covariance mode '" + std::string(name) + "'");
}

double expansion_mean(Family family, int rank, int size, int order) {
  require_rank(rank, size);
  if (order < 0 || order > 4) {
    throw UnsupportedOrder("expansion order must be in 0..4, got " + std::to_string(order));
  }
  const double mu = static_cast<double>(rank) / (size + 1);
  const double spread = mu * (1.0 - mu);
  const double n2 = size + 2.0;

  double y = reduced_quantile(family, mu);
  if (order >= 2) y += spread / (2.0 * n2) * quantile_derivative(family, mu, 2);
  if (order >= 3) {
    y += spread / (n2 * n2) * (1.0 / 3.0) * (1.0 - 2.0 * mu) * quantile_derivative(family, mu, 3);
  }
  if (order >= 4) {
    y += spread / (n2 * n2) * (1.0 / 8.0) * spread * quantile_derivative(family, mu, 4);
  }
  return y;
}

double expansion_cov(Family family, int i, int j, int size) {
  require_rank(i, size);
  require_rank(j, size);
  if (i > j) std::swap(i, j);

  const double mi = static_cast<double>(i) / (size + 1);
  const double mj = static_cast<double>(j) / (size + 1);
  const double n2 = size + 2.0;

  const double d1i = quantile_derivative(family, mi, 1);
  const double d1j = quantile_derivative(family, mj, 1);
  const double d2i = quantile_derivative(family, mi, 2);
  const double d2j = quantile_derivative(family, mj, 2);
  const double d3i = quantile_derivative(family, mi, 3);
  const double d3j = quantile_derivative(family, mj, 3);

  const double cross = mi * (1.0 - mj);
  const double correction = (1.0 - 2.0 * mi) * d2i * d1j + (1.0 - 2.0 * mj) * d2j * d1i +
                            0.5 * mi * (1.0 - mi) * d3i * d1j +
                            0.5 * mj * (1.0 - mj) * d3j * d1i + 0.5 * cross * d2i * d2j;
  return cross / n2 * d1i * d1j + cross / (n2 * n2) * correction;
}

double exact_mean(const QuantileFn& quantile, int rank, int size) {
  const BetaOrderLaw law(rank, size);
  auto integrand = [&](double t) { return quantile(t) * law.pdf(t); };
  double error = 0.0;
  const double value = integrate_unit(integrand, law.mean(), 0.1 * kMeanTolerance, &error);
  if (!(error <= kMeanTolerance) || !std::isfinite(value)) {
    throw QuadratureError("exact_mean: error estimate " + std::to_string(error) +
                          " above tolerance for rank " + std::to_string(rank));
  }
  return value;
}

double exact_mean(Family family, int rank, int size) {
  require_family(family);
  return exact_mean([family](double t) { return reduced_quantile(family, t); }, rank, size);
}

std::vector<double> exact_means(Family family, int size) {
  std::vector<double> out(size);
  for (int i = 1; i <= size; ++i) out[i - 1] = exact_mean(family, i, size);
  return out;
}

double exact_cov(const QuantileFn& quantile, int i, int j, int size) {
  require_rank(i, size);
  require_rank(j, size);
  if (size > kExactCovMaxSize) {
    throw CostGuardError("exact_cov limited to N <= " + std::to_string(kExactCovMaxSize));
  }
  if (i > j) std::swap(i, j);

  const double mean_i = exact_mean(quantile, i, size);
  if (i == j) {
    const BetaOrderLaw law(i, size);
    auto integrand = [&](double t) {
      const double dz = quantile(t) - mean_i;
      return dz * dz * law.pdf(t);
    };
    double error = 0.0;
    const double value = integrate_unit(integrand, law.mean(), 0.1 * kCovTolerance, &error);
    if (!(error <= kCovTolerance)) {
      throw QuadratureError("exact_cov: variance quadrature did not converge");
    }
    return value;
  }

  const double mean_j = exact_mean(quantile, j, size);
  // Joint density of (U_(i), U_(j)) at s < t:
  //   C s^{i-1} (t-s)^{j-i-1} (1-t)^{N-j}.
  // The inner integral uses s = t v, v in (0,1).
  const double log_c = log_factorial(size) - log_factorial(i - 1) - log_factorial(j - i - 1) -
                       log_factorial(size - j);
  const double ai = i - 1.0;
  const double gap = j - i - 1.0;
  const double tail = size - j;

  double worst_inner = 0.0;
  auto outer = [&](double t) {
    auto inner = [&](double v) {
      const double weight = std::exp(ai * std::log(v) + gap * std::log1p(-v));
      return (quantile(t * v) - mean_i) * weight;
    };
    double inner_error = 0.0;
    const double inner_value = integrate_unit(inner, 0.5, 1e-10, &inner_error);
    const double log_weight = log_c + (j - 1.0) * std::log(t) + tail * std::log1p(-t);
    const double factor = (quantile(t) - mean_j) * std::exp(log_weight);
    worst_inner = std::max(worst_inner, std::abs(factor) * inner_error);
    return factor * inner_value;
  };
  double error = 0.0;
  const double mid = static_cast<double>(j) / (size + 1);
  const double value = integrate_unit(outer, mid, 0.05 * kCovTolerance, &error);
  if (!(error + worst_inner <= kCovTolerance) || !std::isfinite(value)) {
    throw QuadratureError("exact_cov: error estimate " + std::to_string(error + worst_inner) +
                          " above tolerance");
  }
  return value;
}

double exact_cov(Family family, int i, int j, int size) {
  require_family(family);
  return exact_cov([family](double t) { return reduced_quantile(family, t); }, i, j, size);
}

double repair_positive_definite(Eigen::MatrixXd& v) {
  if (Eigen::LLT<Eigen::MatrixXd>(v).info() == Eigen::Success) return 0.0;
  const double n = static_cast<double>(v.rows());
  double delta = 1e-10 * v.trace() / n;
  if (!(delta > 0.0)) delta = 1e-10;
  for (int attempt = 0; attempt < 200; ++attempt) {
    Eigen::MatrixXd trial = v;
    trial.diagonal().array() += delta;
    if (Eigen::LLT<Eigen::MatrixXd>(trial).info() == Eigen::Success) {
      v = std::move(trial);
      return delta;
    }
    delta *= 2.0;
  }
  throw SingularMatrix("covariance repair failed: no ridge made V positive definite");
}

OrderStatMoments build_moments(Family family, int size, int order, CovMode mode) {
  require_family(family);
  if (size < 2) throw DomainError("build_moments requires N >= 2");
  if (mode == CovMode::Exact && size > kExactCovMaxSize) {
    throw CostGuardError("exact covariance mode limited to N <= " +
                         std::to_string(kExactCovMaxSize));
  }

  OrderStatMoments m{family, size, order, mode, {}, Eigen::MatrixXd::Identity(size, size), 0.0};
  m.means.resize(size);
  for (int i = 1; i <= size; ++i) {
    m.means[i - 1] = mode == CovMode::Exact ? exact_mean(family, i, size)
                                            : expansion_mean(family, i, size, order);
  }

  switch (mode) {
    case CovMode::Identity:
      break;
    case CovMode::Diagonal:
      for (int i = 1; i <= size; ++i) m.covariance(i - 1, i - 1) = expansion_cov(family, i, i, size);
      break;
    case CovMode::Expansion:
      for (int i = 1; i <= size; ++i) {
        for (int j = i; j <= size; ++j) {
          const double c = expansion_cov(family, i, j, size);
          m.covariance(i - 1, j - 1) = c;
          m.covariance(j - 1, i - 1) = c;
        }
      }
      break;
    case CovMode::Exact:
      for (int i = 1; i <= size; ++i) {
        for (int j = i; j <= size; ++j) {
          const double c = exact_cov(family, i, j, size);
          m.covariance(i - 1, j - 1) = c;
          m.covariance(j - 1, i - 1) = c;
        }
      }
      break;
  }
  m.ridge = repair_positive_definite(m.covariance);
  return m;
}

}  // namespace ppbench
