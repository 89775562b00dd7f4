#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "ppbench/errors.hpp"
#include "ppbench/order_stats.hpp"

using namespace ppbench;

namespace {

double max_abs_error(Family family, int size, int order) {
  double worst = 0.0;
  for (int i = 1; i <= size; ++i) {
    worst = std::max(worst, std::abs(expansion_mean(family, i, size, order) -
                                     exact_mean(family, i, size)));
  }
  return worst;
}

}  // namespace

TEST_CASE("Beta order law moments") {
  const BetaOrderLaw law(3, 7);
  CHECK(law.mean() == 3.0 / 8.0);
  CHECK(law.variance() == (3.0 / 8.0) * (5.0 / 8.0) / 9.0);
  CHECK(law.shape_a() == 3);
  CHECK(law.shape_b() == 5);
  CHECK_THROWS_AS(BetaOrderLaw(0, 3), DomainError);
  CHECK_THROWS_AS(BetaOrderLaw(4, 3), DomainError);
}

TEST_CASE("Beta order law agrees with Monte Carlo draws") {
  std::mt19937_64 rng(11);
  for (auto [i, n] : {std::pair{1, 5}, std::pair{3, 10}, std::pair{30, 30}}) {
    const BetaOrderLaw law(i, n);
    std::gamma_distribution<double> ga(law.shape_a(), 1.0);
    std::gamma_distribution<double> gb(law.shape_b(), 1.0);
    const int draws = 1000000;
    double s = 0.0;
    double s2 = 0.0;
    for (int k = 0; k < draws; ++k) {
      const double x = ga(rng);
      const double u = x / (x + gb(rng));
      s += u;
      s2 += u * u;
    }
    const double mean = s / draws;
    const double var = s2 / draws - mean * mean;
    const double se_mean = std::sqrt(law.variance() / draws);
    CHECK(std::abs(mean - law.mean()) < 4.0 * se_mean);
    // Standard error of the sample variance, bounded with the fourth moment of a (0,1) variable.
    const double se_var = std::sqrt(2.0 / draws) * law.variance() + 1e-6;
    CHECK(std::abs(var - law.variance()) < 4.0 * se_var);
  }
}

TEST_CASE("Beta pdf integrates to one") {
  const BetaOrderLaw law(2, 6);
  double s = 0.0;
  const int m = 20000;
  for (int k = 0; k < m; ++k) s += law.pdf((k + 0.5) / m);
  CHECK(s / m == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("expansion mean reference values") {
  CHECK(expansion_mean(Family::Gumbel, 1, 1, 0) == doctest::Approx(-std::log(std::log(2.0))).epsilon(1e-14));
  CHECK(expansion_mean(Family::Gumbel, 1, 1, 0) == doctest::Approx(0.36651).epsilon(1e-5));
  for (int k : {0, 2, 3, 4}) {
    CHECK(std::abs(expansion_mean(Family::Normal, 4, 7, k)) < 1e-15);
  }
  CHECK_THROWS_AS(expansion_mean(Family::Normal, 1, 5, 5), UnsupportedOrder);
  CHECK_THROWS_AS(expansion_mean(Family::Normal, 6, 5, 2), DomainError);
}

TEST_CASE("expansion mean with k = 0 reproduces the Weibull position") {
  for (Family family : {Family::Gumbel, Family::Normal}) {
    for (int n : {1, 5, 30, 100}) {
      for (int i = 1; i <= n; ++i) {
        const double p = reduced_cdf(family, expansion_mean(family, i, n, 0));
        CHECK(std::abs(p - double(i) / (n + 1)) < 1e-12);
      }
    }
  }
}

TEST_CASE("Gumbel N=5 k=4 expansion tracks the exact means") {
  // Frozen per rank: the expansion error grows in the heavy upper tail.
  const double tol[] = {0.01, 0.01, 0.01, 0.01, 0.025};
  for (int i = 1; i <= 5; ++i) {
    const double approx = expansion_mean(Family::Gumbel, i, 5, 4);
    const double exact = exact_mean(Family::Gumbel, i, 5);
    CHECK(std::abs(approx - exact) <= tol[i - 1]);
    CHECK(std::abs(reduced_cdf(Family::Gumbel, approx) - reduced_cdf(Family::Gumbel, exact)) <= 0.01);
  }
}

TEST_CASE("expansion covariance reference values") {
  const double qp = 2.0 / std::log(2.0);
  CHECK(qp == doctest::Approx(2.88539).epsilon(1e-5));
  // Leading term only: evaluate with a large N so higher terms vanish relative to it.
  const double n1 = expansion_cov(Family::Gumbel, 1, 1, 1);
  CHECK(std::isfinite(n1));
  const int n = 2001;
  const int mid = (n + 1) / 2;
  const double lead = 0.25 / (n + 2) * 2.0 * std::numbers::pi;
  CHECK(expansion_cov(Family::Normal, mid, mid, n) == doctest::Approx(lead).epsilon(1e-2));
  for (Family family : {Family::Gumbel, Family::Normal}) {
    for (int i = 1; i <= 10; ++i) {
      for (int j = 1; j <= 10; ++j) {
        CHECK(expansion_cov(family, i, j, 10) == expansion_cov(family, j, i, 10));
      }
    }
  }
}

TEST_CASE("exact mean oracles") {
  CHECK(std::abs(exact_mean(Family::Gumbel, 1, 1) - std::numbers::egamma) < 1e-8);
  CHECK(std::abs(exact_mean(Family::Normal, 1, 2) + 1.0 / std::sqrt(std::numbers::pi)) < 1e-8);
  CHECK(std::abs(exact_mean(Family::Normal, 2, 3)) < 1e-9);
  // Independent reference: mpmath quadrature, 30 digits.
  const double gumbel5[] = {-0.6901671472, -0.1068945358, 0.4255506094, 1.0709358208,
                            2.1866535773};
  for (int i = 1; i <= 5; ++i) {
    CHECK(std::abs(exact_mean(Family::Gumbel, i, 5) - gumbel5[i - 1]) < 1e-8);
  }
  CHECK(std::abs(exact_mean(Family::Normal, 5, 5) - 1.1629644736) < 1e-8);
  CHECK(std::abs(exact_mean(Family::Normal, 4, 5) - 0.4950189705) < 1e-8);
  // Uniform parent: E[U_(i)] = i/(N+1).
  const QuantileFn identity = [](double t) { return t; };
  CHECK(exact_mean(identity, 3, 9) == doctest::Approx(0.3).epsilon(1e-10));
}

TEST_CASE("exact covariance oracles") {
  const QuantileFn identity = [](double t) { return t; };
  CHECK(std::abs(exact_cov(identity, 1, 1, 1) - 1.0 / 12.0) < 1e-7);
  // Cov(U_(i), U_(j)) = i (N + 1 - j) / ((N+1)^2 (N+2)).
  CHECK(std::abs(exact_cov(identity, 2, 4, 5) - 2.0 * 2.0 / (36.0 * 7.0)) < 1e-7);
  CHECK(std::abs(exact_cov(Family::Gumbel, 1, 1, 1) - std::numbers::pi * std::numbers::pi / 6.0) < 1e-7);
  CHECK(std::abs(exact_cov(Family::Normal, 1, 1, 1) - 1.0) < 1e-7);
  for (int i = 1; i <= 4; ++i) CHECK(exact_cov(Family::Gumbel, i, i, 4) >= 0.0);
  CHECK_THROWS_AS(exact_cov(Family::Normal, 1, 1, 11), CostGuardError);
}

TEST_CASE("expansion covariance approaches the exact covariance") {
  for (Family family : {Family::Gumbel, Family::Normal}) {
    const int n = 10;
    for (int i = 2; i <= n - 1; i += 3) {
      for (int j = i; j <= n - 1; j += 2) {
        const double approx = expansion_cov(family, i, j, n);
        const double exact = exact_cov(family, i, j, n);
        INFO(to_string(family) << " " << i << "," << j);
        CHECK(std::abs(approx - exact) <= 0.1 * std::abs(exact) + 0.01);
      }
    }
  }
}

TEST_CASE("expansion error is nonincreasing in k") {
  for (Family family : {Family::Gumbel, Family::Normal}) {
    for (int n = 2; n <= 10; ++n) {
      const double e0 = max_abs_error(family, n, 0);
      const double e2 = max_abs_error(family, n, 2);
      const double e4 = max_abs_error(family, n, 4);
      INFO(to_string(family) << " N=" << n);
      CHECK(e2 <= e0);
      CHECK(e4 <= e2);
    }
  }
}

TEST_CASE("build_moments modes and invariants") {
  const auto id = build_moments(Family::Gumbel, 6, 4, CovMode::Identity);
  CHECK(id.covariance.isApprox(Eigen::MatrixXd::Identity(6, 6)));
  for (CovMode mode : {CovMode::Expansion, CovMode::Exact, CovMode::Diagonal, CovMode::Identity}) {
    const auto m = build_moments(Family::Normal, 5, 4, mode);
    CHECK(std::abs(m.means[2]) < 1e-12);
    for (int i = 0; i < 5; ++i) CHECK(std::abs(m.means[i] + m.means[4 - i]) < 1e-12);
  }
  const auto diag = build_moments(Family::Gumbel, 5, 4, CovMode::Diagonal);
  CHECK(diag.covariance(0, 1) == 0.0);
  CHECK(diag.covariance(1, 1) > 0.0);

  const auto ex = build_moments(Family::Gumbel, 5, 4, CovMode::Exact);
  const auto ap = build_moments(Family::Gumbel, 5, 4, CovMode::Expansion);
  for (int i = 0; i < 4; ++i) CHECK(std::abs(ex.means[i] - ap.means[i]) <= 0.01);
  CHECK(std::abs(ex.means[4] - ap.means[4]) <= 0.025);

  CHECK_THROWS_AS(build_moments(Family::Gumbel, 1, 4, CovMode::Expansion), DomainError);
  CHECK_THROWS_AS(build_moments(Family::Gumbel, 11, 4, CovMode::Exact), CostGuardError);
}

TEST_CASE("expansion covariance is positive definite after repair") {
  for (Family family : {Family::Gumbel, Family::Normal}) {
    for (int n : {5, 10, 30}) {
      const auto m = build_moments(family, n, 4, CovMode::Expansion);
      CHECK(m.covariance.isApprox(m.covariance.transpose(), 0.0));
      Eigen::LLT<Eigen::MatrixXd> llt(m.covariance);
      CHECK(llt.info() == Eigen::Success);
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> eig(m.covariance);
      CHECK(eig.eigenvalues().minCoeff() > 0.0);
      for (int i = 1; i < n; ++i) CHECK(m.means[i] > m.means[i - 1]);
    }
  }
}

TEST_CASE("repair adds a ridge only when needed") {
  Eigen::MatrixXd spd = Eigen::MatrixXd::Identity(3, 3);
  CHECK(repair_positive_definite(spd) == 0.0);
  Eigen::MatrixXd singular(2, 2);
  singular << 1.0, 1.0, 1.0, 1.0;
  const double ridge = repair_positive_definite(singular);
  CHECK(ridge > 0.0);
  CHECK(ridge < 1e-6);
  CHECK(Eigen::LLT<Eigen::MatrixXd>(singular).info() == Eigen::Success);
}

TEST_CASE("cov mode names round-trip") {
  for (CovMode mode : {CovMode::Expansion, CovMode::Exact, CovMode::Diagonal, CovMode::Identity}) {
    CHECK(parse_cov_mode(to_string(mode)) == mode);
  }
  CHECK_THROWS_AS(parse_cov_mode("bogus"), DomainError);
}
