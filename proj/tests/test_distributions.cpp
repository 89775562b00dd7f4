#include <cmath>
#include <numbers>
#include <numeric>

#include "doctest.h"
#include "oracles.hpp"
#include "ppbench/distributions.hpp"
#include "ppbench/errors.hpp"

using namespace ppbench;

using ppbench::testing::fd_quantile_derivative;

TEST_CASE("cdf at reference points") {
  CHECK(cdf(DistributionSpec::gumbel(), 0.0) == doctest::Approx(std::exp(-1.0)).epsilon(1e-15));
  CHECK(cdf(DistributionSpec::normal(), 0.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(cdf(DistributionSpec::lognormal3(0.0, 1.0, 1.0), 2.0) == doctest::Approx(0.5));
  CHECK(cdf(DistributionSpec::lognormal3(0.0, 1.0, 1.0), 1.0) == 0.0);
  CHECK(cdf(DistributionSpec::lognormal3(0.0, 1.0, 1.0), 0.5) == 0.0);
}

TEST_CASE("quantile at reference points") {
  CHECK(quantile(DistributionSpec::gumbel(), std::exp(-1.0)) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(quantile(DistributionSpec::normal(), 0.5) == doctest::Approx(0.0));
  CHECK(quantile(DistributionSpec::gumbel(), 0.9) == doctest::Approx(2.25036732).epsilon(1e-8));
  // Frozen from an independent implementation (scipy.stats.norm.ppf).
  CHECK(normal_quantile(0.975) == doctest::Approx(1.959963984540054).epsilon(1e-14));
  CHECK(normal_quantile(0.001) == doctest::Approx(-3.090232306167813).epsilon(1e-14));
  CHECK(normal_quantile(1e-10) == doctest::Approx(-6.361340902404056).epsilon(1e-13));

  CHECK_THROWS_AS(quantile(DistributionSpec::normal(), 0.0), DomainError);
  CHECK_THROWS_AS(quantile(DistributionSpec::gumbel(), 1.0), DomainError);
  CHECK_THROWS_AS(quantile(DistributionSpec::gumbel(), -0.2), DomainError);
}

TEST_CASE("quantile inverts cdf on a probability grid") {
  for (Family family : {Family::Gumbel, Family::Normal}) {
    const auto d = DistributionSpec::reduced(family);
    for (int k = 1; k <= 999; ++k) {
      const double p = k / 1000.0;
      const double back = cdf(d, quantile(d, p));
      CHECK(std::abs(back - p) <= 1e-12 * p);
    }
  }
  const auto ln3 = DistributionSpec::lognormal3(0.3, 0.4, 1.0);
  for (double p : {0.01, 0.3, 0.77, 0.999}) {
    CHECK(cdf(ln3, quantile(ln3, p)) == doctest::Approx(p).epsilon(1e-12));
  }
}

TEST_CASE("survival matches 1 - cdf and stays accurate in the tail") {
  const auto d = DistributionSpec::lognormal3(-0.8, 0.5, 1.0);
  CHECK(survival(d, 2.0) == doctest::Approx(1.0 - cdf(d, 2.0)).epsilon(1e-12));
  const auto g = DistributionSpec::gumbel(0.0, 1.0);
  CHECK(survival(g, 40.0) == doctest::Approx(std::exp(-40.0)).epsilon(1e-10));
}

TEST_CASE("quantile derivatives at reference points") {
  const double e = std::exp(1.0);
  CHECK(quantile_derivative(Family::Gumbel, std::exp(-1.0), 1) == doctest::Approx(e).epsilon(1e-12));
  CHECK(quantile_derivative(Family::Normal, 0.5, 1) ==
        doctest::Approx(std::sqrt(2.0 * std::numbers::pi)).epsilon(1e-14));
  CHECK(std::abs(quantile_derivative(Family::Normal, 0.5, 2)) < 1e-14);
  CHECK_THROWS_AS(quantile_derivative(Family::Normal, 0.5, 5), UnsupportedOrder);
  CHECK_THROWS_AS(quantile_derivative(Family::Normal, 0.5, 0), UnsupportedOrder);
  CHECK_THROWS_AS(quantile_derivative(Family::Gumbel, 1.5, 1), DomainError);
}

TEST_CASE("quantile derivatives agree with finite differences") {
  for (Family family : {Family::Gumbel, Family::Normal}) {
    for (int order = 1; order <= 4; ++order) {
      for (double p = 0.05; p <= 0.9501; p += 0.05) {
        const double exact = quantile_derivative(family, p, order);
        const double fd = fd_quantile_derivative(family, p, order);
        const double scale = std::max(std::abs(exact), 1.0);
        INFO("family " << to_string(family) << " order " << order << " p " << p);
        CHECK(std::abs(exact - fd) <= 1e-5 * scale);
      }
    }
  }
}

TEST_CASE("location-scale equivariance of the quantile") {
  for (double p : {0.01, 0.2, 0.5, 0.93}) {
    const double zg = quantile(DistributionSpec::reduced(Family::Gumbel), p);
    CHECK(quantile(DistributionSpec::gumbel(3.0, 2.5), p) == 3.0 + 2.5 * zg);
    const double zn = quantile(DistributionSpec::reduced(Family::Normal), p);
    CHECK(quantile(DistributionSpec::normal(-1.0, 0.5), p) == -1.0 + 0.5 * zn);
    CHECK(std::log(quantile(DistributionSpec::lognormal3(0.2, 0.7, 1.0), p) - 1.0) ==
          doctest::Approx(0.2 + 0.7 * zn).epsilon(1e-14));
  }
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(DistributionSpec::gumbel(0.0, 0.0), DomainError);
  CHECK_THROWS_AS(DistributionSpec::normal(0.0, -1.0), DomainError);
  CHECK_THROWS_AS(parse_family("weibull"), DomainError);
  CHECK(parse_family("lognormal3") == Family::LogNormal3);
}

TEST_CASE("sampling is reproducible and inverse-cdf") {
  const auto d = DistributionSpec::gumbel(0.0, 1.0);
  CHECK_THROWS_AS(sample(d, 0, 1), DomainError);
  const auto one = sample(d, 1, 42);
  UniformStream u(42);
  CHECK(one[0] == quantile(d, u.next()));
  CHECK(sample(d, 50, 7, 3) == sample(d, 50, 7, 3));
  CHECK(sample(d, 50, 7, 3) != sample(d, 50, 7, 4));
  CHECK(sample(d, 50, 7, 3) != sample(d, 50, 8, 3));
}

TEST_CASE("sample means match known parent means") {
  const std::size_t n = 100000;
  {
    const auto x = sample(DistributionSpec::gumbel(), n, 2024);
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    const double se = std::numbers::pi / std::sqrt(6.0) / std::sqrt(double(n));
    CHECK(std::abs(mean - std::numbers::egamma) < 3.0 * se);
  }
  {
    const auto x = sample(DistributionSpec::normal(5.0, 2.0), n, 99);
    const double mean = std::accumulate(x.begin(), x.end(), 0.0) / n;
    CHECK(std::abs(mean - 5.0) < 3.0 * 2.0 / std::sqrt(double(n)));
  }
}

TEST_CASE("uniform stream stays strictly inside (0,1)") {
  UniformStream u(0, 0);
  for (int k = 0; k < 100000; ++k) {
    const double v = u.next();
    REQUIRE(v > 0.0);
    REQUIRE(v < 1.0);
  }
}
