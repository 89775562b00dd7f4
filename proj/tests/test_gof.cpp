#include <algorithm>
#include <cmath>

#include "doctest.h"
#include "ppbench/distributions.hpp"
#include "ppbench/errors.hpp"
#include "ppbench/gof.hpp"

using namespace ppbench;

TEST_CASE("mAD reference value") {
  // Raw statistic frozen from scipy.stats.anderson (divisor n-1).
  const std::vector<double> x = {0.3, 1.2, -0.4, 2.2, 0.9, 0.1, -1.3, 0.6};
  const auto r = mad_case3(x);
  CHECK(r.a2_raw == doctest::Approx(0.13420316463274062).epsilon(1e-12));
  CHECK(r.a2_modified == doctest::Approx(0.15150279132367983).epsilon(1e-12));
  CHECK(r.verdict == MadVerdict::Pass5pct);
  CHECK(r.n == 8);
  CHECK(r.a2_modified >= r.a2_raw);
  CHECK(mad_modification_factor(8) == doctest::Approx(1.0 + 0.75 / 8 + 2.25 / 64));
}

TEST_CASE("mAD verdict thresholds") {
  CHECK(MadResult::kCritical5pct == 0.787);
  CHECK(MadResult::kCritical2_5pct == 0.918);
  // A strongly skewed sample fails.
  std::vector<double> x;
  for (int i = 1; i <= 40; ++i) x.push_back(std::exp(0.25 * i));
  CHECK(mad_case3(x).verdict == MadVerdict::Fail);
}

TEST_CASE("mAD invariances") {
  const auto x = sample(DistributionSpec::normal(), 25, 3);
  const double base = mad_case3(x).a2_modified;
  std::vector<double> t;
  for (double v : x) t.push_back(-7.0 + 4.5 * v);
  CHECK(mad_case3(t).a2_modified == doctest::Approx(base).epsilon(1e-10));
  std::vector<double> rev(x.rbegin(), x.rend());
  CHECK(mad_case3(rev).a2_modified == doctest::Approx(base).epsilon(1e-14));
}

TEST_CASE("mAD errors") {
  CHECK_THROWS_AS(mad_case3(std::vector<double>{1, 2, 3, 4}), DomainError);
  CHECK_THROWS_AS(mad_case3(std::vector<double>{1, 1, 1, 1, 1}), DegenerateError);
  CHECK_THROWS_AS(mad_known_params(std::vector<double>{1, 2, 3, 4, 5}, 0.0, 0.0), DomainError);
}

TEST_CASE("mAD on quantile-spaced data with known parameters") {
  std::vector<double> x;
  for (int i = 1; i <= 50; ++i) x.push_back(2.0 + 0.5 * normal_quantile((i - 0.5) / 50.0));
  const auto r = mad_known_params(x, 2.0, 0.5);
  CHECK(r.a2_modified < 0.1);
  CHECK(r.verdict == MadVerdict::Pass5pct);
  CHECK_FALSE(r.tie_saturated);
}

TEST_CASE("mAD rejection rate under the null") {
  int below = 0;
  const int trials = 400;
  for (int s = 0; s < trials; ++s) {
    const auto x = sample(DistributionSpec::normal(), 10000, 4242, s);
    if (mad_case3(x).a2_modified < MadResult::kCritical5pct) ++below;
  }
  // Nominal 95%; the frequency of staying below the 5% point is well above 0.9.
  CHECK(double(below) / trials >= 0.92);
}

TEST_CASE("mAD flags saturated probabilities") {
  std::vector<double> x = {0, 0, 0, 0, 0, 0, 0, 0, 0, 1e3};
  const auto r = mad_known_params(x, 0.0, 1e-3);
  CHECK(r.tie_saturated);
  CHECK(std::isfinite(r.a2_modified));
}

TEST_CASE("verdict names") {
  CHECK(to_string(MadVerdict::Pass5pct) == "pass-5pct");
  CHECK(to_string(MadVerdict::Pass2_5pct) == "pass-2.5pct");
  CHECK(to_string(MadVerdict::Fail) == "fail");
}
