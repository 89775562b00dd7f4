#include "ppbench/distributions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "ppbench/errors.hpp"

namespace ppbench {

namespace {

constexpr double kSqrt2Pi = 2.506628274631000502415765;

void require_probability(double p, const char* what) {
  if (!(p > 0.0 && p < 1.0)) {
    throw DomainError(std::string(what) + ": probability must lie in (0,1), got " +
                      std::to_string(p));
  }
}

template <std::size_t N>
double horner(const std::array<double, N>& c, double x) {
  double acc = c[N - 1];
  for (std::size_t k = N - 1; k-- > 0;) acc = acc * x + c[k];
  return acc;
}

// Wichura (1988), algorithm AS 241 (PPND16); about 1e-16 relative accuracy.
double ppnd16(double p) {
  static constexpr std::array<double, 8> a{
      3.3871328727963666080e0, 1.3314166789178437745e+2, 1.9715909503065514427e+3,
      1.3731693765509461125e+4, 4.5921953931549871457e+4, 6.7265770927008700853e+4,
      3.3430575583588128105e+4, 2.5090809287301226727e+3};
  static constexpr std::array<double, 8> b{
      1.0, 4.2313330701600911252e+1, 6.8718700749205790830e+2, 5.3941960214247511077e+3,
      2.1213794301586595867e+4, 3.9307895800092710610e+4, 2.8729085735721942674e+4,
      5.2264952788528545610e+3};
  static constexpr std::array<double, 8> c{
      1.42343711074968357734e0, 4.63033784615654529590e0, 5.76949722146069140550e0,
      3.64784832476320460504e0, 1.27045825245236838258e0, 2.41780725177450611770e-1,
      2.27238449892691845833e-2, 7.74545014278341407640e-4};
  static constexpr std::array<double, 8> d{
      1.0, 2.05319162663775882187e0, 1.67638483018380384940e0, 6.89767334985100004550e-1,
      1.48103976427480074590e-1, 1.51986665636164571966e-2, 5.47593808499534494600e-4,
      1.05075007164441684324e-9};
  static constexpr std::array<double, 8> e{
      6.65790464350110377720e0, 5.46378491116411436990e0, 1.78482653991729133580e0,
      2.96560571828504891230e-1, 2.65321895265761230930e-2, 1.24266094738807843860e-3,
      2.71155556874348757815e-5, 2.01033439929228813265e-7};
  static constexpr std::array<double, 8> f{
      1.0, 5.99832206555887937690e-1, 1.36929880922735805310e-1, 1.48753612908506148525e-2,
      7.86869131145613259100e-4, 1.84631831751005468180e-5, 1.42151175831644588870e-7,
      2.04426310338993978564e-15};

  const double q = p - 0.5;
  if (std::abs(q) <= 0.425) {
    const double r = 0.180625 - q * q;
    return q * horner(a, r) / horner(b, r);
  }
  double r = q < 0.0 ? p : 1.0 - p;
  r = std::sqrt(-std::log(r));
  double value;
  if (r <= 5.0) {
    r -= 1.6;
    value = horner(c, r) / horner(d, r);
  } else {
    r -= 5.0;
    value = horner(e, r) / horner(f, r);
  }
  return q < 0.0 ? -value : value;
}

double gumbel_minus_log_p(double p) {
  // p - 1 is exact on [0.5, 1], which keeps -log(p) accurate in the upper tail.
  return p > 0.5 ? -std::log1p(p - 1.0) : -std::log(p);
}

}  // namespace

std::string_view to_string(Family family) {
  switch (family) {
    case Family::Gumbel:
      return "gumbel";
    case Family::Normal:
      return "normal";
    case Family::LogNormal3:
      return "lognormal3";
  }
  return "unknown";
}

Family parse_family(std::string_view name) {
  if (name == "gumbel") return Family::Gumbel;
  if (name == "normal") return Family::Normal;
  if (name == "lognormal3" || name == "lognormal") return Family::LogNormal3;
  throw DomainError("unknown family '" + std::string(name) + "'");
}

DistributionSpec::DistributionSpec(Family family, double location, double scale, double threshold)
    : family_(family), location_(location), scale_(scale), threshold_(threshold) {
  if (!(scale > 0.0) || !std::isfinite(scale)) {
    throw DomainError("scale must be finite and > 0, got " + std::to_string(scale));
  }
  if (!std::isfinite(location) || !std::isfinite(threshold)) {
    throw DomainError("location and threshold must be finite");
  }
}

DistributionSpec DistributionSpec::gumbel(double location, double scale) {
  return {Family::Gumbel, location, scale, 0.0};
}

DistributionSpec DistributionSpec::normal(double location, double scale) {
  return {Family::Normal, location, scale, 0.0};
}

DistributionSpec DistributionSpec::lognormal3(double location, double scale, double threshold) {
  return {Family::LogNormal3, location, scale, threshold};
}

DistributionSpec DistributionSpec::reduced(Family family) { return {family, 0.0, 1.0, 0.0}; }

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double normal_pdf(double z) { return std::exp(-0.5 * z * z) / kSqrt2Pi; }

double normal_quantile(double p) {
  require_probability(p, "normal_quantile");
  double x = ppnd16(p);
  // One Halley step on the cdf.
  const double err = normal_cdf(x) - p;
  const double u = err * kSqrt2Pi * std::exp(0.5 * x * x);
  x -= u / (1.0 + 0.5 * x * u);
  return x;
}

double reduced_cdf(Family family, double z) {
  if (family == Family::Gumbel) return std::exp(-std::exp(-z));
  return normal_cdf(z);
}

double reduced_quantile(Family family, double p) {
  require_probability(p, "quantile");
  if (family == Family::Gumbel) return -std::log(gumbel_minus_log_p(p));
  return normal_quantile(p);
}

double reduced_mean(Family family) {
  return family == Family::Gumbel ? std::numbers::egamma : 0.0;
}

double reduced_second_moment(Family family) {
  if (family == Family::Gumbel) {
    return std::numbers::egamma * std::numbers::egamma + std::numbers::pi * std::numbers::pi / 6.0;
  }
  return 1.0;
}

double cdf(const DistributionSpec& d, double x) {
  switch (d.family()) {
    case Family::Gumbel:
    case Family::Normal:
      return reduced_cdf(d.family(), (x - d.location()) / d.scale());
    case Family::LogNormal3:
      if (x <= d.threshold()) return 0.0;
      return normal_cdf((std::log(x - d.threshold()) - d.location()) / d.scale());
  }
  return 0.0;
}

double survival(const DistributionSpec& d, double x) {
  switch (d.family()) {
    case Family::Gumbel:
      return -std::expm1(-std::exp(-(x - d.location()) / d.scale()));
    case Family::Normal:
      return normal_cdf(-(x - d.location()) / d.scale());
    case Family::LogNormal3:
      if (x <= d.threshold()) return 1.0;
      return normal_cdf(-(std::log(x - d.threshold()) - d.location()) / d.scale());
  }
  return 0.0;
}

double pdf(const DistributionSpec& d, double x) {
  switch (d.family()) {
    case Family::Gumbel: {
      const double z = (x - d.location()) / d.scale();
      return std::exp(-z - std::exp(-z)) / d.scale();
    }
    case Family::Normal:
      return normal_pdf((x - d.location()) / d.scale()) / d.scale();
    case Family::LogNormal3: {
      if (x <= d.threshold()) return 0.0;
      const double shifted = x - d.threshold();
      return normal_pdf((std::log(shifted) - d.location()) / d.scale()) / (d.scale() * shifted);
    }
  }
  return 0.0;
}

double quantile(const DistributionSpec& d, double p) {
  const double z = reduced_quantile(d.family(), p);
  const double y = d.location() + d.scale() * z;
  if (d.family() == Family::LogNormal3) return d.threshold() + std::exp(y);
  return y;
}

double quantile_derivative(Family family, double p, int order) {
  if (order < 1 || order > 4) {
    throw UnsupportedOrder("quantile derivative order must be in 1..4, got " +
                           std::to_string(order));
  }
  require_probability(p, "quantile_derivative");

  if (family == Family::Gumbel) {
    // Q(p) = -ln L with L = -ln p.
    const double L = gumbel_minus_log_p(p);
    const double pL = p * L;
    switch (order) {
      case 1:
        return 1.0 / pL;
      case 2:
        return -(L - 1.0) / (pL * pL);
      case 3:
        return (2.0 * L * L - 3.0 * L + 2.0) / (pL * pL * pL);
      default:
        return -(((6.0 * L - 11.0) * L + 12.0) * L - 6.0) / (pL * pL * pL * pL);
    }
  }

  // Normal (and LogNormal3 on the log scale): Q' = 1/phi(Q), Q'' = Q Q'^2, ...
  const double q = normal_quantile(p);
  const double d1 = 1.0 / normal_pdf(q);
  switch (order) {
    case 1:
      return d1;
    case 2:
      return q * d1 * d1;
    case 3:
      return d1 * d1 * d1 * (1.0 + 2.0 * q * q);
    default:
      return d1 * d1 * d1 * d1 * q * (7.0 + 6.0 * q * q);
  }
}

UniformStream::UniformStream(std::uint64_t seed, std::uint64_t stream) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(stream), static_cast<std::uint32_t>(stream >> 32)};
  engine_.seed(seq);
}

double UniformStream::next() {
  constexpr double kTwoPowMinus53 = 1.0 / 9007199254740992.0;
  return (static_cast<double>(engine_() >> 11) + 0.5) * kTwoPowMinus53;
}

std::vector<double> sample(const DistributionSpec& d, std::size_t n, std::uint64_t seed,
                           std::uint64_t stream) {
  if (n == 0) throw DomainError("sample size must be >= 1");
  UniformStream uniforms(seed, stream);
  std::vector<double> out(n);
  for (auto& x : out) x = quantile(d, uniforms.next());
  return out;
}

}  // namespace ppbench
