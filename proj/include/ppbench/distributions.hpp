#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace ppbench {

/// Parent families. LogNormal3 is the three-parameter log-normal whose
/// location and scale act on log(x - c); its reduced variate is standard normal.
enum class Family { Gumbel, Normal, LogNormal3 };

std::string_view to_string(Family family);
Family parse_family(std::string_view name);

/// A location-scale member of one of the parent families.
///
/// For Gumbel and Normal, x = location + scale * z with z the reduced variate.
/// For LogNormal3, log(x - threshold) = location + scale * z with z ~ N(0,1);
/// the threshold is always supplied by the caller, never estimated.
class DistributionSpec {
 public:
  static DistributionSpec gumbel(double location = 0.0, double scale = 1.0);
  static DistributionSpec normal(double location = 0.0, double scale = 1.0);
  static DistributionSpec lognormal3(double location, double scale, double threshold);
  static DistributionSpec reduced(Family family);

  Family family() const { return family_; }
  double location() const { return location_; }
  double scale() const { return scale_; }
  double threshold() const { return threshold_; }
  bool is_reduced() const { return location_ == 0.0 && scale_ == 1.0; }

 private:
  DistributionSpec(Family family, double location, double scale, double threshold);

  Family family_;
  double location_;
  double scale_;
  double threshold_;
};

double cdf(const DistributionSpec& d, double x);
double pdf(const DistributionSpec& d, double x);

/// 1 - cdf, evaluated without cancellation in the upper tail.
double survival(const DistributionSpec& d, double x);

/// Inverse cdf. Throws DomainError for p outside (0,1).
double quantile(const DistributionSpec& d, double p);

/// d^order Q / dp^order of the reduced quantile function Q, order in 1..4.
/// LogNormal3 uses the normal reduced quantile (log scale).
double quantile_derivative(Family family, double p, int order);

// Reduced-variate helpers used throughout the library.
double reduced_cdf(Family family, double z);
double reduced_quantile(Family family, double p);

/// E[Z] and E[Z^2] of the reduced variate.
double reduced_mean(Family family);
double reduced_second_moment(Family family);

double normal_cdf(double z);
double normal_pdf(double z);
double normal_quantile(double p);

/// Reproducible uniform stream.
///
/// Each (seed, stream) pair seeds a std::mt19937_64 through std::seed_seq; both
/// are specified bit-exactly by the standard, so a benchmark replicate can be
/// regenerated from its index alone on any conforming platform. Uniforms are
/// formed from the top 53 bits with a half-ulp offset and never equal 0 or 1.
class UniformStream {
 public:
  UniformStream(std::uint64_t seed, std::uint64_t stream = 0);

  double next();

 private:
  std::mt19937_64 engine_;
};

/// Inverse-cdf sample of size n from stream (seed, stream). Throws DomainError for n == 0.
std::vector<double> sample(const DistributionSpec& d, std::size_t n, std::uint64_t seed,
                           std::uint64_t stream = 0);

}  // namespace ppbench
