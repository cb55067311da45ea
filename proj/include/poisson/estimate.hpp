#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>

namespace poisson {

/// A Monte Carlo mean with its standard error.
struct Estimate {
  double mean = 0.0;
  double std_error = 0.0;
  std::size_t n = 0;
  double ci_level = 0.95;

  double half_width() const;
  double lower() const { return mean - half_width(); }
  double upper() const { return mean + half_width(); }
};

/// Two-sided normal quantile z with P(|Z| <= z) = level.
double z_value(double level);

Estimate estimate_from_samples(std::span<const double> samples, double ci_level = 0.95);

/// Estimate of mean(a) - mean(b) from paired samples (common random numbers).
Estimate paired_difference(std::span<const double> a, std::span<const double> b,
                           double ci_level = 0.95);

/// Estimate of mean(num) / mean(den) with a delta-method standard error.
Estimate ratio_estimate(std::span<const double> num, std::span<const double> den,
                        double ci_level = 0.95);

/// Estimate of mean(num) / (p (1 - p)) with p = mean(indicator).
Estimate ratio_over_variance_of_indicator(std::span<const double> num,
                                          std::span<const double> indicator,
                                          double ci_level = 0.95);

/// Sample variance of x with the standard error of the variance estimator.
Estimate variance_estimate(std::span<const double> x, double ci_level = 0.95);

/// Combination of two independent estimates: a - b with pooled stderr.
Estimate difference_independent(const Estimate& a, const Estimate& b);

struct McSpec {
  std::size_t n_outer = 100000;
  std::uint64_t seed = 42;
  double ci_level = 0.95;
  /// Worker threads; 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

enum class Verdict { consistent, violated, holds, reported };

std::string to_string(Verdict v);

/// Paired comparison of two sides of an identity or inequality.
struct IdentityReport {
  std::string id;
  Estimate left;
  Estimate right;
  Estimate difference;  ///< left - right
  Verdict verdict = Verdict::consistent;
  double tolerance = 0.0;  ///< absolute tolerance the verdict was taken at
  std::string note;
};

/// Number of standard errors an identity may deviate by.
inline constexpr double kToleranceSigmas = 4.0;

/// Equality verdict: |difference| <= k * std_error (plus a rounding floor when both sides are exact).
IdentityReport make_equality_report(std::string id, const Estimate& left, const Estimate& right,
                                    const Estimate& difference,
                                    double sigmas = kToleranceSigmas);

/// Inequality verdict for left <= right: difference.mean <= k * std_error.
IdentityReport make_inequality_report(std::string id, const Estimate& left, const Estimate& right,
                                      const Estimate& difference,
                                      double sigmas = kToleranceSigmas);

}  // namespace poisson
