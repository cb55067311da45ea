#include "poisson/estimate.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "poisson/error.hpp"
#include "poisson/simd/reduce.hpp"

namespace poisson {
namespace {

Estimate from_moments(const simd::Moments& m, double ci_level) {
  Estimate e;
  e.n = m.n;
  e.mean = m.mean;
  e.ci_level = ci_level;
  e.std_error = m.n > 1 ? std::sqrt(m.m2 / static_cast<double>(m.n - 1) / static_cast<double>(m.n))
                        : 0.0;
  return e;
}

void require_same_size(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw PreconditionError("paired samples differ in length");
  if (a.empty()) throw PreconditionError("no samples");
}

}  // namespace

double z_value(double level) {
  if (!(level > 0.0 && level < 1.0)) throw PreconditionError("ci_level must be in (0,1)");
  static const boost::math::normal_distribution<double> standard;
  return boost::math::quantile(standard, 0.5 + 0.5 * level);
}

double Estimate::half_width() const { return z_value(ci_level) * std_error; }

Estimate estimate_from_samples(std::span<const double> samples, double ci_level) {
  return from_moments(simd::active_kernels().moments(samples), ci_level);
}

Estimate paired_difference(std::span<const double> a, std::span<const double> b,
                           double ci_level) {
  require_same_size(a, b);
  std::vector<double> d(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) d[i] = a[i] - b[i];
  return estimate_from_samples(d, ci_level);
}

Estimate ratio_estimate(std::span<const double> num, std::span<const double> den,
                        double ci_level) {
  require_same_size(num, den);
  const auto& k = simd::active_kernels();
  const double a = k.moments(num).mean;
  const double b = k.moments(den).mean;
  if (b == 0.0) throw PreconditionError("ratio with zero denominator mean");
  const double r = a / b;
  std::vector<double> influence(num.size());
  for (std::size_t i = 0; i < num.size(); ++i) influence[i] = (num[i] - r * den[i]) / b;
  Estimate e = from_moments(k.moments(influence), ci_level);
  e.mean = r;
  return e;
}

Estimate ratio_over_variance_of_indicator(std::span<const double> num,
                                          std::span<const double> indicator, double ci_level) {
  require_same_size(num, indicator);
  const auto& k = simd::active_kernels();
  const double a = k.moments(num).mean;
  const double p = k.moments(indicator).mean;
  const double g = p * (1.0 - p);
  if (g == 0.0) throw PreconditionError("indicator is a.s. constant");
  const double dg = 1.0 - 2.0 * p;
  std::vector<double> influence(num.size());
  for (std::size_t i = 0; i < num.size(); ++i)
    influence[i] = (num[i] - a) / g - a * dg / (g * g) * (indicator[i] - p);
  Estimate e = from_moments(k.moments(influence), ci_level);
  e.mean = a / g;
  return e;
}

Estimate variance_estimate(std::span<const double> x, double ci_level) {
  if (x.size() < 2) throw PreconditionError("variance needs at least two samples");
  const auto& k = simd::active_kernels();
  const simd::Moments m = k.moments(x);
  const double s2 = m.m2 / static_cast<double>(m.n - 1);
  std::vector<double> influence(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - m.mean;
    influence[i] = d * d - s2;
  }
  Estimate e = from_moments(k.moments(influence), ci_level);
  e.mean = s2;
  return e;
}

Estimate difference_independent(const Estimate& a, const Estimate& b) {
  Estimate e;
  e.mean = a.mean - b.mean;
  e.std_error = std::hypot(a.std_error, b.std_error);
  e.n = std::min(a.n, b.n);
  e.ci_level = a.ci_level;
  return e;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::consistent: return "consistent";
    case Verdict::violated: return "violated";
    case Verdict::holds: return "holds";
    case Verdict::reported: return "reported";
  }
  return "unknown";
}

namespace {

double rounding_floor(const Estimate& left, const Estimate& right) {
  return 1e-12 * std::max({1.0, std::abs(left.mean), std::abs(right.mean)});
}

}  // namespace

IdentityReport make_equality_report(std::string id, const Estimate& left, const Estimate& right,
                                    const Estimate& difference, double sigmas) {
  IdentityReport r;
  r.id = std::move(id);
  r.left = left;
  r.right = right;
  r.difference = difference;
  r.tolerance = sigmas * difference.std_error + rounding_floor(left, right);
  r.verdict = std::abs(difference.mean) <= r.tolerance ? Verdict::consistent : Verdict::violated;
  return r;
}

IdentityReport make_inequality_report(std::string id, const Estimate& left, const Estimate& right,
                                      const Estimate& difference, double sigmas) {
  IdentityReport r;
  r.id = std::move(id);
  r.left = left;
  r.right = right;
  r.difference = difference;
  r.tolerance = sigmas * difference.std_error + rounding_floor(left, right);
  r.verdict = difference.mean <= r.tolerance ? Verdict::holds : Verdict::violated;
  return r;
}

}  // namespace poisson
