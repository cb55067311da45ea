#include "poisson/gaussian.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include <boost/math/distributions/normal.hpp>

#include "poisson/error.hpp"
#include "poisson/point_space.hpp"

namespace poisson {
namespace gaussian {
namespace {
const boost::math::normal_distribution<double> kStd{0.0, 1.0};
}

double phi(double x) { return boost::math::pdf(kStd, x); }

double Phi(double x) {
  if (std::isinf(x)) return x > 0 ? 1.0 : 0.0;
  return boost::math::cdf(kStd, x);
}

double Phi_inv(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw PreconditionError("Phi_inv needs t in [0, 1]");
  if (t == 0.0) return -std::numeric_limits<double>::infinity();
  if (t == 1.0) return std::numeric_limits<double>::infinity();
  return boost::math::quantile(kStd, t);
}

double I(double t) {
  if (!(t >= 0.0 && t <= 1.0)) throw PreconditionError("I needs t in [0, 1]");
  if (t == 0.0 || t == 1.0) return 0.0;
  return phi(Phi_inv(t));
}

double I_derivative(double t) { return -Phi_inv(t); }

double I_var(double t) { return t * (1.0 - t); }

}  // namespace gaussian

YoungFunction::YoungFunction(std::string name, std::function<double(double)> N,
                             std::function<double(double)> dN)
    : name_(std::move(name)), N_(std::move(N)), dN_(std::move(dN)) {
  if (N_(0.0) != 0.0) throw PreconditionError("Young function needs N(0) = 0");
  // Grid checks of positivity, evenness, convexity and of the sup defining C_N.
  constexpr int kPoints = 2001;
  c_n_ = 0.0;
  double prev_slope = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < kPoints; ++i) {
    const double x = std::pow(10.0, -6.0 + 12.0 * i / (kPoints - 1));
    const double n = N_(x);
    if (!(n > 0.0) || !std::isfinite(n)) throw PreconditionError(name_ + ": N(x) must be positive");
    if (std::abs(N_(-x) - n) > 1e-12 * std::max(1.0, n))
      throw PreconditionError(name_ + ": N must be even");
    const double slope = dN_(x);
    if (slope < prev_slope - 1e-12 * std::max(1.0, std::abs(prev_slope)))
      throw PreconditionError(name_ + ": N must be convex");
    prev_slope = slope;
    c_n_ = std::max(c_n_, x * slope / n);
  }
  if (!std::isfinite(c_n_)) throw PreconditionError(name_ + ": C_N is not finite");
}

YoungFunction YoungFunction::power(double p) {
  if (!(p >= 1.0)) throw PreconditionError("power Young function needs p >= 1");
  return {"|x|^" + format_number(p), [p](double x) { return std::pow(std::abs(x), p); },
          [p](double x) { return p * std::pow(std::abs(x), p - 1.0) * (x < 0 ? -1.0 : 1.0); }};
}

YoungFunction YoungFunction::sqrt_type() {
  // sqrt(1 + x^2) - 1 written as x^2 / (sqrt(1 + x^2) + 1) to keep precision near 0.
  return {"sqrt(1+x^2)-1", [](double x) { return x * x / (std::sqrt(1.0 + x * x) + 1.0); },
          [](double x) { return x / std::sqrt(1.0 + x * x); }};
}

double orlicz_norm(std::span<const double> values, const YoungFunction& N) {
  if (values.empty()) throw PreconditionError("orlicz_norm needs samples");
  if (std::all_of(values.begin(), values.end(), [](double v) { return v == 0.0; }))
    throw PreconditionError("orlicz_norm of an a.s. zero variable");
  auto excess = [&](double kappa) {
    double s = 0.0;
    for (double v : values) s += N(v / kappa);
    return s / static_cast<double>(values.size()) - 1.0;
  };
  double lo = std::ldexp(1.0, -30);
  double hi = std::ldexp(1.0, 30);
  if (!(excess(lo) > 0.0) || !(excess(hi) <= 0.0))
    throw Error("orlicz_norm: no bracket in [2^-30, 2^30]");
  // Mean of N(F/kappa) is decreasing in kappa.
  while (hi - lo > 1e-14 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) > 0.0) lo = mid; else hi = mid;
  }
  return hi;
}

}  // namespace poisson
