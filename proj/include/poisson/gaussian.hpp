#pragma once

#include <functional>
#include <span>
#include <string>

namespace poisson {

namespace gaussian {
double phi(double x);        ///< standard normal density
double Phi(double x);        ///< standard normal cdf
double Phi_inv(double t);    ///< quantile; -inf at 0 and +inf at 1
/// Gaussian isoperimetric function phi(Phi^{-1}(t)), 0 at t = 0 and t = 1.
double I(double t);
/// I'(t) = -Phi^{-1}(t).
double I_derivative(double t);
double I_var(double t);      ///< t (1 - t)
}  // namespace gaussian

/// A convex even gauge N with N(0) = 0. C_N = sup_{x>0} x N'(x) / N(x) is
/// computed on a log-spaced grid.
class YoungFunction {
 public:
  YoungFunction(std::string name, std::function<double(double)> N,
                std::function<double(double)> dN);

  /// N(x) = |x|^p, p >= 1 (C_N = p).
  static YoungFunction power(double p);
  /// N(x) = sqrt(1 + x^2) - 1 (C_N = 2, attained as x -> 0).
  static YoungFunction sqrt_type();

  const std::string& name() const { return name_; }
  double operator()(double x) const { return N_(x); }
  double derivative(double x) const { return dN_(x); }
  double C_N() const { return c_n_; }

 private:
  std::string name_;
  std::function<double(double)> N_;
  std::function<double(double)> dN_;
  double c_n_;
};

/// Luxemburg norm inf{kappa > 0 : mean N(F/kappa) <= 1} of the sample
/// values, by bisection on [2^-30, 2^30].
double orlicz_norm(std::span<const double> values, const YoungFunction& N);

}  // namespace poisson
