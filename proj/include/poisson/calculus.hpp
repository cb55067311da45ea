#pragma once

#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "poisson/configuration.hpp"
#include "poisson/point_space.hpp"
#include "poisson/simd/reduce.hpp"

namespace poisson {

using simd::Part;

/// Measure a gradient norm is taken under: sigma, omega, or (sigma + omega)/2.
enum class Measure { sigma, omega, sym };
enum class Flavor { sigma, omega };
enum class Sign { plus, minus };

inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// A real functional F on configurations. Evaluation must be pure.
struct Functional {
  std::string label;
  std::function<double(const Configuration&)> eval;
  /// Optional closed form of D_x F(omega); must agree with the generic
  /// difference.
  std::function<double(const Configuration&, const Point&)> closed_form_diff;

  /// Evaluates F, throwing NonFiniteError on NaN/inf.
  double operator()(const Configuration& omega) const;
};

/// A process u(x, omega).
struct Process {
  std::string label;
  std::function<double(const Point&, const Configuration&)> eval;

  double operator()(const Point& x, const Configuration& omega) const;
};

Functional constant_functional(double c);
/// omega(region).
Functional count_functional(const Region& region, std::string label = "count");
/// omega(X).
Functional total_count_functional();
Process constant_process(double c);

/// D_x F(omega) = F(omega) - F(omega + delta_x) for x not in omega,
/// F(omega) - F(omega - delta_x) for x in omega; `part` selects D, D+ or D-.
double diff(const Functional& F, const Configuration& omega, const Point& x,
            Part part = Part::full);

/// D F(omega) at every node of a sigma rule and at every point of omega.
struct Differences {
  double value = 0.0;          ///< F(omega)
  std::vector<double> sigma;   ///< D_x F at the rule nodes
  std::vector<double> omega;   ///< D_x F at the points of omega
  double sigma_weight = 0.0;   ///< sigma-weight of one node
};

Differences differences(const Functional& F, const Configuration& omega, const SigmaRule& rule);

/// A gradient norm together with its p-th power (for p = inf both hold the
/// essential sup).
struct GradNorm {
  double power = 0.0;
  double norm = 0.0;
};

/// |D^part F(omega)|_{L^p(measure)}. For p = inf the essential sup is
/// approximated by the max over the points of omega and the rule nodes.
GradNorm grad_norm(const Differences& d, double p, Measure measure, Part part);
GradNorm grad_norm(const Functional& F, const Configuration& omega, double p, Measure measure,
                   Part part, const SigmaRule& rule);

/// delta_sigma(u) = int u(x,omega) sigma(dx) - sum_{x in omega} u(x, omega - delta_x);
/// delta_omega(u) = sum_{x in omega} u(x,omega) - int u(x, omega + delta_x) sigma(dx).
double divergence(const Process& u, const Configuration& omega, Flavor flavor,
                  const SigmaRule& rule);

/// <D F, v>_{L^2(sigma)} or <D F, v>_{L^2(omega)}.
double gradient_pairing(const Functional& F, const Process& v, const Configuration& omega,
                        Flavor flavor, const SigmaRule& rule);

/// The process x -> D_x F(omega).
Process gradient_process(const Functional& F);

/// L F = (1/2) delta D F
///     = (1/2)[(sigma(X) + omega(X)) F(omega) - int F(omega + delta_x) sigma(dx)
///             - sum_{x in omega} F(omega - delta_x)].
double laplacian(const Functional& F, const Configuration& omega, const SigmaRule& rule);

/// Gamma^{+/-}(F, G)(omega): half the (sigma + omega)/2-integral of the
/// product of the matching parts of the differences of F and G.
double carre_du_champ(const Functional& F, const Functional& G, const Configuration& omega,
                      Sign sign, const SigmaRule& rule);

}  // namespace poisson
