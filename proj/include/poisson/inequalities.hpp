#pragma once

#include <string>
#include <vector>

#include "poisson/calculus.hpp"
#include "poisson/engine.hpp"
#include "poisson/estimate.hpp"
#include "poisson/events.hpp"
#include "poisson/gaussian.hpp"

namespace poisson {

struct PoincareReport {
  Estimate variance;
  Estimate ratio_l2_sigma;  ///< E|DF|^2_{L2(sigma)} / Var F
  Estimate ratio_linf;      ///< E|DF|^2_{Linf(sigma+omega)} / Var F
};

PoincareReport poincare_ratio(const Functional& F, const Model& model);

/// I(E[F]) <= E[sqrt(I(F)^2 + 2 |DF|^2_{L2(sigma)})] for F with values in [0, 1].
IdentityReport gaussian_iso_check(const Functional& F, const Model& model);
/// Same with F = 1_A and the exact gradient of the indicator.
IdentityReport gaussian_iso_check(const EventSet& A, const Model& model);

/// Ent(F) <= (1/2) E[|DF|^2_{L2(sigma)} / F] for F > 0.
IdentityReport mod_lsi_check(const Functional& F, const Model& model);

/// Orlicz norm of F over the sample stream of `model`.
double orlicz_norm(const Functional& F, const YoungFunction& N, const Model& model);

/// Proven lower bounds substituted for the unknown constants.
inline constexpr double kH1Lower = 0.5;       ///< h_1 >= 1/2
inline constexpr double kKPlus1Lower = 0.25;  ///< k+_1 = h+_1 >= 1/4

enum class CheegerMode { power, young, young_norm, g2 };

struct CheegerSpec {
  CheegerMode mode = CheegerMode::power;
  double p = 2.0;  ///< exponent in power mode
  YoungFunction N = YoungFunction::power(2.0);
  /// Recentre F by its empirical median first; when false a nonzero median is an error.
  bool recenter = true;
};

/// power: E|F|^p <= E[(p / h1_lower |DF|_{L1(sym)})^p];
/// young: E[N(F)] <= E[N(C_N / k_lower |DF|_{L1(sym)})];
/// young_norm: ||F||_N <= (C_N / k_lower) || |DF|_{L1(sym)} ||_N;
/// g2: I_var(E F) <= E[sqrt(I_var(F)^2 + |DF|^2_{L1(sym)} / b)], b = (1 - 1/sqrt2) k_lower.
IdentityReport cheeger_check(const Functional& F, const CheegerSpec& spec, const Model& model);

struct LsiWitnessRow {
  long k = 0;
  double pi_a = 0.0;         ///< P(N >= k)
  double pi_boundary = 0.0;  ///< P(N = k-1) + P(N = k)
  double ratio = 0.0;        ///< pi_boundary / (-pi_a log pi_a)
  bool guarded = false;      ///< pi_a >= 1/2 (outside the constant's range)
};

struct LsiWitnessReport {
  double sigma_b = 0.0;
  double lambda = 1.0;
  std::vector<LsiWitnessRow> rows;
  bool strictly_decreasing = false;
  double final_ratio = 0.0;
};

/// Exact ratios pi(boundary A_k) / (-pi(A_k) log pi(A_k)) for A_k = {omega(B) >= k}.
LsiWitnessReport lsi_constant_witness(double sigma_b, double lambda, long k_max);

struct DeviationRow {
  double lambda = 0.0;
  double pi = 0.0;
  double bound = 0.0;
  bool pi_at_least_bound = false;
  /// Direction asserted in the literature: pi <= bound above theta for
  /// increasing A, pi >= bound below theta.
  bool matches_stated_direction = false;
};

struct DeviationReport {
  std::string event;
  double theta = 0.0;
  double delta = 0.0;
  bool increasing = true;
  std::vector<DeviationRow> rows;
};

/// Requires a monotone event with an exact law. theta solves pi_theta(A) = 1/2.
DeviationReport deviation_profile(const EventSet& A, const std::vector<double>& lambdas);

}  // namespace poisson
