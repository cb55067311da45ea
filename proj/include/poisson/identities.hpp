#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "poisson/calculus.hpp"
#include "poisson/engine.hpp"
#include "poisson/estimate.hpp"
#include "poisson/events.hpp"

namespace poisson {

Estimate expect(const Functional& F, const Model& model);
/// Lower empirical median of the samples of F.
double median(const Functional& F, const Model& model);

enum class IdentityId {
  adjoint_sigma,     ///< E[F delta_sigma(v)] = E[<DF, v>_{L2(sigma)}]
  adjoint_omega,     ///< E[F delta_omega(v)] = E[<DF, v>_{L2(omega)}]
  mean_delta_sigma,  ///< E[delta_sigma(v)] = 0
  mean_delta_omega,  ///< E[delta_omega(v)] = 0
  exchange,          ///< E|D+F|^p_{L^p(sigma)} = E|D-F|^p_{L^p(omega)} (and with +/- swapped)
  mecke_forward,     ///< E[K+F] = E[omega(X) F]
  mecke_backward,    ///< E[K-F] = sigma(X) E[F]
  delta_equal,       ///< delta_sigma DF = delta_omega DF
  grad_mean_flip,    ///< E[int D_xF sigma(dx)] = -E[sum_{x in omega} D_xF]
  dirichlet_equal,   ///< E_sigma(F,F) = E_omega(F,F)
  gamma_equal,       ///< E[Gamma+(F,F)] = E[Gamma-(F,F)]
};

std::string to_string(IdentityId id);
/// Throws PreconditionError on unknown names.
IdentityId parse_identity_id(std::string_view name);
const std::vector<IdentityId>& all_identity_ids();

struct IdentityInputs {
  Functional F = constant_functional(0.0);
  Process v = constant_process(1.0);
  double p = 1.0;
  /// For exchange: plus compares D+ under sigma with D- under omega, minus swaps the parts.
  Part part = Part::plus;
};

IdentityReport verify_identity(IdentityId id, const IdentityInputs& inputs, const Model& model);

enum class CoareaNorm { sigma, omega, sym, sup };
std::string to_string(CoareaNorm n);

/// Co-area check for an integer-valued F: E|D^part F| against the sum over
/// thresholds t = k + 1/2 of E|D^part 1_{F>t}|, with the L^1 norm under
/// sigma, omega or (sigma+omega)/2, or the L^inf(sigma+omega) norm (sup).
/// With `level_set`, the threshold indicators use the exact boundary forms
/// of level_set(k) = {F > k + 1/2} = {F >= k + 1}.
IdentityReport coarea_check(const Functional& F, CoareaNorm norm, Part part, const Model& model,
                            const std::function<EventSet(long)>& level_set = nullptr);

struct MargulisRussoReport {
  Estimate deriv_fd;
  Estimate deriv_formula;
  std::optional<double> exact;
  IdentityReport paired;  ///< deriv_fd against deriv_formula
};

/// d/dlambda pi_lambda(A) for monotone A by coupled central differences and
/// by the gradient formula with the base sigma.
MargulisRussoReport margulis_russo(const EventSet& A, const Model& model, double dlambda = 0.05);

}  // namespace poisson
