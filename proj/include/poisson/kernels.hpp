#pragma once

#include "poisson/calculus.hpp"
#include "poisson/engine.hpp"
#include "poisson/estimate.hpp"
#include "poisson/events.hpp"

namespace poisson {

enum class KernelDirection { forward, backward, symmetrized };

/// K+(omega, A), K-(A, omega) or their average K-bar(omega, A).
double kernel_measure(const Configuration& omega, const EventSet& A, KernelDirection direction,
                      const SigmaRule& rule);

/// int F(omega + delta_x) sigma(dx), sum_{x in omega} F(omega - delta_x), or their average.
double apply_kernel(const Functional& F, const Configuration& omega, KernelDirection direction,
                    const SigmaRule& rule);

/// E[F K+G] against E[G K-F] on one configuration stream.
IdentityReport reversibility_check(const Functional& F, const Functional& G, const Model& model);

/// E[(1/2)(K+ g + K- g)] with g(w) = 2/(sigma(X) + w(X)) 1_A(w) against
/// pi(A). The normalization is taken at the target configuration, which
/// makes the normalized symmetrized kernel a Markov kernel for which pi is
/// stationary.
IdentityReport stationarity_check(const EventSet& A, const Model& model);

}  // namespace poisson
