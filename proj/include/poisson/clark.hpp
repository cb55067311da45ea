#pragma once

#include <cstddef>
#include <functional>
#include <optional>

#include "poisson/calculus.hpp"
#include "poisson/configuration.hpp"
#include "poisson/estimate.hpp"
#include "poisson/rng.hpp"

namespace poisson {

/// Time is X = [0, 1] with sigma = Lebesgue measure and unit intensity.
/// Grid t_j = j / m of the compensator integral.
struct PathGrid {
  std::size_t m = 32;
  double t(std::size_t j) const { return static_cast<double>(j) / static_cast<double>(m); }
  void validate() const;
};

/// Points of omega in [0, t), the strict past at t.
Configuration strict_past(const Configuration& omega, double t);

/// A predictable integrand u(t, strict past at t).
using Integrand = std::function<double(double, const Configuration&)>;

/// E[D_t F | F_t] by averaging D_t F(past + future) over n_inner independent
/// unit-rate Poisson futures on (t, 1].
Estimate predictable_projection(const Functional& F, double t, const Configuration& past,
                                std::size_t n_inner, Rng& rng, double ci_level = 0.95);

/// Ito integral of u against the compensated process N_t - t: jumps are
/// summed exactly with u evaluated on the strict past; the compensator is a
/// left Riemann sum on the grid.
double compensated_integral(const Integrand& u, const Configuration& omega, const PathGrid& grid);

struct ClarkSpec {
  McSpec mc{1000, 42, 0.95, 0};
  PathGrid grid;
  std::size_t n_inner = 200;
  std::optional<double> exact_mean;  ///< E[F]; sample mean of the outer stream when absent
  Integrand closed_projection;       ///< replaces the nested projection when set
};

/// E[(F - E[F] + int E[D_t F | F_t] dN~_t)^2].
Estimate clark_residual(const Functional& F, const ClarkSpec& spec);

struct ClarkPoincareReport {
  Estimate variance;
  Estimate projection_energy;  ///< E int_0^1 E[D_t F | F_t]^2 dt
  Estimate dirichlet;          ///< E |DF|^2_{L2(sigma)}
  IdentityReport lower;        ///< Var F <= projection energy
  IdentityReport upper;        ///< projection energy <= E |DF|^2
};

/// Var F <= E int proj^2 dt <= E |DF|^2_{L2(sigma)}; time integrals use the
/// midpoints of the grid cells.
ClarkPoincareReport poincare_from_clark(const Functional& F, const ClarkSpec& spec);

}  // namespace poisson
