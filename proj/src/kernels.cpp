#include "poisson/kernels.hpp"

#include <cmath>

#include "poisson/error.hpp"

namespace poisson {

double kernel_measure(const Configuration& omega, const EventSet& A, KernelDirection direction,
                      const SigmaRule& rule) {
  switch (direction) {
    case KernelDirection::forward: return forward_mass(A, omega, rule);
    case KernelDirection::backward: return backward_mass(A, omega);
    case KernelDirection::symmetrized: break;
  }
  return 0.5 * (forward_mass(A, omega, rule) + backward_mass(A, omega));
}

double apply_kernel(const Functional& F, const Configuration& omega, KernelDirection direction,
                    const SigmaRule& rule) {
  auto forward = [&] {
    double s = 0.0;
    for (const Point& x : rule.nodes) s += omega.contains(x) ? F(omega) : F(omega.with_added(x));
    return rule.node_weight * s;
  };
  auto backward = [&] {
    double s = 0.0;
    for (const Point& x : omega.points()) s += F(omega.with_removed(x));
    return s;
  };
  double v = 0.0;
  switch (direction) {
    case KernelDirection::forward: v = forward(); break;
    case KernelDirection::backward: v = backward(); break;
    case KernelDirection::symmetrized: v = 0.5 * (forward() + backward()); break;
  }
  if (!std::isfinite(v)) throw NonFiniteError("kernel applied to " + F.label);
  return v;
}

IdentityReport reversibility_check(const Functional& F, const Functional& G, const Model& model) {
  const SampleTable t = run_samples(model, 2, [&](const Sample& s, std::span<double> row) {
    row[0] = F(s.omega) * apply_kernel(G, s.omega, KernelDirection::forward, s.rule);
    row[1] = G(s.omega) * apply_kernel(F, s.omega, KernelDirection::backward, s.rule);
  });
  const double ci = model.mc.ci_level;
  IdentityReport r = make_equality_report(
      "reversibility", t.estimate(0, ci), t.estimate(1, ci),
      paired_difference(t.column(0), t.column(1), ci));
  r.note = "F=" + F.label + " G=" + G.label;
  return r;
}

IdentityReport stationarity_check(const EventSet& A, const Model& model) {
  const double sx = model.intensity_mass();
  const Functional g{"g", [&](const Configuration& w) {
                       return A.contains(w) ? 2.0 / (sx + static_cast<double>(w.size())) : 0.0;
                     },
                     nullptr};
  const SampleTable t = run_samples(model, 2, [&](const Sample& s, std::span<double> row) {
    row[0] = apply_kernel(g, s.omega, KernelDirection::symmetrized, s.rule);
    row[1] = A.contains(s.omega) ? 1.0 : 0.0;
  });
  const double ci = model.mc.ci_level;
  IdentityReport r = make_equality_report("stationarity", t.estimate(0, ci), t.estimate(1, ci),
                                          paired_difference(t.column(0), t.column(1), ci));
  r.note = "A=" + A.label;
  return r;
}

}  // namespace poisson
