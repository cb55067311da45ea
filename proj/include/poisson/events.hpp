#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <string>

#include "poisson/calculus.hpp"
#include "poisson/configuration.hpp"
#include "poisson/engine.hpp"
#include "poisson/estimate.hpp"
#include "poisson/point_space.hpp"

namespace poisson {

enum class Monotonicity { increasing, decreasing, none, unknown };
enum class BoundaryKind { inner, outer, full };
enum class Relation { eq, ge, le };

std::string to_string(Monotonicity m);
std::string to_string(BoundaryKind k);

/// Exact kernel masses and laws of a structured event. Forward masses are
/// taken against rule.mass_scale * sigma; probabilities are under
/// pi_lambda with intensity lambda * sigma for the base sigma.
struct EventClosedForms {
  std::function<double(const Configuration&, const SigmaRule&)> forward_in;   ///< K+(omega, A)
  std::function<double(const Configuration&, const SigmaRule&)> forward_out;  ///< K+(omega, A^c)
  std::function<double(const Configuration&)> backward_in;                    ///< K-(A, omega)
  std::function<double(const Configuration&)> backward_out;                   ///< K-(A^c, omega)
  std::function<double(double)> probability;                                  ///< pi_lambda(A)
  std::function<double(double)> probability_derivative;                       ///< d/dlambda
  /// pi_lambda of a boundary and the surface measure of that boundary.
  std::function<double(BoundaryKind, double)> boundary_probability;
  std::function<double(BoundaryKind, double)> surface_measure;
  /// inf of K+(omega, A) over the outer boundary (increasing A) and of
  /// K+(omega, A^c) over the inner boundary (decreasing A), at the base sigma.
  double delta_minus = 0.0;
  double delta_plus = 0.0;
};

/// A measurable set A of configurations.
struct EventSet {
  std::string label;
  std::function<bool(const Configuration&)> predicate;
  std::shared_ptr<const EventClosedForms> closed;
  Monotonicity monotone = Monotonicity::unknown;
  /// Tag carried over to the complement.
  Monotonicity complement_monotone = Monotonicity::unknown;

  bool contains(const Configuration& omega) const { return predicate(omega); }
  bool has_closed_forms() const { return static_cast<bool>(closed); }
  EventSet complement() const;
  /// The functional 1_A.
  Functional indicator() const;
};

EventSet whole_event();
EventSet empty_event();

/// {omega(region) rel k} with exact closed forms. k must be >= 0.
EventSet count_event(const PointSpace& space, const Region& region, Relation relation, long k);

/// A named weight f from the catalogue with its declared sign.
struct LinearWeight {
  std::string name;
  std::function<double(const Point&)> f;
  int sign = 0;  ///< +1 if f >= 0, -1 if f <= 0, 0 if undeclared
};

/// Catalogue: "one", "x" (first coordinate), "neg_one", "neg_x",
/// "centered_x" (x - 1/2, no declared sign). Throws on unknown names.
LinearWeight linear_weight(const std::string& name);

/// {sum_{x in omega} f(x) > K}.
EventSet linear_event(const LinearWeight& weight, double K);

/// K+(omega, A) (forward_in) or K+(omega, A^c) from closed forms when
/// present, else from the rule nodes.
double forward_mass(const EventSet& A, const Configuration& omega, const SigmaRule& rule,
                    bool into_complement = false);
/// K-(A, omega) or K-(A^c, omega), always exact.
double backward_mass(const EventSet& A, const Configuration& omega, bool into_complement = false);

/// K-bar(omega, A^c) for omega in A and K-bar(omega, A) otherwise: the
/// p-th power of |D1_A(omega)|_{L^p((sigma+omega)/2)} for any finite p.
double indicator_sym_power(const EventSet& A, const Configuration& omega, const SigmaRule& rule,
                           Part part = Part::full);
/// |D^part 1_A|_{L^2(sigma)}^2 = 1_A K+(omega, A^c) + 1_{A^c} K+(omega, A) for the full part.
double indicator_sigma_power(const EventSet& A, const Configuration& omega,
                             const SigmaRule& rule, Part part = Part::full);

/// Inner: omega in A with K-bar(omega, A^c) > 0; outer: omega in A^c with
/// K-bar(omega, A) > 0; full: either. Exact with closed forms; otherwise
/// additions are witnessed only at the rule nodes.
bool boundary_membership(const Configuration& omega, const EventSet& A, BoundaryKind kind,
                         const SigmaRule& rule);

/// E[1_A K-bar(omega, A^c)^{1/2}] (inner), E[1_{A^c} K-bar(omega, A)^{1/2}] (outer), or the sum.
Estimate surface_measure(const EventSet& A, BoundaryKind kind, const Model& model);

/// pi(boundary of the given kind).
Estimate boundary_probability(const EventSet& A, BoundaryKind kind, const Model& model);

struct MonotonicityReport {
  std::size_t configurations_in_a = 0;
  std::size_t configurations_in_complement = 0;
  std::size_t addition_probes = 0;
  std::size_t addition_violations = 0;  ///< omega in A, omega + delta_x not in A
  std::size_t removal_probes = 0;
  std::size_t removal_violations = 0;   ///< omega in A, omega - delta_x not in A
  double increasing_violation_rate() const;
  double decreasing_violation_rate() const;
};

/// Tests sampled additions and all removals from sampled omega in A.
MonotonicityReport monotonicity_probe(const EventSet& A, const Model& model);

}  // namespace poisson
