#include "poisson/events.hpp"

#include <cmath>
#include <sstream>

#include "poisson/error.hpp"
#include "poisson/oracle.hpp"

namespace poisson {

std::string to_string(Monotonicity m) {
  switch (m) {
    case Monotonicity::increasing: return "increasing";
    case Monotonicity::decreasing: return "decreasing";
    case Monotonicity::none: return "none";
    case Monotonicity::unknown: break;
  }
  return "unknown";
}

std::string to_string(BoundaryKind k) {
  switch (k) {
    case BoundaryKind::inner: return "inner";
    case BoundaryKind::outer: return "outer";
    case BoundaryKind::full: break;
  }
  return "full";
}

EventSet EventSet::complement() const {
  EventSet c;
  c.label = "not(" + label + ")";
  c.predicate = [p = predicate](const Configuration& w) { return !p(w); };
  c.monotone = complement_monotone;
  c.complement_monotone = monotone;
  if (closed) {
    auto f = std::make_shared<EventClosedForms>();
    f->forward_in = closed->forward_out;
    f->forward_out = closed->forward_in;
    f->backward_in = closed->backward_out;
    f->backward_out = closed->backward_in;
    f->probability = [p = closed->probability](double l) { return 1.0 - p(l); };
    f->probability_derivative = [d = closed->probability_derivative](double l) { return -d(l); };
    auto swap_kind = [](BoundaryKind k) {
      return k == BoundaryKind::inner   ? BoundaryKind::outer
             : k == BoundaryKind::outer ? BoundaryKind::inner
                                        : k;
    };
    if (closed->boundary_probability)
      f->boundary_probability = [b = closed->boundary_probability, swap_kind](BoundaryKind k,
                                                                              double l) {
        return b(swap_kind(k), l);
      };
    if (closed->surface_measure)
      f->surface_measure = [m = closed->surface_measure, swap_kind](BoundaryKind k, double l) {
        return m(swap_kind(k), l);
      };
    f->delta_minus = closed->delta_plus;
    f->delta_plus = closed->delta_minus;
    c.closed = std::move(f);
  }
  return c;
}

Functional EventSet::indicator() const {
  return {"1[" + label + "]", [p = predicate](const Configuration& w) { return p(w) ? 1.0 : 0.0; },
          nullptr};
}

EventSet whole_event() {
  EventSet e;
  e.label = "Omega";
  e.predicate = [](const Configuration&) { return true; };
  auto f = std::make_shared<EventClosedForms>();
  f->forward_in = [](const Configuration&, const SigmaRule& r) { return r.total_mass; };
  f->forward_out = [](const Configuration&, const SigmaRule&) { return 0.0; };
  f->backward_in = [](const Configuration& w) { return static_cast<double>(w.size()); };
  f->backward_out = [](const Configuration&) { return 0.0; };
  f->probability = [](double) { return 1.0; };
  f->probability_derivative = [](double) { return 0.0; };
  f->boundary_probability = [](BoundaryKind, double) { return 0.0; };
  f->surface_measure = [](BoundaryKind, double) { return 0.0; };
  e.closed = std::move(f);
  e.monotone = Monotonicity::increasing;
  e.complement_monotone = Monotonicity::decreasing;
  return e;
}

EventSet empty_event() {
  EventSet e = whole_event().complement();
  e.label = "empty";
  return e;
}

EventSet count_event(const PointSpace& space, const Region& region, Relation relation, long k) {
  if (k < 0) throw PreconditionError("count event needs k >= 0");
  const double sb = space.sigma_measure(region);
  const double sx = space.total_mass();
  auto rel = [relation, k](long j) {
    if (j < 0) return false;
    switch (relation) {
      case Relation::eq: return j == k;
      case Relation::ge: return j >= k;
      case Relation::le: return j <= k;
    }
    return false;
  };

  EventSet e;
  std::ostringstream label;
  label << "omega(" << format_region(region, space.dimension()) << ")"
        << (relation == Relation::eq ? "=" : relation == Relation::ge ? ">=" : "<=") << k;
  e.label = label.str();
  e.predicate = [region, rel](const Configuration& w) {
    return rel(static_cast<long>(w.count(region)));
  };

  auto f = std::make_shared<EventClosedForms>();
  // Adding a point lands in B with mass sigma(B) and outside B with the rest.
  auto forward = [region, rel, sb, sx](bool target) {
    return [region, rel, sb, sx, target](const Configuration& w, const SigmaRule& r) {
      const long nb = static_cast<long>(w.count(region));
      const double in_b = rel(nb + 1) == target ? sb : 0.0;
      const double off_b = rel(nb) == target ? sx - sb : 0.0;
      return r.mass_scale * (in_b + off_b);
    };
  };
  auto backward = [region, rel](bool target) {
    return [region, rel, target](const Configuration& w) {
      const long nb = static_cast<long>(w.count(region));
      const long n = static_cast<long>(w.size());
      const double from_b = rel(nb - 1) == target ? static_cast<double>(nb) : 0.0;
      const double off_b = rel(nb) == target ? static_cast<double>(n - nb) : 0.0;
      return from_b + off_b;
    };
  };
  f->forward_in = forward(true);
  f->forward_out = forward(false);
  f->backward_in = backward(true);
  f->backward_out = backward(false);

  // Only omega(B) decides membership and boundary, and K-bar to the other
  // side at omega(B) = j is (lambda sigma(B) [j+1 crosses] + j [j-1 crosses]) / 2.
  auto boundary_sum = [rel, sb](BoundaryKind kind, double l, bool surface) {
    const double mu = l * sb;
    const long j_max = 60 + static_cast<long>(mu + 10.0 * std::sqrt(mu));
    double total = 0.0;
    for (long j = 0; j <= j_max; ++j) {
      const bool in = rel(j);
      if ((kind == BoundaryKind::inner && !in) || (kind == BoundaryKind::outer && in)) continue;
      const double kbar = 0.5 * ((rel(j + 1) != in ? mu : 0.0) +
                                 (rel(j - 1) != in ? static_cast<double>(j) : 0.0));
      if (kbar > 0.0) total += oracle::poisson_pmf(mu, j) * (surface ? std::sqrt(kbar) : 1.0);
    }
    return total;
  };
  f->boundary_probability = [boundary_sum](BoundaryKind kind, double l) {
    return boundary_sum(kind, l, false);
  };
  f->surface_measure = [boundary_sum](BoundaryKind kind, double l) {
    return boundary_sum(kind, l, true);
  };

  switch (relation) {
    case Relation::eq:
      f->probability = [sb, k](double l) { return oracle::poisson_pmf(l * sb, k); };
      f->probability_derivative = [sb, k](double l) {
        return sb * (oracle::poisson_pmf(l * sb, k - 1) - oracle::poisson_pmf(l * sb, k));
      };
      f->delta_plus = sb;
      e.monotone = k == 0 ? Monotonicity::decreasing : Monotonicity::none;
      e.complement_monotone = k == 0 ? Monotonicity::increasing : Monotonicity::none;
      break;
    case Relation::ge:
      f->probability = [sb, k](double l) { return oracle::poisson_tail(l * sb, k); };
      f->probability_derivative = [sb, k](double l) {
        return sb * oracle::poisson_pmf(l * sb, k - 1);
      };
      f->delta_minus = k == 0 ? 0.0 : sb;
      e.monotone = Monotonicity::increasing;
      e.complement_monotone = Monotonicity::decreasing;
      break;
    case Relation::le:
      f->probability = [sb, k](double l) { return oracle::poisson_cdf(l * sb, k); };
      f->probability_derivative = [sb, k](double l) {
        return -sb * oracle::poisson_pmf(l * sb, k);
      };
      f->delta_plus = sb;
      e.monotone = Monotonicity::decreasing;
      e.complement_monotone = Monotonicity::increasing;
      break;
  }
  e.closed = std::move(f);
  return e;
}

LinearWeight linear_weight(const std::string& name) {
  if (name == "one") return {name, [](const Point&) { return 1.0; }, 1};
  if (name == "x") return {name, [](const Point& x) { return x[0]; }, 1};
  if (name == "neg_one") return {name, [](const Point&) { return -1.0; }, -1};
  if (name == "neg_x") return {name, [](const Point& x) { return -x[0]; }, -1};
  if (name == "centered_x") return {name, [](const Point& x) { return x[0] - 0.5; }, 0};
  throw PreconditionError("unknown linear weight '" + name + "'");
}

EventSet linear_event(const LinearWeight& weight, double K) {
  EventSet e;
  std::ostringstream label;
  label << "sum " << weight.name << " > " << format_number(K);
  e.label = label.str();
  e.predicate = [f = weight.f, K](const Configuration& w) {
    double s = 0.0;
    for (const Point& x : w.points()) s += f(x);
    return s > K;
  };
  if (weight.sign > 0) {
    e.monotone = Monotonicity::increasing;
    e.complement_monotone = Monotonicity::decreasing;
  } else if (weight.sign < 0) {
    e.monotone = Monotonicity::decreasing;
    e.complement_monotone = Monotonicity::increasing;
  }
  return e;
}

double forward_mass(const EventSet& A, const Configuration& omega, const SigmaRule& rule,
                    bool into_complement) {
  double m;
  if (A.closed) {
    m = into_complement ? A.closed->forward_out(omega, rule) : A.closed->forward_in(omega, rule);
  } else {
    std::size_t hits = 0;
    for (const Point& x : rule.nodes) {
      if (omega.contains(x)) continue;
      if (A.contains(omega.with_added(x)) != into_complement) ++hits;
    }
    m = rule.node_weight * static_cast<double>(hits);
  }
  if (!std::isfinite(m)) throw NonFiniteError("forward kernel mass of " + A.label);
  return m;
}

double backward_mass(const EventSet& A, const Configuration& omega, bool into_complement) {
  if (A.closed) {
    return into_complement ? A.closed->backward_out(omega) : A.closed->backward_in(omega);
  }
  std::size_t hits = 0;
  for (const Point& x : omega.points())
    if (A.contains(omega.with_removed(x)) != into_complement) ++hits;
  return static_cast<double>(hits);
}

double indicator_sym_power(const EventSet& A, const Configuration& omega, const SigmaRule& rule,
                           Part part) {
  const bool in = A.contains(omega);
  if (in && part == Part::minus) return 0.0;
  if (!in && part == Part::plus) return 0.0;
  // Mass of the neighbours on the other side.
  return 0.5 * (forward_mass(A, omega, rule, in) + backward_mass(A, omega, in));
}

double indicator_sigma_power(const EventSet& A, const Configuration& omega,
                             const SigmaRule& rule, Part part) {
  const bool in = A.contains(omega);
  if (in && part == Part::minus) return 0.0;
  if (!in && part == Part::plus) return 0.0;
  return forward_mass(A, omega, rule, in);
}

bool boundary_membership(const Configuration& omega, const EventSet& A, BoundaryKind kind,
                         const SigmaRule& rule) {
  const bool in = A.contains(omega);
  if (kind == BoundaryKind::inner && !in) return false;
  if (kind == BoundaryKind::outer && in) return false;
  if (A.closed) {
    return forward_mass(A, omega, rule, in) > 0.0 || backward_mass(A, omega, in) > 0.0;
  }
  for (const Point& x : omega.points())
    if (A.contains(omega.with_removed(x)) != in) return true;
  for (const Point& x : rule.nodes) {
    if (omega.contains(x)) continue;
    if (A.contains(omega.with_added(x)) != in) return true;
  }
  return false;
}

Estimate surface_measure(const EventSet& A, BoundaryKind kind, const Model& model) {
  const SampleTable t = run_samples(model, 1, [&](const Sample& s, std::span<double> row) {
    const bool in = A.contains(s.omega);
    if ((kind == BoundaryKind::inner && !in) || (kind == BoundaryKind::outer && in)) return;
    row[0] = std::sqrt(indicator_sym_power(A, s.omega, s.rule));
  });
  return t.estimate(0, model.mc.ci_level);
}

Estimate boundary_probability(const EventSet& A, BoundaryKind kind, const Model& model) {
  const SampleTable t = run_samples(model, 1, [&](const Sample& s, std::span<double> row) {
    row[0] = boundary_membership(s.omega, A, kind, s.rule) ? 1.0 : 0.0;
  });
  return t.estimate(0, model.mc.ci_level);
}

double MonotonicityReport::increasing_violation_rate() const {
  return addition_probes == 0 ? 0.0
                              : static_cast<double>(addition_violations) /
                                    static_cast<double>(addition_probes);
}

double MonotonicityReport::decreasing_violation_rate() const {
  return removal_probes == 0 ? 0.0
                             : static_cast<double>(removal_violations) /
                                   static_cast<double>(removal_probes);
}

MonotonicityReport monotonicity_probe(const EventSet& A, const Model& model) {
  // Columns: in A, addition probes, addition violations, removal probes, removal violations.
  const SampleTable t = run_samples(model, 5, [&](const Sample& s, std::span<double> row) {
    if (!A.contains(s.omega)) return;
    row[0] = 1.0;
    for (const Point& x : s.rule.nodes) {
      if (s.omega.contains(x)) continue;
      row[1] += 1.0;
      if (!A.contains(s.omega.with_added(x))) row[2] += 1.0;
    }
    for (const Point& x : s.omega.points()) {
      row[3] += 1.0;
      if (!A.contains(s.omega.with_removed(x))) row[4] += 1.0;
    }
  });
  auto total = [&](std::size_t j) {
    double sum = 0.0;
    for (double v : t.column(j)) sum += v;
    return static_cast<std::size_t>(sum);
  };
  MonotonicityReport r;
  r.configurations_in_a = total(0);
  r.configurations_in_complement = t.rows() - r.configurations_in_a;
  r.addition_probes = total(1);
  r.addition_violations = total(2);
  r.removal_probes = total(3);
  r.removal_violations = total(4);
  return r;
}

}  // namespace poisson
