#include "poisson/identities.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "poisson/error.hpp"
#include "poisson/kernels.hpp"

namespace poisson {

Estimate expect(const Functional& F, const Model& model) {
  const SampleTable t = run_samples(model, 1, [&](const Sample& s, std::span<double> row) {
    row[0] = F(s.omega);
  });
  return t.estimate(0, model.mc.ci_level);
}

double median(const Functional& F, const Model& model) {
  const SampleTable t = run_samples(model, 1, [&](const Sample& s, std::span<double> row) {
    row[0] = F(s.omega);
  });
  std::vector<double> v(t.column(0).begin(), t.column(0).end());
  const std::size_t k = (v.size() - 1) / 2;
  std::nth_element(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k), v.end());
  return v[k];
}

namespace {

struct IdName {
  IdentityId id;
  const char* name;
};

constexpr IdName kIdNames[] = {
    {IdentityId::adjoint_sigma, "adjoint_sigma"},
    {IdentityId::adjoint_omega, "adjoint_omega"},
    {IdentityId::mean_delta_sigma, "mean_delta_sigma"},
    {IdentityId::mean_delta_omega, "mean_delta_omega"},
    {IdentityId::exchange, "exchange"},
    {IdentityId::mecke_forward, "mecke_forward"},
    {IdentityId::mecke_backward, "mecke_backward"},
    {IdentityId::delta_equal, "delta_equal"},
    {IdentityId::grad_mean_flip, "grad_mean_flip"},
    {IdentityId::dirichlet_equal, "dirichlet_equal"},
    {IdentityId::gamma_equal, "gamma_equal"},
};

double sum(const std::vector<double>& v) {
  double s = 0.0;
  for (double x : v) s += x;
  return s;
}

bool is_integer(double v) { return std::abs(v - std::round(v)) <= 1e-9; }

}  // namespace

std::string to_string(IdentityId id) {
  for (const auto& e : kIdNames)
    if (e.id == id) return e.name;
  return "unknown";
}

IdentityId parse_identity_id(std::string_view name) {
  for (const auto& e : kIdNames)
    if (name == e.name) return e.id;
  throw PreconditionError("unknown identity id '" + std::string(name) + "'");
}

const std::vector<IdentityId>& all_identity_ids() {
  static const std::vector<IdentityId> ids = [] {
    std::vector<IdentityId> v;
    for (const auto& e : kIdNames) v.push_back(e.id);
    return v;
  }();
  return ids;
}

IdentityReport verify_identity(IdentityId id, const IdentityInputs& in, const Model& model) {
  const Functional& F = in.F;
  const Process& v = in.v;
  const SampleTable t = run_samples(model, 2, [&](const Sample& s, std::span<double> row) {
    const Configuration& w = s.omega;
    const SigmaRule& rule = s.rule;
    switch (id) {
      case IdentityId::adjoint_sigma:
        row[0] = F(w) * divergence(v, w, Flavor::sigma, rule);
        row[1] = gradient_pairing(F, v, w, Flavor::sigma, rule);
        break;
      case IdentityId::adjoint_omega:
        row[0] = F(w) * divergence(v, w, Flavor::omega, rule);
        row[1] = gradient_pairing(F, v, w, Flavor::omega, rule);
        break;
      case IdentityId::mean_delta_sigma:
        row[0] = divergence(v, w, Flavor::sigma, rule);
        break;
      case IdentityId::mean_delta_omega:
        row[0] = divergence(v, w, Flavor::omega, rule);
        break;
      case IdentityId::exchange: {
        const Differences d = differences(F, w, rule);
        const Part other = in.part == Part::plus ? Part::minus : Part::plus;
        row[0] = grad_norm(d, in.p, Measure::sigma, in.part).power;
        row[1] = grad_norm(d, in.p, Measure::omega, other).power;
        break;
      }
      case IdentityId::mecke_forward:
        row[0] = apply_kernel(F, w, KernelDirection::forward, rule);
        row[1] = static_cast<double>(w.size()) * F(w);
        break;
      case IdentityId::mecke_backward:
        row[0] = apply_kernel(F, w, KernelDirection::backward, rule);
        row[1] = rule.total_mass * F(w);
        break;
      case IdentityId::delta_equal: {
        const Process u = gradient_process(F);
        row[0] = divergence(u, w, Flavor::sigma, rule);
        row[1] = divergence(u, w, Flavor::omega, rule);
        break;
      }
      case IdentityId::grad_mean_flip: {
        const Differences d = differences(F, w, rule);
        row[0] = d.sigma_weight * sum(d.sigma);
        row[1] = -sum(d.omega);
        break;
      }
      case IdentityId::dirichlet_equal: {
        const Differences d = differences(F, w, rule);
        row[0] = 0.5 * grad_norm(d, 2.0, Measure::sigma, Part::full).power;
        row[1] = 0.5 * grad_norm(d, 2.0, Measure::omega, Part::full).power;
        break;
      }
      case IdentityId::gamma_equal:
        row[0] = carre_du_champ(F, F, w, Sign::plus, rule);
        row[1] = carre_du_champ(F, F, w, Sign::minus, rule);
        break;
    }
  });
  const double ci = model.mc.ci_level;
  IdentityReport r = make_equality_report(to_string(id), t.estimate(0, ci), t.estimate(1, ci),
                                          paired_difference(t.column(0), t.column(1), ci));
  std::ostringstream note;
  note << "F=" << F.label;
  if (id == IdentityId::adjoint_sigma || id == IdentityId::adjoint_omega ||
      id == IdentityId::mean_delta_sigma || id == IdentityId::mean_delta_omega)
    note << " v=" << v.label;
  if (id == IdentityId::exchange)
    note << " p=" << in.p << " part=" << (in.part == Part::plus ? "plus" : "minus");
  r.note = note.str();
  return r;
}

std::string to_string(CoareaNorm n) {
  switch (n) {
    case CoareaNorm::sigma: return "L1(sigma)";
    case CoareaNorm::omega: return "L1(omega)";
    case CoareaNorm::sym: return "L1(sym)";
    case CoareaNorm::sup: break;
  }
  return "Linf(sigma+omega)";
}

IdentityReport coarea_check(const Functional& F, CoareaNorm norm, Part part, const Model& model,
                            const std::function<EventSet(long)>& level_set) {
  if (norm == CoareaNorm::sup && part == Part::full)
    throw PreconditionError("the L^inf co-area formula holds for D+ and D- separately");
  const Measure measure = norm == CoareaNorm::sigma   ? Measure::sigma
                          : norm == CoareaNorm::omega ? Measure::omega
                                                      : Measure::sym;
  const double p = norm == CoareaNorm::sup ? kInfinity : 1.0;

  // Norm of D^part 1_A for one level set, from the exact event forms.
  auto level_norm = [&](const EventSet& A, const Sample& s) -> double {
    const bool in = A.contains(s.omega);
    if (norm == CoareaNorm::sup) {
      const BoundaryKind kind = part == Part::plus ? BoundaryKind::inner : BoundaryKind::outer;
      return boundary_membership(s.omega, A, kind, s.rule) ? 1.0 : 0.0;
    }
    if (norm == CoareaNorm::sigma) return indicator_sigma_power(A, s.omega, s.rule, part);
    if (norm == CoareaNorm::sym) return indicator_sym_power(A, s.omega, s.rule, part);
    if ((in && part == Part::minus) || (!in && part == Part::plus)) return 0.0;
    return backward_mass(A, s.omega, in);
  };

  const SampleTable t = run_samples(model, 2, [&](const Sample& s, std::span<double> row) {
    const Differences d = differences(F, s.omega, s.rule);
    if (!is_integer(d.value)) throw PreconditionError("co-area check needs an integer-valued F");
    long lo = std::lround(d.value);
    long hi = lo;
    auto widen = [&](const std::vector<double>& diffs) {
      for (double x : diffs) {
        const double nb = d.value - x;
        if (!is_integer(nb)) throw PreconditionError("co-area check needs an integer-valued F");
        lo = std::min(lo, std::lround(nb));
        hi = std::max(hi, std::lround(nb));
      }
    };
    widen(d.sigma);
    widen(d.omega);
    row[0] = grad_norm(d, p, measure, part).norm;

    // Thresholds t = k + 1/2; one extra level below covers additions the
    // rule nodes missed.
    double right = 0.0;
    for (long k = lo - 1; k <= hi; ++k) {
      const double t = static_cast<double>(k) + 0.5;
      if (level_set) {
        right += level_norm(level_set(k), s);
        continue;
      }
      Differences di;
      di.value = d.value > t ? 1.0 : 0.0;
      di.sigma_weight = d.sigma_weight;
      auto level = [&](const std::vector<double>& diffs, std::vector<double>& out) {
        out.reserve(diffs.size());
        for (double x : diffs) out.push_back(di.value - (d.value - x > t ? 1.0 : 0.0));
      };
      level(d.sigma, di.sigma);
      level(d.omega, di.omega);
      right += grad_norm(di, p, measure, part).norm;
    }
    row[1] = right;
  });
  const double ci = model.mc.ci_level;
  const std::string id = norm == CoareaNorm::sup ? "coarea_Linf" : "coarea_L1";
  IdentityReport r = make_equality_report(id, t.estimate(0, ci), t.estimate(1, ci),
                                          paired_difference(t.column(0), t.column(1), ci));
  r.note = "F=" + F.label + " norm=" + to_string(norm) +
           " part=" + (part == Part::plus ? "plus" : part == Part::minus ? "minus" : "full") +
           (level_set ? " exact-level-sets" : "");
  return r;
}

MargulisRussoReport margulis_russo(const EventSet& A, const Model& model, double dlambda) {
  if (A.monotone != Monotonicity::increasing && A.monotone != Monotonicity::decreasing)
    throw PreconditionError("Margulis-Russo needs a monotone event, got " + A.label + " tagged " +
                            to_string(A.monotone));
  if (!(dlambda > 0.0) || !(dlambda < model.lambda))
    throw PreconditionError("Margulis-Russo needs 0 < dlambda < lambda");
  model.validate();
  const bool increasing = A.monotone == Monotonicity::increasing;

  // Coupling: omega_- ~ pi_{lambda - dl}, omega = omega_- + Poisson(dl),
  // omega_+ = omega + Poisson(dl), independent pieces.
  const SampleTable t = run_indexed(
      model.mc.n_outer, 2, model.mc.threads, [&](std::size_t i, std::span<double> row) {
        Rng rng = make_stream(model.mc.seed, i, role::configuration);
        Rng extra = make_stream(model.mc.seed, i, role::superposition);
        Rng quad_rng = make_stream(model.quad.seed, i, role::quadrature);
        const Configuration lower = sample_configuration(model.space, model.lambda - dlambda, rng);
        const Configuration mid =
            superpose(lower, sample_configuration(model.space, dlambda, extra));
        const Configuration upper =
            superpose(mid, sample_configuration(model.space, dlambda, extra));
        row[0] = ((A.contains(upper) ? 1.0 : 0.0) - (A.contains(lower) ? 1.0 : 0.0)) /
                 (2.0 * dlambda);
        // The derivative formula integrates against the base sigma.
        const SigmaRule rule = make_rule(model.space, model.quad, quad_rng, 1.0);
        const double formula = increasing ? indicator_sigma_power(A, mid, rule, Part::minus)
                                          : -indicator_sigma_power(A, mid, rule, Part::plus);
        row[1] = formula;
      });
  const double ci = model.mc.ci_level;
  MargulisRussoReport r;
  r.deriv_fd = t.estimate(0, ci);
  r.deriv_formula = t.estimate(1, ci);
  if (A.closed && A.closed->probability_derivative)
    r.exact = A.closed->probability_derivative(model.lambda);
  r.paired = make_equality_report("margulis_russo", r.deriv_fd, r.deriv_formula,
                                  paired_difference(t.column(0), t.column(1), ci));
  std::ostringstream note;
  note << "A=" << A.label << " dlambda=" << dlambda;
  if (r.exact) note << " exact=" << *r.exact;
  r.paired.note = note.str();
  return r;
}

}  // namespace poisson
