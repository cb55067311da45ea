#include "poisson/inequalities.hpp"

#include <cmath>
#include <sstream>

#include "poisson/error.hpp"
#include "poisson/identities.hpp"
#include "poisson/oracle.hpp"

namespace poisson {
namespace {

double mean_of(std::span<const double> x) {
  double s = 0.0;
  for (double v : x) s += v;
  return s / static_cast<double>(x.size());
}

/// Pseudo-samples g(m) + g'(m)(x_i - m) whose mean is g(mean x) and whose
/// standard error is the delta-method error of g(mean x).
void linearize(std::span<const double> x, double g_m, double dg_m, std::span<double> out) {
  const double m = mean_of(x);
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = g_m + dg_m * (x[i] - m);
}

void require_unit_range(double v, const std::string& label) {
  if (!(v >= 0.0 && v <= 1.0))
    throw PreconditionError(label + " must take values in [0, 1]");
}

Estimate exact(double v, std::size_t n, double ci) { return {v, 0.0, n, ci}; }

}  // namespace

PoincareReport poincare_ratio(const Functional& F, const Model& model) {
  SampleTable t = run_samples(model, 4, [&](const Sample& s, std::span<double> row) {
    const Differences d = differences(F, s.omega, s.rule);
    row[0] = d.value;
    row[1] = grad_norm(d, 2.0, Measure::sigma, Part::full).power;
    const double sup = grad_norm(d, kInfinity, Measure::sym, Part::full).norm;
    row[2] = sup * sup;
  });
  const double ci = model.mc.ci_level;
  PoincareReport r;
  r.variance = variance_estimate(t.column(0), ci);
  if (!(r.variance.mean > 1e-14 * (1.0 + std::abs(mean_of(t.column(0))))))
    throw PreconditionError("Poincare ratio of an (empirically) constant functional " + F.label);
  const double m = mean_of(t.column(0));
  const double n = static_cast<double>(t.rows());
  auto dev = t.column(3);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const double c = t.column(0)[i] - m;
    dev[i] = c * c * n / (n - 1.0);
  }
  r.ratio_l2_sigma = ratio_estimate(t.column(1), t.column(3), ci);
  r.ratio_linf = ratio_estimate(t.column(2), t.column(3), ci);
  return r;
}

namespace {

IdentityReport gaussian_iso_from(const std::function<void(const Sample&, double&, double&)>& eval,
                                 const std::string& label, const Model& model) {
  SampleTable t = run_samples(model, 3, [&](const Sample& s, std::span<double> row) {
    double f = 0.0, grad2 = 0.0;
    eval(s, f, grad2);
    require_unit_range(f, label);
    const double i_f = gaussian::I(f);
    row[0] = f;
    row[1] = std::sqrt(i_f * i_f + 2.0 * grad2);
  });
  const double ci = model.mc.ci_level;
  const double m = mean_of(t.column(0));
  const bool interior = m > 0.0 && m < 1.0;
  linearize(t.column(0), gaussian::I(m), interior ? gaussian::I_derivative(m) : 0.0, t.column(2));
  IdentityReport r =
      make_inequality_report("gaussian_iso", t.estimate(2, ci), t.estimate(1, ci),
                             paired_difference(t.column(2), t.column(1), ci));
  r.note = "F=" + label;
  return r;
}

}  // namespace

IdentityReport gaussian_iso_check(const Functional& F, const Model& model) {
  return gaussian_iso_from(
      [&](const Sample& s, double& f, double& grad2) {
        const Differences d = differences(F, s.omega, s.rule);
        f = d.value;
        grad2 = grad_norm(d, 2.0, Measure::sigma, Part::full).power;
      },
      F.label, model);
}

IdentityReport gaussian_iso_check(const EventSet& A, const Model& model) {
  return gaussian_iso_from(
      [&](const Sample& s, double& f, double& grad2) {
        f = A.contains(s.omega) ? 1.0 : 0.0;
        grad2 = indicator_sigma_power(A, s.omega, s.rule, Part::full);
      },
      "1[" + A.label + "]", model);
}

IdentityReport mod_lsi_check(const Functional& F, const Model& model) {
  SampleTable t = run_samples(model, 4, [&](const Sample& s, std::span<double> row) {
    const Differences d = differences(F, s.omega, s.rule);
    if (!(d.value > 0.0)) throw PreconditionError("modified LSI needs F > 0, " + F.label);
    row[0] = d.value;
    row[1] = d.value * std::log(d.value);
    row[2] = 0.5 * grad_norm(d, 2.0, Measure::sigma, Part::full).power / d.value;
  });
  const double ci = model.mc.ci_level;
  const double m = mean_of(t.column(0));
  const double a = mean_of(t.column(1));
  const double ent = a - m * std::log(m);
  auto pseudo = t.column(3);
  for (std::size_t i = 0; i < t.rows(); ++i)
    pseudo[i] = ent + (t.column(1)[i] - a) - (std::log(m) + 1.0) * (t.column(0)[i] - m);
  IdentityReport r = make_inequality_report("mod_lsi", t.estimate(3, ci), t.estimate(2, ci),
                                            paired_difference(t.column(3), t.column(2), ci));
  r.note = "F=" + F.label;
  return r;
}

double orlicz_norm(const Functional& F, const YoungFunction& N, const Model& model) {
  const SampleTable t = run_samples(model, 1, [&](const Sample& s, std::span<double> row) {
    row[0] = F(s.omega);
  });
  return orlicz_norm(t.column(0), N);
}

IdentityReport cheeger_check(const Functional& F, const CheegerSpec& spec, const Model& model) {
  const double ci = model.mc.ci_level;
  std::ostringstream note;
  note << "F=" << F.label;

  if (spec.mode == CheegerMode::g2) {
    const double b = (1.0 - 1.0 / std::sqrt(2.0)) * kKPlus1Lower;
    SampleTable t = run_samples(model, 3, [&](const Sample& s, std::span<double> row) {
      const Differences d = differences(F, s.omega, s.rule);
      require_unit_range(d.value, F.label);
      const double g = grad_norm(d, 1.0, Measure::sym, Part::full).norm;
      const double iv = gaussian::I_var(d.value);
      row[0] = d.value;
      row[1] = std::sqrt(iv * iv + g * g / b);
    });
    const double m = mean_of(t.column(0));
    linearize(t.column(0), gaussian::I_var(m), 1.0 - 2.0 * m, t.column(2));
    IdentityReport r = make_inequality_report("cheeger_g2", t.estimate(2, ci), t.estimate(1, ci),
                                              paired_difference(t.column(2), t.column(1), ci));
    note << " b=(1-1/sqrt2)*" << kKPlus1Lower << " norm=L1(sym)";
    r.note = note.str();
    return r;
  }

  const double med = median(F, model);
  if (med != 0.0 && !spec.recenter)
    throw PreconditionError("Cheeger check needs m(F) = 0, median of " + F.label + " is " +
                            std::to_string(med));
  const Functional G{F.label, [&F, med](const Configuration& w) { return F(w) - med; },
                     F.closed_form_diff};
  if (med != 0.0) note << " recentred by " << med;

  if (spec.mode == CheegerMode::power) {
    if (!(spec.p >= 1.0)) throw PreconditionError("Cheeger power mode needs p >= 1");
    const double c = spec.p / kH1Lower;
    const SampleTable t = run_samples(model, 2, [&](const Sample& s, std::span<double> row) {
      const Differences d = differences(G, s.omega, s.rule);
      row[0] = std::pow(std::abs(d.value), spec.p);
      row[1] = std::pow(c * grad_norm(d, 1.0, Measure::sym, Part::full).norm, spec.p);
    });
    IdentityReport r = make_inequality_report("cheeger_power", t.estimate(0, ci),
                                              t.estimate(1, ci),
                                              paired_difference(t.column(0), t.column(1), ci));
    note << " p=" << spec.p << " h1_lower=" << kH1Lower;
    r.note = note.str();
    return r;
  }

  const double c = spec.N.C_N() / kKPlus1Lower;
  const SampleTable t = run_samples(model, 2, [&](const Sample& s, std::span<double> row) {
    const Differences d = differences(G, s.omega, s.rule);
    row[0] = d.value;
    row[1] = grad_norm(d, 1.0, Measure::sym, Part::full).norm;
  });
  note << " N=" << spec.N.name() << " C_N=" << spec.N.C_N() << " k_lower=" << kKPlus1Lower;

  if (spec.mode == CheegerMode::young_norm) {
    const double left = orlicz_norm(t.column(0), spec.N);
    const double right = c * orlicz_norm(t.column(1), spec.N);
    const std::size_t n = t.rows();
    IdentityReport r = make_inequality_report("cheeger_young_norm", exact(left, n, ci),
                                              exact(right, n, ci), exact(left - right, n, ci));
    r.note = note.str();
    return r;
  }

  std::vector<double> left(t.rows()), right(t.rows());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    left[i] = spec.N(t.column(0)[i]);
    right[i] = spec.N(c * t.column(1)[i]);
  }
  IdentityReport r = make_inequality_report("cheeger_young", estimate_from_samples(left, ci),
                                            estimate_from_samples(right, ci),
                                            paired_difference(left, right, ci));
  r.note = note.str();
  return r;
}

LsiWitnessReport lsi_constant_witness(double sigma_b, double lambda, long k_max) {
  if (k_max < 2) throw PreconditionError("LSI witness needs k_max >= 2");
  if (!(sigma_b > 0.0) || !(lambda > 0.0))
    throw PreconditionError("LSI witness needs sigma(B) > 0 and lambda > 0");
  const double mu = lambda * sigma_b;
  LsiWitnessReport r;
  r.sigma_b = sigma_b;
  r.lambda = lambda;
  r.strictly_decreasing = true;
  for (long k = 1; k <= k_max; ++k) {
    LsiWitnessRow row;
    row.k = k;
    row.pi_a = oracle::poisson_tail(mu, k);
    // The boundary of {omega(B) >= k} is {omega(B) = k - 1} and {omega(B) = k}.
    row.pi_boundary = oracle::poisson_pmf(mu, k - 1) + oracle::poisson_pmf(mu, k);
    row.ratio = row.pi_boundary / (-row.pi_a * std::log(row.pi_a));
    row.guarded = row.pi_a >= 0.5;
    if (!r.rows.empty() && !(row.ratio < r.rows.back().ratio)) r.strictly_decreasing = false;
    r.rows.push_back(row);
  }
  r.final_ratio = r.rows.back().ratio;
  return r;
}

DeviationReport deviation_profile(const EventSet& A, const std::vector<double>& lambdas) {
  const bool increasing = A.monotone == Monotonicity::increasing;
  if (!increasing && A.monotone != Monotonicity::decreasing)
    throw PreconditionError("deviation profile needs a monotone event, got " + A.label);
  if (!A.closed || !A.closed->probability)
    throw PreconditionError("deviation profile needs the exact law of " + A.label);
  const auto& pi = A.closed->probability;
  DeviationReport r;
  r.event = A.label;
  r.increasing = increasing;
  r.delta = increasing ? A.closed->delta_minus : A.closed->delta_plus;
  if (!(r.delta > 0.0)) throw PreconditionError("deviation profile needs a positive Delta");

  // pi_lambda(A) - 1/2 changes sign once on (0, inf) for a monotone A.
  auto g = [&](double l) { return (pi(l) - 0.5) * (increasing ? 1.0 : -1.0); };
  double lo = 1e-12;
  double hi = 1.0;
  while (g(hi) < 0.0 && hi < 1e6) hi *= 2.0;
  if (!(g(lo) < 0.0 && g(hi) >= 0.0))
    throw Error("deviation profile: no theta with pi_theta(A) = 1/2 in (1e-12, 1e6)");
  while (hi - lo > 1e-14 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (g(mid) < 0.0) lo = mid; else hi = mid;
  }
  r.theta = 0.5 * (lo + hi);

  for (double l : lambdas) {
    if (!(l > 0.0)) throw PreconditionError("deviation profile needs lambda > 0");
    DeviationRow row;
    row.lambda = l;
    row.pi = pi(l);
    const double a = std::sqrt(2.0 * l * r.delta) - std::sqrt(2.0 * r.theta * r.delta);
    row.bound = gaussian::Phi(increasing ? a : -a);
    row.pi_at_least_bound = row.pi >= row.bound;
    if (l > r.theta) row.matches_stated_direction = row.pi <= row.bound;
    else if (l < r.theta) row.matches_stated_direction = row.pi >= row.bound;
    else row.matches_stated_direction = true;
    r.rows.push_back(row);
  }
  return r;
}

}  // namespace poisson
