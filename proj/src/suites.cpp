#include "poisson/suites.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "poisson/clark.hpp"
#include "poisson/error.hpp"
#include "poisson/identities.hpp"
#include "poisson/inequalities.hpp"
#include "poisson/kernels.hpp"
#include "poisson/profiles.hpp"

namespace poisson {
namespace {

const std::vector<CheckInfo> kCatalogue = {
    {"exchange", "identities", "exchange lemma: sigma-side D+ moments equal omega-side D- moments"},
    {"adjoint_sigma", "identities", "adjointness of D and delta_sigma under the sigma pairing"},
    {"adjoint_omega", "identities", "adjointness of D and delta_omega under the omega pairing"},
    {"mean_delta_sigma", "identities", "divergence delta_sigma has mean zero"},
    {"mean_delta_omega", "identities", "divergence delta_omega has mean zero"},
    {"delta_equal", "identities", "delta_sigma D F = delta_omega D F"},
    {"grad_mean_flip", "identities", "E int D_x F sigma(dx) = -E sum_{x in omega} D_x F"},
    {"dirichlet_equal", "identities", "Dirichlet forms under sigma and omega coincide"},
    {"gamma_equal", "identities", "carre du champ: E Gamma+(F,F) = E Gamma-(F,F)"},
    {"reversibility", "kernels", "forward and backward kernels are mutually adjoint under pi"},
    {"reversibility_oracle", "kernels", "reversibility with F = G = omega(X) against Poisson moments"},
    {"mecke_forward", "kernels", "Mecke form E[K+ F] = E[omega(X) F]"},
    {"mecke_backward", "kernels", "Mecke form E[K- F] = sigma(X) E[F]"},
    {"stationarity", "kernels", "pi is stationary for the normalized symmetrized kernel"},
    {"surface_measure", "boundaries", "surface measure of the boundary via K-bar^(1/2)"},
    {"boundary_probability", "boundaries", "pi of the boundary = E|D1_A|_Linf(sigma+omega)"},
    {"monotonicity", "boundaries", "increasing and decreasing sets: stability under addition/removal"},
    {"coarea_L1", "coarea", "L1 co-area lemma"},
    {"coarea_Linf", "coarea", "Linf(sigma+omega) co-area lemma"},
    {"margulis_russo", "margulis_russo", "Margulis-Russo identity for monotone sets"},
    {"margulis_russo_oracle", "margulis_russo", "Margulis-Russo formula against the exact derivative"},
    {"deviation_theta", "deviation", "median intensity theta of a monotone set"},
    {"deviation_bound", "deviation", "Gaussian deviation bound for monotone sets (direction reported)"},
    {"profile_h", "profiles", "isoperimetric constants h_p: per-set lower bounds"},
    {"profile_split", "profiles", "h_1 = 2 h+_1: full L1 gradient mass is twice the plus part"},
    {"poincare_L2", "inequalities", "Poincare inequality in L2(sigma), witness lambda_2 = 1"},
    {"poincare_Linf", "inequalities", "Poincare constant in Linf(sigma+omega), witness 1/sigma(X)"},
    {"gaussian_iso", "inequalities", "Gaussian-type isoperimetric inequality with I = phi o Phi^-1"},
    {"mod_lsi", "inequalities", "modified logarithmic Sobolev inequality"},
    {"cheeger_power", "inequalities", "Cheeger-type moment inequality with h_1 >= 1/2"},
    {"cheeger_young", "inequalities", "Cheeger inequality for a Young function, expectation form"},
    {"cheeger_young_norm", "inequalities", "Cheeger inequality for a Young function, Orlicz norm form"},
    {"cheeger_g2", "inequalities", "variance-type isoperimetry with b = (1 - 1/sqrt2) k+_1"},
    {"orlicz_norm", "inequalities", "Orlicz norm for N(x) = x^2 equals the L2 norm"},
    {"lsi_witness", "inequalities", "classical LSI fails: boundary/entropy ratio of {omega(B) >= k} decays"},
    {"clark_residual", "clark", "Clark formula F = E F - int E[D_t F | F_t] dN~_t"},
    {"clark_refinement", "clark", "Clark residual decreases as the time grid refines"},
    {"clark_poincare_lower", "clark", "Var F <= E int E[D_t F | F_t]^2 dt (Clark isometry)"},
    {"clark_poincare_upper", "clark", "E int E[D_t F | F_t]^2 dt <= E|DF|^2 (conditional Jensen)"},
};

template <typename Fn>
auto guarded(const std::string& id, Fn&& fn) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error("check " + id + ": " + e.what());
  } catch (const std::exception& e) {
    throw Error("check " + id + ": " + e.what());
  }
}

Region lower_half(const PointSpace& s) {
  Region r = s.whole();
  r.upper[0] = 0.5 * r.upper[0];
  return r;
}

Functional square(const Functional& F) {
  return {F.label + "^2", [F](const Configuration& w) {
            const double v = F(w);
            return v * v;
          },
          nullptr};
}

Functional exp_of(const Functional& F, double sign) {
  return {std::string(sign > 0 ? "exp(" : "exp(-") + F.label + ")",
          [F, sign](const Configuration& w) { return std::exp(sign * F(w)); }, nullptr};
}

Process shifted_count_process() {
  return {"x+omega(X)", [](const Point& x, const Configuration& w) {
            return x[0] + static_cast<double>(w.size());
          }};
}

ReportRow reported(std::string suite, std::string check, std::string inputs, const Estimate& e,
                   std::string note) {
  ReportRow row;
  row.suite = std::move(suite);
  row.check = std::move(check);
  row.inputs = std::move(inputs);
  row.left = e;
  row.right = exact_value(0.0, e.ci_level);
  row.difference = exact_value(0.0, e.ci_level);
  row.verdict = Verdict::reported;
  row.note = std::move(note);
  return row;
}

std::string fmt(double v) {
  std::ostringstream o;
  o.precision(6);
  o << v;
  return o.str();
}

std::vector<ReportRow> identities_suite(const RunConfig& c) {
  const Model model = c.model();
  const PointSpace space = c.space();
  const Region X = space.whole();
  const Functional N = total_count_functional();
  const Functional NB = count_functional(lower_half(space), "omega(B)");
  const EventSet one = count_event(space, X, Relation::eq, 1);
  const Process v = shifted_count_process();
  std::vector<ReportRow> rows;
  auto run = [&](IdentityId id, IdentityInputs in, const std::string& inputs) {
    rows.push_back(guarded(to_string(id), [&] {
      return make_row("identities", verify_identity(id, in, model), inputs);
    }));
  };
  run(IdentityId::exchange, {one.indicator(), v, 1.0, Part::plus}, "F=1{omega(X)=1} p=1 part=plus");
  run(IdentityId::exchange, {N, v, 2.0, Part::minus}, "F=omega(X) p=2 part=minus");
  run(IdentityId::adjoint_sigma, {N, constant_process(1.0)}, "F=omega(X) v=1");
  run(IdentityId::adjoint_sigma, {one.indicator(), v}, "F=1{omega(X)=1} v=x+omega(X)");
  run(IdentityId::adjoint_omega, {N, v}, "F=omega(X) v=x+omega(X)");
  run(IdentityId::mean_delta_sigma, {N, v}, "v=x+omega(X)");
  run(IdentityId::mean_delta_omega, {N, v}, "v=x+omega(X)");
  run(IdentityId::delta_equal, {NB}, "F=omega(B) B=lower half");
  run(IdentityId::grad_mean_flip, {square(N)}, "F=omega(X)^2");
  run(IdentityId::dirichlet_equal, {square(N)}, "F=omega(X)^2");
  run(IdentityId::gamma_equal, {square(N)}, "F=omega(X)^2");
  return rows;
}

std::vector<ReportRow> kernels_suite(const RunConfig& c) {
  const Model model = c.model();
  const PointSpace space = c.space();
  const Region X = space.whole();
  const Region B = lower_half(space);
  const Functional N = total_count_functional();
  const Functional NB = count_functional(B, "omega(B)");
  std::vector<ReportRow> rows;

  const IdentityReport rev = guarded("reversibility", [&] { return reversibility_check(N, N, model); });
  rows.push_back(make_row("kernels", rev, "F=G=omega(X)"));
  const double mu = model.intensity_mass();
  rows.push_back(oracle_row("kernels", "reversibility_oracle", "E[omega(X) K+omega(X)]", rev.left,
                            mu * mu * mu + 2.0 * mu * mu));
  rows.push_back(guarded("reversibility", [&] {
    return make_row("kernels", reversibility_check(constant_functional(1.0), square(N), model),
                    "F=1 G=omega(X)^2");
  }));

  const std::vector<std::pair<Functional, std::string>> fs = {
      {N, "F=omega(X)"}, {square(NB), "F=omega(B)^2 B=lower half"}, {exp_of(N, -1.0), "F=exp(-omega(X))"}};
  for (const auto& [F, label] : fs) {
    for (IdentityId id : {IdentityId::mecke_forward, IdentityId::mecke_backward}) {
      rows.push_back(guarded(to_string(id), [&] {
        return make_row("kernels", verify_identity(id, {F}, model), label);
      }));
    }
  }

  const std::vector<std::pair<EventSet, std::string>> events = {
      {whole_event(), "A=Omega"},
      {count_event(space, X, Relation::eq, 1), "A={omega(X)=1}"},
      {count_event(space, B, Relation::ge, 1), "A={omega(B)>=1} B=lower half"}};
  for (const auto& [A, label] : events) {
    rows.push_back(guarded("stationarity", [&] {
      IdentityReport r = stationarity_check(A, model);
      r.note += " exact pi(A)=" + fmt(A.closed->probability(model.lambda));
      return make_row("kernels", r, label);
    }));
  }
  return rows;
}

std::vector<ReportRow> boundaries_suite(const RunConfig& c) {
  const Model model = c.model();
  std::vector<ReportRow> rows;
  for (const auto& name : c.boundary_events) {
    const EventSet A = c.event(name);
    const std::string inputs = "A=" + A.label + " kind=full";
    const bool exact = A.closed && A.closed->surface_measure;
    const Estimate s = guarded("surface_measure", [&] { return surface_measure(A, BoundaryKind::full, model); });
    rows.push_back(exact ? oracle_row("boundaries", "surface_measure", inputs, s,
                                      A.closed->surface_measure(BoundaryKind::full, model.lambda))
                         : reported("boundaries", "surface_measure", inputs, s,
                                    "no closed form; boundary witnessed at the rule nodes"));
    const Estimate b = guarded("boundary_probability", [&] {
      return boundary_probability(A, BoundaryKind::full, model);
    });
    rows.push_back(exact ? oracle_row("boundaries", "boundary_probability", inputs, b,
                                      A.closed->boundary_probability(BoundaryKind::full, model.lambda))
                         : reported("boundaries", "boundary_probability", inputs, b,
                                    "no closed form; boundary witnessed at the rule nodes"));
    if (A.monotone == Monotonicity::increasing || A.monotone == Monotonicity::decreasing) {
      const MonotonicityReport m = guarded("monotonicity", [&] { return monotonicity_probe(A, model); });
      const bool inc = A.monotone == Monotonicity::increasing;
      const double rate = inc ? m.increasing_violation_rate() : m.decreasing_violation_rate();
      ReportRow row = reported("boundaries", "monotonicity", "A=" + A.label + " tag=" + to_string(A.monotone),
                               exact_value(rate, model.mc.ci_level), "");
      row.difference = exact_value(rate, model.mc.ci_level);
      row.verdict = rate == 0.0 ? Verdict::consistent : Verdict::violated;
      std::ostringstream note;
      note << (inc ? m.addition_violations : m.removal_violations) << " violations in "
           << (inc ? m.addition_probes : m.removal_probes) << (inc ? " additions" : " removals");
      row.note = note.str();
      rows.push_back(row);
    }
  }
  return rows;
}

std::vector<ReportRow> coarea_suite(const RunConfig& c) {
  const Model model = c.model();
  const PointSpace space = c.space();
  const Region X = space.whole();
  const Functional F = count_functional(X, "omega(X)");
  auto level = [space, X](long k) {
    return k + 1 <= 0 ? whole_event() : count_event(space, X, Relation::ge, k + 1);
  };
  std::vector<ReportRow> rows;
  struct Case {
    CoareaNorm norm;
    Part part;
    bool exact;
    const char* inputs;
  };
  const Case cases[] = {
      {CoareaNorm::omega, Part::plus, false, "F=omega(X) L1(omega) plus"},
      {CoareaNorm::sigma, Part::minus, false, "F=omega(X) L1(sigma) minus"},
      {CoareaNorm::sym, Part::full, false, "F=omega(X) L1(sym) full"},
      {CoareaNorm::sup, Part::plus, true, "F=omega(X) Linf(sigma+omega) plus, exact level sets"},
      {CoareaNorm::sup, Part::minus, true, "F=omega(X) Linf(sigma+omega) minus, exact level sets"},
  };
  for (const Case& cs : cases) {
    const std::string id = cs.norm == CoareaNorm::sup ? "coarea_Linf" : "coarea_L1";
    rows.push_back(guarded(id, [&] {
      return make_row("coarea",
                      coarea_check(F, cs.norm, cs.part, model,
                                   cs.exact ? std::function<EventSet(long)>(level) : nullptr),
                      cs.inputs);
    }));
  }
  return rows;
}

std::vector<ReportRow> margulis_russo_suite(const RunConfig& c) {
  const Model model = c.model();
  std::vector<ReportRow> rows;
  for (const auto& name : c.margulis_russo_events) {
    const EventSet A = c.event(name);
    const MargulisRussoReport r = guarded("margulis_russo", [&] {
      return margulis_russo(A, model, c.margulis_russo_dlambda);
    });
    const std::string inputs = "A=" + A.label + " dlambda=" + fmt(c.margulis_russo_dlambda);
    rows.push_back(make_row("margulis_russo", r.paired, inputs));
    if (r.exact)
      rows.push_back(oracle_row("margulis_russo", "margulis_russo_oracle", inputs, r.deriv_formula, *r.exact));
  }
  return rows;
}

std::vector<ReportRow> deviation_suite(const RunConfig& c) {
  std::vector<ReportRow> rows;
  if (c.deviation_event.empty()) return rows;
  const EventSet A = c.event(c.deviation_event);
  const DeviationReport d = guarded("deviation_theta", [&] {
    return deviation_profile(A, c.deviation_lambdas);
  });
  const double ci = c.mc.ci_level;
  rows.push_back(reported("deviation", "deviation_theta", "A=" + A.label,
                          exact_value(d.theta, ci), "Delta=" + fmt(d.delta)));
  for (const auto& r : d.rows) {
    ReportRow row = reported("deviation", "deviation_bound", "A=" + A.label + " lambda=" + fmt(r.lambda),
                             exact_value(r.pi, ci), "");
    row.right = exact_value(r.bound, ci);
    row.difference = exact_value(r.pi - r.bound, ci);
    std::string note = std::string("observed pi ") + (r.pi_at_least_bound ? ">=" : "<") + " bound";
    if (!r.matches_stated_direction) note += "; opposite to the direction stated in the literature";
    row.note = note;
    rows.push_back(row);
  }
  return rows;
}

std::vector<ReportRow> profiles_suite(const RunConfig& c) {
  const Model model = c.model();
  std::vector<EventSet> family;
  for (const auto& name : c.profile_family) family.push_back(c.event(name));
  std::vector<ReportRow> rows;
  if (family.empty()) return rows;

  auto table_row = [&](double p, ProfileVariant variant) {
    const ProfileTable t = guarded("profile_h", [&] {
      return isoperimetric_profile(family, p, variant, model);
    });
    const auto worst = std::min_element(t.rows.begin(), t.rows.end(),
                                        [](const ProfileRow& a, const ProfileRow& b) {
                                          return a.ratio.mean < b.ratio.mean;
                                        });
    const double bound = worst->lower_bound;
    ReportRow row;
    row.suite = "profiles";
    row.check = "profile_h";
    row.inputs = "p=" + fmt(p) + " variant=" + to_string(variant) + " events=" +
                 std::to_string(t.rows.size());
    row.left = exact_value(bound, model.mc.ci_level);
    row.right = worst->ratio;
    row.difference = worst->ratio;
    row.difference.mean = bound - worst->ratio.mean;
    row.tolerance = kToleranceSigmas * worst->ratio.std_error;
    bool ok = true;
    for (const auto& r : t.rows)
      if (!std::isnan(r.lower_bound) && r.ratio.mean < r.lower_bound - kToleranceSigmas * r.ratio.std_error)
        ok = false;
    row.verdict = std::isnan(bound) ? Verdict::reported : ok ? Verdict::holds : Verdict::violated;
    std::string note = "family minimum at " + worst->event;
    if (!t.excluded.empty()) {
      note += "; excluded by the pi(A) guard:";
      for (const auto& e : t.excluded) note += " " + e;
    }
    row.note = note;
    rows.push_back(row);
  };
  for (double p : c.profile_p) table_row(p, ProfileVariant::full);
  table_row(1.0, ProfileVariant::plus);

  rows.push_back(guarded("profile_split", [&] {
    return make_row("profiles", plus_split_check(family.front(), model), "A=" + family.front().label);
  }));
  return rows;
}

std::vector<ReportRow> inequalities_suite(const RunConfig& c) {
  const Model model = c.model();
  const PointSpace space = c.space();
  const Region X = space.whole();
  const Functional N = total_count_functional();
  const double ci = model.mc.ci_level;
  std::vector<ReportRow> rows;

  const PoincareReport p = guarded("poincare_L2", [&] { return poincare_ratio(N, model); });
  rows.push_back(oracle_row("inequalities", "poincare_L2", "F=omega(X)", p.ratio_l2_sigma, 1.0));
  rows.push_back(oracle_row("inequalities", "poincare_Linf", "F=omega(X)", p.ratio_linf,
                            1.0 / model.intensity_mass()));

  const EventSet empty = count_event(space, X, Relation::eq, 0);
  rows.push_back(guarded("gaussian_iso", [&] {
    return make_row("inequalities", gaussian_iso_check(empty, model), "F=1{omega(X)=0}");
  }));
  rows.push_back(guarded("mod_lsi", [&] {
    return make_row("inequalities", mod_lsi_check(exp_of(N, 1.0), model), "F=exp(omega(X))");
  }));

  CheegerSpec power;
  rows.push_back(guarded("cheeger_power", [&] {
    return make_row("inequalities", cheeger_check(N, power, model), "F=omega(X)-m p=2");
  }));
  CheegerSpec young{CheegerMode::young, 2.0, YoungFunction::sqrt_type(), true};
  rows.push_back(guarded("cheeger_young", [&] {
    return make_row("inequalities", cheeger_check(N, young, model), "F=omega(X)-m N=sqrt(1+x^2)-1");
  }));
  CheegerSpec young_norm{CheegerMode::young_norm, 2.0, YoungFunction::power(2.0), true};
  rows.push_back(guarded("cheeger_young_norm", [&] {
    return make_row("inequalities", cheeger_check(N, young_norm, model), "F=omega(X)-m N=x^2");
  }));
  CheegerSpec g2;
  g2.mode = CheegerMode::g2;
  rows.push_back(guarded("cheeger_g2", [&] {
    return make_row("inequalities", cheeger_check(empty.indicator(), g2, model), "F=1{omega(X)=0}");
  }));

  rows.push_back(guarded("orlicz_norm", [&] {
    const double norm = orlicz_norm(N, YoungFunction::power(2.0), model);
    const Estimate m2 = expect(square(N), model);
    const double l2 = std::sqrt(m2.mean);
    IdentityReport r;
    r.id = "orlicz_norm";
    r.left = exact_value(norm, ci);
    r.right = exact_value(l2, ci);
    r.difference = exact_value(norm - l2, ci);
    r.tolerance = 1e-6 * std::max(1.0, l2);
    r.verdict = std::abs(norm - l2) <= r.tolerance ? Verdict::consistent : Verdict::violated;
    r.note = "bisection against sqrt(mean F^2) on the same stream";
    return make_row("inequalities", r, "F=omega(X) N=x^2");
  }));

  const LsiWitnessReport w = lsi_constant_witness(space.total_mass(), model.lambda, 6);
  ReportRow row = reported("inequalities", "lsi_witness", "A_k={omega(X)>=k} k=1..6",
                           exact_value(w.final_ratio, ci), "");
  row.right = exact_value(w.rows.front().ratio, ci);
  row.difference = exact_value(w.final_ratio - w.rows.front().ratio, ci);
  row.verdict = w.strictly_decreasing ? Verdict::holds : Verdict::violated;
  std::string note = "ratios:";
  for (const auto& r : w.rows) note += " " + fmt(r.ratio);
  row.note = note;
  rows.push_back(row);
  return rows;
}

std::vector<ReportRow> clark_suite(const RunConfig& c) {
  std::vector<ReportRow> rows;
  const Region unit = Region::interval(0.0, 1.0);
  const Functional N1 = count_functional(unit, "N_1");
  const double ci = c.mc.ci_level;
  ClarkSpec spec;
  spec.mc = {c.clark_n_outer, c.mc.seed, ci, c.mc.threads};
  spec.n_inner = c.clark_n_inner;
  const std::size_t m_main =
      std::find(c.clark_grids.begin(), c.clark_grids.end(), 32) != c.clark_grids.end() ? 32
                                                                                     : c.clark_grids.front();
  spec.grid = {m_main};

  {
    ClarkSpec s = spec;
    s.exact_mean = 1.0;
    const Estimate r = guarded("clark_residual", [&] { return clark_residual(N1, s); });
    rows.push_back(oracle_row("clark", "clark_residual", "F=N_1 m=" + std::to_string(m_main) + " nested projection",
                              r, 0.0));
  }

  const Functional N1sq = square(N1);
  std::vector<Estimate> residuals;
  for (std::size_t m : c.clark_grids) {
    ClarkSpec s = spec;
    s.grid = {m};
    s.exact_mean = 2.0;
    s.closed_projection = [](double t, const Configuration& past) {
      return -(2.0 * static_cast<double>(past.size()) + 2.0 * (1.0 - t) + 1.0);
    };
    residuals.push_back(guarded("clark_refinement", [&] { return clark_residual(N1sq, s); }));
    rows.push_back(reported("clark", "clark_refinement", "F=N_1^2 m=" + std::to_string(m) + " closed projection",
                            residuals.back(), "residual at this grid"));
  }
  bool decreasing = true;
  for (std::size_t i = 1; i < residuals.size(); ++i) {
    const Estimate d = difference_independent(residuals[i], residuals[i - 1]);
    if (d.mean > kToleranceSigmas * d.std_error) decreasing = false;
  }
  if (residuals.size() > 1) {
    ReportRow row = reported("clark", "clark_refinement", "F=N_1^2 all grids", residuals.back(),
                             "residual non-increasing in m within CI");
    row.right = residuals.front();
    row.difference = difference_independent(residuals.back(), residuals.front());
    row.verdict = decreasing ? Verdict::holds : Verdict::violated;
    rows.push_back(row);
  }

  const Functional half = count_functional(Region::interval(0.0, 0.5), "N_1/2");
  const ClarkPoincareReport p = guarded("clark_poincare_lower", [&] { return poincare_from_clark(half, spec); });
  rows.push_back(make_row("clark", p.lower, "F=N_1/2 nested projection"));
  rows.push_back(make_row("clark", p.upper, "F=N_1/2 nested projection"));
  return rows;
}

}  // namespace

const std::vector<CheckInfo>& check_catalogue() { return kCatalogue; }

std::string list_checks() {
  std::ostringstream o;
  std::size_t width = 0;
  for (const auto& c : kCatalogue) width = std::max(width, c.id.size());
  for (const auto& c : kCatalogue)
    o << c.id << std::string(width - c.id.size() + 2, ' ') << "[" << c.suite << "]  " << c.anchor << '\n';
  return o.str();
}

std::vector<ReportRow> run_suite(const std::string& suite, const RunConfig& config) {
  if (suite == "identities") return identities_suite(config);
  if (suite == "kernels") return kernels_suite(config);
  if (suite == "boundaries") return boundaries_suite(config);
  if (suite == "coarea") return coarea_suite(config);
  if (suite == "margulis_russo") return margulis_russo_suite(config);
  if (suite == "deviation") return deviation_suite(config);
  if (suite == "profiles") return profiles_suite(config);
  if (suite == "inequalities") return inequalities_suite(config);
  if (suite == "clark") return clark_suite(config);
  throw PreconditionError("unknown suite '" + suite + "'");
}

Report run_report(const RunConfig& config, const std::vector<std::string>& suites,
                  const std::function<void(const std::string&)>& progress) {
  Report report;
  report.version = POISSON_VERSION;
  report.config_hash = fnv1a(config.canonical());
  report.seed = config.mc.seed;
  report.ci_level = config.mc.ci_level;
  for (const auto& s : suites.empty() ? config.suites : suites) {
    if (progress) progress(s);
    auto rows = run_suite(s, config);
    report.rows.insert(report.rows.end(), rows.begin(), rows.end());
  }
  return report;
}

}  // namespace poisson
