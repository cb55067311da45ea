#include "poisson/profiles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "poisson/error.hpp"
#include "poisson/oracle.hpp"

namespace poisson {

std::string to_string(ProfileVariant v) {
  switch (v) {
    case ProfileVariant::plus: return "plus";
    case ProfileVariant::minus: return "minus";
    case ProfileVariant::full: return "full";
    case ProfileVariant::tilde: break;
  }
  return "tilde";
}

double profile_lower_bound(ProfileVariant variant, double p, double mass) {
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (variant == ProfileVariant::plus || variant == ProfileVariant::minus)
    return p == 1.0 ? 0.25 : nan;
  // The tilde ratio dominates the full one, so the same bounds apply.
  if (p == 1.0) return 0.5;
  if (p == 2.0) return 1.0 / std::sqrt(2.0 * std::numbers::pi);
  if (std::isinf(p))
    return std::max(1.0 / std::sqrt(std::numbers::pi * mass), 1.0 / (2.0 * mass));
  return nan;
}

namespace {

Part part_of(ProfileVariant v) {
  switch (v) {
    case ProfileVariant::plus: return Part::plus;
    case ProfileVariant::minus: return Part::minus;
    default: return Part::full;
  }
}

/// |D^part 1_A|_{L^p((sigma+omega)/2)} from the kernel masses of A.
double indicator_norm(const EventSet& A, const Sample& s, double p, Part part) {
  if (std::isinf(p)) {
    const BoundaryKind kind = part == Part::plus    ? BoundaryKind::inner
                              : part == Part::minus ? BoundaryKind::outer
                                                    : BoundaryKind::full;
    return boundary_membership(s.omega, A, kind, s.rule) ? 1.0 : 0.0;
  }
  const double power = indicator_sym_power(A, s.omega, s.rule, part);
  return p == 1.0 ? power : std::pow(power, 1.0 / p);
}

}  // namespace

ProfileTable isoperimetric_profile(const std::vector<EventSet>& family, double p,
                                   ProfileVariant variant, const Model& model) {
  if (!(p >= 1.0)) throw PreconditionError("isoperimetric profile needs p >= 1");
  const double ci = model.mc.ci_level;
  const Part part = part_of(variant);
  const double upper_pi = variant == ProfileVariant::tilde ? 1.0 : 0.5;

  ProfileTable table;
  table.variant = variant;
  table.p = p;
  for (const EventSet& A : family) {
    const SampleTable t = run_samples(model, 2, [&](const Sample& s, std::span<double> row) {
      row[0] = A.contains(s.omega) ? 1.0 : 0.0;
      row[1] = indicator_norm(A, s, p, part);
    });
    ProfileRow row;
    row.event = A.label;
    row.pi = t.estimate(0, ci);
    if (!(row.pi.lower() > 0.0 && row.pi.upper() < upper_pi)) {
      table.excluded.push_back(A.label);
      continue;
    }
    row.ratio = variant == ProfileVariant::tilde
                    ? ratio_over_variance_of_indicator(t.column(1), t.column(0), ci)
                    : ratio_estimate(t.column(1), t.column(0), ci);
    row.lower_bound = profile_lower_bound(variant, p, model.intensity_mass());
    row.flagged = !std::isnan(row.lower_bound) && row.ratio.upper() < row.lower_bound;
    table.rows.push_back(row);
  }
  if (table.rows.empty()) throw PreconditionError("isoperimetric profile: no event passed the pi(A) guard");
  table.minimum = std::min_element(table.rows.begin(), table.rows.end(),
                                   [](const ProfileRow& a, const ProfileRow& b) {
                                     return a.ratio.mean < b.ratio.mean;
                                   })
                      ->ratio.mean;
  return table;
}

IdentityReport plus_split_check(const EventSet& A, const Model& model) {
  const SampleTable t = run_samples(model, 2, [&](const Sample& s, std::span<double> row) {
    row[0] = indicator_sym_power(A, s.omega, s.rule, Part::full);
    row[1] = 2.0 * indicator_sym_power(A, s.omega, s.rule, Part::plus);
  });
  const double ci = model.mc.ci_level;
  IdentityReport r = make_equality_report("profile_split", t.estimate(0, ci), t.estimate(1, ci),
                                          paired_difference(t.column(0), t.column(1), ci));
  r.note = "A=" + A.label;
  return r;
}

std::pair<double, double> plus_split_exact(const PointSpace& space, const Region& region,
                                           Relation relation, long k, double lambda) {
  const double sb = space.sigma_measure(region);
  const double mu = lambda * sb;
  auto rel = [&](long j) {
    if (j < 0) return false;
    return relation == Relation::eq ? j == k : relation == Relation::ge ? j >= k : j <= k;
  };
  // Points outside B never move omega(B) across the level, so only the count in B matters.
  double full = 0.0;
  double plus = 0.0;
  const long j_max = std::max<long>(k, static_cast<long>(mu)) + 60 + static_cast<long>(10.0 * std::sqrt(mu));
  for (long j = 0; j <= j_max; ++j) {
    const double w = oracle::poisson_pmf(mu, j);
    const double kbar = 0.5 * (mu * (rel(j + 1) != rel(j) ? 1.0 : 0.0) +
                               static_cast<double>(j) * (rel(j - 1) != rel(j) ? 1.0 : 0.0));
    full += w * kbar;
    if (rel(j)) plus += w * kbar;
  }
  return {full, 2.0 * plus};
}

}  // namespace poisson
