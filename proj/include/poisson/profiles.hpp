#pragma once

#include <string>
#include <vector>

#include "poisson/engine.hpp"
#include "poisson/estimate.hpp"
#include "poisson/events.hpp"

namespace poisson {

enum class ProfileVariant { plus, minus, full, tilde };
std::string to_string(ProfileVariant v);

/// Proven lower bound of the per-set ratio for a variant and exponent at
/// total intensity mass `mass`; NaN when none is known.
double profile_lower_bound(ProfileVariant variant, double p, double mass);

struct ProfileRow {
  std::string event;
  Estimate pi;
  Estimate ratio;
  double lower_bound = 0.0;
  bool flagged = false;  ///< CI upper edge below the lower bound
  std::string exact_note;
};

struct ProfileTable {
  ProfileVariant variant = ProfileVariant::full;
  double p = 1.0;
  std::vector<ProfileRow> rows;
  std::vector<std::string> excluded;  ///< events dropped by the pi(A) guard
  double minimum = 0.0;               ///< family minimum: upper bound on the constant
};

/// E[|D^variant 1_A|_{L^p((sigma+omega)/2)}] / pi(A) per event (tilde:
/// full norm over pi(A) pi(A^c)). Events whose pi(A) CI leaves (0, 1/2)
/// ((0, 1) for tilde) are excluded; an empty result is an error.
ProfileTable isoperimetric_profile(const std::vector<EventSet>& family, double p,
                                   ProfileVariant variant, const Model& model);

/// Paired check E|D1_A|_{L1(sym)} = 2 E|D+1_A|_{L1(sym)} on one stream.
IdentityReport plus_split_check(const EventSet& A, const Model& model);

/// Exact E|D1_A|_{L1(sym)} and 2 E|D+1_A|_{L1(sym)} for a count event at
/// the model intensity, from the Poisson law.
std::pair<double, double> plus_split_exact(const PointSpace& space, const Region& region,
                                           Relation relation, long k, double lambda);

}  // namespace poisson
