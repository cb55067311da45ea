#pragma once

#include <cmath>
#include <vector>

#include "doctest.h"
#include "poisson/engine.hpp"
#include "poisson/estimate.hpp"

namespace test {

/// Unit square of mass 1 at intensity 1 with a test-sized sample.
inline poisson::Model model(std::size_t n = 20000, std::uint64_t seed = 11, double lambda = 1.0,
                            double mass = 1.0) {
  poisson::Model m;
  m.space = poisson::PointSpace::box(1, {1.0}, mass);
  m.lambda = lambda;
  m.mc.n_outer = n;
  m.mc.seed = seed;
  m.quad.seed = seed + 1000;
  return m;
}

/// |estimate - exact| within 4 standard errors (plus rounding).
inline bool within(const poisson::Estimate& e, double exact, double sigmas = 4.0) {
  return std::abs(e.mean - exact) <= sigmas * e.std_error + 1e-12 * std::max(1.0, std::abs(exact));
}

inline bool consistent(const poisson::IdentityReport& r) {
  return r.verdict == poisson::Verdict::consistent || r.verdict == poisson::Verdict::holds;
}

}  // namespace test

#define CHECK_WITHIN(est, exact)                                                       \
  do {                                                                                 \
    const auto& e_ = (est);                                                            \
    INFO("mean=" << e_.mean << " se=" << e_.std_error << " exact=" << (exact));       \
    CHECK(test::within(e_, (exact)));                                                 \
  } while (0)

#define CHECK_REPORT(rep)                                                              \
  do {                                                                                 \
    const auto& r_ = (rep);                                                            \
    INFO(r_.id << ": left=" << r_.left.mean << " right=" << r_.right.mean             \
               << " diff=" << r_.difference.mean << " se=" << r_.difference.std_error \
               << " verdict=" << poisson::to_string(r_.verdict) << " " << r_.note);   \
    CHECK(test::consistent(r_));                                                       \
  } while (0)
