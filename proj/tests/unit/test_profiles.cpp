#include <cmath>

#include "helpers.hpp"
#include "oracle_values.hpp"
#include "poisson/error.hpp"
#include "poisson/events.hpp"
#include "poisson/profiles.hpp"

using namespace poisson;
using namespace oracle_values;

TEST_CASE("proven lower bounds") {
  CHECK(profile_lower_bound(ProfileVariant::full, 1.0, 1.0) == 0.5);
  CHECK(profile_lower_bound(ProfileVariant::full, 2.0, 1.0) == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)));
  CHECK(profile_lower_bound(ProfileVariant::full, kInfinity, 1.0) == doctest::Approx(1.0 / std::sqrt(M_PI)));
  CHECK(profile_lower_bound(ProfileVariant::full, kInfinity, 0.1) == doctest::Approx(5.0));
  CHECK(profile_lower_bound(ProfileVariant::plus, 1.0, 1.0) == 0.25);
  CHECK(profile_lower_bound(ProfileVariant::tilde, 1.0, 1.0) == 0.5);
}

TEST_CASE("profile ratios of the empty-count event") {
  const Model m = test::model();
  const std::vector<EventSet> family{count_event(m.space, m.space.whole(), Relation::eq, 0)};
  const auto l1 = isoperimetric_profile(family, 1.0, ProfileVariant::full, m);
  REQUIRE(l1.rows.size() == 1);
  CHECK_WITHIN(l1.rows[0].ratio, 1.0);
  CHECK_FALSE(l1.rows[0].flagged);
  const auto linf = isoperimetric_profile(family, kInfinity, ProfileVariant::full, m);
  CHECK_WITHIN(linf.rows[0].ratio, 2.0);
  CHECK(linf.minimum == linf.rows[0].ratio.mean);
}

TEST_CASE("the pi guard") {
  const Model m = test::model(5000);
  const std::vector<EventSet> family{whole_event(), count_event(m.space, m.space.whole(), Relation::ge, 1),
                                     count_event(m.space, m.space.whole(), Relation::ge, 2)};
  const auto t = isoperimetric_profile(family, 1.0, ProfileVariant::full, m);
  CHECK(t.rows.size() == 1);
  CHECK(t.excluded.size() == 2);
  const auto tilde = isoperimetric_profile(family, 1.0, ProfileVariant::tilde, m);
  CHECK(tilde.rows.size() == 2);
  CHECK_THROWS(isoperimetric_profile({whole_event(), empty_event()}, 1.0, ProfileVariant::full, m));
}

TEST_CASE("full ratio is twice the plus ratio") {
  const Model m = test::model();
  const Region half = Region::interval(0.0, 0.5);
  std::vector<EventSet> family;
  for (long k : {2L, 3L}) family.push_back(count_event(m.space, m.space.whole(), Relation::ge, k));
  family.push_back(count_event(m.space, half, Relation::eq, 1));
  family.push_back(count_event(m.space, Region::interval(0.0, 0.1), Relation::ge, 1));
  family.push_back(linear_event(linear_weight("x"), 1.2));
  const auto full = isoperimetric_profile(family, 1.0, ProfileVariant::full, m);
  const auto plus = isoperimetric_profile(family, 1.0, ProfileVariant::plus, m);
  REQUIRE(full.rows.size() == plus.rows.size());
  for (std::size_t i = 0; i < full.rows.size(); ++i) {
    // an identity in expectation: the plus and minus parts sample different terms
    const double se = std::hypot(full.rows[i].ratio.std_error, 2.0 * plus.rows[i].ratio.std_error);
    CHECK(std::abs(full.rows[i].ratio.mean - 2.0 * plus.rows[i].ratio.mean) <= 4.0 * se);
    CHECK(full.rows[i].pi.mean == plus.rows[i].pi.mean);
    CHECK_FALSE(full.rows[i].flagged);
    CHECK_FALSE(plus.rows[i].flagged);
  }
  for (const EventSet& A : family) CHECK_REPORT(plus_split_check(A, m));
  const auto exact = plus_split_exact(m.space, m.space.whole(), Relation::ge, 2, 1.0);
  CHECK(exact.first == doctest::Approx(kSplitGe2Full).epsilon(1e-12));
  CHECK(exact.second == doctest::Approx(kSplitGe2TwicePlus).epsilon(1e-12));
}

TEST_CASE("bounds hold on a sweep of count events") {
  const Model m = test::model();
  std::vector<EventSet> family;
  for (long k : {2L, 3L}) family.push_back(count_event(m.space, m.space.whole(), Relation::ge, k));
  for (double b : {0.05, 0.2, 0.4}) family.push_back(count_event(m.space, Region::interval(0.0, b), Relation::ge, 1));
  for (double p : {1.0, 2.0, kInfinity}) {
    const auto t = isoperimetric_profile(family, p, ProfileVariant::full, m);
    for (const auto& row : t.rows) {
      CAPTURE(row.event);
      CHECK(row.ratio.mean >= row.lower_bound - 4.0 * row.ratio.std_error);
    }
  }
}
