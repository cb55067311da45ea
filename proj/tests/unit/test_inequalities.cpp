#include <cmath>

#include "helpers.hpp"
#include "oracle_values.hpp"
#include "poisson/error.hpp"
#include "poisson/events.hpp"
#include "poisson/gaussian.hpp"
#include "poisson/identities.hpp"
#include "poisson/inequalities.hpp"

using namespace poisson;
using namespace oracle_values;

namespace {

Functional shifted_count(double shift) {
  Functional F;
  F.label = "N-shift";
  F.eval = [shift](const Configuration& w) { return static_cast<double>(w.size()) - shift; };
  return F;
}

Functional exp_count() {
  Functional F;
  F.label = "exp(N)";
  F.eval = [](const Configuration& w) { return std::exp(static_cast<double>(w.size())); };
  return F;
}

}  // namespace

TEST_CASE("Poincare witnesses at two masses") {
  for (double mass : {0.5, 1.0}) {
    CAPTURE(mass);
    const Model m = test::model(20000, 11, 1.0, mass);
    const auto r = poincare_ratio(total_count_functional(), m);
    CHECK_WITHIN(r.ratio_l2_sigma, 1.0);
    CHECK_WITHIN(r.ratio_linf, 1.0 / mass);
  }
  const Model m = test::model();
  const auto half = poincare_ratio(count_functional(Region::interval(0.0, 0.5)), m);
  CHECK(half.ratio_l2_sigma.mean >= 1.0 - 3.0 * half.ratio_l2_sigma.std_error);
  CHECK_THROWS(poincare_ratio(constant_functional(1.0), m));
}

TEST_CASE("Gaussian-type isoperimetry") {
  const Model m = test::model();
  const EventSet A = count_event(m.space, m.space.whole(), Relation::eq, 0);
  for (const auto& r : {gaussian_iso_check(A, m), gaussian_iso_check(A.indicator(), m)}) {
    CHECK_REPORT(r);
    CHECK(r.left.mean == doctest::Approx(gaussian::I(r.left.mean > 0 ? kInvE : 0.0)).epsilon(0.05));
    CHECK_WITHIN(r.right, kISqrt2InvE);
    CHECK(r.right.lower() > r.left.upper());
  }
  const auto zero = gaussian_iso_check(constant_functional(0.0), m);
  CHECK(zero.left.mean == 0.0);
  CHECK(zero.right.mean == 0.0);
  const auto half = gaussian_iso_check(constant_functional(0.5), m);
  CHECK(half.left.mean == doctest::Approx(gaussian::I(0.5)));
  CHECK(half.right.mean == doctest::Approx(gaussian::I(0.5)));
  CHECK_THROWS(gaussian_iso_check(total_count_functional(), m));
}

TEST_CASE("modified log-Sobolev") {
  const Model m = test::model();
  const auto r = mod_lsi_check(exp_count(), m);
  CHECK_REPORT(r);
  CHECK_WITHIN(r.left, kEntExpN);
  CHECK_WITHIN(r.right, kModLsiRightExpN);
  const auto c = mod_lsi_check(constant_functional(3.0), m);
  CHECK(c.left.mean == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(c.right.mean == 0.0);
  Functional two_point;
  two_point.label = "1+1_{N=0}";
  two_point.eval = [](const Configuration& w) { return w.empty() ? 2.0 : 1.0; };
  CHECK_REPORT(mod_lsi_check(two_point, m));
  CHECK_THROWS(mod_lsi_check(shifted_count(1.0), m));
}

TEST_CASE("Cheeger relaxations") {
  const Model m = test::model();
  CheegerSpec power;
  power.p = 2.0;
  const auto r = cheeger_check(shifted_count(1.0), power, m);
  CHECK_REPORT(r);
  CHECK_WITHIN(r.left, kCheegerPowerLeft);
  CHECK_WITHIN(r.right, kCheegerPowerRight);
  const auto zero = cheeger_check(constant_functional(0.0), power, m);
  CHECK(zero.left.mean == 0.0);
  CHECK(zero.right.mean == 0.0);
  CheegerSpec strict = power;
  strict.recenter = false;
  CHECK_THROWS(cheeger_check(total_count_functional(), strict, m));

  CheegerSpec young;
  young.mode = CheegerMode::young;
  young.N = YoungFunction::power(2.0);
  const auto y = cheeger_check(shifted_count(1.0), young, m);
  CHECK_REPORT(y);
  CheegerSpec norm = young;
  norm.mode = CheegerMode::young_norm;
  norm.N = YoungFunction::sqrt_type();
  CHECK_REPORT(cheeger_check(shifted_count(1.0), norm, m));

  CheegerSpec g2;
  g2.mode = CheegerMode::g2;
  g2.recenter = false;
  const EventSet A = count_event(m.space, m.space.whole(), Relation::eq, 0);
  const auto g = cheeger_check(A.indicator(), g2, m);
  CHECK_REPORT(g);
  CHECK(g.left.mean == doctest::Approx(gaussian::I_var(kInvE)).epsilon(0.05));
  CHECK_WITHIN(g.right, kCheegerG2Right);
}

TEST_CASE("Orlicz norm of a functional") {
  const Model m = test::model();
  const YoungFunction N2 = YoungFunction::power(2.0);
  const Functional F = total_count_functional();
  Functional sq;
  sq.label = "N^2";
  sq.eval = [](const Configuration& w) { return static_cast<double>(w.size() * w.size()); };
  const double rms = std::sqrt(expect(sq, m).mean);
  CHECK(orlicz_norm(F, N2, m) == doctest::Approx(rms).epsilon(1e-6));
  Functional twice;
  twice.label = "2N";
  twice.eval = [](const Configuration& w) { return 2.0 * static_cast<double>(w.size()); };
  CHECK(orlicz_norm(twice, N2, m) == doctest::Approx(2.0 * orlicz_norm(F, N2, m)).epsilon(1e-12));
  CHECK(orlicz_norm(constant_functional(1.0), N2, m) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("logarithmic Sobolev witness") {
  const auto r = lsi_constant_witness(1.0, 1.0, 6);
  REQUIRE(r.rows.size() == 6);
  const double expected[] = {kLsiRatio1, kLsiRatio2, kLsiRatio3, kLsiRatio4, kLsiRatio5, kLsiRatio6};
  for (std::size_t i = 0; i < 6; ++i) CHECK(r.rows[i].ratio == doctest::Approx(expected[i]).epsilon(1e-12));
  CHECK(r.strictly_decreasing);
  CHECK(r.rows[0].guarded);  // pi(omega(B) >= 1) = 0.63 lies outside (0, 1/2)
  CHECK_FALSE(r.rows[1].guarded);
  CHECK_THROWS(lsi_constant_witness(1.0, 1.0, 1));
}

TEST_CASE("deviation profile") {
  const PointSpace s = PointSpace::unit_interval();
  const EventSet A = count_event(s, s.whole(), Relation::ge, 1);
  const auto r = deviation_profile(A, {kTheta, 1.0, 1.5, 2.0});
  CHECK(r.theta == doctest::Approx(kTheta).epsilon(1e-9));
  CHECK(std::abs(r.theta - std::log(2.0)) < 1e-6);
  CHECK(r.delta == 1.0);
  CHECK(r.rows[0].bound == doctest::Approx(0.5).epsilon(1e-9));
  const double pis[] = {kDeviationPi1, kDeviationPi1_5, kDeviationPi2};
  const double bounds[] = {kDeviationBound1, kDeviationBound1_5, kDeviationBound2};
  for (std::size_t i = 0; i < 3; ++i) {
    CHECK(r.rows[i + 1].pi == doctest::Approx(pis[i]).epsilon(1e-12));
    CHECK(r.rows[i + 1].bound == doctest::Approx(bounds[i]).epsilon(1e-12));
    // observed: pi >= bound above theta, opposite to the stated direction
    CHECK(r.rows[i + 1].pi_at_least_bound);
    CHECK_FALSE(r.rows[i + 1].matches_stated_direction);
  }
  CHECK_THROWS(deviation_profile(count_event(s, s.whole(), Relation::eq, 1), {1.0}));
  CHECK_THROWS(deviation_profile(linear_event(linear_weight("x"), 0.5), {1.0}));
}
