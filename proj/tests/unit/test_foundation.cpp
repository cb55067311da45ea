#include <algorithm>
#include <cmath>
#include <set>

#include "helpers.hpp"
#include "poisson/configuration.hpp"
#include "poisson/error.hpp"
#include "poisson/point_space.hpp"
#include "poisson/rng.hpp"

using namespace poisson;

TEST_CASE("split streams are deterministic and distinct") {
  CHECK(split_seed(42, 3) == split_seed(42, 3));
  std::set<std::uint64_t> seeds;
  for (std::uint64_t s = 0; s < 1000; ++s) seeds.insert(split_seed(42, s));
  CHECK(seeds.size() == 1000);
  Rng a = make_stream(42, 7, role::configuration);
  Rng b = make_stream(42, 7, role::quadrature);
  Rng c = make_stream(42, 7, role::configuration);
  const auto va = a();
  CHECK(va != b());
  CHECK(va == c());
}

TEST_CASE("point space validation and measure") {
  CHECK_THROWS_AS(PointSpace::box(0, {}, 1.0), PreconditionError);
  CHECK_THROWS_AS(PointSpace::box(4, {1, 1, 1, 1}, 1.0), PreconditionError);
  CHECK_THROWS_AS(PointSpace::box(1, {-1.0}, 1.0), PreconditionError);
  CHECK_THROWS_AS(PointSpace::box(1, {1.0}, 0.0), PreconditionError);
  CHECK_THROWS_AS(PointSpace::box(2, {1.0}, 1.0), PreconditionError);

  const PointSpace s = PointSpace::box(2, {2.0, 1.0}, 4.0);
  CHECK(s.volume() == doctest::Approx(2.0));
  CHECK(s.density() == doctest::Approx(2.0));
  const double lo[] = {0.0, 0.0};
  const double hi[] = {1.0, 0.5};
  CHECK(s.sigma_measure(Region::box(lo, hi)) == doctest::Approx(1.0));
  CHECK(s.sigma_measure(s.whole()) == doctest::Approx(4.0));
  const double out_hi[] = {3.0, 0.5};
  CHECK_THROWS_AS(s.sigma_measure(Region::box(lo, out_hi)), PreconditionError);

  Rng rng(1);
  for (const Point& x : s.sample_sigma(1000, rng)) CHECK(s.contains(x));
  CHECK(s.scaled(0.5).total_mass() == doctest::Approx(2.0));
}

TEST_CASE("sigma integration") {
  const PointSpace s = PointSpace::box(1, {1.0}, 2.0);
  QuadSpec q{64, 3, QuadMode::midpoint};
  const Estimate c = integrate_sigma(s, [](const Point&) { return 3.0; }, q);
  CHECK(c.mean == doctest::Approx(6.0));
  CHECK(c.std_error == 0.0);
  // Midpoint rule integrates affine functions exactly.
  const Estimate lin = integrate_sigma(s, [](const Point& x) { return x[0]; }, q);
  CHECK(lin.mean == doctest::Approx(1.0).epsilon(1e-14));
  q.mode = QuadMode::monte_carlo;
  q.n_sigma_samples = 20000;
  CHECK_WITHIN(integrate_sigma(s, [](const Point& x) { return x[0] * x[0]; }, q), 2.0 / 3.0);
  CHECK_THROWS_AS(integrate_sigma(s, [](const Point&) { return std::nan(""); }, q), NonFiniteError);
  const PointSpace sq = PointSpace::box(2, {1.0, 1.0}, 1.0);
  Rng rng(1);
  CHECK_THROWS_AS(make_rule(sq, QuadSpec{8, 0, QuadMode::midpoint}, rng), PreconditionError);
}

TEST_CASE("configurations") {
  const auto w = Configuration::from_points(1, {{0.7, 0, 0}, {0.2, 0, 0}});
  CHECK(w.size() == 2);
  CHECK(w.points()[0][0] == 0.2);
  CHECK(w.contains({0.7, 0, 0}));
  CHECK_FALSE(w.contains({0.5, 0, 0}));
  CHECK_THROWS_AS(Configuration::from_points(1, {{0.1, 0, 0}, {0.1, 0, 0}}), PreconditionError);
  CHECK_THROWS_AS(w.with_added({0.2, 0, 0}), PreconditionError);
  CHECK_THROWS_AS(w.with_removed({0.3, 0, 0}), PreconditionError);
  CHECK(w.with_added({0.5, 0, 0}).with_removed({0.5, 0, 0}) == w);
  CHECK(w.perturb({0.2, 0, 0}, Direction::remove).size() == 1);
  CHECK(w.count(Region::interval(0.0, 0.5)) == 1);
  CHECK(w.restricted(Region::interval(0.5, 1.0)).size() == 1);
  CHECK(Configuration::from_json(w.to_json()) == w);
  const auto u = superpose(w, Configuration::from_points(1, {{0.4, 0, 0}}));
  CHECK(u.size() == 3);
}

TEST_CASE("Poisson configurations have the right counts") {
  const PointSpace s = PointSpace::box(1, {2.0}, 1.5);
  double sum = 0.0, sum2 = 0.0, in_half = 0.0;
  const int n = 20000;
  for (int i = 0; i < n; ++i) {
    Rng rng = make_stream(5, static_cast<std::uint64_t>(i));
    const auto w = sample_configuration(s, 2.0, rng);
    for (const Point& x : w.points()) CHECK(s.contains(x));
    sum += static_cast<double>(w.size());
    sum2 += static_cast<double>(w.size() * w.size());
    in_half += static_cast<double>(w.count(Region::interval(0.0, 1.0)));
  }
  const double mean = sum / n;
  const double var = sum2 / n - mean * mean;
  CHECK(mean == doctest::Approx(3.0).epsilon(0.03));
  CHECK(var == doctest::Approx(3.0).epsilon(0.06));
  CHECK(in_half / n == doctest::Approx(1.5).epsilon(0.04));
}
