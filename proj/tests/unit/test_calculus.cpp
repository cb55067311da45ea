#include <cmath>
#include <limits>

#include "helpers.hpp"
#include "poisson/calculus.hpp"
#include "poisson/error.hpp"
#include "poisson/events.hpp"
#include "poisson/rng.hpp"

using namespace poisson;

namespace {

Point pt(double x) { return {x, 0.0, 0.0}; }

Configuration conf(std::vector<double> xs) {
  std::vector<Point> p;
  for (double x : xs) p.push_back(pt(x));
  return Configuration::from_points(1, p);
}

SigmaRule midpoint_rule(const PointSpace& s, std::size_t n = 64) {
  Rng rng(0);
  return make_rule(s, QuadSpec{n, 0, QuadMode::midpoint}, rng);
}

// A polynomial in counts with non-trivial differences of both signs.
Functional wiggly() {
  Functional F;
  F.label = "wiggly";
  F.eval = [](const Configuration& w) {
    const double a = static_cast<double>(w.count(Region::interval(0.0, 0.5)));
    const double b = static_cast<double>(w.size());
    return a * a - 1.5 * b + 0.25 * a * b;
  };
  return F;
}

}  // namespace

TEST_CASE("differences of the total count") {
  const Functional N = total_count_functional();
  const auto w = conf({0.3});
  CHECK(diff(N, w, pt(0.6)) == -1.0);
  CHECK(diff(N, w, pt(0.3)) == 1.0);
  CHECK(diff(N, w, pt(0.6), Part::plus) == 0.0);
  CHECK(diff(N, w, pt(0.6), Part::minus) == 1.0);
  CHECK(diff(constant_functional(4.0), w, pt(0.6)) == 0.0);
}

TEST_CASE("plus part of a count indicator") {
  const PointSpace s = PointSpace::unit_interval();
  const EventSet A = count_event(s, Region::interval(0.0, 0.5), Relation::eq, 2);
  const Functional f = A.indicator();
  const auto w = conf({0.1, 0.2, 0.8});
  CHECK(diff(f, w, pt(0.4), Part::plus) == 1.0);
  CHECK(diff(f, w, pt(0.7), Part::plus) == 0.0);
  // |D+ 1_A|^p_{L^p(omega)} = k 1_A
  const SigmaRule rule = midpoint_rule(s);
  for (double p : {1.0, 2.0, 3.0}) CHECK(grad_norm(f, w, p, Measure::omega, Part::plus, rule).power == 2.0);
  CHECK(grad_norm(f, conf({0.1, 0.8}), 2.0, Measure::omega, Part::plus, rule).power == 0.0);
}

TEST_CASE("gradient norms of the total count") {
  const PointSpace s = PointSpace::box(1, {1.0}, 2.5);
  const SigmaRule rule = midpoint_rule(s);
  const Functional N = total_count_functional();
  const auto w = conf({0.2, 0.9});
  CHECK(grad_norm(N, w, 2.0, Measure::sigma, Part::full, rule).power == doctest::Approx(2.5));
  CHECK(grad_norm(N, w, 2.0, Measure::omega, Part::full, rule).power == doctest::Approx(2.0));
  CHECK(grad_norm(N, w, 2.0, Measure::sym, Part::full, rule).power == doctest::Approx(2.25));
  CHECK(grad_norm(N, w, 2.0, Measure::sym, Part::full, rule).norm == doctest::Approx(1.5));
  CHECK(grad_norm(N, w, kInfinity, Measure::sym, Part::full, rule).norm == 1.0);
  CHECK_THROWS_AS(grad_norm(N, w, 0.5, Measure::sigma, Part::full, rule), PreconditionError);
}

TEST_CASE("non-finite functionals are rejected") {
  Functional bad;
  bad.label = "bad";
  bad.eval = [](const Configuration& w) {
    return w.empty() ? 0.0 : std::numeric_limits<double>::infinity();
  };
  CHECK_THROWS_AS(diff(bad, Configuration(1), pt(0.5)), NonFiniteError);
}

TEST_CASE("pointwise properties of D") {
  const PointSpace s = PointSpace::unit_interval();
  const Functional F = wiggly();
  Functional negF = F;
  negF.eval = [F](const Configuration& w) { return -F.eval(w); };
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng = make_stream(3, i);
    const auto w = sample_configuration(s, 3.0, rng);
    const Point x = s.sample_point(rng);
    const double d = diff(F, w, x);
    const double dp = diff(F, w, x, Part::plus), dm = diff(F, w, x, Part::minus);
    CHECK(dp * dm == 0.0);
    CHECK(std::abs(d) == doctest::Approx(dp + dm));
    CHECK(d * d == doctest::Approx(dp * dp + dm * dm));
    CHECK(dp == diff(negF, w, x, Part::minus));
    // sign flip across the perturbation
    CHECK(diff(F, w.with_added(x), x) == doctest::Approx(-d));
    for (const Point& y : w.points()) CHECK(diff(F, w.with_removed(y), y) == doctest::Approx(-diff(F, w, y)));
  }
}

TEST_CASE("closed-form differences agree with the generic ones") {
  const PointSpace s = PointSpace::unit_interval();
  const Functional c = count_functional(Region::interval(0.0, 0.5));
  Functional generic = c;
  generic.closed_form_diff = nullptr;
  for (std::uint64_t i = 0; i < 100; ++i) {
    Rng rng = make_stream(4, i);
    const auto w = sample_configuration(s, 2.0, rng);
    const SigmaRule rule = make_rule(s, QuadSpec{16, 0, QuadMode::monte_carlo}, rng);
    for (double p : {1.0, 2.0, kInfinity}) {
      CHECK(grad_norm(c, w, p, Measure::sym, Part::full, rule).power ==
            grad_norm(generic, w, p, Measure::sym, Part::full, rule).power);
    }
  }
}

TEST_CASE("divergences of the constant process") {
  const PointSpace s = PointSpace::box(1, {1.0}, 1.7);
  const SigmaRule rule = midpoint_rule(s);
  const auto w = conf({0.1, 0.4, 0.6});
  const Process one = constant_process(1.0);
  CHECK(divergence(one, w, Flavor::sigma, rule) == doctest::Approx(1.7 - 3.0));
  CHECK(divergence(one, w, Flavor::omega, rule) == doctest::Approx(3.0 - 1.7));
}

TEST_CASE("Laplacian examples and the two divergence forms") {
  const PointSpace s = PointSpace::box(1, {1.0}, 1.3);
  const SigmaRule rule = midpoint_rule(s);
  const auto w = conf({0.25, 0.75});
  CHECK(laplacian(total_count_functional(), w, rule) == doctest::Approx(0.5 * (2.0 - 1.3)));
  CHECK(laplacian(constant_functional(3.0), w, rule) == doctest::Approx(0.0).epsilon(1e-14));
  const Functional F = wiggly();
  const Process u = gradient_process(F);
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng rng = make_stream(8, i);
    const auto v = sample_configuration(s, 1.0, rng);
    const SigmaRule r = make_rule(s, QuadSpec{32, 0, QuadMode::monte_carlo}, rng);
    const double ds = divergence(u, v, Flavor::sigma, r);
    const double dw = divergence(u, v, Flavor::omega, r);
    CHECK(ds == doctest::Approx(dw).epsilon(1e-12));
    CHECK(laplacian(F, v, r) == doctest::Approx(0.5 * ds).epsilon(1e-12));
  }
}

TEST_CASE("carre du champ on the diagonal") {
  const PointSpace s = PointSpace::unit_interval();
  const SigmaRule rule = midpoint_rule(s);
  const Functional F = wiggly();
  const auto w = conf({0.2, 0.3, 0.7});
  for (Sign sg : {Sign::plus, Sign::minus}) {
    const Part part = sg == Sign::plus ? Part::plus : Part::minus;
    CHECK(carre_du_champ(F, F, w, sg, rule) ==
          doctest::Approx(0.5 * grad_norm(F, w, 2.0, Measure::sym, part, rule).power));
    CHECK(carre_du_champ(constant_functional(1.0), F, w, sg, rule) == 0.0);
  }
}

TEST_CASE("mean divergence vanishes") {
  const Model m = test::model();
  Process u;
  u.label = "u";
  u.eval = [](const Point& x, const Configuration& w) {
    return x[0] <= 0.5 ? static_cast<double>(w.size()) : 0.0;
  };
  const SampleTable t = run_samples(m, 2, [&](const Sample& s, std::span<double> row) {
    row[0] = divergence(u, s.omega, Flavor::sigma, s.rule);
    row[1] = divergence(u, s.omega, Flavor::omega, s.rule);
  });
  CHECK_WITHIN(t.estimate(0, 0.95), 0.0);
  CHECK_WITHIN(t.estimate(1, 0.95), 0.0);
}

TEST_CASE("Dirichlet form from either part") {
  const Model m = test::model();
  const Functional F = count_functional(Region::interval(0.0, 0.5));
  const SampleTable t = run_samples(m, 3, [&](const Sample& s, std::span<double> row) {
    row[0] = carre_du_champ(F, F, s.omega, Sign::plus, s.rule);
    row[1] = carre_du_champ(F, F, s.omega, Sign::minus, s.rule);
    row[2] = row[0] - row[1];
  });
  // D+ lives on omega(B), D- on sigma(B): each side is (1/4)(1/2)
  CHECK_WITHIN(t.estimate(0, 0.95), 0.125);
  CHECK_WITHIN(t.estimate(1, 0.95), 0.125);
  CHECK_WITHIN(t.estimate(2, 0.95), 0.0);
}
