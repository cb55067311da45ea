#include <atomic>
#include <cmath>
#include <stdexcept>

#include "helpers.hpp"
#include "oracle_values.hpp"
#include "poisson/error.hpp"
#include "poisson/events.hpp"
#include "poisson/gaussian.hpp"
#include "poisson/identities.hpp"

using namespace poisson;
using namespace oracle_values;

TEST_CASE("serial and parallel runs give identical tables") {
  Model m = test::model(3000);
  const Functional N = total_count_functional();
  auto run = [&](unsigned threads) {
    m.mc.threads = threads;
    return run_samples(m, 2, [&](const Sample& s, std::span<double> row) {
      row[0] = N(s.omega);
      row[1] = static_cast<double>(s.rule.nodes.size()) * s.rule.nodes[0][0];
    });
  };
  const SampleTable a = run(1), b = run(8);
  for (std::size_t j = 0; j < 2; ++j) {
    const auto ca = a.column(j), cb = b.column(j);
    CHECK(std::equal(ca.begin(), ca.end(), cb.begin()));
  }
  m.mc.threads = 1;
  const Estimate e1 = expect(N, m);
  m.mc.threads = 8;
  const Estimate e8 = expect(N, m);
  CHECK(e1.mean == e8.mean);
  CHECK(e1.std_error == e8.std_error);
}

TEST_CASE("the lowest failing index is reported") {
  for (unsigned threads : {1u, 4u}) {
    try {
      run_indexed(2000, 1, threads, [](std::size_t i, std::span<double>) {
        if (i == 700 || i == 1500 || i == 1999) throw std::runtime_error(std::to_string(i));
      });
      FAIL("expected an exception");
    } catch (const std::runtime_error& e) {
      CHECK(std::string(e.what()) == "700");
    }
  }
}

TEST_CASE("model validation") {
  Model m = test::model();
  m.mc.n_outer = 1;
  CHECK_THROWS_AS(m.validate(), PreconditionError);
  m = test::model();
  m.lambda = -1.0;
  CHECK_THROWS_AS(m.validate(), PreconditionError);
}

TEST_CASE("expectations and medians") {
  const Model m = test::model();
  const Estimate c = expect(constant_functional(2.5), m);
  CHECK(c.mean == 2.5);
  CHECK(c.std_error == 0.0);
  CHECK_WITHIN(expect(total_count_functional(), m), 1.0);
  const EventSet empty = count_event(m.space, m.space.whole(), Relation::eq, 0);
  CHECK_WITHIN(expect(empty.indicator(), m), kInvE);
  CHECK(median(total_count_functional(), m) == 1.0);
  CHECK(median(constant_functional(-3.0), m) == -3.0);
  Functional shifted;
  shifted.label = "N-1";
  shifted.eval = [](const Configuration& w) { return static_cast<double>(w.size()) - 1.0; };
  CHECK(median(shifted, m) == 0.0);
  Functional bad;
  bad.label = "bad";
  bad.eval = [](const Configuration& w) { return w.size() > 3 ? std::nan("") : 0.0; };
  CHECK_THROWS_AS(expect(bad, m), NonFiniteError);
}

TEST_CASE("expectation is linear on a shared stream") {
  const Model m = test::model(5000);
  const Functional F = total_count_functional();
  const Functional G = count_functional(Region::interval(0.0, 0.5));
  Functional H;
  H.label = "2F-3G";
  H.eval = [&](const Configuration& w) { return 2.0 * F(w) - 3.0 * G(w); };
  CHECK(expect(H, m).mean == doctest::Approx(2.0 * expect(F, m).mean - 3.0 * expect(G, m).mean).epsilon(1e-13));
}

TEST_CASE("sampled counts follow the Poisson law") {
  const Model m = test::model();
  const SampleTable t = run_samples(m, 3, [](const Sample& s, std::span<double> row) {
    const double a = static_cast<double>(s.omega.count(Region::interval(0.0, 0.5)));
    const double b = static_cast<double>(s.omega.size()) - a;
    row[0] = a == 0 ? 1.0 : 0.0;
    row[1] = a;
    row[2] = (a - 0.5) * (b - 0.5);
  });
  CHECK_WITHIN(t.estimate(0, 0.95), std::exp(-0.5));
  CHECK_WITHIN(t.estimate(1, 0.95), 0.5);
  // counts on disjoint regions are uncorrelated
  CHECK_WITHIN(t.estimate(2, 0.95), 0.0);
}

TEST_CASE("Gaussian kit") {
  using namespace gaussian;
  CHECK(I(0.5) == doctest::Approx(1.0 / std::sqrt(2.0 * M_PI)).epsilon(1e-15));
  CHECK(I(0.0) == 0.0);
  CHECK(I(1.0) == 0.0);
  CHECK(I(kInvE) == doctest::Approx(kIOfInvE).epsilon(1e-14));
  // Phi(x) rounds to a multiple of 2^-53 near 1, which alone moves the
  // quantile by ulp / phi(x); for x > 0 the round trip is held to that.
  for (double x = -6.0; x <= 6.0; x += 0.01) {
    const double t = Phi(x);
    const double conditioning = (std::nextafter(t, 2.0) - t) / phi(x);
    CHECK(std::abs(Phi_inv(t) - x) <= std::max(1e-10, 2.0 * conditioning));
    if (x <= 0.0) CHECK(std::abs(Phi_inv(t) - x) < 1e-10);
  }
  for (int i = 0; i <= 10000; ++i) {
    const double t = i / 10000.0;
    CHECK(I(t) >= std::sqrt(2.0 / M_PI) * I_var(t) - 1e-15);
  }
  CHECK(I_derivative(0.3) == doctest::Approx(-Phi_inv(0.3)));
}

TEST_CASE("Young functions and Orlicz norms") {
  CHECK(YoungFunction::power(2.0).C_N() == doctest::Approx(2.0).epsilon(1e-6));
  CHECK(YoungFunction::power(3.5).C_N() == doctest::Approx(3.5).epsilon(1e-6));
  CHECK(YoungFunction::sqrt_type().C_N() == doctest::Approx(2.0).epsilon(1e-3));
  CHECK_THROWS(YoungFunction("concave", [](double x) { return std::sqrt(std::abs(x)); },
                             [](double x) { return 0.5 / std::sqrt(std::abs(x)); }));
  CHECK_THROWS(YoungFunction("odd", [](double x) { return x * std::abs(x) + x; },
                             [](double x) { return 2.0 * std::abs(x) + 1.0; }));
  const YoungFunction N2 = YoungFunction::power(2.0);
  const std::vector<double> ones(100, 1.0);
  CHECK(orlicz_norm(ones, N2) == doctest::Approx(1.0).epsilon(1e-12));
  const std::vector<double> v{1.0, -2.0, 3.0, 0.5};
  const std::vector<double> v2{2.0, -4.0, 6.0, 1.0};
  const double rms = std::sqrt((1.0 + 4.0 + 9.0 + 0.25) / 4.0);
  CHECK(orlicz_norm(v, N2) == doctest::Approx(rms).epsilon(1e-12));
  CHECK(orlicz_norm(v2, N2) == doctest::Approx(2.0 * orlicz_norm(v, N2)).epsilon(1e-12));
  CHECK_THROWS(orlicz_norm(std::vector<double>(4, 0.0), N2));
}
