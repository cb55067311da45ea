#include <cmath>
#include <vector>

#include "helpers.hpp"
#include "poisson/error.hpp"
#include "poisson/estimate.hpp"

using namespace poisson;

TEST_CASE("estimate from samples") {
  const std::vector<double> x{1, 2, 3, 4};
  const Estimate e = estimate_from_samples(x);
  CHECK(e.mean == doctest::Approx(2.5));
  // sample sd sqrt(5/3), divided by sqrt(4)
  CHECK(e.std_error == doctest::Approx(std::sqrt(5.0 / 3.0) / 2.0));
  CHECK(e.half_width() == doctest::Approx(1.959963984540054 * e.std_error));
  const std::vector<double> c(10, 7.0);
  CHECK(estimate_from_samples(c).std_error == 0.0);
  CHECK_THROWS_AS(z_value(1.0), PreconditionError);
}

TEST_CASE("paired and ratio estimates") {
  const std::vector<double> a{1, 2, 3, 4};
  const std::vector<double> b{1, 2, 3, 5};
  const Estimate d = paired_difference(a, b);
  CHECK(d.mean == doctest::Approx(-0.25));
  CHECK_THROWS_AS(paired_difference(a, std::vector<double>{1.0}), PreconditionError);

  const std::vector<double> num{2, 4, 6, 8};
  const std::vector<double> den{1, 2, 3, 4};
  const Estimate r = ratio_estimate(num, den);
  CHECK(r.mean == doctest::Approx(2.0));
  CHECK(r.std_error == doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(ratio_estimate(num, std::vector<double>(4, 0.0)), PreconditionError);

  const std::vector<double> ind{1, 0, 0, 1};
  CHECK(ratio_over_variance_of_indicator(std::vector<double>{1, 1, 1, 1}, ind).mean ==
        doctest::Approx(4.0));

  const Estimate v = variance_estimate(a);
  CHECK(v.mean == doctest::Approx(5.0 / 3.0));
}

TEST_CASE("report verdicts") {
  Estimate l{1.0, 0.1, 100, 0.95}, r{1.2, 0.1, 100, 0.95};
  Estimate d{-0.2, 0.1, 100, 0.95};
  CHECK(make_equality_report("x", l, r, d).verdict == Verdict::consistent);
  d.mean = -0.5;
  CHECK(make_equality_report("x", l, r, d).verdict == Verdict::violated);
  CHECK(make_inequality_report("x", l, r, d).verdict == Verdict::holds);
  d.mean = 0.5;
  CHECK(make_inequality_report("x", l, r, d).verdict == Verdict::violated);
}
