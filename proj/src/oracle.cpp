#include "poisson/oracle.hpp"

#include <boost/math/distributions/poisson.hpp>

#include "poisson/error.hpp"

namespace poisson::oracle {
namespace {

void check_mean(double mu) {
  if (!(mu >= 0.0)) throw PreconditionError("Poisson mean must be non-negative");
}

}  // namespace

double poisson_pmf(double mu, long j) {
  check_mean(mu);
  if (j < 0) return 0.0;
  if (mu == 0.0) return j == 0 ? 1.0 : 0.0;
  return boost::math::pdf(boost::math::poisson_distribution<double>(mu), static_cast<double>(j));
}

double poisson_cdf(double mu, long j) {
  check_mean(mu);
  if (j < 0) return 0.0;
  if (mu == 0.0) return 1.0;
  return boost::math::cdf(boost::math::poisson_distribution<double>(mu), static_cast<double>(j));
}

double poisson_tail(double mu, long j) {
  check_mean(mu);
  if (j <= 0) return 1.0;
  if (mu == 0.0) return 0.0;
  return boost::math::cdf(
      boost::math::complement(boost::math::poisson_distribution<double>(mu), static_cast<double>(j - 1)));
}

}  // namespace poisson::oracle
