#pragma once

namespace poisson::oracle {

/// Exact Poisson(mu) law; mu = 0 is the point mass at 0 and negative j
/// has probability zero.
double poisson_pmf(double mu, long j);
/// P(N <= j).
double poisson_cdf(double mu, long j);
/// P(N >= j).
double poisson_tail(double mu, long j);

}  // namespace poisson::oracle
