#pragma once

#include "poisson/simd/reduce.hpp"

namespace poisson::simd::detail {

Moments moments_scalar(std::span<const double> x);
double part_power_sum_scalar(std::span<const double> x, Part part, double p);
double part_max_scalar(std::span<const double> x, Part part);

bool cpu_has_avx2();

}  // namespace poisson::simd::detail
