#include <cmath>

#include "poisson/simd/reduce.hpp"
#include "reduce_impl.hpp"

namespace poisson::simd {
namespace detail {

double lane_sum(std::span<const double> x) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) lane[i % 4] += x[i];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

Moments moments_scalar(std::span<const double> x) {
  Moments m;
  m.n = x.size();
  if (x.empty()) return m;
  m.mean = lane_sum(x) / static_cast<double>(x.size());
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double d = x[i] - m.mean;
    lane[i % 4] += d * d;
  }
  m.m2 = (lane[0] + lane[1]) + (lane[2] + lane[3]);
  return m;
}

double part_power_sum_scalar(std::span<const double> x, Part part, double p) {
  double lane[4] = {0.0, 0.0, 0.0, 0.0};
  if (p == 1.0) {
    for (std::size_t i = 0; i < x.size(); ++i) lane[i % 4] += part_value(x[i], part);
  } else if (p == 2.0) {
    for (std::size_t i = 0; i < x.size(); ++i) {
      const double v = part_value(x[i], part);
      lane[i % 4] += v * v;
    }
  } else {
    for (std::size_t i = 0; i < x.size(); ++i) lane[i % 4] += std::pow(part_value(x[i], part), p);
  }
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

double part_max_scalar(std::span<const double> x, Part part) {
  double best = 0.0;
  for (double v : x) {
    const double a = part_value(v, part);
    if (a > best) best = a;
  }
  return best;
}

}  // namespace detail

const ReduceKernels& scalar_kernels() {
  static const ReduceKernels table{"scalar", &detail::moments_scalar,
                                   &detail::part_power_sum_scalar, &detail::part_max_scalar};
  return table;
}

}  // namespace poisson::simd
