#pragma once

#include <cstddef>
#include <span>
#include <string_view>

namespace poisson::simd {

/// Which part of a signed difference a reduction acts on.
enum class Part { full, plus, minus };

struct Moments {
  std::size_t n = 0;
  double mean = 0.0;
  double m2 = 0.0;  ///< sum of squared deviations from the mean
};

/// Function table of one instruction-set variant. All variants accumulate
/// in four interleaved lanes (element i goes to lane i % 4) and combine the
/// lanes as (l0 + l1) + (l2 + l3), so every variant returns bit-identical
/// results.
struct ReduceKernels {
  std::string_view name;
  Moments (*moments)(std::span<const double> x);
  /// Sum of part(x_i)^p for p in {1, 2}; other exponents use std::pow.
  double (*part_power_sum)(std::span<const double> x, Part part, double p);
  /// max_i |part(x_i)|, 0 for an empty span.
  double (*part_max)(std::span<const double> x, Part part);
};

const ReduceKernels& scalar_kernels();

/// nullptr when the CPU or the compiler lacks AVX2.
const ReduceKernels* avx2_kernels();

/// Variant picked at first use: AVX2 when available, unless the environment
/// variable POISSON_SIMD=scalar forces the reference kernels.
const ReduceKernels& active_kernels();

inline double part_value(double d, Part part) {
  switch (part) {
    case Part::plus: return d > 0.0 ? d : 0.0;
    case Part::minus: return d < 0.0 ? -d : 0.0;
    case Part::full: break;
  }
  return d < 0.0 ? -d : d;
}

}  // namespace poisson::simd
