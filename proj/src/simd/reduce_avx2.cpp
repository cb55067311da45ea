#include "poisson/simd/reduce.hpp"
#include "reduce_impl.hpp"

#if defined(__x86_64__) && (defined(__GNUC__) || defined(__clang__))
#define POISSON_HAVE_AVX2_KERNELS 1
#include <immintrin.h>
#else
#define POISSON_HAVE_AVX2_KERNELS 0
#endif

namespace poisson::simd {

#if POISSON_HAVE_AVX2_KERNELS
namespace {

#define POISSON_AVX2 __attribute__((target("avx2")))

POISSON_AVX2 inline __m256d part_vec(__m256d v, Part part) {
  const __m256d zero = _mm256_setzero_pd();
  switch (part) {
    case Part::plus: return _mm256_max_pd(v, zero);
    case Part::minus: return _mm256_max_pd(_mm256_sub_pd(zero, v), zero);
    case Part::full: break;
  }
  return _mm256_andnot_pd(_mm256_set1_pd(-0.0), v);
}

// Combines the vector lanes plus a scalar tail with the lane order used by
// the scalar reference.
POISSON_AVX2 inline double finish(__m256d acc, const double* tail, std::size_t tail_len) {
  alignas(32) double lane[4];
  _mm256_store_pd(lane, acc);
  for (std::size_t r = 0; r < tail_len; ++r) lane[r] += tail[r];
  return (lane[0] + lane[1]) + (lane[2] + lane[3]);
}

POISSON_AVX2 Moments moments_avx2(std::span<const double> x) {
  Moments m;
  m.n = x.size();
  if (x.empty()) return m;
  const std::size_t n = x.size();
  const std::size_t body = n - n % 4;
  const double* p = x.data();

  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < body; i += 4) acc = _mm256_add_pd(acc, _mm256_loadu_pd(p + i));
  m.mean = finish(acc, p + body, n - body) / static_cast<double>(n);

  const __m256d mean = _mm256_set1_pd(m.mean);
  acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d d = _mm256_sub_pd(_mm256_loadu_pd(p + i), mean);
    acc = _mm256_add_pd(acc, _mm256_mul_pd(d, d));
  }
  double tail[3];
  for (std::size_t r = 0; r < n - body; ++r) {
    const double d = p[body + r] - m.mean;
    tail[r] = d * d;
  }
  m.m2 = finish(acc, tail, n - body);
  return m;
}

POISSON_AVX2 double part_power_sum_avx2(std::span<const double> x, Part part, double p) {
  if (p != 1.0 && p != 2.0) return detail::part_power_sum_scalar(x, part, p);
  const std::size_t n = x.size();
  const std::size_t body = n - n % 4;
  __m256d acc = _mm256_setzero_pd();
  for (std::size_t i = 0; i < body; i += 4) {
    const __m256d v = part_vec(_mm256_loadu_pd(x.data() + i), part);
    acc = _mm256_add_pd(acc, p == 1.0 ? v : _mm256_mul_pd(v, v));
  }
  double tail[3];
  for (std::size_t r = 0; r < n - body; ++r) {
    const double v = part_value(x[body + r], part);
    tail[r] = p == 1.0 ? v : v * v;
  }
  return finish(acc, tail, n - body);
}

POISSON_AVX2 double part_max_avx2(std::span<const double> x, Part part) {
  const std::size_t n = x.size();
  const std::size_t body = n - n % 4;
  __m256d best = _mm256_setzero_pd();
  for (std::size_t i = 0; i < body; i += 4)
    best = _mm256_max_pd(best, part_vec(_mm256_loadu_pd(x.data() + i), part));
  alignas(32) double lane[4];
  _mm256_store_pd(lane, best);
  double out = 0.0;
  for (double v : lane) out = v > out ? v : out;
  for (std::size_t i = body; i < n; ++i) {
    const double v = part_value(x[i], part);
    out = v > out ? v : out;
  }
  return out;
}

}  // namespace

namespace detail {
bool cpu_has_avx2() { return __builtin_cpu_supports("avx2"); }
}  // namespace detail

const ReduceKernels* avx2_kernels() {
  static const ReduceKernels table{"avx2", &moments_avx2, &part_power_sum_avx2, &part_max_avx2};
  return detail::cpu_has_avx2() ? &table : nullptr;
}

#else

namespace detail {
bool cpu_has_avx2() { return false; }
}  // namespace detail

const ReduceKernels* avx2_kernels() { return nullptr; }

#endif

}  // namespace poisson::simd
