#include <cstdlib>
#include <string_view>

#include "poisson/simd/reduce.hpp"

namespace poisson::simd {

const ReduceKernels& active_kernels() {
  static const ReduceKernels& chosen = [] () -> const ReduceKernels& {
    const char* env = std::getenv("POISSON_SIMD");
    if (env != nullptr && std::string_view(env) == "scalar") return scalar_kernels();
    if (const ReduceKernels* v = avx2_kernels()) return *v;
    return scalar_kernels();
  }();
  return chosen;
}

}  // namespace poisson::simd
