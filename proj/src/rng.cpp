#include "poisson/rng.hpp"

namespace poisson {

std::uint64_t mix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
  return mix64(mix64(master) + 0x9E3779B97F4A7C15ULL * (stream + 1));
}

Rng make_stream(std::uint64_t master, std::uint64_t stream, std::uint64_t role) {
  return Rng(split_seed(split_seed(master, stream), role));
}

}  // namespace poisson
