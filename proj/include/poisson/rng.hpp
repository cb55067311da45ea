#pragma once

#include <cstdint>
#include <random>

namespace poisson {

using Rng = std::mt19937_64;

/// SplitMix64 finalizer.
std::uint64_t mix64(std::uint64_t x);

/// Seed of substream `stream` derived from `master`:
///   mix64(mix64(master) + 0x9E3779B97F4A7C15 * (stream + 1)).
/// Every Monte Carlo sample i owns substream i, so results do not depend on
/// how samples are distributed over worker threads.
std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream);

/// Generator for (master, stream, role). Roles separate independent uses of
/// the same sample index (configuration draw, sigma quadrature, inner paths).
Rng make_stream(std::uint64_t master, std::uint64_t stream, std::uint64_t role = 0);

namespace role {
inline constexpr std::uint64_t configuration = 0;
inline constexpr std::uint64_t quadrature = 1;
inline constexpr std::uint64_t superposition = 2;
inline constexpr std::uint64_t inner_paths = 3;
}  // namespace role

}  // namespace poisson
