#pragma once

#include <array>
#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "poisson/rng.hpp"

namespace poisson {

struct Estimate;

inline constexpr int kMaxDimension = 3;

/// A point of X. Coordinates past the space dimension are kept at zero, so
/// the built-in lexicographic order and equality are usable as is.
using Point = std::array<double, kMaxDimension>;

/// Shortest decimal text that reads back to the same double.
std::string format_number(double v);
std::string format_point(const Point& x, int dimension);

/// Axis-aligned box [lower, upper] inside X.
struct Region {
  Point lower{};
  Point upper{};

  static Region interval(double lo, double hi);
  static Region box(std::span<const double> lo, std::span<const double> hi);

  bool contains(const Point& x) const;
  double volume(int dimension) const;
};

/// "[lo,hi]" per axis joined by "x".
std::string format_region(const Region& r, int dimension);

enum class QuadMode { monte_carlo, midpoint };

/// Controls every sigma-integral of one estimator run.
struct QuadSpec {
  std::size_t n_sigma_samples = 32;
  std::uint64_t seed = 0;
  /// Midpoint rule is only available for dimension 1.
  QuadMode mode = QuadMode::monte_carlo;
};

/// The base space X = [0,L1] x ... x [0,Ld] with a uniform finite measure.
class PointSpace {
 public:
  static PointSpace box(int dimension, std::vector<double> sides, double total_mass);
  static PointSpace unit_interval() { return box(1, {1.0}, 1.0); }

  int dimension() const { return dimension_; }
  std::span<const double> sides() const { return sides_; }
  double total_mass() const { return total_mass_; }
  double volume() const { return volume_; }
  double density() const { return total_mass_ / volume_; }

  Region whole() const;
  bool contains(const Point& x) const;
  bool contains(const Region& r) const;

  /// sigma(region), exact. Throws PreconditionError when region is not in X.
  double sigma_measure(const Region& region) const;

  /// One draw from sigma / sigma(X).
  Point sample_point(Rng& rng) const;
  std::vector<Point> sample_sigma(std::size_t n, Rng& rng) const;

  /// Same box with total mass multiplied by `factor` (intensity lambda*sigma).
  PointSpace scaled(double factor) const;

 private:
  PointSpace(int dimension, std::vector<double> sides, double total_mass);

  int dimension_;
  std::vector<double> sides_;
  double total_mass_;
  double volume_;
};

/// A discretisation of sigma: nodes with equal weights summing to
/// `total_mass`. One rule is drawn per configuration and shared by every
/// sigma-integral evaluated at that configuration (common random numbers).
struct SigmaRule {
  std::vector<Point> nodes;
  double node_weight = 0.0;
  double total_mass = 0.0;
  /// Ratio of the integrating measure to the base sigma the space was built
  /// with (lambda when integrating against lambda*sigma).
  double mass_scale = 1.0;
};

SigmaRule make_rule(const PointSpace& space, const QuadSpec& quad, Rng& rng,
                    double mass_scale = 1.0);

/// Integral of f against sigma as sigma(X) times the sample mean of f under
/// sigma/sigma(X) (or the midpoint rule in dimension 1).
Estimate integrate_sigma(const PointSpace& space, const std::function<double(const Point&)>& f,
                         const QuadSpec& quad, double ci_level = 0.95);

}  // namespace poisson
