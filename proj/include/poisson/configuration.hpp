#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"
#include "poisson/point_space.hpp"
#include "poisson/rng.hpp"

namespace poisson {

enum class Direction { add, remove };

/// A finite configuration omega of distinct points, kept sorted
/// lexicographically. Membership is exact coordinate equality.
class Configuration {
 public:
  explicit Configuration(int dimension = 1);

  /// Sorts the points; throws PreconditionError on duplicates.
  static Configuration from_points(int dimension, std::vector<Point> points);

  int dimension() const { return dimension_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  std::span<const Point> points() const { return points_; }

  bool contains(const Point& x) const;
  std::size_t count(const Region& region) const;

  /// omega + delta_x. Requires x not in omega.
  Configuration with_added(const Point& x) const;
  /// omega - delta_x. Requires x in omega.
  Configuration with_removed(const Point& x) const;
  Configuration perturb(const Point& x, Direction direction) const;

  /// Points of omega inside `region`.
  Configuration restricted(const Region& region) const;

  bool operator==(const Configuration& other) const = default;

  nlohmann::json to_json() const;
  static Configuration from_json(const nlohmann::json& j);

 private:
  int dimension_;
  std::vector<Point> points_;
};

/// Poisson configuration with intensity lambda * sigma: N ~ Poisson(lambda
/// sigma(X)), then N i.i.d. points from sigma / sigma(X).
Configuration sample_configuration(const PointSpace& space, double lambda, Rng& rng);

/// Union of two configurations with disjoint supports.
Configuration superpose(const Configuration& a, const Configuration& b);

}  // namespace poisson
