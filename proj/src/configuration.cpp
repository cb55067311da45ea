#include "poisson/configuration.hpp"

#include <algorithm>
#include <cmath>

#include "poisson/error.hpp"

namespace poisson {

Configuration::Configuration(int dimension) : dimension_(dimension) {
  if (dimension < 1 || dimension > kMaxDimension)
    throw PreconditionError("configuration dimension out of range");
}

Configuration Configuration::from_points(int dimension, std::vector<Point> points) {
  Configuration c(dimension);
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    throw PreconditionError("configuration points must be distinct");
  c.points_ = std::move(points);
  return c;
}

bool Configuration::contains(const Point& x) const {
  return std::binary_search(points_.begin(), points_.end(), x);
}

std::size_t Configuration::count(const Region& region) const {
  std::size_t n = 0;
  for (const Point& x : points_) n += region.contains(x) ? 1 : 0;
  return n;
}

Configuration Configuration::with_added(const Point& x) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), x);
  if (it != points_.end() && *it == x)
    throw PreconditionError("cannot add " + format_point(x, dimension_) + ": already in omega");
  Configuration out(dimension_);
  out.points_.reserve(points_.size() + 1);
  out.points_.insert(out.points_.end(), points_.begin(), it);
  out.points_.push_back(x);
  out.points_.insert(out.points_.end(), it, points_.end());
  return out;
}

Configuration Configuration::with_removed(const Point& x) const {
  const auto it = std::lower_bound(points_.begin(), points_.end(), x);
  if (it == points_.end() || *it != x)
    throw PreconditionError("cannot remove " + format_point(x, dimension_) + ": not in omega");
  Configuration out(dimension_);
  out.points_.reserve(points_.size() - 1);
  out.points_.insert(out.points_.end(), points_.begin(), it);
  out.points_.insert(out.points_.end(), it + 1, points_.end());
  return out;
}

Configuration Configuration::perturb(const Point& x, Direction direction) const {
  return direction == Direction::add ? with_added(x) : with_removed(x);
}

Configuration Configuration::restricted(const Region& region) const {
  Configuration out(dimension_);
  for (const Point& x : points_)
    if (region.contains(x)) out.points_.push_back(x);
  return out;
}

nlohmann::json Configuration::to_json() const {
  nlohmann::json pts = nlohmann::json::array();
  for (const Point& x : points_) {
    nlohmann::json tuple = nlohmann::json::array();
    for (int i = 0; i < dimension_; ++i) tuple.push_back(x[i]);
    pts.push_back(std::move(tuple));
  }
  return {{"dimension", dimension_}, {"points", std::move(pts)}};
}

Configuration Configuration::from_json(const nlohmann::json& j) {
  const int dim = j.at("dimension").get<int>();
  std::vector<Point> pts;
  for (const auto& tuple : j.at("points")) {
    if (static_cast<int>(tuple.size()) != dim)
      throw PreconditionError("point tuple length does not match dimension");
    Point x{};
    for (int i = 0; i < dim; ++i) x[i] = tuple[i].get<double>();
    pts.push_back(x);
  }
  return from_points(dim, std::move(pts));
}

Configuration sample_configuration(const PointSpace& space, double lambda, Rng& rng) {
  if (!(lambda >= 0.0) || !std::isfinite(lambda))
    throw PreconditionError("intensity scale must be finite and >= 0");
  Configuration omega(space.dimension());
  const double mean = lambda * space.total_mass();
  if (mean == 0.0) return omega;
  std::poisson_distribution<long> count(mean);
  const long n = count(rng);
  std::vector<Point> pts = space.sample_sigma(static_cast<std::size_t>(n), rng);
  return Configuration::from_points(space.dimension(), std::move(pts));
}

Configuration superpose(const Configuration& a, const Configuration& b) {
  if (a.dimension() != b.dimension()) throw PreconditionError("dimension mismatch");
  std::vector<Point> pts(a.points().begin(), a.points().end());
  pts.insert(pts.end(), b.points().begin(), b.points().end());
  return Configuration::from_points(a.dimension(), std::move(pts));
}

}  // namespace poisson
