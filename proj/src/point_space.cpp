#include "poisson/point_space.hpp"

#include <charconv>
#include <cmath>

#include "poisson/error.hpp"
#include "poisson/estimate.hpp"

namespace poisson {

std::string format_number(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

std::string format_point(const Point& x, int dimension) {
  std::string out = "(";
  for (int i = 0; i < dimension; ++i) out += (i ? ", " : "") + format_number(x[i]);
  return out + ")";
}

std::string format_region(const Region& r, int dimension) {
  std::string out;
  for (int i = 0; i < dimension; ++i)
    out += (i ? "x[" : "[") + format_number(r.lower[i]) + "," + format_number(r.upper[i]) + "]";
  return out;
}

Region Region::interval(double lo, double hi) {
  Region r;
  r.lower[0] = lo;
  r.upper[0] = hi;
  return r;
}

Region Region::box(std::span<const double> lo, std::span<const double> hi) {
  if (lo.size() != hi.size() || lo.empty() || lo.size() > kMaxDimension)
    throw PreconditionError("region corners must have matching dimension 1.." +
                            std::to_string(kMaxDimension));
  Region r;
  for (std::size_t i = 0; i < lo.size(); ++i) {
    r.lower[i] = lo[i];
    r.upper[i] = hi[i];
  }
  return r;
}

bool Region::contains(const Point& x) const {
  for (int i = 0; i < kMaxDimension; ++i)
    if (x[i] < lower[i] || x[i] > upper[i]) return false;
  return true;
}

double Region::volume(int dimension) const {
  double v = 1.0;
  for (int i = 0; i < dimension; ++i) v *= upper[i] - lower[i];
  return v;
}

PointSpace::PointSpace(int dimension, std::vector<double> sides, double total_mass)
    : dimension_(dimension), sides_(std::move(sides)), total_mass_(total_mass), volume_(1.0) {
  for (double s : sides_) volume_ *= s;
}

PointSpace PointSpace::box(int dimension, std::vector<double> sides, double total_mass) {
  if (dimension < 1 || dimension > kMaxDimension)
    throw PreconditionError("dimension must be in 1.." + std::to_string(kMaxDimension));
  if (static_cast<int>(sides.size()) != dimension)
    throw PreconditionError("expected one side length per dimension");
  for (double s : sides)
    if (!(s > 0.0) || !std::isfinite(s)) throw PreconditionError("side lengths must be positive");
  if (!(total_mass > 0.0) || !std::isfinite(total_mass))
    throw PreconditionError("total mass must be positive and finite");
  return PointSpace(dimension, std::move(sides), total_mass);
}

Region PointSpace::whole() const {
  Region r;
  for (int i = 0; i < dimension_; ++i) r.upper[i] = sides_[i];
  return r;
}

bool PointSpace::contains(const Point& x) const {
  for (int i = 0; i < kMaxDimension; ++i) {
    const double hi = i < dimension_ ? sides_[i] : 0.0;
    if (!(x[i] >= 0.0 && x[i] <= hi)) return false;
  }
  return true;
}

bool PointSpace::contains(const Region& r) const {
  for (int i = 0; i < kMaxDimension; ++i) {
    const double hi = i < dimension_ ? sides_[i] : 0.0;
    if (!(r.lower[i] >= 0.0 && r.lower[i] <= r.upper[i] && r.upper[i] <= hi)) return false;
  }
  return true;
}

double PointSpace::sigma_measure(const Region& region) const {
  if (!contains(region)) throw PreconditionError("region is not contained in X");
  return density() * region.volume(dimension_);
}

Point PointSpace::sample_point(Rng& rng) const {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  Point x{};
  for (int i = 0; i < dimension_; ++i) x[i] = sides_[i] * unit(rng);
  return x;
}

std::vector<Point> PointSpace::sample_sigma(std::size_t n, Rng& rng) const {
  std::vector<Point> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back(sample_point(rng));
  return out;
}

PointSpace PointSpace::scaled(double factor) const {
  return box(dimension_, sides_, total_mass_ * factor);
}

SigmaRule make_rule(const PointSpace& space, const QuadSpec& quad, Rng& rng, double mass_scale) {
  if (quad.n_sigma_samples < 1) throw PreconditionError("n_sigma_samples must be >= 1");
  SigmaRule rule;
  rule.mass_scale = mass_scale;
  rule.total_mass = space.total_mass() * mass_scale;
  rule.node_weight = rule.total_mass / static_cast<double>(quad.n_sigma_samples);
  if (quad.mode == QuadMode::midpoint) {
    if (space.dimension() != 1) throw PreconditionError("midpoint quadrature needs dimension 1");
    const double h = space.sides()[0] / static_cast<double>(quad.n_sigma_samples);
    rule.nodes.resize(quad.n_sigma_samples, Point{});
    for (std::size_t i = 0; i < quad.n_sigma_samples; ++i)
      rule.nodes[i][0] = (static_cast<double>(i) + 0.5) * h;
  } else {
    rule.nodes = space.sample_sigma(quad.n_sigma_samples, rng);
  }
  return rule;
}

Estimate integrate_sigma(const PointSpace& space, const std::function<double(const Point&)>& f,
                         const QuadSpec& quad, double ci_level) {
  Rng rng = make_stream(quad.seed, 0, role::quadrature);
  const SigmaRule rule = make_rule(space, quad, rng);
  std::vector<double> values;
  values.reserve(rule.nodes.size());
  for (const Point& x : rule.nodes) {
    const double v = f(x);
    if (!std::isfinite(v))
      throw NonFiniteError("integrand is not finite at " + format_point(x, space.dimension()));
    values.push_back(v);
  }
  Estimate e = estimate_from_samples(values, ci_level);
  e.mean *= space.total_mass();
  e.std_error *= space.total_mass();
  if (quad.mode == QuadMode::midpoint) e.std_error = 0.0;
  return e;
}

}  // namespace poisson
