#include "poisson/clark.hpp"

#include <cmath>
#include <random>

#include "poisson/engine.hpp"
#include "poisson/error.hpp"

namespace poisson {
namespace {

const PointSpace& unit_time() {
  static const PointSpace space = PointSpace::unit_interval();
  return space;
}

/// D_t F at a time t, which is almost surely not a point of omega.
double time_diff(const Functional& F, const Configuration& omega, double t) {
  return diff(F, omega, Point{t, 0.0, 0.0});
}

Integrand nested_projection(const Functional& F, std::size_t n_inner, Rng& rng) {
  return [&F, n_inner, &rng](double t, const Configuration& past) {
    return predictable_projection(F, t, past, n_inner, rng).mean;
  };
}

void validate(const ClarkSpec& spec) {
  spec.grid.validate();
  if (spec.mc.n_outer < 2) throw PreconditionError("n_outer must be at least 2");
  if (spec.n_inner < 1 && !spec.closed_projection)
    throw PreconditionError("n_inner must be positive");
}

}  // namespace

void PathGrid::validate() const {
  if (m < 1) throw PreconditionError("path grid needs m >= 1");
}

Configuration strict_past(const Configuration& omega, double t) {
  std::vector<Point> pts;
  for (const Point& x : omega.points())
    if (x[0] < t) pts.push_back(x);
  return Configuration::from_points(omega.dimension(), std::move(pts));
}

Estimate predictable_projection(const Functional& F, double t, const Configuration& past,
                                std::size_t n_inner, Rng& rng, double ci_level) {
  if (!(t >= 0.0 && t <= 1.0)) throw PreconditionError("projection time must lie in [0, 1]");
  if (n_inner < 1) throw PreconditionError("n_inner must be positive");
  std::vector<double> values(n_inner);
  std::poisson_distribution<long> count(1.0 - t);
  std::uniform_real_distribution<double> where(t, 1.0);
  for (std::size_t i = 0; i < n_inner; ++i) {
    std::vector<Point> pts(past.points().begin(), past.points().end());
    const long n = t < 1.0 ? count(rng) : 0;
    for (long j = 0; j < n; ++j) pts.push_back(Point{where(rng), 0.0, 0.0});
    values[i] = time_diff(F, Configuration::from_points(1, std::move(pts)), t);
  }
  return estimate_from_samples(values, ci_level);
}

double compensated_integral(const Integrand& u, const Configuration& omega, const PathGrid& grid) {
  grid.validate();
  double jumps = 0.0;
  for (const Point& x : omega.points()) jumps += u(x[0], strict_past(omega, x[0]));
  double compensator = 0.0;
  for (std::size_t j = 0; j < grid.m; ++j) {
    const double t = grid.t(j);
    compensator += u(t, strict_past(omega, t));
  }
  const double v = jumps - compensator / static_cast<double>(grid.m);
  if (!std::isfinite(v)) throw NonFiniteError("compensated integral is not finite");
  return v;
}

Estimate clark_residual(const Functional& F, const ClarkSpec& spec) {
  validate(spec);
  const double ci = spec.mc.ci_level;
  SampleTable t = run_indexed(spec.mc.n_outer, 2, spec.mc.threads,
                              [&](std::size_t i, std::span<double> row) {
    Rng rng = make_stream(spec.mc.seed, i, role::configuration);
    Rng inner = make_stream(spec.mc.seed, i, role::inner_paths);
    const Configuration omega = sample_configuration(unit_time(), 1.0, rng);
    const Integrand proj =
        spec.closed_projection ? spec.closed_projection : nested_projection(F, spec.n_inner, inner);
    row[0] = F(omega);
    row[1] = compensated_integral(proj, omega, spec.grid);
  });
  double mean = 0.0;
  if (spec.exact_mean) {
    mean = *spec.exact_mean;
  } else {
    for (double v : t.column(0)) mean += v;
    mean /= static_cast<double>(t.rows());
  }
  std::vector<double> residual(t.rows());
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const double r = t.column(0)[i] - mean + t.column(1)[i];
    residual[i] = r * r;
  }
  return estimate_from_samples(residual, ci);
}

ClarkPoincareReport poincare_from_clark(const Functional& F, const ClarkSpec& spec) {
  validate(spec);
  const double ci = spec.mc.ci_level;
  const double m = static_cast<double>(spec.grid.m);
  SampleTable t = run_indexed(spec.mc.n_outer, 4, spec.mc.threads,
                              [&](std::size_t i, std::span<double> row) {
    Rng rng = make_stream(spec.mc.seed, i, role::configuration);
    Rng inner = make_stream(spec.mc.seed, i, role::inner_paths);
    const Configuration omega = sample_configuration(unit_time(), 1.0, rng);
    const Integrand proj =
        spec.closed_projection ? spec.closed_projection : nested_projection(F, spec.n_inner, inner);
    double energy = 0.0;
    double dirichlet = 0.0;
    for (std::size_t j = 0; j < spec.grid.m; ++j) {
      const double s = (static_cast<double>(j) + 0.5) / m;
      const double p = proj(s, strict_past(omega, s));
      const double d = time_diff(F, omega, s);
      energy += p * p;
      dirichlet += d * d;
    }
    row[0] = F(omega);
    row[1] = energy / m;
    row[2] = dirichlet / m;
  });
  const double n = static_cast<double>(t.rows());
  double mean = 0.0;
  for (double v : t.column(0)) mean += v;
  mean /= n;
  auto dev = t.column(3);
  for (std::size_t i = 0; i < t.rows(); ++i) {
    const double c = t.column(0)[i] - mean;
    dev[i] = c * c * n / (n - 1.0);
  }
  ClarkPoincareReport r;
  r.variance = t.estimate(3, ci);
  r.projection_energy = t.estimate(1, ci);
  r.dirichlet = t.estimate(2, ci);
  r.lower = make_inequality_report("clark_poincare_lower", r.variance, r.projection_energy,
                                   paired_difference(t.column(3), t.column(1), ci));
  r.upper = make_inequality_report("clark_poincare_upper", r.projection_energy, r.dirichlet,
                                   paired_difference(t.column(1), t.column(2), ci));
  r.lower.note = r.upper.note = "F=" + F.label;
  return r;
}

}  // namespace poisson
