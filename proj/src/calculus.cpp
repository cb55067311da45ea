#include "poisson/calculus.hpp"

#include <cmath>

#include "poisson/error.hpp"

namespace poisson {
namespace {

double checked(double v, const std::string& what) {
  if (!std::isfinite(v)) throw NonFiniteError(what + " evaluated to a non-finite value");
  return v;
}

double norm_from_power(double power, double p) { return p == 1.0 ? power : std::pow(power, 1.0 / p); }

}  // namespace

double Functional::operator()(const Configuration& omega) const {
  return checked(eval(omega), label.empty() ? "functional" : label);
}

double Process::operator()(const Point& x, const Configuration& omega) const {
  return checked(eval(x, omega), label.empty() ? "process" : label);
}

Functional constant_functional(double c) {
  return {"const(" + format_number(c) + ")", [c](const Configuration&) { return c; },
          [](const Configuration&, const Point&) { return 0.0; }};
}

Functional count_functional(const Region& region, std::string label) {
  return {std::move(label),
          [region](const Configuration& w) { return static_cast<double>(w.count(region)); },
          [region](const Configuration& w, const Point& x) {
            if (!region.contains(x)) return 0.0;
            return w.contains(x) ? 1.0 : -1.0;
          }};
}

Functional total_count_functional() {
  return {"omega(X)", [](const Configuration& w) { return static_cast<double>(w.size()); },
          [](const Configuration& w, const Point& x) { return w.contains(x) ? 1.0 : -1.0; }};
}

Process constant_process(double c) {
  return {"const(" + format_number(c) + ")", [c](const Point&, const Configuration&) { return c; }};
}

double diff(const Functional& F, const Configuration& omega, const Point& x, Part part) {
  double d;
  if (F.closed_form_diff) {
    d = checked(F.closed_form_diff(omega, x), F.label + " closed-form difference");
  } else if (omega.contains(x)) {
    d = F(omega) - F(omega.with_removed(x));
  } else {
    d = F(omega) - F(omega.with_added(x));
  }
  return part == Part::full ? d : simd::part_value(d, part);
}

Differences differences(const Functional& F, const Configuration& omega, const SigmaRule& rule) {
  Differences out;
  out.value = F(omega);
  out.sigma_weight = rule.node_weight;
  out.sigma.reserve(rule.nodes.size());
  out.omega.reserve(omega.size());
  const bool closed = static_cast<bool>(F.closed_form_diff);
  for (const Point& x : rule.nodes) {
    if (closed) {
      out.sigma.push_back(checked(F.closed_form_diff(omega, x), F.label + " closed-form difference"));
    } else {
      const Configuration nb = omega.contains(x) ? omega.with_removed(x) : omega.with_added(x);
      out.sigma.push_back(out.value - F(nb));
    }
  }
  for (const Point& x : omega.points()) {
    if (closed) {
      out.omega.push_back(checked(F.closed_form_diff(omega, x), F.label + " closed-form difference"));
    } else {
      out.omega.push_back(out.value - F(omega.with_removed(x)));
    }
  }
  return out;
}

GradNorm grad_norm(const Differences& d, double p, Measure measure, Part part) {
  if (!(p >= 1.0)) throw PreconditionError("gradient norm needs p >= 1");
  const auto& k = simd::active_kernels();
  if (std::isinf(p)) {
    double sup = 0.0;
    if (measure != Measure::omega) sup = std::max(sup, k.part_max(d.sigma, part));
    if (measure != Measure::sigma) sup = std::max(sup, k.part_max(d.omega, part));
    return {sup, sup};
  }
  const double sigma_part = d.sigma_weight * k.part_power_sum(d.sigma, part, p);
  const double omega_part = k.part_power_sum(d.omega, part, p);
  double power = 0.0;
  switch (measure) {
    case Measure::sigma: power = sigma_part; break;
    case Measure::omega: power = omega_part; break;
    case Measure::sym: power = 0.5 * sigma_part + 0.5 * omega_part; break;
  }
  return {power, norm_from_power(power, p)};
}

GradNorm grad_norm(const Functional& F, const Configuration& omega, double p, Measure measure,
                   Part part, const SigmaRule& rule) {
  if (!(p >= 1.0)) throw PreconditionError("gradient norm needs p >= 1");
  return grad_norm(differences(F, omega, rule), p, measure, part);
}

double divergence(const Process& u, const Configuration& omega, Flavor flavor,
                  const SigmaRule& rule) {
  double integral = 0.0;
  double sum = 0.0;
  if (flavor == Flavor::sigma) {
    for (const Point& x : rule.nodes) integral += u(x, omega);
    for (const Point& x : omega.points()) sum += u(x, omega.with_removed(x));
    return rule.node_weight * integral - sum;
  }
  for (const Point& x : omega.points()) sum += u(x, omega);
  for (const Point& x : rule.nodes) integral += u(x, omega.with_added(x));
  return sum - rule.node_weight * integral;
}

double gradient_pairing(const Functional& F, const Process& v, const Configuration& omega,
                        Flavor flavor, const SigmaRule& rule) {
  double total = 0.0;
  if (flavor == Flavor::sigma) {
    for (const Point& x : rule.nodes) total += diff(F, omega, x) * v(x, omega);
    return rule.node_weight * total;
  }
  for (const Point& x : omega.points()) total += diff(F, omega, x) * v(x, omega);
  return total;
}

Process gradient_process(const Functional& F) {
  return {"D" + F.label, [F](const Point& x, const Configuration& w) { return diff(F, w, x); }};
}

double laplacian(const Functional& F, const Configuration& omega, const SigmaRule& rule) {
  const Differences d = differences(F, omega, rule);
  double sigma_sum = 0.0;
  for (double v : d.sigma) sigma_sum += v;
  double omega_sum = 0.0;
  for (double v : d.omega) omega_sum += v;
  return 0.5 * (d.sigma_weight * sigma_sum + omega_sum);
}

double carre_du_champ(const Functional& F, const Functional& G, const Configuration& omega,
                      Sign sign, const SigmaRule& rule) {
  const Part part = sign == Sign::plus ? Part::plus : Part::minus;
  const Differences df = differences(F, omega, rule);
  const Differences dg = differences(G, omega, rule);
  double sigma_sum = 0.0;
  for (std::size_t i = 0; i < df.sigma.size(); ++i)
    sigma_sum += simd::part_value(df.sigma[i], part) * simd::part_value(dg.sigma[i], part);
  double omega_sum = 0.0;
  for (std::size_t i = 0; i < df.omega.size(); ++i)
    omega_sum += simd::part_value(df.omega[i], part) * simd::part_value(dg.omega[i], part);
  return 0.5 * (0.5 * df.sigma_weight * sigma_sum + 0.5 * omega_sum);
}

}  // namespace poisson
