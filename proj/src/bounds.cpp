#include "sentinet/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "sentinet/error.hpp"
#include "sentinet/logmath.hpp"
#include "sentinet/minimize.hpp"
#include "sentinet/parallel.hpp"

namespace sentinet {

namespace {

void check_bound_params(double theta, double gamma, double eps) {
  auto check = [](double v, const char* name) {
    if (!std::isfinite(v) || v < 0.0) {
      throw DomainError(std::string(name) + " must be finite and >= 0 for the bound, got " +
                        std::to_string(v));
    }
  };
  check(theta, "theta");
  check(gamma, "gamma");
  check(eps, "epsilon");
}

}  // namespace

PartitionFunction PartitionFunction::closed_form(Topology tag, std::size_t n) {
  if (tag == Topology::custom) throw UsageError("no closed-form partition function for a custom network");
  // Size checks happen here rather than on first evaluation.
  (void)log_Z_closed(tag, n, 0.0, 0.0);
  return PartitionFunction(tag, n, nullptr);
}

PartitionFunction PartitionFunction::enumerated(const Network& g) {
  return PartitionFunction(g.topology(), g.size(), std::make_shared<const StateHistogram>(g));
}

PartitionFunction PartitionFunction::for_network(const Network& g) {
  if (g.topology() == Topology::custom) return enumerated(g);
  return closed_form(g.topology(), g.size());
}

double PartitionFunction::operator()(double theta, double h) const {
  if (histogram_) return histogram_->log_partition(theta, h);
  return log_Z_closed(tag_, n_, theta, h);
}

double beta_of_b(double b, double gamma, double eps) {
  return gamma + 0.5 * (log_cosh(b - eps) - log_cosh(b + eps));
}

double log_mean_cosh2(double b, double eps) {
  // (e^{2|b|} + e^{-2|b|} + e^{2|eps|} + e^{-2|eps|}) / 4, scaled by the largest exponent.
  const double u = 2.0 * std::abs(b);
  const double v = 2.0 * std::abs(eps);
  const double m = std::max(u, v);
  const double s = std::exp(u - m) + std::exp(-u - m) + std::exp(v - m) + std::exp(-v - m);
  return m + std::log(s) - std::log(4.0);
}

double log_product_cosh(double b, double eps, const SpinVector& x) {
  double s = 0.0;
  for (int xi : x.values()) s += log_cosh(b + eps * xi);
  return s;
}

double log_product_cosh_factored(double b, double eps, const SpinVector& x) {
  const auto n = static_cast<double>(x.size());
  const auto m = static_cast<double>(x.sum());
  return 0.5 * n * log_mean_cosh2(b, eps) + 0.5 * m * (log_cosh(b + eps) - log_cosh(b - eps));
}

double log_objective_A(double b, const PartitionFunction& z, double theta, double gamma, double eps) {
  const auto n = static_cast<double>(z.nodes());
  return 0.5 * n * log_mean_cosh2(b, eps) + z(theta, -beta_of_b(b, gamma, eps));
}

BoundResult pe_upper_bound(const PartitionFunction& z, double theta, double gamma, double eps) {
  check_bound_params(theta, gamma, eps);
  const auto objective = [&](double b) { return log_objective_A(b, z, theta, gamma, eps); };
  const ScalarMinimum best = grid_then_golden(objective, kBMin, kBMax, kBGridStep, kBTolerance);

  const auto n = static_cast<double>(z.nodes());
  BoundResult out;
  out.log_pe_ub = best.value - z(theta, -gamma) - n * log_cosh(eps);
  out.b_star = best.x;
  out.beta_star = beta_of_b(best.x, gamma, eps);
  out.evaluations = best.evaluations;
  if (!std::isfinite(out.log_pe_ub)) throw NumericalError("error bound is not finite");
  return out;
}

BoundResult pe_upper_bound(const Network& g, const ModelParams& p) {
  return pe_upper_bound(PartitionFunction::for_network(g), p.theta, p.gamma, p.epsilon);
}

ExponentPoint exponent_lower_bound(const PartitionFunction& z, double theta, double gamma, double eps) {
  const BoundResult bound = pe_upper_bound(z, theta, gamma, eps);
  ExponentPoint out;
  out.alpha_raw = -bound.log_pe_ub / static_cast<double>(z.nodes());
  out.clamped = out.alpha_raw < 0.0;
  out.alpha = std::max(0.0, out.alpha_raw);
  out.topology = z.topology();
  out.n_eval = z.nodes();
  out.params = {theta, gamma, eps};
  out.b_star = bound.b_star;
  return out;
}

ExponentPoint exponent_lower_bound(Topology tag, std::size_t n, double theta, double gamma, double eps) {
  return exponent_lower_bound(PartitionFunction::closed_form(tag, n), theta, gamma, eps);
}

ExponentPoint exponent_iid(double gamma, double eps) {
  check_bound_params(0.0, gamma, eps);
  // cosh^2 eps + cosh^2 gamma - 1 = cosh^2 eps + sinh^2 gamma
  const double log_c2 = 2.0 * log_cosh(eps);
  const double sh = std::sinh(gamma);
  const double log_sum = log_add_exp(log_c2, 2.0 * std::log(std::abs(sh)));
  ExponentPoint out;
  out.alpha_raw = log_cosh(eps) + log_cosh(gamma) - 0.5 * log_sum;
  out.clamped = out.alpha_raw < 0.0;
  out.alpha = std::max(0.0, out.alpha_raw);
  out.params = {0.0, gamma, eps};
  return out;
}

double chernoff_iid_oracle(double gamma, double eps) {
  check_bound_params(0.0, gamma, eps);
  const double q = std::cosh(gamma + eps) / (2.0 * std::cosh(gamma) * std::cosh(eps));
  const double r = 1.0 - q;
  const auto tilted = [&](double s) {
    return std::log(std::pow(q, s) * std::pow(r, 1.0 - s) + std::pow(r, s) * std::pow(q, 1.0 - s));
  };
  const ScalarMinimum m = golden_section(tilted, 0.0, 1.0, 1e-12);
  return -std::min({m.value, tilted(0.0), tilted(1.0)});
}

std::string_view to_string(SweepVariable v) {
  switch (v) {
    case SweepVariable::theta: return "theta";
    case SweepVariable::gamma: return "gamma";
    case SweepVariable::epsilon: return "epsilon";
  }
  return "theta";
}

SweepVariable sweep_variable_from_string(std::string_view name) {
  if (name == "theta") return SweepVariable::theta;
  if (name == "gamma") return SweepVariable::gamma;
  if (name == "epsilon" || name == "eps") return SweepVariable::epsilon;
  throw UsageError("sweep variable must be theta, gamma or epsilon, got '" + std::string(name) + "'");
}

void SweepSpec::validate() const {
  if (steps < 2) throw UsageError("sweep needs at least 2 steps");
  if (!(from < to)) throw UsageError("sweep needs from < to");
  if (n_eval < 3) throw UsageError("n_eval must be >= 3 so every topology is defined");
  if (from < 0.0) throw UsageError("sweep values must be >= 0");
  fixed.validate();
}

double SweepSpec::value(std::size_t row) const {
  if (row + 1 == steps) return to;
  return from + (to - from) * static_cast<double>(row) / static_cast<double>(steps - 1);
}

std::vector<SweepRow> exponent_sweep(const SweepSpec& spec, unsigned threads) {
  spec.validate();
  std::vector<SweepRow> rows(spec.steps);
  parallel_for(spec.steps, threads, [&](std::size_t i) {
    ModelParams p = spec.fixed;
    const double v = spec.value(i);
    switch (spec.variable) {
      case SweepVariable::theta: p.theta = v; break;
      case SweepVariable::gamma: p.gamma = v; break;
      case SweepVariable::epsilon: p.epsilon = v; break;
    }
    SweepRow& row = rows[i];
    row.value = v;
    row.complete = exponent_lower_bound(Topology::complete, spec.n_eval, p.theta, p.gamma, p.epsilon);
    row.star = exponent_lower_bound(Topology::star, spec.n_eval, p.theta, p.gamma, p.epsilon);
    row.chain = exponent_lower_bound(Topology::ring, spec.n_eval, p.theta, p.gamma, p.epsilon);
    row.iid = exponent_iid(p.gamma, p.epsilon);
  });
  return rows;
}

}  // namespace sentinet
