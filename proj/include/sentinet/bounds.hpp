#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string_view>
#include <vector>

#include "sentinet/graph.hpp"
#include "sentinet/ising.hpp"

namespace sentinet {

// Search domain and grid for the minimization over b.
inline constexpr double kBMin = -8.0;
inline constexpr double kBMax = 8.0;
inline constexpr double kBGridStep = 0.05;
inline constexpr double kBTolerance = 1e-10;
inline constexpr std::size_t kDefaultExponentNodes = 100;

// log Z(theta, h) for one network: closed form on stylized topologies,
// a precomputed state histogram otherwise. Cheap to copy.
class PartitionFunction {
 public:
  static PartitionFunction closed_form(Topology tag, std::size_t n);
  // Throws SizeGuardError for n > kMaxEnumerationNodes.
  static PartitionFunction enumerated(const Network& g);
  // closed_form for tagged networks, enumerated for custom ones.
  static PartitionFunction for_network(const Network& g);

  double operator()(double theta, double h) const;
  std::size_t nodes() const noexcept { return n_; }
  Topology topology() const noexcept { return tag_; }

 private:
  PartitionFunction(Topology tag, std::size_t n, std::shared_ptr<const StateHistogram> hist)
      : tag_(tag), n_(n), histogram_(std::move(hist)) {}

  Topology tag_;
  std::size_t n_;
  std::shared_ptr<const StateHistogram> histogram_;
};

struct BoundResult {
  double log_pe_ub = 0.0;
  double b_star = 0.0;
  double beta_star = 0.0;
  std::size_t evaluations = 0;
};

struct ExponentPoint {
  double alpha = 0.0;      // clamped at 0
  double alpha_raw = 0.0;  // as computed
  bool clamped = false;
  std::optional<Topology> topology;  // empty for the network-free exponent
  std::size_t n_eval = 0;
  ModelParams params;
  double b_star = 0.0;
};

// beta(b) = gamma + 1/2 log(cosh(b - eps) / cosh(b + eps))
double beta_of_b(double b, double gamma, double eps);

// log((cosh 2b + cosh 2eps) / 2), evaluated from the cosh terms directly.
double log_mean_cosh2(double b, double eps);

// sum_i log cosh(b + eps x_i) and its factorized form
// (n/2) log((cosh 2b + cosh 2eps)/2) + (sum x / 2) log(cosh(b + eps) / cosh(b - eps)).
double log_product_cosh(double b, double eps, const SpinVector& x);
double log_product_cosh_factored(double b, double eps, const SpinVector& x);

// log A(b) = (n/2) log((cosh 2b + cosh 2eps)/2) + log Z(theta, -beta(b)).
double log_objective_A(double b, const PartitionFunction& z, double theta, double gamma, double eps);

// Upper bound on the MAP error probability:
// log P_UB = min_b log A(b) - log Z(theta, -gamma) - n log cosh eps.
// Throws DomainError for non-finite or negative parameters, NumericalError
// when the objective is not finite.
BoundResult pe_upper_bound(const PartitionFunction& z, double theta, double gamma, double eps);
BoundResult pe_upper_bound(const Network& g, const ModelParams& p);

// alpha = -log(P_UB) / n at finite n.
ExponentPoint exponent_lower_bound(const PartitionFunction& z, double theta, double gamma, double eps);
ExponentPoint exponent_lower_bound(Topology tag, std::size_t n, double theta, double gamma, double eps);

// Exponent without a network:
// log cosh eps + log cosh gamma - 1/2 log(cosh^2 eps + cosh^2 gamma - 1).
ExponentPoint exponent_iid(double gamma, double eps);

// Chernoff information between Bernoulli(q) and Bernoulli(1 - q),
// q = cosh(gamma + eps) / (2 cosh gamma cosh eps), found by minimizing over
// the tilt s in [0, 1].
double chernoff_iid_oracle(double gamma, double eps);

enum class SweepVariable { theta, gamma, epsilon };

struct SweepSpec {
  SweepVariable variable = SweepVariable::theta;
  double from = 0.0;
  double to = 1.0;
  std::size_t steps = 2;
  ModelParams fixed;  // the swept field is overwritten per row
  std::size_t n_eval = kDefaultExponentNodes;

  // Throws UsageError for steps < 2 or from >= to.
  void validate() const;
  double value(std::size_t row) const;
};

struct SweepRow {
  double value = 0.0;
  ExponentPoint complete;
  ExponentPoint star;
  ExponentPoint chain;
  ExponentPoint iid;
};

// Rows in sweep order; points may be evaluated on up to `threads` workers.
std::vector<SweepRow> exponent_sweep(const SweepSpec& spec, unsigned threads = 1);

std::string_view to_string(SweepVariable v);
SweepVariable sweep_variable_from_string(std::string_view name);

}  // namespace sentinet
