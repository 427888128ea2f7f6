#include "sentinet/detector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

#include "sentinet/error.hpp"
#include "sentinet/logmath.hpp"

namespace sentinet {

namespace {

void check_lengths(const SpinVector& y, const Network& g) {
  if (y.size() != g.size()) {
    throw DimensionError("observation has " + std::to_string(y.size()) + " entries, network has " +
                         std::to_string(g.size()) + " nodes");
  }
}

// Noiseless channel: y = x, so l(y) = p(x = y | +1) / p(x = y | -1).
double noiseless_log_l(const SpinVector& y, const ModelParams& p) {
  return 2.0 * p.gamma * static_cast<double>(y.sum());
}

// Differences within rounding of the two log-sums are exact ties (for example
// sum(y) = 0 on a vertex-transitive graph) and resolve to +1 via log l = 0.
double settle_ratio(double log_plus, double log_minus) {
  const double scale = std::max({1.0, std::abs(log_plus), std::abs(log_minus)});
  const double diff = log_plus - log_minus;
  return std::abs(diff) <= 1e-12 * scale ? 0.0 : diff;
}

// gamma = 0 makes the hypotheses identical, eps = 0 makes y independent of x.
bool uninformative(const ModelParams& p) { return p.gamma == 0.0 || p.epsilon == 0.0; }

}  // namespace

double log_likelihood_ratio_enumerated(const SpinVector& y, const Network& g, const ModelParams& p) {
  check_lengths(y, g);
  p.validate();
  if (uninformative(p)) return 0.0;
  if (std::isinf(p.epsilon)) return noiseless_log_l(y, p);
  require_enumerable(g.size());

  const std::uint64_t y_bits = y.to_bits();
  const long n = static_cast<long>(g.size());
  LogSumExp plus;
  LogSumExp minus;
  enumerate_states(g, [&](std::uint64_t bits, long es, long mag) {
    const long agree = n - 2L * std::popcount(bits ^ y_bits);
    const double base = p.theta * static_cast<double>(es) + p.epsilon * static_cast<double>(agree);
    plus.add(base + p.gamma * static_cast<double>(mag));
    minus.add(base - p.gamma * static_cast<double>(mag));
  });
  return settle_ratio(plus.value(), minus.value());
}

double log_likelihood_ratio_star(const SpinVector& y, const Network& g, const ModelParams& p) {
  check_lengths(y, g);
  if (g.topology() != Topology::star) throw UsageError("hub-conditioned path needs a star network");
  p.validate();
  if (uninformative(p)) return 0.0;
  if (std::isinf(p.epsilon)) return noiseless_log_l(y, p);

  // log sum_{x0} exp(a_0 x0) prod_{k>=1} 2 cosh(theta x0 + a_k), a_i = eps y_i + h
  auto log_sum = [&](double h) {
    double hub_plus = p.epsilon * y[0] + h;
    double hub_minus = -(p.epsilon * y[0] + h);
    for (std::size_t k = 1; k < y.size(); ++k) {
      const double a = p.epsilon * y[k] + h;
      hub_plus += log_two_cosh(p.theta + a);
      hub_minus += log_two_cosh(-p.theta + a);
    }
    return log_add_exp(hub_plus, hub_minus);
  };
  return settle_ratio(log_sum(p.gamma), log_sum(-p.gamma));
}

double log_likelihood_ratio(const SpinVector& y, const Network& g, const ModelParams& p) {
  if (g.topology() == Topology::star) return log_likelihood_ratio_star(y, g, p);
  return log_likelihood_ratio_enumerated(y, g, p);
}

DetectionResult map_detect(const SpinVector& y, const Network& g, const ModelParams& p) {
  const double log_l = log_likelihood_ratio(y, g, p);
  return {log_l >= 0.0 ? 1 : -1, log_l, DetectorKind::map};
}

DetectionResult majority_detect(const SpinVector& y, const ModelParams& p) {
  const long s = y.sum();
  double log_l = 0.0;
  if (std::isinf(p.epsilon)) {
    log_l = 2.0 * p.gamma * static_cast<double>(s);
  } else if (s != 0) {
    log_l = static_cast<double>(s) * (log_cosh(p.epsilon + p.gamma) - log_cosh(p.epsilon - p.gamma));
  }
  return {s >= 0 ? 1 : -1, log_l, DetectorKind::majority};
}

LikelihoodTable::LikelihoodTable(const Network& g, const ModelParams& p) : n_(g.size()) {
  require_enumerable(n_, kMaxNodes);
  p.validate();
  const std::size_t states = std::size_t{1} << n_;
  values_.assign(states, 0.0);
  if (uninformative(p)) return;
  if (std::isinf(p.epsilon)) {
    for (std::size_t b = 0; b < states; ++b) {
      values_[b] = noiseless_log_l(SpinVector::from_bits(n_, b), p);
    }
    return;
  }

  // Prior part of each state's exponent under t = +1 and t = -1.
  std::vector<double> prior_plus(states);
  std::vector<double> prior_minus(states);
  enumerate_states(g, [&](std::uint64_t bits, long es, long mag) {
    const double base = p.theta * static_cast<double>(es);
    prior_plus[bits] = base + p.gamma * static_cast<double>(mag);
    prior_minus[bits] = base - p.gamma * static_cast<double>(mag);
  });

  const long n = static_cast<long>(n_);
  for (std::uint64_t yb = 0; yb < states; ++yb) {
    // Global flip: l(-y) = 1 / l(y).
    const std::uint64_t mirror = (states - 1) ^ yb;
    if (mirror < yb) {
      values_[yb] = -values_[mirror];
      continue;
    }
    LogSumExp plus;
    LogSumExp minus;
    for (std::uint64_t xb = 0; xb < states; ++xb) {
      const double ch = p.epsilon * static_cast<double>(n - 2L * std::popcount(xb ^ yb));
      plus.add(prior_plus[xb] + ch);
      minus.add(prior_minus[xb] + ch);
    }
    values_[yb] = settle_ratio(plus.value(), minus.value());
  }
}

}  // namespace sentinet
