#include "sentinet/channel.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "sentinet/error.hpp"
#include "sentinet/logmath.hpp"
#include "sentinet/rng.hpp"

namespace sentinet {

double epsilon_from_pbsc(double p) {
  if (!(p >= 0.0 && p <= 0.5)) {
    throw DomainError("crossover probability must lie in [0, 0.5], got " + std::to_string(p));
  }
  if (p == 0.0) return kNoiselessEpsilon;
  return 0.5 * (std::log1p(-p) - std::log(p));
}

double pbsc_from_epsilon(double eps) {
  if (!(eps >= 0.0)) throw DomainError("epsilon must be >= 0, got " + std::to_string(eps));
  if (std::isinf(eps)) return 0.0;
  // p = 1 / (1 + exp(2 eps))
  return logistic(-2.0 * eps);
}

ChannelParams ChannelParams::from_pbsc(double p) { return {p, epsilon_from_pbsc(p)}; }

ChannelParams ChannelParams::from_epsilon(double eps) { return {pbsc_from_epsilon(eps), eps}; }

SpinVector transmit(const SpinVector& x, double p, std::uint64_t key) {
  if (!(p >= 0.0 && p <= 0.5)) {
    throw DomainError("crossover probability must lie in [0, 0.5], got " + std::to_string(p));
  }
  std::vector<int> y(x.values().begin(), x.values().end());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (counter_uniform(key, i) < p) y[i] = -y[i];
  }
  return SpinVector(std::move(y));
}

double log_likelihood_y_given_x(const SpinVector& y, const SpinVector& x, double eps) {
  const long agreement = dot(y, x);
  if (!(eps >= 0.0)) throw DomainError("epsilon must be >= 0");
  const auto n = static_cast<double>(x.size());
  if (std::isinf(eps)) {
    return agreement == static_cast<long>(x.size()) ? 0.0 : -std::numeric_limits<double>::infinity();
  }
  return eps * static_cast<double>(agreement) - n * log_two_cosh(eps);
}

}  // namespace sentinet
