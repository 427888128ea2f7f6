#include "sentinet/stats.hpp"

#include <algorithm>
#include <boost/math/distributions/beta.hpp>
#include <boost/math/distributions/binomial.hpp>

#include "sentinet/error.hpp"

namespace sentinet {

Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials, double confidence) {
  if (trials == 0) throw DomainError("confidence interval needs at least one trial");
  if (successes > trials) throw DomainError("more successes than trials");
  if (!(confidence > 0.0 && confidence < 1.0)) throw DomainError("confidence must lie in (0, 1)");
  const double tail = (1.0 - confidence) / 2.0;
  const auto k = static_cast<double>(successes);
  const auto n = static_cast<double>(trials);
  Interval out;
  if (successes > 0) {
    out.low = boost::math::quantile(boost::math::beta_distribution<>(k, n - k + 1.0), tail);
  }
  if (successes < trials) {
    out.high = boost::math::quantile(boost::math::beta_distribution<>(k + 1.0, n - k), 1.0 - tail);
  }
  return out;
}

double sign_test_p_value(std::uint64_t a, std::uint64_t b) {
  const std::uint64_t total = a + b;
  if (total == 0) return 1.0;
  const std::uint64_t low = std::min(a, b);
  const boost::math::binomial_distribution<> dist(static_cast<double>(total), 0.5);
  const double one_sided = boost::math::cdf(dist, static_cast<double>(low));
  return std::min(1.0, 2.0 * one_sided);
}

}  // namespace sentinet
