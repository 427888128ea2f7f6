#pragma once

#include <cmath>
#include <limits>
#include <span>
#include <utility>

namespace sentinet {

// Streaming log-sum-exp: keeps a running maximum and a sum scaled by it,
// so terms can arrive in any magnitude without overflow. Terms are
// accumulated in call order; results are reproducible for a fixed order.
class LogSumExp {
 public:
  void add(double log_term) {
    if (log_term == -std::numeric_limits<double>::infinity()) return;
    if (log_term <= max_) {
      sum_ += std::exp(log_term - max_);
    } else {
      sum_ = sum_ * std::exp(max_ - log_term) + 1.0;
      max_ = log_term;
    }
  }

  // Adds count * exp(log_term).
  void add(double log_term, double count) {
    if (count <= 0.0) return;
    add(log_term + std::log(count));
  }

  double value() const {
    if (sum_ == 0.0) return -std::numeric_limits<double>::infinity();
    return max_ + std::log(sum_);
  }

 private:
  double max_ = -std::numeric_limits<double>::infinity();
  double sum_ = 0.0;
};

inline double log_sum_exp(std::span<const double> terms) {
  LogSumExp acc;
  for (double t : terms) acc.add(t);
  return acc.value();
}

inline double log_add_exp(double a, double b) {
  if (a < b) std::swap(a, b);
  if (b == -std::numeric_limits<double>::infinity()) return a;
  return a + std::log1p(std::exp(b - a));
}

// log(2 cosh z), finite for any finite z.
inline double log_two_cosh(double z) {
  const double a = std::abs(z);
  return a + std::log1p(std::exp(-2.0 * a));
}

// log(cosh z)
inline double log_cosh(double z) { return log_two_cosh(z) - std::log(2.0); }

inline double logistic(double z) {
  if (z >= 0) return 1.0 / (1.0 + std::exp(-z));
  const double e = std::exp(z);
  return e / (1.0 + e);
}

}  // namespace sentinet
