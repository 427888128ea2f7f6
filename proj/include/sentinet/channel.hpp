#pragma once

#include <cstdint>
#include <limits>

#include "sentinet/ising.hpp"

namespace sentinet {

// Binary symmetric channel with crossover probability p_bsc in [0, 1/2].
// epsilon = 1/2 log((1 - p) / p) >= 0; a noiseless channel (p = 0) has
// epsilon = +infinity.
struct ChannelParams {
  double p_bsc = 0.5;
  double epsilon = 0.0;

  static ChannelParams from_pbsc(double p);
  static ChannelParams from_epsilon(double eps);

  bool noiseless() const { return p_bsc == 0.0; }
};

inline constexpr double kNoiselessEpsilon = std::numeric_limits<double>::infinity();

// Throws DomainError for p outside [0, 1/2]; p == 0 yields kNoiselessEpsilon.
double epsilon_from_pbsc(double p);
// Throws DomainError for eps < 0 or NaN.
double pbsc_from_epsilon(double eps);

// Flips coordinate i when counter_uniform(key, i) < p, so each coordinate
// depends only on (key, i).
SpinVector transmit(const SpinVector& x, double p, std::uint64_t key);

// log p(y | x) = eps * y.x - n log(2 cosh eps)
double log_likelihood_y_given_x(const SpinVector& y, const SpinVector& x, double eps);

}  // namespace sentinet
