#include <doctest.h>

#include <cmath>

#include "sentinet/channel.hpp"
#include "sentinet/error.hpp"
#include "sentinet/rng.hpp"

using namespace sentinet;
using doctest::Approx;

TEST_CASE("epsilon from crossover probability") {
  CHECK(epsilon_from_pbsc(0.5) == 0.0);
  CHECK(epsilon_from_pbsc(0.1) == Approx(1.09861228866810969139).epsilon(1e-14));
  CHECK(std::isinf(epsilon_from_pbsc(0.0)));
  CHECK(pbsc_from_epsilon(kNoiselessEpsilon) == 0.0);
  CHECK_THROWS_AS(epsilon_from_pbsc(0.6), DomainError);
  CHECK_THROWS_AS(epsilon_from_pbsc(-0.1), DomainError);
  CHECK_THROWS_AS(epsilon_from_pbsc(NAN), DomainError);
  CHECK_THROWS_AS(pbsc_from_epsilon(-1.0), DomainError);
  for (int k = 1; k <= 500; ++k) {
    const double p = 0.001 * k;
    CHECK(std::abs(pbsc_from_epsilon(epsilon_from_pbsc(p)) - p) <= 1e-14);
    CHECK(epsilon_from_pbsc(p) >= 0.0);
  }
  CHECK(pbsc_from_epsilon(0.5) == Approx(0.268941421369995120748).epsilon(1e-14));
}

TEST_CASE("transmit") {
  const SpinVector x({1, -1, 1, 1, -1, -1, 1});
  CHECK(transmit(x, 0.0, 42) == x);
  CHECK(transmit(x, 0.3, 42) == transmit(x, 0.3, 42));
  CHECK_THROWS_AS(transmit(x, 0.7, 1), DomainError);

  // Agreement rates over 1e5 single-bit uses.
  for (double p : {0.5, 0.2}) {
    const std::uint64_t trials = 100000;
    std::uint64_t agree = 0;
    const SpinVector one({1});
    for (std::uint64_t i = 0; i < trials; ++i) agree += transmit(one, p, derive_key(9, i))[0] == 1;
    const double rate = static_cast<double>(agree) / trials;
    const double sigma = std::sqrt(p * (1 - p) / trials);
    CHECK(std::abs(rate - (1 - p)) <= 3 * sigma);
  }
}

TEST_CASE("agreement probability matches exp(eps) / (2 cosh eps)") {
  for (double p : {0.1, 0.3, 0.45}) {
    const double eps = epsilon_from_pbsc(p);
    CHECK(std::exp(eps) / (2 * std::cosh(eps)) == Approx(1 - p).epsilon(1e-14));
  }
}

TEST_CASE("channel log-likelihood") {
  const double p = 0.2;
  const double eps = epsilon_from_pbsc(p);
  CHECK(log_likelihood_y_given_x(SpinVector({1}), SpinVector({1}), eps) == Approx(std::log(1 - p)).epsilon(1e-14));
  CHECK(log_likelihood_y_given_x(SpinVector({1, -1}), SpinVector({1, 1}), eps) ==
        Approx(std::log(p * (1 - p))).epsilon(1e-14));
  CHECK(log_likelihood_y_given_x(SpinVector({1, -1, 1}), SpinVector({-1, -1, 1}), 0.0) ==
        Approx(-3 * std::log(2.0)));
  CHECK_THROWS_AS(log_likelihood_y_given_x(SpinVector({1}), SpinVector({1, 1}), eps), DimensionError);

  for (std::size_t n : {1u, 5u, 12u}) {
    const SpinVector x = SpinVector::from_bits(n, 0x5A5 & ((1u << n) - 1));
    long double total = 0;
    for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
      total += std::exp(static_cast<long double>(log_likelihood_y_given_x(SpinVector::from_bits(n, b), x, 0.8)));
    }
    CHECK(std::abs(static_cast<double>(total) - 1.0) <= 1e-12);
  }
}
