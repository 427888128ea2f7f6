#pragma once

#include <cstdint>

namespace sentinet {

struct Interval {
  double low = 0.0;
  double high = 1.0;
};

// Exact (Clopper-Pearson) two-sided interval for a binomial proportion.
Interval clopper_pearson(std::uint64_t successes, std::uint64_t trials, double confidence = 0.95);

// Two-sided exact sign test on paired discordant outcomes: probability under
// Binomial(a + b, 1/2) of a split at least as unbalanced as (a, b).
double sign_test_p_value(std::uint64_t a, std::uint64_t b);

}  // namespace sentinet
