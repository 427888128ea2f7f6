#pragma once

#include <cstddef>
#include <cstdint>
#include <utility>

#include "sentinet/detector.hpp"
#include "sentinet/graph.hpp"
#include "sentinet/ising.hpp"

namespace sentinet {

// Monte Carlo error rate of one detector. Every trial index runs both
// conditionals: t = -1 and t = +1, each with its own draw of x and y.
// p_hat is the symmetric error rate over all 2 * trials decisions and the
// interval is the 95% Clopper-Pearson interval on that count.
struct ErrorEstimate {
  double p_hat = 0.0;
  double ci_low = 0.0;
  double ci_high = 1.0;
  std::uint64_t trials = 0;
  DetectorKind detector = DetectorKind::map;
  std::uint64_t seed = 0;

  std::uint64_t errors_minus = 0;  // t = -1 decided as +1
  std::uint64_t errors_plus = 0;   // t = +1 decided as -1
  double p_hat_minus = 0.0;
  double p_hat_plus = 0.0;

  double ci_halfwidth() const { return 0.5 * (ci_high - ci_low); }
};

struct PairedComparison {
  ErrorEstimate map;
  ErrorEstimate majority;
  std::uint64_t map_only_errors = 0;       // MAP wrong, majority right
  std::uint64_t majority_only_errors = 0;  // majority wrong, MAP right
  double sign_test_p = 1.0;                // two-sided exact sign test
};

struct McOptions {
  std::uint64_t trials = 10000;
  std::uint64_t seed = 0;
  unsigned threads = 0;  // 0: all hardware threads
  // Sweeps per trial when n exceeds the exact sampler's limit.
  std::size_t gibbs_burn_in = 100;
};

// Throws DomainError for trials == 0, SizeGuardError when the MAP detector
// cannot be evaluated on g. Counts depend only on (g, p, options.seed).
ErrorEstimate estimate_pe(const Network& g, const ModelParams& p, DetectorKind detector,
                          const McOptions& options);

// Both detectors on identical (x, y) draws.
PairedComparison compare_detectors(const Network& g, const ModelParams& p, const McOptions& options);

}  // namespace sentinet
