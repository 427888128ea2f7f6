#include "sentinet/mc.hpp"

#include <bit>
#include <optional>
#include <vector>

#include "sentinet/channel.hpp"
#include "sentinet/error.hpp"
#include "sentinet/parallel.hpp"
#include "sentinet/rng.hpp"
#include "sentinet/sampler.hpp"
#include "sentinet/stats.hpp"

namespace sentinet {

namespace {

constexpr std::uint64_t kBlockSize = 1024;
constexpr std::uint64_t kSentimentStream = 1;
constexpr std::uint64_t kChannelStream = 2;

struct Counts {
  std::uint64_t map_minus = 0;
  std::uint64_t map_plus = 0;
  std::uint64_t majority_minus = 0;
  std::uint64_t majority_plus = 0;
  std::uint64_t map_only = 0;
  std::uint64_t majority_only = 0;

  Counts& operator+=(const Counts& o) {
    map_minus += o.map_minus;
    map_plus += o.map_plus;
    majority_minus += o.majority_minus;
    majority_plus += o.majority_plus;
    map_only += o.map_only;
    majority_only += o.majority_only;
    return *this;
  }
};

// Everything one trial needs, built once per (g, p).
class TrialEngine {
 public:
  TrialEngine(const Network& g, const ModelParams& p, bool need_map, const McOptions& options)
      : g_(g), p_(p), n_(g.size()), pbsc_(pbsc_from_epsilon(p.epsilon)), need_map_(need_map),
        seed_(options.seed), burn_in_(options.gibbs_burn_in) {
    if (n_ > 63) throw SizeGuardError("Monte Carlo supports at most 63 nodes");
    if (n_ <= kMaxExactSamplerNodes) {
      sampler_minus_.emplace(g, p, -1);
      sampler_plus_.emplace(g, p, 1);
    }
    if (need_map) {
      if (n_ <= kLikelihoodTableNodes) {
        table_.emplace(g, p);
      } else if (g.topology() != Topology::star) {
        require_enumerable(n_);
      }
    }
  }

  // Adds the outcome of conditional `t` in trial `trial` to `counts`.
  void run(std::uint64_t trial, int t, Counts& counts) const {
    const std::uint64_t key = derive_key(seed_, trial, t > 0 ? 1 : 0);
    const std::uint64_t x_bits = draw_x(t, derive_key(key, kSentimentStream));

    std::uint64_t y_bits = x_bits;
    const std::uint64_t channel_key = derive_key(key, kChannelStream);
    for (std::size_t i = 0; i < n_; ++i) {
      if (counter_uniform(channel_key, i) < pbsc_) y_bits ^= std::uint64_t{1} << i;
    }

    const long sum_y = 2L * std::popcount(y_bits) - static_cast<long>(n_);
    const bool majority_error = (sum_y >= 0 ? 1 : -1) != t;
    bool map_error = false;
    if (need_map_) {
      const double log_l = table_ ? table_->log_l(y_bits)
                                  : log_likelihood_ratio(SpinVector::from_bits(n_, y_bits), g_, p_);
      map_error = (log_l >= 0.0 ? 1 : -1) != t;
    }

    if (t < 0) {
      counts.map_minus += map_error;
      counts.majority_minus += majority_error;
    } else {
      counts.map_plus += map_error;
      counts.majority_plus += majority_error;
    }
    counts.map_only += map_error && !majority_error;
    counts.majority_only += majority_error && !map_error;
  }

 private:
  static constexpr std::size_t kLikelihoodTableNodes = 12;

  std::uint64_t draw_x(int t, std::uint64_t key) const {
    const auto& sampler = t < 0 ? sampler_minus_ : sampler_plus_;
    if (sampler) return sampler->draw_bits(counter_uniform(key, 0));
    GibbsChain chain(g_, p_, t, key);
    for (std::size_t s = 0; s < burn_in_; ++s) chain.sweep();
    return chain.spins().to_bits();
  }

  const Network& g_;
  ModelParams p_;
  std::size_t n_;
  double pbsc_;
  bool need_map_;
  std::uint64_t seed_;
  std::size_t burn_in_;
  std::optional<ExactSampler> sampler_minus_;
  std::optional<ExactSampler> sampler_plus_;
  std::optional<LikelihoodTable> table_;
};

Counts run_trials(const Network& g, const ModelParams& p, bool need_map, const McOptions& options) {
  if (options.trials == 0) throw DomainError("trials must be >= 1");
  p.validate();
  const TrialEngine engine(g, p, need_map, options);
  const std::uint64_t blocks = (options.trials + kBlockSize - 1) / kBlockSize;
  std::vector<Counts> per_block(blocks);
  parallel_for(blocks, options.threads, [&](std::size_t b) {
    const std::uint64_t begin = b * kBlockSize;
    const std::uint64_t end = std::min(options.trials, begin + kBlockSize);
    Counts& c = per_block[b];
    for (std::uint64_t i = begin; i < end; ++i) {
      engine.run(i, -1, c);
      engine.run(i, 1, c);
    }
  });
  Counts total;
  for (const auto& c : per_block) total += c;
  return total;
}

ErrorEstimate make_estimate(std::uint64_t errors_minus, std::uint64_t errors_plus, DetectorKind kind,
                            const McOptions& options) {
  ErrorEstimate e;
  e.trials = options.trials;
  e.detector = kind;
  e.seed = options.seed;
  e.errors_minus = errors_minus;
  e.errors_plus = errors_plus;
  const auto n = static_cast<double>(options.trials);
  e.p_hat_minus = static_cast<double>(errors_minus) / n;
  e.p_hat_plus = static_cast<double>(errors_plus) / n;
  const std::uint64_t errors = errors_minus + errors_plus;
  e.p_hat = static_cast<double>(errors) / (2.0 * n);
  const Interval ci = clopper_pearson(errors, 2 * options.trials);
  e.ci_low = ci.low;
  e.ci_high = ci.high;
  return e;
}

}  // namespace

ErrorEstimate estimate_pe(const Network& g, const ModelParams& p, DetectorKind detector,
                          const McOptions& options) {
  const bool map = detector == DetectorKind::map;
  const Counts c = run_trials(g, p, map, options);
  return map ? make_estimate(c.map_minus, c.map_plus, detector, options)
             : make_estimate(c.majority_minus, c.majority_plus, detector, options);
}

PairedComparison compare_detectors(const Network& g, const ModelParams& p, const McOptions& options) {
  const Counts c = run_trials(g, p, true, options);
  PairedComparison out;
  out.map = make_estimate(c.map_minus, c.map_plus, DetectorKind::map, options);
  out.majority = make_estimate(c.majority_minus, c.majority_plus, DetectorKind::majority, options);
  out.map_only_errors = c.map_only;
  out.majority_only_errors = c.majority_only;
  out.sign_test_p = sign_test_p_value(c.map_only, c.majority_only);
  return out;
}

}  // namespace sentinet
