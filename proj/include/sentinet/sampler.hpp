#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sentinet/graph.hpp"
#include "sentinet/ising.hpp"

namespace sentinet {

inline constexpr std::size_t kMaxExactSamplerNodes = 20;
inline constexpr std::size_t kDefaultBurnIn = 100;
inline constexpr std::size_t kDefaultThin = 5;

enum class SamplerMethod { exact, gibbs };

struct SampleBatch {
  int t = 1;
  std::vector<SpinVector> xs;
  SamplerMethod method = SamplerMethod::exact;
  std::uint64_t seed = 0;
  std::size_t burn_in = 0;
  std::size_t thin = 0;
};

// Equiprobable latent bit, a pure function of the seed.
int sample_t(std::uint64_t seed);

// Inverse-CDF sampler over the enumerated distribution p(x | t).
// The cumulative table has 2^n entries indexed by state bits.
class ExactSampler {
 public:
  // Throws SizeGuardError when g.size() > kMaxExactSamplerNodes.
  ExactSampler(const Network& g, const ModelParams& p, int t);

  // State bits for a uniform u in [0, 1).
  std::uint64_t draw_bits(double u) const;
  SpinVector draw(double u) const { return SpinVector::from_bits(n_, draw_bits(u)); }
  double probability(std::uint64_t bits) const;

  std::size_t nodes() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::vector<double> cumulative_;
};

// count i.i.d. draws; draw i uses counter i of the stream keyed by seed.
SampleBatch sample_exact(const Network& g, const ModelParams& p, int t, std::size_t count,
                         std::uint64_t seed);

// Single-site heat-bath chain with systematic sweeps 0..n-1, started from a
// uniformly random state. Records one state every `thin` sweeps after
// `burn_in` sweeps. Throws DomainError for thin == 0.
SampleBatch sample_gibbs(const Network& g, const ModelParams& p, int t, std::size_t count,
                         std::size_t burn_in, std::size_t thin, std::uint64_t seed);

// One Gibbs sweep in place; exposed for the Monte Carlo fallback on large n.
class GibbsChain {
 public:
  GibbsChain(const Network& g, const ModelParams& p, int t, std::uint64_t key);

  void sweep();
  const std::vector<int>& state() const noexcept { return x_; }
  SpinVector spins() const { return SpinVector(x_); }

 private:
  const Network* g_;
  double theta_;
  double field_;
  std::vector<int> x_;
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace sentinet
