#include "sentinet/sampler.hpp"

#include <algorithm>
#include <cmath>

#include "sentinet/error.hpp"
#include "sentinet/logmath.hpp"
#include "sentinet/rng.hpp"

namespace sentinet {

namespace {
constexpr std::uint64_t kLatentStream = 0x1A7E;
constexpr std::uint64_t kExactStream = 0xE8AC7;
constexpr std::uint64_t kGibbsStream = 0x61BB5;
}  // namespace

int sample_t(std::uint64_t seed) {
  return (counter_bits(derive_key(seed, kLatentStream), 0) >> 63) ? 1 : -1;
}

ExactSampler::ExactSampler(const Network& g, const ModelParams& p, int t) : n_(g.size()) {
  require_enumerable(n_, kMaxExactSamplerNodes);
  p.validate();
  checked_latent(t);

  const double h = p.gamma * t;
  std::vector<double> log_w(std::size_t{1} << n_);
  enumerate_states(g, [&](std::uint64_t bits, long es, long mag) {
    log_w[bits] = p.theta * static_cast<double>(es) + h * static_cast<double>(mag);
  });
  const double log_z = log_sum_exp(log_w);
  cumulative_.resize(log_w.size());
  double running = 0.0;
  for (std::size_t i = 0; i < log_w.size(); ++i) {
    running += std::exp(log_w[i] - log_z);
    cumulative_[i] = running;
  }
  for (double& c : cumulative_) c /= running;
  cumulative_.back() = 1.0;
}

std::uint64_t ExactSampler::draw_bits(double u) const {
  const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
  return static_cast<std::uint64_t>(std::min<std::ptrdiff_t>(
      it - cumulative_.begin(), static_cast<std::ptrdiff_t>(cumulative_.size()) - 1));
}

double ExactSampler::probability(std::uint64_t bits) const {
  const double hi = cumulative_.at(bits);
  return bits == 0 ? hi : hi - cumulative_[bits - 1];
}

SampleBatch sample_exact(const Network& g, const ModelParams& p, int t, std::size_t count,
                         std::uint64_t seed) {
  const ExactSampler sampler(g, p, t);
  SampleBatch batch{t, {}, SamplerMethod::exact, seed, 0, 0};
  batch.xs.reserve(count);
  const std::uint64_t key = derive_key(seed, kExactStream);
  for (std::size_t i = 0; i < count; ++i) batch.xs.push_back(sampler.draw(counter_uniform(key, i)));
  return batch;
}

GibbsChain::GibbsChain(const Network& g, const ModelParams& p, int t, std::uint64_t key)
    : g_(&g), theta_(p.theta), field_(p.gamma * checked_latent(t)), x_(g.size()), key_(key) {
  p.validate();
  for (int& v : x_) v = (counter_bits(key_, counter_++) >> 63) ? 1 : -1;
}

void GibbsChain::sweep() {
  for (std::size_t i = 0; i < x_.size(); ++i) {
    long local = 0;
    for (std::size_t j : g_->neighbors(i)) local += x_[j];
    const double f = theta_ * static_cast<double>(local) + field_;
    x_[i] = counter_uniform(key_, counter_++) < logistic(2.0 * f) ? 1 : -1;
  }
}

SampleBatch sample_gibbs(const Network& g, const ModelParams& p, int t, std::size_t count,
                         std::size_t burn_in, std::size_t thin, std::uint64_t seed) {
  if (thin == 0) throw DomainError("thin must be >= 1");
  GibbsChain chain(g, p, t, derive_key(seed, kGibbsStream));
  for (std::size_t s = 0; s < burn_in; ++s) chain.sweep();

  SampleBatch batch{t, {}, SamplerMethod::gibbs, seed, burn_in, thin};
  batch.xs.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t s = 0; s < thin; ++s) chain.sweep();
    batch.xs.push_back(chain.spins());
  }
  return batch;
}

}  // namespace sentinet
