#pragma once

#include <cstdint>

namespace sentinet {

// Counter-based generator: SplitMix64 evaluated in counter mode. The i-th
// output of a stream is a pure function of (key, i), so any draw can be
// recomputed without replaying the stream and disjoint keys can be consumed
// from different threads in any order.
//
// Keys are derived by hashing (seed, id...) with the SplitMix64 finalizer.

inline constexpr std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

inline constexpr std::uint64_t derive_key(std::uint64_t seed) { return mix64(seed + kGolden); }

template <typename... Ids>
constexpr std::uint64_t derive_key(std::uint64_t seed, std::uint64_t id, Ids... rest) {
  return derive_key(mix64(derive_key(seed) ^ mix64(id + 0x632BE59BD9B4E019ULL)), rest...);
}

inline constexpr std::uint64_t counter_bits(std::uint64_t key, std::uint64_t counter) {
  return mix64(key + (counter + 1) * kGolden);
}

// Uniform in [0, 1) with 53 random bits.
inline constexpr double counter_uniform(std::uint64_t key, std::uint64_t counter) {
  return static_cast<double>(counter_bits(key, counter) >> 11) * 0x1.0p-53;
}

// Sequential view over one counter-based stream.
class CounterStream {
 public:
  explicit constexpr CounterStream(std::uint64_t key) : key_(key) {}

  std::uint64_t next_bits() { return counter_bits(key_, counter_++); }
  double uniform() { return counter_uniform(key_, counter_++); }
  int spin() { return (next_bits() >> 63) ? 1 : -1; }

  std::uint64_t key() const { return key_; }
  std::uint64_t position() const { return counter_; }

 private:
  std::uint64_t key_;
  std::uint64_t counter_ = 0;
};

}  // namespace sentinet
