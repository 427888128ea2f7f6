#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "sentinet/graph.hpp"

namespace sentinet {

// Largest network enumerated exhaustively (2^24 states).
inline constexpr std::size_t kMaxEnumerationNodes = 24;

// Model parameters. theta couples neighbours (each edge counted once),
// gamma is the latent field strength, epsilon the channel weight.
struct ModelParams {
  double theta = 0.0;
  double gamma = 0.0;
  double epsilon = 0.0;

  // Throws DomainError unless all three are non-negative, theta and gamma
  // finite. epsilon may be +infinity (noiseless channel).
  void validate() const;
};

// Throws DomainError unless t is -1 or +1.
int checked_latent(int t);

// A vector in {-1,+1}^n.
class SpinVector {
 public:
  SpinVector() = default;
  // Throws DomainError if any entry is not +-1.
  explicit SpinVector(std::vector<int> values);

  static SpinVector all(std::size_t n, int value);
  // Bit k of `bits` set means entry k is +1.
  static SpinVector from_bits(std::size_t n, std::uint64_t bits);
  // Parses "+1,-1,1" (commas or whitespace).
  static SpinVector parse(std::string_view text);

  std::size_t size() const noexcept { return values_.size(); }
  int operator[](std::size_t i) const { return values_[i]; }
  std::span<const int> values() const noexcept { return values_; }
  std::uint64_t to_bits() const;
  long sum() const;
  SpinVector flipped() const;
  std::string to_string() const;

  friend bool operator==(const SpinVector&, const SpinVector&) = default;

 private:
  std::vector<int> values_;
};

long dot(const SpinVector& a, const SpinVector& b);

// Sum over edges of x_i x_j, each edge once.
long edge_sum(const SpinVector& x, const Network& g);

// theta * edge_sum + gamma * t * sum(x). The channel term is not included.
double energy(const SpinVector& x, int t, const Network& g, const ModelParams& p);

// Visits all 2^n states in Gray-code order starting from all -1, calling
// fn(bits, edge_sum, magnetization) once per state. Bit k set means x_k = +1.
// The caller enforces any size guard.
template <typename Fn>
void enumerate_states(const Network& g, Fn&& fn) {
  const std::size_t n = g.size();
  std::vector<int> x(n, -1);
  long es = static_cast<long>(g.edge_count());
  long mag = -static_cast<long>(n);
  std::uint64_t bits = 0;
  fn(bits, es, mag);
  const std::uint64_t states = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < states; ++k) {
    const auto v = static_cast<std::size_t>(std::countr_zero(k));
    long local = 0;
    for (std::size_t j : g.neighbors(v)) local += x[j];
    es -= 2L * x[v] * local;
    mag -= 2L * x[v];
    x[v] = -x[v];
    bits ^= std::uint64_t{1} << v;
    fn(bits, es, mag);
  }
}

// Throws SizeGuardError when n exceeds limit.
void require_enumerable(std::size_t n, std::size_t limit = kMaxEnumerationNodes);

// Exact count of configurations per (edge_sum, magnetization) pair,
// built by one Gray-code pass over all 2^n states. Counts are integers, so
// the table does not depend on enumeration order; log Z for any (theta, h)
// is then a short log-sum-exp over occupied bins in a fixed order.
class StateHistogram {
 public:
  // Throws SizeGuardError when g.size() > kMaxEnumerationNodes.
  explicit StateHistogram(const Network& g);

  // log sum_x exp(theta * edge_sum(x) + h * sum(x))
  double log_partition(double theta, double h) const;

  std::size_t nodes() const noexcept { return n_; }
  std::uint64_t count(long edge_sum, long magnetization) const;

 private:
  std::size_t n_;
  long edges_;
  std::vector<std::uint64_t> counts_;  // [(edge_sum + edges) * (n+1) + (M + n)/2]
};

// Bare partition sums; none of them include the channel factor (2 cosh eps)^n.
double log_Z_brute(const Network& g, double theta, double h);
double log_Z_complete(std::size_t n, double theta, double h);
double log_Z_ring(std::size_t n, double theta, double h);
double log_Z_star(std::size_t n, double theta, double h);

// Closed form when g carries a stylized tag, enumeration otherwise.
double log_Z(const Network& g, double theta, double h);
double log_Z_closed(Topology tag, std::size_t n, double theta, double h);

// log p(x | t) under the Ising prior.
double log_conditional_prob(const SpinVector& x, int t, const Network& g, const ModelParams& p);

}  // namespace sentinet
