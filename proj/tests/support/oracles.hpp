#pragma once

// Test-only reference computations. Each one walks all states by plain
// index order and evaluates every term from scratch, in long double, so it
// shares no code path with the library's Gray-code, histogram or closed-form
// routines.

#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "sentinet/graph.hpp"

namespace oracle {

using Edges = std::vector<std::pair<std::size_t, std::size_t>>;

inline Edges edges_of(const sentinet::Network& g) { return Edges(g.edges().begin(), g.edges().end()); }

inline int spin(std::uint64_t bits, std::size_t i) { return ((bits >> i) & 1U) ? 1 : -1; }

inline long pair_sum(std::uint64_t bits, const Edges& edges) {
  long s = 0;
  for (const auto& [i, j] : edges) s += spin(bits, i) * spin(bits, j);
  return s;
}

inline long magnetization(std::uint64_t bits, std::size_t n) {
  long s = 0;
  for (std::size_t i = 0; i < n; ++i) s += spin(bits, i);
  return s;
}

inline long agreement(std::uint64_t a, std::uint64_t b, std::size_t n) {
  long s = 0;
  for (std::size_t i = 0; i < n; ++i) s += spin(a, i) * spin(b, i);
  return s;
}

// log of a sum of exp(terms) with max shift, in long double.
inline long double log_sum(const std::vector<long double>& terms) {
  long double m = -INFINITY;
  for (auto t : terms) m = std::max(m, t);
  long double s = 0;
  for (auto t : terms) s += std::exp(t - m);
  return m + std::log(s);
}

inline double log_Z(std::size_t n, const Edges& edges, double theta, double h) {
  std::vector<long double> terms;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    terms.push_back((long double)theta * pair_sum(b, edges) + (long double)h * magnetization(b, n));
  }
  return static_cast<double>(log_sum(terms));
}

// p(x | t) for every state, by index.
inline std::vector<long double> prior(std::size_t n, const Edges& edges, double theta, double gamma, int t) {
  std::vector<long double> w(std::uint64_t{1} << n);
  long double total = 0;
  for (std::uint64_t b = 0; b < w.size(); ++b) {
    w[b] = std::exp((long double)theta * pair_sum(b, edges) + (long double)gamma * t * magnetization(b, n));
    total += w[b];
  }
  for (auto& v : w) v /= total;
  return w;
}

inline double log_l(std::uint64_t y, std::size_t n, const Edges& edges, double theta, double gamma,
                    double eps) {
  std::vector<long double> plus, minus;
  for (std::uint64_t b = 0; b < (std::uint64_t{1} << n); ++b) {
    const long double base = (long double)theta * pair_sum(b, edges) + (long double)eps * agreement(b, y, n);
    plus.push_back(base + (long double)gamma * magnetization(b, n));
    minus.push_back(base - (long double)gamma * magnetization(b, n));
  }
  return static_cast<double>(log_sum(plus) - log_sum(minus));
}

// Exact symmetric error probability of a decision rule decide(y_bits) -> +-1,
// summing over every (x, y) pair. Feasible for n <= 8.
template <typename Decide>
double exact_error(std::size_t n, const Edges& edges, double theta, double gamma, double pbsc, Decide decide) {
  long double err = 0;
  for (int t : {-1, 1}) {
    const auto px = prior(n, edges, theta, gamma, t);
    for (std::uint64_t y = 0; y < px.size(); ++y) {
      if (decide(y) == t) continue;
      long double py = 0;
      for (std::uint64_t x = 0; x < px.size(); ++x) {
        const long a = agreement(x, y, n);
        const long agree = (static_cast<long>(n) + a) / 2;
        py += px[x] * std::pow((long double)(1 - pbsc), agree) *
              std::pow((long double)pbsc, static_cast<long>(n) - agree);
      }
      err += 0.5L * py;
    }
  }
  return static_cast<double>(err);
}

}  // namespace oracle
