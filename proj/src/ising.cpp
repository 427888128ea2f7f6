#include "sentinet/ising.hpp"

#include <cmath>
#include <sstream>

#include "sentinet/error.hpp"
#include "sentinet/logmath.hpp"

namespace sentinet {

void ModelParams::validate() const {
  auto check = [](double v, const char* name, bool allow_inf) {
    if (std::isnan(v) || v < 0.0 || (!allow_inf && std::isinf(v))) {
      throw DomainError(std::string(name) + " must be finite and >= 0, got " + std::to_string(v));
    }
  };
  check(theta, "theta", false);
  check(gamma, "gamma", false);
  check(epsilon, "epsilon", true);
}

int checked_latent(int t) {
  if (t != 1 && t != -1) throw DomainError("latent bit must be +1 or -1");
  return t;
}

SpinVector::SpinVector(std::vector<int> values) : values_(std::move(values)) {
  for (int v : values_) {
    if (v != 1 && v != -1) throw DomainError("spin entries must be +1 or -1");
  }
}

SpinVector SpinVector::all(std::size_t n, int value) {
  return SpinVector(std::vector<int>(n, checked_latent(value)));
}

SpinVector SpinVector::from_bits(std::size_t n, std::uint64_t bits) {
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = ((bits >> i) & 1U) ? 1 : -1;
  return SpinVector(std::move(v));
}

SpinVector SpinVector::parse(std::string_view text) {
  std::string cleaned(text);
  for (char& c : cleaned) {
    if (c == ',' || c == ';') c = ' ';
  }
  std::istringstream in(cleaned);
  std::vector<int> v;
  for (std::string tok; in >> tok;) {
    if (tok == "+1" || tok == "1" || tok == "+") {
      v.push_back(1);
    } else if (tok == "-1" || tok == "-") {
      v.push_back(-1);
    } else {
      throw DomainError("spin entry '" + tok + "' is not +1 or -1");
    }
  }
  if (v.empty()) throw DomainError("empty spin vector");
  return SpinVector(std::move(v));
}

std::uint64_t SpinVector::to_bits() const {
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] == 1) bits |= std::uint64_t{1} << i;
  }
  return bits;
}

long SpinVector::sum() const {
  long s = 0;
  for (int v : values_) s += v;
  return s;
}

SpinVector SpinVector::flipped() const {
  SpinVector out = *this;
  for (int& v : out.values_) v = -v;
  return out;
}

std::string SpinVector::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (i) s += ',';
    s += values_[i] > 0 ? "+1" : "-1";
  }
  return s;
}

long dot(const SpinVector& a, const SpinVector& b) {
  if (a.size() != b.size()) {
    throw DimensionError("length mismatch: " + std::to_string(a.size()) + " vs " +
                         std::to_string(b.size()));
  }
  long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

long edge_sum(const SpinVector& x, const Network& g) {
  if (x.size() != g.size()) {
    throw DimensionError("spin vector has " + std::to_string(x.size()) + " entries, network has " +
                         std::to_string(g.size()) + " nodes");
  }
  long s = 0;
  for (const auto& [i, j] : g.edges()) s += x[i] * x[j];
  return s;
}

double energy(const SpinVector& x, int t, const Network& g, const ModelParams& p) {
  checked_latent(t);
  return p.theta * static_cast<double>(edge_sum(x, g)) +
         p.gamma * t * static_cast<double>(x.sum());
}

void require_enumerable(std::size_t n, std::size_t limit) {
  if (n > limit) {
    throw SizeGuardError("exhaustive enumeration limited to n <= " + std::to_string(limit) +
                         ", got n=" + std::to_string(n));
  }
}

StateHistogram::StateHistogram(const Network& g)
    : n_(g.size()), edges_(static_cast<long>(g.edge_count())) {
  require_enumerable(n_);
  counts_.assign(static_cast<std::size_t>(2 * edges_ + 1) * (n_ + 1), 0);
  const long n = static_cast<long>(n_);
  enumerate_states(g, [&](std::uint64_t, long es, long mag) {
    ++counts_[static_cast<std::size_t>(es + edges_) * (n_ + 1) + static_cast<std::size_t>((mag + n) / 2)];
  });
}

std::uint64_t StateHistogram::count(long edge_sum_value, long magnetization) const {
  const long n = static_cast<long>(n_);
  if (edge_sum_value < -edges_ || edge_sum_value > edges_ || magnetization < -n ||
      magnetization > n || (magnetization + n) % 2 != 0) {
    return 0;
  }
  return counts_[static_cast<std::size_t>(edge_sum_value + edges_) * (n_ + 1) +
                 static_cast<std::size_t>((magnetization + n) / 2)];
}

double StateHistogram::log_partition(double theta, double h) const {
  LogSumExp acc;
  const long n = static_cast<long>(n_);
  for (long e = -edges_; e <= edges_; ++e) {
    const std::size_t row = static_cast<std::size_t>(e + edges_) * (n_ + 1);
    for (long k = 0; k <= n; ++k) {
      const std::uint64_t c = counts_[row + static_cast<std::size_t>(k)];
      if (c == 0) continue;
      const long mag = 2 * k - n;
      acc.add(std::log(static_cast<double>(c)) + theta * static_cast<double>(e) +
              h * static_cast<double>(mag));
    }
  }
  return acc.value();
}

double log_Z_brute(const Network& g, double theta, double h) {
  return StateHistogram(g).log_partition(theta, h);
}

double log_Z_complete(std::size_t n, double theta, double h) {
  if (n < 1) throw InvalidSizeError("complete network needs n >= 1");
  // Terms indexed by m = number of -1 spins; S = n - 2m is the magnetization
  // and theta/2 * (S^2 - n) the single-counted edge sum.
  LogSumExp acc;
  double log_binom = 0.0;
  const double nd = static_cast<double>(n);
  for (std::size_t m = 0; m <= n; ++m) {
    if (m > 0) log_binom += std::log((nd - static_cast<double>(m) + 1.0) / static_cast<double>(m));
    const double s = nd - 2.0 * static_cast<double>(m);
    acc.add(log_binom + 0.5 * theta * (s * s - nd) + h * s);
  }
  return acc.value();
}

double log_Z_ring(std::size_t n, double theta, double h) {
  if (n < 3) throw InvalidSizeError("closed chain needs n >= 3");
  // Transfer-matrix eigenvalues exp(theta) * (cosh h +- sqrt(sinh^2 h + exp(-4 theta))),
  // with the larger one written relative to exp(|h|) so cosh never overflows.
  const double a = std::abs(h);
  const double q = std::exp(-2.0 * a);
  const double bracket = (1.0 + q) + std::sqrt((1.0 - q) * (1.0 - q) + 4.0 * std::exp(-4.0 * theta) * q);
  const double log_plus = theta + a - std::log(2.0) + std::log(bracket);
  const double nd = static_cast<double>(n);
  if (theta == 0.0) return nd * log_plus;
  // lambda_+ * lambda_- = det T = 2 sinh(2 theta)
  const double log_det = 2.0 * theta + std::log(-std::expm1(-4.0 * theta));
  const double log_minus = log_det - log_plus;
  return nd * log_plus + std::log1p(std::exp(nd * (log_minus - log_plus)));
}

double log_Z_star(std::size_t n, double theta, double h) {
  if (n < 2) throw InvalidSizeError("star network needs n >= 2");
  // Condition on the hub spin; the leaves are then independent.
  const double leaves = static_cast<double>(n - 1);
  return log_add_exp(h + leaves * log_two_cosh(theta + h), -h + leaves * log_two_cosh(theta - h));
}

double log_Z_closed(Topology tag, std::size_t n, double theta, double h) {
  switch (tag) {
    case Topology::complete: return log_Z_complete(n, theta, h);
    case Topology::star: return log_Z_star(n, theta, h);
    case Topology::ring: return log_Z_ring(n, theta, h);
    case Topology::custom: break;
  }
  throw UsageError("no closed-form partition function for a custom network");
}

double log_Z(const Network& g, double theta, double h) {
  if (g.topology() != Topology::custom) return log_Z_closed(g.topology(), g.size(), theta, h);
  return log_Z_brute(g, theta, h);
}

double log_conditional_prob(const SpinVector& x, int t, const Network& g, const ModelParams& p) {
  const double e = energy(x, t, g, p);
  return e - log_Z(g, p.theta, p.gamma * t);
}

}  // namespace sentinet
