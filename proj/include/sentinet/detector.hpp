#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "sentinet/graph.hpp"
#include "sentinet/ising.hpp"

namespace sentinet {

enum class DetectorKind { map, majority };

struct DetectionResult {
  int t_hat = 1;
  double log_l = 0.0;
  DetectorKind method = DetectorKind::map;
};

// log l(y) = log sum_x exp(theta es + eps y.x + gamma e.x)
//          - log sum_x exp(theta es + eps y.x - gamma e.x).
// The prior normalizers Z(+1) and Z(-1) are equal by global spin flip and
// are left out. Star networks use the hub-conditioned O(n) path; any other
// network is enumerated (n <= kMaxEnumerationNodes).
double log_likelihood_ratio(const SpinVector& y, const Network& g, const ModelParams& p);

// Always enumerates, whatever the topology.
double log_likelihood_ratio_enumerated(const SpinVector& y, const Network& g, const ModelParams& p);

// Star only: conditions on the hub spin so the leaves factorize.
double log_likelihood_ratio_star(const SpinVector& y, const Network& g, const ModelParams& p);

// t_hat = +1 iff log l(y) >= 0.
DetectionResult map_detect(const SpinVector& y, const Network& g, const ModelParams& p);

// Sign of sum(y), ties to +1. log_l carries the theta = 0 likelihood ratio
// sum(y) * log(cosh(eps + gamma) / cosh(eps - gamma)).
DetectionResult majority_detect(const SpinVector& y, const ModelParams& p = {});

// log l(y) for every y in {-1,+1}^n, indexed by the bits of y. Lets Monte
// Carlo replace per-trial enumeration with a lookup on small networks.
class LikelihoodTable {
 public:
  static constexpr std::size_t kMaxNodes = 14;

  // Throws SizeGuardError when g.size() > kMaxNodes.
  LikelihoodTable(const Network& g, const ModelParams& p);

  double log_l(std::uint64_t y_bits) const { return values_.at(y_bits); }
  std::size_t nodes() const noexcept { return n_; }

 private:
  std::size_t n_;
  std::vector<double> values_;
};

}  // namespace sentinet
