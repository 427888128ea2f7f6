#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sentinet {

enum class Topology { complete, star, ring, custom };

std::string_view to_string(Topology t);
// Throws UsageError on an unknown name.
Topology topology_from_string(std::string_view name);

using Edge = std::pair<std::size_t, std::size_t>;

// Undirected simple graph on nodes 0..n-1. Edges are stored once with
// first < second, sorted lexicographically. Immutable after construction.
class Network {
 public:
  // Custom network. Normalizes, deduplicates and validates the edge list.
  // Throws InvalidSizeError for n == 0, DomainError for self-loops or
  // out-of-range indices.
  Network(std::size_t n, std::vector<Edge> edges) : Network(n, std::move(edges), Topology::custom) {}

  std::size_t size() const noexcept { return n_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  Topology topology() const noexcept { return tag_; }

  const std::vector<std::size_t>& neighbors(std::size_t node) const { return adjacency_.at(node); }
  std::size_t degree(std::size_t node) const { return adjacency_.at(node).size(); }
  std::vector<std::size_t> degrees() const;
  bool has_edge(std::size_t i, std::size_t j) const;

  friend bool operator==(const Network& a, const Network& b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

 private:
  friend Network make_complete(std::size_t);
  friend Network make_star(std::size_t);
  friend Network make_ring(std::size_t);

  Network(std::size_t n, std::vector<Edge> edges, Topology tag);

  std::size_t n_;
  std::vector<Edge> edges_;
  std::vector<std::vector<std::size_t>> adjacency_;
  Topology tag_;
};

Network make_complete(std::size_t n);
// Hub is node 0.
Network make_star(std::size_t n);
// Closed chain 0-1-...-(n-1)-0.
Network make_ring(std::size_t n);

// Builds the stylized topology for a tag; custom is rejected.
Network make_topology(Topology tag, std::size_t n);

// Edge-list text: "i j" per line, '#' comment lines, optional "n <count>"
// header. Errors carry the 1-based line number.
Network from_edge_list(std::istream& in);
Network from_edge_list(std::string_view text);
Network load_edge_list(const std::string& path);

// "n <count>" then one "i j" line per edge (i < j, sorted).
std::string to_edge_list(const Network& g);

}  // namespace sentinet
