#include "sentinet/graph.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <sstream>

#include "sentinet/error.hpp"

namespace sentinet {

std::string_view to_string(Topology t) {
  switch (t) {
    case Topology::complete: return "complete";
    case Topology::star: return "star";
    case Topology::ring: return "ring";
    case Topology::custom: return "custom";
  }
  return "custom";
}

Topology topology_from_string(std::string_view name) {
  if (name == "complete") return Topology::complete;
  if (name == "star") return Topology::star;
  if (name == "ring" || name == "chain") return Topology::ring;
  if (name == "custom") return Topology::custom;
  throw UsageError("unknown topology '" + std::string(name) + "'");
}

Network::Network(std::size_t n, std::vector<Edge> edges, Topology tag)
    : n_(n), adjacency_(n), tag_(tag) {
  if (n == 0) throw InvalidSizeError("network needs at least one node");
  for (auto& [i, j] : edges) {
    if (i == j) throw DomainError("self-loop at node " + std::to_string(i));
    if (i >= n || j >= n) {
      throw DomainError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                        ") out of range for n=" + std::to_string(n));
    }
    if (i > j) std::swap(i, j);
  }
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  edges_ = std::move(edges);
  for (const auto& [i, j] : edges_) {
    adjacency_[i].push_back(j);
    adjacency_[j].push_back(i);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

std::vector<std::size_t> Network::degrees() const {
  std::vector<std::size_t> d(n_);
  for (std::size_t i = 0; i < n_; ++i) d[i] = adjacency_[i].size();
  return d;
}

bool Network::has_edge(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) return false;
  const auto& nb = adjacency_[i];
  return std::binary_search(nb.begin(), nb.end(), j);
}

Network make_complete(std::size_t n) {
  if (n < 1) throw InvalidSizeError("complete network needs n >= 1");
  std::vector<Edge> edges;
  edges.reserve(n * (n - 1) / 2);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.emplace_back(i, j);
  return Network(n, std::move(edges), Topology::complete);
}

Network make_star(std::size_t n) {
  if (n < 2) throw InvalidSizeError("star network needs n >= 2");
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t k = 1; k < n; ++k) edges.emplace_back(0, k);
  return Network(n, std::move(edges), Topology::star);
}

Network make_ring(std::size_t n) {
  if (n < 3) throw InvalidSizeError("closed chain needs n >= 3");
  std::vector<Edge> edges;
  edges.reserve(n);
  for (std::size_t k = 0; k < n; ++k) edges.emplace_back(k, (k + 1) % n);
  return Network(n, std::move(edges), Topology::ring);
}

Network make_topology(Topology tag, std::size_t n) {
  switch (tag) {
    case Topology::complete: return make_complete(n);
    case Topology::star: return make_star(n);
    case Topology::ring: return make_ring(n);
    case Topology::custom: break;
  }
  throw UsageError("custom topology needs an edge list");
}

namespace {

std::size_t parse_index(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  const auto* first = token.data();
  const auto* last = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

}  // namespace

Network from_edge_list(std::istream& in) {
  std::optional<std::size_t> declared_n;
  std::vector<Edge> edges;
  std::size_t max_index = 0;
  bool any_edge = false;

  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::istringstream line(raw);
    std::vector<std::string> tokens;
    for (std::string tok; line >> tok;) tokens.push_back(tok);
    if (tokens.empty() || tokens.front().front() == '#') continue;

    if (tokens.front() == "n") {
      if (tokens.size() != 2) throw ParseError(line_no, "header must be 'n <count>'");
      if (declared_n) throw ParseError(line_no, "duplicate 'n' header");
      declared_n = parse_index(tokens[1], line_no);
      if (*declared_n == 0) throw ParseError(line_no, "node count must be positive");
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "expected two node indices");
    const std::size_t i = parse_index(tokens[0], line_no);
    const std::size_t j = parse_index(tokens[1], line_no);
    if (i == j) throw ParseError(line_no, "self-loop on node " + std::to_string(i));
    edges.emplace_back(i, j);
    max_index = std::max({max_index, i, j});
    any_edge = true;
  }

  std::size_t n = any_edge ? max_index + 1 : 0;
  if (declared_n) {
    if (any_edge && max_index >= *declared_n) {
      throw ParseError(line_no, "edge index " + std::to_string(max_index) +
                                    " exceeds declared n=" + std::to_string(*declared_n));
    }
    n = *declared_n;
  }
  if (n == 0) throw ParseError(line_no, "edge list is empty and has no 'n' header");
  return Network(n, std::move(edges));
}

Network from_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  return from_edge_list(in);
}

Network load_edge_list(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open edge list '" + path + "'");
  return from_edge_list(in);
}

std::string to_edge_list(const Network& g) {
  std::ostringstream out;
  out << "n " << g.size() << '\n';
  for (const auto& [i, j] : g.edges()) out << i << ' ' << j << '\n';
  return out.str();
}

}  // namespace sentinet
