#include <doctest.h>

#include <random>
#include <set>

#include "sentinet/error.hpp"
#include "sentinet/graph.hpp"

using namespace sentinet;

namespace {

void check_symmetric_irreflexive(const Network& g) {
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK_FALSE(g.has_edge(i, i));
    for (std::size_t j = 0; j < g.size(); ++j) CHECK(g.has_edge(i, j) == g.has_edge(j, i));
  }
  for (const auto& [i, j] : g.edges()) {
    CHECK(i < j);
    CHECK(j < g.size());
  }
}

}  // namespace

TEST_CASE("complete network") {
  CHECK(make_complete(4).edge_count() == 6);
  CHECK(make_complete(1).edge_count() == 0);
  CHECK(make_complete(3).edges() == make_ring(3).edges());
  CHECK(make_complete(7).topology() == Topology::complete);
  CHECK_THROWS_AS(make_complete(0), InvalidSizeError);
  for (std::size_t n = 1; n <= 9; ++n) {
    CHECK(make_complete(n).edge_count() == n * (n - 1) / 2);
    check_symmetric_irreflexive(make_complete(n));
  }
}

TEST_CASE("star network") {
  const Network s = make_star(5);
  CHECK(s.edge_count() == 4);
  for (const auto& [i, j] : s.edges()) CHECK(i == 0);
  CHECK(make_star(2).edges() == make_complete(2).edges());
  CHECK(make_star(4).degrees() == std::vector<std::size_t>{3, 1, 1, 1});
  CHECK_THROWS_AS(make_star(1), InvalidSizeError);
  CHECK_THROWS_AS(make_star(0), InvalidSizeError);
  for (std::size_t n = 2; n <= 9; ++n) {
    CHECK(make_star(n).edge_count() == n - 1);
    check_symmetric_irreflexive(make_star(n));
  }
}

TEST_CASE("ring network") {
  const std::vector<Edge> triangle{{0, 1}, {0, 2}, {1, 2}};
  CHECK(make_ring(3).edges() == triangle);
  for (std::size_t d : make_ring(4).degrees()) CHECK(d == 2);
  CHECK(make_ring(6).edge_count() == 6);
  CHECK_THROWS_AS(make_ring(2), InvalidSizeError);
  for (std::size_t n = 3; n <= 9; ++n) {
    CHECK(make_ring(n).edge_count() == n);
    check_symmetric_irreflexive(make_ring(n));
  }
}

TEST_CASE("make_topology rejects custom") {
  CHECK_THROWS_AS(make_topology(Topology::custom, 4), UsageError);
  CHECK(make_topology(Topology::star, 4) == make_star(4));
  CHECK(topology_from_string("chain") == Topology::ring);
  CHECK_THROWS_AS(topology_from_string("lattice"), UsageError);
}

TEST_CASE("edge list parsing") {
  const Network a = from_edge_list("0 1\n1 2");
  CHECK(a.size() == 3);
  CHECK(a.edge_count() == 2);
  CHECK(a.topology() == Topology::custom);

  const Network b = from_edge_list("n 5\n0 1");
  CHECK(b.size() == 5);
  CHECK(b.edge_count() == 1);

  const Network c = from_edge_list("# comment\n\n1 0\n0 1\n  2   1 \n");
  CHECK(c.edge_count() == 2);

  try {
    from_edge_list("0 0");
    FAIL("self-loop accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 1);
  }
  try {
    from_edge_list("0 1\n1 x\n");
    FAIL("bad token accepted");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  CHECK_THROWS_AS(from_edge_list("0 1 2"), ParseError);
  CHECK_THROWS_AS(from_edge_list("n 2\n0 3"), ParseError);
  CHECK_THROWS_AS(from_edge_list("# nothing"), ParseError);
  CHECK_THROWS_AS(from_edge_list("0 -1"), ParseError);
}

TEST_CASE("isolated nodes and disconnected graphs are accepted") {
  const Network g = from_edge_list("n 6\n0 1\n3 4\n");
  CHECK(g.size() == 6);
  CHECK(g.degree(2) == 0);
  CHECK(g.degree(5) == 0);
}

TEST_CASE("direct construction validates") {
  CHECK_THROWS_AS(Network(3, {{1, 1}}), DomainError);
  CHECK_THROWS_AS(Network(3, {{0, 3}}), DomainError);
  CHECK_THROWS_AS(Network(0, {}), InvalidSizeError);
  const Network g(4, {{2, 1}, {1, 2}, {3, 0}});
  CHECK(g.edges() == std::vector<Edge>{{0, 3}, {1, 2}});
}

TEST_CASE("serialization round-trips random graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 15;
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (rng() % 3 == 0) {
          if (rng() % 2) edges.emplace_back(i, j);
          else edges.emplace_back(j, i);
        }
    const Network g(n, edges);
    const Network back = from_edge_list(to_edge_list(g));
    CHECK(back == g);
    CHECK(to_edge_list(back) == to_edge_list(g));
  }
  CHECK(to_edge_list(make_star(3)) == "n 3\n0 1\n0 2\n");
}
