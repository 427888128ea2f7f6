#include <doctest.h>

#include <cmath>
#include <random>

#include "sentinet/bounds.hpp"
#include "sentinet/channel.hpp"
#include "sentinet/detector.hpp"
#include "sentinet/error.hpp"
#include "support/oracles.hpp"

using namespace sentinet;
using doctest::Approx;

namespace {

// Frozen from 30-digit evaluations (mpmath).
constexpr double kBetaHalf = 0.28310958475848640648675265755;        // b = gamma = eps = 0.5
constexpr double kLogASingle = 0.949588936207199607217806715538;     // n = 1, b = gamma = eps = 0.5
constexpr double kExactPeSingle = 0.393223866482963705074849467172;  // n = 1, gamma = eps = 0.5
constexpr double kAlphaIidHalf = 0.0233385986750414557502794045693;  // gamma = eps = 0.5

}  // namespace

TEST_CASE("beta of b") {
  CHECK(beta_of_b(0.0, 0.7, 0.4) == 0.7);
  CHECK(beta_of_b(50.0, 0.7, 0.4) == Approx(0.3).epsilon(1e-12));
  CHECK(beta_of_b(-50.0, 0.7, 0.4) == Approx(1.1).epsilon(1e-12));
  CHECK(beta_of_b(0.5, 0.5, 0.5) == Approx(kBetaHalf).epsilon(1e-14));
}

TEST_CASE("objective A") {
  const auto z4 = PartitionFunction::closed_form(Topology::ring, 4);
  CHECK(log_objective_A(0.0, z4, 0.8, 0.3, 0.0) == Approx(log_Z_ring(4, 0.8, -0.3)).epsilon(1e-14));

  const auto zc = PartitionFunction::closed_form(Topology::complete, 6);
  for (double b : {-1.0, 0.2, 0.9}) {
    const double beta = beta_of_b(b, 0.4, 0.7);
    const double factored = 6 * (0.5 * std::log((std::cosh(2 * b) + std::cosh(1.4)) / 2) + std::log(2 * std::cosh(beta)));
    CHECK(log_objective_A(b, zc, 0.0, 0.4, 0.7) == Approx(factored).epsilon(1e-13));
  }
  const auto z1 = PartitionFunction::closed_form(Topology::complete, 1);
  CHECK(log_objective_A(0.5, z1, 2.0, 0.5, 0.5) == Approx(kLogASingle).epsilon(1e-13));
}

TEST_CASE("product of cosh identity") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> unif(-3.0, 3.0);
  for (int i = 0; i < 2000; ++i) {
    const std::size_t n = 1 + rng() % 16;
    const SpinVector x = SpinVector::from_bits(n, rng());
    const double b = unif(rng);
    const double eps = std::abs(unif(rng));
    const double lhs = log_product_cosh(b, eps, x);
    const double rhs = log_product_cosh_factored(b, eps, x);
    // relative error of the products themselves
    CHECK(std::abs(std::expm1(lhs - rhs)) <= 1e-10);
  }
}

TEST_CASE("uninformative channel gives a bound of exactly one") {
  for (Topology tag : {Topology::complete, Topology::star, Topology::ring}) {
    const auto z = PartitionFunction::closed_form(tag, 7);
    const BoundResult r = pe_upper_bound(z, 0.6, 0.4, 0.0);
    CHECK(r.log_pe_ub == 0.0);
    CHECK(r.b_star == 0.0);
    CHECK(r.beta_star == 0.4);
    CHECK(r.evaluations > 321);
  }
}

TEST_CASE("single node bound dominates the exact error") {
  const auto z = PartitionFunction::closed_form(Topology::complete, 1);
  const BoundResult r = pe_upper_bound(z, 1.7, 0.5, 0.5);
  CHECK(std::exp(r.log_pe_ub) >= kExactPeSingle);
  CHECK(r.beta_star == Approx(beta_of_b(r.b_star, 0.5, 0.5)));
  // cosh(gamma - eps) / (2 cosh gamma cosh eps) from the oracle
  const double exact = oracle::exact_error(1, {}, 0.0, 0.5, pbsc_from_epsilon(0.5),
                                           [](std::uint64_t y) { return y ? 1 : -1; });
  CHECK(exact == Approx(kExactPeSingle).epsilon(1e-12));
}

TEST_CASE("bound dominates the exact MAP error on small networks") {
  for (std::size_t n : {3u, 5u, 7u}) {
    for (Topology tag : {Topology::complete, Topology::star, Topology::ring}) {
      const Network g = make_topology(tag, n);
      const auto edges = oracle::edges_of(g);
      for (double theta : {0.0, 0.5, 1.0}) {
        for (double gamma : {0.25, 1.0}) {
          for (double pbsc : {0.1, 0.3}) {
            const ModelParams p{theta, gamma, epsilon_from_pbsc(pbsc)};
            const LikelihoodTable table(g, p);
            const double exact = oracle::exact_error(n, edges, theta, gamma, pbsc, [&](std::uint64_t y) {
              return table.log_l(y) >= 0.0 ? 1 : -1;
            });
            const BoundResult r = pe_upper_bound(g, p);
            CHECK(exact <= std::exp(r.log_pe_ub) * (1 + 1e-12));
          }
        }
      }
    }
  }
}

TEST_CASE("probe dominance") {
  for (Topology tag : {Topology::complete, Topology::star, Topology::ring}) {
    const auto z = PartitionFunction::closed_form(tag, 10);
    for (double theta : {0.0, 0.3, 1.5}) {
      const BoundResult r = pe_upper_bound(z, theta, 0.6, 0.8);
      const double at_zero = log_objective_A(0.0, z, theta, 0.6, 0.8) - z(theta, -0.6) - 10 * std::log(std::cosh(0.8));
      CHECK(r.log_pe_ub <= at_zero);
      CHECK(at_zero == Approx(0.0).epsilon(1e-12));
      CHECK(log_objective_A(r.b_star, z, theta, 0.6, 0.8) <= log_objective_A(r.b_star + 1e-3, z, theta, 0.6, 0.8));
      CHECK(log_objective_A(r.b_star, z, theta, 0.6, 0.8) <= log_objective_A(r.b_star - 1e-3, z, theta, 0.6, 0.8));
    }
  }
}

TEST_CASE("custom networks use enumeration and honor the field sign") {
  const Network ring_as_custom = from_edge_list(to_edge_list(make_ring(6)));
  const ModelParams p{0.7, 0.4, 0.5};
  const BoundResult closed = pe_upper_bound(make_ring(6), p);
  const BoundResult enumerated = pe_upper_bound(ring_as_custom, p);
  CHECK(enumerated.log_pe_ub == Approx(closed.log_pe_ub).epsilon(1e-10));
  CHECK(PartitionFunction::for_network(ring_as_custom).topology() == Topology::custom);
  CHECK_THROWS_AS(PartitionFunction::for_network(from_edge_list("n 30\n0 1")), SizeGuardError);
  CHECK_THROWS_AS(PartitionFunction::closed_form(Topology::custom, 5), UsageError);
  CHECK_THROWS_AS(PartitionFunction::closed_form(Topology::ring, 2), InvalidSizeError);
}

TEST_CASE("no-network exponent and its Chernoff oracle") {
  CHECK(exponent_iid(0.5, 0.5).alpha == Approx(kAlphaIidHalf).epsilon(1e-12));
  CHECK(chernoff_iid_oracle(0.5, 0.5) == Approx(kAlphaIidHalf).epsilon(1e-12));
  CHECK(exponent_iid(0.8, 0.0).alpha == Approx(0.0).epsilon(1e-15));
  CHECK(exponent_iid(0.0, 0.8).alpha == Approx(0.0).epsilon(1e-15));
  CHECK(chernoff_iid_oracle(0.7, 0.0) == Approx(0.0).epsilon(1e-15));
  for (int i = 1; i <= 12; ++i) {
    for (int j = 1; j <= 12; ++j) {
      const double g = 0.2 * i, e = 0.2 * j;
      const ExponentPoint iid = exponent_iid(g, e);
      CHECK(iid.alpha_raw >= 0.0);
      CHECK(std::abs(iid.alpha - chernoff_iid_oracle(g, e)) <= 1e-9);
      CHECK_FALSE(iid.topology.has_value());
    }
  }
}

TEST_CASE("network exponent at theta = 0 is the Chernoff exponent") {
  for (Topology tag : {Topology::complete, Topology::star, Topology::ring}) {
    const ExponentPoint a = exponent_lower_bound(tag, 100, 0.0, 0.5, 0.5);
    CHECK(std::abs(a.alpha - kAlphaIidHalf) <= 1e-4);
    CHECK(a.b_star == Approx(0.21).epsilon(0.05));
    CHECK(a.topology == tag);
    CHECK(a.n_eval == 100);
  }
}

TEST_CASE("exponent edge cases") {
  for (Topology tag : {Topology::complete, Topology::star, Topology::ring}) {
    CHECK(exponent_lower_bound(tag, 50, 0.7, 0.5, 0.0).alpha == 0.0);
    const ExponentPoint g0 = exponent_lower_bound(tag, 50, 0.7, 0.0, 0.5);
    CHECK(g0.alpha <= 1e-14);
    CHECK(g0.alpha_raw <= 1e-15);
    CHECK(g0.alpha_raw >= -1e-12);
  }
  const auto z = PartitionFunction::closed_form(Topology::star, 12);
  const ExponentPoint a = exponent_lower_bound(z, 0.4, 0.3, 0.9);
  CHECK(a.alpha_raw == Approx(-pe_upper_bound(z, 0.4, 0.3, 0.9).log_pe_ub / 12).epsilon(1e-14));
  CHECK_THROWS_AS(exponent_lower_bound(Topology::ring, 10, -0.1, 0.3, 0.3), DomainError);
  CHECK_THROWS_AS(exponent_lower_bound(Topology::ring, 10, 0.1, 0.3, INFINITY), DomainError);
}

TEST_CASE("exponent is nondecreasing in epsilon and gamma") {
  for (SweepVariable var : {SweepVariable::epsilon, SweepVariable::gamma}) {
    SweepSpec spec;
    spec.variable = var;
    spec.from = 0.1;
    spec.to = 2.0;
    spec.steps = 20;
    spec.fixed = {0.5, 0.5, 0.5};
    const auto rows = exponent_sweep(spec);
    for (std::size_t i = 1; i < rows.size(); ++i) {
      CHECK(rows[i].complete.alpha >= rows[i - 1].complete.alpha - 1e-12);
      CHECK(rows[i].star.alpha >= rows[i - 1].star.alpha - 1e-12);
      CHECK(rows[i].chain.alpha >= rows[i - 1].chain.alpha - 1e-12);
      CHECK(rows[i].iid.alpha >= rows[i - 1].iid.alpha - 1e-12);
    }
  }
}

TEST_CASE("sweep spec") {
  SweepSpec spec;
  spec.from = 0.0;
  spec.to = 3.0;
  spec.steps = 7;
  spec.fixed = {0.0, 0.5, 0.5};
  CHECK(spec.value(0) == 0.0);
  CHECK(spec.value(6) == 3.0);
  CHECK(spec.value(2) == Approx(1.0));
  const auto rows = exponent_sweep(spec, 2);
  REQUIRE(rows.size() == 7);
  for (const auto& row : rows) CHECK(row.iid.alpha == Approx(kAlphaIidHalf).epsilon(1e-12));
  CHECK(rows[3].complete.params.theta == Approx(1.5));

  SweepSpec bad = spec;
  bad.steps = 1;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  bad = spec;
  bad.to = bad.from;
  CHECK_THROWS_AS(bad.validate(), UsageError);
  CHECK_THROWS_AS(sweep_variable_from_string("delta"), UsageError);
}
