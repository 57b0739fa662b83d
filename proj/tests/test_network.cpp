/**
 * @file test_network.cpp
 * @brief Planar-network construction, validation, concatenation, weight
 *        matrices, Lindström path-family minors, modulus maps, and the
 *        network realizations of the building blocks.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fgdom/network.hpp"
#include "fgdom/verify.hpp"

using namespace fgdom;

TEST_CASE("identity network: unit horizontal edges give the identity matrix") {
  RatPlanarNetwork net;
  net.order = 3;
  net.transitions = 4;
  for (int l = 0; l < 4; ++l)
    for (int t = 0; t < 3; ++t) net.edges.push_back({l, t, t, RatC{1}});
  validate_network(net);
  CHECK(weight_matrix(net) == Matrix<RatC>::identity(3));
}

TEST_CASE("validation rejects out-of-range layers, tracks, and zero weights") {
  RatPlanarNetwork net;
  net.order = 2;
  net.transitions = 1;
  net.edges.push_back({0, 0, 0, RatC{1}});
  net.edges.push_back({0, 1, 1, RatC{1}});
  validate_network(net);
  SUBCASE("bad layer") {
    net.edges.push_back({3, 0, 0, RatC{1}});
    CHECK_THROWS(validate_network(net));
  }
  SUBCASE("bad track") {
    net.edges.push_back({0, 0, 2, RatC{1}});
    CHECK_THROWS(validate_network(net));
  }
  SUBCASE("zero weight") {
    net.edges.push_back({0, 0, 1, RatC{}});
    CHECK_THROWS(validate_network(net));
  }
}

TEST_CASE("concatenation multiplies weight matrices") {
  std::mt19937_64 rng(31);
  for (int d = 0; d < 20; ++d) {
    const auto a = random_rat_network(3, 2, rng);
    const auto b = random_rat_network(3, 3, rng);
    CHECK(weight_matrix(concat(a, b)) == weight_matrix(a) * weight_matrix(b));
  }
}

TEST_CASE("Lindström: path-family sums equal weight-matrix minors exactly") {
  std::mt19937_64 rng(32);
  std::uniform_int_distribution<int> ord(2, 5), trans(1, 5);
  for (int d = 0; d < 25; ++d) {
    const auto net = random_rat_network(ord(rng), trans(rng), rng);
    const auto W = weight_matrix(net);
    const std::size_t n = static_cast<std::size_t>(net.order);
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 3); ++k)
      for (const auto& I : k_subsets(n, k))
        for (const auto& J : k_subsets(n, k)) CHECK(lindstrom_minor(net, I, J) == minor_of(W, I, J));
  }
}

TEST_CASE("verification suite: network goldens, equivalences, positivity") {
  for (const auto& r : verify_network(/*seed=*/102, /*draws=*/10)) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("block networks match their weight matrices projectively in doubles") {
  ExperimentConfig cfg;
  for (int n = 2; n <= 5; ++n) {
    cfg.n = n;
    auto rng = sample_rng(cfg, 33);
    for (int d = 0; d < 25; ++d) {
      const MonodromyWord w = sample_word(cfg, rng);
      CHECK(projectively_equal(weight_matrix(net_word(w)), monodromy(w), 1e-9));
    }
  }
}

TEST_CASE("modulus map takes entrywise moduli and preserves the graph") {
  ExperimentConfig cfg;
  cfg.n = 3;
  auto rng = sample_rng(cfg, 34);
  const auto net = net_word(sample_word(cfg, rng));
  const auto mod = modulus_map(net);
  REQUIRE(mod.edges.size() == net.edges.size());
  for (std::size_t e = 0; e < net.edges.size(); ++e) {
    CHECK(mod.edges[e].from == net.edges[e].from);
    CHECK(mod.edges[e].to == net.edges[e].to);
    CHECK(mod.edges[e].w == Cplx{std::abs(net.edges[e].w), 0.0});
  }
}

TEST_CASE("single +1 block at n=3 has the expected layered shape") {
  ExperimentConfig cfg;
  cfg.n = 3;
  auto rng = sample_rng(cfg, 35);
  BuildingBlockSpec spec{+1, sample_triangle(cfg, rng), sample_edge(cfg, rng)};
  const auto net = net_TE(spec);
  CHECK(net.order == 3);
  int slanted = 0;
  for (const auto& e : net.edges)
    if (e.from != e.to) ++slanted;
  CHECK(slanted == 3);  // one per F-factor of M(t) = F_2 H_1 F_1 F_2 at n=3
  const auto dot = to_dot(net);
  CHECK(dot.find("digraph") != std::string::npos);
  CHECK(dot.find("v0_0") != std::string::npos);
}

TEST_CASE("total nonnegativity classifier on fixed matrices") {
  Matrix<RatC> tp(2, 2);
  tp(0, 0) = RatC{2};
  tp(0, 1) = RatC{1};
  tp(1, 0) = RatC{1};
  tp(1, 1) = RatC{1};
  CHECK(total_nonnegativity_check(tp) == Positivity::TotallyPositive);
  Matrix<RatC> tn = Matrix<RatC>::identity(2);
  CHECK(total_nonnegativity_check(tn) == Positivity::TotallyNonnegative);
  Matrix<RatC> neither = tp;
  neither(1, 0) = RatC{3};  // negative determinant
  CHECK(total_nonnegativity_check(neither) == Positivity::Neither);
}
