/**
 * @file test_spectral.cpp
 * @brief Eigen-moduli with exact-minor characteristic polynomials, exterior
 *        powers, spectral radii, Collatz–Wielandt bounds, majorization
 *        utilities, and the modulus-network spectral comparison.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fgdom/network.hpp"
#include "fgdom/spectral.hpp"
#include "fgdom/verify.hpp"

using namespace fgdom;

TEST_CASE("exterior power: top power is the determinant, first is the matrix") {
  std::mt19937_64 rng(51);
  for (int d = 0; d < 10; ++d) {
    Matrix<RatC> m(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) m(i, j) = random_ratc(rng);
    CHECK(exterior_power(m, 1) == m);
    const auto top = exterior_power(m, 4);
    REQUIRE(top.rows() == 1);
    CHECK(top(0, 0) == determinant(m));
    // Multiplicativity (Cauchy–Binet): ∧²(AB) = ∧²A · ∧²B.
    Matrix<RatC> b(4, 4);
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = 0; j < 4; ++j) b(i, j) = random_ratc(rng);
    CHECK(exterior_power(m * b, 2) == exterior_power(m, 2) * exterior_power(b, 2));
  }
}

TEST_CASE("eigen_moduli sorts ascending and flags nothing on clean spectra") {
  Matrix<Cplx> m(3, 3);
  m(0, 0) = {0, 2};
  m(1, 1) = 1;
  m(2, 2) = Cplx{1, 0} / Cplx{0, 2};
  const auto em = eigen_moduli(m);
  REQUIRE(em.moduli.size() == 3);
  CHECK(em.moduli[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(em.moduli[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(em.moduli[2] == doctest::Approx(2.0).epsilon(1e-12));
  CHECK_FALSE(em.clustered);
}

TEST_CASE("eigen_moduli rejects singular matrices") {
  Matrix<Cplx> z(2, 2);
  z(0, 0) = 1;
  z(0, 1) = 2;
  z(1, 0) = 2;
  z(1, 1) = 4;
  CHECK_THROWS_AS((void)eigen_moduli(z), std::domain_error);
}

TEST_CASE("length functionals: relations on random spectra") {
  std::mt19937_64 rng(52);
  std::uniform_real_distribution<double> u(-4.0, 4.0);
  for (int d = 0; d < 100; ++d) {
    std::vector<double> logs;
    for (int i = 0; i < 5; ++i) logs.push_back(u(rng));
    std::sort(logs.begin(), logs.end());
    const auto c = centered_logs(logs);
    double sum = 0;
    for (double v : c) sum += v;
    CHECK(std::abs(sum) < 1e-12);
    CHECK(hilbert_length_logs(logs) == doctest::Approx(logs.back() - logs.front()));
    const auto lks = lk_lengths_logs(logs);
    CHECK(lks.front() == doctest::Approx(hilbert_length_logs(logs)));
    // ℓ_k is monotone in the partial sums: each ℓ_k ≥ 0 and ℓ_k ≤ k·ℓ_1.
    for (std::size_t k = 0; k < lks.size(); ++k) {
      CHECK(lks[k] >= -1e-12);
      CHECK(lks[k] <= static_cast<double>(k + 1) * lks.front() + 1e-12);
    }
    const auto gaps = gap_lengths_logs(logs);
    double gsum = 0;
    for (double g : gaps) gsum += g;
    CHECK(gsum == doctest::Approx(hilbert_length_logs(logs)));
  }
}

TEST_CASE("weak majorization: definition on hand values and reflexivity") {
  CHECK(weak_majorization({1.0, 0.0}, {2.0, 0.0}));
  CHECK_FALSE(weak_majorization({3.0, 0.0}, {2.0, 2.0}));
  CHECK(weak_majorization({2.0, 1.0}, {2.0, 1.0}));
  CHECK(weak_majorization({1.0, 1.0}, {2.0, 0.1}));
}

TEST_CASE("verification suite: spectral goldens, Weyl chain, Collatz-Wielandt") {
  for (const auto& r : verify_spectral(/*seed=*/103, /*draws=*/100)) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("spectral radius of a network is bounded by its modulus network") {
  std::mt19937_64 rng(53);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::uniform_int_distribution<int> ord(2, 4), trans(1, 4), coin(0, 1);
  for (int d = 0; d < 200; ++d) {
    PlanarNetwork net;
    net.order = ord(rng);
    net.transitions = trans(rng);
    for (int l = 0; l < net.transitions; ++l) {
      const int kind = coin(rng) ? (coin(rng) ? 1 : 2) : 0;
      for (int t = 0; t < net.order; ++t) net.edges.push_back({l, t, t, {u(rng), u(rng)}});
      if (kind == 1)
        for (int t = 0; t + 1 < net.order; ++t) net.edges.push_back({l, t, t + 1, {u(rng), u(rng)}});
      if (kind == 2)
        for (int t = 0; t + 1 < net.order; ++t) net.edges.push_back({l, t + 1, t, {u(rng), u(rng)}});
    }
    for (auto& e : net.edges)
      if (std::abs(e.w) < 1e-6) e.w = Cplx{1, 0};
    validate_network(net);
    const double s = spectral_radius(weight_matrix(net));
    const double s0 = spectral_radius(weight_matrix(modulus_map(net)));
    CHECK(s <= s0 + 1e-8 * std::max(1.0, s0));
  }
}
