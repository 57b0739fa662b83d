/**
 * @file test_factory.cpp
 * @brief Exact identities and golden values for the elementary and composite
 *        matrices S, F_i, H_i, St(k), Step(k), M, T, E and the building
 *        blocks, plus the double-precision monodromy product.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgdom/factory.hpp"
#include "fgdom/verify.hpp"

using namespace fgdom;

TEST_CASE("elementary matrices: inverses and the antidiagonal involution") {
  for (int n = 2; n <= 6; ++n) {
    for (int i = 1; i < n; ++i) {
      CHECK(elem_F<RatC>(n, i) * elem_f<RatC>(n, i) == Matrix<RatC>::identity(n));
      const RatC x{Rat(3, 7), Rat(2, 5)};
      CHECK(elem_H<RatC>(n, i, x) * elem_h<RatC>(n, i, x) == Matrix<RatC>::identity(n));
    }
    const auto S2 = elem_S<RatC>(n) * elem_S<RatC>(n);
    const RatC sign = (n % 2 == 0) ? RatC{-1} : RatC{1};
    CHECK(S2 == sign * Matrix<RatC>::identity(n));
  }
  CHECK_THROWS_AS(elem_F<RatC>(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(elem_H<RatC>(3, 1, RatC{}), std::invalid_argument);
}

TEST_CASE("verification suite: factory identities and n=3 goldens (exact)") {
  for (const auto& r : verify_factory(/*seed=*/101, /*draws=*/20)) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("building blocks are projectively T^{delta} E in double precision") {
  ExperimentConfig cfg;
  for (int n = 2; n <= 5; ++n) {
    cfg.n = n;
    auto rng = sample_rng(cfg, 13);
    for (int d = 0; d < 20; ++d) {
      const auto tri = sample_triangle(cfg, rng);
      const auto edge = sample_edge(cfg, rng);
      const Matrix<Cplx> T = build_T(tri), E = build_E(edge);
      CHECK(projectively_equal(build_block(BuildingBlockSpec{+1, tri, edge}), T * E, 1e-9));
      // T^{-1} via exact elementary inverses: S·Step(n−1)⋯Step(1) ∝ T^{-1}.
      Matrix<Cplx> Tinv = elem_S<Cplx>(n);
      for (int k = n - 1; k >= 1; --k) Tinv = Tinv * build_Step(tri, k);
      CHECK(projectively_equal(build_block(BuildingBlockSpec{-1, tri, edge}), Tinv * E, 1e-9));
    }
  }
}

TEST_CASE("monodromy multiplies blocks right-to-left (block 0 applied first)") {
  ExperimentConfig cfg;
  cfg.n = 3;
  auto rng = sample_rng(cfg, 7);
  const MonodromyWord w = [&] {
    MonodromyWord out;
    for (int b = 0; b < 3; ++b)
      out.blocks.push_back({b % 2 ? -1 : +1, sample_triangle(cfg, rng), sample_edge(cfg, rng)});
    return out;
  }();
  const Matrix<Cplx> expect =
      build_block(w.blocks[2]) * build_block(w.blocks[1]) * build_block(w.blocks[0]);
  CHECK(entrywise_close(monodromy(w), expect, 1e-12));
  const ScaledMatrix scaled = monodromy_scaled(w);
  CHECK(projectively_equal(scaled.matrix, expect, 1e-12));
}

TEST_CASE("all-same-delta words give triangular monodromy over positive coordinates") {
  ExperimentConfig cfg;
  cfg.n = 4;
  auto rng = sample_rng(cfg, 21);
  for (int delta : {+1, -1}) {
    MonodromyWord w;
    for (int b = 0; b < 5; ++b) {
      auto blk = BuildingBlockSpec{delta, sample_triangle(cfg, rng), sample_edge(cfg, rng)};
      w.blocks.push_back(std::move(blk));
    }
    const auto m = monodromy_scaled(bend_word(w)).matrix;
    for (std::size_t i = 0; i < m.rows(); ++i)
      for (std::size_t j = 0; j < m.cols(); ++j)
        if (delta == +1 ? i < j : i > j) CHECK(std::abs(m(i, j)) == 0.0);
  }
}

TEST_CASE("empty words and mismatched block ranks are rejected") {
  CHECK_THROWS_AS(monodromy(MonodromyWord{}), std::invalid_argument);
  ExperimentConfig c3, c4;
  c3.n = 3;
  c4.n = 4;
  auto r3 = sample_rng(c3, 0);
  auto r4 = sample_rng(c4, 0);
  BuildingBlockSpec bad{+1, sample_triangle(c3, r3), sample_edge(c4, r4)};
  CHECK_THROWS_AS(build_block(bad), std::invalid_argument);
}
