/**
 * @file test_flags.cpp
 * @brief Complete flags, projective invariance of the triple and double
 *        ratios, the n=2 cross-ratio reduction, and degeneracy detection.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fgdom/flags.hpp"
#include "fgdom/verify.hpp"

using namespace fgdom;

namespace {

std::vector<Cplx> random_vec(int n, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<Cplx> v(static_cast<std::size_t>(n));
  for (auto& c : v) c = {u(rng), u(rng)};
  return v;
}

Flag random_flag(int n, std::mt19937_64& rng) {
  for (;;) {
    std::vector<std::vector<Cplx>> basis;
    for (int i = 0; i < n; ++i) basis.push_back(random_vec(n, rng));
    try {
      return Flag::from_basis(std::move(basis));
    } catch (const std::exception&) {
      // retry on a degenerate draw
    }
  }
}

Flag transform(const Matrix<Cplx>& g, const Flag& f) {
  std::vector<std::vector<Cplx>> basis;
  for (const auto& v : f.basis) {
    std::vector<Cplx> gv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i)
      for (std::size_t j = 0; j < v.size(); ++j) gv[i] += g(i, j) * v[j];
    basis.push_back(std::move(gv));
  }
  return Flag::from_basis(std::move(basis));
}

}  // namespace

TEST_CASE("from_basis rejects wrong dimensions and dependent vectors") {
  CHECK_THROWS(Flag::from_basis({{1, 0}, {0, 1}, {1, 1}}));          // 2-vectors, n=3
  CHECK_THROWS(Flag::from_basis({{1, 0, 0}, {2, 0, 0}, {0, 1, 0}}));  // dependent
}

TEST_CASE("verification suite: ratio goldens and degeneracy detection") {
  for (const auto& r : verify_flags(/*seed=*/104, /*draws=*/100)) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.passed);
  }
}

TEST_CASE("triple and double ratios are PGL-invariant") {
  std::mt19937_64 rng(61);
  for (int d = 0; d < 20; ++d) {
    const int n = 3;
    const Flag A = random_flag(n, rng), B = random_flag(n, rng), C = random_flag(n, rng),
               Cp = random_flag(n, rng);
    Matrix<Cplx> g(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) = random_vec(1, rng)[0];
    if (std::abs(determinant(g)) < 1e-3) continue;
    Cplx t0, t1, r0, r1;
    try {
      t0 = triple_ratio(A, B, C, 1, 1, 1);
      t1 = triple_ratio(transform(g, A), transform(g, B), transform(g, C), 1, 1, 1);
      r0 = double_ratio(A, B, C, Cp, 1);
      r1 = double_ratio(transform(g, A), transform(g, B), transform(g, C), transform(g, Cp), 1);
    } catch (const DegenerateConfiguration&) {
      continue;
    }
    CHECK(std::abs(t0 - t1) < 1e-7 * std::max(1.0, std::abs(t0)));
    CHECK(std::abs(r0 - r1) < 1e-7 * std::max(1.0, std::abs(r0)));
  }
}

TEST_CASE("triple ratio is invariant under cyclic rotation of its arguments") {
  std::mt19937_64 rng(62);
  for (int d = 0; d < 20; ++d) {
    const Flag A = random_flag(3, rng), B = random_flag(3, rng), C = random_flag(3, rng);
    Cplx abc, bca;
    try {
      abc = triple_ratio(A, B, C, 1, 1, 1);
      bca = triple_ratio(B, C, A, 1, 1, 1);
    } catch (const DegenerateConfiguration&) {
      continue;
    }
    CHECK(std::abs(abc - bca) < 1e-8 * std::max(1.0, std::abs(abc)));
  }
}

TEST_CASE("general position witness names the violating wedge") {
  const Flag A = Flag::from_basis({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
  const Flag B = Flag::from_basis({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});
  const Flag C = Flag::from_basis({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
  const auto res = general_position_check(A, B, C);
  REQUIRE_FALSE(res.ok);
  CHECK_FALSE(res.witness.empty());
}
