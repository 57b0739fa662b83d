/**
 * @file test_core.cpp
 * @brief Unit tests for the scalar field, dense matrices, the coordinate
 *        containers, and JSON round trips.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "fgdom/coords.hpp"
#include "fgdom/io.hpp"
#include "fgdom/matrix.hpp"
#include "fgdom/scalars.hpp"
#include "fgdom/verify.hpp"

using namespace fgdom;

TEST_CASE("RatC is a field: exact inverse and distributivity on random draws") {
  std::mt19937_64 rng(41);
  for (int i = 0; i < 200; ++i) {
    const RatC a = random_ratc(rng), b = random_ratc(rng), c = random_ratc(rng);
    CHECK(a * (RatC{1} / a) == RatC{1});
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == RatC{});
  }
}

TEST_CASE("determinant is multiplicative and matches cofactor values exactly") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 25; ++i) {
    const std::size_t n = 2 + static_cast<std::size_t>(i % 3);
    Matrix<RatC> a(n, n), b(n, n);
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        a(r, c) = random_ratc(rng);
        b(r, c) = random_ratc(rng);
      }
    CHECK(determinant(a * b) == determinant(a) * determinant(b));
  }
  Matrix<RatC> m(2, 2);
  m(0, 0) = RatC{Rat(1, 2)};
  m(0, 1) = RatC{Rat(1, 3)};
  m(1, 0) = RatC{Rat(1, 5)};
  m(1, 1) = RatC{Rat(1, 7)};
  CHECK(determinant(m) == RatC{Rat(1, 14) - Rat(1, 15)});
}

TEST_CASE("minor_of equals determinant of the extracted submatrix") {
  std::mt19937_64 rng(43);
  Matrix<RatC> m(4, 4);
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) m(r, c) = random_ratc(rng);
  for (const auto& I : k_subsets(4, 2))
    for (const auto& J : k_subsets(4, 2)) CHECK(minor_of(m, I, J) == determinant(m.submatrix(I, J)));
}

TEST_CASE("k_subsets enumerates C(n,k) sorted subsets") {
  CHECK(k_subsets(5, 2).size() == 10);
  CHECK(k_subsets(6, 3).size() == 20);
  const auto s = k_subsets(4, 4);
  REQUIRE(s.size() == 1);
  CHECK(s[0] == std::vector<std::size_t>{0, 1, 2, 3});
}

TEST_CASE("projectively_equal ignores a global nonzero complex scale") {
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> u(-2, 2);
  Matrix<Cplx> m(3, 3);
  for (std::size_t r = 0; r < 3; ++r)
    for (std::size_t c = 0; c < 3; ++c) m(r, c) = {u(rng), u(rng)};
  const Matrix<Cplx> scaled = Cplx{-1.75, 0.31} * m;
  CHECK(projectively_equal(m, scaled, 1e-12));
  Matrix<Cplx> other = m;
  other(1, 2) += Cplx{0.1, 0};
  CHECK_FALSE(projectively_equal(m, other, 1e-9));
}

TEST_CASE("coordinate validation counts the (2g+k-2)(n-1)(n+1) parameters") {
  const auto tri = builtin_triangulation("once-punctured-torus");
  ExperimentConfig cfg;
  cfg.n = 4;
  auto rng = sample_rng(cfg, 0);
  FGCoordinates coords;
  coords.n = 4;
  coords.genus = tri.genus;
  coords.punctures = tri.punctures;
  coords.triangulation_ref = tri.name;
  for (int t = 0; t < tri.num_triangles; ++t) coords.triangle_data[t] = sample_triangle(cfg, rng);
  for (int e = 0; e < tri.num_edges(); ++e)
    coords.edge_data[oriented_edge_id(e, true)] = sample_edge(cfg, rng);
  coords = complete_orientations(coords, EdgeReversal::ZrToZnr);
  CHECK(validate(coords).ok());
  SUBCASE("a zero invariant is reported with its address") {
    coords.triangle_data[0].values[{0, 1, 0}] = Cplx{};
    const auto res = validate(coords);
    REQUIRE_FALSE(res.ok());
    CHECK(res.issues.front().code == "ZeroCoordinate");
  }
  SUBCASE("a missing edge orientation is reported") {
    coords.edge_data.erase(oriented_edge_id(1, true));
    CHECK_FALSE(validate(coords).ok());
  }
}

TEST_CASE("JSON round trips preserve coordinates, walks, words, and configs") {
  const auto tri = builtin_triangulation("thrice-punctured-sphere");
  ExperimentConfig cfg;
  cfg.n = 3;
  auto rng = sample_rng(cfg, 5);
  FGCoordinates coords;
  coords.n = 3;
  coords.genus = tri.genus;
  coords.punctures = tri.punctures;
  coords.triangulation_ref = tri.name;
  for (int t = 0; t < tri.num_triangles; ++t) coords.triangle_data[t] = sample_triangle(cfg, rng);
  for (int e = 0; e < tri.num_edges(); ++e)
    coords.edge_data[oriented_edge_id(e, true)] = sample_edge(cfg, rng);

  const FGCoordinates back = coords_from_json(coords_to_json(coords));
  CHECK(back.n == coords.n);
  CHECK(back.triangle_data.at(0).values == coords.triangle_data.at(0).values);
  CHECK(back.edge_data.at("e0+").z == coords.edge_data.at("e0+").z);

  const auto walks = peripheral_walks(tri);
  REQUIRE_FALSE(walks.empty());
  const CurveWalk wback = walk_from_json(walk_to_json(walks[0]));
  CHECK(wback.start == walks[0].start);
  REQUIRE(wback.steps.size() == walks[0].steps.size());
  CHECK(wback.steps[0].slot == walks[0].steps[0].slot);

  const MonodromyWord word = sample_word(cfg, rng);
  const MonodromyWord word2 = word_from_json(word_to_json(word));
  CHECK(word_digest(word2) == word_digest(word));

  ExperimentConfig c2;
  c2.n = 5;
  c2.seed = 99;
  c2.samples = 17;
  c2.tol.length = 1e-9;
  const ExperimentConfig c3 = experiment_config_from_json(experiment_config_to_json(c2));
  CHECK(c3.n == 5);
  CHECK(c3.seed == 99);
  CHECK(c3.samples == 17);
  CHECK(c3.tol.length == 1e-9);

  const IdealTriangulation t2 = triangulation_from_json(triangulation_to_json(tri));
  CHECK(t2.gluing == tri.gluing);
}

TEST_CASE("malformed JSON raises a parse error carrying the location") {
  bool threw = false;
  try {
    (void)json::parse(std::string("{\"n\": 3, \"oops\""));
  } catch (const json::parse_error& e) {
    threw = true;
    CHECK(std::string(e.what()).find("line") != std::string::npos);
  }
  CHECK(threw);
}
