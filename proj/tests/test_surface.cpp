/**
 * @file test_surface.cpp
 * @brief Ideal triangulations, gluing involutions, peripheral walks, walk
 *        compilation into monodromy words, and edge-orientation completion.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgdom/surface.hpp"
#include "fgdom/verify.hpp"

using namespace fgdom;

namespace {

FGCoordinates random_coords(const IdealTriangulation& tri, int n, std::uint64_t seed) {
  ExperimentConfig cfg;
  cfg.n = n;
  cfg.seed = seed;
  auto rng = sample_rng(cfg, 0);
  FGCoordinates coords;
  coords.n = n;
  coords.genus = tri.genus;
  coords.punctures = tri.punctures;
  coords.triangulation_ref = tri.name;
  for (int t = 0; t < tri.num_triangles; ++t) coords.triangle_data[t] = sample_triangle(cfg, rng);
  for (int e = 0; e < tri.num_edges(); ++e)
    coords.edge_data[oriented_edge_id(e, true)] = sample_edge(cfg, rng);
  return complete_orientations(coords, EdgeReversal::ZrToZnr);
}

}  // namespace

TEST_CASE("builtin triangulations satisfy the Euler count and gluing involution") {
  for (const char* name :
       {"once-punctured-torus", "thrice-punctured-sphere", "four-punctured-sphere"}) {
    const auto tri = builtin_triangulation(name);
    CHECK(tri.num_triangles == 2 * (2 * tri.genus + tri.punctures - 2));
    for (int s = 0; s < tri.num_slots(); ++s) {
      const int p = tri.gluing[static_cast<std::size_t>(s)];
      CHECK(p != s);
      CHECK(tri.gluing[static_cast<std::size_t>(p)] == s);
    }
    CHECK(tri.count_punctures() == tri.punctures);
  }
  CHECK_THROWS(builtin_triangulation("no-such-surface"));
}

TEST_CASE("peripheral walks are closed, all-Left, one per puncture") {
  for (const char* name :
       {"once-punctured-torus", "thrice-punctured-sphere", "four-punctured-sphere"}) {
    const auto tri = builtin_triangulation(name);
    const auto walks = peripheral_walks(tri);
    CHECK(static_cast<int>(walks.size()) == tri.punctures);
    for (const auto& w : walks) {
      CHECK(w.closed);
      CHECK_FALSE(w.steps.empty());
      for (const auto& s : w.steps) CHECK(s.turn == Turn::Left);
    }
  }
}

TEST_CASE("compile emits one block per step and respects turn deltas") {
  const auto tri = builtin_triangulation("once-punctured-torus");
  const auto coords = random_coords(tri, 3, 71);
  for (const auto& walk : peripheral_walks(tri)) {
    const auto word = compile(walk, tri, coords);
    REQUIRE(word.blocks.size() == walk.steps.size());
    for (const auto& blk : word.blocks) CHECK(blk.delta == word.blocks.front().delta);
  }
}

TEST_CASE("compile rejects open walks and slot mismatches") {
  const auto tri = builtin_triangulation("once-punctured-torus");
  const auto coords = random_coords(tri, 3, 72);
  CurveWalk open;
  open.start = 0;
  open.closed = false;
  CHECK_THROWS_AS(compile(open, tri, coords), SurfaceError);
  CurveWalk bad = peripheral_walks(tri)[0];
  bad.steps[0].slot = 5;  // a side of the other triangle
  bad.start = 0;
  CHECK_THROWS_AS(compile(bad, tri, coords), SurfaceError);
}

TEST_CASE("orientation completion reverses the z-vector and is idempotent") {
  const auto tri = builtin_triangulation("thrice-punctured-sphere");
  const auto coords = random_coords(tri, 4, 73);
  for (int e = 0; e < tri.num_edges(); ++e) {
    const auto& fwd = coords.edge_data.at(oriented_edge_id(e, true)).z;
    const auto& rev = coords.edge_data.at(oriented_edge_id(e, false)).z;
    REQUIRE(fwd.size() == rev.size());
    for (std::size_t r = 0; r < fwd.size(); ++r) CHECK(rev[r] == fwd[fwd.size() - 1 - r]);
  }
  const auto again = complete_orientations(coords, EdgeReversal::ZrToZnr);
  CHECK(again.edge_data.size() == coords.edge_data.size());
}

TEST_CASE("verification suite: peripheral triangularity and length equality") {
  for (const auto& r : verify_surface(/*seed=*/105)) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.passed);
  }
}
