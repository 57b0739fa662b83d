/**
 * @file surface.hpp
 * @brief Combinatorial ideal triangulations of punctured surfaces and
 *        compilation of curves into monodromy words.
 *
 * Conventions (all validated by the peripheral-triangularity suite rather
 * than assumed correct a priori):
 *
 *  - Each triangle has counterclockwise vertex labels 0,1,2; side s runs from
 *    vertex s to vertex s+1 (mod 3). Side slots are numbered 3·triangle + side.
 *  - The gluing is a fixed-point-free involution on side slots and is
 *    orientation-reversing on the glued sides: the start vertex of one side is
 *    identified with the end vertex of its partner.
 *  - A closed curve is a walk: it exits its current triangle through a side
 *    slot, crosses the corresponding edge, enters the neighbouring triangle
 *    and turns left or right (exiting through the ccw-next or ccw-second side
 *    after the entry side). Left turns compile to δ = +1, right to δ = −1.
 *  - Entering a triangle through side s puts the triangle into its local
 *    (A,B,C) frame by rotating labels so the entry side becomes the CA side
 *    (side 2); the stored triangle invariants are relabeled by the cyclic
 *    index rotation accordingly.
 *  - Each geometric edge carries invariants for both orientations; crossing
 *    from the triangle owning the smaller slot uses the "+" orientation.
 */

#pragma once

#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgdom/coords.hpp"

namespace fgdom {

struct SurfaceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct IdealTriangulation {
  std::string name;
  int genus = 0;
  int punctures = 0;
  int num_triangles = 0;
  std::vector<int> gluing;  // slot → slot, fixed-point-free involution

  int num_slots() const { return 3 * num_triangles; }
  int num_edges() const { return num_slots() / 2; }

  static int triangle_of(int slot) { return slot / 3; }
  static int side_of(int slot) { return slot % 3; }

  /// Edge id of a slot: edges are numbered by their smaller slot, in order.
  int edge_of(int slot) const {
    int id = 0;
    for (int s = 0; s < num_slots(); ++s) {
      if (s > gluing[static_cast<std::size_t>(s)]) continue;  // count each pair once
      if (s == slot || gluing[static_cast<std::size_t>(s)] == slot) return id;
      ++id;
    }
    throw SurfaceError("edge_of: slot out of range");
  }

  /// Whether the slot is the canonical (+ orientation) side of its edge.
  bool is_positive_side(int slot) const { return slot < gluing[static_cast<std::size_t>(slot)]; }

  /// Corner classes (t, v) under the gluing — one class per puncture.
  /// Corner index = 3·t + v.
  std::vector<int> corner_classes() const {
    std::vector<int> parent(static_cast<std::size_t>(num_slots()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int a) {
      while (parent[static_cast<std::size_t>(a)] != a) a = parent[static_cast<std::size_t>(a)];
      return a;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
    for (int slot = 0; slot < num_slots(); ++slot) {
      const int partner = gluing[static_cast<std::size_t>(slot)];
      if (partner < slot) continue;
      const int t = triangle_of(slot), s = side_of(slot);
      const int tp = triangle_of(partner), sp = side_of(partner);
      // Orientation-reversing: start of s ↔ end of partner, end of s ↔ start.
      unite(3 * t + s, 3 * tp + (sp + 1) % 3);
      unite(3 * t + (s + 1) % 3, 3 * tp + sp);
    }
    for (int c = 0; c < num_slots(); ++c)
      parent[static_cast<std::size_t>(c)] = find(c);
    return parent;
  }

  int count_punctures() const {
    auto cls = corner_classes();
    std::vector<int> uniq = cls;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    return static_cast<int>(uniq.size());
  }

  void validate() const {
    if (2 - 2 * genus - punctures >= 0)
      throw SurfaceError("triangulation: Euler characteristic must be negative");
    const int chi_factor = 2 * genus + punctures - 2;
    if (num_triangles != 2 * chi_factor)
      throw SurfaceError("triangulation: triangle count != 2(2g+k-2)");
    if (static_cast<int>(gluing.size()) != num_slots())
      throw SurfaceError("triangulation: gluing size mismatch");
    for (int s = 0; s < num_slots(); ++s) {
      const int p = gluing[static_cast<std::size_t>(s)];
      if (p < 0 || p >= num_slots() || p == s || gluing[static_cast<std::size_t>(p)] != s)
        throw SurfaceError("triangulation: gluing is not a fixed-point-free involution");
    }
    if (count_punctures() != punctures)
      throw SurfaceError("triangulation: puncture count does not match corner classes");
  }
};

enum class Turn { Left, Right };

struct CurveWalk {
  int start = 0;  // starting triangle
  struct Step {
    int slot = 0;  // exit side slot (must belong to the current triangle)
    Turn turn = Turn::Left;  // turn taken inside the triangle entered next
  };
  std::vector<Step> steps;
  bool closed = true;
};

/// Fixed, documented triangulations.
inline IdealTriangulation builtin_triangulation(const std::string& name) {
  IdealTriangulation tri;
  tri.name = name;
  if (name == "once-punctured-torus") {
    // Two triangles, sides glued "in parallel" (0.s ↔ 1.s); all six corners
    // are identified, giving a single puncture.
    tri.genus = 1;
    tri.punctures = 1;
    tri.num_triangles = 2;
    tri.gluing = {3, 4, 5, 0, 1, 2};
  } else if (name == "thrice-punctured-sphere") {
    // Two triangles glued "mirrored" (0.s ↔ 1.(2−s)); corners fall into
    // three classes.
    tri.genus = 0;
    tri.punctures = 3;
    tri.num_triangles = 2;
    tri.gluing = {5, 4, 3, 2, 1, 0};
  } else if (name == "four-punctured-sphere") {
    // Double of a square ABCD split along the diagonal AC. Front (ccw):
    // T0 = (A,B,C), T1 = (A,C,D); back (ccw from the back, i.e. mirrored):
    // T2 = (A,C,B), T3 = (A,D,C). Diagonals glued front-front and back-back,
    // the square's boundary glued front-to-back. Corner classes are the four
    // square vertices A, B, C, D.
    tri.genus = 0;
    tri.punctures = 4;
    tri.num_triangles = 4;
    tri.gluing = std::vector<int>(12, -1);
    auto glue = [&tri](int a, int b) {
      tri.gluing[static_cast<std::size_t>(a)] = b;
      tri.gluing[static_cast<std::size_t>(b)] = a;
    };
    glue(2, 3);    // front diagonal CA:  T0.s2 ↔ T1.s0
    glue(6, 11);   // back diagonal AC:   T2.s0 ↔ T3.s2
    glue(0, 8);    // AB: T0.s0 ↔ T2.s2
    glue(1, 7);    // BC: T0.s1 ↔ T2.s1
    glue(4, 10);   // CD: T1.s1 ↔ T3.s1
    glue(5, 9);    // DA: T1.s2 ↔ T3.s0
  } else {
    throw SurfaceError("builtin_triangulation: unknown name '" + name + "'");
  }
  tri.validate();
  return tri;
}

/// One closed walk encircling each puncture; every step of every walk is a
/// left turn, so each compiles to an all-δ=+1 word.
inline std::vector<CurveWalk> peripheral_walks(const IdealTriangulation& tri) {
  const auto cls = tri.corner_classes();
  std::vector<CurveWalk> walks;
  std::vector<bool> seen(cls.size(), false);
  for (int c0 = 0; c0 < static_cast<int>(cls.size()); ++c0) {
    if (seen[static_cast<std::size_t>(c0)]) continue;
    for (std::size_t c = 0; c < cls.size(); ++c)
      if (cls[c] == cls[static_cast<std::size_t>(c0)]) seen[c] = true;
    CurveWalk walk;
    walk.start = IdealTriangulation::triangle_of(c0);
    walk.closed = true;
    int corner = c0;
    do {
      // At corner (t, v): exit through side v (the side starting at v).
      const int t = IdealTriangulation::triangle_of(corner);
      const int v = IdealTriangulation::side_of(corner);
      const int slot = 3 * t + v;
      walk.steps.push_back({slot, Turn::Left});
      const int partner = tri.gluing[static_cast<std::size_t>(slot)];
      // Our vertex (the start of side v) maps to the end of the partner side.
      corner = 3 * IdealTriangulation::triangle_of(partner) +
               (IdealTriangulation::side_of(partner) + 1) % 3;
    } while (corner != c0);
    walks.push_back(std::move(walk));
  }
  return walks;
}

/// Reversal convention for deriving the missing orientation of an edge.
enum class EdgeReversal { ZrToZnr, Independent };

/// Compile a closed walk into a monodromy word against a coordinate
/// assignment: one building block per step, with δ from the turn, triangle
/// invariants rotated into the local frame of the crossing, and edge
/// invariants read for the crossing orientation.
inline MonodromyWord compile(const CurveWalk& walk, const IdealTriangulation& tri,
                             const FGCoordinates& coords) {
  if (!walk.closed || walk.steps.empty())
    throw SurfaceError("OpenWalk: compile requires a nonempty closed walk");
  MonodromyWord word;
  int current = walk.start;
  for (std::size_t j = 0; j < walk.steps.size(); ++j) {
    const auto& step = walk.steps[j];
    if (IdealTriangulation::triangle_of(step.slot) != current)
      throw SurfaceError("SlotMismatch: exit slot " + std::to_string(step.slot) +
                         " is not a side of triangle " + std::to_string(current));
    const int partner = tri.gluing[static_cast<std::size_t>(step.slot)];
    const int entered = IdealTriangulation::triangle_of(partner);
    const int entry_side = IdealTriangulation::side_of(partner);
    // The turn determines the side through which the NEXT step must exit.
    const int expected_exit =
        3 * entered + (entry_side + (step.turn == Turn::Left ? 1 : 2)) % 3;
    const int next_slot = walk.steps[(j + 1) % walk.steps.size()].slot;
    if (next_slot != expected_exit)
      throw SurfaceError("SlotMismatch: turn at step " + std::to_string(j) +
                         " is inconsistent with the following exit slot");
    BuildingBlockSpec block;
    block.delta = step.turn == Turn::Left ? +1 : -1;
    // Rotate stored labels so the entry side becomes local side 2 (the CA side).
    const int shift = (entry_side + 1) % 3;
    auto tri_it = coords.triangle_data.find(entered);
    if (tri_it == coords.triangle_data.end())
      throw SurfaceError("SlotMismatch: no invariants for triangle " + std::to_string(entered));
    block.triangle = tri_it->second.rotated(shift);
    const std::string eid =
        oriented_edge_id(tri.edge_of(step.slot), tri.is_positive_side(step.slot));
    auto edge_it = coords.edge_data.find(eid);
    if (edge_it == coords.edge_data.end())
      throw SurfaceError("SlotMismatch: no invariants for oriented edge " + eid);
    block.edge = edge_it->second;
    word.blocks.push_back(std::move(block));
    current = entered;
  }
  if (current != walk.start)
    throw SurfaceError("OpenWalk: walk does not return to its start triangle");
  return word;
}

/// Fill in the missing orientation of every edge from the present one
/// according to the reversal convention (no-op for edges already present).
inline FGCoordinates complete_orientations(const FGCoordinates& coords, EdgeReversal mode) {
  FGCoordinates out = coords;
  std::vector<std::pair<std::string, EdgeInvariants>> to_add;
  for (const auto& [eid, inv] : out.edge_data) {
    if (eid.empty()) continue;
    std::string flipped = eid;
    flipped.back() = flipped.back() == '+' ? '-' : '+';
    if (out.edge_data.count(flipped)) continue;
    if (mode == EdgeReversal::ZrToZnr) to_add.emplace_back(flipped, inv.reversed());
    // Independent mode leaves the orientation absent; callers must supply it.
  }
  for (auto& [eid, inv] : to_add) out.edge_data.emplace(std::move(eid), std::move(inv));
  return out;
}

}  // namespace fgdom
