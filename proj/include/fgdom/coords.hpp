/**
 * @file coords.hpp
 * @brief Fock–Goncharov coordinate data: triangle and edge invariants,
 *        validation, and the bending deformation to the positive representative.
 *
 * A rank-n coordinate system on an ideal triangulation of a genus-g surface
 * with k punctures consists of
 *   - (n−1)(n−2)/2 triangle invariants X_{i,j,k} (i+j+k = n−3, all ≥ 0)
 *     per ideal triangle, and
 *   - n−1 edge invariants (z_1, …, z_{n−1}) per oriented edge,
 * all nonzero complex scalars, for a total of (2g+k−2)(n−1)(n+1) parameters.
 *
 * "Bending to positive" replaces every coordinate by its modulus; the result
 * is the positive representative of the bending fiber through the input.
 */

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fgdom/scalars.hpp"

namespace fgdom {

/// Triangle invariants X_{i,j,k}, i+j+k = n−3, for one ideal triangle.
template <typename T>
struct BasicTriangleInvariants {
  int n = 2;
  std::map<std::array<int, 3>, T> values;  // key {i,j,k}

  static std::size_t expected_count(int n) {
    return static_cast<std::size_t>(n - 1) * (n - 2) / 2;
  }

  const T& at(int i, int j, int k) const { return values.at({i, j, k}); }

  /// Relabel invariants for the cyclic vertex rotation (A,B,C) → (B,C,A)
  /// applied `shift` times: the triple ratio satisfies
  /// T_{pqr}(A,B,C) = T_{qrp}(B,C,A), so in the rotated frame the invariant
  /// indexed (i,j,k) is the stored invariant indexed (k,i,j).
  BasicTriangleInvariants rotated(int shift) const {
    BasicTriangleInvariants out;
    out.n = n;
    shift = ((shift % 3) + 3) % 3;
    for (const auto& [idx, v] : values) {
      std::array<int, 3> key = idx;
      for (int s = 0; s < shift; ++s) key = {key[1], key[2], key[0]};
      out.values[key] = v;
    }
    return out;
  }
};

/// Edge invariants (z_1, …, z_{n−1}) for one oriented edge.
template <typename T>
struct BasicEdgeInvariants {
  int n = 2;
  std::vector<T> z;  // z[r-1] = z_r, r = 1..n−1

  const T& z_r(int r) const { return z.at(static_cast<std::size_t>(r) - 1); }

  /// The same edge crossed in the opposite direction under the
  /// z'_r = z_{n−r} reversal convention.
  BasicEdgeInvariants reversed() const {
    BasicEdgeInvariants out;
    out.n = n;
    out.z.assign(z.rbegin(), z.rend());
    return out;
  }
};

/// One step of a monodromy word: T(t)^{δ}E(e) with the triangle invariants
/// already rotated into the local (A,B,C) frame of the crossing.
template <typename T>
struct BasicBuildingBlockSpec {
  int delta = +1;  // +1 or −1
  BasicTriangleInvariants<T> triangle;
  BasicEdgeInvariants<T> edge;
};

/// A curve's compiled word; the monodromy is the right-to-left product
/// ρ(γ) = T(t_k)^{δ_k}E(e_k) ⋯ T(t_1)^{δ_1}E(e_1) over blocks[0..k−1].
template <typename T>
struct BasicMonodromyWord {
  std::vector<BasicBuildingBlockSpec<T>> blocks;
};

using TriangleInvariants = BasicTriangleInvariants<Cplx>;
using EdgeInvariants = BasicEdgeInvariants<Cplx>;
using BuildingBlockSpec = BasicBuildingBlockSpec<Cplx>;
using MonodromyWord = BasicMonodromyWord<Cplx>;

/// Full coordinate assignment for a triangulated surface.
struct FGCoordinates {
  int n = 2;
  int genus = 0;
  int punctures = 0;
  std::string triangulation_ref;
  std::map<int, TriangleInvariants> triangle_data;           // triangle id → X
  std::map<std::string, EdgeInvariants> edge_data;           // "e<k>+/-" → z
};

/// Oriented-edge id for edge `edge_id` crossed in the positive (`true`) or
/// negative direction.
inline std::string oriented_edge_id(int edge_id, bool positive) {
  return "e" + std::to_string(edge_id) + (positive ? "+" : "-");
}

struct ValidationIssue {
  std::string code;     // ZeroCoordinate | MissingEntry | CountMismatch
  std::string address;  // coordinate address, e.g. "triangle 0 X(0,0,0)"
};

struct ValidationResult {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
};

/// Structural validation: invariant counts per triangle/edge, nonzero values,
/// and the global (2g+k−2)(n−1)(n+1) parameter count.
inline ValidationResult validate(const FGCoordinates& c) {
  ValidationResult res;
  auto issue = [&](std::string code, std::string addr) {
    res.issues.push_back({std::move(code), std::move(addr)});
  };
  const int n = c.n;
  for (const auto& [tid, tri] : c.triangle_data) {
    const std::string where = "triangle " + std::to_string(tid);
    if (tri.values.size() != TriangleInvariants::expected_count(n))
      issue("CountMismatch", where + ": expected " +
                                 std::to_string(TriangleInvariants::expected_count(n)) +
                                 " invariants, got " + std::to_string(tri.values.size()));
    for (const auto& [idx, v] : tri.values) {
      const std::string addr = where + " X(" + std::to_string(idx[0]) + "," +
                               std::to_string(idx[1]) + "," + std::to_string(idx[2]) + ")";
      if (idx[0] < 0 || idx[1] < 0 || idx[2] < 0 || idx[0] + idx[1] + idx[2] != n - 3)
        issue("MissingEntry", addr + ": index triple out of range");
      if (v == Cplx{0.0, 0.0}) issue("ZeroCoordinate", addr);
    }
  }
  for (const auto& [eid, edge] : c.edge_data) {
    const std::string where = "edge " + eid;
    if (static_cast<int>(edge.z.size()) != n - 1)
      issue("CountMismatch", where + ": expected " + std::to_string(n - 1) +
                                 " invariants, got " + std::to_string(edge.z.size()));
    for (std::size_t r = 0; r < edge.z.size(); ++r)
      if (edge.z[r] == Cplx{0.0, 0.0})
        issue("ZeroCoordinate", where + " z_" + std::to_string(r + 1));
  }
  // Global parameter count. Edge data is stored per oriented edge (two
  // orientations per geometric edge), so geometric edges = oriented/2.
  const long chi_factor = 2L * c.genus + c.punctures - 2;
  if (chi_factor > 0) {
    const long expected = chi_factor * (n - 1L) * (n + 1L);
    const long triangles = static_cast<long>(c.triangle_data.size());
    const long oriented_edges = static_cast<long>(c.edge_data.size());
    const long actual =
        triangles * static_cast<long>(TriangleInvariants::expected_count(n)) +
        (oriented_edges / 2) * (n - 1L);
    if (oriented_edges % 2 != 0)
      issue("MissingEntry", "odd number of oriented edges (each edge needs both orientations)");
    if (triangles != 2 * chi_factor)
      issue("CountMismatch", "triangle count " + std::to_string(triangles) + " != " +
                                 std::to_string(2 * chi_factor));
    if (oriented_edges / 2 != 3 * chi_factor)
      issue("CountMismatch", "edge count " + std::to_string(oriented_edges / 2) + " != " +
                                 std::to_string(3 * chi_factor));
    if (actual != expected)
      issue("CountMismatch", "total parameter count " + std::to_string(actual) + " != " +
                                 std::to_string(expected));
  }
  return res;
}

inline Cplx bend_value(const Cplx& v) { return {std::hypot(v.real(), v.imag()), 0.0}; }

/// Replace every coordinate by its modulus (the positive representative of
/// the bending fiber). Idempotent; fixes all-real-positive inputs.
inline FGCoordinates bend_to_positive(const FGCoordinates& c) {
  FGCoordinates out = c;
  for (auto& [tid, tri] : out.triangle_data)
    for (auto& [idx, v] : tri.values) v = bend_value(v);
  for (auto& [eid, edge] : out.edge_data)
    for (auto& v : edge.z) v = bend_value(v);
  return out;
}

/// Word-level bending: moduli of all invariants, δ signs unchanged.
inline MonodromyWord bend_word(const MonodromyWord& w) {
  MonodromyWord out = w;
  for (auto& b : out.blocks) {
    for (auto& [idx, v] : b.triangle.values) v = bend_value(v);
    for (auto& v : b.edge.z) v = bend_value(v);
  }
  return out;
}

}  // namespace fgdom
