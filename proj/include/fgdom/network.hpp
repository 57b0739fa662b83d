/**
 * @file network.hpp
 * @brief Weighted planar networks: layered DAGs with n sources and n sinks,
 *        weight matrices, concatenation, vertex-disjoint path families
 *        (Lindström minors), modulus maps, and the builders realizing the
 *        monodromy building blocks T(t)^{±1}E(e) as networks.
 *
 * Representation: a network of order n with L transitions has vertices at
 * (layer, track) for layer 0..L and track 0..n−1 (track 0 is the bottom row;
 * matrix row/source 1 in the usual notation). Every edge spans exactly one
 * transition and moves by at most one track (slope −1, 0 or +1); weight-1
 * edges are stored explicitly. Sources are the layer-0 vertices, sinks the
 * layer-L vertices. Planarity is a construction invariant: within a
 * transition no two edges may cross.
 *
 * The weight matrix has (i,j) entry the sum over directed paths from source i
 * to sink j of the product of edge weights; it is computed as the product of
 * per-transition transfer matrices, so concatenation of networks corresponds
 * to the product of weight matrices. Minors of the weight matrix equal sums
 * over vertex-disjoint path families (Lindström), which lindstrom_minor
 * evaluates independently by backtracking enumeration.
 */

#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "fgdom/coords.hpp"
#include "fgdom/factory.hpp"
#include "fgdom/matrix.hpp"

namespace fgdom {

template <typename T>
struct BasicPlanarNetwork {
  struct Edge {
    int layer = 0;  // transition index: connects layer to layer+1
    int from = 0;   // track at `layer`   (0 = bottom)
    int to = 0;     // track at `layer+1`
    T w = scalar_traits<T>::one();
  };

  int order = 0;        // n sources / n sinks
  int transitions = 0;  // number of layer gaps; layers = transitions + 1
  std::vector<Edge> edges;
};

using PlanarNetwork = BasicPlanarNetwork<Cplx>;
using RatPlanarNetwork = BasicPlanarNetwork<RatC>;

/// Structural validation: ranges, nonzero weights, slope bound, and the
/// combinatorial non-crossing condition within each transition.
template <typename T>
void validate_network(const BasicPlanarNetwork<T>& net) {
  if (net.order < 1) throw std::invalid_argument("network: order must be >= 1");
  for (const auto& e : net.edges) {
    if (e.layer < 0 || e.layer >= net.transitions)
      throw std::invalid_argument("network: edge layer out of range");
    if (e.from < 0 || e.from >= net.order || e.to < 0 || e.to >= net.order)
      throw std::invalid_argument("network: edge track out of range");
    if (e.to - e.from > 1 || e.from - e.to > 1)
      throw std::invalid_argument("network: edge slope must be in {-1,0,+1}");
    if (scalar_traits<T>::is_zero(e.w))
      throw std::invalid_argument("network: zero edge weight");
  }
  for (std::size_t a = 0; a < net.edges.size(); ++a)
    for (std::size_t b = a + 1; b < net.edges.size(); ++b) {
      const auto& ea = net.edges[a];
      const auto& eb = net.edges[b];
      if (ea.layer != eb.layer) continue;
      if ((ea.from - eb.from) * (ea.to - eb.to) < 0)
        throw std::invalid_argument("network: crossing edges in one transition");
    }
}

/// Transfer matrix of one transition: entry (from, to) sums parallel edges.
template <typename T>
Matrix<T> transfer_matrix(const BasicPlanarNetwork<T>& net, int layer) {
  Matrix<T> m(net.order, net.order);
  for (const auto& e : net.edges)
    if (e.layer == layer) m(e.from, e.to) += e.w;
  return m;
}

/// Weight matrix: product of the transfer matrices of all transitions.
template <typename T>
Matrix<T> weight_matrix(const BasicPlanarNetwork<T>& net) {
  Matrix<T> m = Matrix<T>::identity(net.order);
  for (int l = 0; l < net.transitions; ++l) m = m * transfer_matrix(net, l);
  return m;
}

/// Concatenation: sinks of `a` identified with sources of `b`.
template <typename T>
BasicPlanarNetwork<T> concat(const BasicPlanarNetwork<T>& a, const BasicPlanarNetwork<T>& b) {
  if (a.order != b.order) throw std::invalid_argument("concat: order mismatch");
  BasicPlanarNetwork<T> out = a;
  out.transitions = a.transitions + b.transitions;
  for (auto e : b.edges) {
    e.layer += a.transitions;
    out.edges.push_back(e);
  }
  return out;
}

/// Same graph with every weight replaced by its modulus.
inline PlanarNetwork modulus_map(const PlanarNetwork& net) {
  PlanarNetwork out = net;
  for (auto& e : out.edges) e.w = Cplx{scalar_traits<Cplx>::modulus(e.w), 0.0};
  return out;
}

namespace detail {

/// Enumerate vertex-disjoint path families from sources I to sinks J
/// (both sorted ascending, 0-based) and sum their weight products.
/// Vertex-disjoint families in a planar layered network are non-crossing,
/// so paths can be assigned to sources in increasing order with each path
/// kept strictly above its predecessor at every layer.
template <typename T>
class DisjointFamilySum {
 public:
  DisjointFamilySum(const BasicPlanarNetwork<T>& net, std::vector<std::size_t> I,
                    std::vector<std::size_t> J)
      : net_(net), I_(std::move(I)), J_(std::move(J)) {
    by_layer_from_.resize(static_cast<std::size_t>(net.transitions));
    for (const auto& e : net_.edges)
      by_layer_from_[static_cast<std::size_t>(e.layer)].push_back(&e);
    floor_.assign(static_cast<std::size_t>(net_.transitions) + 1, -1);
  }

  T run() {
    total_ = scalar_traits<T>::zero();
    place_path(0);
    return total_;
  }

 private:
  void place_path(std::size_t m) {
    if (m == I_.size()) {
      T prod = scalar_traits<T>::one();
      for (const T* w : chosen_) prod = prod * (*w);
      total_ += prod;
      return;
    }
    const int start = static_cast<int>(I_[m]);
    if (start <= floor_[0]) return;  // sources below the previous path: no family
    extend(m, 0, start);
  }

  void extend(std::size_t m, int layer, int track) {
    if (track <= floor_[static_cast<std::size_t>(layer)]) return;
    if (layer == net_.transitions) {
      if (track != static_cast<int>(J_[m])) return;
      // Freeze this path as the floor for the next one. Its per-layer tracks
      // are the last `transitions` entries of path_ (earlier entries belong
      // to already-frozen paths).
      std::vector<int> saved = floor_;
      const std::size_t base = path_.size() - static_cast<std::size_t>(net_.transitions);
      for (int l = 0; l < net_.transitions; ++l)
        floor_[static_cast<std::size_t>(l)] = path_[base + static_cast<std::size_t>(l)];
      floor_[static_cast<std::size_t>(net_.transitions)] = track;
      place_path(m + 1);
      floor_ = saved;
      return;
    }
    for (const auto* e : by_layer_from_[static_cast<std::size_t>(layer)]) {
      if (e->from != track) continue;
      path_.push_back(track);
      chosen_.push_back(&e->w);
      extend(m, layer + 1, e->to);
      chosen_.pop_back();
      path_.pop_back();
    }
  }

  const BasicPlanarNetwork<T>& net_;
  std::vector<std::size_t> I_, J_;
  std::vector<std::vector<const typename BasicPlanarNetwork<T>::Edge*>> by_layer_from_;
  std::vector<int> floor_;   // per-layer track of the previous path (exclusive lower bound)
  std::vector<int> path_;    // tracks of the path being built, layers 0..current
  std::vector<const T*> chosen_;
  T total_ = scalar_traits<T>::zero();
};

}  // namespace detail

/// Sum of weights over all vertex-disjoint path families from sources I to
/// sinks J (0-based, any order; sorted internally). By Lindström's lemma this
/// equals the (I,J) minor of the weight matrix.
template <typename T>
T lindstrom_minor(const BasicPlanarNetwork<T>& net, std::vector<std::size_t> I,
                  std::vector<std::size_t> J) {
  if (I.size() != J.size()) throw std::invalid_argument("lindstrom_minor: |I| != |J|");
  std::sort(I.begin(), I.end());
  std::sort(J.begin(), J.end());
  detail::DisjointFamilySum<T> sum(net, std::move(I), std::move(J));
  return sum.run();
}

namespace detail {

/// Append one transition of unit horizontal edges on all tracks.
template <typename T>
void add_identity_transition(BasicPlanarNetwork<T>& net) {
  const int l = net.transitions++;
  for (int t = 0; t < net.order; ++t) net.edges.push_back({l, t, t, scalar_traits<T>::one()});
}

/// Transition realizing H_i(x): top i tracks carry weight x.
template <typename T>
void add_H_transition(BasicPlanarNetwork<T>& net, int i, const T& x) {
  const int l = net.transitions++;
  for (int t = 0; t < net.order; ++t)
    net.edges.push_back({l, t, t, t >= net.order - i ? x : scalar_traits<T>::one()});
}

/// Transition realizing F_i: unit horizontals plus the downward slant
/// from track i to track i−1 (1-based rows i+1 → i).
template <typename T>
void add_F_transition(BasicPlanarNetwork<T>& net, int i) {
  const int l = net.transitions++;
  for (int t = 0; t < net.order; ++t) net.edges.push_back({l, t, t, scalar_traits<T>::one()});
  net.edges.push_back({l, i, i - 1, scalar_traits<T>::one()});
}

/// Transition realizing an arbitrary diagonal matrix.
template <typename T>
void add_diag_transition(BasicPlanarNetwork<T>& net, const Matrix<T>& d) {
  const int l = net.transitions++;
  for (int t = 0; t < net.order; ++t) net.edges.push_back({l, t, t, d(t, t)});
}

/// Two transitions realizing the S·Step(k)·S closed form: weighted
/// horizontals carrying the cumulative 1/x products, then unit horizontals
/// with upward slants on the bottom n−k tracks.
template <typename T>
void add_S_Step_S_transitions(BasicPlanarNetwork<T>& net,
                              const BasicTriangleInvariants<T>& tri, int k) {
  const int n = net.order;
  const Matrix<T> d = build_S_Step_S(tri, k);
  const int l1 = net.transitions++;
  for (int t = 0; t < n; ++t) net.edges.push_back({l1, t, t, d(t, t)});
  const int l2 = net.transitions++;
  for (int t = 0; t < n; ++t) net.edges.push_back({l2, t, t, scalar_traits<T>::one()});
  for (int t = 0; t < n - k; ++t) net.edges.push_back({l2, t, t + 1, scalar_traits<T>::one()});
}

}  // namespace detail

/// Planar network whose weight matrix is exactly build_block(spec) with
/// δ = +1, i.e. the nonnegative representative of T(t)E(e): the St(k)
/// staircases of M(t) followed by the diagonal of S·E(e).
template <typename T>
BasicPlanarNetwork<T> net_TE(const BasicBuildingBlockSpec<T>& spec) {
  if (spec.delta != +1) throw std::invalid_argument("net_TE: delta must be +1");
  const int n = spec.triangle.n;
  BasicPlanarNetwork<T> net;
  net.order = n;
  for (int k = n - 1; k >= 1; --k) {
    detail::add_F_transition(net, n - 1);
    for (int i = 1; i <= k - 1; ++i) {
      detail::add_H_transition(net, i, spec.triangle.at(i - 1, k - i - 1, n - k - 1));
      detail::add_F_transition(net, n - i - 1);
    }
  }
  detail::add_diag_transition(net, build_SE_diag(spec.edge));
  return net;
}

/// Planar network whose weight matrix is exactly build_block(spec) with
/// δ = −1: the S·Step(k)·S bidiagonal blocks followed by the S·E(e) diagonal.
template <typename T>
BasicPlanarNetwork<T> net_TinvE(const BasicBuildingBlockSpec<T>& spec) {
  if (spec.delta != -1) throw std::invalid_argument("net_TinvE: delta must be -1");
  const int n = spec.triangle.n;
  BasicPlanarNetwork<T> net;
  net.order = n;
  for (int k = n - 1; k >= 1; --k) detail::add_S_Step_S_transitions(net, spec.triangle, k);
  detail::add_diag_transition(net, build_SE_diag(spec.edge));
  return net;
}

/// Network of a whole word: block networks concatenated so that the weight
/// matrix equals monodromy(word) (last block leftmost, matching the
/// right-to-left product convention).
template <typename T>
BasicPlanarNetwork<T> net_word(const BasicMonodromyWord<T>& word) {
  if (word.blocks.empty()) throw std::invalid_argument("net_word: empty word");
  BasicPlanarNetwork<T> net;
  bool first = true;
  for (auto it = word.blocks.rbegin(); it != word.blocks.rend(); ++it) {
    BasicPlanarNetwork<T> blk =
        it->delta == +1 ? net_TE(*it) : net_TinvE(*it);
    net = first ? blk : concat(net, blk);
    first = false;
  }
  return net;
}

enum class Positivity { TotallyPositive, TotallyNonnegative, Neither };

/// Classify a real matrix by enumerating every minor of every order.
/// Entries with |Im| > tol are rejected.
inline Positivity total_nonnegativity_check(const Matrix<Cplx>& m, double tol = 1e-9) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("total_nonnegativity_check: non-square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (std::abs(m(i, j).imag()) > tol)
        throw std::invalid_argument("NonRealMatrix: entry with nonzero imaginary part");
  bool all_positive = true;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto subsets = k_subsets(n, k);
    for (const auto& I : subsets)
      for (const auto& J : subsets) {
        const double v = minor_of(m, I, J).real();
        if (v < -tol) return Positivity::Neither;
        if (v <= tol) all_positive = false;
      }
  }
  return all_positive ? Positivity::TotallyPositive : Positivity::TotallyNonnegative;
}

/// Exact variant: rational entries, exact minor signs. Entries must have
/// exactly zero imaginary part.
inline Positivity total_nonnegativity_check(const Matrix<RatC>& m) {
  const std::size_t n = m.rows();
  if (n != m.cols()) throw std::invalid_argument("total_nonnegativity_check: non-square");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (m(i, j).im != 0)
        throw std::invalid_argument("NonRealMatrix: entry with nonzero imaginary part");
  bool all_positive = true;
  for (std::size_t k = 1; k <= n; ++k) {
    const auto subsets = k_subsets(n, k);
    for (const auto& I : subsets)
      for (const auto& J : subsets) {
        const Rat v = minor_of(m, I, J).re;
        if (v < 0) return Positivity::Neither;
        if (v == 0) all_positive = false;
      }
  }
  return all_positive ? Positivity::TotallyPositive : Positivity::TotallyNonnegative;
}

/// Graph-description export (DOT) with vertices laid out by (layer, track).
inline std::string to_dot(const PlanarNetwork& net) {
  std::ostringstream os;
  os << "digraph planar_network {\n  rankdir=LR;\n  node [shape=point];\n";
  for (int l = 0; l <= net.transitions; ++l)
    for (int t = 0; t < net.order; ++t)
      os << "  v" << l << "_" << t << " [pos=\"" << l << "," << t << "!\"];\n";
  for (const auto& e : net.edges) {
    os << "  v" << e.layer << "_" << e.from << " -> v" << (e.layer + 1) << "_" << e.to
       << " [label=\"" << e.w.real();
    if (e.w.imag() != 0.0) os << (e.w.imag() > 0 ? "+" : "") << e.w.imag() << "i";
    os << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace fgdom
