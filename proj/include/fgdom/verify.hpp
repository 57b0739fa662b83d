/**
 * @file verify.hpp
 * @brief Self-contained module invariant suites with fixed seeds, shared by
 *        the `verify` subcommand and the test binaries.
 *
 * Each suite returns one CheckResult per named property; a failure carries a
 * localized diagnostic. Exact (rational) arithmetic is used wherever the
 * property is an identity rather than an inequality.
 */

#pragma once

#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fgdom/factory.hpp"
#include "fgdom/flags.hpp"
#include "fgdom/harness.hpp"
#include "fgdom/network.hpp"
#include "fgdom/spectral.hpp"
#include "fgdom/surface.hpp"

namespace fgdom {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;  // diagnostic on failure, summary on success
};

// ---------------------------------------------------------------------------
// Exact-value samplers
// ---------------------------------------------------------------------------

/// Nonzero small rational in [−12, 12] with denominator ≤ 12.
inline Rat random_rat(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 12);
  int v = num(rng);
  if (v == 0) v = 7;
  return Rat(v, den(rng));
}

/// Nonzero Gaussian rational; imaginary part present about half the time.
inline RatC random_ratc(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  RatC out{random_rat(rng), coin(rng) ? random_rat(rng) : Rat(0)};
  if (out.is_zero()) out = RatC{1};
  return out;
}

inline BasicTriangleInvariants<RatC> random_rat_triangle(int n, std::mt19937_64& rng) {
  BasicTriangleInvariants<RatC> tri;
  tri.n = n;
  for (int i = 0; i <= n - 3; ++i)
    for (int j = 0; i + j <= n - 3; ++j) tri.values[{i, j, n - 3 - i - j}] = random_ratc(rng);
  return tri;
}

inline BasicEdgeInvariants<RatC> random_rat_edge(int n, std::mt19937_64& rng) {
  BasicEdgeInvariants<RatC> e;
  e.n = n;
  for (int r = 1; r < n; ++r) e.z.push_back(random_ratc(rng));
  return e;
}

/// Exact image of a double-precision word (every double is a dyadic rational).
inline BasicMonodromyWord<RatC> exact_word(const MonodromyWord& w) {
  auto conv = [](const Cplx& v) { return RatC{Rat(v.real()), Rat(v.imag())}; };
  BasicMonodromyWord<RatC> out;
  for (const auto& blk : w.blocks) {
    BasicBuildingBlockSpec<RatC> b;
    b.delta = blk.delta;
    b.triangle.n = blk.triangle.n;
    for (const auto& [idx, v] : blk.triangle.values) b.triangle.values[idx] = conv(v);
    b.edge.n = blk.edge.n;
    for (const auto& z : blk.edge.z) b.edge.z.push_back(conv(z));
    out.blocks.push_back(std::move(b));
  }
  return out;
}

inline BasicMonodromyWord<RatC> random_rat_word(int n, int len, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1);
  BasicMonodromyWord<RatC> w;
  for (int b = 0; b < len; ++b) {
    BasicBuildingBlockSpec<RatC> blk;
    blk.delta = coin(rng) ? +1 : -1;
    blk.triangle = random_rat_triangle(n, rng);
    blk.edge = random_rat_edge(n, rng);
    w.blocks.push_back(std::move(blk));
  }
  return w;
}

/// Random valid rational planar network: per transition either horizontals
/// only, or horizontals plus parallel slants (parallel slants never cross).
inline RatPlanarNetwork random_rat_network(int order, int transitions, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> kind(0, 2);  // 0 horiz, 1 + up, 2 + down
  std::uniform_int_distribution<int> coin(0, 1);
  RatPlanarNetwork net;
  net.order = order;
  for (int l = 0; l < transitions; ++l) {
    net.transitions++;
    for (int t = 0; t < order; ++t)
      net.edges.push_back({l, t, t, coin(rng) ? RatC{1} : random_ratc(rng)});
    const int k = kind(rng);
    if (k != 0)
      for (int t = 0; t + 1 < order; ++t)
        if (coin(rng)) {
          if (k == 1) net.edges.push_back({l, t, t + 1, random_ratc(rng)});
          else net.edges.push_back({l, t + 1, t, random_ratc(rng)});
        }
  }
  validate_network(net);
  return net;
}

// ---------------------------------------------------------------------------
// Suites
// ---------------------------------------------------------------------------

namespace detail {

inline CheckResult check(std::string name, bool ok, std::string detail_on_fail) {
  return {std::move(name), ok, ok ? "ok" : std::move(detail_on_fail)};
}

template <typename T>
bool is_identity(const Matrix<T>& m) {
  return m == Matrix<T>::identity(m.rows());
}

}  // namespace detail

/// Elementary/composite matrix identities, exact in rational arithmetic.
inline std::vector<CheckResult> verify_factory(std::uint64_t seed = 1, int draws = 10) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);

  bool s_square = true;
  for (int n = 2; n <= 8; ++n) {
    const auto S = elem_S<RatC>(n);
    Matrix<RatC> expect = Matrix<RatC>::identity(n);
    if (n % 2 == 0)
      expect = RatC{-1} * expect;
    if (!(S * S == expect)) s_square = false;
  }
  out.push_back(detail::check("factory.S-square", s_square, "S^2 != (-1)^{n+1} I"));

  bool step_inv = true, m_inv = true, ssteps = true;
  std::string where;
  for (int n = 2; n <= 6 && step_inv && m_inv && ssteps; ++n) {
    for (int d = 0; d < draws; ++d) {
      const auto tri = random_rat_triangle(n, rng);
      Matrix<RatC> acc = build_M(tri);
      for (int k = n - 1; k >= 1; --k) {
        if (!detail::is_identity(build_Step(tri, n - k) * build_St(tri, k))) {
          step_inv = false;
          where = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
        acc = acc * build_Step(tri, k);  // M·Step(n−1)⋯Step(1) = I
      }
      if (!detail::is_identity(acc)) m_inv = false;
      const auto S = elem_S<RatC>(n);
      const RatC sign = (n % 2 == 0) ? RatC{-1} : RatC{1};
      for (int k = 1; k <= n - 1; ++k)
        if (!(S * build_Step(tri, k) * S == sign * build_S_Step_S(tri, k))) {
          ssteps = false;
          where = "n=" + std::to_string(n) + " k=" + std::to_string(k);
        }
    }
  }
  out.push_back(detail::check("factory.step-inverts-st", step_inv, "Step(n-k)*St(k) != I at " + where));
  out.push_back(detail::check("factory.M-times-steps", m_inv, "M * prod Step != I"));
  out.push_back(detail::check("factory.ssteps-closed-form", ssteps,
                              "S*Step(k)*S != (-1)^{n+1} * closed form at " + where));

  // n=3 goldens with exact symbols x = z_1, y = z_2, X = X_{0,0,0}.
  const RatC x{Rat(3, 2)}, y{Rat(5, 7)}, X{Rat(7, 4), Rat(1, 3)};
  BasicTriangleInvariants<RatC> tri3{3, {{{0, 0, 0}, X}}};
  BasicEdgeInvariants<RatC> e3{3, {x, y}};
  auto mat3 = [](std::initializer_list<RatC> v) {
    Matrix<RatC> m(3, 3);
    std::size_t i = 0;
    for (const auto& c : v) {
      m(i / 3, i % 3) = c;
      ++i;
    }
    return m;
  };
  const RatC one{1}, zero{};
  const bool golden_M = build_M(tri3) == mat3({one, zero, zero, one, one, zero, one, one + X, X});
  const bool golden_T =
      build_T(tri3) == mat3({zero, zero, one, zero, -one, one, X, -(one + X), one});
  const bool golden_E = build_E(e3) == mat3({zero, zero, one, zero, -y, zero, x * y, zero, zero});
  BasicBuildingBlockSpec<RatC> bp{+1, tri3, e3}, bm{-1, tri3, e3};
  const bool golden_bp =
      build_block(bp) ==
      mat3({x * y, zero, zero, x * y, y, zero, x * y, y * (one + X), X});
  const bool golden_bm =
      build_block(bm) ==
      mat3({x * y / X, y * (one + X) / X, one, zero, y, one, zero, zero, one});
  out.push_back(detail::check("factory.golden-n3-M", golden_M, "M(t) golden mismatch"));
  out.push_back(detail::check("factory.golden-n3-T", golden_T, "T(t) golden mismatch"));
  out.push_back(detail::check("factory.golden-n3-E", golden_E, "E(e) golden mismatch"));
  out.push_back(detail::check("factory.golden-n3-block-plus", golden_bp, "T(t)E(e) golden mismatch"));
  out.push_back(
      detail::check("factory.golden-n3-block-minus", golden_bm, "T(t)^{-1}E(e) golden mismatch"));
  return out;
}

/// Networks: block/word weight-matrix equivalence, Lindström, positivity.
inline std::vector<CheckResult> verify_network(std::uint64_t seed = 2, int draws = 10) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);

  bool blocks = true, words = true;
  for (int n = 2; n <= 5 && blocks; ++n)
    for (int d = 0; d < draws; ++d) {
      BasicBuildingBlockSpec<RatC> spec{+1, random_rat_triangle(n, rng), random_rat_edge(n, rng)};
      if (!(weight_matrix(net_TE(spec)) == build_block(spec))) blocks = false;
      spec.delta = -1;
      if (!(weight_matrix(net_TinvE(spec)) == build_block(spec))) blocks = false;
    }
  out.push_back(detail::check("network.block-weight-matrix", blocks,
                              "weight matrix != building block (exact)"));
  for (int n = 2; n <= 4 && words; ++n)
    for (int d = 0; d < draws; ++d) {
      const auto w = random_rat_word(n, 4, rng);
      if (!(weight_matrix(net_word(w)) == monodromy(w))) words = false;
    }
  out.push_back(
      detail::check("network.word-weight-matrix", words, "weight matrix != monodromy (exact)"));

  bool linds = true;
  std::uniform_int_distribution<int> ord(2, 4), trans(1, 5);
  for (int d = 0; d < draws && linds; ++d) {
    const auto net = random_rat_network(ord(rng), trans(rng), rng);
    const auto W = weight_matrix(net);
    const std::size_t n = static_cast<std::size_t>(net.order);
    for (std::size_t k = 1; k <= std::min<std::size_t>(n, 3); ++k)
      for (const auto& I : k_subsets(n, k))
        for (const auto& J : k_subsets(n, k))
          if (!(lindstrom_minor(net, I, J) == minor_of(W, I, J))) linds = false;
  }
  out.push_back(detail::check("network.lindstrom", linds,
                              "path-family sum != weight-matrix minor (exact)"));

  // Fixed 3-track, 5-transition example with distinct labels a..i.
  {
    const RatC a{2}, b{3}, c{5}, d{7}, e{11}, f{13}, g{17}, h{19}, i{23}, one{1};
    RatPlanarNetwork net;
    net.order = 3;
    net.transitions = 5;
    auto E_ = [&](int l, int from, int to, RatC w) {
      net.edges.push_back({l, from, to, w});
    };
    E_(0, 0, 0, one); E_(0, 1, 1, one); E_(0, 2, 2, one); E_(0, 2, 1, a);
    E_(1, 0, 0, one); E_(1, 1, 1, one); E_(1, 2, 2, one); E_(1, 1, 0, b); E_(1, 2, 1, c);
    E_(2, 0, 0, d); E_(2, 1, 1, e); E_(2, 2, 2, f);
    E_(3, 0, 0, one); E_(3, 1, 1, one); E_(3, 2, 2, one); E_(3, 0, 1, h); E_(3, 1, 2, g);
    E_(4, 0, 0, one); E_(4, 1, 1, one); E_(4, 2, 2, one); E_(4, 1, 2, i);
    validate_network(net);
    Matrix<RatC> golden(3, 3);
    golden(0, 0) = d;
    golden(0, 1) = d * h;
    golden(0, 2) = d * h * i;
    golden(1, 0) = b * d;
    golden(1, 1) = b * d * h + e;
    golden(1, 2) = b * d * h * i + e * g + e * i;
    golden(2, 0) = a * b * d;
    golden(2, 1) = a * b * d * h + a * e + c * e;
    golden(2, 2) = a * b * d * h * i + e * (a + c) * (g + i) + f;
    const bool wm_ok = weight_matrix(net) == golden;
    const bool minor_ok = lindstrom_minor(net, {0, 1}, {1, 2}) == d * e * g * h;
    out.push_back(detail::check("network.figure-golden-weight", wm_ok,
                                "example weight matrix mismatch"));
    out.push_back(detail::check("network.figure-golden-minor", minor_ok,
                                "example minor != degh"));
  }

  // Positivity of positive-coordinate words.
  {
    ExperimentConfig cfg;
    cfg.seed = seed;
    bool tp_ok = true, tri_ok = true;
    for (int n = 2; n <= 4; ++n) {
      cfg.n = n;
      auto crng = sample_rng(cfg, 77);
      for (int d = 0; d < draws; ++d) {
        MonodromyWord w = bend_word(sample_word(cfg, crng));
        bool mixed = false;
        for (const auto& blk : w.blocks)
          if (blk.delta != w.blocks.front().delta) mixed = true;
        const auto m = monodromy(exact_word(w));
        if (mixed) {
          if (total_nonnegativity_check(m) != Positivity::TotallyPositive) tp_ok = false;
        } else {
          for (std::size_t r = 0; r < m.rows(); ++r) {
            if (!(m(r, r).re > 0) || m(r, r).im != 0) tri_ok = false;
            for (std::size_t cidx = 0; cidx < m.cols(); ++cidx)
              if ((w.blocks.front().delta == +1 ? r < cidx : r > cidx) &&
                  !m(r, cidx).is_zero())
                tri_ok = false;
          }
        }
      }
    }
    out.push_back(detail::check("network.total-positivity", tp_ok,
                                "mixed-delta positive word not totally positive"));
    out.push_back(detail::check("network.same-delta-triangular", tri_ok,
                                "same-delta word not triangular with positive diagonal"));
  }
  return out;
}

/// Flag ratio conventions: explicit triple-ratio configuration and the n=2
/// cross-ratio reduction.
inline std::vector<CheckResult> verify_flags(std::uint64_t seed = 3, int draws = 100) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);

  bool triple = true;
  for (Cplx X : {Cplx{2, 0}, Cplx{-1, 1}, Cplx{0.1, 0}}) {
    const Flag A = Flag::from_basis({{0, 0, 1}, {1, -X, 0}, {0, 1, 0}});
    const Flag B = Flag::from_basis({{1, 0, 1}, {0, 1, 0}, {0, 0, 1}});
    const Flag C = Flag::from_basis({{0, 1, 1}, {1, 0, 0}, {0, 0, 1}});
    if (std::abs(triple_ratio(A, B, C, 1, 1, 1) - X) > 1e-10) triple = false;
  }
  out.push_back(detail::check("flags.triple-ratio-golden", triple,
                              "T_111 != X on the point/line configuration"));

  bool cross = true;
  std::uniform_real_distribution<double> u(-3.0, 3.0);
  for (int d = 0; d < draws && cross; ++d) {
    Cplx z[4];
    for (auto& v : z) v = {u(rng), u(rng)};
    bool distinct = true;
    for (int i = 0; i < 4; ++i)
      for (int j = i + 1; j < 4; ++j)
        if (std::abs(z[i] - z[j]) < 1e-3) distinct = false;
    if (!distinct) continue;
    auto fl = [](Cplx v) { return Flag::from_basis({{v, 1}, {1, 0}}); };
    const Cplx got = double_ratio(fl(z[0]), fl(z[1]), fl(z[2]), fl(z[3]), 1);
    const Cplx expect =
        (z[0] - z[2]) * (z[1] - z[3]) / ((z[0] - z[3]) * (z[1] - z[2]));
    if (std::abs(got - expect) > 1e-9 * std::max(1.0, std::abs(expect))) cross = false;
  }
  out.push_back(detail::check("flags.cross-ratio-n2", cross,
                              "double ratio != classical cross ratio at n=2"));

  bool degen = true;
  {
    const Flag A = Flag::from_basis({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}});
    const Flag B = Flag::from_basis({{1, 0, 0}, {0, 0, 1}, {0, 1, 0}});  // shares a line with A
    const Flag C = Flag::from_basis({{0, 0, 1}, {0, 1, 0}, {1, 0, 0}});
    if (general_position_check(A, B, C).ok) degen = false;
    try {
      (void)triple_ratio(A, B, C, 1, 1, 1);
      degen = false;  // must throw DegenerateConfiguration
    } catch (const DegenerateConfiguration&) {
    }
  }
  out.push_back(detail::check("flags.degenerate-detection", degen,
                              "degenerate configuration not rejected"));
  return out;
}

/// Spectral: eigen-moduli goldens, Weyl majorant chain, Collatz–Wielandt.
inline std::vector<CheckResult> verify_spectral(std::uint64_t seed = 4, int draws = 100) {
  std::vector<CheckResult> out;
  std::mt19937_64 rng(seed);

  bool goldens = true;
  {
    Matrix<Cplx> d3(3, 3);
    d3(0, 0) = {0, 2};
    d3(1, 1) = 1;
    d3(2, 2) = Cplx{1, 0} / Cplx{0, 2};
    const auto em = eigen_moduli(d3);
    if (std::abs(em.moduli[0] - 0.5) > 1e-12 || std::abs(em.moduli[1] - 1.0) > 1e-12 ||
        std::abs(em.moduli[2] - 2.0) > 1e-12 || em.clustered)
      goldens = false;
    Matrix<Cplx> s2(2, 2);
    s2(0, 0) = s2(1, 1) = 2;
    s2(0, 1) = s2(1, 0) = 1;
    const auto em2 = eigen_moduli(s2);
    if (std::abs(em2.moduli[0] - 1.0) > 1e-12 || std::abs(em2.moduli[1] - 3.0) > 1e-12)
      goldens = false;
    Matrix<Cplx> nil(2, 2);
    nil(0, 0) = nil(1, 1) = nil(0, 1) = 1;
    if (std::abs(spectral_radius(nil) - 1.0) > 1e-12) goldens = false;
  }
  out.push_back(detail::check("spectral.golden-moduli", goldens, "eigen-moduli golden mismatch"));

  bool weyl = true, det_ok = true;
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  for (int d = 0; d < draws && weyl; ++d) {
    const std::size_t n = 2 + static_cast<std::size_t>(d % 5);
    Matrix<Cplx> m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m(i, j) = {u(rng), u(rng)};
    EigenModuli em;
    try {
      em = eigen_moduli(m);
    } catch (const std::domain_error&) {
      continue;
    }
    if (em.clustered) continue;
    const auto lm = log_moduli(em);
    std::vector<double> ls;
    for (double v : singular_values(m)) ls.push_back(std::log(v));
    double sum_l2 = 0, sum_s2 = 0, sum_l = 0, sum_s = 0;
    for (double v : lm) sum_l2 += v * v, sum_l += v;
    for (double v : ls) sum_s2 += v * v, sum_s += v;
    if (sum_l2 > sum_s2 + 1e-8) weyl = false;
    if (!weak_majorization(lm, ls, 1e-8)) weyl = false;
    if (std::abs(sum_l - sum_s) > 1e-6 * std::max(1.0, std::abs(sum_s))) det_ok = false;
  }
  out.push_back(detail::check("spectral.weyl-majorant", weyl,
                              "log-moduli not weakly majorized by log-singular-values"));
  out.push_back(detail::check("spectral.det-consistency", det_ok,
                              "sum log-moduli != sum log-singular-values"));

  bool cw = true;
  for (int d = 0; d < draws && cw; ++d) {
    Matrix<Cplx> m(3, 3);
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) m(i, j) = {std::abs(u(rng)) + 0.1, 0.0};
    std::vector<double> x{std::abs(u(rng)) + 0.1, std::abs(u(rng)) + 0.1,
                          std::abs(u(rng)) + 0.1};
    if (collatz_wielandt_bound(m, x) > spectral_radius(m) + 1e-9) cw = false;
  }
  out.push_back(detail::check("spectral.collatz-wielandt", cw,
                              "Collatz-Wielandt bound exceeds spectral radius"));
  return out;
}

/// Surfaces: builtin triangulations, peripheral triangularity and equality.
inline std::vector<CheckResult> verify_surface(std::uint64_t seed = 5) {
  std::vector<CheckResult> out;
  const std::vector<std::string> names{"once-punctured-torus", "thrice-punctured-sphere",
                                       "four-punctured-sphere"};
  bool builtins = true;
  std::string why;
  for (const auto& name : names) {
    try {
      const auto tri = builtin_triangulation(name);
      if (tri.count_punctures() != tri.punctures) {
        builtins = false;
        why = name + ": puncture count mismatch";
      }
      if (static_cast<int>(peripheral_walks(tri).size()) != tri.punctures) {
        builtins = false;
        why = name + ": walk count mismatch";
      }
    } catch (const std::exception& e) {
      builtins = false;
      why = name + ": " + e.what();
    }
  }
  out.push_back(detail::check("surface.builtins", builtins, why));

  bool peripheral = true;
  for (const auto& name : names) {
    const auto tri = builtin_triangulation(name);
    ExperimentConfig cfg;
    cfg.n = 3;
    cfg.seed = seed;
    auto rng = sample_rng(cfg, 0);
    FGCoordinates coords;
    coords.n = 3;
    coords.genus = tri.genus;
    coords.punctures = tri.punctures;
    coords.triangulation_ref = name;
    for (int t = 0; t < tri.num_triangles; ++t)
      coords.triangle_data[t] = sample_triangle(cfg, rng);
    for (int e = 0; e < tri.num_edges(); ++e)
      coords.edge_data[oriented_edge_id(e, true)] = sample_edge(cfg, rng);
    coords = complete_orientations(coords, EdgeReversal::ZrToZnr);
    if (!validate(coords).ok()) peripheral = false;
    for (const auto& walk : peripheral_walks(tri)) {
      const auto word = compile(walk, tri, coords);
      const auto m = monodromy_scaled(word).matrix;
      for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = i + 1; j < m.cols(); ++j)
          if (std::abs(m(i, j)) > 1e-9 * std::abs(m(i, i))) peripheral = false;
      const auto c1 = centered_logs(word_log_moduli(word).logs);
      const auto c0 = centered_logs(word_log_moduli(bend_word(word)).logs);
      for (std::size_t i = 0; i < c1.size(); ++i)
        if (std::abs(c1[i] - c0[i]) > 1e-9) peripheral = false;
    }
  }
  out.push_back(detail::check("surface.peripheral-equality", peripheral,
                              "peripheral word not triangular or lengths changed by bending"));
  return out;
}

/// Harness smoke: small domination runs must have zero failures and be
/// deterministic across thread counts.
inline std::vector<CheckResult> verify_harness(std::uint64_t seed = 6) {
  std::vector<CheckResult> out;
  bool domination = true, determinism = true;
  std::string why;
  for (int n = 2; n <= 4; ++n) {
    ExperimentConfig cfg;
    cfg.n = n;
    cfg.samples = 50;
    cfg.seed = seed;
    const auto res1 = run_experiment(cfg, 1);
    const auto res4 = run_experiment(cfg, 4);
    if (res1.failures != 0) {
      domination = false;
      why = "n=" + std::to_string(n) + ": " + std::to_string(res1.failures) + " failures";
    }
    if (domination_csv({res1}) != domination_csv({res4})) determinism = false;
  }
  out.push_back(detail::check("harness.domination-smoke", domination, why));
  out.push_back(detail::check("harness.thread-determinism", determinism,
                              "reports differ across thread counts"));
  return out;
}

/// All suites, optionally filtered by module-name prefix
/// (factory, network, flags, spectral, surface, harness).
inline std::vector<CheckResult> run_all_verifications(const std::string& filter = "") {
  std::vector<CheckResult> all;
  auto add = [&](const std::string& module, std::vector<CheckResult> rs) {
    if (!filter.empty() && module.rfind(filter, 0) != 0) return;
    for (auto& r : rs) all.push_back(std::move(r));
  };
  add("factory", verify_factory());
  add("network", verify_network());
  add("flags", verify_flags());
  add("spectral", verify_spectral());
  add("surface", verify_surface());
  add("harness", verify_harness());
  return all;
}

}  // namespace fgdom
