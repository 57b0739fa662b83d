/**
 * @file harness.hpp
 * @brief Randomized domination experiments: word sampling, per-word length
 *        comparison against the positive (bent) representative, suite
 *        execution with a deterministic worker pool, and report generation.
 *
 * For a sampled word W with complex invariants, let ρ(W) be its monodromy and
 * ρ₀(W) the monodromy of the same word with every invariant replaced by its
 * modulus. Entrywise the positive weight matrix bounds the moduli of the
 * complex one, so ρ₀ dominates ρ; the checks per word are
 *   (i)   Hilbert length:       L(ρ) ≤ L(ρ₀),
 *   (ii)  translation length:   d(ρ) ≤ d(ρ₀),
 *   (iii) ℓ_k for every k,
 *   (iv)  weak majorization of the centered eigenvalue log-moduli of ρ by
 *         those of ρ₀,
 *   (v)   when every block has the same δ both monodromies are triangular
 *         with diagonal entries of equal modulus, so all lengths agree.
 *
 * Determinism: sample i of a run draws from an RNG seeded by a mix of the run
 * seed and i, and results are merged by sample index, so reports are
 * byte-identical for any worker-thread count.
 */

#pragma once

#include <atomic>
#include <cstdint>
#include <cstdio>
#include <cstring>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "fgdom/coords.hpp"
#include "fgdom/factory.hpp"
#include "fgdom/spectral.hpp"

namespace fgdom {

struct ToleranceSet {
  double length = 1e-7;      // slack allowed on each length inequality
  double crosscheck = 1e-6;  // eigen-moduli dual-path relative disagreement
};

struct ExperimentConfig {
  int n = 3;
  int word_len_min = 1;
  int word_len_max = 12;
  int samples = 1000;
  std::uint64_t seed = 0;
  double modulus_min = 0.2;   // invariant moduli drawn uniformly from this range
  double modulus_max = 5.0;   // (phases uniform on the circle)
  ToleranceSet tol;
  double conditioning_cutoff = 1e250;  // skip when eigen-modulus spread exceeds this
};

// ---------------------------------------------------------------------------
// Deterministic per-sample RNG
// ---------------------------------------------------------------------------

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace detail

/// RNG for sample `index` of a run: depends only on (seed, n, index).
inline std::mt19937_64 sample_rng(const ExperimentConfig& cfg, std::uint64_t index) {
  std::uint64_t s = detail::splitmix64(cfg.seed ^ 0x6c62272e07bb0142ULL);
  s = detail::splitmix64(s ^ static_cast<std::uint64_t>(cfg.n));
  s = detail::splitmix64(s ^ index);
  return std::mt19937_64(s);
}

// ---------------------------------------------------------------------------
// Sampling
// ---------------------------------------------------------------------------

inline Cplx sample_invariant(const ExperimentConfig& cfg, std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mod(cfg.modulus_min, cfg.modulus_max);
  std::uniform_real_distribution<double> phase(0.0, 2.0 * 3.14159265358979323846);
  const double m = mod(rng);
  const double t = phase(rng);
  return {m * std::cos(t), m * std::sin(t)};
}

inline TriangleInvariants sample_triangle(const ExperimentConfig& cfg, std::mt19937_64& rng) {
  TriangleInvariants tri;
  tri.n = cfg.n;
  for (int i = 0; i <= cfg.n - 3; ++i)
    for (int j = 0; i + j <= cfg.n - 3; ++j)
      tri.values[{i, j, cfg.n - 3 - i - j}] = sample_invariant(cfg, rng);
  return tri;
}

inline EdgeInvariants sample_edge(const ExperimentConfig& cfg, std::mt19937_64& rng) {
  EdgeInvariants e;
  e.n = cfg.n;
  for (int r = 1; r < cfg.n; ++r) e.z.push_back(sample_invariant(cfg, rng));
  return e;
}

/// A random word: length uniform in [word_len_min, word_len_max], each block
/// an independent δ ∈ {+1,−1} with fresh triangle and edge invariants.
inline MonodromyWord sample_word(const ExperimentConfig& cfg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> len_dist(cfg.word_len_min, cfg.word_len_max);
  std::uniform_int_distribution<int> delta_dist(0, 1);
  MonodromyWord w;
  const int len = len_dist(rng);
  for (int b = 0; b < len; ++b) {
    BuildingBlockSpec blk;
    blk.delta = delta_dist(rng) == 0 ? +1 : -1;
    blk.triangle = sample_triangle(cfg, rng);
    blk.edge = sample_edge(cfg, rng);
    w.blocks.push_back(std::move(blk));
  }
  return w;
}

// ---------------------------------------------------------------------------
// Eigen log-moduli of a word's monodromy via the compound-product ladder
// ---------------------------------------------------------------------------

/// Log-moduli of the eigenvalues of ρ(word), ascending.
///
/// For words of realistic length the eigen-modulus spread exceeds what any
/// double-precision copy of the product matrix can carry (the small
/// eigenvalues drown in entry-rounding noise ~ε‖ρ‖), so the moduli are read
/// off the exterior-power partial products instead, evaluated
/// MULTIPLICATIVELY: ∧^k(B_m⋯B_1) = ∧^k(B_m)⋯∧^k(B_1), where each block
/// compound is a small, mildly conditioned double matrix and every
/// intermediate product is max-entry rescaled in log space. With
/// s_k = ln σ(∧^k ρ) = Σ of the top k log-moduli, the descending log-moduli
/// are the differences s_k − s_{k−1}.
///
/// Cross-check: the same ladder runs on the inverse word
/// (∧^k(B⁻¹) = (∧^k B)⁻¹), giving t_k = ln σ(∧^k ρ⁻¹) = −(Σ of the bottom k
/// log-moduli); s_k + t_{n−k} = ln|det ρ| must close for every k, and the
/// differences s_k − s_{k−1} must be non-increasing. Any failure sets
/// `clustered` (the sample is to be skipped, never silently passed).
struct WordLogModuli {
  std::vector<double> logs;  // ascending; logs of the raw (unnormalized) ρ
  bool clustered = false;
};

inline WordLogModuli word_log_moduli(const MonodromyWord& word, double crosscheck_tol = 1e-6) {
  if (word.blocks.empty()) throw std::invalid_argument("word_log_moduli: empty word");
  const int n = word.blocks.front().triangle.n;
  const std::size_t m = word.blocks.size();

  // Per-block compounds and their inverses, as Eigen matrices.
  std::vector<std::vector<Eigen::MatrixXcd>> comp(m), icomp(m);
  for (std::size_t b = 0; b < m; ++b) {
    const Matrix<Cplx> block = build_block(word.blocks[b]);
    for (int k = 1; k <= n; ++k) {
      Eigen::MatrixXcd c = to_eigen(exterior_power(block, static_cast<std::size_t>(k)));
      comp[b].push_back(c);
      icomp[b].push_back(c.inverse());
    }
  }

  auto top_log = [](const Eigen::MatrixXcd& p) {
    if (p.rows() == 1) return std::log(std::abs(p(0, 0)));
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(p, /*computeEigenvectors=*/false);
    if (solver.info() != Eigen::Success)
      throw std::runtime_error("word_log_moduli: eigensolver failed to converge");
    return std::log(solver.eigenvalues().cwiseAbs().maxCoeff());
  };

  // s[k] = ln σ(∧^k ρ), ρ = B_{m−1}⋯B_0; t[k] = ln σ(∧^k ρ⁻¹).
  std::vector<double> s(static_cast<std::size_t>(n) + 1, 0.0);
  std::vector<double> t(static_cast<std::size_t>(n) + 1, 0.0);
  for (int k = 1; k <= n; ++k) {
    const std::size_t ki = static_cast<std::size_t>(k) - 1;
    Eigen::MatrixXcd p = comp[0][ki];
    double log_scale = 0.0;
    auto rescale = [&](Eigen::MatrixXcd& q) {
      const double sc = q.cwiseAbs().maxCoeff();
      if (sc <= 0.0) throw std::domain_error("SingularMatrix: vanishing compound product");
      q /= sc;
      log_scale += std::log(sc);
    };
    rescale(p);
    for (std::size_t b = 1; b < m; ++b) {
      p = comp[b][ki] * p;
      rescale(p);
    }
    s[static_cast<std::size_t>(k)] = top_log(p) + log_scale;

    Eigen::MatrixXcd q = icomp[m - 1][ki];
    log_scale = 0.0;
    rescale(q);
    for (std::size_t b = m - 1; b-- > 0;) {
      q = icomp[b][ki] * q;
      rescale(q);
    }
    t[static_cast<std::size_t>(k)] = top_log(q) + log_scale;
  }

  WordLogModuli result;
  // Determinant closure: t_{n−k} = −(Σ bottom n−k log-moduli), so
  // s_k − t_{n−k} = ln|det ρ| = s_n = −t_n for every k.
  const double log_det = s[static_cast<std::size_t>(n)];
  const double atol = crosscheck_tol * std::max(1.0, std::abs(log_det));
  if (std::abs(log_det + t[static_cast<std::size_t>(n)]) > atol) result.clustered = true;
  for (int k = 1; k < n && !result.clustered; ++k)
    if (std::abs(s[static_cast<std::size_t>(k)] - t[static_cast<std::size_t>(n - k)] -
                 log_det) > atol)
      result.clustered = true;
  for (int k = 1; k <= n; ++k)
    result.logs.push_back(s[static_cast<std::size_t>(k)] - s[static_cast<std::size_t>(k) - 1]);
  // The differences are the descending log-moduli; tolerate rounding-level
  // inversions, flag real ones.
  for (std::size_t i = 0; i + 1 < result.logs.size(); ++i)
    if (result.logs[i] < result.logs[i + 1] - atol) result.clustered = true;
  std::reverse(result.logs.begin(), result.logs.end());
  std::sort(result.logs.begin(), result.logs.end());
  return result;
}

// ---------------------------------------------------------------------------
// Per-word domination check
// ---------------------------------------------------------------------------

struct LengthReport {
  double hilbert = 0.0;
  double translation = 0.0;
  std::vector<double> lks;
  std::vector<double> gaps;
  EigenModuli moduli;
  std::vector<double> centered_logs;  // ascending, sum 0
};

inline LengthReport length_report(const EigenModuli& em) {
  LengthReport out;
  out.hilbert = hilbert_length(em);
  out.translation = translation_length(em);
  out.lks = lk_lengths(em);
  out.gaps = gap_lengths(em);
  out.moduli = em;
  out.centered_logs = centered_log_moduli(em);
  return out;
}

/// Length report from ascending log-moduli. The stored moduli are those of
/// the scale-normalized (centered-log) representative so that they stay
/// representable for words whose raw product is astronomically scaled; every
/// length functional is scale-invariant, so nothing else changes.
inline LengthReport length_report_logs(const std::vector<double>& logs) {
  LengthReport out;
  out.hilbert = hilbert_length_logs(logs);
  out.translation = translation_length_logs(logs);
  out.lks = lk_lengths_logs(logs);
  out.gaps = gap_lengths_logs(logs);
  out.centered_logs = centered_logs(logs);
  for (double v : out.centered_logs) out.moduli.moduli.push_back(std::exp(v));
  return out;
}

/// Order-sensitive FNV-1a digest of a word's structure and coordinate bits;
/// identical words (bit-for-bit invariants and δ signs) share a digest.
inline std::uint64_t word_digest(const MonodromyWord& word) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  auto mix = [&h](std::uint64_t v) {
    for (int byte = 0; byte < 8; ++byte) {
      h ^= (v >> (8 * byte)) & 0xffULL;
      h *= 0x100000001b3ULL;
    }
  };
  auto mix_double = [&](double d) {
    std::uint64_t bits;
    static_assert(sizeof(bits) == sizeof(d));
    std::memcpy(&bits, &d, sizeof(bits));
    mix(bits);
  };
  for (const auto& b : word.blocks) {
    mix(static_cast<std::uint64_t>(static_cast<std::int64_t>(b.delta)));
    for (const auto& [idx, v] : b.triangle.values) {
      mix(static_cast<std::uint64_t>(idx[0]) << 16 | static_cast<std::uint64_t>(idx[1]) << 8 |
          static_cast<std::uint64_t>(idx[2]));
      mix_double(v.real());
      mix_double(v.imag());
    }
    for (const auto& z : b.edge.z) {
      mix_double(z.real());
      mix_double(z.imag());
    }
  }
  return h;
}

struct DominationRecord {
  std::uint64_t index = 0;
  std::uint64_t digest = 0;
  int word_len = 0;
  bool all_delta_equal = false;
  bool skipped = false;
  std::string skip_reason;
  LengthReport rho;   // complex invariants
  LengthReport rho0;  // moduli (positive representative)
  bool hilbert_ok = false;
  bool translation_ok = false;
  bool lk_ok = false;
  bool majorization_ok = false;
  bool equality_ok = true;  // only meaningful when all_delta_equal
  double max_violation = 0.0;

  bool ok() const {
    return skipped ||
           (hilbert_ok && translation_ok && lk_ok && majorization_ok && equality_ok);
  }
};

/// Evaluate the domination verdicts (i)–(v) for one word. Words whose
/// eigen-moduli fail the dual-path cross-check or whose modulus spread
/// exceeds the conditioning cutoff are marked skipped, not failed.
inline DominationRecord check_domination(const MonodromyWord& word, const ExperimentConfig& cfg) {
  DominationRecord rec;
  rec.digest = word_digest(word);
  rec.word_len = static_cast<int>(word.blocks.size());
  rec.all_delta_equal = true;
  for (const auto& b : word.blocks)
    if (b.delta != word.blocks.front().delta) rec.all_delta_equal = false;

  WordLogModuli wm, wm0;
  try {
    wm = word_log_moduli(word, cfg.tol.crosscheck);
    wm0 = word_log_moduli(bend_word(word), cfg.tol.crosscheck);
  } catch (const std::exception& e) {
    rec.skipped = true;
    rec.skip_reason = e.what();
    return rec;
  }
  if (wm.clustered || wm0.clustered) {
    rec.skipped = true;
    rec.skip_reason = "ClusteredSpectrum: dual-path cross-check disagreed";
    return rec;
  }
  const double log_cutoff = std::log(cfg.conditioning_cutoff);
  if (wm.logs.back() - wm.logs.front() > log_cutoff ||
      wm0.logs.back() - wm0.logs.front() > log_cutoff) {
    rec.skipped = true;
    rec.skip_reason = "IllConditioned: eigen-modulus spread beyond cutoff";
    return rec;
  }

  rec.rho = length_report_logs(wm.logs);
  rec.rho0 = length_report_logs(wm0.logs);
  const double tol = cfg.tol.length;
  auto note = [&](double violation) {
    if (violation > rec.max_violation) rec.max_violation = violation;
  };

  rec.hilbert_ok = rec.rho.hilbert <= rec.rho0.hilbert + tol;
  note(rec.rho.hilbert - rec.rho0.hilbert);
  rec.translation_ok = rec.rho.translation <= rec.rho0.translation + tol;
  note(rec.rho.translation - rec.rho0.translation);
  rec.lk_ok = true;
  for (std::size_t k = 0; k < rec.rho.lks.size(); ++k) {
    if (rec.rho.lks[k] > rec.rho0.lks[k] + tol) rec.lk_ok = false;
    note(rec.rho.lks[k] - rec.rho0.lks[k]);
  }
  rec.majorization_ok = weak_majorization(rec.rho.centered_logs, rec.rho0.centered_logs, tol);
  if (rec.all_delta_equal) {
    rec.equality_ok = std::abs(rec.rho0.hilbert - rec.rho.hilbert) <= tol &&
                      std::abs(rec.rho0.translation - rec.rho.translation) <= tol;
    for (std::size_t k = 0; k < rec.rho.lks.size(); ++k)
      if (std::abs(rec.rho0.lks[k] - rec.rho.lks[k]) > tol) rec.equality_ok = false;
  }
  return rec;
}

// ---------------------------------------------------------------------------
// Suite execution
// ---------------------------------------------------------------------------

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<DominationRecord> records;  // by sample index
  std::size_t skipped = 0;
  std::size_t failures = 0;
  std::size_t equality_cases = 0;
  double max_violation = 0.0;

  bool ok() const { return failures == 0; }
};

/// Run one experiment. `threads` workers pull sample indices from a shared
/// counter; every sample is independent and deterministic in (seed, n, index),
/// and records land in their index slot, so the result does not depend on the
/// thread count.
inline ExperimentResult run_experiment(const ExperimentConfig& cfg, int threads = 1) {
  ExperimentResult result;
  result.config = cfg;
  result.records.resize(static_cast<std::size_t>(cfg.samples));
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1);
      if (i >= static_cast<std::uint64_t>(cfg.samples)) break;
      auto rng = sample_rng(cfg, i);
      const MonodromyWord word = sample_word(cfg, rng);
      DominationRecord rec = check_domination(word, cfg);
      rec.index = i;
      result.records[i] = std::move(rec);
    }
  };
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& rec : result.records) {
    if (rec.skipped) ++result.skipped;
    else if (!rec.ok()) ++result.failures;
    if (!rec.skipped && rec.all_delta_equal) ++result.equality_cases;
    if (!rec.skipped && rec.max_violation > result.max_violation)
      result.max_violation = rec.max_violation;
  }
  return result;
}

/// Run experiments for several ranks with a shared base configuration.
inline std::vector<ExperimentResult> run_suite(const ExperimentConfig& base,
                                               const std::vector<int>& ranks, int threads = 1) {
  std::vector<ExperimentResult> out;
  for (int n : ranks) {
    ExperimentConfig cfg = base;
    cfg.n = n;
    out.push_back(run_experiment(cfg, threads));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Gap (non-)domination search
// ---------------------------------------------------------------------------

struct GapViolation {
  std::uint64_t index = 0;     // sample index under (seed, n)
  std::size_t gap = 0;         // which ℓ^i, 0-based
  double gap_rho = 0.0;
  double gap_rho0 = 0.0;
  MonodromyWord word;
};

/// Search for a word whose original monodromy has a strictly larger gap
/// ℓ^i = ln(|λ_{i+1}|/|λ_i|) than its bent representative — a counterexample
/// to entrywise gap domination (which, unlike the ℓ_k family, fails).
/// `margin` demands a robust violation so that the stored sample index
/// re-verifies deterministically.
inline std::optional<GapViolation> search_gap_violation(const ExperimentConfig& cfg,
                                                        double margin = 1e-4) {
  for (std::uint64_t i = 0; i < static_cast<std::uint64_t>(cfg.samples); ++i) {
    auto rng = sample_rng(cfg, i);
    const MonodromyWord word = sample_word(cfg, rng);
    const DominationRecord rec = check_domination(word, cfg);
    if (rec.skipped) continue;
    for (std::size_t g = 0; g < rec.rho.gaps.size(); ++g) {
      if (rec.rho.gaps[g] > rec.rho0.gaps[g] + margin) {
        GapViolation v;
        v.index = i;
        v.gap = g;
        v.gap_rho = rec.rho.gaps[g];
        v.gap_rho0 = rec.rho0.gaps[g];
        v.word = word;
        return v;
      }
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

/// Shortest-exact decimal form of a double; locale-independent, identical
/// across runs and thread counts.
inline std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

inline const char* kDominationCsvHeader =
    "n,sample,word_len,all_delta_equal,skipped,"
    "hilbert_rho,hilbert_rho0,translation_rho,translation_rho0,"
    "lk_ok,majorization_ok,max_violation,ok";

/// One CSV row per sample, in sample-index order (see header above).
inline std::string domination_csv(const std::vector<ExperimentResult>& results) {
  std::string out = kDominationCsvHeader;
  out += "\n";
  for (const auto& res : results) {
    for (const auto& rec : res.records) {
      out += std::to_string(res.config.n) + "," + std::to_string(rec.index) + "," +
             std::to_string(rec.word_len) + "," + (rec.all_delta_equal ? "1" : "0") + "," +
             (rec.skipped ? "1" : "0") + ",";
      if (rec.skipped) {
        out += ",,,,,,";
      } else {
        out += format_double(rec.rho.hilbert) + "," + format_double(rec.rho0.hilbert) + "," +
               format_double(rec.rho.translation) + "," + format_double(rec.rho0.translation) +
               "," + (rec.lk_ok ? "1" : "0") + "," + (rec.majorization_ok ? "1" : "0") + "," +
               format_double(rec.max_violation);
      }
      out += std::string(",") + (rec.ok() ? "1" : "0") + "\n";
    }
  }
  return out;
}

}  // namespace fgdom
