/**
 * @file test_harness.cpp
 * @brief Experiment engine: deterministic sampling, the compound-product
 *        ladder for word log-moduli, domination records, report formats,
 *        and the gap counterexample search.
 */

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fgdom/harness.hpp"
#include "fgdom/io.hpp"
#include "fgdom/verify.hpp"

using namespace fgdom;

TEST_CASE("per-sample RNG: same (seed, n, index) gives the same word") {
  ExperimentConfig cfg;
  cfg.n = 4;
  cfg.seed = 12345;
  auto r1 = sample_rng(cfg, 9);
  auto r2 = sample_rng(cfg, 9);
  const auto w1 = sample_word(cfg, r1);
  const auto w2 = sample_word(cfg, r2);
  CHECK(word_digest(w1) == word_digest(w2));
  auto r3 = sample_rng(cfg, 10);
  const auto w3 = sample_word(cfg, r3);
  CHECK(word_digest(w3) != word_digest(w1));
}

TEST_CASE("bend_word replaces every invariant by its modulus and keeps deltas") {
  ExperimentConfig cfg;
  cfg.n = 3;
  auto rng = sample_rng(cfg, 3);
  const auto w = sample_word(cfg, rng);
  const auto b = bend_word(w);
  REQUIRE(b.blocks.size() == w.blocks.size());
  for (std::size_t i = 0; i < w.blocks.size(); ++i) {
    CHECK(b.blocks[i].delta == w.blocks[i].delta);
    for (const auto& [idx, v] : b.blocks[i].triangle.values) {
      CHECK(v.imag() == 0.0);
      CHECK(v.real() == doctest::Approx(std::abs(w.blocks[i].triangle.values.at(idx))));
    }
    for (std::size_t r = 0; r < b.blocks[i].edge.z.size(); ++r)
      CHECK(b.blocks[i].edge.z[r] == Cplx{std::abs(w.blocks[i].edge.z[r]), 0.0});
  }
}

TEST_CASE("word ladder agrees with direct eigen-moduli on short words") {
  ExperimentConfig cfg;
  for (int n = 2; n <= 5; ++n) {
    cfg.n = n;
    cfg.word_len_min = 1;
    cfg.word_len_max = 4;
    auto rng = sample_rng(cfg, 17);
    for (int d = 0; d < 10; ++d) {
      const auto w = sample_word(cfg, rng);
      const auto ladder = word_log_moduli(w);
      if (ladder.clustered) continue;
      EigenModuli em;
      try {
        em = eigen_moduli(monodromy_scaled(w).matrix);
      } catch (const std::domain_error&) {
        continue;
      }
      if (em.clustered) continue;
      const auto direct = centered_logs(log_moduli(em));
      const auto vialadder = centered_logs(ladder.logs);
      REQUIRE(direct.size() == vialadder.size());
      for (std::size_t i = 0; i < direct.size(); ++i)
        CHECK(vialadder[i] == doctest::Approx(direct[i]).epsilon(1e-6));
    }
  }
}

TEST_CASE("ladder logs are ascending and sum to the log-determinant rate") {
  ExperimentConfig cfg;
  cfg.n = 4;
  cfg.word_len_max = 20;
  auto rng = sample_rng(cfg, 19);
  const auto w = sample_word(cfg, rng);
  const auto ladder = word_log_moduli(w);
  for (std::size_t i = 0; i + 1 < ladder.logs.size(); ++i)
    CHECK(ladder.logs[i] <= ladder.logs[i + 1] + 1e-12);
}

TEST_CASE("domination records: verdicts and equality on all-same-delta words") {
  ExperimentConfig cfg;
  cfg.n = 3;
  cfg.seed = 2024;
  auto rng = sample_rng(cfg, 1);
  MonodromyWord w;
  for (int b = 0; b < 4; ++b)
    w.blocks.push_back({+1, sample_triangle(cfg, rng), sample_edge(cfg, rng)});
  const auto rec = check_domination(w, cfg);
  REQUIRE_FALSE(rec.skipped);
  CHECK(rec.all_delta_equal);
  CHECK(rec.ok());
  CHECK(rec.rho.hilbert == doctest::Approx(rec.rho0.hilbert).epsilon(1e-9));
  CHECK(rec.rho.translation == doctest::Approx(rec.rho0.translation).epsilon(1e-9));
}

TEST_CASE("experiment merge is independent of thread count, reports byte-equal") {
  ExperimentConfig cfg;
  cfg.n = 3;
  cfg.samples = 64;
  cfg.seed = 77;
  const auto a = run_experiment(cfg, 1);
  const auto b = run_experiment(cfg, 8);
  CHECK(a.failures == 0);
  CHECK(domination_csv({a}) == domination_csv({b}));
  CHECK(domination_report_json({a}).dump() == domination_report_json({b}).dump());
  // The CSV column order is frozen.
  CHECK(domination_csv({a}).rfind(kDominationCsvHeader, 0) == 0);
}

TEST_CASE("skip accounting: an absurd conditioning cutoff skips, never passes") {
  ExperimentConfig cfg;
  cfg.n = 4;
  cfg.samples = 20;
  cfg.seed = 5;
  cfg.word_len_min = 15;
  cfg.word_len_max = 30;
  cfg.conditioning_cutoff = 1.5;  // spread bound e^{cutoff-log} ~ tiny
  const auto res = run_experiment(cfg, 1);
  CHECK(res.failures == 0);
  CHECK(res.skipped > 0);
  for (const auto& rec : res.records)
    if (rec.skipped) CHECK_FALSE(rec.skip_reason.empty());
}

TEST_CASE("gap search: none at n=2, deterministic witness at n=3") {
  ExperimentConfig cfg2;
  cfg2.n = 2;
  cfg2.samples = 300;
  cfg2.seed = 11;
  CHECK_FALSE(search_gap_violation(cfg2).has_value());

  ExperimentConfig cfg3;
  cfg3.n = 3;
  cfg3.samples = 2000;
  cfg3.seed = 11;
  cfg3.word_len_min = 2;
  cfg3.word_len_max = 6;
  const auto v = search_gap_violation(cfg3);
  REQUIRE(v.has_value());
  CHECK(v->gap_rho > v->gap_rho0);
  // Re-verify from the stored sample index alone.
  auto rng = sample_rng(cfg3, v->index);
  const auto word = sample_word(cfg3, rng);
  CHECK(word_digest(word) == word_digest(v->word));
  const auto rec = check_domination(word, cfg3);
  REQUIRE_FALSE(rec.skipped);
  CHECK(rec.rho.gaps[v->gap] == doctest::Approx(v->gap_rho));
  CHECK(rec.rho0.gaps[v->gap] == doctest::Approx(v->gap_rho0));
}

TEST_CASE("verification suite: harness smoke and determinism") {
  for (const auto& r : verify_harness(/*seed=*/106)) {
    INFO(r.name, ": ", r.detail);
    CHECK(r.passed);
  }
}
