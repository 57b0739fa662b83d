/**
 * @file cli.cpp
 * @brief Implementation of the command-line front end (see cli.hpp).
 */

#include "fgdom/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

#include "fgdom/factory.hpp"
#include "fgdom/harness.hpp"
#include "fgdom/io.hpp"
#include "fgdom/network.hpp"
#include "fgdom/surface.hpp"
#include "fgdom/verify.hpp"

namespace fgdom {

namespace {

EdgeReversal parse_reversal(const std::string& s) {
  if (s == "zr-to-znr") return EdgeReversal::ZrToZnr;
  if (s == "independent") return EdgeReversal::Independent;
  throw std::invalid_argument("--edge-reversal must be zr-to-znr or independent");
}

int cmd_monodromy(const std::string& coords_path, const std::string& walk_path,
                  const std::string& reversal, const std::string& out_path) {
  FGCoordinates coords = coords_from_json(load_json_file(coords_path));
  const IdealTriangulation tri = builtin_triangulation(coords.triangulation_ref);
  coords = complete_orientations(coords, parse_reversal(reversal));
  const auto report = validate(coords);
  if (!report.ok())
    throw std::invalid_argument("invalid coordinates: " + report.issues.front().code + " at " +
                                report.issues.front().address);
  if (static_cast<int>(coords.triangle_data.size()) != tri.num_triangles)
    throw std::invalid_argument("coordinates/triangulation mismatch: triangle count");
  const CurveWalk walk = walk_from_json(load_json_file(walk_path));
  const MonodromyWord word = compile(walk, tri, coords);
  const ScaledMatrix rho = monodromy_scaled(word);
  const auto ladder = word_log_moduli(word);

  json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = coords.n;
  j["word_length"] = word.blocks.size();
  j["matrix"] = matrix_to_json(rho.matrix);
  j["log_scale"] = rho.log_scale;
  j["lengths"] = length_report_to_json(length_report_logs(ladder.logs));
  j["spectrum_clustered"] = ladder.clustered;
  const std::string text = j.dump(2) + "\n";
  if (out_path.empty()) std::cout << text;
  else save_text_file(out_path, text);
  return 0;
}

int cmd_network(const std::string& word_path, const std::string& out_prefix) {
  const MonodromyWord word = word_from_json(load_json_file(word_path));
  const PlanarNetwork net = net_word(word);
  if (!out_prefix.empty()) {
    save_text_file(out_prefix + ".json", network_to_json(net).dump(2) + "\n");
    save_text_file(out_prefix + ".dot", to_dot(net));
  }
  const Matrix<Cplx> W = weight_matrix(net);
  const Matrix<Cplx> R = monodromy(word);
  const bool match = projectively_equal(W, R, 1e-9);
  json j;
  j["schema_version"] = kSchemaVersion;
  j["order"] = net.order;
  j["transitions"] = net.transitions;
  j["edge_count"] = net.edges.size();
  j["weight_matrix"] = matrix_to_json(W);
  j["match_verdict"] = match ? "projective-equal" : "mismatch";
  std::cout << j.dump(2) << "\n";
  return match ? 0 : 1;
}

int cmd_dominate(const std::string& config_path, const std::vector<int>& rank_flags,
                 const ExperimentConfig& flag_overrides, const std::vector<bool>& flag_set,
                 int threads, std::string out_json, std::string out_csv,
                 const std::string& format) {
  ExperimentConfig base;
  std::vector<int> ranks{2, 3, 4, 5};
  if (!config_path.empty()) {
    const json cj = load_json_file(config_path);
    base = experiment_config_from_json(cj);
    if (cj.contains("ranks")) ranks = cj["ranks"].get<std::vector<int>>();
    if (cj.contains("threads")) threads = cj["threads"].get<int>();
    if (cj.contains("out_json")) out_json = cj["out_json"].get<std::string>();
    if (cj.contains("out_csv")) out_csv = cj["out_csv"].get<std::string>();
  }
  // Flag overrides win over the config file: seed, samples, word length, tol.
  if (flag_set[0]) base.seed = flag_overrides.seed;
  if (flag_set[1]) base.samples = flag_overrides.samples;
  if (flag_set[2]) base.word_len_max = flag_overrides.word_len_max;
  if (flag_set[3]) base.tol.length = flag_overrides.tol.length;
  if (!rank_flags.empty()) ranks = rank_flags;
  for (int n : ranks)
    if (n < 2) throw std::invalid_argument("ranks must be >= 2");
  if (threads < 1) throw std::invalid_argument("--threads must be >= 1");

  const auto results = run_suite(base, ranks, threads);
  const std::string json_text = domination_report_json(results).dump(2) + "\n";
  const std::string csv_text = domination_csv(results);
  if (!out_json.empty()) save_text_file(out_json, json_text);
  if (!out_csv.empty()) save_text_file(out_csv, csv_text);

  bool ok = true;
  if (format == "json") {
    std::cout << json_text;
  } else if (format == "csv") {
    std::cout << csv_text;
  }
  for (const auto& res : results) {
    if (format.empty())
      std::cout << "n=" << res.config.n << " samples=" << res.config.samples
                << " skipped=" << res.skipped << " failures=" << res.failures
                << " equality_cases=" << res.equality_cases
                << " max_violation=" << format_double(res.max_violation)
                << (res.ok() ? " OK" : " FAIL") << "\n";
    ok = ok && res.ok();
  }
  if (format.empty()) std::cout << (ok ? "dominate: PASS" : "dominate: FAIL") << "\n";
  return ok ? 0 : 1;
}

int cmd_verify(const std::string& filter, bool as_json) {
  const auto results = run_all_verifications(filter);
  if (results.empty()) throw std::invalid_argument("--filter matched no suite: " + filter);
  bool ok = true;
  if (as_json) {
    json j;
    j["schema_version"] = kSchemaVersion;
    json checks = json::array();
    for (const auto& r : results) {
      checks.push_back({{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
      ok = ok && r.passed;
    }
    j["checks"] = std::move(checks);
    j["ok"] = ok;
    std::cout << j.dump(2) << "\n";
  } else {
    for (const auto& r : results) {
      std::printf("%-40s %s%s%s\n", r.name.c_str(), r.passed ? "PASS" : "FAIL",
                  r.passed ? "" : "  ", r.passed ? "" : r.detail.c_str());
      ok = ok && r.passed;
    }
    std::cout << (ok ? "verify: PASS" : "verify: FAIL") << "\n";
  }
  return ok ? 0 : 1;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"Monodromy, planar networks, and length-spectrum domination experiments"};
  app.require_subcommand(1);

  // monodromy ---------------------------------------------------------------
  auto* mono = app.add_subcommand(
      "monodromy", "Monodromy matrix and length report of a curve on a surface");
  std::string coords_path, walk_path, mono_out;
  std::string reversal = "zr-to-znr";
  mono->add_option("--coords", coords_path, "coordinates JSON file")
      ->required()
      ->envname("FGDOM_COORDS");
  mono->add_option("--walk", walk_path, "curve walk JSON file")
      ->required()
      ->envname("FGDOM_WALK");
  mono->add_option("--edge-reversal", reversal,
                   "reverse-orientation edge rule: zr-to-znr | independent")
      ->envname("FGDOM_EDGE_REVERSAL");
  mono->add_option("--out", mono_out, "write JSON here instead of stdout");

  // dominate ----------------------------------------------------------------
  auto* dom = app.add_subcommand(
      "dominate", "Run the length-spectrum domination experiment batch");
  std::string dom_config, dom_out_json, dom_out_csv, dom_format;
  std::vector<int> dom_ranks;
  ExperimentConfig flag_cfg;
  int dom_threads = 1;
  dom->add_option("config", dom_config, "experiment config JSON (optional)");
  auto* oseed =
      dom->add_option("--seed", flag_cfg.seed, "base random seed")->envname("FGDOM_SEED");
  auto* osamples = dom->add_option("--samples", flag_cfg.samples, "samples per rank")
                       ->envname("FGDOM_SAMPLES");
  auto* owl = dom->add_option("--word-len", flag_cfg.word_len_max, "maximum word length")
                  ->envname("FGDOM_WORD_LEN");
  auto* otol = dom->add_option("--tol", flag_cfg.tol.length, "length-inequality slack")
                   ->envname("FGDOM_TOL");
  dom->add_option("--n", dom_ranks, "rank(s) n to test (repeatable)")->envname("FGDOM_N");
  dom->add_option("--threads", dom_threads, "worker threads")->envname("FGDOM_THREADS");
  dom->add_option("--out-json", dom_out_json, "JSON report path");
  dom->add_option("--out-csv", dom_out_csv, "CSV report path");
  dom->add_option("--format", dom_format, "also print the report to stdout: json | csv")
      ->check(CLI::IsMember({"json", "csv"}))
      ->envname("FGDOM_FORMAT");

  // network -----------------------------------------------------------------
  auto* netc = app.add_subcommand(
      "network", "Planar network of a word: JSON + DOT export and weight matrix");
  std::string word_path, net_out;
  netc->add_option("--word", word_path, "monodromy word JSON file")->required();
  netc->add_option("--out", net_out, "output prefix (writes <out>.json and <out>.dot)");

  // verify ------------------------------------------------------------------
  auto* ver = app.add_subcommand("verify", "Run module invariant suites (fixed seeds)");
  std::string ver_filter;
  bool ver_json = false;
  ver->add_option("--filter", ver_filter,
                  "only suites whose module name starts with this prefix");
  ver->add_flag("--json", ver_json, "machine-readable summary");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (mono->parsed()) return cmd_monodromy(coords_path, walk_path, reversal, mono_out);
    if (dom->parsed())
      return cmd_dominate(dom_config, dom_ranks, flag_cfg,
                          {!oseed->empty(), !osamples->empty(), !owl->empty(), !otol->empty()},
                          dom_threads, dom_out_json, dom_out_csv, dom_format);
    if (netc->parsed()) return cmd_network(word_path, net_out);
    if (ver->parsed()) return cmd_verify(ver_filter, ver_json);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace fgdom
