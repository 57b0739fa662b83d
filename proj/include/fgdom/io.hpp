/**
 * @file io.hpp
 * @brief JSON (de)serialization for coordinates, triangulations, walks,
 *        networks and matrices.
 *
 * Schemas (all artifacts carry "schema_version"):
 *
 *  coordinates: { "n": int, "surface": {"genus": g, "punctures": k},
 *                 "triangulation": name,
 *                 "triangles": { "<id>": {"X": {"i,j,k": [re,im], …}}, … },
 *                 "edges": { "<edge-id>+|-": {"z": [[re,im],…]}, … } }
 *  triangulation: { "genus", "punctures",
 *                   "triangles": [{"id": t, "sides": [slots]}],
 *                   "gluing": [[slot, slot], …] }
 *  walk: { "start": t, "steps": [{"side": slot, "turn": "left"|"right"}],
 *          "closed": bool }
 *  network: { "order", "vertices": [{"id","layer","track"}],
 *             "edges": [{"from","to","w":[re,im]}],
 *             "sources": [ids], "sinks": [ids] }
 */

#pragma once

#include <json.hpp>
#include <fstream>
#include <sstream>
#include <string>

#include "fgdom/coords.hpp"
#include "fgdom/harness.hpp"
#include "fgdom/matrix.hpp"
#include "fgdom/network.hpp"
#include "fgdom/surface.hpp"

namespace fgdom {

using json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline json cplx_to_json(const Cplx& v) { return json::array({v.real(), v.imag()}); }

inline Cplx cplx_from_json(const json& j) {
  return {j.at(0).get<double>(), j.at(1).get<double>()};
}

inline json matrix_to_json(const Matrix<Cplx>& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(cplx_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

inline json coords_to_json(const FGCoordinates& c) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = c.n;
  j["surface"] = {{"genus", c.genus}, {"punctures", c.punctures}};
  j["triangulation"] = c.triangulation_ref;
  json triangles = json::object();
  for (const auto& [tid, tri] : c.triangle_data) {
    json xs = json::object();
    for (const auto& [idx, v] : tri.values) {
      const std::string key = std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                              std::to_string(idx[2]);
      xs[key] = cplx_to_json(v);
    }
    triangles[std::to_string(tid)] = {{"X", std::move(xs)}};
  }
  j["triangles"] = std::move(triangles);
  json edges = json::object();
  for (const auto& [eid, edge] : c.edge_data) {
    json zs = json::array();
    for (const auto& z : edge.z) zs.push_back(cplx_to_json(z));
    edges[eid] = {{"z", std::move(zs)}};
  }
  j["edges"] = std::move(edges);
  return j;
}

inline FGCoordinates coords_from_json(const json& j) {
  FGCoordinates c;
  c.n = j.at("n").get<int>();
  c.genus = j.at("surface").at("genus").get<int>();
  c.punctures = j.at("surface").at("punctures").get<int>();
  if (j.contains("triangulation")) c.triangulation_ref = j["triangulation"].get<std::string>();
  for (const auto& [tid, tj] : j.at("triangles").items()) {
    TriangleInvariants tri;
    tri.n = c.n;
    for (const auto& [key, vj] : tj.at("X").items()) {
      std::array<int, 3> idx{};
      std::istringstream is(key);
      char comma = 0;
      is >> idx[0] >> comma >> idx[1] >> comma >> idx[2];
      if (!is) throw std::invalid_argument("coords_from_json: bad invariant key '" + key + "'");
      tri.values[idx] = cplx_from_json(vj);
    }
    c.triangle_data[std::stoi(tid)] = std::move(tri);
  }
  for (const auto& [eid, ej] : j.at("edges").items()) {
    EdgeInvariants edge;
    edge.n = c.n;
    for (const auto& zj : ej.at("z")) edge.z.push_back(cplx_from_json(zj));
    c.edge_data[eid] = std::move(edge);
  }
  return c;
}

inline json triangulation_to_json(const IdealTriangulation& tri) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = tri.name;
  j["genus"] = tri.genus;
  j["punctures"] = tri.punctures;
  json triangles = json::array();
  for (int t = 0; t < tri.num_triangles; ++t)
    triangles.push_back({{"id", t}, {"sides", {3 * t, 3 * t + 1, 3 * t + 2}}});
  j["triangles"] = std::move(triangles);
  json gluing = json::array();
  for (int s = 0; s < tri.num_slots(); ++s)
    if (s < tri.gluing[static_cast<std::size_t>(s)])
      gluing.push_back({s, tri.gluing[static_cast<std::size_t>(s)]});
  j["gluing"] = std::move(gluing);
  return j;
}

inline IdealTriangulation triangulation_from_json(const json& j) {
  IdealTriangulation tri;
  if (j.contains("name")) tri.name = j["name"].get<std::string>();
  tri.genus = j.at("genus").get<int>();
  tri.punctures = j.at("punctures").get<int>();
  tri.num_triangles = static_cast<int>(j.at("triangles").size());
  tri.gluing.assign(static_cast<std::size_t>(tri.num_slots()), -1);
  for (const auto& pair : j.at("gluing")) {
    const int a = pair.at(0).get<int>(), b = pair.at(1).get<int>();
    tri.gluing.at(static_cast<std::size_t>(a)) = b;
    tri.gluing.at(static_cast<std::size_t>(b)) = a;
  }
  tri.validate();
  return tri;
}

inline json walk_to_json(const CurveWalk& w) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["start"] = w.start;
  json steps = json::array();
  for (const auto& s : w.steps)
    steps.push_back({{"side", s.slot}, {"turn", s.turn == Turn::Left ? "left" : "right"}});
  j["steps"] = std::move(steps);
  j["closed"] = w.closed;
  return j;
}

inline CurveWalk walk_from_json(const json& j) {
  CurveWalk w;
  w.start = j.at("start").get<int>();
  for (const auto& sj : j.at("steps")) {
    const std::string turn = sj.at("turn").get<std::string>();
    if (turn != "left" && turn != "right")
      throw std::invalid_argument("walk_from_json: turn must be left or right");
    w.steps.push_back({sj.at("side").get<int>(), turn == "left" ? Turn::Left : Turn::Right});
  }
  w.closed = j.at("closed").get<bool>();
  return w;
}

inline json word_to_json(const MonodromyWord& w) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = w.blocks.empty() ? 0 : w.blocks.front().triangle.n;
  json blocks = json::array();
  for (const auto& blk : w.blocks) {
    json b;
    b["delta"] = blk.delta;
    json xs = json::object();
    for (const auto& [idx, v] : blk.triangle.values) {
      const std::string key = std::to_string(idx[0]) + "," + std::to_string(idx[1]) + "," +
                              std::to_string(idx[2]);
      xs[key] = cplx_to_json(v);
    }
    b["triangle"] = {{"X", std::move(xs)}};
    json zs = json::array();
    for (const auto& z : blk.edge.z) zs.push_back(cplx_to_json(z));
    b["edge"] = {{"z", std::move(zs)}};
    blocks.push_back(std::move(b));
  }
  j["blocks"] = std::move(blocks);
  return j;
}

inline MonodromyWord word_from_json(const json& j) {
  const int n = j.at("n").get<int>();
  if (n < 2) throw std::invalid_argument("word_from_json: n must be >= 2");
  MonodromyWord w;
  for (const auto& bj : j.at("blocks")) {
    BuildingBlockSpec blk;
    blk.delta = bj.at("delta").get<int>();
    blk.triangle.n = n;
    for (const auto& [key, vj] : bj.at("triangle").at("X").items()) {
      std::array<int, 3> idx{};
      std::istringstream is(key);
      char comma = 0;
      is >> idx[0] >> comma >> idx[1] >> comma >> idx[2];
      if (!is) throw std::invalid_argument("word_from_json: bad invariant key '" + key + "'");
      blk.triangle.values[idx] = cplx_from_json(vj);
    }
    blk.edge.n = n;
    for (const auto& zj : bj.at("edge").at("z")) blk.edge.z.push_back(cplx_from_json(zj));
    w.blocks.push_back(std::move(blk));
  }
  if (w.blocks.empty()) throw std::invalid_argument("word_from_json: empty word");
  return w;
}

inline json length_report_to_json(const LengthReport& rep) {
  json j;
  j["hilbert"] = rep.hilbert;
  j["translation"] = rep.translation;
  j["lk"] = rep.lks;
  j["gaps"] = rep.gaps;
  j["centered_log_moduli"] = rep.centered_logs;
  return j;
}

inline json experiment_config_to_json(const ExperimentConfig& cfg) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["n"] = cfg.n;
  j["seed"] = cfg.seed;
  j["samples"] = cfg.samples;
  j["word_len_min"] = cfg.word_len_min;
  j["word_len_max"] = cfg.word_len_max;
  j["modulus_min"] = cfg.modulus_min;
  j["modulus_max"] = cfg.modulus_max;
  j["tol_length"] = cfg.tol.length;
  j["tol_crosscheck"] = cfg.tol.crosscheck;
  j["conditioning_cutoff"] = cfg.conditioning_cutoff;
  return j;
}

inline ExperimentConfig experiment_config_from_json(const json& j) {
  ExperimentConfig cfg;
  if (j.contains("n")) cfg.n = j["n"].get<int>();
  if (j.contains("seed")) cfg.seed = j["seed"].get<std::uint64_t>();
  if (j.contains("samples")) cfg.samples = j["samples"].get<int>();
  if (j.contains("word_len_min")) cfg.word_len_min = j["word_len_min"].get<int>();
  if (j.contains("word_len_max")) cfg.word_len_max = j["word_len_max"].get<int>();
  if (j.contains("modulus_min")) cfg.modulus_min = j["modulus_min"].get<double>();
  if (j.contains("modulus_max")) cfg.modulus_max = j["modulus_max"].get<double>();
  if (j.contains("tol_length")) cfg.tol.length = j["tol_length"].get<double>();
  if (j.contains("tol_crosscheck")) cfg.tol.crosscheck = j["tol_crosscheck"].get<double>();
  if (j.contains("conditioning_cutoff"))
    cfg.conditioning_cutoff = j["conditioning_cutoff"].get<double>();
  if (cfg.n < 2) throw std::invalid_argument("experiment config: n must be >= 2");
  if (cfg.samples < 1 || cfg.word_len_min < 1 || cfg.word_len_max < cfg.word_len_min)
    throw std::invalid_argument("experiment config: bad sample/word-length bounds");
  return cfg;
}

inline json network_to_json(const PlanarNetwork& net) {
  json j;
  j["schema_version"] = kSchemaVersion;
  j["order"] = net.order;
  json vertices = json::array();
  for (int l = 0; l <= net.transitions; ++l)
    for (int t = 0; t < net.order; ++t)
      vertices.push_back({{"id", "v" + std::to_string(l) + "_" + std::to_string(t)},
                          {"layer", l},
                          {"track", t}});
  j["vertices"] = std::move(vertices);
  json edges = json::array();
  for (const auto& e : net.edges)
    edges.push_back({{"from", "v" + std::to_string(e.layer) + "_" + std::to_string(e.from)},
                     {"to", "v" + std::to_string(e.layer + 1) + "_" + std::to_string(e.to)},
                     {"w", cplx_to_json(e.w)}});
  j["edges"] = std::move(edges);
  json sources = json::array(), sinks = json::array();
  for (int t = 0; t < net.order; ++t) {
    sources.push_back("v0_" + std::to_string(t));
    sinks.push_back("v" + std::to_string(net.transitions) + "_" + std::to_string(t));
  }
  j["sources"] = std::move(sources);
  j["sinks"] = std::move(sinks);
  return j;
}

inline json domination_report_json(const std::vector<ExperimentResult>& results) {
  json j;
  j["schema_version"] = kSchemaVersion;
  json experiments = json::array();
  for (const auto& res : results) {
    json e;
    e["n"] = res.config.n;
    e["seed"] = res.config.seed;
    e["samples"] = res.config.samples;
    e["word_len_min"] = res.config.word_len_min;
    e["word_len_max"] = res.config.word_len_max;
    e["modulus_min"] = res.config.modulus_min;
    e["modulus_max"] = res.config.modulus_max;
    e["tol_length"] = res.config.tol.length;
    e["skipped"] = res.skipped;
    e["failures"] = res.failures;
    e["equality_cases"] = res.equality_cases;
    e["max_violation"] = res.max_violation;
    e["ok"] = res.ok();
    json records = json::array();
    for (const auto& rec : res.records) {
      json r;
      r["sample"] = rec.index;
      r["word_len"] = rec.word_len;
      r["all_delta_equal"] = rec.all_delta_equal;
      r["skipped"] = rec.skipped;
      if (rec.skipped) {
        r["skip_reason"] = rec.skip_reason;
      } else {
        r["hilbert"] = {{"rho", rec.rho.hilbert}, {"rho0", rec.rho0.hilbert}};
        r["translation"] = {{"rho", rec.rho.translation}, {"rho0", rec.rho0.translation}};
        r["lk"] = {{"rho", rec.rho.lks}, {"rho0", rec.rho0.lks}};
        r["gaps"] = {{"rho", rec.rho.gaps}, {"rho0", rec.rho0.gaps}};
        r["max_violation"] = rec.max_violation;
      }
      r["ok"] = rec.ok();
      records.push_back(std::move(r));
    }
    e["records"] = std::move(records);
    experiments.push_back(std::move(e));
  }
  j["experiments"] = std::move(experiments);
  return j;
}

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  return json::parse(in);  // throws with line/column on malformed input
}

inline void save_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << text;
}

}  // namespace fgdom
