#include "curvlink/io.hpp"

#include <fstream>

namespace curvlink::io {

namespace {

const json& require(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(std::string(what) + ": missing \"" + key + "\"");
  }
  return j.at(key);
}

std::string require_string(const json& j, const char* what) {
  if (!j.is_string()) throw InputError(std::string(what) + ": expected a string");
  return j.get<std::string>();
}

double require_number(const json& j, const char* what) {
  if (!j.is_number()) throw InputError(std::string(what) + ": expected a number");
  return j.get<double>();
}

std::pair<std::string, std::string> split_pair_key(const std::string& key) {
  const auto comma = key.find(',');
  if (comma == std::string::npos || key.find(',', comma + 1) != std::string::npos) {
    throw InputError("delta key '" + key + "' must have the form \"x,y\"");
  }
  return {key.substr(0, comma), key.substr(comma + 1)};
}

}  // namespace

json graph_to_json(const MetricGraph& g) {
  json out;
  out["vertices"] = json::array();
  for (VertexId v = 0; v < g.vertex_count(); ++v) out["vertices"].push_back(g.label(v));
  out["edges"] = json::array();
  for (const Edge& e : g.edges()) {
    json je{{"u", g.label(e.u)}, {"v", g.label(e.v)}, {"len_deg", rad_to_deg(e.length)}};
    if (!e.tag.empty()) je["tag"] = e.tag;
    if (e.shared) je["shared"] = true;
    out["edges"].push_back(std::move(je));
  }
  return out;
}

MetricGraph graph_from_json(const json& j) {
  MetricGraph g;
  const json& vertices = require(j, "vertices", "graph");
  if (!vertices.is_array()) throw InputError("graph: \"vertices\" must be an array");
  for (const json& v : vertices) g.add_vertex(require_string(v, "graph vertex"));
  const json& edges = require(j, "edges", "graph");
  if (!edges.is_array()) throw InputError("graph: \"edges\" must be an array");
  for (const json& e : edges) {
    const std::string u = require_string(require(e, "u", "graph edge"), "edge u");
    const std::string v = require_string(require(e, "v", "graph edge"), "edge v");
    if (!g.find(u) || !g.find(v)) {
      throw InputError("graph edge " + u + "-" + v + " uses an undeclared vertex");
    }
    const bool has_deg = e.contains("len_deg");
    const bool has_rad = e.contains("len_rad");
    if (has_deg == has_rad) {
      throw InputError("graph edge " + u + "-" + v + " needs exactly one of len_deg, len_rad");
    }
    const double len = has_deg ? deg_to_rad(require_number(e.at("len_deg"), "len_deg"))
                               : require_number(e.at("len_rad"), "len_rad");
    std::string tag = e.contains("tag") ? require_string(e.at("tag"), "edge tag") : std::string();
    const bool shared = e.contains("shared") && e.at("shared").is_boolean() && e.at("shared").get<bool>();
    try {
      g.add_edge(u, v, len, std::move(tag), shared);
    } catch (const DomainError& err) {
      throw InputError(std::string("graph edge ") + u + "-" + v + ": " + err.what());
    }
  }
  return g;
}

json artin_to_json(const ArtinDefiningGraph& g) {
  json out{{"generators", g.generators()}, {"relations", json::array()}};
  for (const auto& [pair, m] : g.relations()) {
    out["relations"].push_back(
        {{"pair", {g.generator(pair.first), g.generator(pair.second)}}, {"m", m}});
  }
  return out;
}

ArtinDefiningGraph artin_from_json(const json& j) {
  ArtinDefiningGraph g;
  const json& gens = require(j, "generators", "artin graph");
  if (!gens.is_array()) throw InputError("artin graph: \"generators\" must be an array");
  try {
    for (const json& x : gens) g.add_generator(require_string(x, "generator"));
    if (j.contains("relations")) {
      for (const json& r : j.at("relations")) {
        const json& pair = require(r, "pair", "relation");
        if (!pair.is_array() || pair.size() != 2) {
          throw InputError("relation: \"pair\" must list two generators");
        }
        const json& m = require(r, "m", "relation");
        RelatorIndex index;
        if (m.is_number_integer()) {
          index = m.get<int>();
        } else if (!(m.is_string() && (m == "inf" || m == "infinity"))) {
          throw InputError("relation: \"m\" must be an integer or \"inf\"");
        }
        g.set_index(require_string(pair[0], "relation generator"),
                    require_string(pair[1], "relation generator"), index);
      }
    }
  } catch (const DomainError& err) {
    throw InputError(std::string("artin graph: ") + err.what());
  }
  return g;
}

json deltas_to_json(const ArtinDefiningGraph& g, const DeltaAssignment& d) {
  json deg = json::object();
  json rad = json::object();
  for (const auto& [pair, m] : g.relations()) {
    const std::string key = g.generator(pair.first) + "," + g.generator(pair.second);
    const Angle delta = d.block(g, pair.first, pair.second).delta();
    deg[key] = delta.deg();
    rad[key] = delta.rad();
  }
  return {{"deltas_deg", deg}, {"deltas_rad", rad}};
}

DeltaAssignment deltas_from_json(const ArtinDefiningGraph& g, const json& j) {
  if (j.is_object() && j.contains("auto")) {
    if (j.at("auto") != "symmetric") throw InputError("deltas: only \"auto\": \"symmetric\" is supported");
    return DeltaAssignment::symmetric(g);
  }
  const json& table = require(j, "deltas_deg", "deltas");
  if (!table.is_object()) throw InputError("deltas: \"deltas_deg\" must be an object");
  DeltaAssignment d;
  try {
    for (const auto& [key, value] : table.items()) {
      const auto [x, y] = split_pair_key(key);
      const std::size_t i = g.generator_id(x);
      const std::size_t k = g.generator_id(y);
      if (!g.index(i, k)) throw InputError("deltas: pair " + key + " has no relation");
      d.set(i, k, Angle::degrees(require_number(value, "delta")));
    }
    for (const auto& [pair, m] : g.relations()) {
      if (m >= 3 && !d.get(pair.first, pair.second)) {
        throw InputError("deltas: missing delta for pair " + g.generator(pair.first) + "," +
                         g.generator(pair.second));
      }
    }
  } catch (const DomainError& err) {
    throw InputError(std::string("deltas: ") + err.what());
  }
  return d;
}

json witness_to_json(const MetricGraph& g, const CycleWitness& w) {
  json out{{"length_deg", rad_to_deg(w.length)}, {"length_rad", w.length}};
  out["vertices"] = json::array();
  for (VertexId v : w.vertices) out["vertices"].push_back(g.label(v));
  out["edges"] = json::array();
  for (EdgeId e : w.edges) {
    const Edge& edge = g.edge(e);
    out["edges"].push_back({{"u", g.label(edge.u)},
                            {"v", g.label(edge.v)},
                            {"len_deg", rad_to_deg(edge.length)},
                            {"tag", edge.tag}});
  }
  return out;
}

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::parse_error& err) {
    throw InputError("malformed JSON in " + path.string() + ": " + err.what());
  }
}

}  // namespace curvlink::io
