#include "surfgerm/document.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <json.hpp>

#include "surfgerm/errors.hpp"

namespace surfgerm {

namespace {

using nlohmann::json;

void allow_keys(const json& obj, const std::string& where, std::initializer_list<const char*> keys) {
  if (!obj.is_object()) throw ParseError(where, "expected an object");
  std::set<std::string> ok(keys.begin(), keys.end());
  for (const auto& [k, v] : obj.items())
    if (!ok.count(k)) throw ParseError(where + "/" + k, "unknown field");
}

const json& require(const json& obj, const std::string& where, const char* key) {
  auto it = obj.find(key);
  if (it == obj.end()) throw ParseError(where + "/" + key, "missing field");
  return *it;
}

Rat rational_field(const json& v, const std::string& where) {
  if (v.is_number_integer()) return Rat(v.get<long>());
  if (v.is_number()) throw ParseError(where, "floating-point values are not allowed; use \"p/q\"");
  if (!v.is_string()) throw ParseError(where, "expected a rational string \"p/q\"");
  try {
    return parse_rat(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw ParseError(where, e.what());
  }
}

long integer_field(const json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where, "expected an integer");
  return v.get<long>();
}

std::string string_field(const json& v, const std::string& where) {
  if (!v.is_string()) throw ParseError(where, "expected a string");
  return v.get<std::string>();
}

BoundaryData curve_list(const json& arr, const std::string& where, const DualGraph& g) {
  if (!arr.is_array()) throw ParseError(where, "expected an array");
  BoundaryData b;
  for (std::size_t k = 0; k < arr.size(); ++k) {
    const std::string at = where + "/" + std::to_string(k);
    const json& c = arr[k];
    allow_keys(c, at, {"coeff", "incidence", "label"});
    Rat coeff = rational_field(require(c, at, "coeff"), at + "/coeff");
    if (coeff <= 0) throw ParseError(at + "/coeff", "coefficient must be positive");
    const json& inc = require(c, at, "incidence");
    if (!inc.is_object()) throw ParseError(at + "/incidence", "expected an object id -> integer");
    std::map<std::string, long> incidence;
    for (const auto& [id, n] : inc.items()) incidence[id] = integer_field(n, at + "/incidence/" + id);
    std::string label;
    if (c.contains("label")) label = string_field(c["label"], at + "/label");
    try {
      b.curves.push_back(make_curve(g, std::move(coeff), incidence, std::move(label)));
    } catch (const InvalidBoundary& e) {
      throw ParseError(at + "/incidence", e.what());
    }
  }
  return b;
}

}  // namespace

GermDocument parse_germ_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("/", e.what());
  }
  allow_keys(doc, "", {"vertices", "edges", "boundary", "d_data"});

  const json& verts = require(doc, "", "vertices");
  if (!verts.is_array()) throw ParseError("/vertices", "expected an array");
  std::vector<DualGraph::Vertex> vs;
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const std::string at = "/vertices/" + std::to_string(i);
    allow_keys(verts[i], at, {"id", "weight"});
    vs.push_back({string_field(require(verts[i], at, "id"), at + "/id"),
                  integer_field(require(verts[i], at, "weight"), at + "/weight")});
  }

  std::vector<DualGraph::Edge> es;
  if (doc.contains("edges")) {
    const json& edges = doc["edges"];
    if (!edges.is_array()) throw ParseError("/edges", "expected an array");
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const std::string at = "/edges/" + std::to_string(i);
      if (!edges[i].is_array() || edges[i].size() != 2)
        throw ParseError(at, "expected a pair of vertex ids");
      es.emplace_back(string_field(edges[i][0], at + "/0"), string_field(edges[i][1], at + "/1"));
    }
  }

  std::optional<DualGraph> graph;
  try {
    graph.emplace(std::move(vs), es);
  } catch (const InvalidGraph& e) {
    throw ParseError("/vertices", e.what());
  }

  GermDocument out{*graph, {}, std::nullopt};
  if (doc.contains("boundary")) out.boundary = curve_list(doc["boundary"], "/boundary", out.graph);
  if (doc.contains("d_data")) {
    const json& d = doc["d_data"];
    allow_keys(d, "/d_data", {"d_squared", "min_dc", "d_components"});
    DData dd;
    dd.d_squared = rational_field(require(d, "/d_data", "d_squared"), "/d_data/d_squared");
    if (d.contains("min_dc") && !d["min_dc"].is_null())
      dd.min_dc = rational_field(d["min_dc"], "/d_data/min_dc");
    if (d.contains("d_components"))
      dd.d_components = curve_list(d["d_components"], "/d_data/d_components", out.graph);
    out.d_data = std::move(dd);
  }
  return out;
}

GermDocument load_germ_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_germ_document(ss.str());
}

}  // namespace surfgerm
