#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "propcol/assignment.hpp"
#include "propcol/coloring.hpp"
#include "propcol/gallery.hpp"
#include "propcol/graph.hpp"
#include "propcol/oracle.hpp"

// JSON documents use std::map-backed objects, so keys come out sorted and
// identical values serialize to identical bytes.

namespace propcol::io {

using Json = nlohmann::json;

namespace detail {

inline std::uint64_t as_uint(const Json& j, const char* what) {
  if (!j.is_number_unsigned()) throw InputError(std::string(what) + " must be a non-negative integer");
  return j.get<std::uint64_t>();
}

inline const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) throw InputError("expected a JSON object");
  auto it = j.find(key);
  if (it == j.end()) throw InputError(std::string("missing field \"") + key + "\"");
  return *it;
}

inline const Json& array_field(const Json& j, const char* key) {
  const Json& a = field(j, key);
  if (!a.is_array()) throw InputError(std::string("field \"") + key + "\" must be an array");
  return a;
}

inline Color as_color(const Json& j) {
  std::uint64_t c = as_uint(j, "color");
  if (c >= 0xffffffffULL) throw InputError("color out of range");
  return static_cast<Color>(c);
}

}  // namespace detail

inline Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw InputError(std::string("malformed JSON: ") + e.what());
  }
}

/// Serialized document with a trailing newline.
inline std::string dump(const Json& j) { return j.dump() + "\n"; }

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// graph ------------------------------------------------------------------

inline Json to_json(const Graph& g) {
  Json edges = Json::array();
  for (const Edge& e : g.edges()) edges.push_back({e.first, e.second});
  return Json{{"edges", edges}, {"n", g.order()}};
}

inline Graph graph_from_json(const Json& j) {
  const std::uint64_t n = detail::as_uint(detail::field(j, "n"), "n");
  std::vector<Edge> edges;
  for (const Json& e : detail::array_field(j, "edges")) {
    if (!e.is_array() || e.size() != 2) throw InputError("each edge must be a pair [u, v]");
    edges.push_back(Edge{detail::as_uint(e[0], "edge endpoint"), detail::as_uint(e[1], "edge endpoint")});
  }
  return Graph::from_edges(n, edges);
}

// assignment -------------------------------------------------------------

inline Json to_json(const ListAssignment& L) {
  Json lists = Json::array();
  for (const auto& list : L.lists()) lists.push_back(list);
  return Json{{"k", L.k()}, {"lists", lists}, {"multi", L.multi()}};
}

inline ListAssignment assignment_from_json(const Json& j) {
  const std::uint64_t k = detail::as_uint(detail::field(j, "k"), "k");
  bool multi = false;
  if (j.contains("multi")) {
    if (!j["multi"].is_boolean()) throw InputError("field \"multi\" must be a boolean");
    multi = j["multi"].get<bool>();
  }
  std::vector<std::vector<Color>> lists;
  for (const Json& list : detail::array_field(j, "lists")) {
    if (!list.is_array()) throw InputError("each list must be an array of colors");
    std::vector<Color> colors;
    for (const Json& c : list) colors.push_back(detail::as_color(c));
    lists.push_back(std::move(colors));
  }
  return ListAssignment(k, std::move(lists), multi);
}

// coloring ---------------------------------------------------------------

inline Json to_json(const Labelling& f) { return Json{{"colors", f.colors}}; }

inline Labelling coloring_from_json(const Json& j) {
  Labelling f;
  for (const Json& c : detail::array_field(j, "colors")) f.colors.push_back(detail::as_color(c));
  return f;
}

// verdicts ---------------------------------------------------------------

inline Json to_json(const Violation& v) {
  Json j{{"kind", std::string(violation_name(v.kind))}, {"count", v.count}, {"bound", v.bound}};
  if (v.vertex) j["vertex"] = *v.vertex;
  if (v.edge) j["edge"] = {v.edge->first, v.edge->second};
  if (v.color) j["color"] = *v.color;
  return j;
}

inline Violation violation_from_json(const Json& j) {
  Violation v;
  const Json& kind = detail::field(j, "kind");
  bool known = false;
  for (ViolationKind k : {ViolationKind::WrongLength, ViolationKind::NotInList,
                          ViolationKind::MonochromaticEdge, ViolationKind::Underused,
                          ViolationKind::Overused, ViolationKind::TooManyColors}) {
    if (kind.is_string() && kind.get<std::string>() == violation_name(k)) {
      v.kind = k;
      known = true;
    }
  }
  if (!known) throw InputError("unknown violation kind");
  v.count = detail::as_uint(detail::field(j, "count"), "count");
  v.bound = detail::as_uint(detail::field(j, "bound"), "bound");
  if (j.contains("vertex")) v.vertex = detail::as_uint(j["vertex"], "vertex");
  if (j.contains("edge")) {
    const Json& e = j["edge"];
    if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair");
    v.edge = Edge{detail::as_uint(e[0], "edge endpoint"), detail::as_uint(e[1], "edge endpoint")};
  }
  if (j.contains("color")) v.color = detail::as_color(j["color"]);
  return v;
}

inline Json to_json(const Verdict& v) {
  Json violations = Json::array();
  for (const Violation& x : v.violations) violations.push_back(to_json(x));
  return Json{{"mode", std::string(mode_name(v.mode))}, {"ok", v.ok}, {"violations", violations}};
}

inline Verdict verdict_from_json(const Json& j) {
  Verdict v;
  const Json& mode = detail::field(j, "mode");
  auto parsed = mode.is_string() ? parse_mode(mode.get<std::string>()) : std::nullopt;
  if (!parsed) throw InputError("unknown verification mode");
  v.mode = *parsed;
  const Json& ok = detail::field(j, "ok");
  if (!ok.is_boolean()) throw InputError("field \"ok\" must be a boolean");
  v.ok = ok.get<bool>();
  for (const Json& x : detail::array_field(j, "violations")) v.violations.push_back(violation_from_json(x));
  return v;
}

inline Json usage_to_json(const ListAssignment& L, const Labelling& f) {
  const auto counts = color_counts(f);
  Json colors = Json::array();
  for (const auto& [c, usage] : classify_usage(L, f)) {
    const ColorProfile& p = *L.profile(c);
    auto it = counts.find(c);
    colors.push_back({{"class", std::string(usage_name(usage))},
                      {"color", c},
                      {"eta", p.eta},
                      {"used", it == counts.end() ? 0 : it->second}});
  }
  return Json{{"colors", colors}, {"k", L.k()}};
}

inline Json to_json(const EnumerationStats& s) {
  return Json{{"assignments", s.assignments}, {"prunes", s.prunes}};
}

inline Json to_json(const ChoosabilityVerdict& v) {
  return Json{{"decision", v.decision},
              {"k", v.k},
              {"stats", to_json(v.stats)},
              {"witness", v.witness ? to_json(*v.witness) : Json(nullptr)}};
}

inline ChoosabilityVerdict choosability_from_json(const Json& j) {
  ChoosabilityVerdict v;
  const Json& d = detail::field(j, "decision");
  if (!d.is_boolean()) throw InputError("field \"decision\" must be a boolean");
  v.decision = d.get<bool>();
  v.k = detail::as_uint(detail::field(j, "k"), "k");
  const Json& s = detail::field(j, "stats");
  v.stats.assignments = detail::as_uint(detail::field(s, "assignments"), "assignments");
  v.stats.prunes = detail::as_uint(detail::field(s, "prunes"), "prunes");
  const Json& w = detail::field(j, "witness");
  if (!w.is_null()) v.witness = assignment_from_json(w);
  return v;
}

inline std::string_view chi_pc_status_name(ChiPcStatus s) {
  switch (s) {
    case ChiPcStatus::Exact: return "exact";
    case ChiPcStatus::AboveCap: return "above_cap";
    case ChiPcStatus::ResourceLimit: return "resource_limit";
  }
  return "exact";
}

inline Json to_json(const ChiPcResult& r, std::size_t k_max) {
  Json verdicts = Json::array();
  for (const auto& v : r.verdicts) verdicts.push_back(to_json(v));
  Json j{{"chi_pc", r.value ? Json(*r.value) : Json(nullptr)},
         {"k_max", k_max},
         {"lower_bound", r.lower_bound},
         {"status", std::string(chi_pc_status_name(r.status))},
         {"verdicts", verdicts}};
  if (!r.message.empty()) j["message"] = r.message;
  return j;
}

inline Json to_json(const ExistenceResult& r) {
  return Json{{"coloring", r.coloring ? to_json(*r.coloring) : Json(nullptr)},
              {"exists", r.exists},
              {"stats", {{"nodes", r.stats.nodes}, {"prunes", r.stats.prunes}}}};
}

// (graph, assignment) pairs ----------------------------------------------

inline Json pair_to_json(const Graph& g, const ListAssignment& L) {
  return Json{{"assignment", to_json(L)}, {"graph", to_json(g)}};
}

inline Json to_json(const GalleryInstance& inst) {
  Json j = pair_to_json(inst.graph, inst.assignment);
  j["param"] = inst.param;
  j["source"] = std::string(gallery_source_name(inst.source));
  return j;
}

/// A graph document, or the "graph" member of a pair document.
inline Graph load_graph(const Json& j) {
  return j.is_object() && j.contains("graph") ? graph_from_json(j["graph"]) : graph_from_json(j);
}

/// An assignment document, or the "assignment" member of a pair document.
inline ListAssignment load_assignment(const Json& j) {
  return j.is_object() && j.contains("assignment") ? assignment_from_json(j["assignment"])
                                                   : assignment_from_json(j);
}

// DOT --------------------------------------------------------------------

/// Undirected DOT; with a coloring, each vertex is labelled "v: color".
inline std::string to_dot(const Graph& g, const Labelling* f = nullptr) {
  std::ostringstream out;
  out << "graph G {\n";
  for (Vertex v = 0; v < g.order(); ++v) {
    out << "  " << v;
    if (f && v < f->size()) out << " [label=\"" << v << ": " << (*f)[v] << "\"]";
    out << ";\n";
  }
  for (const Edge& e : g.edges()) out << "  " << e.first << " -- " << e.second << ";\n";
  out << "}\n";
  return out.str();
}

}  // namespace propcol::io
