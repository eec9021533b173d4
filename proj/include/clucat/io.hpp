#pragma once

// Serialization: diagram and root JSON, degree-matrix CSV, cluster list
// JSON, exchange graph as DOT and JSON adjacency, representation dumps.
// All vertex numbers in serialized form are 1-based.

#include <nlohmann/json.hpp>

#include <sstream>

#include "clucat/clusters.hpp"
#include "clucat/repcat.hpp"

namespace clucat {

using nlohmann::json;

inline json diagram_to_json(const ValuedGraph& g, const Orientation& o) {
  json j;
  j["vertices"] = g.n;
  j["edges"] = json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back(
        {{"i", e.i + 1}, {"j", e.j + 1}, {"dij", e.dij}, {"dji", e.dji}});
  j["epsilon"] = g.epsilon;
  j["orientation"] = json::array();
  for (auto [from, to] : o.arrows)
    j["orientation"].push_back({{"from", from + 1}, {"to", to + 1}});
  return j;
}

inline json root_to_json(const Root& r) { return json(r); }

inline json roots_to_json(const RootIndex& index) {
  json j = json::array();
  for (size_t id = 0; id < index.list.size(); ++id)
    j.push_back({{"id", id}, {"root", index.list[id]}});
  return j;
}

inline std::string degree_matrix_csv(const std::vector<std::vector<int>>& deg) {
  std::ostringstream out;
  out << "id";
  for (size_t b = 0; b < deg.size(); ++b) out << "," << b;
  out << "\n";
  for (size_t a = 0; a < deg.size(); ++a) {
    out << a;
    for (size_t b = 0; b < deg.size(); ++b) out << "," << deg[a][b];
    out << "\n";
  }
  return out.str();
}

inline json clusters_to_json(const RootIndex& index,
                             const std::vector<Cluster>& clusters) {
  json j;
  j["clusters"] = clusters;
  j["roots"] = roots_to_json(index);
  return j;
}

inline json exchange_to_json(const ExchangeGraph& eg) {
  json j;
  j["vertices"] = eg.vertices;
  j["adjacency"] = eg.adjacency;
  return j;
}

inline std::string exchange_to_dot(const RootIndex& index,
                                   const ExchangeGraph& eg) {
  std::ostringstream out;
  out << "graph exchange {\n";
  for (size_t v = 0; v < eg.vertices.size(); ++v) {
    out << "  c" << v << " [label=\"" << v << "\" tooltip=\"";
    for (size_t k = 0; k < eg.vertices[v].size(); ++k) {
      if (k) out << " ";
      const Root& r = index.list[eg.vertices[v][k]];
      out << "[";
      for (size_t i = 0; i < r.size(); ++i) {
        if (i) out << ",";
        out << r[i];
      }
      out << "]";
    }
    out << "\"];\n";
  }
  for (auto [a, b] : eg.edges) out << "  c" << a << " -- c" << b << ";\n";
  out << "}\n";
  return out.str();
}

inline json rep_to_json(const ValuedGraph& g, const Orientation& o,
                        const QuiverRep& rep) {
  json j;
  j["dims"] = rep.dims;
  j["maps"] = json::array();
  for (size_t e = 0; e < g.edges.size(); ++e) {
    json m;
    m["from"] = o.arrows[e].first + 1;
    m["to"] = o.arrows[e].second + 1;
    m["rows"] = rep.maps[e].rows;
    m["cols"] = rep.maps[e].cols;
    json entries = json::array();
    for (const Rat& x : rep.maps[e].a) entries.push_back(to_string(x));
    m["entries"] = entries;  // row-major
    j["maps"].push_back(m);
  }
  return j;
}

// Parse a bare integer array like "[1,-1,0]".
inline Root parse_root(const std::string& text, int n) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded() || !j.is_array() || (int)j.size() != n)
    throw std::invalid_argument("expected an integer array of length " +
                                std::to_string(n));
  Root r;
  for (const auto& v : j) {
    if (!v.is_number_integer())
      throw std::invalid_argument("root coefficients must be integers");
    r.push_back(v.get<int>());
  }
  return r;
}

}  // namespace clucat
