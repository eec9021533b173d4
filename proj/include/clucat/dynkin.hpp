#pragma once

// Dynkin valued graphs, orientations and sink reversals.
//
// Vertices are numbered 0..n-1 internally; all serialized forms are
// 1-based and follow Bourbaki labels:
//   A_n, B_n, C_n, F_4: path 1-2-...-n (B/C/F carry the valued edge at
//   the short end), D_n: path 1-...-(n-1) plus edge (n-2,n),
//   E_n: chain 1-3-4-5-...-n with 2 attached to 4, G_2: single edge.

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace clucat {

struct DynkinComponent {
  char letter;  // 'A'..'G'
  int rank;
};

struct Edge {
  int i, j;      // endpoints, i < j
  int dij, dji;  // valuation: dij = -a_ij, dji = -a_ji
};

struct ValuedGraph {
  int n = 0;
  std::vector<Edge> edges;
  std::vector<int> epsilon;                // vertex symmetrizers
  std::vector<std::vector<int>> cartan;    // a_ii = 2, a_ij = -d_ij
  std::vector<DynkinComponent> components; // in vertex order
  std::vector<int> component_of;           // vertex -> component index

  bool simply_laced() const {
    for (const auto& e : edges)
      if (e.dij != 1 || e.dji != 1) return false;
    return true;
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (const auto& e : edges) {
      if (e.i == v) out.push_back(e.j);
      if (e.j == v) out.push_back(e.i);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  std::string label() const {
    std::string s;
    for (size_t c = 0; c < components.size(); ++c) {
      if (c) s += "x";
      s += components[c].letter + std::to_string(components[c].rank);
    }
    return s;
  }
};

// Arrow directions, aligned with graph.edges: arrows[e] = (from, to).
struct Orientation {
  std::vector<std::pair<int, int>> arrows;

  bool operator==(const Orientation& o) const { return arrows == o.arrows; }
  bool operator<(const Orientation& o) const { return arrows < o.arrows; }
};

namespace detail {

inline void add_path_edges(std::vector<Edge>& edges, int base, int rank) {
  for (int i = 0; i + 1 < rank; ++i)
    edges.push_back({base + i, base + i + 1, 1, 1});
}

// Edges of one component with local vertex numbers 0..rank-1.
inline std::vector<Edge> component_edges(char letter, int rank) {
  std::vector<Edge> edges;
  switch (letter) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("A requires rank >= 1");
      add_path_edges(edges, 0, rank);
      break;
    case 'B':
      // alpha_n short: a_{n-1,n} = -1, a_{n,n-1} = -2
      if (rank < 2) throw std::invalid_argument("B requires rank >= 2");
      add_path_edges(edges, 0, rank - 1);
      edges.push_back({rank - 2, rank - 1, 1, 2});
      break;
    case 'C':
      // alpha_n long: transpose of B
      if (rank < 2) throw std::invalid_argument("C requires rank >= 2");
      add_path_edges(edges, 0, rank - 1);
      edges.push_back({rank - 2, rank - 1, 2, 1});
      break;
    case 'D':
      if (rank < 4) throw std::invalid_argument("D requires rank >= 4");
      add_path_edges(edges, 0, rank - 1);
      edges.push_back({rank - 3, rank - 1, 1, 1});
      break;
    case 'E': {
      if (rank < 6 || rank > 8)
        throw std::invalid_argument("E requires rank in {6,7,8}");
      // chain 1-3-4-...-n, vertex 2 attached to 4 (1-based labels)
      edges.push_back({0, 2, 1, 1});
      edges.push_back({1, 3, 1, 1});
      for (int i = 2; i + 1 < rank; ++i) edges.push_back({i, i + 1, 1, 1});
      break;
    }
    case 'F':
      if (rank != 4) throw std::invalid_argument("F requires rank 4");
      edges.push_back({0, 1, 1, 1});
      edges.push_back({1, 2, 1, 2});  // a_23 = -1, a_32 = -2
      edges.push_back({2, 3, 1, 1});
      break;
    case 'G':
      if (rank != 2) throw std::invalid_argument("G requires rank 2");
      edges.push_back({0, 1, 3, 1});  // a_12 = -3, a_21 = -1
      break;
    default:
      throw std::invalid_argument(std::string("unknown Dynkin letter '") +
                                  letter + "'");
  }
  return edges;
}

// Smallest positive integer symmetrizers with d_ij eps_j = d_ji eps_i,
// spread over each tree component. Ratios are 1, 2 or 3, so a running
// denominator of lcm form is avoided by scaling the whole component.
inline std::vector<int> solve_symmetrizers(int n, const std::vector<Edge>& edges) {
  std::vector<std::vector<std::pair<int, std::pair<int, int>>>> adj(n);
  for (const auto& e : edges) {
    // stepping from v to w multiplies by eps_w / eps_v = d_wv / d_vw
    adj[e.i].push_back({e.j, {e.dji, e.dij}});
    adj[e.j].push_back({e.i, {e.dij, e.dji}});
  }
  std::vector<long long> num(n, 0), den(n, 0);
  for (int start = 0; start < n; ++start) {
    if (num[start]) continue;
    num[start] = den[start] = 1;
    std::vector<int> comp{start};
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (auto [w, ratio] : adj[v]) {
        if (num[w]) continue;
        num[w] = num[v] * ratio.first;
        den[w] = den[v] * ratio.second;
        long long g = std::gcd(num[w], den[w]);
        num[w] /= g;
        den[w] /= g;
        comp.push_back(w);
        q.push(w);
      }
    }
    long long scale = 1;
    for (int v : comp) scale = std::lcm(scale, den[v]);
    for (int v : comp) num[v] = num[v] * (scale / den[v]);
  }
  return std::vector<int>(num.begin(), num.end());
}

}  // namespace detail

inline ValuedGraph build_diagram(const std::vector<DynkinComponent>& spec) {
  ValuedGraph g;
  for (size_t c = 0; c < spec.size(); ++c) {
    auto comp_edges = detail::component_edges(spec[c].letter, spec[c].rank);
    int base = g.n;
    for (auto e : comp_edges)
      g.edges.push_back({e.i + base, e.j + base, e.dij, e.dji});
    for (int v = 0; v < spec[c].rank; ++v) g.component_of.push_back((int)c);
    g.n += spec[c].rank;
    g.components.push_back(spec[c]);
  }
  g.epsilon = detail::solve_symmetrizers(g.n, g.edges);
  g.cartan.assign(g.n, std::vector<int>(g.n, 0));
  for (int i = 0; i < g.n; ++i) g.cartan[i][i] = 2;
  for (const auto& e : g.edges) {
    g.cartan[e.i][e.j] = -e.dij;
    g.cartan[e.j][e.i] = -e.dji;
  }
  return g;
}

inline ValuedGraph build_diagram(char letter, int rank) {
  return build_diagram({{letter, rank}});
}

// Two-coloring of the forest; the smallest vertex of each component is a
// source and arrows run source-class -> sink-class.
inline Orientation alternating_orientation(const ValuedGraph& g) {
  std::vector<int> color(g.n, -1);
  std::vector<std::vector<int>> adj(g.n);
  for (const auto& e : g.edges) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  for (int start = 0; start < g.n; ++start) {
    if (color[start] != -1) continue;
    color[start] = 0;  // source class
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (color[w] == -1) {
          color[w] = 1 - color[v];
          q.push(w);
        }
    }
  }
  Orientation o;
  for (const auto& e : g.edges)
    o.arrows.push_back(color[e.i] == 0 ? std::make_pair(e.i, e.j)
                                       : std::make_pair(e.j, e.i));
  return o;
}

inline std::vector<int> sinks(const ValuedGraph& g, const Orientation& o) {
  std::vector<bool> has_out(g.n, false);
  for (auto [from, to] : o.arrows) has_out[from] = true;
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (!has_out[v]) out.push_back(v);
  return out;
}

inline std::vector<int> sources(const ValuedGraph& g, const Orientation& o) {
  std::vector<bool> has_in(g.n, false);
  for (auto [from, to] : o.arrows) has_in[to] = true;
  std::vector<int> out;
  for (int v = 0; v < g.n; ++v)
    if (!has_in[v]) out.push_back(v);
  return out;
}

inline bool is_sink(const ValuedGraph& g, const Orientation& o, int k) {
  for (auto [from, to] : o.arrows)
    if (from == k) return false;
  return true;
}

inline bool is_source(const ValuedGraph& g, const Orientation& o, int k) {
  for (auto [from, to] : o.arrows)
    if (to == k) return false;
  return true;
}

inline Orientation reverse_at(const ValuedGraph& g, const Orientation& o, int k) {
  if (!is_sink(g, o, k) && !is_source(g, o, k))
    throw std::invalid_argument("reverse_at: vertex " + std::to_string(k + 1) +
                                " is neither a sink nor a source");
  Orientation r = o;
  for (auto& [from, to] : r.arrows)
    if (from == k || to == k) std::swap(from, to);
  return r;
}

// Sink sequence i_1..i_t with i_m a sink of s_{i_{m-1}}...s_{i_1}(from)
// and final orientation == to. BFS over orientations of the forest.
inline std::vector<int> admissible_sequence(const ValuedGraph& g,
                                            const Orientation& from,
                                            const Orientation& to) {
  if (from == to) return {};
  std::map<Orientation, std::pair<Orientation, int>> parent;
  std::queue<Orientation> q;
  parent.emplace(from, std::make_pair(from, -1));
  q.push(from);
  while (!q.empty()) {
    Orientation cur = q.front();
    q.pop();
    for (int k : sinks(g, cur)) {
      Orientation next = reverse_at(g, cur, k);
      if (parent.count(next)) continue;
      parent.emplace(next, std::make_pair(cur, k));
      if (next == to) {
        std::vector<int> seq;
        Orientation walk = to;
        while (!(walk == from)) {
          auto& [prev, vtx] = parent.at(walk);
          seq.push_back(vtx);
          walk = prev;
        }
        std::reverse(seq.begin(), seq.end());
        return seq;
      }
      q.push(next);
    }
  }
  throw std::logic_error("admissible_sequence: target unreachable");
}

}  // namespace clucat
