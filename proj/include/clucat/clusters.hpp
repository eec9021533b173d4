#pragma once

// Compatibility graph on the almost positive roots, maximal-clique
// enumeration of clusters (Bron-Kerbosch with pivoting, deterministic
// order), the exchange graph, negative support, restriction to
// sub-diagrams and product decomposition over components.

#include "clucat/truncated.hpp"

namespace clucat {

// Adjacency over canonical root IDs: edge iff the degree vanishes in
// both argument orders.
struct CompatibilityGraph {
  int n_vertices = 0;
  std::vector<std::vector<char>> adj;
};

inline CompatibilityGraph compatibility_graph(
    const std::vector<std::vector<int>>& degree) {
  CompatibilityGraph cg;
  cg.n_vertices = (int)degree.size();
  cg.adj.assign(cg.n_vertices, std::vector<char>(cg.n_vertices, 0));
  for (int a = 0; a < cg.n_vertices; ++a)
    for (int b = 0; b < cg.n_vertices; ++b)
      if (a != b && degree[a][b] == 0 && degree[b][a] == 0) cg.adj[a][b] = 1;
  return cg;
}

using Cluster = std::vector<int>;  // sorted root IDs

namespace detail {

inline void bron_kerbosch(const CompatibilityGraph& g, std::vector<int>& R,
                          std::vector<int> P, std::vector<int> X,
                          std::vector<Cluster>& out) {
  if (P.empty() && X.empty()) {
    out.push_back(R);
    return;
  }
  // pivot: vertex of P u X with the most neighbors in P, smallest ID wins
  int pivot = -1, best = -1;
  for (const auto* set : {&P, &X})
    for (int u : *set) {
      int cnt = 0;
      for (int v : P) cnt += g.adj[u][v];
      if (cnt > best) {
        best = cnt;
        pivot = u;
      }
    }
  std::vector<int> candidates;
  for (int v : P)
    if (!g.adj[pivot][v]) candidates.push_back(v);
  for (int v : candidates) {
    std::vector<int> P2, X2;
    for (int w : P)
      if (g.adj[v][w]) P2.push_back(w);
    for (int w : X)
      if (g.adj[v][w]) X2.push_back(w);
    R.push_back(v);
    bron_kerbosch(g, R, std::move(P2), std::move(X2), out);
    R.pop_back();
    P.erase(std::find(P.begin(), P.end(), v));
    X.insert(std::lower_bound(X.begin(), X.end(), v), v);
  }
}

}  // namespace detail

// All maximal cliques, each sorted, output sorted; every cluster must
// have size n (rank of the diagram).
inline std::vector<Cluster> enumerate_clusters(const CompatibilityGraph& cg,
                                               int expected_size) {
  std::vector<int> R, P(cg.n_vertices), X;
  std::iota(P.begin(), P.end(), 0);
  std::vector<Cluster> out;
  detail::bron_kerbosch(cg, R, std::move(P), std::move(X), out);
  for (auto& c : out) std::sort(c.begin(), c.end());
  std::sort(out.begin(), out.end());
  for (const auto& c : out)
    if ((int)c.size() != expected_size)
      throw std::logic_error("enumerate_clusters: maximal compatible set of "
                             "size " + std::to_string(c.size()) +
                             ", expected " + std::to_string(expected_size));
  return out;
}

inline std::vector<Cluster> enumerate_clusters(const ValuedGraph& g,
                                               const CompatTable& table) {
  return enumerate_clusters(compatibility_graph(table.degree), g.n);
}

struct ExchangeGraph {
  std::vector<Cluster> vertices;
  std::vector<std::pair<int, int>> edges;  // cluster index pairs, i < j
  std::vector<std::vector<int>> adjacency;
};

inline ExchangeGraph exchange_graph(const std::vector<Cluster>& clusters,
                                    int rank) {
  ExchangeGraph eg;
  eg.vertices = clusters;
  eg.adjacency.assign(clusters.size(), {});
  for (size_t a = 0; a < clusters.size(); ++a)
    for (size_t b = a + 1; b < clusters.size(); ++b) {
      std::vector<int> common;
      std::set_intersection(clusters[a].begin(), clusters[a].end(),
                            clusters[b].begin(), clusters[b].end(),
                            std::back_inserter(common));
      if ((int)common.size() == rank - 1) {
        eg.edges.push_back({(int)a, (int)b});
        eg.adjacency[a].push_back((int)b);
        eg.adjacency[b].push_back((int)a);
      }
    }
  return eg;
}

inline std::vector<int> negative_support(const RootIndex& index,
                                         const Cluster& c) {
  std::vector<int> out;
  for (int id : c)
    if (auto i = negative_simple_index(index.list[id])) out.push_back(*i);
  return out;
}

// Induced valued sub-diagram on the kept vertices, with the vertex maps
// between ambient and local numbering.
struct SubDiagram {
  ValuedGraph graph;
  std::vector<int> ambient_of_local;
  std::vector<int> local_of_ambient;  // -1 when dropped
};

inline SubDiagram induced_subdiagram(const ValuedGraph& g,
                                     const std::vector<int>& keep) {
  SubDiagram sd;
  sd.ambient_of_local = keep;
  sd.local_of_ambient.assign(g.n, -1);
  for (size_t l = 0; l < keep.size(); ++l)
    sd.local_of_ambient[keep[l]] = (int)l;
  ValuedGraph& s = sd.graph;
  s.n = (int)keep.size();
  for (const auto& e : g.edges) {
    int li = sd.local_of_ambient[e.i], lj = sd.local_of_ambient[e.j];
    if (li >= 0 && lj >= 0)
      s.edges.push_back(li < lj ? Edge{li, lj, e.dij, e.dji}
                                : Edge{lj, li, e.dji, e.dij});
  }
  s.epsilon = detail::solve_symmetrizers(s.n, s.edges);
  s.cartan.assign(s.n, std::vector<int>(s.n, 0));
  for (int i = 0; i < s.n; ++i) s.cartan[i][i] = 2;
  for (const auto& e : s.edges) {
    s.cartan[e.i][e.j] = -e.dij;
    s.cartan[e.j][e.i] = -e.dji;
  }
  // recover the component structure of the forest
  s.component_of.assign(s.n, -1);
  std::vector<std::vector<int>> adj(s.n);
  for (const auto& e : s.edges) {
    adj[e.i].push_back(e.j);
    adj[e.j].push_back(e.i);
  }
  for (int start = 0; start < s.n; ++start) {
    if (s.component_of[start] != -1) continue;
    int c = (int)s.components.size();
    int size = 0;
    std::queue<int> q;
    q.push(start);
    s.component_of[start] = c;
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      ++size;
      for (int w : adj[v])
        if (s.component_of[w] == -1) {
          s.component_of[w] = c;
          q.push(w);
        }
    }
    // sub-diagram components carry no Dynkin letter
    s.components.push_back({'?', size});
  }
  return sd;
}

// Embed a sub-diagram root into the ambient coefficient lattice.
inline Root embed_root(const SubDiagram& sd, int ambient_n, const Root& r) {
  Root out(ambient_n, 0);
  for (size_t l = 0; l < sd.ambient_of_local.size(); ++l)
    out[sd.ambient_of_local[l]] = r[l];
  return out;
}

// Proposition-style restriction data: clusters with negative support J
// versus positive clusters of the sub-diagram on the complement of J.
struct RestrictionData {
  std::vector<Cluster> ambient;           // clusters with support exactly J
  std::vector<Cluster> sub_positive;      // positive clusters of Gamma - J
  std::vector<int> image_of;              // ambient index -> sub index
  bool bijective = false;
};

inline RestrictionData restrict_clusters(const ValuedGraph& g,
                                         const CompatTable& table,
                                         const std::vector<int>& J) {
  RestrictionData rd;
  RootIndex ambient_index(g);
  auto clusters = enumerate_clusters(g, table);
  for (const auto& c : clusters)
    if (negative_support(ambient_index, c) == J) rd.ambient.push_back(c);

  std::vector<int> keep;
  for (int v = 0; v < g.n; ++v)
    if (std::find(J.begin(), J.end(), v) == J.end()) keep.push_back(v);
  SubDiagram sd = induced_subdiagram(g, keep);
  RootIndex sub_index(sd.graph);
  CompatTable sub_table(sd.graph);
  for (const auto& c : enumerate_clusters(sd.graph, sub_table))
    if (negative_support(sub_index, c).empty()) rd.sub_positive.push_back(c);

  // the correspondence C -> C \ {-alpha_i : i in J}, in sub-diagram IDs
  std::vector<Cluster> images;
  for (const auto& c : rd.ambient) {
    Cluster img;
    for (int id : c) {
      const Root& r = ambient_index.list[id];
      if (negative_simple_index(r)) continue;
      Root local(sd.graph.n, 0);
      for (int l = 0; l < sd.graph.n; ++l)
        local[l] = r[sd.ambient_of_local[l]];
      // members of a support-J cluster are supported away from J
      img.push_back(sub_index.id(local));
    }
    std::sort(img.begin(), img.end());
    images.push_back(img);
  }
  rd.image_of.assign(rd.ambient.size(), -1);
  std::set<int> hit;
  for (size_t a = 0; a < images.size(); ++a) {
    auto it = std::find(rd.sub_positive.begin(), rd.sub_positive.end(),
                        images[a]);
    if (it != rd.sub_positive.end()) {
      rd.image_of[a] = (int)(it - rd.sub_positive.begin());
      hit.insert(rd.image_of[a]);
    }
  }
  rd.bijective =
      hit.size() == rd.sub_positive.size() &&
      hit.size() == rd.ambient.size() &&
      std::find(rd.image_of.begin(), rd.image_of.end(), -1) == rd.image_of.end();
  return rd;
}

// Clusters of a disconnected diagram are exactly the unions of one
// cluster per component; the Cartesian-product bijection is verified.
struct ComponentDecomposition {
  std::vector<std::vector<Cluster>> per_component;  // ambient root IDs
  std::vector<Cluster> ambient;
  bool product_bijection = false;
};

inline ComponentDecomposition component_decomposition(const ValuedGraph& g,
                                                      const CompatTable& table) {
  ComponentDecomposition cd;
  RootIndex ambient_index(g);
  cd.ambient = enumerate_clusters(g, table);

  int n_comp = 0;
  for (int c : g.component_of) n_comp = std::max(n_comp, c + 1);
  for (int c = 0; c < n_comp; ++c) {
    std::vector<int> keep;
    for (int v = 0; v < g.n; ++v)
      if (g.component_of[v] == c) keep.push_back(v);
    SubDiagram sd = induced_subdiagram(g, keep);
    RootIndex sub_index(sd.graph);
    CompatTable sub_table(sd.graph);
    std::vector<Cluster> lifted;
    for (const auto& sc : enumerate_clusters(sd.graph, sub_table)) {
      Cluster lift;
      for (int id : sc)
        lift.push_back(
            ambient_index.id(embed_root(sd, g.n, sub_index.list[id])));
      std::sort(lift.begin(), lift.end());
      lifted.push_back(lift);
    }
    cd.per_component.push_back(lifted);
  }

  // Cartesian product of per-component clusters vs ambient enumeration
  std::set<Cluster> product{Cluster{}};
  for (const auto& comp : cd.per_component) {
    std::set<Cluster> next;
    for (const auto& partial : product)
      for (const auto& c : comp) {
        Cluster u = partial;
        u.insert(u.end(), c.begin(), c.end());
        std::sort(u.begin(), u.end());
        next.insert(u);
      }
    product = std::move(next);
  }
  cd.product_bijection =
      product == std::set<Cluster>(cd.ambient.begin(), cd.ambient.end());
  return cd;
}

// True when sigma_k maps the cluster set onto itself. This holds exactly
// when k is alone in its two-coloring class within its own component:
// sigma_k then acts on that component as tau_+ or tau_- and fixes every
// root of the other components. For any other vertex the image can leave
// the cluster set, already in A3: sigma_1 sends the cluster
// {a2, a2+a3, a1+a2} to a set containing the incompatible pair
// (a2, a1+a2+a3).
inline bool sigma_preserves_clusters(const ValuedGraph& g, int k) {
  int comp = g.component_of[k];
  Bipartition bp = alternating_bipartition(g);
  const auto& cls =
      std::count(bp.plus.begin(), bp.plus.end(), k) ? bp.plus : bp.minus;
  for (int v : cls)
    if (v != k && g.component_of[v] == comp) return false;
  return true;
}

// sigma_k maps the cluster set bijectively onto itself; returns the
// induced permutation of cluster indices.
inline std::vector<int> sigma_on_clusters(const ValuedGraph& g,
                                          const RootIndex& index, int k,
                                          const std::vector<Cluster>& clusters) {
  std::vector<int> perm(clusters.size(), -1);
  for (size_t c = 0; c < clusters.size(); ++c) {
    Cluster image;
    for (int id : clusters[c]) image.push_back(index.id(sigma(g, k, index.list[id])));
    std::sort(image.begin(), image.end());
    auto it = std::lower_bound(clusters.begin(), clusters.end(), image);
    if (it == clusters.end() || *it != image)
      throw std::logic_error("sigma_on_clusters: image is not a cluster");
    perm[c] = (int)(it - clusters.begin());
  }
  return perm;
}

}  // namespace clucat
