#include <doctest.h>

#include "clucat/clusters.hpp"
#include "clucat/io.hpp"
#include "clucat/repcat.hpp"

using namespace clucat;

TEST_CASE("cluster counts match the product formula") {
  for (auto [letter, rank, expect] :
       std::vector<std::tuple<char, int, long long>>{{'A', 1, 2},
                                                     {'A', 2, 5},
                                                     {'A', 3, 14},
                                                     {'B', 2, 6},
                                                     {'G', 2, 8}}) {
    ValuedGraph g = build_diagram(letter, rank);
    CompatTable table(g);
    auto clusters = enumerate_clusters(g, table);
    CAPTURE(letter);
    CHECK((long long)clusters.size() == expect);
    CHECK(cluster_count_formula(g) == expect);
  }
}

TEST_CASE("A1 clusters are the two singletons") {
  ValuedGraph g = build_diagram('A', 1);
  RootIndex index(g);
  CompatTable table(g);
  auto clusters = enumerate_clusters(g, table);
  REQUIRE(clusters.size() == 2);
  CHECK(index.list[clusters[0][0]] == Root{-1});
  CHECK(index.list[clusters[1][0]] == Root{1});
  // -alpha_1 and alpha_1 are not compatible
  auto cg = compatibility_graph(table.degree);
  CHECK_FALSE(cg.adj[0][1]);
}

TEST_CASE("negated simples are pairwise compatible") {
  ValuedGraph g = build_diagram('B', 3);
  CompatTable table(g);
  auto cg = compatibility_graph(table.degree);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (i != j) CHECK(cg.adj[i][j]);
}

TEST_CASE("the A2 exchange graph is the pentagon") {
  ValuedGraph g = build_diagram('A', 2);
  CompatTable table(g);
  auto clusters = enumerate_clusters(g, table);
  ExchangeGraph eg = exchange_graph(clusters, g.n);
  REQUIRE(eg.vertices.size() == 5);
  CHECK(eg.edges.size() == 5);
  for (const auto& adj : eg.adjacency) CHECK(adj.size() == 2);
  // connected 2-regular graph on 5 vertices = 5-cycle
  std::vector<bool> seen(5, false);
  std::queue<int> q;
  q.push(0);
  seen[0] = true;
  int reached = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++reached;
    for (int w : eg.adjacency[v])
      if (!seen[w]) {
        seen[w] = true;
        q.push(w);
      }
  }
  CHECK(reached == 5);
}

TEST_CASE("A1 exchange graph is a single edge") {
  ValuedGraph g = build_diagram('A', 1);
  CompatTable table(g);
  ExchangeGraph eg = exchange_graph(enumerate_clusters(g, table), g.n);
  CHECK(eg.edges.size() == 1);
}

TEST_CASE("A3 exchange graph is 3-regular with 21 edges") {
  ValuedGraph g = build_diagram('A', 3);
  CompatTable table(g);
  auto clusters = enumerate_clusters(g, table);
  ExchangeGraph eg = exchange_graph(clusters, g.n);
  CHECK(eg.vertices.size() == 14);
  CHECK(eg.edges.size() == 21);
  for (const auto& adj : eg.adjacency) CHECK(adj.size() == 3);
}

TEST_CASE("negative support") {
  ValuedGraph g = build_diagram('A', 2);
  RootIndex index(g);
  CompatTable table(g);
  auto clusters = enumerate_clusters(g, table);
  Cluster all_neg{index.id(Root{-1, 0}), index.id(Root{0, -1})};
  std::sort(all_neg.begin(), all_neg.end());
  CHECK(std::find(clusters.begin(), clusters.end(), all_neg) != clusters.end());
  CHECK(negative_support(index, all_neg) == std::vector<int>{0, 1});

  Cluster mixed{index.id(Root{-1, 0}), index.id(Root{0, 1})};
  std::sort(mixed.begin(), mixed.end());
  CHECK(std::find(clusters.begin(), clusters.end(), mixed) != clusters.end());
  CHECK(negative_support(index, mixed) == std::vector<int>{0});

  Cluster positive{index.id(Root{1, 1}), index.id(Root{0, 1})};
  CHECK(negative_support(index, positive).empty());
}

TEST_CASE("restriction to a sub-diagram is a verified bijection") {
  ValuedGraph g = build_diagram('A', 3);
  CompatTable table(g);

  SUBCASE("J = all vertices") {
    auto rd = restrict_clusters(g, table, {0, 1, 2});
    CHECK(rd.ambient.size() == 1);
    CHECK(rd.sub_positive.size() == 1);
    CHECK(rd.sub_positive[0].empty());
    CHECK(rd.bijective);
  }
  SUBCASE("J = empty set") {
    auto rd = restrict_clusters(g, table, {});
    CHECK(rd.ambient.size() == rd.sub_positive.size());
    CHECK(rd.bijective);
  }
  SUBCASE("J = {2}: complement is A1 x A1") {
    auto rd = restrict_clusters(g, table, {1});
    CHECK(rd.ambient.size() == rd.sub_positive.size());
    CHECK(rd.ambient.size() == 1);  // only {alpha_1, alpha_3} stays positive
    CHECK(rd.bijective);
  }
}

TEST_CASE("negative-support bijection across every J in A3 and B3") {
  for (char letter : {'A', 'B'}) {
    ValuedGraph g = build_diagram(letter, 3);
    CompatTable table(g);
    for (int mask = 0; mask < 8; ++mask) {
      std::vector<int> J;
      for (int v = 0; v < 3; ++v)
        if (mask & (1 << v)) J.push_back(v);
      auto rd = restrict_clusters(g, table, J);
      CAPTURE(letter);
      CAPTURE(mask);
      CHECK(rd.bijective);
    }
  }
}

TEST_CASE("component decomposition products") {
  {
    ValuedGraph g = build_diagram({{'A', 1}, {'A', 1}});
    CompatTable table(g);
    auto cd = component_decomposition(g, table);
    CHECK(cd.ambient.size() == 4);
    CHECK(cd.product_bijection);
  }
  {
    ValuedGraph g = build_diagram({{'A', 2}, {'A', 1}});
    CompatTable table(g);
    auto cd = component_decomposition(g, table);
    CHECK(cd.ambient.size() == 10);
    CHECK(cd.product_bijection);
  }
  {
    ValuedGraph g = build_diagram('A', 2);
    CompatTable table(g);
    auto cd = component_decomposition(g, table);
    CHECK(cd.per_component.size() == 1);
    CHECK(cd.product_bijection);
  }
}

TEST_CASE("sub-diagram degrees agree with ambient degrees") {
  for (auto [letter, rank] :
       std::vector<std::pair<char, int>>{{'A', 3}, {'B', 3}}) {
    ValuedGraph g = build_diagram(letter, rank);
    RootIndex ambient(g);
    Bipartition bp = alternating_bipartition(g);
    for (int mask = 1; mask < (1 << g.n) - 1; ++mask) {
      std::vector<int> keep;
      for (int v = 0; v < g.n; ++v)
        if (mask & (1 << v)) keep.push_back(v);
      SubDiagram sd = induced_subdiagram(g, keep);
      RootIndex sub(sd.graph);
      Bipartition sub_bp = alternating_bipartition(sd.graph);
      for (const Root& a : sub.list)
        for (const Root& b : sub.list) {
          int sub_deg = compat_degree(sd.graph, sub_bp, a, b);
          int amb_deg = compat_degree(g, bp, embed_root(sd, g.n, a),
                                      embed_root(sd, g.n, b));
          CHECK(sub_deg == amb_deg);
        }
    }
  }
}

TEST_CASE("sigma permutes clusters as an involution") {
  for (auto [letter, rank] : std::vector<std::pair<char, int>>{
           {'A', 3}, {'D', 4}, {'B', 2}, {'G', 2}, {'B', 3}}) {
    ValuedGraph g = build_diagram(letter, rank);
    RootIndex index(g);
    CompatTable table(g);
    auto clusters = enumerate_clusters(g, table);
    for (int k = 0; k < g.n; ++k) {
      if (!sigma_preserves_clusters(g, k)) continue;
      auto perm = sigma_on_clusters(g, index, k, clusters);
      CHECK(perm.size() == clusters.size());
      for (size_t c = 0; c < perm.size(); ++c) CHECK(perm[perm[c]] == (int)c);
    }
  }
}

TEST_CASE("sigma outside a singleton bipartition class can break clusters") {
  SUBCASE("A3, vertex 1") {
    // {a2, a2+a3, a1+a2} maps to a set containing the incompatible pair
    // (a2, a1+a2+a3), so the guarded call must throw.
    ValuedGraph g = build_diagram('A', 3);
    RootIndex index(g);
    CompatTable table(g);
    auto clusters = enumerate_clusters(g, table);
    CHECK(sigma_preserves_clusters(g, 1));
    CHECK_FALSE(sigma_preserves_clusters(g, 0));
    CHECK_FALSE(sigma_preserves_clusters(g, 2));
    CHECK_THROWS_AS(sigma_on_clusters(g, index, 0, clusters),
                    std::logic_error);
    CHECK(compat_degree(g, Root{0, 1, 0}, Root{1, 1, 1}) == 1);
    CHECK(compat_degree(g, Root{1, 1, 1}, Root{0, 1, 0}) == 1);
  }
  SUBCASE("B3, vertex 1") {
    // {e2-e3, e2, e1-e2} maps to a set containing the pair (e1, e2-e3)
    // of degree 2.
    ValuedGraph g = build_diagram('B', 3);
    RootIndex index(g);
    CompatTable table(g);
    auto clusters = enumerate_clusters(g, table);
    CHECK(sigma_preserves_clusters(g, 1));
    CHECK_FALSE(sigma_preserves_clusters(g, 0));
    CHECK_THROWS_AS(sigma_on_clusters(g, index, 0, clusters),
                    std::logic_error);
    CHECK(compat_degree(g, Root{1, 1, 1}, Root{0, 1, 0}) == 2);
    CHECK(compat_degree(g, Root{0, 1, 0}, Root{1, 1, 1}) == 1);
  }
}

TEST_CASE("clusters from the representation oracle coincide (A3)") {
  ValuedGraph g = build_diagram('A', 3);
  Orientation o = alternating_orientation(g);
  CompatTable table(g);
  OmegaDegreeTable omega(g, o);
  auto fz = enumerate_clusters(g, table);
  auto rep = enumerate_clusters(compatibility_graph(omega.degree), g.n);
  CHECK(fz == rep);
}

TEST_CASE("cluster JSON and exchange DOT exports") {
  ValuedGraph g = build_diagram('A', 2);
  RootIndex index(g);
  CompatTable table(g);
  auto clusters = enumerate_clusters(g, table);
  json cj = clusters_to_json(index, clusters);
  CHECK(cj["clusters"].size() == 5);
  CHECK(cj["roots"].size() == 5);

  ExchangeGraph eg = exchange_graph(clusters, g.n);
  std::string dot = exchange_to_dot(index, eg);
  CHECK(dot.find("graph exchange {") == 0);
  CHECK(dot.find("--") != std::string::npos);
  json ej = exchange_to_json(eg);
  CHECK(ej["vertices"].size() == 5);
  CHECK(ej["adjacency"].size() == 5);
}
