#include <doctest.h>

#include <random>

#include "clucat/roots.hpp"

using namespace clucat;

TEST_CASE("simple reflections in A2") {
  ValuedGraph g = build_diagram('A', 2);
  CHECK(simple_reflection(g, 0, Root{1, 0}) == Root{-1, 0});
  CHECK(simple_reflection(g, 0, Root{0, 1}) == Root{1, 1});
}

TEST_CASE("simple reflections are involutions") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (auto [letter, rank] : std::vector<std::pair<char, int>>{
           {'A', 3}, {'B', 3}, {'G', 2}, {'F', 4}}) {
    ValuedGraph g = build_diagram(letter, rank);
    for (int trial = 0; trial < 50; ++trial) {
      Root r(g.n);
      for (int& c : r) c = coef(rng);
      for (int i = 0; i < g.n; ++i)
        CHECK(simple_reflection(g, i, simple_reflection(g, i, r)) == r);
    }
  }
}

TEST_CASE("positive root counts") {
  CHECK(positive_roots(build_diagram('A', 1)).size() == 1);
  CHECK(positive_roots(build_diagram('A', 2)).size() == 3);
  CHECK(positive_roots(build_diagram('A', 3)).size() == 6);
  CHECK(positive_roots(build_diagram('B', 2)).size() == 4);
  CHECK(positive_roots(build_diagram('B', 3)).size() == 9);
  CHECK(positive_roots(build_diagram('D', 4)).size() == 12);
  CHECK(positive_roots(build_diagram('G', 2)).size() == 6);
  CHECK(positive_roots(build_diagram('F', 4)).size() == 24);
  CHECK(positive_roots(build_diagram('E', 6)).size() == 36);
}

TEST_CASE("A2 positive roots by hand") {
  auto pos = positive_roots(build_diagram('A', 2));
  CHECK(pos == std::vector<Root>{{0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("almost positive roots: negatives first, then by height") {
  ValuedGraph g = build_diagram('A', 2);
  auto apr = almost_positive(g);
  REQUIRE(apr.size() == 5);
  CHECK(apr[0] == Root{-1, 0});
  CHECK(apr[1] == Root{0, -1});
  CHECK(almost_positive(build_diagram('A', 3)).size() == 9);
  CHECK(almost_positive(build_diagram('D', 4)).size() == 16);
}

TEST_CASE("coefficient extraction") {
  CHECK(coefficient(Root{1, 1}, 0) == 1);
  CHECK(coefficient(Root{0, -1}, 0) == 0);
  // B2 long root from the closure
  auto pos = positive_roots(build_diagram('B', 2));
  Root longest = pos.back();
  CHECK(height(longest) == 3);
  CHECK(coefficient(longest, 0) + coefficient(longest, 1) == 3);
}

TEST_CASE("generated positive roots are nonnegative and reflections permute") {
  for (auto [letter, rank] : std::vector<std::pair<char, int>>{
           {'A', 3}, {'B', 3}, {'G', 2}}) {
    ValuedGraph g = build_diagram(letter, rank);
    auto pos = positive_roots(g);
    std::set<Root> pos_set(pos.begin(), pos.end());
    for (const Root& r : pos) CHECK(is_nonnegative(r));
    for (int i = 0; i < g.n; ++i) {
      Root alpha = simple_root(g.n, i);
      CHECK(simple_reflection(g, i, alpha) == negative_simple(g.n, i));
      for (const Root& r : pos)
        if (r != alpha) CHECK(pos_set.count(simple_reflection(g, i, r)) == 1);
    }
  }
}

TEST_CASE("Euler form examples in A2") {
  ValuedGraph g = build_diagram('A', 2);
  Orientation o{{{0, 1}}};
  CHECK(euler_form(g, o, {0, 1}, {1, 1}) == 1);
  CHECK(euler_form(g, o, {1, 1}, {0, 0}) == 0);
}

TEST_CASE("Tits form is orientation independent with q(alpha_i) = eps_i") {
  for (auto [letter, rank] :
       std::vector<std::pair<char, int>>{{'A', 3}, {'B', 2}}) {
    ValuedGraph g = build_diagram(letter, rank);
    int n_edges = (int)g.edges.size();
    std::vector<Orientation> orients;
    for (int bits = 0; bits < (1 << n_edges); ++bits) {
      Orientation o;
      for (int e = 0; e < n_edges; ++e) {
        auto ed = g.edges[e];
        o.arrows.push_back((bits >> e) & 1 ? std::make_pair(ed.j, ed.i)
                                           : std::make_pair(ed.i, ed.j));
      }
      orients.push_back(o);
    }
    for (const Root& r : almost_positive(g)) {
      long long q0 = tits_form(g, orients[0], r);
      for (const auto& o : orients) CHECK(tits_form(g, o, r) == q0);
    }
    for (int i = 0; i < g.n; ++i)
      CHECK(tits_form(g, orients[0], simple_root(g.n, i)) == g.epsilon[i]);
  }
}

TEST_CASE("simply-laced roots all have q = 1") {
  ValuedGraph g = build_diagram('A', 3);
  Orientation o = alternating_orientation(g);
  for (const Root& r : positive_roots(g)) CHECK(tits_form(g, o, r) == 1);
}

TEST_CASE("symmetrized Euler form is orientation independent") {
  ValuedGraph g = build_diagram('B', 3);
  Orientation o1 = alternating_orientation(g);
  Orientation o2 = reverse_at(g, o1, sinks(g, o1)[0]);
  auto apr = almost_positive(g);
  for (const Root& a : apr)
    for (const Root& b : apr)
      CHECK(euler_form(g, o1, a, b) + euler_form(g, o1, b, a) ==
            euler_form(g, o2, a, b) + euler_form(g, o2, b, a));
}

TEST_CASE("closure bound rejects non-Dynkin input") {
  // affine A1~: double edge makes the closure infinite
  ValuedGraph g;
  g.n = 2;
  g.edges = {{0, 1, 2, 2}};
  g.epsilon = {1, 1};
  g.cartan = {{2, -2}, {-2, 2}};
  g.component_of = {0, 0};
  CHECK_THROWS_AS(positive_roots(g), std::runtime_error);
}

TEST_CASE("root index assigns stable IDs and rejects non-roots") {
  ValuedGraph g = build_diagram('A', 2);
  RootIndex index(g);
  CHECK(index.size() == 5);
  CHECK(index.id(Root{-1, 0}) == 0);
  CHECK(index.id(Root{0, -1}) == 1);
  CHECK(index.id(Root{1, 1}) == 4);
  CHECK_THROWS_AS(index.id(Root{2, 0}), std::invalid_argument);
  CHECK_FALSE(index.contains(Root{-1, -1}));
}

TEST_CASE("cluster count formula from Coxeter data") {
  CHECK(cluster_count_formula(build_diagram('A', 2)) == 5);
  CHECK(cluster_count_formula(build_diagram('B', 2)) == 6);
  CHECK(cluster_count_formula(build_diagram('A', 3)) == 14);
  CHECK(cluster_count_formula(build_diagram({{'A', 2}, {'A', 1}})) == 10);
}
