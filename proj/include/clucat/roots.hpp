#pragma once

// Root systems over a Dynkin valued graph: positive and almost positive
// roots, simple reflections, Euler/Tits forms, Coxeter data.
//
// A root is a plain integer coefficient vector over the simple roots.
// Canonical IDs: negated simples first in vertex order, then positive
// roots sorted by (height, lex); all downstream modules and file formats
// use these IDs.

#include <map>
#include <numeric>
#include <optional>
#include <stdexcept>

#include "clucat/dynkin.hpp"

namespace clucat {

using Root = std::vector<int>;

inline int coefficient(const Root& r, int i) { return r[i]; }

inline int height(const Root& r) {
  return std::accumulate(r.begin(), r.end(), 0);
}

inline Root simple_root(int n, int i) {
  Root r(n, 0);
  r[i] = 1;
  return r;
}

inline Root negative_simple(int n, int i) {
  Root r(n, 0);
  r[i] = -1;
  return r;
}

// s_i(r) = r - (sum_j a_ij r_j) alpha_i
inline Root simple_reflection(const ValuedGraph& g, int i, const Root& r) {
  int pairing = 0;
  for (int j = 0; j < g.n; ++j) pairing += g.cartan[i][j] * r[j];
  Root out = r;
  out[i] -= pairing;
  return out;
}

inline bool is_nonnegative(const Root& r) {
  for (int c : r)
    if (c < 0) return false;
  return true;
}

// Is r = -alpha_i for some i? Returns the vertex if so.
inline std::optional<int> negative_simple_index(const Root& r) {
  int idx = -1;
  for (size_t i = 0; i < r.size(); ++i) {
    if (r[i] == -1 && idx == -1)
      idx = (int)i;
    else if (r[i] != 0)
      return std::nullopt;
  }
  if (idx == -1) return std::nullopt;
  return idx;
}

// Closure of the simples under all simple reflections, intersected with
// the non-negative orthant. The bound guards against non-Dynkin input.
inline std::vector<Root> positive_roots(const ValuedGraph& g) {
  constexpr size_t kSafetyBound = 100000;
  std::set<Root> seen;
  std::queue<Root> work;
  for (int i = 0; i < g.n; ++i) {
    Root a = simple_root(g.n, i);
    seen.insert(a);
    work.push(a);
  }
  while (!work.empty()) {
    Root r = work.front();
    work.pop();
    for (int i = 0; i < g.n; ++i) {
      Root s = simple_reflection(g, i, r);
      if (!is_nonnegative(s)) continue;
      if (seen.insert(s).second) {
        if (seen.size() > kSafetyBound)
          throw std::runtime_error(
              "positive_roots: closure exceeded safety bound; input is not "
              "of Dynkin type");
        work.push(s);
      }
    }
  }
  std::vector<Root> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
    if (height(a) != height(b)) return height(a) < height(b);
    return a < b;
  });
  return out;
}

inline std::vector<Root> almost_positive(const ValuedGraph& g) {
  std::vector<Root> out;
  for (int i = 0; i < g.n; ++i) out.push_back(negative_simple(g.n, i));
  for (const Root& r : positive_roots(g)) out.push_back(r);
  return out;
}

// <a,b>_o = sum_i eps_i a_i b_i - sum_{arrows i->j} d_ij eps_j a_i b_j
inline long long euler_form(const ValuedGraph& g, const Orientation& o,
                            const std::vector<int>& a,
                            const std::vector<int>& b) {
  long long v = 0;
  for (int i = 0; i < g.n; ++i)
    v += (long long)g.epsilon[i] * a[i] * b[i];
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [from, to] = o.arrows[e];
    int d = -g.cartan[from][to];
    v -= (long long)d * g.epsilon[to] * a[from] * b[to];
  }
  return v;
}

inline long long tits_form(const ValuedGraph& g, const Orientation& o,
                           const std::vector<int>& a) {
  return euler_form(g, o, a, a);
}

struct CoxeterData {
  int h;                       // Coxeter number
  std::vector<int> exponents;  // ascending
};

// h = 2|Phi^+|/n; exponents are the conjugate partition of the height
// distribution of the positive roots. Connected diagrams only.
inline CoxeterData coxeter_data(const ValuedGraph& g) {
  if (g.components.size() != 1)
    throw std::invalid_argument("coxeter_data: connected diagram required");
  auto pos = positive_roots(g);
  int h = (int)(2 * pos.size() / g.n);
  std::map<int, int> by_height;
  for (const Root& r : pos) by_height[height(r)]++;
  std::vector<int> exponents;
  for (int j = 1; j <= (int)pos.size(); ++j) {
    int count = 0;
    for (auto [ht, c] : by_height)
      if (c >= j) ++count;
    if (count == 0) break;
    exponents.push_back(count);
  }
  std::sort(exponents.begin(), exponents.end());
  return {h, exponents};
}

// Per-component Coxeter data for possibly disconnected diagrams. The
// positive roots of a forest split by supporting component, so one
// closure pass serves every component.
inline std::vector<CoxeterData> coxeter_data_components(const ValuedGraph& g) {
  int n_comp = 0;
  for (int c : g.component_of) n_comp = std::max(n_comp, c + 1);
  std::vector<int> comp_rank(n_comp, 0);
  for (int c : g.component_of) comp_rank[c]++;
  std::vector<std::map<int, int>> by_height(n_comp);
  std::vector<int> comp_size(n_comp, 0);
  for (const Root& r : positive_roots(g)) {
    int c = -1;
    for (int i = 0; i < g.n; ++i)
      if (r[i] != 0) {
        c = g.component_of[i];
        break;
      }
    by_height[c][height(r)]++;
    comp_size[c]++;
  }
  std::vector<CoxeterData> out;
  for (int c = 0; c < n_comp; ++c) {
    CoxeterData cd;
    cd.h = 2 * comp_size[c] / comp_rank[c];
    for (int j = 1; j <= comp_size[c]; ++j) {
      int count = 0;
      for (auto [ht, cnt] : by_height[c])
        if (cnt >= j) ++count;
      if (count == 0) break;
      cd.exponents.push_back(count);
    }
    std::sort(cd.exponents.begin(), cd.exponents.end());
    out.push_back(cd);
  }
  return out;
}

// Generalized Catalan number prod_i (e_i + h + 1)/(e_i + 1), multiplied
// over components. Independent of the clique enumeration.
inline long long cluster_count_formula(const ValuedGraph& g) {
  long long total = 1;
  for (const auto& cd : coxeter_data_components(g)) {
    long long num = 1, den = 1;
    for (int e : cd.exponents) {
      num *= e + cd.h + 1;
      den *= e + 1;
      long long gcd = std::gcd(num, den);
      num /= gcd;
      den /= gcd;
    }
    if (den != 1) throw std::logic_error("cluster_count_formula: non-integer");
    total *= num;
  }
  return total;
}

namespace detail {

inline int max_coxeter_number(const ValuedGraph& g) {
  int h = 2;
  for (const auto& cd : coxeter_data_components(g)) h = std::max(h, cd.h);
  return h;
}

}  // namespace detail

// Canonical ID table over almost positive roots.
struct RootIndex {
  std::vector<Root> list;       // ID -> root
  std::map<Root, int> id_of;    // root -> ID

  explicit RootIndex(const ValuedGraph& g) : list(almost_positive(g)) {
    for (size_t i = 0; i < list.size(); ++i) id_of[list[i]] = (int)i;
  }

  int id(const Root& r) const {
    auto it = id_of.find(r);
    if (it == id_of.end())
      throw std::invalid_argument("root is not almost positive");
    return it->second;
  }

  bool contains(const Root& r) const { return id_of.count(r) > 0; }
  int size() const { return (int)list.size(); }
};

}  // namespace clucat
