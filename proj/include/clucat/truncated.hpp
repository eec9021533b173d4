#pragma once

// Truncated simple reflections on the almost positive roots, the
// products tau_+/tau_- over a bipartition into disconnected vertex
// classes, and the compatibility degree they determine:
//
//   (-alpha_i || beta) = max([beta : alpha_i], 0)
//   (tau alpha || tau beta) = (alpha || beta)
//
// The degree of a general pair is found by walking the dihedral orbit
// of alpha under <tau_+, tau_-> until it reaches a negated simple, then
// reading the coefficient off the equally-transported beta.

#include "clucat/roots.hpp"

namespace clucat {

struct Bipartition {
  std::vector<int> plus;   // sources of the alternating orientation
  std::vector<int> minus;  // sinks
};

inline Bipartition alternating_bipartition(const ValuedGraph& g) {
  Orientation o = alternating_orientation(g);
  Bipartition bp;
  std::vector<bool> sink(g.n, true);
  for (auto [from, to] : o.arrows) sink[from] = false;
  for (int v = 0; v < g.n; ++v)
    (sink[v] ? bp.minus : bp.plus).push_back(v);
  return bp;
}

// sigma_i: fixes -alpha_j for j != i, acts as s_i otherwise.
inline Root sigma(const ValuedGraph& g, int i, const Root& r) {
  auto neg = negative_simple_index(r);
  if (neg && *neg != i) return r;
  return simple_reflection(g, i, r);
}

enum class Sign { Plus, Minus };

// tau_sign = product of sigma_i over the chosen class; the factors
// commute since the class is completely disconnected.
inline Root tau(const ValuedGraph& g, const Bipartition& bp, Sign sign,
                const Root& r) {
  Root out = r;
  for (int i : (sign == Sign::Plus ? bp.plus : bp.minus))
    out = sigma(g, i, out);
  return out;
}

// (alpha || beta). Both orbit walks (word starting with tau_+ and word
// starting with tau_-) are advanced in parallel; the first to reach a
// negated simple decides. Exceeding the dihedral-order cap 2(h+2) is a
// defect, never "undefined".
inline int compat_degree(const ValuedGraph& g, const Bipartition& bp,
                         const Root& alpha, const Root& beta) {
  Root a_plus = alpha, b_plus = beta;
  Root a_minus = alpha, b_minus = beta;
  int cap = 2 * (detail::max_coxeter_number(g) + 2);
  Sign next_plus = Sign::Plus, next_minus = Sign::Minus;
  for (int step = 0; step <= cap; ++step) {
    if (auto i = negative_simple_index(a_plus))
      return std::max(coefficient(b_plus, *i), 0);
    if (auto i = negative_simple_index(a_minus))
      return std::max(coefficient(b_minus, *i), 0);
    a_plus = tau(g, bp, next_plus, a_plus);
    b_plus = tau(g, bp, next_plus, b_plus);
    next_plus = next_plus == Sign::Plus ? Sign::Minus : Sign::Plus;
    a_minus = tau(g, bp, next_minus, a_minus);
    b_minus = tau(g, bp, next_minus, b_minus);
    next_minus = next_minus == Sign::Plus ? Sign::Minus : Sign::Plus;
  }
  throw std::logic_error(
      "compat_degree: no negated simple within the dihedral cap");
}

inline int compat_degree(const ValuedGraph& g, const Root& alpha,
                         const Root& beta) {
  return compat_degree(g, alternating_bipartition(g), alpha, beta);
}

// Orbit of r under <tau_+, tau_->, each element with the word (sequence
// of signs, applied left to right) that produced it.
struct OrbitElement {
  Root root;
  std::vector<Sign> word;
};

inline std::vector<OrbitElement> dihedral_orbit(const ValuedGraph& g,
                                                const Bipartition& bp,
                                                const Root& r) {
  std::vector<OrbitElement> orbit;
  std::set<Root> seen;
  std::queue<OrbitElement> work;
  work.push({r, {}});
  seen.insert(r);
  while (!work.empty()) {
    OrbitElement cur = work.front();
    work.pop();
    orbit.push_back(cur);
    for (Sign s : {Sign::Plus, Sign::Minus}) {
      Root next = tau(g, bp, s, cur.root);
      if (seen.insert(next).second) {
        auto word = cur.word;
        word.push_back(s);
        work.push({next, word});
      }
    }
  }
  return orbit;
}

// All-pairs degree matrix over canonical root IDs, filled once so the
// cluster enumeration can query it read-only.
struct CompatTable {
  RootIndex index;
  std::vector<std::vector<int>> degree;  // [id(alpha)][id(beta)]

  explicit CompatTable(const ValuedGraph& g) : index(g) {
    Bipartition bp = alternating_bipartition(g);
    int m = index.size();
    degree.assign(m, std::vector<int>(m, 0));
    for (int a = 0; a < m; ++a)
      for (int b = 0; b < m; ++b)
        degree[a][b] = compat_degree(g, bp, index.list[a], index.list[b]);
  }
};

}  // namespace clucat
