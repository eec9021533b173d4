#pragma once

// Simply-laced quiver representations over exact rationals: Gabriel
// indecomposables, intertwiner Hom/Ext, BGP reflection functors (kernel
// and cokernel constructions), the module/shifted-projective bookkeeping
// of the cluster category with its bijection gamma onto the almost
// positive roots, decorated modules, and the symmetrized Ext pairing
// that yields the orientation-dependent compatibility degree.
//
// Valued (non simply-laced) types are deliberately excluded from every
// matrix-level operation here; their degrees come from the truncated
// module alone. object_reflect and gamma are pure root bookkeeping and
// work for all types.

#include "clucat/linalg.hpp"
#include "clucat/roots.hpp"

namespace clucat {

struct QuiverRep {
  std::vector<int> dims;  // per vertex
  std::vector<Mat> maps;  // per edge; shape dims[to] x dims[from] wrt o

  bool is_zero() const {
    for (int d : dims)
      if (d) return false;
    return true;
  }
};

inline void require_simply_laced(const ValuedGraph& g, const char* where) {
  if (!g.simply_laced())
    throw std::invalid_argument(std::string(where) +
                                ": simply-laced type required");
}

inline QuiverRep zero_rep(const ValuedGraph& g) {
  QuiverRep r;
  r.dims.assign(g.n, 0);
  r.maps.assign(g.edges.size(), Mat());
  return r;
}

// Simple rep E_i; call fix_shapes with the ambient orientation before use.
inline QuiverRep simple_rep(const ValuedGraph& g, int i) {
  QuiverRep r = zero_rep(g);
  r.dims[i] = 1;
  return r;
}

// Reshape all edge matrices to match dims under orientation o (only
// meaningful for matrices with a zero side).
inline void fix_shapes(const ValuedGraph& g, const Orientation& o, QuiverRep& r) {
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [from, to] = o.arrows[e];
    if (r.maps[e].rows != r.dims[to] || r.maps[e].cols != r.dims[from]) {
      if (r.dims[to] == 0 || r.dims[from] == 0)
        r.maps[e] = Mat(r.dims[to], r.dims[from]);
      else
        throw std::logic_error("representation has mismatched map shapes");
    }
  }
}

// dim Hom(M, N): nullity of the assembled intertwiner system
// { f_j M_e = N_e f_i  for each arrow e: i->j }.
inline int hom_dim(const ValuedGraph& g, const Orientation& o,
                   const QuiverRep& M, const QuiverRep& N) {
  std::vector<int> off(g.n + 1, 0);
  for (int i = 0; i < g.n; ++i)
    off[i + 1] = off[i] + N.dims[i] * M.dims[i];
  int unknowns = off[g.n];
  if (unknowns == 0) return 0;

  int n_eq = 0;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [i, j] = o.arrows[e];
    n_eq += N.dims[j] * M.dims[i];
  }
  Mat sys(n_eq, unknowns);
  int row = 0;
  for (size_t e = 0; e < g.edges.size(); ++e) {
    auto [i, j] = o.arrows[e];
    const Mat& Me = M.maps[e];
    const Mat& Ne = N.maps[e];
    for (int r = 0; r < N.dims[j]; ++r)
      for (int c = 0; c < M.dims[i]; ++c) {
        for (int t = 0; t < M.dims[j]; ++t)
          sys.at(row, off[j] + r * M.dims[j] + t) += Me.at(t, c);
        for (int s = 0; s < N.dims[i]; ++s)
          sys.at(row, off[i] + s * M.dims[i] + c) -= Ne.at(r, s);
        ++row;
      }
  }
  return unknowns - rank(std::move(sys));
}

// dim Ext^1(M, N) from the hereditary identity hom - ext = <dim M, dim N>.
inline int ext_dim(const ValuedGraph& g, const Orientation& o,
                   const QuiverRep& M, const QuiverRep& N) {
  long long v = hom_dim(g, o, M, N) - euler_form(g, o, M.dims, N.dims);
  if (v < 0)
    throw std::logic_error("ext_dim: hereditary identity produced a "
                           "negative value");
  return (int)v;
}

// BGP functor S_k^+ at a sink: replace V_k by the kernel of the
// assembled map (+)_{j->k} V_j -> V_k; the new maps out of k are the
// kernel-inclusion components. Result lives over s_k o.
inline QuiverRep reflect_plus(const ValuedGraph& g, const Orientation& o,
                              int k, const QuiverRep& M) {
  require_simply_laced(g, "reflect_plus");
  if (!is_sink(g, o, k))
    throw std::invalid_argument("reflect_plus: vertex is not a sink");

  std::vector<size_t> in_edges;
  int total = 0;
  std::vector<int> block_off;
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (o.arrows[e].second == k) {
      in_edges.push_back(e);
      block_off.push_back(total);
      total += M.dims[o.arrows[e].first];
    }
  Mat assembled(M.dims[k], total);
  for (size_t b = 0; b < in_edges.size(); ++b) {
    const Mat& m = M.maps[in_edges[b]];
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c)
        assembled.at(r, block_off[b] + c) = m.at(r, c);
  }
  Mat kernel = null_space(assembled);  // total x w

  QuiverRep out = M;
  out.dims[k] = kernel.cols;
  Orientation so = reverse_at(g, o, k);
  for (size_t b = 0; b < in_edges.size(); ++b) {
    size_t e = in_edges[b];
    int j = o.arrows[e].first;
    Mat block(M.dims[j], kernel.cols);  // new map W_k -> V_j
    for (int r = 0; r < M.dims[j]; ++r)
      for (int c = 0; c < kernel.cols; ++c)
        block.at(r, c) = kernel.at(block_off[b] + r, c);
    out.maps[e] = block;
  }
  fix_shapes(g, so, out);
  return out;
}

// Dual construction at a source: V_k is replaced by the cokernel of
// V_k -> (+)_{k->j} V_j. Result lives over s_k o.
inline QuiverRep reflect_minus(const ValuedGraph& g, const Orientation& o,
                               int k, const QuiverRep& M) {
  require_simply_laced(g, "reflect_minus");
  if (!is_source(g, o, k))
    throw std::invalid_argument("reflect_minus: vertex is not a source");

  std::vector<size_t> out_edges;
  int total = 0;
  std::vector<int> block_off;
  for (size_t e = 0; e < g.edges.size(); ++e)
    if (o.arrows[e].first == k) {
      out_edges.push_back(e);
      block_off.push_back(total);
      total += M.dims[o.arrows[e].second];
    }
  Mat stacked(total, M.dims[k]);
  for (size_t b = 0; b < out_edges.size(); ++b) {
    const Mat& m = M.maps[out_edges[b]];
    for (int r = 0; r < m.rows; ++r)
      for (int c = 0; c < m.cols; ++c)
        stacked.at(block_off[b] + r, c) = m.at(r, c);
  }
  Mat proj = left_null_space(stacked);  // w x total

  QuiverRep out = M;
  out.dims[k] = proj.rows;
  Orientation so = reverse_at(g, o, k);
  for (size_t b = 0; b < out_edges.size(); ++b) {
    size_t e = out_edges[b];
    int j = o.arrows[e].second;
    Mat block(proj.rows, M.dims[j]);  // new map V_j -> W_k
    for (int r = 0; r < proj.rows; ++r)
      for (int c = 0; c < M.dims[j]; ++c)
        block.at(r, c) = proj.at(r, block_off[b] + c);
    out.maps[e] = block;
  }
  fix_shapes(g, so, out);
  return out;
}

// The unique indecomposable with dimension vector beta (Gabriel), built
// by the BGP bootstrap: walk beta down to a simple root along a sink
// sequence, then replay the reversed sequence with reflect_minus.
inline QuiverRep indecomposable_for(const ValuedGraph& g, const Orientation& o,
                                    const Root& beta) {
  require_simply_laced(g, "indecomposable_for");
  if (!is_nonnegative(beta) || height(beta) == 0)
    throw std::invalid_argument("indecomposable_for: positive root required");

  std::vector<int> seq;
  std::vector<Orientation> orients{o};
  Root v = beta;
  int final_vertex = -1;
  int cap = 4 * g.n * (detail::max_coxeter_number(g) + 2);
  while ((int)seq.size() <= cap) {
    bool reduced = false;
    for (int k : sinks(g, orients.back())) {
      if (v == simple_root(g.n, k)) {
        final_vertex = k;
        break;
      }
      Root w = simple_reflection(g, k, v);
      if (!is_nonnegative(w))
        throw std::invalid_argument(
            "indecomposable_for: input is not a positive root");
      seq.push_back(k);
      orients.push_back(reverse_at(g, orients.back(), k));
      v = w;
      reduced = true;
      break;  // restart the sink scan against the new orientation
    }
    if (final_vertex != -1) break;
    if (!reduced)
      throw std::logic_error("indecomposable_for: no usable sink");
  }
  if (final_vertex == -1)
    throw std::invalid_argument(
        "indecomposable_for: reduction cap exceeded; not a positive root");

  QuiverRep rep = simple_rep(g, final_vertex);
  fix_shapes(g, orients.back(), rep);
  for (int t = (int)seq.size() - 1; t >= 0; --t)
    rep = reflect_minus(g, orients[t + 1], seq[t], rep);
  return rep;
}

// Indecomposable objects of the cluster category: modules indexed by
// positive roots, plus shifted projectives P_i[1].
struct IndObject {
  enum class Kind { Module, ShiftedProjective };
  Kind kind;
  Root beta;   // Module only
  int vertex;  // ShiftedProjective only

  static IndObject module(Root b) {
    return {Kind::Module, std::move(b), -1};
  }
  static IndObject shifted_projective(int i) { return {Kind::ShiftedProjective, {}, i}; }

  bool operator==(const IndObject& o) const {
    return kind == o.kind && beta == o.beta && vertex == o.vertex;
  }
};

inline Root gamma(const ValuedGraph& g, const IndObject& x) {
  if (x.kind == IndObject::Kind::Module) return x.beta;
  return negative_simple(g.n, x.vertex);
}

inline IndObject gamma_inv(const ValuedGraph& g, const RootIndex& index,
                           const Root& r) {
  if (auto i = negative_simple_index(r)) return IndObject::shifted_projective(*i);
  if (!index.contains(r))
    throw std::invalid_argument("gamma_inv: not an almost positive root");
  return IndObject::module(r);
}

// Object-level action of the BGP functor R(S_k^+) at a sink k:
//   E_k            -> P_k[1]
//   M(beta)        -> M(s_k beta)   (beta != alpha_k)
//   P_j[1], j != k -> P_j[1]
//   P_k[1]         -> E_k
inline IndObject object_reflect(const ValuedGraph& g, const Orientation& o,
                                int k, const IndObject& x) {
  if (!is_sink(g, o, k))
    throw std::invalid_argument("object_reflect: vertex is not a sink");
  if (x.kind == IndObject::Kind::ShiftedProjective)
    return x.vertex == k ? IndObject::module(simple_root(g.n, k)) : x;
  if (x.beta == simple_root(g.n, k)) return IndObject::shifted_projective(k);
  return IndObject::module(simple_reflection(g, k, x.beta));
}

// Decorated module: module part plus a graded space on the duplicated
// vertices. sdim(plus, minus) = dim(plus) - minus recovers gamma.
struct DecoratedModule {
  QuiverRep plus;
  std::vector<int> minus;
};

inline Root sdim(const ValuedGraph& g, const DecoratedModule& m) {
  Root r(g.n, 0);
  for (int i = 0; i < g.n; ++i) r[i] = m.plus.dims[i] - m.minus[i];
  return r;
}

inline DecoratedModule psi(const ValuedGraph& g, const Orientation& o,
                           const IndObject& x) {
  require_simply_laced(g, "psi");
  DecoratedModule m{zero_rep(g), std::vector<int>(g.n, 0)};
  if (x.kind == IndObject::Kind::Module)
    m.plus = indecomposable_for(g, o, x.beta);
  else
    m.minus[x.vertex] = 1;
  return m;
}

// Symmetrized Ext pairing on decorated modules:
//   ext(M+,N+) + ext(N+,M+) + sum_i dim(M+_i) minus_N(i)
//                           + sum_i minus_M(i) dim(N+_i).
inline int e_symmetrized(const ValuedGraph& g, const Orientation& o,
                         const DecoratedModule& M, const DecoratedModule& N) {
  int v = ext_dim(g, o, M.plus, N.plus) + ext_dim(g, o, N.plus, M.plus);
  for (int i = 0; i < g.n; ++i)
    v += M.plus.dims[i] * N.minus[i] + M.minus[i] * N.plus.dims[i];
  return v;
}

inline int omega_compat_degree(const ValuedGraph& g, const Orientation& o,
                               const RootIndex& index, const Root& alpha,
                               const Root& beta) {
  require_simply_laced(g, "omega_compat_degree");
  DecoratedModule a = psi(g, o, gamma_inv(g, index, alpha));
  DecoratedModule b = psi(g, o, gamma_inv(g, index, beta));
  return e_symmetrized(g, o, a, b);
}

// All-pairs Omega-degree matrix over canonical root IDs; builds each
// indecomposable once.
struct OmegaDegreeTable {
  RootIndex index;
  std::vector<std::vector<int>> degree;

  OmegaDegreeTable(const ValuedGraph& g, const Orientation& o) : index(g) {
    require_simply_laced(g, "OmegaDegreeTable");
    int m = index.size();
    std::vector<DecoratedModule> mods;
    mods.reserve(m);
    for (const Root& r : index.list)
      mods.push_back(psi(g, o, gamma_inv(g, index, r)));
    degree.assign(m, std::vector<int>(m, 0));
    for (int a = 0; a < m; ++a)
      for (int b = a; b < m; ++b) {
        int v = e_symmetrized(g, o, mods[a], mods[b]);
        degree[a][b] = v;
        degree[b][a] = v;  // the pairing is symmetric by construction
      }
  }
};

}  // namespace clucat
