#pragma once

// Evaluation of webs as linear maps.  Each cell becomes an explicit matrix
// on wedge bases:
//
//   merge   x_S (x) x_T  ->  (-q)^{ell(S,T)} x_{S u T}      (0 unless disjoint)
//   split   x_U  ->  (-1)^{kl} sum_T (-q)^{-ell(U\T,T)} x_T (x) x_{U\T}
//   tagout  x_S  ->  (-q)^{ell(S,S^c)} x_{S^c}^*            (left tag)
//   tagin   x_T^*  ->  (-q)^{-ell(T^c,T)} x_{T^c}           (left tag)
//   cup -+  1  ->  sum_T q^{k(n-k) - 2 ell(T,T^c)} x_T^* (x) x_T
//   cup +-  1  ->  sum_T x_T (x) x_T^*
//   cap -+  x_T^* (x) x_U  ->  delta_{T,U}
//   cap +-  x_S (x) x_T^*  ->  delta_{S,T} q^{-k(n-k) + 2 ell(S,S^c)}
//
// Right-side tags differ from left ones by (-1)^{k(n-k)}.  These matrices
// intertwine the quantum group action; the test suite checks that cell by
// cell.

#include <stdexcept>

#include "spider/exterior.hpp"
#include "spider/web.hpp"

namespace spider {

inline int tag_sign(int k, int n) { return (int64_t(k) * (n - k)) % 2 ? -1 : 1; }

inline Laurent neg_q_power(int e, int root) {
  Laurent v = q_power(e, root);
  return e % 2 ? -v : v;  // (-q)^e
}

inline LinearMap cell_map(const Cell& c, int n, int root) {
  Space src = make_space(n, root, cell_inputs(c, n));
  Space dst = make_space(n, root, cell_outputs(c, n));
  LinearMap m{src, dst, {}};
  if (src.dim == 0 || dst.dim == 0) return m;
  switch (c.kind) {
    case CellKind::Id:
      return identity_map(src);
    case CellKind::Merge: {
      for (int64_t col = 0; col < src.dim; col++) {
        auto t = tuple_of(src, col);
        if (t[0] & t[1]) continue;
        m.set(col, index_of(dst, {t[0] | t[1]}),
              neg_q_power(ell(t[0], t[1]), root));
      }
      return m;
    }
    case CellKind::Split: {
      int sign = (c.k % 2) && (c.l % 2) ? -1 : 1;  // (-1)^{kl}
      for (int64_t col = 0; col < src.dim; col++) {
        Subset u = tuple_of(src, col)[0];
        for (Subset t : k_subsets(n, c.k)) {
          if ((t & u) != t) continue;
          Subset rest = u & ~t;
          Laurent coeff = neg_q_power(-ell(rest, t), root);
          if (sign < 0) coeff = -coeff;
          m.set(col, index_of(dst, {t, rest}), coeff);
        }
      }
      return m;
    }
    case CellKind::TagOut: {
      int sign = c.side == 'L' ? 1 : tag_sign(c.k, n);
      for (int64_t col = 0; col < src.dim; col++) {
        Subset s = tuple_of(src, col)[0];
        Subset sc = complement(s, n);
        Laurent coeff = neg_q_power(ell(s, sc), root);
        if (sign < 0) coeff = -coeff;
        m.set(col, index_of(dst, {sc}), coeff);
      }
      return m;
    }
    case CellKind::TagIn: {
      int sign = c.side == 'L' ? 1 : tag_sign(c.k, n);
      for (int64_t col = 0; col < src.dim; col++) {
        Subset t = tuple_of(src, col)[0];
        Subset tc = complement(t, n);
        Laurent coeff = neg_q_power(-ell(tc, t), root);
        if (sign < 0) coeff = -coeff;
        m.set(col, index_of(dst, {tc}), coeff);
      }
      return m;
    }
    case CellKind::Cup: {
      int p = c.k * (n - c.k);
      for (Subset t : k_subsets(n, c.k)) {
        if (c.minus_left) {
          m.set(0, index_of(dst, {t, t}),
                q_power(p - 2 * ell(t, complement(t, n)), root));
        } else {
          m.set(0, index_of(dst, {t, t}), Laurent::one());
        }
      }
      return m;
    }
    case CellKind::Cap: {
      int p = c.k * (n - c.k);
      for (int64_t col = 0; col < src.dim; col++) {
        auto t = tuple_of(src, col);
        if (t[0] != t[1]) continue;
        if (c.minus_left) {
          m.set(col, 0, Laurent::one());
        } else {
          m.set(col, 0, q_power(-p + 2 * ell(t[0], complement(t[0], n)), root));
        }
      }
      return m;
    }
  }
  return m;
}

inline LinearMap row_map(const std::vector<Cell>& row, int n, int root) {
  LinearMap m = identity_map(make_space(n, root, {}));
  for (const Cell& c : row) m = tensor(m, cell_map(c, n, root));
  return m;
}

// The evaluation functor: compose the rows bottom to top.
inline LinearMap web_map(const Web& w, int root = 1) {
  std::string why;
  if (web_status(w, &why) == WebStatus::Malformed)
    throw std::invalid_argument("web_map: malformed web: " + why);
  LinearMap m = identity_map(make_space(w.n, root, w.src));
  for (const auto& row : w.rows) m = compose(row_map(row, w.n, root), m);
  return m;
}

inline LinearMap websum_map(const WebSum& ws, int root = 1) {
  if (ws.empty()) throw std::invalid_argument("websum_map: empty sum");
  LinearMap acc = map_scale(web_map(ws[0].second, root), ws[0].first);
  for (size_t i = 1; i < ws.size(); i++)
    acc = map_add(acc, map_scale(web_map(ws[i].second, root), ws[i].first));
  return acc;
}

// A closed web evaluates to a scalar.
inline Laurent closed_web_value(const Web& w, int root = 1) {
  if (!w.src.empty() || !web_dst(w).empty())
    throw std::invalid_argument("closed_web_value: web has open boundary");
  return web_map(w, root).entry(0, 0);
}

// --- duality ----------------------------------------------------------------
//
// The dual of a boundary reverses the strand order and flips orientations.
// Coevaluation and evaluation are nested cup resp. cap chains; the zigzag
// identities hold strictly, so rotating a morphism by pi is the sandwich
// (ev (x) id) o (id (x) f (x) id) o (id (x) coev).

inline std::vector<Strand> dual_boundary(std::vector<Strand> strands) {
  std::reverse(strands.begin(), strands.end());
  for (Strand& s : strands) s.dual = !s.dual;
  return strands;
}

// 1 -> X (x) X^dual, outermost pair first.
inline LinearMap coev_chain(const std::vector<Strand>& strands, int n,
                            int root = 1) {
  if (strands.empty()) return identity_map(make_space(n, root, {}));
  Strand s = strands.front();
  std::vector<Strand> rest(strands.begin() + 1, strands.end());
  LinearMap outer = cell_map(cup_cell(s.label, s.dual), n, root);
  LinearMap inner = coev_chain(rest, n, root);
  Strand sd{s.label, !s.dual};
  return compose(tensor(tensor(identity_map(make_space(n, root, {s})), inner),
                        identity_map(make_space(n, root, {sd}))),
                 outer);
}

// X^dual (x) X -> 1, innermost pair first.
inline LinearMap ev_chain(const std::vector<Strand>& strands, int n,
                          int root = 1) {
  if (strands.empty()) return identity_map(make_space(n, root, {}));
  Strand s = strands.front();
  std::vector<Strand> rest(strands.begin() + 1, strands.end());
  Strand sd{s.label, !s.dual};
  LinearMap first =
      tensor(tensor(identity_map(make_space(n, root, dual_boundary(rest))),
                    cell_map(cap_cell(s.label, !s.dual), n, root)),
             identity_map(make_space(n, root, rest)));
  return compose(ev_chain(rest, n, root), first);
}

// --- text form --------------------------------------------------------------

// Basis vectors are tuples of subsets of {1..n}, one per strand.
inline std::string render_basis_index(const Space& sp, int64_t idx) {
  if (sp.strands.empty()) return "1";
  auto tup = tuple_of(sp, idx);
  std::string out;
  for (size_t j = 0; j < tup.size(); j++) {
    if (j) out += "x";
    out += "{";
    bool leading = true;
    for (int e = 1; e <= sp.n; e++)
      if (contains(tup[j], e)) {
        if (!leading) out += ",";
        out += std::to_string(e);
        leading = false;
      }
    out += "}";
    if (sp.strands[j].dual) out += "*";
  }
  return out;
}

inline std::string render_map(const LinearMap& m) {
  int root = m.src.root;
  std::string out = "map src=" + render_strands(m.src.strands) +
                    " dst=" + render_strands(m.dst.strands) +
                    " root=" + std::to_string(root) + "\n";
  for (const auto& [col, v] : m.cols)
    for (const auto& [row, c] : v)
      out += render_basis_index(m.src, col) + " -> " +
             render_basis_index(m.dst, row) + " : " + render_scalar(c, root) +
             "\n";
  if (m.cols.empty()) out += "(zero)\n";
  return out;
}

inline LinearMap dual_morphism(const LinearMap& f) {
  int n = f.src.n, root = f.src.root;
  std::vector<Strand> x = f.src.strands, y = f.dst.strands;
  LinearMap step1 =
      tensor(identity_map(make_space(n, root, dual_boundary(y))),
             coev_chain(x, n, root));
  LinearMap step2 =
      tensor(tensor(identity_map(make_space(n, root, dual_boundary(y))), f),
             identity_map(make_space(n, root, dual_boundary(x))));
  LinearMap step3 = tensor(ev_chain(y, n, root),
                           identity_map(make_space(n, root, dual_boundary(x))));
  return compose(step3, compose(step2, step1));
}

}  // namespace spider
