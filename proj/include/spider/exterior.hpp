#pragma once

// Sparse vectors and linear maps between boundary objects, plus the quantum
// group action making them modules.  On a wedge basis vector indexed by S the
// Chevalley generators act coefficient-free:
//
//   E_i x_S = x_{S - (i+1) + i}   when i+1 in S, i not in S, else 0
//   F_i x_S = x_{S - i + (i+1)}   when i in S, i+1 not in S, else 0
//   K_i x_S = q^{[i in S] - [i+1 in S]} x_S
//
// Dual factors carry the antipode-twisted action, which flips membership
// conditions and picks up -q resp. -q^{-1}.  Tensor products follow the
// coproduct with E placing K on later factors and F placing K^{-1} on
// earlier ones.

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "spider/scalar.hpp"
#include "spider/space.hpp"

namespace spider {

using Vec = std::map<int64_t, Laurent>;

inline void vec_add(Vec& out, int64_t idx, const Laurent& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = out.try_emplace(idx, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

inline void vec_accumulate(Vec& out, const Vec& v, const Laurent& scale) {
  if (scale.is_zero()) return;
  for (const auto& [idx, c] : v) vec_add(out, idx, scale * c);
}

struct LinearMap {
  Space src, dst;
  std::map<int64_t, Vec> cols;  // image of each source basis vector

  void set(int64_t col, int64_t row, const Laurent& c) {
    if (c.is_zero()) return;
    vec_add(cols[col], row, c);
    if (cols[col].empty()) cols.erase(col);
  }

  Laurent entry(int64_t row, int64_t col) const {
    auto it = cols.find(col);
    if (it == cols.end()) return Laurent::zero();
    auto jt = it->second.find(row);
    return jt == it->second.end() ? Laurent::zero() : jt->second;
  }

  Vec apply(const Vec& v) const {
    Vec out;
    for (const auto& [idx, c] : v) {
      auto it = cols.find(idx);
      if (it != cols.end()) vec_accumulate(out, it->second, c);
    }
    return out;
  }

  bool is_zero() const { return cols.empty(); }

  bool operator==(const LinearMap& o) const {
    return src.compatible(o.src) && dst.compatible(o.dst) && cols == o.cols;
  }
};

inline LinearMap identity_map(const Space& sp) {
  LinearMap m{sp, sp, {}};
  for (int64_t i = 0; i < sp.dim; i++) m.cols[i] = Vec{{i, Laurent::one()}};
  return m;
}

inline LinearMap zero_map(const Space& src, const Space& dst) {
  return LinearMap{src, dst, {}};
}

inline LinearMap compose(const LinearMap& f, const LinearMap& g) {
  // f after g
  if (!f.src.compatible(g.dst))
    throw std::invalid_argument("compose: boundary mismatch");
  LinearMap m{g.src, f.dst, {}};
  for (const auto& [col, v] : g.cols) {
    Vec img = f.apply(v);
    if (!img.empty()) m.cols.emplace(col, std::move(img));
  }
  return m;
}

inline LinearMap map_add(const LinearMap& f, const LinearMap& g) {
  if (!f.src.compatible(g.src) || !f.dst.compatible(g.dst))
    throw std::invalid_argument("map_add: boundary mismatch");
  LinearMap m = f;
  for (const auto& [col, v] : g.cols) {
    for (const auto& [row, c] : v) m.set(col, row, c);
  }
  return m;
}

inline LinearMap map_scale(const LinearMap& f, const Laurent& s) {
  LinearMap m{f.src, f.dst, {}};
  if (s.is_zero()) return m;
  for (const auto& [col, v] : f.cols)
    for (const auto& [row, c] : v) m.cols[col][row] = s * c;
  return m;
}

inline LinearMap map_sub(const LinearMap& f, const LinearMap& g) {
  return map_add(f, map_scale(g, -Laurent::one()));
}

inline LinearMap tensor(const LinearMap& f, const LinearMap& g) {
  LinearMap m{join(f.src, g.src), join(f.dst, g.dst), {}};
  for (const auto& [c1, v1] : f.cols)
    for (const auto& [c2, v2] : g.cols) {
      Vec img;
      for (const auto& [r1, a1] : v1)
        for (const auto& [r2, a2] : v2)
          img[r1 * g.dst.dim + r2] = a1 * a2;
      m.cols[c1 * g.src.dim + c2] = std::move(img);
    }
  return m;
}

// --- quantum group action ---------------------------------------------------

// Contribution of factor (S, dual) to the K_i eigenvalue.
inline int k_weight(Subset s, bool dual, int i) {
  int w = int(contains(s, i)) - int(contains(s, i + 1));
  return dual ? -w : w;
}

namespace detail {

struct FactorImage {
  Subset subset;
  Laurent coeff;
  bool zero;
};

inline FactorImage factor_E(Subset s, bool dual, int i, int root) {
  if (!dual) {
    if (contains(s, i + 1) && !contains(s, i))
      return {with(without(s, i + 1), i), Laurent::one(), false};
  } else {
    if (contains(s, i) && !contains(s, i + 1))
      return {with(without(s, i), i + 1), -q_power(1, root), false};
  }
  return {0, Laurent::zero(), true};
}

inline FactorImage factor_F(Subset s, bool dual, int i, int root) {
  if (!dual) {
    if (contains(s, i) && !contains(s, i + 1))
      return {with(without(s, i), i + 1), Laurent::one(), false};
  } else {
    if (contains(s, i + 1) && !contains(s, i))
      return {with(without(s, i + 1), i), -q_power(-1, root), false};
  }
  return {0, Laurent::zero(), true};
}

}  // namespace detail

// E_i acting through the coproduct: at each factor, with K_i on all later
// factors.
inline LinearMap act_E(const Space& sp, int i) {
  LinearMap m{sp, sp, {}};
  for (int64_t col = 0; col < sp.dim; col++) {
    std::vector<Subset> tuple = tuple_of(sp, col);
    for (size_t p = 0; p < tuple.size(); p++) {
      auto img =
          detail::factor_E(tuple[p], sp.strands[p].dual, i, sp.root);
      if (img.zero) continue;
      int tail = 0;
      for (size_t j = p + 1; j < tuple.size(); j++)
        tail += k_weight(tuple[j], sp.strands[j].dual, i);
      std::vector<Subset> out = tuple;
      out[p] = img.subset;
      m.set(col, index_of(sp, out), img.coeff * q_power(tail, sp.root));
    }
  }
  return m;
}

// F_i acting through the coproduct: at each factor, with K_i^{-1} on all
// earlier factors.
inline LinearMap act_F(const Space& sp, int i) {
  LinearMap m{sp, sp, {}};
  for (int64_t col = 0; col < sp.dim; col++) {
    std::vector<Subset> tuple = tuple_of(sp, col);
    for (size_t p = 0; p < tuple.size(); p++) {
      auto img =
          detail::factor_F(tuple[p], sp.strands[p].dual, i, sp.root);
      if (img.zero) continue;
      int head = 0;
      for (size_t j = 0; j < p; j++)
        head += k_weight(tuple[j], sp.strands[j].dual, i);
      std::vector<Subset> out = tuple;
      out[p] = img.subset;
      m.set(col, index_of(sp, out), img.coeff * q_power(-head, sp.root));
    }
  }
  return m;
}

inline LinearMap act_K(const Space& sp, int i, int sign = 1) {
  LinearMap m{sp, sp, {}};
  for (int64_t col = 0; col < sp.dim; col++) {
    std::vector<Subset> tuple = tuple_of(sp, col);
    int w = 0;
    for (size_t j = 0; j < tuple.size(); j++)
      w += k_weight(tuple[j], sp.strands[j].dual, i);
    m.set(col, col, q_power(sign * w, sp.root));
  }
  return m;
}

}  // namespace spider
