#pragma once

// Boundary objects: tensor products of fundamental exterior powers of the
// standard n-dimensional space and their duals.  A strand carries a label k
// (the exterior degree) and an orientation; upward strands contribute the
// wedge factor itself, downward ones its dual.  Basis vectors of a factor are
// indexed by k-element subsets, so a basis vector of the whole object is a
// tuple of subsets addressed by one mixed-radix integer (leftmost factor most
// significant).

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "spider/subset.hpp"

namespace spider {

struct Strand {
  int label = 1;
  bool dual = false;  // true for downward (negative) strands

  bool operator==(const Strand&) const = default;
};

struct Space {
  int n = 2;
  int root = 1;  // q = u^root
  std::vector<Strand> strands;

  // Derived basis data, filled by make_space.
  std::vector<std::vector<Subset>> bases;
  std::vector<int64_t> strides;
  int64_t dim = 1;

  bool compatible(const Space& o) const {
    return n == o.n && root == o.root && strands == o.strands;
  }
};

inline Space make_space(int n, int root, std::vector<Strand> strands) {
  Space sp;
  sp.n = n;
  sp.root = root;
  sp.strands = std::move(strands);
  sp.bases.reserve(sp.strands.size());
  for (const Strand& s : sp.strands)
    sp.bases.push_back(k_subsets(n, s.label));
  sp.strides.assign(sp.strands.size(), 1);
  for (int j = int(sp.strands.size()) - 2; j >= 0; j--)
    sp.strides[j] = sp.strides[j + 1] * int64_t(sp.bases[j + 1].size());
  sp.dim = sp.strands.empty() ? 1 : sp.strides[0] * int64_t(sp.bases[0].size());
  return sp;
}

// Concatenation of boundary objects (tensor product).
inline Space join(const Space& a, const Space& b) {
  if (a.n != b.n || a.root != b.root)
    throw std::invalid_argument("join: mismatched ambient parameters");
  std::vector<Strand> s = a.strands;
  s.insert(s.end(), b.strands.begin(), b.strands.end());
  return make_space(a.n, a.root, std::move(s));
}

inline int64_t index_of(const Space& sp, const std::vector<Subset>& tuple) {
  int64_t idx = 0;
  for (size_t j = 0; j < tuple.size(); j++) {
    const auto& basis = sp.bases[j];
    size_t pos = 0;
    while (pos < basis.size() && basis[pos] != tuple[j]) pos++;
    if (pos == basis.size())
      throw std::invalid_argument("index_of: subset not in factor basis");
    idx += int64_t(pos) * sp.strides[j];
  }
  return idx;
}

inline std::vector<Subset> tuple_of(const Space& sp, int64_t idx) {
  std::vector<Subset> tuple(sp.strands.size());
  for (size_t j = 0; j < sp.strands.size(); j++) {
    int64_t pos = idx / sp.strides[j];
    idx %= sp.strides[j];
    tuple[j] = sp.bases[j][size_t(pos)];
  }
  return tuple;
}

}  // namespace spider
