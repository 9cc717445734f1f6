#pragma once

// Subsets of {1,...,n} as bitmasks (bit i-1 holds membership of i), used to
// index wedge basis vectors of exterior powers.

#include <bit>
#include <cstdint>
#include <vector>

namespace spider {

using Subset = uint32_t;

constexpr int kMaxGround = 31;

inline bool contains(Subset s, int i) { return (s >> (i - 1)) & 1u; }
inline Subset with(Subset s, int i) { return s | (1u << (i - 1)); }
inline Subset without(Subset s, int i) { return s & ~(1u << (i - 1)); }
inline int popcount(Subset s) { return std::popcount(s); }
inline Subset complement(Subset s, int n) { return ~s & ((1u << n) - 1); }
inline Subset full_set(int n) { return (1u << n) - 1; }

// Number of pairs (i,j) with i in s, j in t, i < j.
inline int ell(Subset s, Subset t) {
  int count = 0;
  for (Subset rest = t; rest; rest &= rest - 1) {
    int j = std::countr_zero(rest);          // element j+1 of t
    count += std::popcount(s & ((1u << j) - 1));
  }
  return count;
}

inline std::vector<int> elements(Subset s) {
  std::vector<int> out;
  for (Subset rest = s; rest; rest &= rest - 1)
    out.push_back(std::countr_zero(rest) + 1);
  return out;
}

// All k-element subsets of {1..n} in increasing bitmask order.
inline std::vector<Subset> k_subsets(int n, int k) {
  std::vector<Subset> out;
  if (k < 0 || k > n) return out;
  if (k == 0) {
    out.push_back(0);
    return out;
  }
  Subset s = (1u << k) - 1;
  Subset limit = 1u << n;
  while (s < limit) {
    out.push_back(s);
    // Gosper's hack: next bitmask with the same popcount.
    Subset c = s & -s;
    Subset r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
  return out;
}

}  // namespace spider
