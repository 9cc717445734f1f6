#pragma once

// Test harness utilities: a seeded generator of structurally valid webs,
// and an exact rank probe for the image of the quantum group action.

#include <algorithm>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

#include "spider/ladderize.hpp"

namespace spider {

struct RandomWebOptions {
  int max_strands = 4;
  int steps = 8;
  bool allow_overfull = false;  // permit merges past n (zero webs)
};

namespace harness_detail {

struct Move {
  Cell cell;
  int pos = 0;  // strand offset where the cell sits
};

inline std::vector<Move> candidate_moves(const std::vector<Strand>& cur, int n,
                                         const RandomWebOptions& opt) {
  std::vector<Move> out;
  int len = static_cast<int>(cur.size());
  for (int p = 0; p < len; p++) {
    const Strand& s = cur[p];
    if (!s.dual) {
      for (char side : {'L', 'R'}) out.push_back({tagout_cell(s.label, side), p});
      for (int k = 0; k <= s.label; k++)
        out.push_back({split_cell(k, s.label - k), p});
    } else {
      for (char side : {'L', 'R'})
        out.push_back({tagin_cell(s.label, side), p});
    }
  }
  for (int p = 0; p + 1 < len; p++) {
    const Strand &a = cur[p], &b = cur[p + 1];
    if (!a.dual && !b.dual && (opt.allow_overfull || a.label + b.label <= n))
      out.push_back({merge_cell(a.label, b.label), p});
    if (a.label == b.label) {
      if (a.dual && !b.dual) out.push_back({cap_cell(a.label, true), p});
      if (!a.dual && b.dual) out.push_back({cap_cell(a.label, false), p});
    }
  }
  for (int p = 0; p <= len; p++)
    for (int k = 1; k < n; k++) {
      out.push_back({cup_cell(k, true), p});
      out.push_back({cup_cell(k, false), p});
    }
  return out;
}

inline void apply_move(Web& w, std::vector<Strand>& cur, const Move& mv) {
  std::vector<Cell> row;
  int p = 0;
  for (; p < mv.pos; p++) row.push_back(id_cell(cur[p].label, cur[p].dual));
  row.push_back(mv.cell);
  p += static_cast<int>(cell_inputs(mv.cell, w.n).size());
  for (; p < static_cast<int>(cur.size()); p++)
    row.push_back(id_cell(cur[p].label, cur[p].dual));
  w.rows.push_back(row);
  std::vector<Strand> next;
  for (const Cell& c : w.rows.back()) {
    auto outs = cell_outputs(c, w.n);
    next.insert(next.end(), outs.begin(), outs.end());
  }
  cur = std::move(next);
}

}  // namespace harness_detail

// Random web with upward boundary at both ends, structurally valid by
// construction.  Wide slices are steered toward arity decreasing moves so
// evaluation stays desk sized.
inline Web random_web(int n, std::mt19937_64& rng,
                      const RandomWebOptions& opt = {}) {
  using harness_detail::Move;
  std::uniform_int_distribution<int> count_d(1, std::max(1, opt.max_strands));
  std::uniform_int_distribution<int> label_d(1, std::max(1, n - 1));
  Web w;
  w.n = n;
  int strands = count_d(rng);
  for (int i = 0; i < strands; i++) w.src.push_back({label_d(rng), false});
  std::vector<Strand> cur = w.src;
  for (int step = 0; step < opt.steps; step++) {
    auto moves = harness_detail::candidate_moves(cur, n, opt);
    if (static_cast<int>(cur.size()) >= 6) {
      std::vector<Move> narrowing;
      for (const Move& m : moves) {
        auto c = m.cell;
        if (cell_outputs(c, n).size() < cell_inputs(c, n).size())
          narrowing.push_back(m);
      }
      if (!narrowing.empty()) moves = std::move(narrowing);
    }
    if (moves.empty()) break;
    std::uniform_int_distribution<size_t> pick(0, moves.size() - 1);
    harness_detail::apply_move(w, cur, moves[pick(rng)]);
  }
  // close remaining downward strands so the top boundary points up
  for (bool any = true; any;) {
    any = false;
    for (int p = 0; p < static_cast<int>(cur.size()); p++)
      if (cur[p].dual) {
        char side = (rng() & 1) ? 'L' : 'R';
        harness_detail::apply_move(w, cur, {tagin_cell(cur[p].label, side), p});
        any = true;
        break;
      }
  }
  return w;
}

// Exact row reduction over the rationals, for rank bookkeeping.
class RationalRowSpan {
 public:
  // returns true when v was independent of the span so far
  bool add(std::vector<Rational> v) {
    for (const auto& [piv, row] : rows_) {
      if (v[piv] == 0) continue;
      Rational f = v[piv];
      for (size_t j = 0; j < v.size(); j++) v[j] -= f * row[j];
    }
    size_t piv = v.size();
    for (size_t j = 0; j < v.size(); j++)
      if (v[j] != 0) {
        piv = j;
        break;
      }
    if (piv == v.size()) return false;
    Rational inv = 1 / v[piv];
    for (size_t j = 0; j < v.size(); j++) v[j] *= inv;
    rows_.emplace_back(piv, std::move(v));
    return true;
  }

  int rank() const { return static_cast<int>(rows_.size()); }

 private:
  std::vector<std::pair<size_t, std::vector<Rational>>> rows_;
};

struct HoweRank {
  int total_dim = 0;      // dimension of the degree K slice
  int algebra_dim = 0;    // span of the quantum group image
  int commutant_dim = 0;  // matrices commuting with that image
};

// Dimension of the algebra generated by the quantum group generators on the
// degree K slice of the exterior algebra, together with its commutant, both
// at an exact rational specialisation q0.  Multiplicity freeness of the
// decomposition shows up as commutant_dim equal to the number of blocks of
// the algebra, and algebra_dim equal to the sum of squared block sizes.
inline HoweRank howe_rank(int n, int m, int K, const Rational& q0) {
  if (q0 == 0) throw std::invalid_argument("howe_rank: q0 must be nonzero");
  // enumerate weights of total degree K
  std::vector<GlWeight> weights;
  GlWeight cur(m, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == m) {
      if (left == 0) weights.push_back(cur);
      return;
    }
    for (int v = 0; v <= std::min(n, left); v++) {
      cur[i] = v;
      rec(i + 1, left - v);
    }
    cur[i] = 0;
  };
  rec(0, K);

  std::vector<int> offset(weights.size()), bdim(weights.size());
  int D = 0;
  for (size_t b = 0; b < weights.size(); b++) {
    offset[b] = D;
    bdim[b] = static_cast<int>(weight_space(weights[b], n).dim);
    D += bdim[b];
  }
  auto block_of = [&](const GlWeight& k) -> int {
    for (size_t b = 0; b < weights.size(); b++)
      if (weights[b] == k) return static_cast<int>(b);
    return -1;
  };

  // dense specialised generator matrices on the whole slice
  using Dense = std::vector<std::vector<Rational>>;
  auto zero_dense = [&]() { return Dense(D, std::vector<Rational>(D)); };
  std::vector<Dense> gens;
  for (int i = 1; i < m; i++)
    for (bool isF : {false, true}) {
      Dense g = zero_dense();
      bool nonzero = false;
      for (size_t b = 0; b < weights.size(); b++) {
        ULetter let{isF, i, 1};
        GlWeight dst = weight_after(weights[b], let);
        int db = block_of(dst);
        if (db < 0) continue;
        LinearMap mp = phi_letter(weights[b], n, let);
        for (const auto& [col, vec] : mp.cols)
          for (const auto& [row, c] : vec) {
            g[offset[db] + row][offset[b] + col] = c.specialize(q0);
            nonzero = true;
          }
      }
      if (nonzero) gens.push_back(std::move(g));
    }
  // weight projections complete the idempotented algebra
  for (size_t b = 0; b < weights.size(); b++) {
    Dense g = zero_dense();
    for (int j = 0; j < bdim[b]; j++) g[offset[b] + j][offset[b] + j] = 1;
    gens.push_back(std::move(g));
  }

  auto flatten = [&](const Dense& a) {
    std::vector<Rational> v;
    v.reserve(static_cast<size_t>(D) * D);
    for (int r = 0; r < D; r++)
      for (int c = 0; c < D; c++) v.push_back(a[r][c]);
    return v;
  };
  auto mul = [&](const Dense& a, const Dense& b) {
    Dense out = zero_dense();
    for (int r = 0; r < D; r++)
      for (int k = 0; k < D; k++) {
        if (a[r][k] == 0) continue;
        for (int c = 0; c < D; c++)
          if (b[k][c] != 0) out[r][c] += a[r][k] * b[k][c];
      }
    return out;
  };

  RationalRowSpan span;
  std::vector<Dense> basis;
  auto consider = [&](const Dense& a) {
    if (span.add(flatten(a))) {
      basis.push_back(a);
      return true;
    }
    return false;
  };
  for (const Dense& g : gens) consider(g);
  for (size_t next = 0; next < basis.size(); next++) {
    Dense cur_mat = basis[next];  // copy: basis may grow and reallocate
    for (const Dense& g : gens) {
      consider(mul(g, cur_mat));
      consider(mul(cur_mat, g));
    }
  }
  HoweRank out;
  out.total_dim = D;
  out.algebra_dim = span.rank();

  // commutant: X with Xg = gX for all generators, X supported on the blocks
  // (the projections force block diagonality)
  std::vector<std::pair<int, int>> unknowns;
  for (size_t b = 0; b < weights.size(); b++)
    for (int r = 0; r < bdim[b]; r++)
      for (int c = 0; c < bdim[b]; c++)
        unknowns.push_back({offset[b] + r, offset[b] + c});
  int U = static_cast<int>(unknowns.size());
  std::vector<int> slot(static_cast<size_t>(D) * D, -1);
  for (int u = 0; u < U; u++)
    slot[static_cast<size_t>(unknowns[u].first) * D + unknowns[u].second] = u;
  RationalRowSpan eqs;
  for (const Dense& g : gens) {
    // rows of the linear system [X, g] = 0
    for (int r = 0; r < D; r++)
      for (int c = 0; c < D; c++) {
        std::vector<Rational> eq(U);
        bool any = false;
        for (int k = 0; k < D; k++) {
          int s1 = slot[static_cast<size_t>(r) * D + k];  // X[r,k] g[k,c]
          if (s1 >= 0 && g[k][c] != 0) {
            eq[s1] += g[k][c];
            any = true;
          }
          int s2 = slot[static_cast<size_t>(k) * D + c];  // -g[r,k] X[k,c]
          if (s2 >= 0 && g[r][k] != 0) {
            eq[s2] -= g[r][k];
            any = true;
          }
        }
        if (any) eqs.add(std::move(eq));
      }
  }
  out.commutant_dim = U - eqs.rank();
  return out;
}

}  // namespace spider
