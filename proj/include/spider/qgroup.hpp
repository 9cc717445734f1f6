#pragma once

// Ladders and the idempotented quantum gl_m acting on tensor products of
// exterior powers.  A ladder is a source weight plus a bottom-to-top list of
// rungs; a rung carries a divided power E_i^{(r)} (moving r leftward between
// uprights i and i+1) or F_i^{(r)} (moving r rightward).  The same data
// doubles as a word in the generators, letters stored in application order.
//
// Two independent evaluations exist and must agree: phi_* acts directly on
// wedge tuples through the skew Howe action, while ladder_to_web compiles a
// rung into a split and a merge and evaluates through the web functor.

#include <string>
#include <vector>

#include "spider/functor.hpp"

namespace spider {

using GlWeight = std::vector<int>;

struct ULetter {
  bool isF = false;  // false: E_i^{(r)}, true: F_i^{(r)}
  int i = 1;         // 1-based, acts between uprights i and i+1
  int r = 1;

  bool operator==(const ULetter&) const = default;
};

inline GlWeight weight_after(GlWeight k, const ULetter& u) {
  int d = u.isF ? -u.r : u.r;
  k[u.i - 1] += d;
  k[u.i] -= d;
  return k;
}

inline bool n_bounded(const GlWeight& k, int n) {
  for (int v : k)
    if (v < 0 || v > n) return false;
  return true;
}

inline Space weight_space(const GlWeight& k, int n, int root = 1) {
  std::vector<Strand> strands;
  for (int v : k) strands.push_back({v, false});
  return make_space(n, root, strands);
}

namespace detail {

inline int count_lt(Subset a, int r) {
  return spider::popcount(a & ((1u << (r - 1)) - 1));
}
inline int count_gt(Subset a, int r) {
  return spider::popcount(a >> r);
}

// Single (undivided) generator of the Howe action on wedge tuples.
inline LinearMap phi_single(const GlWeight& k, int n, const ULetter& u,
                            int root) {
  GlWeight k2 = weight_after(k, {u.isF, u.i, 1});
  Space src = weight_space(k, n, root);
  Space dst = weight_space(k2, n, root);
  LinearMap m{src, dst, {}};
  if (src.dim == 0 || dst.dim == 0) return m;
  int p = u.i - 1;  // factors p and p+1
  for (int64_t col = 0; col < src.dim; col++) {
    auto tuple = tuple_of(src, col);
    Subset sp = tuple[p], sq = tuple[p + 1];
    if (!u.isF) {
      int sign = (popcount(sq) + 1) % 2 ? -1 : 1;
      for (Subset rest = sq & ~sp; rest; rest &= rest - 1) {
        int r = std::countr_zero(rest) + 1;
        Laurent c = neg_q_power(count_lt(sp, r) - count_lt(sq, r), root);
        auto out = tuple;
        out[p] = with(sp, r);
        out[p + 1] = without(sq, r);
        m.set(col, index_of(dst, out), sign < 0 ? -c : c);
      }
    } else {
      int sign = (popcount(sp) + 1) % 2 ? -1 : 1;
      for (Subset rest = sp & ~sq; rest; rest &= rest - 1) {
        int r = std::countr_zero(rest) + 1;
        Laurent c = neg_q_power(count_gt(sq, r) - count_gt(sp, r), root);
        auto out = tuple;
        out[p] = without(sp, r);
        out[p + 1] = with(sq, r);
        m.set(col, index_of(dst, out), sign < 0 ? -c : c);
      }
    }
  }
  return m;
}

}  // namespace detail

// Divided power E_i^{(r)} 1_k resp. F_i^{(r)} 1_k as a matrix; entries of
// the r-fold product are exactly divisible by [r]!.
inline LinearMap phi_letter(const GlWeight& k, int n, const ULetter& u,
                            int root = 1) {
  GlWeight cur = k;
  LinearMap m = identity_map(weight_space(k, n, root));
  for (int step = 0; step < u.r; step++) {
    m = compose(detail::phi_single(cur, n, {u.isF, u.i, 1}, root), m);
    cur = weight_after(cur, {u.isF, u.i, 1});
  }
  Laurent fact = quantum_factorial(u.r, root);
  LinearMap out{m.src, m.dst, {}};
  for (const auto& [col, v] : m.cols)
    for (const auto& [row, c] : v) out.set(col, row, divide_exact(c, fact));
  return out;
}

// Image of a word under the Howe action, zero whenever an intermediate
// weight leaves the n-bounded range (the truncation ideal).
inline LinearMap phi_word(const GlWeight& k, int n,
                          const std::vector<ULetter>& letters, int root = 1) {
  GlWeight cur = k;
  LinearMap m = identity_map(weight_space(k, n, root));
  for (const ULetter& u : letters) {
    m = compose(phi_letter(cur, n, u, root), m);
    cur = weight_after(cur, u);
  }
  return m;
}

// --- ladders ----------------------------------------------------------------

struct Ladder {
  int n = 2;
  GlWeight src;
  std::vector<ULetter> rungs;  // bottom to top

  bool operator==(const Ladder&) const = default;

  int uprights() const { return int(src.size()); }
  GlWeight dst() const {
    GlWeight k = src;
    for (const ULetter& u : rungs) k = weight_after(k, u);
    return k;
  }
};

// Compile a ladder into a sliced web: an E-rung splits r off the right
// upright and merges it into the left one, an F-rung mirrors that.  Labels
// leaving [0, n] simply produce zero-dimensional strands, matching the
// truncation.
inline Web ladder_to_web(const Ladder& lad) {
  Web w;
  w.n = lad.n;
  for (int v : lad.src) w.src.push_back({v, false});
  GlWeight k = lad.src;
  int m = lad.uprights();
  for (const ULetter& u : lad.rungs) {
    if (u.i < 1 || u.i >= m)
      throw std::invalid_argument("ladder_to_web: rung index out of range");
    std::vector<Cell> lower, upper;
    for (int j = 0; j < m; j++) {
      if (j == u.i - 1) {
        if (!u.isF) {
          // split (r, k_{i+1}-r) on the right upright, then merge leftward
          lower.push_back(id_cell(k[j]));
          lower.push_back(split_cell(u.r, k[j + 1] - u.r));
          upper.push_back(merge_cell(k[j], u.r));
          upper.push_back(id_cell(k[j + 1] - u.r));
        } else {
          lower.push_back(split_cell(k[j] - u.r, u.r));
          lower.push_back(id_cell(k[j + 1]));
          upper.push_back(id_cell(k[j] - u.r));
          upper.push_back(merge_cell(u.r, k[j + 1]));
        }
        j++;  // consumed two uprights
      } else {
        lower.push_back(id_cell(k[j]));
        upper.push_back(id_cell(k[j]));
      }
    }
    w.rows.push_back(std::move(lower));
    w.rows.push_back(std::move(upper));
    k = weight_after(k, u);
  }
  return w;
}

inline LinearMap ladder_map(const Ladder& lad, int root = 1) {
  return phi_word(lad.src, lad.n, lad.rungs, root);
}

// --- text forms -------------------------------------------------------------

inline std::string render_ladder(const Ladder& lad) {
  std::string out = "ladder n=" + std::to_string(lad.n) + " src=(";
  for (size_t j = 0; j < lad.src.size(); j++) {
    if (j) out += ",";
    out += std::to_string(lad.src[j]);
  }
  out += ")\n";
  for (const ULetter& u : lad.rungs)
    out += std::string(u.isF ? "F" : "E") + " " + std::to_string(u.i) + " " +
           std::to_string(u.r) + "\n";
  return out;
}

inline Ladder parse_ladder(const std::string& text) {
  Ladder lad;
  bool seen_header = false;
  for (const std::string& raw : detail::split(text, '\n')) {
    std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      if (line.rfind("ladder ", 0) != 0)
        throw std::invalid_argument("expected 'ladder n=.. src=(..)' header");
      std::istringstream is(line.substr(7));
      std::string field;
      bool have_n = false, have_src = false;
      while (is >> field) {
        if (field.rfind("n=", 0) == 0) {
          lad.n = std::stoi(field.substr(2));
          have_n = true;
        } else if (field.rfind("src=", 0) == 0) {
          std::string body = field.substr(4);
          if (body.size() < 2 || body.front() != '(' || body.back() != ')')
            throw std::invalid_argument("bad src list " + body);
          std::string inner = body.substr(1, body.size() - 2);
          if (!detail::trim(inner).empty())
            for (const std::string& piece : detail::split(inner, ','))
              lad.src.push_back(std::stoi(detail::trim(piece)));
          have_src = true;
        } else {
          throw std::invalid_argument("bad header field " + field);
        }
      }
      if (!have_n || !have_src)
        throw std::invalid_argument("header needs n= and src=");
      seen_header = true;
      continue;
    }
    std::istringstream is(line);
    std::string gen;
    ULetter u;
    if (!(is >> gen >> u.i >> u.r) || (gen != "E" && gen != "F"))
      throw std::invalid_argument("bad rung line: " + line);
    std::string rest;
    if (is >> rest) throw std::invalid_argument("bad rung line: " + line);
    u.isF = gen == "F";
    if (u.i < 1 || u.i >= lad.uprights() || u.r < 0)
      throw std::invalid_argument("rung out of range: " + line);
    lad.rungs.push_back(u);
  }
  if (!seen_header) throw std::invalid_argument("missing ladder header");
  return lad;
}

// Words are written like "F1^2 E2 F3", rightmost letter applied first; the
// exponent is the divided power.
inline std::vector<ULetter> parse_uword(const std::string& text) {
  std::vector<ULetter> letters;
  std::istringstream is(text);
  std::string tok;
  while (is >> tok) {
    ULetter u;
    if (tok.size() < 2 || (tok[0] != 'E' && tok[0] != 'F'))
      throw std::invalid_argument("bad word letter " + tok);
    u.isF = tok[0] == 'F';
    size_t caret = tok.find('^');
    std::string idx = tok.substr(1, caret == std::string::npos
                                        ? std::string::npos
                                        : caret - 1);
    if (idx.empty()) throw std::invalid_argument("bad word letter " + tok);
    u.i = std::stoi(idx);
    if (caret != std::string::npos) {
      std::string pw = tok.substr(caret + 1);
      if (pw.empty()) throw std::invalid_argument("bad word letter " + tok);
      u.r = std::stoi(pw);
    }
    letters.push_back(u);
  }
  std::reverse(letters.begin(), letters.end());
  return letters;
}

inline std::string render_uword(const std::vector<ULetter>& letters) {
  std::string out;
  for (auto it = letters.rbegin(); it != letters.rend(); ++it) {
    if (!out.empty()) out += " ";
    out += it->isF ? "F" : "E";
    out += std::to_string(it->i);
    if (it->r != 1) out += "^" + std::to_string(it->r);
  }
  return out;
}

}  // namespace spider
