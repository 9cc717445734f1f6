// Braiding morphisms on pairs of strand colors, braid-word evaluation, and
// closed-link invariants (quantum trace closure and plat closure).
//
// All maps here live at root order n: the ambient scalar ring is Z[u, u^-1]
// with q = u^n, so the fractional q-powers in the crossing normalization
// become honest monomials in u.

#pragma once

#include <array>
#include <cstdlib>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spider/exterior.hpp"
#include "spider/functor.hpp"
#include "spider/linalg.hpp"
#include "spider/qgroup.hpp"
#include "spider/scalar.hpp"
#include "spider/subset.hpp"
#include "spider/web.hpp"

namespace spider {

namespace braid_detail {

inline void check_color(int n, int c, const char* what) {
  if (c < 1 || c > n - 1)
    throw std::invalid_argument(std::string(what) +
                                ": strand colors must lie in 1..n-1");
}

}  // namespace braid_detail

// Positive crossing of a k-strand over an l-strand, written as a sum of
// two-upright ladder webs.  Term b carries rungs F^(b) then E^(b-k+l) and
// coefficient (-1)^(k+kl+b) u^(nk-kl-nb); the sum runs over all b for which
// the intermediate weight (k-b, l+b) stays inside 0..n.
inline WebSum pos_crossing_websum(int n, int k, int l) {
  braid_detail::check_color(n, k, "pos_crossing_websum");
  braid_detail::check_color(n, l, "pos_crossing_websum");
  WebSum out;
  int lo = std::max(0, k - l);
  int hi = std::min(k, n - l);
  for (int b = lo; b <= hi; b++) {
    int a = b - (k - l);
    Ladder lad{n, {k, l}, {}};
    if (b > 0) lad.rungs.push_back({true, 1, b});
    if (a > 0) lad.rungs.push_back({false, 1, a});
    Rational sign((k + k * l + b) % 2 == 0 ? 1 : -1);
    Laurent coeff = Laurent::monomial(n * k - k * l - n * b, sign);
    out.emplace_back(coeff, ladder_to_web(lad));
  }
  return out;
}

// Crossing matrix on (k, l), at root order n.  Positive crossings evaluate
// the web sum above; negative crossings invert the positive crossing in the
// opposite color order.  Results are cached per (n, k, l, sign).
inline const LinearMap& crossing_map(int n, int k, int l, bool positive) {
  static std::map<std::array<int, 4>, LinearMap> cache;
  std::array<int, 4> key{n, k, l, positive ? 1 : 0};
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  LinearMap m = positive ? websum_map(pos_crossing_websum(n, k, l), n)
                         : invert_map(crossing_map(n, l, k, true));
  return cache.emplace(key, std::move(m)).first->second;
}

// --- braid words ------------------------------------------------------------

// A braid word is a sequence of nonzero integers: letter +i crosses strand i
// over strand i+1, letter -i is the inverse crossing.  Text form: tokens
// "s<i>" and "s<i>^-1" separated by whitespace, e.g. "s1 s2^-1 s1".
inline std::vector<int> parse_braid_word(const std::string& text) {
  std::vector<int> word;
  std::istringstream in(text);
  std::string tok;
  while (in >> tok) {
    bool inverse = false;
    if (tok.size() > 3 && tok.substr(tok.size() - 3) == "^-1") {
      inverse = true;
      tok = tok.substr(0, tok.size() - 3);
    }
    if (tok.size() < 2 || tok[0] != 's' ||
        tok.find_first_not_of("0123456789", 1) != std::string::npos)
      throw std::invalid_argument("parse_braid_word: bad token '" + tok + "'");
    int i = std::atoi(tok.c_str() + 1);
    if (i < 1)
      throw std::invalid_argument("parse_braid_word: bad token '" + tok + "'");
    word.push_back(inverse ? -i : i);
  }
  return word;
}

struct BraidResult {
  LinearMap map;
  std::vector<int> colors;  // colors read across the top, left to right
};

// Evaluate a braid word on colored strands.  Crossings permute the colors,
// so the returned map goes from the tensor product of the input colors to
// the tensor product of the permuted ones.
inline BraidResult braid_map(int n, std::vector<int> colors,
                             const std::vector<int>& word) {
  if (colors.empty())
    throw std::invalid_argument("braid_map: need at least one strand");
  for (int c : colors) braid_detail::check_color(n, c, "braid_map");
  auto space_of = [&](int lo, int hi) {
    std::vector<Strand> s;
    for (int j = lo; j < hi; j++) s.push_back({colors[size_t(j)], false});
    return make_space(n, n, std::move(s));
  };
  int m = int(colors.size());
  LinearMap acc = identity_map(space_of(0, m));
  for (int letter : word) {
    int i = std::abs(letter);
    if (i < 1 || i >= m)
      throw std::invalid_argument("braid_map: letter out of range");
    const LinearMap& x =
        crossing_map(n, colors[size_t(i - 1)], colors[size_t(i)], letter > 0);
    LinearMap step = tensor(identity_map(space_of(0, i - 1)),
                            tensor(x, identity_map(space_of(i + 1, m))));
    std::swap(colors[size_t(i - 1)], colors[size_t(i)]);
    acc = compose(step, acc);
  }
  return {std::move(acc), std::move(colors)};
}

// --- closures ---------------------------------------------------------------

// Quantum trace of an endomorphism: sum of diagonal entries weighted by
// q^(-c(n-c) + 2 ell(S, S^c)) per tensor factor.  On the identity of a
// single c-strand this gives the loop value [n choose c].
inline Laurent quantum_trace(const LinearMap& f) {
  if (!f.src.compatible(f.dst))
    throw std::invalid_argument("quantum_trace: endpoints differ");
  int n = f.src.n;
  Laurent total;
  for (int64_t idx = 0; idx < f.src.dim; idx++) {
    Laurent e = f.entry(idx, idx);
    if (e.is_zero()) continue;
    auto tup = tuple_of(f.src, idx);
    int w = 0;
    for (size_t j = 0; j < tup.size(); j++) {
      int c = f.src.strands[j].label;
      w += -c * (n - c) + 2 * ell(tup[j], complement(tup[j], n));
    }
    total += e * q_power(w, f.src.root);
  }
  return total;
}

enum class Closure { Trace, Plat };

namespace braid_detail {

// Plat closure pairs strands (1,2), (3,4), ...; each pair must carry colors
// summing to n so the bent strand can pass through a tag vertex.
inline void check_plat_colors(int n, const std::vector<int>& colors,
                              const char* where) {
  if (colors.size() % 2 != 0)
    throw std::invalid_argument(std::string("plat closure: ") + where +
                                " strand count must be even");
  for (size_t p = 0; p + 1 < colors.size(); p += 2)
    if (colors[p] + colors[p + 1] != n)
      throw std::invalid_argument(std::string("plat closure: ") + where +
                                  " colors in each pair must sum to n");
}

// Web from the empty boundary to (c1+, c2+, c3+, ...): one cup plus one tag
// per pair.
inline Web plat_bottom(int n, const std::vector<int>& colors) {
  Web w;
  w.n = n;
  std::vector<Cell> cups, tags;
  for (size_t p = 0; p + 1 < colors.size(); p += 2) {
    cups.push_back(cup_cell(colors[p], false));
    tags.push_back(id_cell(colors[p]));
    tags.push_back(tagin_cell(colors[p], 'L'));
  }
  w.rows.push_back(std::move(cups));
  w.rows.push_back(std::move(tags));
  return w;
}

// Mirror of plat_bottom: web from (c1+, c2+, ...) down to the empty boundary.
inline Web plat_top(int n, const std::vector<int>& colors) {
  Web w;
  w.n = n;
  for (size_t p = 0; p + 1 < colors.size(); p += 2) {
    w.src.push_back({colors[p], false});
    w.src.push_back({colors[p + 1], false});
  }
  std::vector<Cell> tags, caps;
  for (size_t p = 0; p + 1 < colors.size(); p += 2) {
    tags.push_back(id_cell(colors[p]));
    tags.push_back(tagout_cell(colors[p + 1], 'L'));
    caps.push_back(cap_cell(colors[p], false));
  }
  w.rows.push_back(std::move(tags));
  w.rows.push_back(std::move(caps));
  return w;
}

}  // namespace braid_detail

// Invariant of the closed-up braid.  Trace closure joins top i to bottom i
// around the right; it requires each color to return to its starting
// position's color (colors constant on closure cycles).  Plat closure caps
// adjacent pairs at top and bottom; it requires paired colors summing to n.
// The result is a Laurent polynomial in u with q = u^n, and the invariant
// is framed: no writhe correction is applied.
inline Laurent link_invariant(int n, const std::vector<int>& colors,
                              const std::vector<int>& word, Closure closure) {
  BraidResult br = braid_map(n, colors, word);
  if (closure == Closure::Trace) {
    if (br.colors != colors)
      throw std::invalid_argument(
          "trace closure: colors must be constant on closure cycles");
    return quantum_trace(br.map);
  }
  braid_detail::check_plat_colors(n, colors, "bottom");
  braid_detail::check_plat_colors(n, br.colors, "top");
  LinearMap bottom = web_map(braid_detail::plat_bottom(n, colors), n);
  LinearMap top = web_map(braid_detail::plat_top(n, br.colors), n);
  return compose(top, compose(br.map, bottom)).entry(0, 0);
}

}  // namespace spider
