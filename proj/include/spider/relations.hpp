#pragma once

// Machine checks of the defining relations of the web category and of the
// idempotented quantum gl_m, each verified as an exact matrix identity over
// every parameter choice in range.  relcheck in the CLI and the test suite
// both run these.

#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "spider/qgroup.hpp"

namespace spider {

struct RelationCheck {
  std::string relation;
  std::string params;
  bool ok = false;
  std::string witness;  // failure description, empty when ok
};

namespace relcheck_detail {

class Collector {
 public:
  explicit Collector(std::vector<RelationCheck>& out) : out_(out) {}

  void expect(const std::string& relation, const std::string& params,
              const LinearMap& lhs, const LinearMap& rhs) {
    RelationCheck rc{relation, params, true, ""};
    if (!(lhs == rhs)) {
      rc.ok = false;
      rc.witness = "matrices differ";
    }
    out_.push_back(std::move(rc));
  }

  void expect_scalar(const std::string& relation, const std::string& params,
                     const Laurent& lhs, const Laurent& rhs, int root) {
    RelationCheck rc{relation, params, true, ""};
    if (!(lhs == rhs)) {
      rc.ok = false;
      rc.witness = "got " + render_scalar(lhs, root) + ", expected " +
                   render_scalar(rhs, root);
    }
    out_.push_back(std::move(rc));
  }

 private:
  std::vector<RelationCheck>& out_;
};

inline std::string ps(std::initializer_list<int> vals) {
  std::string out;
  for (int v : vals) {
    if (!out.empty()) out += ",";
    out += std::to_string(v);
  }
  return out;
}

}  // namespace relcheck_detail

// Tag sides below are the frozen convention: the drawn relations hold on
// the nose exactly for these side choices, and flipping any one side costs
// the switch sign.

inline void check_tag_switch(int n, std::vector<RelationCheck>& out) {
  relcheck_detail::Collector c(out);
  for (int k = 0; k <= n; k++) {
    Laurent sigma(tag_sign(k, n));
    c.expect("tag-switch-out", "k=" + std::to_string(k),
             cell_map(tagout_cell(k, 'L'), n, 1),
             map_scale(cell_map(tagout_cell(k, 'R'), n, 1), sigma));
    c.expect("tag-switch-in", "k=" + std::to_string(k),
             cell_map(tagin_cell(k, 'L'), n, 1),
             map_scale(cell_map(tagin_cell(k, 'R'), n, 1), sigma));
  }
}

inline void check_bigon1(int n, std::vector<RelationCheck>& out) {
  relcheck_detail::Collector c(out);
  for (int k = 0; k <= n; k++)
    for (int l = 0; k + l <= n; l++) {
      LinearMap lhs =
          compose(cell_map(merge_cell(k, l), n, 1), cell_map(split_cell(k, l), n, 1));
      LinearMap rhs =
          map_scale(identity_map(make_space(n, 1, {{k + l, false}})),
                    quantum_binomial(k + l, l));
      c.expect("bigon1", relcheck_detail::ps({k, l}), lhs, rhs);
    }
}

inline void check_bigon2(int n, std::vector<RelationCheck>& out) {
  relcheck_detail::Collector c(out);
  for (int k = 0; k <= n; k++)
    for (int l = 0; l <= n; l++) {
      std::string K = std::to_string(k), L = std::to_string(l);
      std::string hdr = "web n=" + std::to_string(n) + " src=(" + K + "+)\n";
      Web left = parse_web(hdr +
                           "cup " + L + " -+ | id " + K + "+\n" +
                           "id " + L + "- | merge " + L + " " + K + "\n" +
                           "id " + L + "- | split " + L + " " + K + "\n" +
                           "cap " + L + " -+ | id " + K + "+\n");
      Web right = parse_web(hdr +
                            "id " + K + "+ | cup " + L + " +-\n" +
                            "merge " + K + " " + L + " | id " + L + "-\n" +
                            "split " + K + " " + L + " | id " + L + "-\n" +
                            "id " + K + "+ | cap " + L + " +-\n");
      LinearMap rhs = map_scale(identity_map(make_space(n, 1, {{k, false}})),
                                quantum_binomial(n - k, l));
      c.expect("bigon2-left", relcheck_detail::ps({k, l}), web_map(left), rhs);
      c.expect("bigon2-right", relcheck_detail::ps({k, l}), web_map(right), rhs);
    }
}

inline void check_associativity(int n, std::vector<RelationCheck>& out) {
  relcheck_detail::Collector c(out);
  for (int k = 0; k <= n; k++)
    for (int l = 0; k + l <= n; l++)
      for (int m = 0; k + l + m <= n; m++) {
        LinearMap id_k = identity_map(make_space(n, 1, {{k, false}}));
        LinearMap id_m = identity_map(make_space(n, 1, {{m, false}}));
        LinearMap lhs = compose(cell_map(merge_cell(k + l, m), n, 1),
                                tensor(cell_map(merge_cell(k, l), n, 1), id_m));
        LinearMap rhs = compose(cell_map(merge_cell(k, l + m), n, 1),
                                tensor(id_k, cell_map(merge_cell(l, m), n, 1)));
        c.expect("merge-assoc", relcheck_detail::ps({k, l, m}), lhs, rhs);
        LinearMap lhs2 = compose(tensor(cell_map(split_cell(k, l), n, 1), id_m),
                                 cell_map(split_cell(k + l, m), n, 1));
        LinearMap rhs2 = compose(tensor(id_k, cell_map(split_cell(l, m), n, 1)),
                                 cell_map(split_cell(k, l + m), n, 1));
        c.expect("split-coassoc", relcheck_detail::ps({k, l, m}), lhs2, rhs2);
      }
}

// A tag slides across a merge: tagging the merged output is the same as
// turning the right input into its dual partner and merging through the
// bent vertex.
inline void check_tag_migration1(int n, std::vector<RelationCheck>& out) {
  relcheck_detail::Collector c(out);
  for (int k = 0; k <= n; k++)
    for (int l = 0; k + l <= n; l++) {
      int m = n - k - l, s = n - l;
      std::string K = std::to_string(k), L = std::to_string(l),
                  M = std::to_string(m), S = std::to_string(s);
      std::string hdr =
          "web n=" + std::to_string(n) + " src=(" + K + "+," + L + "+)\n";
      Web lhs = parse_web(hdr +
                          "merge " + K + " " + L + "\n" +
                          "tagout " + std::to_string(k + l) + " R\n");
      Web rhs = parse_web(hdr +
                          "id " + K + "+ | tagout " + L + " R\n" +
                          "cup " + M + " -+ | id " + K + "+ | id " + S + "-\n" +
                          "id " + M + "- | merge " + M + " " + K + " | id " +
                          S + "-\n" +
                          "id " + M + "- | cap " + S + " +-\n");
      c.expect("tag-migration1", relcheck_detail::ps({k, l}), web_map(lhs),
               web_map(rhs));
    }
}

// The dual slide: splitting off the dual of an input past a tag.
inline void check_tag_migration2(int n, std::vector<RelationCheck>& out) {
  relcheck_detail::Collector c(out);
  for (int k = 0; k <= n; k++)
    for (int l = 0; k + l <= n; l++) {
      int a = n - k - l, s = n - l;
      std::string K = std::to_string(k), L = std::to_string(l),
                  A = std::to_string(a), S = std::to_string(s);
      std::string hdr = "web n=" + std::to_string(n) + " src=(" +
                        std::to_string(k + l) + "+," + K + "-)\n";
      Web lhs = parse_web(hdr +
                          "split " + L + " " + K + " | id " + K + "-\n" +
                          "id " + L + "+ | cap " + K + " +-\n" +
                          "tagout " + L + " L\n");
      Web rhs = parse_web(hdr +
                          "tagout " + std::to_string(k + l) + " L | id " + K +
                          "-\n" +
                          "cup " + S + " -+ | id " + A + "- | id " + K + "-\n" +
                          "id " + S + "- | split " + K + " " + A + " | id " +
                          A + "- | id " + K + "-\n" +
                          "id " + S + "- | id " + K + "+ | cap " + A +
                          " +- | id " + K + "-\n" +
                          "id " + S + "- | cap " + K + " +-\n");
      c.expect("tag-migration2", relcheck_detail::ps({k, l}), web_map(lhs),
               web_map(rhs));
    }
}

// Ladder-shaped relations, evaluated through the web functor.
inline void check_square_removal(int n, std::vector<RelationCheck>& out) {
  relcheck_detail::Collector c(out);
  for (int k = 0; k <= n; k++)
    for (int l = 0; l <= n; l++)
      for (int r = 0; r <= 2; r++)
        for (int s = 0; s <= 2; s++)
          for (bool isF : {false, true}) {
            Ladder two{n, {k, l}, {{isF, 1, s}, {isF, 1, r}}};
            Ladder one{n, {k, l}, {{isF, 1, r + s}}};
            LinearMap lhs = web_map(ladder_to_web(two));
            LinearMap rhs = map_scale(web_map(ladder_to_web(one)),
                                      quantum_binomial(r + s, r));
            c.expect(isF ? "square-removal-F" : "square-removal-E",
                     relcheck_detail::ps({k, l, r, s}), lhs, rhs);
          }
}

inline void check_square_switch(int n, std::vector<RelationCheck>& out) {
  relcheck_detail::Collector c(out);
  for (int k = 0; k <= n; k++)
    for (int l = 0; l <= n; l++)
      for (int r = 1; r <= 2; r++)
        for (int s = 1; s <= 2; s++) {
          Ladder lhs_lad{n, {k, l}, {{true, 1, s}, {false, 1, r}}};
          LinearMap lhs = web_map(ladder_to_web(lhs_lad));
          LinearMap acc = zero_map(lhs.src, lhs.dst);
          for (int t = 0; t <= std::min(r, s); t++) {
            Ladder term{n, {k, l}, {{false, 1, r - t}, {true, 1, s - t}}};
            acc = map_add(acc, map_scale(web_map(ladder_to_web(term)),
                                         quantum_binomial(k - l + r - s, t)));
          }
          c.expect("square-switch", relcheck_detail::ps({k, l, r, s}), lhs,
                   acc);
        }
}

inline void check_serre_web(int n, std::vector<RelationCheck>& out) {
  relcheck_detail::Collector c(out);
  for (int k1 = 0; k1 <= n; k1++)
    for (int k2 = 0; k2 <= n; k2++)
      for (int k3 = 0; k3 <= n; k3++)
        for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}})
          for (bool isF : {false, true}) {
            GlWeight k{k1, k2, k3};
            auto lad = [&](std::vector<std::pair<int, int>> steps) {
              Ladder L{n, k, {}};
              for (auto [pos, r] : steps) L.rungs.push_back({isF, pos, r});
              return web_map(ladder_to_web(L));
            };
            LinearMap lhs = lad({{i, 1}, {j, 1}, {i, 1}});
            LinearMap rhs =
                map_add(lad({{j, 1}, {i, 2}}), lad({{i, 2}, {j, 1}}));
            std::ostringstream os;
            os << (isF ? "F" : "E") << ",i=" << i << ",j=" << j << ",k="
               << relcheck_detail::ps({k1, k2, k3});
            c.expect("serre-web", os.str(), lhs, rhs);
          }
}

inline void check_rung_interchange(int n, std::vector<RelationCheck>& out) {
  relcheck_detail::Collector c(out);
  // E and F rungs at different positions commute; same-type rungs commute
  // when the positions are distant.
  for (int k1 = 0; k1 <= n; k1++)
    for (int k2 = 0; k2 <= n; k2++)
      for (int k3 = 0; k3 <= n; k3++)
        for (auto [i, j] : {std::pair{1, 2}, std::pair{2, 1}})
          for (int r = 1; r <= 2; r++)
            for (int s = 1; s <= 2; s++) {
              GlWeight k{k1, k2, k3};
              ULetter a{false, i, r}, b{true, j, s};
              Ladder ab{n, k, {b, a}}, ba{n, k, {a, b}};
              std::ostringstream os;
              os << "i=" << i << ",j=" << j << ",r=" << r << ",s=" << s
                 << ",k=" << relcheck_detail::ps({k1, k2, k3});
              c.expect("rung-interchange-EF", os.str(),
                       web_map(ladder_to_web(ab)), web_map(ladder_to_web(ba)));
            }
  for (int k1 = 0; k1 <= n; k1++)
    for (int k2 = 0; k2 <= n; k2++)
      for (int k3 = 0; k3 <= n; k3++)
        for (int k4 = 0; k4 <= n; k4++)
          for (bool aF : {false, true})
            for (bool bF : {false, true}) {
              GlWeight k{k1, k2, k3, k4};
              ULetter a{aF, 1, 1}, b{bF, 3, 1};
              Ladder ab{n, k, {b, a}}, ba{n, k, {a, b}};
              std::ostringstream os;
              os << "a=" << (aF ? "F1" : "E1") << ",b=" << (bF ? "F3" : "E3")
                 << ",k=" << relcheck_detail::ps({k1, k2, k3, k4});
              c.expect("rung-interchange-distant", os.str(),
                       web_map(ladder_to_web(ab)), web_map(ladder_to_web(ba)));
            }
}

inline void check_loop(int n, std::vector<RelationCheck>& out) {
  relcheck_detail::Collector c(out);
  for (int k = 0; k <= n; k++)
    for (const char* orient : {"-+", "+-"}) {
      Web w = parse_web("web n=" + std::to_string(n) + " src=()\n" +
                        "cup " + std::to_string(k) + " " + orient + "\n" +
                        "cap " + std::to_string(k) + " " + orient + "\n");
      c.expect_scalar(std::string("loop") + orient,
                      "k=" + std::to_string(k), closed_web_value(w),
                      quantum_binomial(n, k), 1);
    }
}

inline void check_cancel_tags(int n, std::vector<RelationCheck>& out) {
  relcheck_detail::Collector c(out);
  for (int k = 0; k <= n; k++)
    for (char side : {'L', 'R'}) {
      std::string S(1, side);
      LinearMap up = compose(cell_map(tagin_cell(n - k, side), n, 1),
                             cell_map(tagout_cell(k, side), n, 1));
      c.expect("cancel-tags-up", "k=" + std::to_string(k) + ",side=" + S, up,
               identity_map(make_space(n, 1, {{k, false}})));
      LinearMap down = compose(cell_map(tagout_cell(n - k, side), n, 1),
                               cell_map(tagin_cell(k, side), n, 1));
      c.expect("cancel-tags-down", "k=" + std::to_string(k) + ",side=" + S,
               down, identity_map(make_space(n, 1, {{k, true}})));
    }
}

inline void check_arrow_reversal(int n, std::vector<RelationCheck>& out) {
  relcheck_detail::Collector c(out);
  // Rotating both sides of a relation by pi preserves it.
  for (int k = 0; k <= n; k++)
    for (int l = 0; k + l <= n; l++) {
      LinearMap bigon = dual_morphism(
          compose(cell_map(merge_cell(k, l), n, 1), cell_map(split_cell(k, l), n, 1)));
      LinearMap rhs =
          map_scale(identity_map(make_space(n, 1, {{k + l, true}})),
                    quantum_binomial(k + l, l));
      c.expect("bigon1-reversed", relcheck_detail::ps({k, l}), bigon, rhs);
    }
  for (int k = 0; k <= n; k++)
    for (int l = 0; k + l <= n; l++)
      for (int m = 0; k + l + m <= n; m++) {
        LinearMap id_k = identity_map(make_space(n, 1, {{k, false}}));
        LinearMap id_m = identity_map(make_space(n, 1, {{m, false}}));
        LinearMap lhs = dual_morphism(
            compose(cell_map(merge_cell(k + l, m), n, 1),
                    tensor(cell_map(merge_cell(k, l), n, 1), id_m)));
        LinearMap rhs = dual_morphism(
            compose(cell_map(merge_cell(k, l + m), n, 1),
                    tensor(id_k, cell_map(merge_cell(l, m), n, 1))));
        c.expect("merge-assoc-reversed", relcheck_detail::ps({k, l, m}), lhs,
                 rhs);
      }
}

// The defining relations of the idempotented quantum group, checked on the
// skew Howe representation matrices.
inline void check_qgroup_relations(int n, int m,
                                   std::vector<RelationCheck>& out) {
  relcheck_detail::Collector c(out);
  std::vector<GlWeight> weights{{}};
  for (int j = 0; j < m; j++) {
    std::vector<GlWeight> next;
    for (const GlWeight& w : weights)
      for (int v = 0; v <= n; v++) {
        GlWeight w2 = w;
        w2.push_back(v);
        next.push_back(w2);
      }
    weights = std::move(next);
  }
  for (const GlWeight& k : weights) {
    std::string kp;
    for (size_t j = 0; j < k.size(); j++)
      kp += (j ? "," : "") + std::to_string(k[j]);
    kp = "k=" + kp;
    for (int i = 1; i < m; i++)
      for (int r = 1; r <= 2; r++)
        for (int s = 1; s <= 2; s++) {
          GlWeight kf = weight_after(k, {true, i, s});
          LinearMap lhs = compose(phi_letter(kf, n, {false, i, r}),
                                  phi_letter(k, n, {true, i, s}));
          LinearMap acc = zero_map(lhs.src, lhs.dst);
          for (int t = 0; t <= std::min(r, s); t++) {
            GlWeight ke = weight_after(k, {false, i, r - t});
            acc = map_add(
                acc,
                map_scale(compose(phi_letter(ke, n, {true, i, s - t}),
                                  phi_letter(k, n, {false, i, r - t})),
                          quantum_binomial(k[i - 1] - k[i] + r - s, t)));
          }
          std::ostringstream os;
          os << kp << ",i=" << i << ",r=" << r << ",s=" << s;
          c.expect("u-EF-same", os.str(), lhs, acc);
        }
    for (int i = 1; i < m; i++)
      for (int j = 1; j < m; j++) {
        if (i == j) continue;
        GlWeight kf = weight_after(k, {true, j, 1});
        GlWeight ke = weight_after(k, {false, i, 1});
        LinearMap lhs = compose(phi_letter(kf, n, {false, i, 1}),
                                phi_letter(k, n, {true, j, 1}));
        LinearMap rhs = compose(phi_letter(ke, n, {true, j, 1}),
                                phi_letter(k, n, {false, i, 1}));
        std::ostringstream os;
        os << kp << ",i=" << i << ",j=" << j;
        c.expect("u-EF-mixed", os.str(), lhs, rhs);
      }
    for (int i = 1; i < m; i++)
      for (int j = 1; j < m; j++) {
        if (std::abs(i - j) != 1) continue;
        for (bool isF : {false, true}) {
          auto word = [&](std::vector<std::pair<int, int>> steps) {
            GlWeight cur = k;
            LinearMap z = identity_map(weight_space(k, n));
            for (auto [pos, r] : steps) {
              z = compose(phi_letter(cur, n, {isF, pos, r}), z);
              cur = weight_after(cur, {isF, pos, r});
            }
            return z;
          };
          LinearMap lhs = word({{i, 1}, {j, 1}, {i, 1}});
          LinearMap rhs =
              map_add(word({{j, 1}, {i, 2}}), word({{i, 2}, {j, 1}}));
          std::ostringstream os;
          os << kp << "," << (isF ? "F" : "E") << ",i=" << i << ",j=" << j;
          c.expect("u-serre", os.str(), lhs, rhs);
        }
      }
    for (int i = 1; i < m; i++)
      for (int r = 0; r <= 2; r++)
        for (int s = 0; s <= 2; s++)
          for (bool isF : {false, true}) {
            GlWeight mid = weight_after(k, {isF, i, r});
            LinearMap lhs = compose(phi_letter(mid, n, {isF, i, s}),
                                    phi_letter(k, n, {isF, i, r}));
            LinearMap rhs = map_scale(phi_letter(k, n, {isF, i, r + s}),
                                      quantum_binomial(r + s, r));
            std::ostringstream os;
            os << kp << "," << (isF ? "F" : "E") << ",i=" << i << ",r=" << r
               << ",s=" << s;
            c.expect("u-divided-powers", os.str(), lhs, rhs);
          }
  }
  // distant commutation needs four uprights
  if (m >= 4) {
    for (const GlWeight& k : weights) {
      for (bool aF : {false, true})
        for (bool bF : {false, true}) {
          GlWeight ka = weight_after(k, {aF, 1, 1});
          GlWeight kb = weight_after(k, {bF, 3, 1});
          LinearMap lhs = compose(phi_letter(kb, n, {aF, 1, 1}),
                                  phi_letter(k, n, {bF, 3, 1}));
          LinearMap rhs = compose(phi_letter(ka, n, {bF, 3, 1}),
                                  phi_letter(k, n, {aF, 1, 1}));
          std::string s;
          for (size_t j = 0; j < k.size(); j++)
            s += (j ? "," : "") + std::to_string(k[j]);
          c.expect("u-distant", "k=" + s, lhs, rhs);
        }
    }
  }
}

inline std::vector<RelationCheck> check_qgroup_relations(int n, int m) {
  std::vector<RelationCheck> out;
  check_qgroup_relations(n, m, out);
  return out;
}

inline std::vector<RelationCheck> check_spider_relations(int n) {
  std::vector<RelationCheck> out;
  check_tag_switch(n, out);
  check_bigon1(n, out);
  check_bigon2(n, out);
  check_associativity(n, out);
  check_tag_migration1(n, out);
  check_tag_migration2(n, out);
  check_square_removal(n, out);
  check_square_switch(n, out);
  check_serre_web(n, out);
  check_rung_interchange(n, out);
  check_loop(n, out);
  check_cancel_tags(n, out);
  check_arrow_reversal(n, out);
  return out;
}

}  // namespace spider
