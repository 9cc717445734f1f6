#include "spider/functor.hpp"

#include <catch2/catch_amalgamated.hpp>

using namespace spider;

namespace {

// A web map must commute with every Chevalley generator acting on its
// boundaries; this is the defining property of the evaluation functor.
bool intertwines(const LinearMap& f) {
  int n = f.src.n;
  for (int i = 1; i < n; i++) {
    if (!(compose(f, act_E(f.src, i)) == compose(act_E(f.dst, i), f)))
      return false;
    if (!(compose(f, act_F(f.src, i)) == compose(act_F(f.dst, i), f)))
      return false;
    if (!(compose(f, act_K(f.src, i)) == compose(act_K(f.dst, i), f)))
      return false;
  }
  return true;
}

LinearMap cmap(const Cell& c, int n, int root = 1) {
  return cell_map(c, n, root);
}

// Canonical identification of the full wedge with the trivial object.
LinearMap birth(int n, int root = 1) {
  LinearMap m{make_space(n, root, {}),
              make_space(n, root, {{n, false}}), {}};
  m.set(0, 0, Laurent::one());
  return m;
}

LinearMap death(int n, int root = 1) {
  LinearMap m{make_space(n, root, {{n, false}}),
              make_space(n, root, {}), {}};
  m.set(0, 0, Laurent::one());
  return m;
}

LinearMap id_on(int n, int k, bool dual = false, int root = 1) {
  return identity_map(make_space(n, root, {{k, dual}}));
}

}  // namespace

TEST_CASE("every cell intertwines the quantum group action") {
  for (int n = 2; n <= 4; n++) {
    for (int k = 0; k <= n; k++) {
      for (int l = 0; k + l <= n; l++) {
        CHECK(intertwines(cmap(merge_cell(k, l), n)));
        CHECK(intertwines(cmap(split_cell(k, l), n)));
      }
      for (char side : {'L', 'R'}) {
        CHECK(intertwines(cmap(tagout_cell(k, side), n)));
        CHECK(intertwines(cmap(tagin_cell(k, side), n)));
      }
      for (bool ml : {true, false}) {
        CHECK(intertwines(cmap(cup_cell(k, ml), n)));
        CHECK(intertwines(cmap(cap_cell(k, ml), n)));
      }
    }
  }
}

TEST_CASE("equivariance persists at higher root order") {
  CHECK(intertwines(cmap(merge_cell(1, 2), 3, 3)));
  CHECK(intertwines(cmap(cup_cell(1, true), 3, 3)));
  CHECK(intertwines(cmap(tagout_cell(2, 'L'), 3, 3)));
}

TEST_CASE("merge and split on two single strands") {
  // Frozen small matrices fix the sign conventions once and for all.
  LinearMap mg = cmap(merge_cell(1, 1), 2);
  Space s2 = mg.src;
  int64_t x12 = index_of(s2, {Subset(1), Subset(2)});
  int64_t x21 = index_of(s2, {Subset(2), Subset(1)});
  CHECK(mg.entry(0, x12) == -q_power(1));
  CHECK(mg.entry(0, x21) == Laurent::one());
  CHECK(mg.apply(Vec{{index_of(s2, {Subset(1), Subset(1)}), Laurent::one()}})
            .empty());

  LinearMap sp = cmap(split_cell(1, 1), 2);
  CHECK(sp.entry(x12, 0) == -Laurent::one());
  CHECK(sp.entry(x21, 0) == q_power(-1));
}

TEST_CASE("bigon collapses to a quantum binomial") {
  for (int n = 2; n <= 4; n++)
    for (int k = 0; k <= n; k++)
      for (int l = 0; k + l <= n; l++) {
        LinearMap m = compose(cmap(merge_cell(k, l), n),
                              cmap(split_cell(k, l), n));
        CHECK(m == map_scale(id_on(n, k + l), quantum_binomial(k + l, l)));
      }
}

TEST_CASE("closed loops evaluate to quantum binomials") {
  for (int n = 2; n <= 4; n++)
    for (int k = 0; k <= n; k++)
      for (const char* orient : {"-+", "+-"}) {
        Web w = parse_web("web n=" + std::to_string(n) + " src=()\n" +
                          "cup " + std::to_string(k) + " " + orient + "\n" +
                          "cap " + std::to_string(k) + " " + orient + "\n");
        CHECK(closed_web_value(w) == quantum_binomial(n, k));
      }
}

TEST_CASE("zigzags straighten exactly") {
  for (int n = 2; n <= 4; n++)
    for (int k = 0; k <= n; k++) {
      // (cap -+ (x) id) o (id (x) cup -+) on a single upward strand
      Web right = parse_web(
          "web n=" + std::to_string(n) + " src=(" + std::to_string(k) +
          "+)\n" + "id " + std::to_string(k) + "+ | cup " +
          std::to_string(k) + " -+\n" + "cap " + std::to_string(k) +
          " +- | id " + std::to_string(k) + "+\n");
      CHECK(web_map(right) == id_on(n, k));
      // mirror image, bending the other way
      Web left = parse_web(
          "web n=" + std::to_string(n) + " src=(" + std::to_string(k) +
          "+)\n" + "cup " + std::to_string(k) + " +- | id " +
          std::to_string(k) + "+\n" + "id " + std::to_string(k) +
          "+ | cap " + std::to_string(k) + " -+\n");
      CHECK(web_map(left) == id_on(n, k));
    }
}

TEST_CASE("cups and caps factor through tags") {
  for (int n = 2; n <= 4; n++)
    for (int k = 0; k <= n; k++) {
      LinearMap idk = id_on(n, k);
      CHECK(cmap(cup_cell(k, true), n) ==
            compose(tensor(cmap(tagout_cell(n - k, 'L'), n), idk),
                    compose(cmap(split_cell(n - k, k), n), birth(n))));
      CHECK(cmap(cup_cell(k, false), n) ==
            compose(tensor(idk, cmap(tagout_cell(n - k, 'R'), n)),
                    compose(cmap(split_cell(k, n - k), n), birth(n))));
      CHECK(cmap(cap_cell(k, true), n) ==
            compose(death(n),
                    compose(cmap(merge_cell(n - k, k), n),
                            tensor(cmap(tagin_cell(k, 'L'), n), idk))));
      CHECK(cmap(cap_cell(k, false), n) ==
            compose(death(n),
                    compose(cmap(merge_cell(k, n - k), n),
                            tensor(idk, cmap(tagin_cell(k, 'R'), n)))));
      // a merge up to the full degree is a cap against the tagged dual
      CHECK(compose(death(n), cmap(merge_cell(k, n - k), n)) ==
            compose(cmap(cap_cell(n - k, true), n),
                    tensor(cmap(tagout_cell(k, 'L'), n), id_on(n, n - k))));
    }
}

TEST_CASE("interchange of distant cells") {
  std::string hdr = "web n=3 src=(1+,1+,1+,1+)\n";
  Web a = parse_web(hdr + "merge 1 1 | id 1+ | id 1+\nid 2+ | merge 1 1\n");
  Web b = parse_web(hdr + "id 1+ | id 1+ | merge 1 1\nmerge 1 1 | id 2+\n");
  LinearMap both = tensor(cmap(merge_cell(1, 1), 3), cmap(merge_cell(1, 1), 3));
  CHECK(web_map(a) == both);
  CHECK(web_map(b) == both);
}

TEST_CASE("web status classification") {
  Web good = parse_web("web n=2 src=(1+,1+)\nmerge 1 1\n");
  CHECK(web_status(good) == WebStatus::Ok);

  // structurally fine but passes through a degree-3 strand at n=2
  Web zero = parse_web("web n=2 src=(1+,2+)\nmerge 1 2\nsplit 1 2\n");
  CHECK(web_status(zero) == WebStatus::Zero);
  CHECK(web_map(zero).is_zero());

  Web bad = parse_web("web n=2 src=(1+,1+)\nmerge 1 2\n");
  std::string why;
  CHECK(web_status(bad, &why) == WebStatus::Malformed);
  CHECK(!why.empty());
  CHECK_THROWS(web_map(bad));
}

TEST_CASE("web parse and render round trip") {
  std::string text =
      "web n=4 src=(2+,2-)\n"
      "id 2+ | tagin 2 L\n"
      "merge 2 2\n"
      "tagout 4 R\n"
      "id 0- | cup 1 +-\n";
  Web w = parse_web(text);
  CHECK(render_web(w) == text);
  CHECK(parse_web(render_web(w)) == w);
  CHECK(web_status(w) != WebStatus::Malformed);

  CHECK_THROWS(parse_web("web n=2\nmerge 1 1\n"));
  CHECK_THROWS(parse_web("web n=2 src=(1+)\nfrob 1\n"));
  CHECK_THROWS(parse_web("web n=2 src=(1+)\nid 1+ | | id 1+\n"));
}

TEST_CASE("websum parse, render, and evaluation") {
  std::string text =
      "+ q + q^-1 *\n"
      "web n=2 src=(2+)\n"
      "id 2+\n"
      "+ -1 *\n"
      "web n=2 src=(2+)\n"
      "split 1 1\n"
      "merge 1 1\n";
  WebSum ws = parse_websum(text);
  REQUIRE(ws.size() == 2);
  CHECK(ws[0].first == quantum_int(2));
  CHECK(ws[1].first == -Laurent::one());
  // [2] id - (merge o split) = 0 on the 2-labelled strand at n=2
  CHECK(websum_map(ws).is_zero());
  CHECK(parse_websum(render_websum(ws)) == ws);

  // first coefficient defaults to 1
  WebSum one = parse_websum("web n=2 src=(1+)\nid 1+\n");
  CHECK(one[0].first == Laurent::one());
}

TEST_CASE("closed web values") {
  Web circ = parse_web("web n=4 src=()\ncup 2 -+\ncap 2 -+\n");
  CHECK(closed_web_value(circ) == quantum_binomial(4, 2));
  Web open = parse_web("web n=2 src=(1+)\nid 1+\n");
  CHECK_THROWS(closed_web_value(open));
}
