// Command line front end for the web engine.
//
// Subcommands:
//   eval           evaluate a web (or sum of webs) file to a matrix
//   matrix         print a crossing as a web sum and as a matrix
//   ladder         rewrite a web file into ladder form and verify it
//   uword          evaluate a word in the generators E_i, F_i on a weight
//   invariant      closed-braid invariant, trace or plat closure
//   relcheck       run every relation family at a given rank
//   howe-rank      dimension census for the commuting-actions check
//   fuzz-ladderize random webs through the ladder rewriter, verified
//
// Every subcommand exits 0 on success and 1 on any failure or mismatch.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "spider/braiding.hpp"
#include "spider/harness.hpp"
#include "spider/ladderize.hpp"
#include "spider/relations.hpp"

using nlohmann::json;
using namespace spider;

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::string piece;
  std::istringstream in(text);
  while (std::getline(in, piece, ',')) {
    if (piece.find_first_not_of(" \t") == std::string::npos) continue;
    out.push_back(std::stoi(piece));
  }
  return out;
}

Rational parse_rational(const std::string& text) {
  Rational r(text);
  r.canonicalize();
  return r;
}

int run_eval(const std::string& path, int root) {
  WebSum ws = parse_websum(read_file(path), root);
  for (const auto& [coeff, w] : ws) {
    std::string why;
    if (web_status(w, &why) == WebStatus::Malformed)
      throw std::runtime_error("malformed web: " + why);
  }
  LinearMap m = websum_map(ws, root);
  std::cout << render_map(m);
  if (m.src.strands.empty() && m.dst.strands.empty())
    std::cout << "value: " << render_scalar(m.entry(0, 0), root) << "\n";
  return 0;
}

int run_matrix(int n, int k, int l, bool negative) {
  if (!negative) {
    std::cout << render_websum(pos_crossing_websum(n, k, l), n);
    std::cout << render_map(crossing_map(n, k, l, true));
  } else {
    std::cout << render_map(crossing_map(n, k, l, false));
  }
  return 0;
}

int run_ladder(const std::string& path, bool verify) {
  Web w = parse_web(read_file(path));
  Ladderized lz = ladderize(w);
  std::cout << "sign: " << (lz.sign < 0 ? "-1" : "+1") << "\n";
  std::cout << render_ladder(lz.ladder);
  if (!verify) return 0;
  bool ok = ladderize_verify(w);
  std::cout << "verified: " << (ok ? "true" : "false") << "\n";
  return ok ? 0 : 1;
}

int run_uword(int n, const std::string& weight, const std::string& word,
              int root) {
  GlWeight wt = parse_int_list(weight);
  LinearMap m = phi_word(wt, n, parse_uword(word), root);
  std::cout << render_map(m);
  return 0;
}

int run_invariant(int n, const std::string& colors, const std::string& word,
                  const std::string& closure) {
  Closure cl;
  if (closure == "trace")
    cl = Closure::Trace;
  else if (closure == "plat")
    cl = Closure::Plat;
  else
    throw std::runtime_error("closure must be 'trace' or 'plat'");
  Laurent v =
      link_invariant(n, parse_int_list(colors), parse_braid_word(word), cl);
  std::cout << "q = u^" << n << "\n" << render_scalar(v, n) << "\n";
  return 0;
}

int run_relcheck(int n, int m, bool as_json) {
  std::vector<RelationCheck> checks = check_spider_relations(n);
  for (RelationCheck& rc : check_qgroup_relations(n, m)) checks.push_back(rc);
  int failed = 0;
  if (as_json) {
    json arr = json::array();
    for (const RelationCheck& rc : checks) {
      json o;
      o["relation"] = rc.relation;
      o["params"] = rc.params;
      o["status"] = rc.ok ? "ok" : "fail";
      if (!rc.ok) {
        o["witness"] = rc.witness;
        failed++;
      }
      arr.push_back(o);
    }
    std::cout << arr.dump(2) << "\n";
  } else {
    // One line per family: name, counts, and the first failing instance.
    std::vector<std::string> order;
    std::map<std::string, std::pair<int, int>> tally;
    std::map<std::string, std::string> first_bad;
    for (const RelationCheck& rc : checks) {
      if (!tally.count(rc.relation)) order.push_back(rc.relation);
      auto& [pass, total] = tally[rc.relation];
      total++;
      if (rc.ok) {
        pass++;
      } else {
        failed++;
        if (!first_bad.count(rc.relation))
          first_bad[rc.relation] = rc.params + ": " + rc.witness;
      }
    }
    for (const std::string& name : order) {
      auto [pass, total] = tally[name];
      std::cout << name << ": " << pass << "/" << total
                << (pass == total ? " ok" : " FAIL") << "\n";
      if (first_bad.count(name))
        std::cout << "  first failure " << first_bad[name] << "\n";
    }
  }
  return failed == 0 ? 0 : 1;
}

int run_howe_rank(int n, int m, int degree, const std::string& q0) {
  HoweRank r = howe_rank(n, m, degree, parse_rational(q0));
  std::cout << "slice dimension: " << r.total_dim << "\n";
  std::cout << "generated algebra: " << r.algebra_dim << "\n";
  std::cout << "commutant: " << r.commutant_dim << "\n";
  return 0;
}

int run_fuzz(int n, int count, uint64_t seed, int max_strands, int steps) {
  std::mt19937_64 rng(seed);
  RandomWebOptions opts;
  opts.max_strands = max_strands;
  opts.steps = steps;
  for (int i = 0; i < count; i++) {
    Web w = random_web(n, rng, opts);
    if (!ladderize_verify(w)) {
      std::cout << "mismatch on web " << i << ":\n" << render_web(w);
      return 1;
    }
  }
  std::cout << count << " webs verified\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact evaluator for sl(n) web diagrams"};
  app.require_subcommand(1);

  std::string path, weight, word, colors, closure = "trace", q0 = "7/5";
  int n = 3, m = 3, k = 1, l = 1, degree = 4, root = 1, count = 50;
  int max_strands = 3, steps = 6;
  uint64_t seed = 1;
  bool negative = false, as_json = false, verify = false;

  CLI::App* eval = app.add_subcommand("eval", "evaluate a web file");
  eval->add_option("file", path, "web or websum file")->required();
  eval->add_option("--root", root, "evaluate with q = u^root");

  CLI::App* matrix = app.add_subcommand("matrix", "print a crossing");
  matrix->add_option("--n", n, "ambient rank")->required();
  matrix->add_option("--k", k, "color of the first strand")->required();
  matrix->add_option("--l", l, "color of the second strand")->required();
  matrix->add_flag("--negative", negative, "invert the crossing");

  CLI::App* ladder = app.add_subcommand("ladder", "rewrite a web file");
  ladder->add_option("file", path, "web file")->required();
  ladder->add_flag("--verify", verify, "re-evaluate both sides and compare");

  CLI::App* uword = app.add_subcommand("uword", "evaluate a generator word");
  uword->add_option("--n", n, "ambient rank")->required();
  uword->add_option("--weight", weight, "comma separated source weight")
      ->required();
  uword->add_option("word,--word", word, "e.g. \"F1^2 E2\", rightmost first")
      ->required();
  uword->add_option("--root", root, "evaluate with q = u^root");

  CLI::App* inv = app.add_subcommand("invariant", "closed-braid invariant");
  inv->add_option("--n", n, "ambient rank")->required();
  inv->add_option("--colors", colors, "comma separated strand colors")
      ->required();
  inv->add_option("--word", word, "braid word, e.g. \"s1 s2^-1\"")->required();
  inv->add_option("--closure", closure, "trace or plat");

  CLI::App* rel = app.add_subcommand("relcheck", "verify relation families");
  rel->add_option("--n", n, "ambient rank")->required();
  rel->add_option("--m", m, "uprights for the generator relations");
  rel->add_flag("--json", as_json, "one json record per checked instance");

  CLI::App* howe = app.add_subcommand("howe-rank", "dimension census");
  howe->add_option("--n", n, "ambient rank")->required();
  howe->add_option("--m", m, "number of uprights")->required();
  howe->add_option("--degree", degree, "total degree of the slice")
      ->required();
  howe->add_option("--q0", q0, "rational evaluation point, e.g. 7/5");

  CLI::App* fuzz = app.add_subcommand("fuzz-ladderize", "randomized rewriter check");
  fuzz->add_option("--n", n, "ambient rank")->required();
  fuzz->add_option("--count", count, "number of random webs");
  fuzz->add_option("--seed", seed, "rng seed");
  fuzz->add_option("--max-strands", max_strands, "source strand bound");
  fuzz->add_option("--steps", steps, "growth steps per web");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*eval) return run_eval(path, root);
    if (*matrix) return run_matrix(n, k, l, negative);
    if (*ladder) return run_ladder(path, verify);
    if (*uword) return run_uword(n, weight, word, root);
    if (*inv) return run_invariant(n, colors, word, closure);
    if (*rel) return run_relcheck(n, m, as_json);
    if (*howe) return run_howe_rank(n, m, degree, q0);
    if (*fuzz) return run_fuzz(n, count, seed, max_strands, steps);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
