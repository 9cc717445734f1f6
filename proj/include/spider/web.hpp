#pragma once

// Web diagrams as sliced monoidal terms: a web is a list of rows, bottom to
// top, each row a list of cells acting on consecutive boundary strands.
// Strands are labelled by exterior degrees; tags trade a strand for its
// complementary-degree dual, cups and caps bend strands.  The text format
// mirrors this structure one row per line.

#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "spider/scalar.hpp"
#include "spider/space.hpp"

namespace spider {

enum class CellKind { Id, Merge, Split, TagOut, TagIn, Cup, Cap };

struct Cell {
  CellKind kind = CellKind::Id;
  int k = 0;
  int l = 0;               // second label of merge/split
  bool dual = false;       // id: strand orientation
  char side = 'L';         // tagout/tagin: which side the tag sits on
  bool minus_left = true;  // cup/cap: true for "-+", false for "+-"

  bool operator==(const Cell&) const = default;
};

inline Cell id_cell(int k, bool dual = false) {
  Cell c;
  c.kind = CellKind::Id;
  c.k = k;
  c.dual = dual;
  return c;
}
inline Cell merge_cell(int k, int l) {
  Cell c;
  c.kind = CellKind::Merge;
  c.k = k;
  c.l = l;
  return c;
}
inline Cell split_cell(int k, int l) {
  Cell c;
  c.kind = CellKind::Split;
  c.k = k;
  c.l = l;
  return c;
}
inline Cell tagout_cell(int k, char side) {
  Cell c;
  c.kind = CellKind::TagOut;
  c.k = k;
  c.side = side;
  return c;
}
inline Cell tagin_cell(int k, char side) {
  Cell c;
  c.kind = CellKind::TagIn;
  c.k = k;
  c.side = side;
  return c;
}
inline Cell cup_cell(int k, bool minus_left) {
  Cell c;
  c.kind = CellKind::Cup;
  c.k = k;
  c.minus_left = minus_left;
  return c;
}
inline Cell cap_cell(int k, bool minus_left) {
  Cell c;
  c.kind = CellKind::Cap;
  c.k = k;
  c.minus_left = minus_left;
  return c;
}

inline std::vector<Strand> cell_inputs(const Cell& c, int n) {
  switch (c.kind) {
    case CellKind::Id:
      return {{c.k, c.dual}};
    case CellKind::Merge:
      return {{c.k, false}, {c.l, false}};
    case CellKind::Split:
      return {{c.k + c.l, false}};
    case CellKind::TagOut:
      return {{c.k, false}};
    case CellKind::TagIn:
      return {{c.k, true}};
    case CellKind::Cup:
      return {};
    case CellKind::Cap:
      if (c.minus_left) return {{c.k, true}, {c.k, false}};
      return {{c.k, false}, {c.k, true}};
  }
  return {};
}

inline std::vector<Strand> cell_outputs(const Cell& c, int n) {
  switch (c.kind) {
    case CellKind::Id:
      return {{c.k, c.dual}};
    case CellKind::Merge:
      return {{c.k + c.l, false}};
    case CellKind::Split:
      return {{c.k, false}, {c.l, false}};
    case CellKind::TagOut:
      return {{n - c.k, true}};
    case CellKind::TagIn:
      return {{n - c.k, false}};
    case CellKind::Cup:
      if (c.minus_left) return {{c.k, true}, {c.k, false}};
      return {{c.k, false}, {c.k, true}};
    case CellKind::Cap:
      return {};
  }
  return {};
}

struct Web {
  int n = 2;
  std::vector<Strand> src;
  std::vector<std::vector<Cell>> rows;  // bottom to top

  bool operator==(const Web&) const = default;
};

enum class WebStatus { Ok, Zero, Malformed };

// Structural check: each row must consume exactly the boundary produced so
// far.  Labels outside [0, n] are not an error; they index zero-dimensional
// factors, so the web evaluates to a zero map and is reported as such.
inline WebStatus web_status(const Web& w, std::string* why = nullptr) {
  bool zero = false;
  auto note = [&](const std::vector<Strand>& strands) {
    for (const Strand& s : strands)
      if (s.label < 0 || s.label > w.n) zero = true;
  };
  note(w.src);
  std::vector<Strand> cur = w.src;
  for (size_t r = 0; r < w.rows.size(); r++) {
    std::vector<Strand> want, next;
    for (const Cell& c : w.rows[r]) {
      auto in = cell_inputs(c, w.n);
      auto out = cell_outputs(c, w.n);
      want.insert(want.end(), in.begin(), in.end());
      next.insert(next.end(), out.begin(), out.end());
    }
    if (want != cur) {
      if (why) {
        std::ostringstream os;
        os << "row " << r << ": needs";
        for (auto& s : want) os << " " << s.label << (s.dual ? "-" : "+");
        os << " but has";
        for (auto& s : cur) os << " " << s.label << (s.dual ? "-" : "+");
        *why = os.str();
      }
      return WebStatus::Malformed;
    }
    note(next);
    cur = std::move(next);
  }
  return zero ? WebStatus::Zero : WebStatus::Ok;
}

inline std::vector<Strand> web_dst(const Web& w) {
  std::string why;
  if (web_status(w, &why) == WebStatus::Malformed)
    throw std::invalid_argument("web_dst: malformed web: " + why);
  std::vector<Strand> cur = w.src;
  for (const auto& row : w.rows) {
    std::vector<Strand> next;
    for (const Cell& c : row) {
      auto out = cell_outputs(c, w.n);
      next.insert(next.end(), out.begin(), out.end());
    }
    cur = std::move(next);
  }
  return cur;
}

using WebSum = std::vector<std::pair<Laurent, Web>>;

// --- text format ------------------------------------------------------------

inline std::string render_strands(const std::vector<Strand>& strands) {
  std::string out = "(";
  for (size_t i = 0; i < strands.size(); i++) {
    if (i) out += ",";
    out += std::to_string(strands[i].label);
    out += strands[i].dual ? "-" : "+";
  }
  return out + ")";
}

inline std::string render_cell(const Cell& c) {
  std::ostringstream os;
  switch (c.kind) {
    case CellKind::Id:
      os << "id " << c.k << (c.dual ? "-" : "+");
      break;
    case CellKind::Merge:
      os << "merge " << c.k << " " << c.l;
      break;
    case CellKind::Split:
      os << "split " << c.k << " " << c.l;
      break;
    case CellKind::TagOut:
      os << "tagout " << c.k << " " << c.side;
      break;
    case CellKind::TagIn:
      os << "tagin " << c.k << " " << c.side;
      break;
    case CellKind::Cup:
      os << "cup " << c.k << " " << (c.minus_left ? "-+" : "+-");
      break;
    case CellKind::Cap:
      os << "cap " << c.k << " " << (c.minus_left ? "-+" : "+-");
      break;
  }
  return os.str();
}

inline std::string render_web(const Web& w) {
  std::string out = "web n=" + std::to_string(w.n) +
                    " src=" + render_strands(w.src) + "\n";
  for (const auto& row : w.rows) {
    for (size_t i = 0; i < row.size(); i++) {
      if (i) out += " | ";
      out += render_cell(row[i]);
    }
    out += "\n";
  }
  return out;
}

inline std::string render_websum(const WebSum& ws, int root = 1) {
  std::string out;
  for (const auto& [coeff, w] : ws) {
    out += "+ " + render_scalar(coeff, root) + " *\n";
    out += render_web(w);
  }
  return out;
}

namespace detail {

inline std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r\n");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r\n");
  return s.substr(a, b - a + 1);
}

inline std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : s) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

inline std::vector<Strand> parse_strands(const std::string& text) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw std::invalid_argument("expected (..) strand list, got " + text);
  std::string body = t.substr(1, t.size() - 2);
  std::vector<Strand> out;
  if (trim(body).empty()) return out;
  for (const std::string& piece : split(body, ',')) {
    std::string p = trim(piece);
    if (p.size() < 2 || (p.back() != '+' && p.back() != '-'))
      throw std::invalid_argument("bad strand " + piece);
    Strand s;
    s.label = std::stoi(p.substr(0, p.size() - 1));
    s.dual = p.back() == '-';
    out.push_back(s);
  }
  return out;
}

inline Cell parse_cell(const std::string& text) {
  std::istringstream is(text);
  std::string word;
  if (!(is >> word)) throw std::invalid_argument("empty cell");
  auto need_int = [&] {
    int v;
    if (!(is >> v))
      throw std::invalid_argument("cell " + text + ": expected number");
    return v;
  };
  auto need_word = [&] {
    std::string w;
    if (!(is >> w))
      throw std::invalid_argument("cell " + text + ": expected token");
    return w;
  };
  auto done = [&](Cell c) {
    std::string rest;
    if (is >> rest)
      throw std::invalid_argument("cell " + text + ": trailing " + rest);
    return c;
  };
  if (word == "id") {
    std::string arg = need_word();
    if (arg.size() < 2 || (arg.back() != '+' && arg.back() != '-'))
      throw std::invalid_argument("cell " + text + ": bad strand");
    return done(id_cell(std::stoi(arg.substr(0, arg.size() - 1)),
                        arg.back() == '-'));
  }
  if (word == "merge") {
    int k = need_int();
    return done(merge_cell(k, need_int()));
  }
  if (word == "split") {
    int k = need_int();
    return done(split_cell(k, need_int()));
  }
  if (word == "tagout" || word == "tagin") {
    int k = need_int();
    std::string s = need_word();
    if (s != "L" && s != "R")
      throw std::invalid_argument("cell " + text + ": side must be L or R");
    return done(word == "tagout" ? tagout_cell(k, s[0]) : tagin_cell(k, s[0]));
  }
  if (word == "cup" || word == "cap") {
    int k = need_int();
    std::string o = need_word();
    if (o != "-+" && o != "+-")
      throw std::invalid_argument("cell " + text +
                                  ": orientation must be -+ or +-");
    return done(word == "cup" ? cup_cell(k, o == "-+")
                              : cap_cell(k, o == "-+"));
  }
  throw std::invalid_argument("unknown cell kind " + word);
}

}  // namespace detail

// Accepts the output of render_web; blank lines and lines starting with '#'
// are ignored.
inline Web parse_web(const std::string& text) {
  Web w;
  bool seen_header = false;
  for (const std::string& raw : detail::split(text, '\n')) {
    std::string line = detail::trim(raw);
    if (line.empty() || line[0] == '#') continue;
    if (!seen_header) {
      if (line.rfind("web ", 0) != 0)
        throw std::invalid_argument("expected 'web n=.. src=(..)' header");
      std::istringstream is(line.substr(4));
      std::string field;
      bool have_n = false, have_src = false;
      while (is >> field) {
        if (field.rfind("n=", 0) == 0) {
          w.n = std::stoi(field.substr(2));
          have_n = true;
        } else if (field.rfind("src=", 0) == 0) {
          w.src = detail::parse_strands(field.substr(4));
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
    std::vector<Cell> row;
    for (const std::string& piece : detail::split(line, '|'))
      row.push_back(detail::parse_cell(detail::trim(piece)));
    w.rows.push_back(std::move(row));
  }
  if (!seen_header) throw std::invalid_argument("missing web header");
  return w;
}

// A websum is a sequence of web blocks, each preceded by a coefficient line
// of the form "+ <scalar> *"; the coefficient of the first block may be
// omitted and defaults to 1.
inline WebSum parse_websum(const std::string& text, int root = 1) {
  WebSum out;
  Laurent pending = Laurent::one();
  std::string block;
  auto flush = [&] {
    bool has_content = false;
    for (const std::string& raw : detail::split(block, '\n')) {
      std::string line = detail::trim(raw);
      if (!line.empty() && line[0] != '#') {
        has_content = true;
        break;
      }
    }
    if (!has_content) return;  // comments may precede the first block
    out.emplace_back(pending, parse_web(block));
    block.clear();
    pending = Laurent::one();
  };
  for (const std::string& raw : detail::split(text, '\n')) {
    std::string line = detail::trim(raw);
    if (line.size() >= 2 && line.front() == '+' && line.back() == '*') {
      flush();
      pending = parse_scalar(line.substr(1, line.size() - 2), root);
      continue;
    }
    if (line.rfind("web ", 0) == 0) flush();
    block += raw + "\n";
  }
  flush();
  if (out.empty()) throw std::invalid_argument("websum: no webs found");
  return out;
}

}  // namespace spider
