#pragma once

// Rewrites any web with upward boundary into an equivalent ladder, up to an
// overall sign.  The sweep keeps one ladder upright per web strand plus dead
// uprights carrying 0 or n; downward strands ride on the complementary
// upright with a side bit remembering which tag convention produced them.
// Every geometric event compiles to rungs between adjacent uprights, new
// uprights always appear at the far right and are carried into position by
// swap rungs, so emitted rung positions never shift.

#include <stdexcept>
#include <string>
#include <vector>

#include "spider/qgroup.hpp"

namespace spider {

struct Ladderized {
  int sign = 1;  // the web equals sign times the ladder
  Ladder ladder;
};

namespace ladderize_detail {

struct UprightState {
  int label = 0;
  bool live = false;  // carries a web strand
  bool dual = false;  // the carried strand points down
  char eps = 'L';     // tag side pending on a downward strand
};

inline int swap_parity(int l, int n) {
  // sign exponent for carrying an l strand across a determinant strand
  long long e = 1LL * l * (n - l);
  return static_cast<int>(((e % 2) + 2) % 2);
}

class Sweep {
 public:
  Sweep(int n, const std::vector<Strand>& src) : n_(n) {
    for (const Strand& s : src) {
      if (s.dual) throw std::invalid_argument("ladderize: boundary must point up");
      ups_.push_back({s.label, true, false, 'L'});
      src_labels_.push_back(s.label);
    }
  }

  void apply(const Cell& cell, int pos) {
    switch (cell.kind) {
      case CellKind::Id:
        break;
      case CellKind::Merge: {
        int x = live_index(pos), y = live_index(pos + 1);
        y = bring_adjacent(x, y);
        transfer_to(x, cell.k + cell.l);
        ups_[y] = {0, false, false, 'L'};
        break;
      }
      case CellKind::Split: {
        int x = live_index(pos);
        int z = dead_zero_right_of(x);
        transfer_to(x, cell.k);
        ups_[z].live = true;
        ups_[z].dual = false;
        break;
      }
      case CellKind::TagOut: {
        int x = live_index(pos);
        ups_[x].dual = true;
        ups_[x].eps = cell.side;
        break;
      }
      case CellKind::TagIn: {
        int x = live_index(pos);
        if (ups_[x].eps != cell.side && swap_parity(cell.k, n_)) sign_ = -sign_;
        ups_[x].dual = false;
        break;
      }
      case CellKind::Cup: {
        int left = append_pair(pos);
        if (cell.minus_left) {
          transfer_to(left, n_ - cell.k);
          ups_[left] = {ups_[left].label, true, true, 'L'};
          ups_[left + 1].live = true;
        } else {
          transfer_to(left, cell.k);
          ups_[left].live = true;
          ups_[left + 1] = {ups_[left + 1].label, true, true, 'R'};
        }
        break;
      }
      case CellKind::Cap: {
        int x = live_index(pos), y = live_index(pos + 1);
        const UprightState& arc = cell.minus_left ? ups_[x] : ups_[y];
        char want = cell.minus_left ? 'L' : 'R';
        if (arc.eps != want && swap_parity(cell.k, n_)) sign_ = -sign_;
        y = bring_adjacent(x, y);
        transfer_to(x, n_);
        ups_[x] = {n_, false, false, 'L'};
        ups_[y] = {0, false, false, 'L'};
        break;
      }
    }
  }

  Ladderized finish() const {
    for (const UprightState& u : ups_)
      if (u.live && u.dual)
        throw std::invalid_argument("ladderize: boundary must point up");
    Ladder lad{n_, src_labels_, rungs_};
    return {sign_, lad};
  }

 private:
  int live_index(int p) const {
    int seen = 0;
    for (size_t i = 0; i < ups_.size(); i++)
      if (ups_[i].live && seen++ == p) return static_cast<int>(i);
    throw std::invalid_argument("ladderize: strand position out of range");
  }

  void emit(int i, int delta) {
    // moves delta units onto upright i from its right neighbour (negative
    // delta pushes the other way), keeping labels in step
    if (delta == 0) return;
    bool isF = delta < 0;
    int r = isF ? -delta : delta;
    rungs_.push_back({isF, i + 1, r});
    ups_[i].label += delta;
    ups_[i + 1].label -= delta;
  }

  void transfer_to(int i, int target) { emit(i, target - ups_[i].label); }

  // swaps uprights i and i+1, exactly one of which is dead
  void swap_dead(int i) {
    UprightState a = ups_[i], b = ups_[i + 1];
    const UprightState& dead = a.live ? b : a;
    const UprightState& alive = a.live ? a : b;
    if (dead.label == n_ && swap_parity(alive.label, n_)) sign_ = -sign_;
    transfer_to(i, b.label);
    ups_[i] = {b.label, b.live, b.dual, b.eps};
    ups_[i + 1] = {a.label, a.live, a.dual, a.eps};
  }

  // hops the live load at y leftward over dead uprights until it sits just
  // right of x; returns its final position
  int bring_adjacent(int x, int y) {
    while (y > x + 1) {
      swap_dead(y - 1);
      y--;
    }
    return y;
  }

  // finds or creates a dead empty upright immediately right of x
  int dead_zero_right_of(int x) {
    size_t z = static_cast<size_t>(x) + 1;
    if (z < ups_.size() && !ups_[z].live && ups_[z].label == 0)
      return static_cast<int>(z);
    ups_.push_back({0, false, false, 'L'});
    src_labels_.push_back(0);
    for (int j = static_cast<int>(ups_.size()) - 1; j > x + 1; j--)
      swap_dead(j - 1);
    return x + 1;
  }

  // appends a determinant pair and carries it to the gap left of the
  // carrier of strand pos; returns the pair's left position
  int append_pair(int pos) {
    int target = -1;
    int live_count = 0;
    for (const UprightState& u : ups_)
      if (u.live) live_count++;
    if (pos < live_count) target = live_index(pos);
    ups_.push_back({n_, false, false, 'L'});
    ups_.push_back({0, false, false, 'L'});
    src_labels_.push_back(n_);
    src_labels_.push_back(0);
    int left = static_cast<int>(ups_.size()) - 2;
    if (target >= 0)
      while (left > target) {
        swap_dead(left - 1);      // determinant member moves left
        swap_dead(left);          // empty member follows
        left--;
      }
    return left;
  }

  int n_;
  std::vector<UprightState> ups_;
  std::vector<int> src_labels_;
  std::vector<ULetter> rungs_;
  int sign_ = 1;
};

}  // namespace ladderize_detail

inline Ladderized ladderize(const Web& w) {
  std::string why;
  if (web_status(w, &why) == WebStatus::Malformed)
    throw std::invalid_argument("ladderize: " + why);
  ladderize_detail::Sweep sweep(w.n, w.src);
  for (const auto& row : w.rows) {
    int pos = 0;
    for (const Cell& cell : row) {
      sweep.apply(cell, pos);
      pos += static_cast<int>(cell_outputs(cell, w.n).size());
    }
  }
  return sweep.finish();
}

// The ladder boundary carries extra dead factors labelled 0 or n.  Those
// spaces are one dimensional, so position indices agree and the matrices
// can be compared entry by entry.
inline bool ladderize_verify(const Web& w) {
  Ladderized lz = ladderize(w);
  LinearMap web_side = web_map(w);
  LinearMap lad_side = ladder_map(lz.ladder);
  if (web_side.src.dim != lad_side.src.dim ||
      web_side.dst.dim != lad_side.dst.dim)
    return false;
  Laurent s(Rational(lz.sign));
  return map_scale(lad_side, s).cols == web_side.cols;
}

}  // namespace spider
