#pragma once

// Exact inversion of square maps.  Gauss-Jordan runs over the field of
// rational functions in the root variable; inverses of ring-invertible maps
// come back with polynomial entries.

#include <stdexcept>
#include <vector>

#include "spider/exterior.hpp"

namespace spider {

namespace linalg_detail {

using Poly = std::vector<Rational>;  // ascending degree, no trailing zeros

inline void trim(Poly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline Poly poly_mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly out(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); i++)
    for (size_t j = 0; j < b.size(); j++) out[i + j] += a[i] * b[j];
  trim(out);
  return out;
}

// division with remainder; quotient discarded by callers that only need it
inline Poly poly_mod(Poly a, const Poly& b) {
  while (a.size() >= b.size() && !a.empty()) {
    Rational f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t j = 0; j < b.size(); j++) a[shift + j] -= f * b[j];
    trim(a);
  }
  return a;
}

inline Poly poly_gcd(Poly a, Poly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.empty()) {
    Rational lead = a.back();
    for (Rational& c : a) c /= lead;
  }
  return a;
}

inline Poly to_poly(const Laurent& l) {
  if (l.is_zero()) return {};
  int lo = l.min_exp(), hi = l.max_exp();
  Poly out(hi - lo + 1);
  for (const auto& [e, c] : l.terms()) out[e - lo] = c;
  return out;
}

inline Laurent from_poly(const Poly& p, int shift) {
  Laurent out;
  for (size_t i = 0; i < p.size(); i++)
    out += Laurent::monomial(static_cast<int>(i) + shift, p[i]);
  return out;
}

}  // namespace linalg_detail

// Quotient of two Laurent polynomials, kept reduced with a monic
// denominator of nonnegative valuation.
class RationalFn {
 public:
  RationalFn() : num_(), den_(Laurent::one()) {}
  explicit RationalFn(Laurent l) : num_(std::move(l)), den_(Laurent::one()) {}
  RationalFn(Laurent n, Laurent d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
    reduce();
  }

  const Laurent& num() const { return num_; }
  const Laurent& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  bool is_laurent() const { return den_ == Laurent::one(); }

  Laurent as_laurent() const {
    if (!is_laurent())
      throw std::domain_error("RationalFn: entry is not polynomial");
    return num_;
  }

  friend RationalFn operator+(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator-(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b) {
    return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend RationalFn operator/(const RationalFn& a, const RationalFn& b) {
    if (b.is_zero()) throw std::domain_error("RationalFn: division by zero");
    return RationalFn(a.num_ * b.den_, a.den_ * b.num_);
  }
  bool operator==(const RationalFn& o) const {
    return num_ == o.num_ && den_ == o.den_;
  }

 private:
  void reduce() {
    using namespace linalg_detail;
    if (num_.is_zero()) {
      den_ = Laurent::one();
      return;
    }
    // valuations are units; remember the net power while reducing honest
    // polynomial parts
    int val = num_.min_exp() - den_.min_exp();
    Poly pn = to_poly(num_), pd = to_poly(den_);
    Poly g = poly_gcd(pn, pd);
    if (g.size() > 1) {
      Laurent gl = from_poly(g, 0);
      num_ = divide_exact(from_poly(pn, 0), gl);
      den_ = divide_exact(from_poly(pd, 0), gl);
    } else {
      num_ = from_poly(pn, 0);
      den_ = from_poly(pd, 0);
    }
    num_ = num_ * Laurent::monomial(val);
    // strip the denominator's unit part: valuation and leading coefficient
    int v = den_.min_exp();
    Rational lead = den_.terms().back().second;
    Laurent unit = Laurent::monomial(-v, Rational(1) / lead);
    num_ = num_ * unit;
    den_ = den_ * unit;
  }

  Laurent num_, den_;
};

// Inverse of a square map over the scalar ring.  Throws when the map is
// singular or when the inverse fails to be polynomial.
inline LinearMap invert_map(const LinearMap& m) {
  if (m.src.dim != m.dst.dim)
    throw std::invalid_argument("invert_map: map is not square");
  int64_t D = m.src.dim;
  std::vector<std::vector<RationalFn>> a(
      D, std::vector<RationalFn>(2 * D));
  for (const auto& [col, vec] : m.cols)
    for (const auto& [row, c] : vec) a[row][col] = RationalFn(c);
  for (int64_t i = 0; i < D; i++) a[i][D + i] = RationalFn(Laurent::one());

  for (int64_t piv = 0; piv < D; piv++) {
    int64_t r = piv;
    while (r < D && a[r][piv].is_zero()) r++;
    if (r == D) throw std::domain_error("invert_map: singular map");
    std::swap(a[piv], a[r]);
    RationalFn lead = a[piv][piv];
    for (int64_t c = piv; c < 2 * D; c++) a[piv][c] = a[piv][c] / lead;
    for (int64_t rr = 0; rr < D; rr++) {
      if (rr == piv || a[rr][piv].is_zero()) continue;
      RationalFn f = a[rr][piv];
      for (int64_t c = piv; c < 2 * D; c++)
        a[rr][c] = a[rr][c] - f * a[piv][c];
    }
  }

  LinearMap out{m.dst, m.src, {}};
  for (int64_t col = 0; col < D; col++)
    for (int64_t row = 0; row < D; row++) {
      const RationalFn& e = a[row][D + col];
      if (!e.is_zero()) out.set(col, row, e.as_laurent());
    }
  return out;
}

}  // namespace spider
