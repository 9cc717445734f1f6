#pragma once

// Exact scalars for the web engine: Laurent polynomials in a formal root u
// with arbitrary-precision rational coefficients.  A root order N declares
// q = u^N, so ordinary q-coefficients live at exponents divisible by N and
// fractional q-powers (q^{a/N}) stay integral in u.  Terms are kept sorted
// by exponent with no stored zeros, so equality is structural.

#include <gmpxx.h>

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace spider {

using Rational = mpq_class;

class Laurent {
 public:
  // (exponent, coefficient), ascending exponent, coefficients nonzero.
  using Terms = std::vector<std::pair<int, Rational>>;

  Laurent() = default;
  explicit Laurent(long c) {
    if (c != 0) terms_.emplace_back(0, Rational(c));
  }
  explicit Laurent(const Rational& c) {
    if (c != 0) terms_.emplace_back(0, c);
  }

  static Laurent zero() { return Laurent(); }
  static Laurent one() { return Laurent(1); }
  static Laurent monomial(int exp, Rational coeff = Rational(1)) {
    Laurent s;
    if (coeff != 0) s.terms_.emplace_back(exp, std::move(coeff));
    return s;
  }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const {
    return terms_.size() == 1 && terms_[0].first == 0 && terms_[0].second == 1;
  }

  bool operator==(const Laurent& o) const { return terms_ == o.terms_; }
  bool operator!=(const Laurent& o) const { return !(*this == o); }
  // Total order for use as a map key; not meaningful arithmetically.
  bool operator<(const Laurent& o) const {
    if (terms_.size() != o.terms_.size())
      return terms_.size() < o.terms_.size();
    for (size_t i = 0; i < terms_.size(); i++) {
      if (terms_[i].first != o.terms_[i].first)
        return terms_[i].first < o.terms_[i].first;
      int c = cmp(terms_[i].second, o.terms_[i].second);
      if (c != 0) return c < 0;
    }
    return false;
  }

  Laurent operator+(const Laurent& o) const {
    Laurent r;
    size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      if (j == o.terms_.size() ||
          (i < terms_.size() && terms_[i].first < o.terms_[j].first)) {
        r.terms_.push_back(terms_[i++]);
      } else if (i == terms_.size() || o.terms_[j].first < terms_[i].first) {
        r.terms_.push_back(o.terms_[j++]);
      } else {
        Rational c = terms_[i].second + o.terms_[j].second;
        if (c != 0) r.terms_.emplace_back(terms_[i].first, std::move(c));
        i++, j++;
      }
    }
    return r;
  }

  Laurent operator-() const {
    Laurent r = *this;
    for (auto& [e, c] : r.terms_) c = -c;
    return r;
  }
  Laurent operator-(const Laurent& o) const { return *this + (-o); }

  Laurent operator*(const Laurent& o) const {
    std::map<int, Rational> acc;
    for (const auto& [e1, c1] : terms_)
      for (const auto& [e2, c2] : o.terms_) acc[e1 + e2] += c1 * c2;
    Laurent r;
    for (auto& [e, c] : acc)
      if (c != 0) r.terms_.emplace_back(e, std::move(c));
    return r;
  }

  Laurent& operator+=(const Laurent& o) { return *this = *this + o; }
  Laurent& operator-=(const Laurent& o) { return *this = *this - o; }
  Laurent& operator*=(const Laurent& o) { return *this = *this * o; }

  Laurent scale(const Rational& c) const {
    Laurent r;
    if (c == 0) return r;
    r.terms_ = terms_;
    for (auto& [e, t] : r.terms_) t *= c;
    return r;
  }

  // Multiplies every exponent by k (the root-order embedding u -> u^k).
  Laurent stretch(int k) const {
    Laurent r;
    r.terms_ = terms_;
    for (auto& [e, c] : r.terms_) e *= k;
    if (k < 0) std::reverse(r.terms_.begin(), r.terms_.end());
    return r;
  }

  // Substitutes u -> u^{-1}.
  Laurent bar() const { return stretch(-1); }

  int min_exp() const { return terms_.empty() ? 0 : terms_.front().first; }
  int max_exp() const { return terms_.empty() ? 0 : terms_.back().first; }

  // Exact value at u = u0.  u0 must be nonzero since negative exponents occur.
  Rational specialize(const Rational& u0) const {
    if (u0 == 0) throw std::invalid_argument("specialize: u0 must be nonzero");
    Rational inv = 1 / u0;
    Rational acc = 0;
    for (const auto& [e, c] : terms_) {
      Rational p = 1;
      const Rational& base = e >= 0 ? u0 : inv;
      for (int i = 0; i < (e >= 0 ? e : -e); i++) p *= base;
      acc += c * p;
    }
    return acc;
  }

 private:
  Terms terms_;
};

// Exact division; the quotient must again be Laurent.  Used for divided
// powers, where divisibility by quantum factorials is a theorem.
inline Laurent divide_exact(const Laurent& a, const Laurent& b) {
  if (b.is_zero()) throw std::invalid_argument("divide_exact: zero divisor");
  if (a.is_zero()) return Laurent::zero();
  // Work with poly parts shifted to exponent 0.
  Laurent rem = a.stretch(1);
  Laurent q;
  const auto& bt = b.terms();
  int blead = b.max_exp();
  Rational blc = bt.back().second;
  while (!rem.is_zero()) {
    int e = rem.max_exp() - blead;
    Rational c = rem.terms().back().second / blc;
    Laurent t = Laurent::monomial(e, c);
    q += t;
    rem -= t * b;
    if (!rem.is_zero() && rem.max_exp() >= e + blead)
      throw std::logic_error("divide_exact: no progress");
  }
  return q;
}

// q^e with q = u^N.
inline Laurent q_power(int e, int root_order = 1) {
  return Laurent::monomial(e * root_order);
}

// Balanced quantum integer [n] = q^{n-1} + q^{n-3} + ... + q^{1-n}, [-n] = -[n].
inline Laurent quantum_int(int n, int root_order = 1) {
  Laurent r;
  int a = n < 0 ? -n : n;
  for (int e = a - 1; e >= 1 - a; e -= 2) r += q_power(e, root_order);
  return n < 0 ? -r : r;
}

inline Laurent quantum_factorial(int n, int root_order = 1) {
  Laurent r = Laurent::one();
  for (int j = 2; j <= n; j++) r *= quantum_int(j, root_order);
  return r;
}

// Balanced Gaussian binomial, computed by the Pascal-type recursion
// [n,k] = q^k [n-1,k] + q^{k-n} [n-1,k-1], so no polynomial division is
// involved.  Negative top argument follows [a,k] = (-1)^k [k-a-1,k].
inline Laurent quantum_binomial(int n, int k, int root_order = 1) {
  if (k < 0) return Laurent::zero();
  if (n < 0) {
    Laurent r = quantum_binomial(-n + k - 1, k, root_order);
    return (k % 2 != 0) ? -r : r;
  }
  if (k > n) return Laurent::zero();
  static std::map<std::pair<int, int>, Laurent> memo;
  auto key = std::make_pair(n, k);
  auto it = memo.find(key);
  Laurent base;
  if (it != memo.end()) {
    base = it->second;
  } else {
    if (k == 0 || k == n) {
      base = Laurent::one();
    } else {
      base = q_power(k) * quantum_binomial(n - 1, k) +
             q_power(k - n) * quantum_binomial(n - 1, k - 1);
    }
    memo.emplace(key, base);
  }
  return root_order == 1 ? base : base.stretch(root_order);
}

// --- textual form -----------------------------------------------------------
//
// Rendering writes monomials in descending exponent, e.g. "q^2 + 2 + q^-2"
// at root order 1 and "u^3 - u^-1" otherwise.  parse_scalar accepts the same
// grammar; "q" in a root-order-N context means u^N.

inline std::string render_rational(const Rational& c) {
  return c.get_str();
}

inline std::string render_scalar(const Laurent& s, int root_order = 1) {
  if (s.is_zero()) return "0";
  const char* var = root_order == 1 ? "q" : "u";
  std::string out;
  const auto& ts = s.terms();
  for (auto it = ts.rbegin(); it != ts.rend(); ++it) {
    auto [e, c] = *it;
    bool neg = c < 0;
    Rational a = neg ? Rational(-c) : c;
    if (out.empty())
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    bool unit = a == 1;
    if (e == 0) {
      out += render_rational(a);
    } else {
      if (!unit) out += render_rational(a) + " ";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

inline Laurent parse_scalar(const std::string& text, int root_order = 1) {
  Laurent result;
  size_t i = 0;
  auto skip_ws = [&] { while (i < text.size() && isspace(text[i])) i++; };
  skip_ws();
  if (i == text.size())
    throw std::invalid_argument("parse_scalar: empty input");
  bool first = true;
  while (true) {
    skip_ws();
    if (i == text.size()) break;
    int sign = 1;
    if (text[i] == '+' || text[i] == '-') {
      sign = text[i] == '-' ? -1 : 1;
      i++;
      skip_ws();
    } else if (!first) {
      throw std::invalid_argument("parse_scalar: expected + or - at \"" +
                                  text.substr(i) + "\"");
    }
    first = false;
    // coefficient (optional): integer or p/r
    Rational coeff = 1;
    bool saw_coeff = false;
    size_t start = i;
    while (i < text.size() && (isdigit(text[i]))) i++;
    if (i > start) {
      std::string num = text.substr(start, i - start);
      skip_ws();
      if (i < text.size() && text[i] == '/') {
        i++;
        skip_ws();
        size_t ds = i;
        while (i < text.size() && isdigit(text[i])) i++;
        if (i == ds) throw std::invalid_argument("parse_scalar: bad fraction");
        coeff = Rational(num + "/" + text.substr(ds, i - ds));
        coeff.canonicalize();
      } else {
        coeff = Rational(num);
      }
      saw_coeff = true;
      skip_ws();
      if (i < text.size() && text[i] == '*') {
        i++;
        skip_ws();
      }
    }
    // variable part (optional)
    int uexp = 0;
    if (i < text.size() && (text[i] == 'q' || text[i] == 'u')) {
      char var = text[i++];
      int e = 1;
      if (i < text.size() && text[i] == '^') {
        i++;
        int esign = 1;
        if (i < text.size() && (text[i] == '-' || text[i] == '+')) {
          if (text[i] == '-') esign = -1;
          i++;
        }
        size_t es = i;
        while (i < text.size() && isdigit(text[i])) i++;
        if (i == es) throw std::invalid_argument("parse_scalar: bad exponent");
        e = esign * std::stoi(text.substr(es, i - es));
      }
      uexp = var == 'q' ? e * root_order : e;
    } else if (!saw_coeff) {
      throw std::invalid_argument("parse_scalar: expected term at \"" +
                                  text.substr(i) + "\"");
    }
    if (sign < 0) coeff = -coeff;
    result += Laurent::monomial(uexp, coeff);
  }
  return result;
}

}  // namespace spider
