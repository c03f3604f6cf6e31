#pragma once

// Sparse multivariate polynomials over Q with lexicographic monomial order.
//
// Variables are addressed by index; index 0 is the most significant variable
// in the order. A polynomial carries its variable count so that exponent
// vectors of every term have the same length.

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace kenmotsu {

using Rational = mpq_class;
using Integer = mpz_class;
using Exponents = std::vector<int>;

class Polynomial {
 public:
  // Descending lex: the first entry of the map is the leading term.
  using TermMap = std::map<Exponents, Rational, std::greater<>>;

  Polynomial() = default;
  explicit Polynomial(std::size_t nvars) : nvars_(nvars) {}
  Polynomial(std::size_t nvars, const Rational& c) : nvars_(nvars) {
    if (c != 0) terms_.emplace(Exponents(nvars, 0), c);
  }

  static Polynomial variable(std::size_t nvars, std::size_t index) {
    Polynomial p(nvars);
    Exponents e(nvars, 0);
    e.at(index) = 1;
    p.terms_.emplace(std::move(e), Rational(1));
    return p;
  }

  static Polynomial monomial(Exponents e, const Rational& c) {
    Polynomial p(e.size());
    if (c != 0) p.terms_.emplace(std::move(e), c);
    return p;
  }

  std::size_t nvars() const { return nvars_; }
  const TermMap& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() > 1) return false;
    const auto& e = terms_.begin()->first;
    return std::all_of(e.begin(), e.end(), [](int k) { return k == 0; });
  }

  Rational constant_term() const {
    auto it = terms_.find(Exponents(nvars_, 0));
    return it == terms_.end() ? Rational(0) : it->second;
  }

  const Exponents& leading_monomial() const { return terms_.begin()->first; }
  const Rational& leading_coefficient() const { return terms_.begin()->second; }

  // Re-embeds into a larger variable space; new variables are appended.
  Polynomial widened(std::size_t nvars) const {
    if (nvars < nvars_) throw std::logic_error("cannot narrow a polynomial");
    if (nvars == nvars_) return *this;
    Polynomial p(nvars);
    for (const auto& [e, c] : terms_) {
      Exponents w = e;
      w.resize(nvars, 0);
      p.terms_.emplace(std::move(w), c);
    }
    return p;
  }

  int degree_in(std::size_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[var]);
    return d;
  }

  bool depends_on(std::size_t var) const { return degree_in(var) > 0; }

  int total_degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) {
      int s = 0;
      for (int k : e) s += k;
      d = std::max(d, s);
    }
    return d;
  }

  Polynomial& operator+=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) accumulate(e, c);
    return *this;
  }

  Polynomial& operator-=(const Polynomial& o) {
    check_compatible(o);
    for (const auto& [e, c] : o.terms_) accumulate(e, -c);
    return *this;
  }

  Polynomial& operator*=(const Rational& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }

  Polynomial operator-() const {
    Polynomial p = *this;
    for (auto& [e, c] : p.terms_) c = -c;
    return p;
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    a.check_compatible(b);
    Polynomial p(a.nvars_);
    Exponents e(a.nvars_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::size_t k = 0; k < e.size(); ++k) e[k] = ea[k] + eb[k];
        p.accumulate(e, ca * cb);
      }
    }
    return p;
  }

  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  Polynomial pow(unsigned k) const {
    Polynomial result(nvars_, Rational(1));
    Polynomial base = *this;
    while (k != 0) {
      if (k & 1U) result *= base;
      k >>= 1U;
      if (k != 0) base = base * base;
    }
    return result;
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    auto ia = a.terms_.begin();
    auto ib = b.terms_.begin();
    for (; ia != a.terms_.end(); ++ia, ++ib) {
      if (ia->first != ib->first || ia->second != ib->second) return false;
    }
    return true;
  }

  Polynomial derivative(std::size_t var) const {
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] == 0) continue;
      Exponents d = e;
      d[var] -= 1;
      p.accumulate(d, c * e[var]);
    }
    return p;
  }

  // Collects coefficients with respect to one variable: degree -> coefficient
  // (the coefficient no longer involves `var`).
  std::map<int, Polynomial> coefficients_in(std::size_t var) const {
    std::map<int, Polynomial> out;
    for (const auto& [e, c] : terms_) {
      Exponents r = e;
      r[var] = 0;
      auto [it, inserted] = out.try_emplace(e[var], nvars_);
      it->second.accumulate(r, c);
    }
    return out;
  }

  Polynomial coefficient_in(std::size_t var, int degree) const {
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) {
      if (e[var] != degree) continue;
      Exponents r = e;
      r[var] = 0;
      p.accumulate(r, c);
    }
    return p;
  }

  // Multiplies by var^k.
  Polynomial shifted(std::size_t var, int k) const {
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents s = e;
      s[var] += k;
      p.terms_.emplace(std::move(s), c);
    }
    return p;
  }

  // Substitutes a rational value for one variable.
  Polynomial evaluated(std::size_t var, const Rational& v) const {
    Polynomial p(nvars_);
    for (const auto& [e, c] : terms_) {
      Exponents r = e;
      r[var] = 0;
      Rational f = c;
      for (int k = 0; k < e[var]; ++k) f *= v;
      p.accumulate(r, f);
    }
    return p;
  }

  // Full numeric evaluation; `point` has one value per variable.
  Rational evaluate(const std::vector<Rational>& point) const {
    Rational sum = 0;
    for (const auto& [e, c] : terms_) {
      Rational t = c;
      for (std::size_t k = 0; k < e.size(); ++k) {
        for (int j = 0; j < e[k]; ++j) t *= point.at(k);
      }
      sum += t;
    }
    return sum;
  }

  // lcm of coefficient denominators divided by gcd of the scaled numerators,
  // signed so that multiplying by it gives a primitive integer polynomial with
  // positive leading coefficient.
  Rational primitive_scale() const {
    if (terms_.empty()) return Rational(1);
    Integer l = 1;
    for (const auto& [e, c] : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    Integer g = 0;
    for (const auto& [e, c] : terms_) {
      Integer n = c.get_num() * (l / c.get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    }
    Rational s(l, g);
    s.canonicalize();
    if (leading_coefficient() < 0) s = -s;
    return s;
  }

  Polynomial primitive() const { return *this * primitive_scale(); }

  Polynomial monic() const {
    if (terms_.empty()) return *this;
    return *this * Rational(1 / leading_coefficient());
  }

 private:
  void accumulate(const Exponents& e, const Rational& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(e, c);
    if (!inserted) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  void check_compatible(const Polynomial& o) const {
    if (o.nvars_ != nvars_) throw std::logic_error("polynomial variable count mismatch");
  }

  std::size_t nvars_ = 0;
  TermMap terms_;
};

namespace poly {

inline bool divides(const Exponents& small, const Exponents& big) {
  for (std::size_t k = 0; k < small.size(); ++k) {
    if (small[k] > big[k]) return false;
  }
  return true;
}

// Exact division; std::nullopt when `b` does not divide `a`.
inline std::optional<Polynomial> divide_exact(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  Polynomial q(a.nvars());
  Polynomial r = a;
  const Exponents& lb = b.leading_monomial();
  const Rational& cb = b.leading_coefficient();
  while (!r.is_zero()) {
    const Exponents& lr = r.leading_monomial();
    if (!divides(lb, lr)) return std::nullopt;
    Exponents e(lr.size());
    for (std::size_t k = 0; k < e.size(); ++k) e[k] = lr[k] - lb[k];
    Polynomial t = Polynomial::monomial(std::move(e), r.leading_coefficient() / cb);
    r -= t * b;
    q += t;
  }
  return q;
}

inline std::optional<std::size_t> highest_variable(const Polynomial& a, const Polynomial& b) {
  for (std::size_t v = a.nvars(); v-- > 0;) {
    if (a.depends_on(v) || b.depends_on(v)) return v;
  }
  return std::nullopt;
}

inline Polynomial gcd(const Polynomial& a, const Polynomial& b);

// gcd of the coefficients of `p` viewed as a polynomial in `var`.
inline Polynomial content_in(const Polynomial& p, std::size_t var) {
  Polynomial g(p.nvars());
  const auto coeffs = p.coefficients_in(var);
  for (const auto& [d, c] : coeffs) {
    if (c.is_constant()) return Polynomial(p.nvars(), Rational(1));
  }
  for (const auto& [d, c] : coeffs) {
    g = g.is_zero() ? c.monic() : gcd(g, c);
    if (g.is_constant()) break;
  }
  return g;
}

// Pseudo-remainder of a by b with respect to `var`.
inline Polynomial pseudo_remainder(Polynomial a, const Polynomial& b, std::size_t var) {
  const int db = b.degree_in(var);
  const Polynomial lb = b.coefficient_in(var, db);
  while (!a.is_zero()) {
    const int da = a.degree_in(var);
    if (da < db) break;
    Polynomial la = a.coefficient_in(var, da);
    a = lb * a - (la * b).shifted(var, da - db);
  }
  return a;
}

// Dense univariate gcd degree over Q; coefficients are low-to-high.
inline int univariate_gcd_degree(std::vector<Rational> a, std::vector<Rational> b) {
  auto trim = [](std::vector<Rational>& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
  };
  trim(a);
  trim(b);
  while (!b.empty()) {
    while (a.size() >= b.size()) {
      const Rational f = a.back() / b.back();
      const std::size_t shift = a.size() - b.size();
      for (std::size_t k = 0; k < b.size(); ++k) a[k + shift] -= f * b[k];
      trim(a);
      if (a.empty()) break;
    }
    std::swap(a, b);
  }
  return static_cast<int>(a.size()) - 1;
}

// True when a and b, both depending on `var`, certainly have no common factor
// of positive degree in `var`. A specialization of the other symbols that
// keeps both leading coefficients nonzero can only raise the gcd degree, so
// a trivial specialized gcd proves a trivial gcd in `var`.
inline bool coprime_in(const Polynomial& a, const Polynomial& b, std::size_t var) {
  const Polynomial la = a.coefficient_in(var, a.degree_in(var));
  const Polynomial lb = b.coefficient_in(var, b.degree_in(var));
  static constexpr int kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  std::vector<Rational> point(a.nvars());
  for (int attempt = 0; attempt < 4; ++attempt) {
    for (std::size_t k = 0; k < point.size(); ++k) {
      point[k] = Rational(kPrimes[(k + attempt * 5) % 12], attempt + 1);
    }
    if (la.evaluate(point) == 0 || lb.evaluate(point) == 0) continue;
    auto dense = [&](const Polynomial& p) {
      std::vector<Rational> out(p.degree_in(var) + 1);
      for (const auto& [d, c] : p.coefficients_in(var)) out[d] = c.evaluate(point);
      return out;
    };
    return univariate_gcd_degree(dense(a), dense(b)) == 0;
  }
  return false;
}

// Monic gcd over Q: contents recursively, then a subresultant polynomial
// remainder sequence in the highest symbol present.
inline Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  const std::size_t n = a.nvars();
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return Polynomial(n, Rational(1));
  if (a.size() == 1 && b.size() == 1) {
    Exponents e = a.leading_monomial();
    const Exponents& f = b.leading_monomial();
    for (std::size_t k = 0; k < n; ++k) e[k] = std::min(e[k], f[k]);
    return Polynomial::monomial(std::move(e), Rational(1));
  }
  auto var = highest_variable(a, b);
  const std::size_t v = *var;
  if (!a.depends_on(v)) return gcd(a, content_in(b, v));
  if (!b.depends_on(v)) return gcd(content_in(a, v), b);

  Polynomial ca = content_in(a, v);
  Polynomial cb = content_in(b, v);
  Polynomial c = gcd(ca, cb);
  if (coprime_in(a, b, v)) return c;

  Polynomial pa = divide_exact(a, ca)->primitive();
  Polynomial pb = divide_exact(b, cb)->primitive();
  if (pa.degree_in(v) < pb.degree_in(v)) std::swap(pa, pb);

  const Polynomial one(n, Rational(1));
  Polynomial g = one;
  Polynomial h = one;
  while (true) {
    const int delta = pa.degree_in(v) - pb.degree_in(v);
    Polynomial r = pseudo_remainder(pa, pb, v);
    if (r.is_zero()) break;
    if (r.degree_in(v) == 0) return c;
    pa = std::move(pb);
    pb = *divide_exact(r, g * h.pow(static_cast<unsigned>(delta)));
    g = pa.coefficient_in(v, pa.degree_in(v));
    if (delta == 0) continue;
    h = *divide_exact(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
  }
  return (c * *divide_exact(pb, content_in(pb, v))).monic();
}

}  // namespace poly
}  // namespace kenmotsu
