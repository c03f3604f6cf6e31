#pragma once

// Infix printing of Exprs.
//
// Expanded form lists terms by ascending total degree (ties broken by the
// declared symbol order), with no spaces: "1+2*alpha+alpha^2". Rational
// coefficients print as p/q.
//
// Factored form pulls out the rational unit, powers of single symbols, and
// every factor that is linear in one symbol with a rational root, e.g.
// "-2*(1+alpha)*(3+alpha)" or "-(1+alpha)*beta". Whatever does not split
// that way prints expanded inside parentheses. Quotients print as
// "num/den" with parentheses where needed. Both forms parse back to the
// same Expr.

#include <algorithm>
#include <cstdlib>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "kenmotsu/expr.hpp"

namespace kenmotsu {

struct Factorization {
  Rational unit = 1;
  // (factor, multiplicity); factors are primitive integer polynomials with
  // positive leading coefficient.
  std::vector<std::pair<Polynomial, int>> factors;
};

namespace detail {

inline std::string rational_string(const Rational& q) { return q.get_str(); }

inline std::string monomial_string(const Exponents& e, const SymbolTablePtr& table) {
  std::string out;
  for (std::size_t k = 0; k < e.size(); ++k) {
    if (e[k] == 0) continue;
    if (!out.empty()) out += '*';
    out += table->name(k);
    if (e[k] != 1) out += '^' + std::to_string(e[k]);
  }
  return out;
}

inline int degree_sum(const Exponents& e) {
  int s = 0;
  for (int k : e) s += k;
  return s;
}

inline std::string expanded_string(const Polynomial& p, const SymbolTablePtr& table) {
  if (p.is_zero()) return "0";
  std::vector<std::pair<Exponents, Rational>> terms(p.terms().begin(), p.terms().end());
  std::stable_sort(terms.begin(), terms.end(), [](const auto& a, const auto& b) {
    return degree_sum(a.first) < degree_sum(b.first);
  });
  std::string out;
  for (const auto& [e, c] : terms) {
    const bool constant = degree_sum(e) == 0;
    Rational mag = abs(c);
    if (c < 0) {
      out += '-';
    } else if (!out.empty()) {
      out += '+';
    }
    if (constant) {
      out += rational_string(mag);
    } else {
      if (mag != 1) out += rational_string(mag) + '*';
      out += monomial_string(e, table);
    }
  }
  return out;
}

inline std::vector<Integer> divisors(Integer n) {
  n = abs(n);
  std::vector<Integer> out;
  if (n == 0 || n > 1000000) return out;
  for (Integer d = 1; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      if (d * d != n) out.push_back(n / d);
    }
  }
  return out;
}

// Rational roots r such that p(var = r) vanishes identically.
inline std::vector<Rational> rational_roots_in(const Polynomial& p, std::size_t var) {
  const int deg = p.degree_in(var);
  const Polynomial lead = p.coefficient_in(var, deg);
  const Polynomial trail = p.coefficient_in(var, 0);
  std::vector<Rational> roots;
  if (trail.is_zero()) return roots;

  // Specialize the other symbols to a point where the outer coefficients
  // stay nonzero; every true root is a root of the specialization.
  std::vector<Rational> point(p.nvars(), Rational(0));
  bool found = false;
  for (int attempt = 0; attempt < 8 && !found; ++attempt) {
    for (std::size_t k = 0; k < point.size(); ++k) point[k] = attempt == 0 ? 0 : attempt + static_cast<int>(k);
    found = lead.evaluate(point) != 0 && trail.evaluate(point) != 0;
  }
  if (!found) return roots;

  std::vector<Rational> coeffs(deg + 1);
  for (const auto& [d, c] : p.coefficients_in(var)) coeffs[d] = c.evaluate(point);
  Integer l = 1;
  for (const auto& c : coeffs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Integer a0 = coeffs.front().get_num() * (l / coeffs.front().get_den());
  Integer an = coeffs.back().get_num() * (l / coeffs.back().get_den());

  std::vector<Rational> candidates;
  for (const Integer& s : divisors(a0)) {
    for (const Integer& t : divisors(an)) {
      Rational r(s, t);
      r.canonicalize();
      candidates.push_back(r);
      candidates.push_back(-r);
    }
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  for (const Rational& r : candidates) {
    if (p.evaluated(var, r).is_zero()) roots.push_back(r);
  }
  return roots;
}

}  // namespace detail

inline Factorization factor(const Polynomial& p) {
  Factorization f;
  if (p.is_zero()) {
    f.unit = 0;
    return f;
  }
  const Rational scale = p.primitive_scale();
  f.unit = 1 / scale;
  Polynomial q = p * scale;
  const std::size_t n = q.nvars();
  if (q.is_constant()) return f;

  Exponents low(n, 0);
  for (std::size_t k = 0; k < n; ++k) {
    int m = q.degree_in(k);
    for (const auto& [e, c] : q.terms()) m = std::min(m, e[k]);
    low[k] = std::max(m, 0);
  }
  std::vector<std::pair<Polynomial, int>> symbol_factors;
  if (detail::degree_sum(low) > 0) {
    q = *poly::divide_exact(q, Polynomial::monomial(low, Rational(1)));
    for (std::size_t k = 0; k < n; ++k) {
      if (low[k] == 0) continue;
      symbol_factors.emplace_back(Polynomial::variable(n, k), low[k]);
    }
  }

  std::vector<std::pair<Polynomial, int>> linear;
  for (std::size_t v = 0; v < n; ++v) {
    if (!q.depends_on(v)) continue;
    auto roots = detail::rational_roots_in(q, v);
    std::sort(roots.rbegin(), roots.rend());
    for (const Rational& r : roots) {
      Polynomial lin = Polynomial::variable(n, v) * Rational(r.get_den()) -
                       Polynomial(n, Rational(r.get_num()));
      lin = lin.primitive();
      int mult = 0;
      while (q.depends_on(v)) {
        auto quotient = poly::divide_exact(q, lin);
        if (!quotient) break;
        q = std::move(*quotient);
        ++mult;
      }
      if (mult > 0) linear.emplace_back(std::move(lin), mult);
    }
  }
  // q stays primitive with positive leading coefficient after dividing by
  // such factors, up to a unit that we fold back in.
  const Rational rest = q.primitive_scale();
  q *= rest;
  f.unit /= rest;

  for (auto& l : linear) f.factors.push_back(std::move(l));
  if (!q.is_constant()) f.factors.emplace_back(std::move(q), 1);
  for (auto& s : symbol_factors) f.factors.push_back(std::move(s));
  return f;
}

namespace detail {

struct Rendered {
  std::string text;
  bool is_sum = false;     // bare multi-term polynomial at top level
  bool is_number = false;  // plain rational constant
};

inline Rendered render_factored(const Polynomial& p, const SymbolTablePtr& table) {
  if (p.is_zero()) return {"0", false, true};
  if (p.is_constant()) return {rational_string(p.constant_term()), false, true};
  const Factorization f = factor(p);
  std::string body;
  bool single_sum = false;
  for (const auto& [fac, mult] : f.factors) {
    if (!body.empty()) body += '*';
    if (fac.size() == 1) {
      body += monomial_string(fac.leading_monomial(), table);
      if (mult != 1) body += '^' + std::to_string(mult);
    } else if (f.factors.size() == 1 && mult == 1 && f.unit == 1) {
      body += expanded_string(fac, table);
      single_sum = true;
    } else {
      body += '(' + expanded_string(fac, table) + ')';
      if (mult != 1) body += '^' + std::to_string(mult);
    }
  }
  if (f.unit == 1) return {body, single_sum, false};
  if (f.unit == -1) return {'-' + body, false, false};
  return {rational_string(f.unit) + '*' + body, false, false};
}

}  // namespace detail

inline std::string to_string(const Expr& e) {
  if (!e.table()) return detail::rational_string(*e.constant_value());
  const auto num = detail::render_factored(e.numerator(), e.table());
  if (e.denominator().is_constant()) return num.text;
  auto den = detail::render_factored(e.denominator(), e.table());
  const Factorization df = factor(e.denominator());
  const bool bare_den = df.unit == 1 && df.factors.size() == 1 && df.factors.front().first.size() == 1;
  std::string n = num.is_sum ? '(' + num.text + ')' : num.text;
  std::string d = bare_den ? den.text : '(' + den.text + ')';
  return n + '/' + d;
}

inline std::string to_expanded_string(const Expr& e) {
  if (!e.table()) return detail::rational_string(*e.constant_value());
  std::string n = detail::expanded_string(e.numerator(), e.table());
  if (e.denominator().is_constant()) return n;
  const bool n_sum = e.numerator().size() > 1;
  const auto& dp = e.denominator();
  const bool d_atom = dp.size() == 1 && dp.leading_coefficient() == 1 &&
                      std::count_if(dp.leading_monomial().begin(), dp.leading_monomial().end(),
                                    [](int k) { return k != 0; }) == 1;
  std::string d = detail::expanded_string(e.denominator(), e.table());
  return (n_sum ? '(' + n + ')' : n) + '/' + (d_atom ? d : '(' + d + ')');
}

inline std::ostream& operator<<(std::ostream& os, const Expr& e) { return os << to_string(e); }

}  // namespace kenmotsu
