#pragma once

// Exact rational functions over Q in named coordinates and parameters.
//
// An Expr is num/den with both polynomials over the same SymbolTable. The
// canonical form has gcd(num, den) = 1 and a primitive integer denominator
// with positive leading coefficient, so structurally equal canonical Exprs
// are mathematically equal. Zero is 0/1.

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kenmotsu/polynomial.hpp"

namespace kenmotsu {

class SymbolicError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Declared symbols. Coordinates come first and are the only symbols that
// differentiation sees; parameters are constants under differentiation.
class SymbolTable {
 public:
  SymbolTable(std::vector<std::string> coordinates, std::vector<std::string> parameters)
      : num_coordinates_(coordinates.size()) {
    names_ = std::move(coordinates);
    names_.insert(names_.end(), parameters.begin(), parameters.end());
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (!index_.emplace(names_[i], i).second) {
        throw SymbolicError("duplicate symbol '" + names_[i] + "'");
      }
    }
  }

  std::size_t size() const { return names_.size(); }
  std::size_t num_coordinates() const { return num_coordinates_; }
  const std::string& name(std::size_t i) const { return names_.at(i); }
  const std::vector<std::string>& names() const { return names_; }
  bool is_coordinate(std::size_t i) const { return i < num_coordinates_; }

  std::optional<std::size_t> find(const std::string& name) const {
    auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }

  friend bool operator==(const SymbolTable& a, const SymbolTable& b) {
    return a.num_coordinates_ == b.num_coordinates_ && a.names_ == b.names_;
  }

 private:
  std::vector<std::string> names_;
  std::size_t num_coordinates_ = 0;
  std::map<std::string, std::size_t> index_;
};

using SymbolTablePtr = std::shared_ptr<const SymbolTable>;

inline SymbolTablePtr make_symbols(std::vector<std::string> coordinates,
                                   std::vector<std::string> parameters) {
  return std::make_shared<const SymbolTable>(std::move(coordinates), std::move(parameters));
}

class Expr {
 public:
  Expr() : num_(0), den_(0, Rational(1)) {}
  Expr(int v) : Expr(Rational(v)) {}  // NOLINT(google-explicit-constructor)
  Expr(const Rational& v) : num_(0, v), den_(0, Rational(1)) {}  // NOLINT

  Expr(SymbolTablePtr table, Polynomial num, Polynomial den)
      : table_(std::move(table)), num_(std::move(num)), den_(std::move(den)) {
    normalize();
  }

  static Expr symbol(const SymbolTablePtr& table, const std::string& name) {
    auto idx = table->find(name);
    if (!idx) throw SymbolicError("unknown identifier '" + name + "'");
    const std::size_t n = table->size();
    return Expr(table, Polynomial::variable(n, *idx), Polynomial(n, Rational(1)));
  }

  const SymbolTablePtr& table() const { return table_; }
  const Polynomial& numerator() const { return num_; }
  const Polynomial& denominator() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }

  std::optional<Rational> constant_value() const {
    if (!is_constant()) return std::nullopt;
    return num_.constant_term() / den_.constant_term();
  }

  bool depends_on(const std::string& name) const {
    if (!table_) return false;
    auto idx = table_->find(name);
    return idx && (num_.depends_on(*idx) || den_.depends_on(*idx));
  }

  bool depends_on_coordinates() const {
    if (!table_) return false;
    for (std::size_t i = 0; i < table_->num_coordinates(); ++i) {
      if (num_.depends_on(i) || den_.depends_on(i)) return true;
    }
    return false;
  }

  Expr operator-() const { return Expr(table_, -num_, den_, Canonical{}); }

  // Sums and products cancel through gcds of the (already reduced) operand
  // parts, which keeps the gcd inputs small.
  friend Expr operator+(const Expr& a, const Expr& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    auto [t, an, ad, bn, bd] = unify(a, b);
    if (ad.is_constant() && bd.is_constant()) {
      return Expr(t, an * bd + bn * ad, ad * bd, Canonical{}).rescaled();
    }
    const Polynomial g = poly::gcd(ad, bd);
    const Polynomial ad_g = *poly::divide_exact(ad, g);
    const Polynomial bd_g = *poly::divide_exact(bd, g);
    Polynomial num = an * bd_g + bn * ad_g;
    Polynomial den = ad_g * bd;
    if (num.is_zero()) return Expr(t, num, Polynomial(num.nvars(), Rational(1)), Canonical{});
    if (!g.is_constant()) {
      const Polynomial h = poly::gcd(num, g);
      if (!h.is_constant()) {
        num = *poly::divide_exact(num, h);
        den = *poly::divide_exact(den, h);
      }
    }
    return Expr(t, std::move(num), std::move(den), Canonical{}).rescaled();
  }

  friend Expr operator-(const Expr& a, const Expr& b) { return a + (-b); }

  friend Expr operator*(const Expr& a, const Expr& b) {
    if (a.is_zero() || b.is_zero()) return Expr();
    auto [t, an, ad, bn, bd] = unify(a, b);
    return cross_multiply(t, an, ad, bn, bd);
  }

  friend Expr operator/(const Expr& a, const Expr& b) {
    if (b.is_zero()) throw SymbolicError("division by zero");
    auto [t, an, ad, bn, bd] = unify(a, b);
    return cross_multiply(t, an, ad, bd, bn);
  }

  Expr& operator+=(const Expr& o) { return *this = *this + o; }
  Expr& operator-=(const Expr& o) { return *this = *this - o; }
  Expr& operator*=(const Expr& o) { return *this = *this * o; }
  Expr& operator/=(const Expr& o) { return *this = *this / o; }

  Expr pow(int k) const {
    if (k < 0) {
      if (is_zero()) throw SymbolicError("division by zero");
      return Expr(table_, den_.pow(static_cast<unsigned>(-k)), num_.pow(static_cast<unsigned>(-k)));
    }
    return Expr(table_, num_.pow(static_cast<unsigned>(k)), den_.pow(static_cast<unsigned>(k)),
                Canonical{});
  }

  friend bool operator==(const Expr& a, const Expr& b) { return equals(a, b); }

  // a == b as rational functions, decided by a.num*b.den - b.num*a.den == 0.
  friend bool equals(const Expr& a, const Expr& b) {
    auto [t, an, ad, bn, bd] = unify(a, b);
    return (an * bd - bn * ad).is_zero();
  }

  // Partial derivative with respect to a declared coordinate.
  Expr diff(const std::string& coordinate) const {
    if (!table_) return Expr();
    auto idx = table_->find(coordinate);
    if (!idx || !table_->is_coordinate(*idx)) {
      throw SymbolicError("'" + coordinate + "' is not a declared coordinate");
    }
    return diff(*idx);
  }

  Expr diff(std::size_t var) const {
    if (!table_ || (num_.is_constant() && den_.is_constant())) return Expr();
    Polynomial dn = num_.derivative(var);
    Polynomial dd = den_.derivative(var);
    if (dd.is_zero()) return Expr(table_, dn, den_);
    return Expr(table_, dn * den_ - num_ * dd, den_ * den_);
  }

  // Simultaneous substitution of symbols by Exprs.
  Expr substitute(const std::map<std::string, Expr>& bindings) const {
    if (!table_ || bindings.empty()) return *this;
    std::vector<std::optional<Expr>> image(table_->size());
    for (const auto& [name, value] : bindings) {
      auto idx = table_->find(name);
      if (!idx) throw SymbolicError("unknown identifier '" + name + "'");
      image[*idx] = value;
    }
    Expr n = substitute_polynomial(num_, image);
    Expr d = substitute_polynomial(den_, image);
    if (d.is_zero()) throw SymbolicError("substitution makes a denominator vanish");
    return n / d;
  }

  // Numeric evaluation; `point` maps symbol names to values. Symbols the
  // expression depends on must all be bound.
  Rational evaluate(const std::map<std::string, Rational>& point) const {
    std::vector<Rational> values;
    if (table_) {
      values.reserve(table_->size());
      for (const auto& name : table_->names()) {
        auto it = point.find(name);
        if (it != point.end()) {
          values.push_back(it->second);
        } else if (depends_on(name)) {
          throw SymbolicError("no value for '" + name + "'");
        } else {
          values.emplace_back(0);
        }
      }
    }
    Rational d = den_.evaluate(values);
    if (d == 0) throw SymbolicError("evaluation at a pole");
    return num_.evaluate(values) / d;
  }

  Expr with_table(const SymbolTablePtr& table) const {
    if (table_ == table) return *this;
    if (table_ && !(*table_ == *table)) throw SymbolicError("expressions use different symbol tables");
    if (table_) return Expr(table, num_, den_, Canonical{});
    return Expr(table, num_.widened(table->size()), den_.widened(table->size()), Canonical{});
  }

 private:
  struct Canonical {};
  Expr(SymbolTablePtr table, Polynomial num, Polynomial den, Canonical)
      : table_(std::move(table)), num_(std::move(num)), den_(std::move(den)) {
    if (num_.is_zero()) den_ = Polynomial(num_.nvars(), Rational(1));
  }

  // (an/ad) * (bn/bd) with both operands reduced.
  static Expr cross_multiply(const SymbolTablePtr& t, Polynomial an, Polynomial ad, Polynomial bn,
                             Polynomial bd) {
    auto cancel = [](Polynomial& x, Polynomial& y) {
      if (x.is_constant() || y.is_constant()) return;
      const Polynomial g = poly::gcd(x, y);
      if (g.is_constant()) return;
      x = *poly::divide_exact(x, g);
      y = *poly::divide_exact(y, g);
    };
    cancel(an, bd);
    cancel(bn, ad);
    return Expr(t, an * bn, ad * bd, Canonical{}).rescaled();
  }

  Expr rescaled() && {
    const Rational s = den_.primitive_scale();
    if (s != 1) {
      num_ *= s;
      den_ *= s;
    }
    return std::move(*this);
  }

  struct Unified {
    SymbolTablePtr table;
    Polynomial an, ad, bn, bd;
  };

  static Unified unify(const Expr& a, const Expr& b) {
    if (a.table_ == b.table_) return {a.table_, a.num_, a.den_, b.num_, b.den_};
    if (!a.table_) {
      const Expr w = a.with_table(b.table_);
      return {b.table_, w.num_, w.den_, b.num_, b.den_};
    }
    const Expr w = b.with_table(a.table_);
    return {a.table_, a.num_, a.den_, w.num_, w.den_};
  }

  Expr substitute_polynomial(const Polynomial& p, const std::vector<std::optional<Expr>>& image) const {
    Expr sum;
    for (const auto& [e, c] : p.terms()) {
      Exponents kept = e;
      Expr factor(c);
      for (std::size_t k = 0; k < e.size(); ++k) {
        if (e[k] != 0 && image[k]) {
          factor *= image[k]->pow(e[k]);
          kept[k] = 0;
        }
      }
      Polynomial rest = Polynomial::monomial(std::move(kept), Rational(1));
      sum += factor * Expr(table_, rest, Polynomial(table_->size(), Rational(1)), Canonical{});
    }
    return sum;
  }

  void normalize() {
    if (num_.nvars() != den_.nvars()) throw std::logic_error("numerator/denominator mismatch");
    if (den_.is_zero()) throw SymbolicError("zero denominator");
    if (num_.is_zero()) {
      den_ = Polynomial(num_.nvars(), Rational(1));
      return;
    }
    if (!den_.is_constant()) {
      Polynomial g = poly::gcd(num_, den_);
      if (!g.is_constant()) {
        num_ = *poly::divide_exact(num_, g);
        den_ = *poly::divide_exact(den_, g);
      }
    }
    const Rational s = den_.primitive_scale();
    if (s != 1) {
      num_ *= s;
      den_ *= s;
    }
  }

  SymbolTablePtr table_;
  Polynomial num_;
  Polynomial den_;
};

}  // namespace kenmotsu
