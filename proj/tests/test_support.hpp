#pragma once

// Random generators for property-style tests.

#include <random>
#include <string>
#include <vector>

#include "kenmotsu/expr.hpp"
#include "kenmotsu/printer.hpp"
#include "kenmotsu/tensor.hpp"

namespace kenmotsu::testing {

class ExprGenerator {
 public:
  ExprGenerator(SymbolTablePtr table, unsigned seed) : table_(std::move(table)), rng_(seed) {}

  int small_int(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  Rational rational() {
    Rational q(small_int(-9, 9), small_int(1, 5));
    q.canonicalize();
    return q;
  }

  Polynomial polynomial(int max_terms = 3, int max_degree = 2) {
    const std::size_t n = table_->size();
    Polynomial p(n);
    const int terms = small_int(1, max_terms);
    for (int t = 0; t < terms; ++t) {
      Exponents e(n, 0);
      for (std::size_t k = 0; k < n; ++k) e[k] = small_int(0, max_degree) == 0 ? small_int(0, 1) : 0;
      p += Polynomial::monomial(e, rational());
    }
    return p;
  }

  Polynomial nonzero_polynomial() {
    Polynomial p = polynomial();
    while (p.is_zero()) p = polynomial();
    return p;
  }

  Expr expr() { return Expr(table_, polynomial(), nonzero_polynomial()); }

  Expr nonzero_expr() {
    Expr e = expr();
    while (e.is_zero()) e = expr();
    return e;
  }

  std::mt19937& engine() { return rng_; }

 private:
  SymbolTablePtr table_;
  std::mt19937 rng_;
};

}  // namespace kenmotsu::testing

namespace kenmotsu {

// Readable gtest output for tensors: nonzero components only, 1-based.
template <int Up, int Down>
void PrintTo(const Tensor<Up, Down>& t, std::ostream* os) {
  *os << '{';
  bool first = true;
  t.for_each([&](const auto& idx, const Expr& v) {
    if (v.is_zero()) return;
    if (!first) *os << ", ";
    first = false;
    *os << '(';
    for (std::size_t k = 0; k < idx.size(); ++k) *os << (k ? "," : "") << idx[k] + 1;
    *os << ")=" << v;
  });
  *os << '}';
}

}  // namespace kenmotsu
