#pragma once

// Frame components of (Up, Down) tensor fields.
//
// Components are addressed argument-first: the Down covariant slots come
// first, then the Up contravariant slots. So for a (1,3) tensor R,
// R(i, j, k, l) is the E_l component of R(E_i, E_j)E_k, and for a (1,1)
// tensor phi, phi(j, k) is the E_k component of phi(E_j). Indices are
// 0-based here; reports add one.

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "kenmotsu/expr.hpp"

namespace kenmotsu {

template <int Up, int Down>
class Tensor {
 public:
  static constexpr std::size_t rank = static_cast<std::size_t>(Up + Down);
  using Index = std::array<std::size_t, rank>;

  Tensor() = default;
  explicit Tensor(std::size_t dim) : dim_(dim), data_(count(dim)) {}

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return data_.size(); }

  template <typename... I>
  Expr& operator()(I... i) {
    static_assert(sizeof...(I) == rank, "wrong number of indices");
    return data_[offset(Index{static_cast<std::size_t>(i)...})];
  }

  template <typename... I>
  const Expr& operator()(I... i) const {
    static_assert(sizeof...(I) == rank, "wrong number of indices");
    return data_[offset(Index{static_cast<std::size_t>(i)...})];
  }

  Expr& at(const Index& idx) { return data_[offset(idx)]; }
  const Expr& at(const Index& idx) const { return data_[offset(idx)]; }

  const std::vector<Expr>& components() const { return data_; }

  Index unflatten(std::size_t flat) const {
    Index idx{};
    for (std::size_t k = rank; k-- > 0;) {
      idx[k] = flat % dim_;
      flat /= dim_;
    }
    return idx;
  }

  // Visits every index tuple in lexicographic order.
  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t flat = 0; flat < data_.size(); ++flat) f(unflatten(flat), data_[flat]);
  }

  template <typename F>
  static Tensor generate(std::size_t dim, F&& f) {
    Tensor t(dim);
    for (std::size_t flat = 0; flat < t.data_.size(); ++flat) t.data_[flat] = f(t.unflatten(flat));
    return t;
  }

  bool is_zero() const {
    for (const auto& e : data_) {
      if (!e.is_zero()) return false;
    }
    return true;
  }

  // First nonzero component in lexicographic index order.
  std::optional<std::pair<Index, Expr>> first_nonzero() const {
    for (std::size_t flat = 0; flat < data_.size(); ++flat) {
      if (!data_[flat].is_zero()) return std::make_pair(unflatten(flat), data_[flat]);
    }
    return std::nullopt;
  }

  template <typename F>
  Tensor map(F&& f) const {
    Tensor t(dim_);
    for (std::size_t k = 0; k < data_.size(); ++k) t.data_[k] = f(data_[k]);
    return t;
  }

  Tensor substitute(const std::map<std::string, Expr>& bindings) const {
    return map([&](const Expr& e) { return e.substitute(bindings); });
  }

  Tensor& operator+=(const Tensor& o) {
    check(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
    return *this;
  }

  Tensor& operator-=(const Tensor& o) {
    check(o);
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
    return *this;
  }

  Tensor& operator*=(const Expr& s) {
    for (auto& e : data_) e *= s;
    return *this;
  }

  friend Tensor operator+(Tensor a, const Tensor& b) { return a += b; }
  friend Tensor operator-(Tensor a, const Tensor& b) { return a -= b; }
  friend Tensor operator*(Tensor a, const Expr& s) { return a *= s; }
  friend Tensor operator*(const Expr& s, Tensor a) { return a *= s; }
  Tensor operator-() const {
    return map([](const Expr& e) { return -e; });
  }

  friend bool operator==(const Tensor& a, const Tensor& b) {
    if (a.dim_ != b.dim_) return false;
    for (std::size_t k = 0; k < a.data_.size(); ++k) {
      if (!equals(a.data_[k], b.data_[k])) return false;
    }
    return true;
  }

 private:
  static std::size_t count(std::size_t dim) {
    std::size_t c = 1;
    for (std::size_t k = 0; k < rank; ++k) c *= dim;
    return c;
  }

  std::size_t offset(const Index& idx) const {
    std::size_t flat = 0;
    for (std::size_t k = 0; k < rank; ++k) {
      if (idx[k] >= dim_) throw std::out_of_range("tensor index out of range");
      flat = flat * dim_ + idx[k];
    }
    return flat;
  }

  void check(const Tensor& o) const {
    if (o.dim_ != dim_) throw std::invalid_argument("tensor dimension mismatch");
  }

  std::size_t dim_ = 0;
  std::vector<Expr> data_;
};

using FrameVec = Tensor<1, 0>;
using CoVec = Tensor<0, 1>;
using Tensor11 = Tensor<1, 1>;
using Tensor12 = Tensor<1, 2>;
using Tensor13 = Tensor<1, 3>;
using Tensor02 = Tensor<0, 2>;
using Tensor03 = Tensor<0, 3>;
using Tensor04 = Tensor<0, 4>;

inline FrameVec basis_vector(std::size_t dim, std::size_t i) {
  FrameVec v(dim);
  v(i) = 1;
  return v;
}

// Square matrices of Exprs, used for frame matrices and inverse metrics.
class ExprMatrix {
 public:
  ExprMatrix() = default;
  explicit ExprMatrix(std::size_t n) : n_(n), a_(n * n) {}

  static ExprMatrix identity(std::size_t n) {
    ExprMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t size() const { return n_; }
  Expr& operator()(std::size_t r, std::size_t c) { return a_.at(r * n_ + c); }
  const Expr& operator()(std::size_t r, std::size_t c) const { return a_.at(r * n_ + c); }

  bool is_symmetric() const {
    for (std::size_t r = 0; r < n_; ++r) {
      for (std::size_t c = r + 1; c < n_; ++c) {
        if (!equals((*this)(r, c), (*this)(c, r))) return false;
      }
    }
    return true;
  }

  // Gauss-Jordan elimination over the field of rational functions.
  std::optional<ExprMatrix> inverse() const {
    ExprMatrix a = *this;
    ExprMatrix inv = identity(n_);
    for (std::size_t col = 0; col < n_; ++col) {
      std::size_t pivot = col;
      while (pivot < n_ && a(pivot, col).is_zero()) ++pivot;
      if (pivot == n_) return std::nullopt;
      if (pivot != col) {
        for (std::size_t c = 0; c < n_; ++c) {
          std::swap(a(pivot, c), a(col, c));
          std::swap(inv(pivot, c), inv(col, c));
        }
      }
      const Expr p = a(col, col);
      for (std::size_t c = 0; c < n_; ++c) {
        a(col, c) /= p;
        inv(col, c) /= p;
      }
      for (std::size_t r = 0; r < n_; ++r) {
        if (r == col || a(r, col).is_zero()) continue;
        const Expr f = a(r, col);
        for (std::size_t c = 0; c < n_; ++c) {
          a(r, c) -= f * a(col, c);
          inv(r, c) -= f * inv(col, c);
        }
      }
    }
    return inv;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Expr> a_;
};

}  // namespace kenmotsu
