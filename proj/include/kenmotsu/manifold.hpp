#pragma once

// A chart with a global moving frame E_1..E_n.
//
// The frame is given either in coordinates (E_i = sum_a f_i^a d/dx^a) or
// only through its structure functions [E_i, E_j] = sum_k c^k_ij E_k. In the
// latter mode every coefficient must be free of coordinates, since there is
// no way to differentiate otherwise.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kenmotsu/expr.hpp"
#include "kenmotsu/parser.hpp"
#include "kenmotsu/tensor.hpp"

namespace kenmotsu {

class SpecError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ManifoldSpec {
 public:
  ManifoldSpec(std::string name, std::vector<std::string> coordinates, std::vector<std::string> parameters,
               std::optional<ExprMatrix> frame, std::optional<Tensor12> structure,
               std::optional<Tensor02> metric, std::string domain_note, SymbolTablePtr symbols)
      : name_(std::move(name)),
        coordinates_(std::move(coordinates)),
        parameters_(std::move(parameters)),
        symbols_(std::move(symbols)),
        frame_(std::move(frame)),
        domain_note_(std::move(domain_note)) {
    if (!frame_ && !structure) throw SpecError("either a frame or structure functions are required");
    dimension_ = frame_ ? frame_->size() : structure->dim();
    if (frame_ && frame_->size() != coordinates_.size()) {
      throw SpecError("frame has " + std::to_string(frame_->size()) + " fields but there are " +
                      std::to_string(coordinates_.size()) + " coordinates");
    }

    if (frame_) {
      frame_inverse_ = frame_->inverse();
      if (!frame_inverse_) throw SpecError("frame matrix is not invertible");
      structure_ = structure_from_frame();
      if (structure) {
        if (structure->dim() != dimension_) throw SpecError("structure functions have the wrong dimension");
        for (std::size_t flat = 0; flat < structure_.size(); ++flat) {
          const auto idx = structure_.unflatten(flat);
          if (!equals(structure_.at(idx), structure->at(idx))) {
            throw SpecError("declared structure function c^" + std::to_string(idx[2] + 1) + "_" +
                            std::to_string(idx[0] + 1) + std::to_string(idx[1] + 1) +
                            " disagrees with the frame");
          }
        }
      }
    } else {
      structure_ = *structure;
    }

    for (std::size_t i = 0; i < dimension_; ++i) {
      for (std::size_t j = 0; j < dimension_; ++j) {
        for (std::size_t k = 0; k < dimension_; ++k) {
          if (!equals(structure_(i, j, k), -structure_(j, i, k))) {
            throw SpecError("structure functions are not antisymmetric");
          }
        }
      }
    }

    if (metric) {
      if (metric->dim() != dimension_) throw SpecError("metric has the wrong dimension");
      metric_ = *metric;
    } else {
      metric_ = Tensor02(dimension_);
      for (std::size_t i = 0; i < dimension_; ++i) metric_(i, i) = 1;
    }
    ExprMatrix g(dimension_);
    for (std::size_t i = 0; i < dimension_; ++i) {
      for (std::size_t j = 0; j < dimension_; ++j) g(i, j) = metric_(i, j);
    }
    if (!g.is_symmetric()) throw SpecError("metric is not symmetric");
    auto inv = g.inverse();
    if (!inv) throw SpecError("metric is not invertible");
    inverse_metric_ = *inv;

    if (!frame_) {
      auto coordinate_free = [](const Expr& e) { return !e.depends_on_coordinates(); };
      for (const auto& e : structure_.components()) {
        if (!coordinate_free(e)) throw SpecError("structure functions depend on coordinates but no frame is given");
      }
      for (const auto& e : metric_.components()) {
        if (!coordinate_free(e)) throw SpecError("metric depends on coordinates but no frame is given");
      }
    }
  }

  const std::string& name() const { return name_; }
  std::size_t dimension() const { return dimension_; }
  const std::vector<std::string>& coordinates() const { return coordinates_; }
  const std::vector<std::string>& parameters() const { return parameters_; }
  const SymbolTablePtr& symbols() const { return symbols_; }
  const std::optional<ExprMatrix>& frame() const { return frame_; }
  const Tensor12& structure() const { return structure_; }
  const Tensor02& metric() const { return metric_; }
  const ExprMatrix& inverse_metric() const { return inverse_metric_; }
  const std::string& domain_note() const { return domain_note_; }

  Expr parse(const std::string& text) const { return kenmotsu::parse(text, symbols_); }
  Expr symbol(const std::string& name) const { return Expr::symbol(symbols_, name); }

  // E_i(f).
  Expr frame_derivative(std::size_t i, const Expr& f) const {
    if (!f.depends_on_coordinates()) return Expr();
    if (!frame_) throw SpecError("cannot differentiate a coordinate-dependent function without a frame");
    Expr out;
    for (std::size_t a = 0; a < dimension_; ++a) {
      const Expr& coeff = (*frame_)(i, a);
      if (coeff.is_zero()) continue;
      out += coeff * f.diff(coordinates_[a]);
    }
    return out;
  }

  // X(f) = sum_i X^i E_i(f).
  Expr directional_derivative(const FrameVec& x, const Expr& f) const {
    Expr out;
    for (std::size_t i = 0; i < dimension_; ++i) {
      if (x(i).is_zero()) continue;
      out += x(i) * frame_derivative(i, f);
    }
    return out;
  }

  // g(X, Y).
  Expr inner(const FrameVec& x, const FrameVec& y) const {
    Expr out;
    for (std::size_t i = 0; i < dimension_; ++i) {
      if (x(i).is_zero()) continue;
      for (std::size_t j = 0; j < dimension_; ++j) {
        if (y(j).is_zero() || metric_(i, j).is_zero()) continue;
        out += x(i) * metric_(i, j) * y(j);
      }
    }
    return out;
  }

  // [E_i, E_j]; computed in coordinates when a frame is available.
  FrameVec lie_bracket(std::size_t i, std::size_t j) const {
    if (!frame_) {
      FrameVec v(dimension_);
      for (std::size_t k = 0; k < dimension_; ++k) v(k) = structure_(i, j, k);
      return v;
    }
    return coordinate_bracket(i, j);
  }

  // [X, Y] for arbitrary frame-component fields.
  FrameVec lie_bracket(const FrameVec& x, const FrameVec& y) const {
    FrameVec out(dimension_);
    for (std::size_t k = 0; k < dimension_; ++k) {
      out(k) = directional_derivative(x, y(k)) - directional_derivative(y, x(k));
    }
    for (std::size_t i = 0; i < dimension_; ++i) {
      if (x(i).is_zero()) continue;
      for (std::size_t j = 0; j < dimension_; ++j) {
        if (y(j).is_zero()) continue;
        const Expr xy = x(i) * y(j);
        for (std::size_t k = 0; k < dimension_; ++k) out(k) += xy * structure_(i, j, k);
      }
    }
    return out;
  }

 private:
  // [E_i, E_j]^a = sum_b (f_i^b d_b f_j^a - f_j^b d_b f_i^a), then re-expressed
  // in the frame through the inverse frame matrix.
  FrameVec coordinate_bracket(std::size_t i, std::size_t j) const {
    const ExprMatrix& f = *frame_;
    std::vector<Expr> coord(dimension_);
    for (std::size_t a = 0; a < dimension_; ++a) {
      for (std::size_t b = 0; b < dimension_; ++b) {
        const std::string& xb = coordinates_[b];
        if (!f(i, b).is_zero()) coord[a] += f(i, b) * f(j, a).diff(xb);
        if (!f(j, b).is_zero()) coord[a] -= f(j, b) * f(i, a).diff(xb);
      }
    }
    // coord^a = sum_k c^k f_k^a  =>  c^k = sum_a coord^a (f^-1)_a^k.
    FrameVec v(dimension_);
    for (std::size_t k = 0; k < dimension_; ++k) {
      for (std::size_t a = 0; a < dimension_; ++a) {
        if (!coord[a].is_zero()) v(k) += coord[a] * (*frame_inverse_)(a, k);
      }
    }
    return v;
  }

  Tensor12 structure_from_frame() const {
    Tensor12 c(dimension_);
    for (std::size_t i = 0; i < dimension_; ++i) {
      for (std::size_t j = i + 1; j < dimension_; ++j) {
        const FrameVec b = coordinate_bracket(i, j);
        for (std::size_t k = 0; k < dimension_; ++k) {
          c(i, j, k) = b(k);
          c(j, i, k) = -b(k);
        }
      }
    }
    return c;
  }

  std::string name_;
  std::vector<std::string> coordinates_;
  std::vector<std::string> parameters_;
  SymbolTablePtr symbols_;
  std::size_t dimension_ = 0;
  std::optional<ExprMatrix> frame_;
  std::optional<ExprMatrix> frame_inverse_;
  Tensor12 structure_;
  Tensor02 metric_;
  ExprMatrix inverse_metric_;
  std::string domain_note_;
};

// Cyclic sum [E_i,[E_j,E_k]] + [E_j,[E_k,E_i]] + [E_k,[E_i,E_j]]; the Jacobi
// identity says it vanishes for every triple.
inline Tensor13 jacobi_defect(const ManifoldSpec& m) {
  const std::size_t n = m.dimension();
  auto e = [n](std::size_t i) { return basis_vector(n, i); };
  Tensor13 out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const FrameVec s = m.lie_bracket(e(i), m.lie_bracket(e(j), e(k))) +
                           m.lie_bracket(e(j), m.lie_bracket(e(k), e(i))) +
                           m.lie_bracket(e(k), m.lie_bracket(e(i), e(j)));
        for (std::size_t l = 0; l < n; ++l) out(i, j, k, l) = s(l);
      }
    }
  }
  return out;
}

}  // namespace kenmotsu
