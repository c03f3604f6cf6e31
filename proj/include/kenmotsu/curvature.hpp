#pragma once

// Curvature of a frame connection.
//
// R(i, j, k, l) is the E_l component of R(E_i, E_j)E_k, with
//   R(X, Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_[X,Y] Z.
// Ricci contracts the first slot: S(Y, Z) = sum_i g(R(e_i, Y)Z, e_i) for an
// orthonormal frame, i.e. S_jk = sum_a R^a_ajk in any frame.

#include <cstddef>

#include "kenmotsu/connection.hpp"
#include "kenmotsu/manifold.hpp"
#include "kenmotsu/tensor.hpp"

namespace kenmotsu {

inline Tensor13 riemann(const ConnectionTable& conn, const ManifoldSpec& m) {
  const std::size_t n = m.dimension();
  const Tensor12& G = conn.gamma;
  const Tensor12& c = m.structure();
  Tensor13 out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t l = 0; l < n; ++l) {
          Expr s = m.frame_derivative(i, G(j, k, l)) - m.frame_derivative(j, G(i, k, l));
          for (std::size_t a = 0; a < n; ++a) {
            if (!G(j, k, a).is_zero()) s += G(j, k, a) * G(i, a, l);
            if (!G(i, k, a).is_zero()) s -= G(i, k, a) * G(j, a, l);
            if (!c(i, j, a).is_zero()) s -= c(i, j, a) * G(a, k, l);
          }
          out(j, i, k, l) = -s;
          out(i, j, k, l) = std::move(s);
        }
      }
    }
  }
  return out;
}

// R(X, Y)Z for arbitrary frame components.
inline FrameVec apply(const Tensor13& r, const FrameVec& x, const FrameVec& y, const FrameVec& z) {
  const std::size_t n = r.dim();
  FrameVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x(i).is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (y(j).is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        if (z(k).is_zero()) continue;
        const Expr w = x(i) * y(j) * z(k);
        for (std::size_t l = 0; l < n; ++l) {
          if (!r(i, j, k, l).is_zero()) out(l) += w * r(i, j, k, l);
        }
      }
    }
  }
  return out;
}

// S(X, Y) for arbitrary frame components.
inline Expr apply(const Tensor02& s, const FrameVec& x, const FrameVec& y) {
  Expr out;
  for (std::size_t i = 0; i < x.dim(); ++i) {
    if (x(i).is_zero()) continue;
    for (std::size_t j = 0; j < y.dim(); ++j) {
      if (!y(j).is_zero() && !s(i, j).is_zero()) out += x(i) * s(i, j) * y(j);
    }
  }
  return out;
}

inline Tensor02 ricci(const Tensor13& r) {
  const std::size_t n = r.dim();
  return Tensor02::generate(n, [&](const auto& idx) {
    Expr s;
    for (std::size_t a = 0; a < n; ++a) s += r(a, idx[0], idx[1], a);
    return s;
  });
}

inline Expr scalar(const Tensor02& s, const ManifoldSpec& m) {
  const std::size_t n = m.dimension();
  Expr out;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      if (!m.inverse_metric()(j, k).is_zero()) out += m.inverse_metric()(j, k) * s(j, k);
    }
  }
  return out;
}

// K(i, j, k, l) = g(R(E_i, E_j)E_k, E_l).
inline Tensor04 lowered(const Tensor13& r, const ManifoldSpec& m) {
  const std::size_t n = r.dim();
  return Tensor04::generate(n, [&](const auto& idx) {
    Expr s;
    for (std::size_t a = 0; a < n; ++a) s += r(idx[0], idx[1], idx[2], a) * m.metric()(a, idx[3]);
    return s;
  });
}

// R(X, Y)Z + R(Y, Z)X + R(Z, X)Y on frame triples.
inline Tensor13 bianchi_defect(const Tensor13& r) {
  return Tensor13::generate(r.dim(), [&](const auto& idx) {
    const std::size_t i = idx[0], j = idx[1], k = idx[2], l = idx[3];
    return r(i, j, k, l) + r(j, k, i, l) + r(k, i, j, l);
  });
}

// S(R(X, Y)Z, U) + S(Z, R(X, Y)U); vanishes iff R.S = 0.
inline Tensor04 curvature_acts_on_ricci(const Tensor13& r, const Tensor02& s) {
  const std::size_t n = r.dim();
  return Tensor04::generate(n, [&](const auto& idx) {
    const std::size_t i = idx[0], j = idx[1], k = idx[2], l = idx[3];
    Expr out;
    for (std::size_t a = 0; a < n; ++a) {
      if (!r(i, j, k, a).is_zero()) out += r(i, j, k, a) * s(a, l);
      if (!r(i, j, l, a).is_zero()) out += s(k, a) * r(i, j, l, a);
    }
    return out;
  });
}

}  // namespace kenmotsu
