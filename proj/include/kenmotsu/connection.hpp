#pragma once

// Linear connections in frame components: gamma(i, j, k) = Gamma^k_ij, so
// nabla_{E_i} E_j = sum_k Gamma^k_ij E_k.

#include <cstddef>
#include <map>
#include <string>
#include <utility>

#include "kenmotsu/contact.hpp"
#include "kenmotsu/manifold.hpp"
#include "kenmotsu/tensor.hpp"

namespace kenmotsu {

struct ConnectionTable {
  Tensor12 gamma;
  std::string label;

  std::size_t dim() const { return gamma.dim(); }

  // nabla_{E_i} E_j.
  FrameVec along(std::size_t i, std::size_t j) const {
    FrameVec v(dim());
    for (std::size_t k = 0; k < dim(); ++k) v(k) = gamma(i, j, k);
    return v;
  }

  ConnectionTable substitute(const std::map<std::string, Expr>& bindings) const {
    return {gamma.substitute(bindings), label};
  }
};

// Koszul formula in a frame:
//   2 g(nabla_i E_j, E_k) = E_i g_jk + E_j g_ik - E_k g_ij
//                         + c^l_ij g_lk - c^l_ik g_lj - c^l_jk g_li
inline ConnectionTable levi_civita(const ManifoldSpec& m) {
  const std::size_t n = m.dimension();
  const Tensor02& g = m.metric();
  const Tensor12& c = m.structure();
  const ExprMatrix& ginv = m.inverse_metric();

  Tensor03 lowered = Tensor03::generate(n, [&](const auto& idx) {
    const std::size_t i = idx[0], j = idx[1], k = idx[2];
    Expr s = m.frame_derivative(i, g(j, k)) + m.frame_derivative(j, g(i, k)) - m.frame_derivative(k, g(i, j));
    for (std::size_t l = 0; l < n; ++l) {
      s += c(i, j, l) * g(l, k) - c(i, k, l) * g(l, j) - c(j, k, l) * g(l, i);
    }
    return s * Expr(Rational(1, 2));
  });

  Tensor12 gamma = Tensor12::generate(n, [&](const auto& idx) {
    const std::size_t i = idx[0], j = idx[1], mm = idx[2];
    Expr s;
    for (std::size_t k = 0; k < n; ++k) {
      if (!ginv(mm, k).is_zero()) s += ginv(mm, k) * lowered(i, j, k);
    }
    return s;
  });
  return {std::move(gamma), "levi_civita"};
}

// Generalized symmetric metric connection of type (alpha, beta):
//   nabla'_X Y = nabla_X Y + alpha (eta(Y) X - g(X, Y) xi) - beta eta(X) phi Y
inline ConnectionTable build_gsmc(const ConnectionTable& lc, const ManifoldSpec& m, const ContactStructure& ct,
                                  const Expr& alpha, const Expr& beta) {
  const std::size_t n = m.dimension();
  Tensor12 gamma = Tensor12::generate(n, [&](const auto& idx) {
    const std::size_t i = idx[0], j = idx[1], k = idx[2];
    Expr s = lc.gamma(i, j, k);
    s += alpha * ((i == k ? ct.eta(j) : Expr()) - m.metric()(i, j) * ct.xi(k));
    s -= beta * ct.eta(i) * ct.phi(j, k);
    return s;
  });
  return {std::move(gamma), "gsmc"};
}

// T^k_ij = Gamma^k_ij - Gamma^k_ji - c^k_ij.
inline Tensor12 torsion(const ConnectionTable& conn, const ManifoldSpec& m) {
  return Tensor12::generate(m.dimension(), [&](const auto& idx) {
    const std::size_t i = idx[0], j = idx[1], k = idx[2];
    return conn.gamma(i, j, k) - conn.gamma(j, i, k) - m.structure()(i, j, k);
  });
}

// (nabla_i g)(E_j, E_k) = E_i g_jk - g(nabla_i E_j, E_k) - g(E_j, nabla_i E_k).
inline Tensor03 metric_compat_defect(const ConnectionTable& conn, const ManifoldSpec& m) {
  const std::size_t n = m.dimension();
  const Tensor02& g = m.metric();
  return Tensor03::generate(n, [&](const auto& idx) {
    const std::size_t i = idx[0], j = idx[1], k = idx[2];
    Expr s = m.frame_derivative(i, g(j, k));
    for (std::size_t l = 0; l < n; ++l) {
      s -= conn.gamma(i, j, l) * g(l, k) + conn.gamma(i, k, l) * g(j, l);
    }
    return s;
  });
}

// nabla_X Y for arbitrary frame components.
inline FrameVec covariant_derivative(const ConnectionTable& conn, const ManifoldSpec& m, const FrameVec& x,
                                     const FrameVec& y) {
  const std::size_t n = m.dimension();
  FrameVec out(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (x(i).is_zero()) continue;
    for (std::size_t k = 0; k < n; ++k) {
      Expr s = m.frame_derivative(i, y(k));
      for (std::size_t j = 0; j < n; ++j) {
        if (!y(j).is_zero()) s += y(j) * conn.gamma(i, j, k);
      }
      out(k) += x(i) * s;
    }
  }
  return out;
}

// (nabla_X t) Y = nabla_X (t Y) - t (nabla_X Y) for a (1,1) tensor t.
inline FrameVec covariant_derivative(const ConnectionTable& conn, const ManifoldSpec& m, const FrameVec& x,
                                     const Tensor11& t, const FrameVec& y) {
  return covariant_derivative(conn, m, x, apply(t, y)) - apply(t, covariant_derivative(conn, m, x, y));
}

// (nabla_X w) Y = X(w(Y)) - w(nabla_X Y) for a 1-form w.
inline Expr covariant_derivative(const ConnectionTable& conn, const ManifoldSpec& m, const FrameVec& x,
                                 const CoVec& w, const FrameVec& y) {
  return m.directional_derivative(x, pair(w, y)) - pair(w, covariant_derivative(conn, m, x, y));
}

// Component tensors of the above on frame fields.
// (nabla_i t)(E_j) has E_k component result(i, j, k).
inline Tensor12 covariant_derivative_tensor(const ConnectionTable& conn, const ManifoldSpec& m, const Tensor11& t) {
  const std::size_t n = m.dimension();
  Tensor12 out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const FrameVec v = covariant_derivative(conn, m, basis_vector(n, i), t, basis_vector(n, j));
      for (std::size_t k = 0; k < n; ++k) out(i, j, k) = v(k);
    }
  }
  return out;
}

// nabla_i V has E_k component result(i, k).
inline Tensor11 covariant_derivative_tensor(const ConnectionTable& conn, const ManifoldSpec& m, const FrameVec& v) {
  const std::size_t n = m.dimension();
  Tensor11 out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const FrameVec d = covariant_derivative(conn, m, basis_vector(n, i), v);
    for (std::size_t k = 0; k < n; ++k) out(i, k) = d(k);
  }
  return out;
}

// (nabla_i w)(E_j) = result(i, j).
inline Tensor02 covariant_derivative_tensor(const ConnectionTable& conn, const ManifoldSpec& m, const CoVec& w) {
  const std::size_t n = m.dimension();
  return Tensor02::generate(n, [&](const auto& idx) {
    return covariant_derivative(conn, m, basis_vector(n, idx[0]), w, basis_vector(n, idx[1]));
  });
}

}  // namespace kenmotsu
