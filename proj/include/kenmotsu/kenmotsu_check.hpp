#pragma once

// Kenmotsu conditions on the Levi-Civita connection and the curvature
// relations they imply, each evaluated on all frame index combinations.

#include <cstddef>
#include <string>

#include "kenmotsu/connection.hpp"
#include "kenmotsu/contact.hpp"
#include "kenmotsu/curvature.hpp"
#include "kenmotsu/manifold.hpp"
#include "kenmotsu/report.hpp"

namespace kenmotsu {

inline VerificationReport check_kenmotsu(const ManifoldSpec& m, const ContactStructure& c, const ConnectionTable& lc) {
  const std::size_t n = m.dimension();
  auto e = [n](std::size_t i) { return basis_vector(n, i); };
  auto eta = [&](const FrameVec& x) { return pair(c.eta, x); };
  auto phi = [&](const FrameVec& x) { return apply(c.phi, x); };
  const Expr n1(static_cast<int>(n) - 1);
  VerificationReport report(m.name());

  const Tensor12 nabla_phi = covariant_derivative_tensor(lc, m, c.phi);
  report.add(defect_record("kenmotsu.nabla_phi", "(nabla_X phi)Y = g(phi X,Y) xi - eta(Y) phi X",
                           Tensor12::generate(n, [&](const auto& idx) {
                             const std::size_t i = idx[0], j = idx[1], k = idx[2];
                             const FrameVec rhs = m.inner(phi(e(i)), e(j)) * c.xi - eta(e(j)) * phi(e(i));
                             return nabla_phi(i, j, k) - rhs(k);
                           })));

  const Tensor11 nabla_xi = covariant_derivative_tensor(lc, m, c.xi);
  report.add(defect_record("kenmotsu.nabla_xi", "nabla_X xi = X - eta(X) xi", Tensor11::generate(n, [&](const auto& idx) {
                             const FrameVec rhs = e(idx[0]) - eta(e(idx[0])) * c.xi;
                             return nabla_xi(idx[0], idx[1]) - rhs(idx[1]);
                           })));

  const Tensor02 nabla_eta = covariant_derivative_tensor(lc, m, c.eta);
  report.add(defect_record("kenmotsu.nabla_eta", "(nabla_X eta)Y = g(phi X, phi Y)",
                           Tensor02::generate(n, [&](const auto& idx) {
                             return nabla_eta(idx[0], idx[1]) - m.inner(phi(e(idx[0])), phi(e(idx[1])));
                           })));

  const Tensor13 R = riemann(lc, m);
  const Tensor02 S = ricci(R);

  report.add(defect_record("kenmotsu.eta_curvature", "eta(R(X,Y)Z) = g(X,Z) eta(Y) - g(Y,Z) eta(X)",
                           Tensor03::generate(n, [&](const auto& idx) {
                             const FrameVec x = e(idx[0]), y = e(idx[1]), z = e(idx[2]);
                             return m.inner(apply(R, x, y, z), c.xi) -
                                    (m.inner(x, z) * eta(y) - m.inner(y, z) * eta(x));
                           })));

  report.add(defect_record("kenmotsu.curvature_xi_x_y", "R(xi,X)Y = eta(Y) X - g(X,Y) xi",
                           Tensor12::generate(n, [&](const auto& idx) {
                             const FrameVec x = e(idx[0]), y = e(idx[1]);
                             const FrameVec d = apply(R, c.xi, x, y) - (eta(y) * x - m.inner(x, y) * c.xi);
                             return d(idx[2]);
                           })));

  report.add(defect_record("kenmotsu.curvature_x_y_xi", "R(X,Y)xi = eta(X) Y - eta(Y) X",
                           Tensor12::generate(n, [&](const auto& idx) {
                             const FrameVec x = e(idx[0]), y = e(idx[1]);
                             const FrameVec d = apply(R, x, y, c.xi) - (eta(x) * y - eta(y) * x);
                             return d(idx[2]);
                           })));

  report.add(defect_record("kenmotsu.curvature_xi_x_xi", "R(xi,X)xi = X - eta(X) xi",
                           Tensor11::generate(n, [&](const auto& idx) {
                             const FrameVec x = e(idx[0]);
                             const FrameVec d = apply(R, c.xi, x, c.xi) - (x - eta(x) * c.xi);
                             return d(idx[1]);
                           })));

  report.add(defect_record("kenmotsu.ricci_xi", "S(X,xi) = -(n-1) eta(X)", CoVec::generate(n, [&](const auto& idx) {
                             return apply(S, e(idx[0]), c.xi) + n1 * eta(e(idx[0]));
                           })));

  report.add(defect_record("kenmotsu.ricci_phi", "S(phi X,phi Y) = S(X,Y) + (n-1) eta(X) eta(Y)",
                           Tensor02::generate(n, [&](const auto& idx) {
                             const FrameVec x = e(idx[0]), y = e(idx[1]);
                             return apply(S, phi(x), phi(y)) - apply(S, x, y) - n1 * eta(x) * eta(y);
                           })));
  return report;
}

}  // namespace kenmotsu
