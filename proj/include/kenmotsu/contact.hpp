#pragma once

// Almost contact metric structure (phi, xi, eta, g) on a framed manifold.
//
// phi is stored as a (1,1) tensor: phi(j, k) is the E_k component of phi E_j.
// eta defaults to g(., xi). When eta is given explicitly, g(X, xi) = eta(X)
// is checked like any other axiom instead of being assumed.

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>

#include "kenmotsu/manifold.hpp"
#include "kenmotsu/report.hpp"
#include "kenmotsu/tensor.hpp"

namespace kenmotsu {

struct ContactStructure {
  Tensor11 phi;
  FrameVec xi;
  CoVec eta;
  bool eta_explicit = false;
};

inline ContactStructure make_contact(const ManifoldSpec& m, Tensor11 phi, FrameVec xi,
                                     std::optional<CoVec> eta = std::nullopt) {
  const std::size_t n = m.dimension();
  if (phi.dim() != n || xi.dim() != n || (eta && eta->dim() != n)) {
    throw SpecError("contact structure does not match the manifold dimension " + std::to_string(n));
  }
  ContactStructure c{std::move(phi), std::move(xi), CoVec(n), eta.has_value()};
  if (eta) {
    c.eta = std::move(*eta);
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) c.eta(j) += m.metric()(j, k) * c.xi(k);
    }
  }
  return c;
}

// (phi X)^k = sum_j X^j phi^k_j.
inline FrameVec apply(const Tensor11& t, const FrameVec& x) {
  FrameVec out(x.dim());
  for (std::size_t j = 0; j < x.dim(); ++j) {
    if (x(j).is_zero()) continue;
    for (std::size_t k = 0; k < x.dim(); ++k) out(k) += x(j) * t(j, k);
  }
  return out;
}

inline Expr pair(const CoVec& w, const FrameVec& x) {
  Expr out;
  for (std::size_t j = 0; j < x.dim(); ++j) out += w(j) * x(j);
  return out;
}

// Phi(X, Y) = g(X, phi Y).
inline Tensor02 fundamental_form(const ManifoldSpec& m, const ContactStructure& c) {
  const std::size_t n = m.dimension();
  return Tensor02::generate(n, [&](const auto& idx) {
    return m.inner(basis_vector(n, idx[0]), apply(c.phi, basis_vector(n, idx[1])));
  });
}

inline VerificationReport check_almost_contact(const ManifoldSpec& m, const ContactStructure& c) {
  const std::size_t n = m.dimension();
  auto e = [n](std::size_t i) { return basis_vector(n, i); };
  VerificationReport report(m.name());

  report.add(defect_record("contact.phi_xi", "phi xi = 0", apply(c.phi, c.xi)));

  report.add(defect_record("contact.eta_phi", "eta(phi X) = 0",
                           CoVec::generate(n, [&](const auto& idx) { return pair(c.eta, apply(c.phi, e(idx[0]))); })));

  report.add(defect_record("contact.eta_xi", "eta(xi) = 1", pair(c.eta, c.xi) - Expr(1)));

  report.add(defect_record("contact.phi_squared", "phi^2 X = -X + eta(X) xi",
                           Tensor11::generate(n, [&](const auto& idx) {
                             const std::size_t j = idx[0], k = idx[1];
                             const FrameVec pp = apply(c.phi, apply(c.phi, e(j)));
                             return pp(k) + (j == k ? Expr(1) : Expr()) - c.eta(j) * c.xi(k);
                           })));

  report.add(defect_record("contact.metric", "g(phi X, phi Y) = g(X, Y) - eta(X) eta(Y)",
                           Tensor02::generate(n, [&](const auto& idx) {
                             const std::size_t i = idx[0], j = idx[1];
                             return m.inner(apply(c.phi, e(i)), apply(c.phi, e(j))) - m.metric()(i, j) +
                                    c.eta(i) * c.eta(j);
                           })));

  report.add(defect_record("contact.eta_dual", "g(X, xi) = eta(X)", CoVec::generate(n, [&](const auto& idx) {
                             return m.inner(e(idx[0]), c.xi) - c.eta(idx[0]);
                           })));
  return report;
}

// S(X, Y) = a g(X, Y) + b eta(X) eta(Y) + c g(phi X, Y).
enum class RicciClass { ricci_flat, einstein, eta_einstein, phi_einstein, generalized_eta_einstein, no_fit };

inline std::string ricci_class_name(RicciClass k) {
  switch (k) {
    case RicciClass::ricci_flat: return "Ricci-flat";
    case RicciClass::einstein: return "Einstein";
    case RicciClass::eta_einstein: return "eta-Einstein";
    case RicciClass::phi_einstein: return "phi-Einstein";
    case RicciClass::generalized_eta_einstein: return "generalized eta-Einstein";
    case RicciClass::no_fit: return "no fit";
  }
  return "?";
}

struct EtaEinsteinFit {
  RicciClass kind = RicciClass::no_fit;
  Expr a, b, c;
  std::string reason;  // why there is no fit

  bool found() const { return kind != RicciClass::no_fit; }
};

inline RicciClass classify_fit(const Expr& a, const Expr& b, const Expr& c) {
  if (a.is_zero() && b.is_zero() && c.is_zero()) return RicciClass::ricci_flat;
  if (c.is_zero()) return b.is_zero() ? RicciClass::einstein : RicciClass::eta_einstein;
  return b.is_zero() ? RicciClass::phi_einstein : RicciClass::generalized_eta_einstein;
}

inline EtaEinsteinFit eta_einstein_fit(const Tensor02& s, const ManifoldSpec& m, const ContactStructure& ct) {
  const std::size_t n = m.dimension();
  const Tensor02& g = m.metric();
  const Tensor02 h = Tensor02::generate(n, [&](const auto& idx) { return ct.eta(idx[0]) * ct.eta(idx[1]); });
  const Tensor02 f = Tensor02::generate(n, [&](const auto& idx) {
    return m.inner(apply(ct.phi, basis_vector(n, idx[0])), basis_vector(n, idx[1]));
  });

  const std::size_t count = n * n;
  auto row = [&](std::size_t flat) {
    return std::array<Expr, 4>{g.components()[flat], h.components()[flat], f.components()[flat],
                               s.components()[flat]};
  };
  auto det3 = [](const std::array<std::array<Expr, 3>, 3>& a) {
    return a[0][0] * (a[1][1] * a[2][2] - a[1][2] * a[2][1]) - a[0][1] * (a[1][0] * a[2][2] - a[1][2] * a[2][0]) +
           a[0][2] * (a[1][0] * a[2][1] - a[1][1] * a[2][0]);
  };

  EtaEinsteinFit fit;
  for (std::size_t p = 0; p < count; ++p) {
    for (std::size_t q = p + 1; q < count; ++q) {
      for (std::size_t r = q + 1; r < count; ++r) {
        const std::array<std::array<Expr, 4>, 3> rows{row(p), row(q), row(r)};
        std::array<std::array<Expr, 3>, 3> a;
        for (int i = 0; i < 3; ++i) {
          for (int j = 0; j < 3; ++j) a[i][j] = rows[i][j];
        }
        const Expr d = det3(a);
        if (d.is_zero()) continue;
        // Cramer's rule.
        std::array<Expr, 3> sol;
        for (int col = 0; col < 3; ++col) {
          auto b = a;
          for (int i = 0; i < 3; ++i) b[i][col] = rows[i][3];
          sol[col] = det3(b) / d;
        }
        for (std::size_t flat = 0; flat < count; ++flat) {
          const auto x = row(flat);
          if (!equals(sol[0] * x[0] + sol[1] * x[1] + sol[2] * x[2], x[3])) {
            const auto idx = s.unflatten(flat);
            fit.reason = "component (" + std::to_string(idx[0] + 1) + "," + std::to_string(idx[1] + 1) +
                         ") does not fit a g + b eta(x)eta + c g(phi., .)";
            return fit;
          }
        }
        fit.a = sol[0];
        fit.b = sol[1];
        fit.c = sol[2];
        fit.kind = classify_fit(fit.a, fit.b, fit.c);
        return fit;
      }
    }
  }
  fit.reason = "g, eta(x)eta and g(phi., .) are linearly dependent on every component triple";
  return fit;
}

}  // namespace kenmotsu
