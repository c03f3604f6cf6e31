#pragma once

// Closed-form predictions for the generalized symmetric metric connection of
// type (alpha, beta) on a Kenmotsu manifold, derived tensors (projective and
// concircular curvature) and hypothesis/conclusion theorem checks.
//
// Every prediction is a tensor built from the Levi-Civita data and the
// contact structure only; the checks compare it with the tensors computed
// directly from the connection.

#include <cstddef>
#include <functional>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "kenmotsu/connection.hpp"
#include "kenmotsu/contact.hpp"
#include "kenmotsu/curvature.hpp"
#include "kenmotsu/manifold.hpp"
#include "kenmotsu/printer.hpp"
#include "kenmotsu/report.hpp"

namespace kenmotsu {

using Bindings = std::map<std::string, Expr>;

// Everything computed for one choice of (alpha, beta).
struct Geometry {
  const ManifoldSpec* m = nullptr;
  const ContactStructure* c = nullptr;
  Expr alpha, beta;
  ConnectionTable lc, gsmc;
  Tensor13 R, Rb;
  Tensor02 S, Sb;
  Expr r, rb;

  std::size_t dim() const { return m->dimension(); }
  Expr n() const { return Expr(static_cast<long>(dim())); }

  FrameVec e(std::size_t i) const { return basis_vector(dim(), i); }
  Expr g(const FrameVec& x, const FrameVec& y) const { return m->inner(x, y); }
  Expr eta(const FrameVec& x) const { return pair(c->eta, x); }
  FrameVec phi(const FrameVec& x) const { return apply(c->phi, x); }
  const FrameVec& xi() const { return c->xi; }

  Geometry substitute(const Bindings& b) const {
    Geometry out = *this;
    out.alpha = alpha.substitute(b);
    out.beta = beta.substitute(b);
    out.lc = lc.substitute(b);
    out.gsmc = gsmc.substitute(b);
    out.R = R.substitute(b);
    out.Rb = Rb.substitute(b);
    out.S = S.substitute(b);
    out.Sb = Sb.substitute(b);
    out.r = r.substitute(b);
    out.rb = rb.substitute(b);
    return out;
  }
};

inline Geometry make_geometry(const ManifoldSpec& m, const ContactStructure& c, const Expr& alpha,
                              const Expr& beta) {
  Geometry geo;
  geo.m = &m;
  geo.c = &c;
  geo.alpha = alpha.with_table(m.symbols());
  geo.beta = beta.with_table(m.symbols());
  geo.lc = levi_civita(m);
  geo.gsmc = build_gsmc(geo.lc, m, c, geo.alpha, geo.beta);
  geo.R = riemann(geo.lc, m);
  geo.Rb = riemann(geo.gsmc, m);
  geo.S = ricci(geo.R);
  geo.Sb = ricci(geo.Rb);
  geo.r = scalar(geo.S, m);
  geo.rb = scalar(geo.Sb, m);
  return geo;
}

inline Geometry make_geometry(const ManifoldSpec& m, const ContactStructure& c) {
  return make_geometry(m, c, m.symbol("alpha"), m.symbol("beta"));
}

// Tensor builders from formulas on frame fields.
template <typename F>
Tensor13 field13(const Geometry& G, F f) {
  const std::size_t n = G.dim();
  Tensor13 t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const FrameVec v = f(G.e(i), G.e(j), G.e(k));
        for (std::size_t l = 0; l < n; ++l) t(i, j, k, l) = v(l);
      }
    }
  }
  return t;
}

template <typename F>
Tensor12 field12(const Geometry& G, F f) {
  const std::size_t n = G.dim();
  Tensor12 t(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const FrameVec v = f(G.e(i), G.e(j));
      for (std::size_t l = 0; l < n; ++l) t(i, j, l) = v(l);
    }
  }
  return t;
}

template <typename F>
Tensor11 field11(const Geometry& G, F f) {
  const std::size_t n = G.dim();
  Tensor11 t(n);
  for (std::size_t i = 0; i < n; ++i) {
    const FrameVec v = f(G.e(i));
    for (std::size_t l = 0; l < n; ++l) t(i, l) = v(l);
  }
  return t;
}

template <typename F>
Tensor03 form03(const Geometry& G, F f) {
  return Tensor03::generate(G.dim(), [&](const auto& idx) { return f(G.e(idx[0]), G.e(idx[1]), G.e(idx[2])); });
}

template <typename F>
Tensor02 form02(const Geometry& G, F f) {
  return Tensor02::generate(G.dim(), [&](const auto& idx) { return f(G.e(idx[0]), G.e(idx[1])); });
}

template <typename F>
CoVec form01(const Geometry& G, F f) {
  return CoVec::generate(G.dim(), [&](const auto& idx) { return f(G.e(idx[0])); });
}

// ---------------------------------------------------------------------------
// Connection-level predictions.

// T(X, Y) = alpha (eta(Y) X - eta(X) Y) + beta (eta(Y) phi X - eta(X) phi Y).
inline Tensor12 predict_torsion(const Geometry& G) {
  return field12(G, [&](const FrameVec& x, const FrameVec& y) {
    return G.alpha * (G.eta(y) * x - G.eta(x) * y) + G.beta * (G.eta(y) * G.phi(x) - G.eta(x) * G.phi(y));
  });
}

// (nabla'_X phi)Y = (alpha + 1)(g(phi X, Y) xi - eta(Y) phi X).
inline Tensor12 predict_nabla_phi(const Geometry& G) {
  const Expr a1 = G.alpha + Expr(1);
  return field12(G, [&](const FrameVec& x, const FrameVec& y) {
    return a1 * (G.g(G.phi(x), y) * G.xi() - G.eta(y) * G.phi(x));
  });
}

// nabla'_X xi = (alpha + 1)(X - eta(X) xi).
inline Tensor11 predict_nabla_xi(const Geometry& G) {
  const Expr a1 = G.alpha + Expr(1);
  return field11(G, [&](const FrameVec& x) { return a1 * (x - G.eta(x) * G.xi()); });
}

// (nabla'_X eta)Y = (alpha + 1)(g(X, Y) - eta(X) eta(Y)).
inline Tensor02 predict_nabla_eta(const Geometry& G) {
  const Expr a1 = G.alpha + Expr(1);
  return form02(G, [&](const FrameVec& x, const FrameVec& y) { return a1 * (G.g(x, y) - G.eta(x) * G.eta(y)); });
}

// Levi-Civita plus eta(Y) X - g(X, Y) xi.
inline ConnectionTable semi_symmetric_connection(const Geometry& G) {
  const Tensor12 extra =
      field12(G, [&](const FrameVec& x, const FrameVec& y) { return G.eta(y) * x - G.g(x, y) * G.xi(); });
  return {G.lc.gamma + extra, "semi_symmetric"};
}

// Levi-Civita minus eta(X) phi Y.
inline ConnectionTable quarter_symmetric_connection(const Geometry& G) {
  const Tensor12 extra = field12(G, [&](const FrameVec& x, const FrameVec& y) { return -(G.eta(x) * G.phi(y)); });
  return {G.lc.gamma + extra, "quarter_symmetric"};
}

// ---------------------------------------------------------------------------
// Curvature-level predictions.

inline Tensor13 predict_curvature_gsmc(const Geometry& G) {
  const Expr& a = G.alpha;
  const Expr& b = G.beta;
  const Expr a2 = a * a;
  const Expr ab = b + a * b;
  return field13(G, [&](const FrameVec& x, const FrameVec& y, const FrameVec& z) {
    FrameVec v = apply(G.R, x, y, z);
    v += ((-a2 - Expr(2) * a) * G.g(y, z) + (a2 + a) * G.eta(y) * G.eta(z)) * x;
    v += ((a2 + Expr(2) * a) * G.g(x, z) - (a2 + a) * G.eta(x) * G.eta(z)) * y;
    v += ((a2 + a) * (G.g(y, z) * G.eta(x) - G.g(x, z) * G.eta(y)) +
          ab * (G.g(x, G.phi(z)) * G.eta(y) - G.g(y, G.phi(z)) * G.eta(x))) *
         G.xi();
    v += ab * G.eta(y) * G.eta(z) * G.phi(x);
    v -= ab * G.eta(x) * G.eta(z) * G.phi(y);
    return v;
  });
}

// Cyclic sum R'(X,Y)Z + R'(Y,Z)X + R'(Z,X)Y
//   = 2(beta + alpha beta)(eta(X) g(phi Y, Z) + eta(Y) g(X, phi Z) + eta(Z) g(Y, phi X)) xi.
inline Tensor13 predict_bianchi(const Geometry& G) {
  const Expr ab2 = Expr(2) * (G.beta + G.alpha * G.beta);
  return field13(G, [&](const FrameVec& x, const FrameVec& y, const FrameVec& z) {
    return ab2 *
           (G.eta(x) * G.g(G.phi(y), z) + G.eta(y) * G.g(x, G.phi(z)) + G.eta(z) * G.g(y, G.phi(x))) *
           G.xi();
  });
}

// R'(X, Y)xi = (alpha + 1)(eta(X) Y - eta(Y) X + beta (eta(Y) phi X - eta(X) phi Y)).
inline Tensor12 predict_R_xy_xi(const Geometry& G) {
  const Expr a1 = G.alpha + Expr(1);
  return field12(G, [&](const FrameVec& x, const FrameVec& y) {
    return a1 * (G.eta(x) * y - G.eta(y) * x + G.beta * (G.eta(y) * G.phi(x) - G.eta(x) * G.phi(y)));
  });
}

enum class Variant { printed, rederived };

inline std::string variant_name(Variant v) { return v == Variant::printed ? "printed" : "rederived"; }

// R'(xi, X)Y = (alpha + 1)(eta(Y) X - g(X, Y) xi + beta (s eta(Y) phi X - g(X, phi Y) xi))
// with s = +1 printed. Setting Y = xi and comparing with R'(xi, Y)xi forces s = -1.
inline Tensor12 predict_R_xi_xy(const Geometry& G, Variant v) {
  const Expr a1 = G.alpha + Expr(1);
  const Expr s(v == Variant::printed ? 1 : -1);
  return field12(G, [&](const FrameVec& x, const FrameVec& y) {
    return a1 * (G.eta(y) * x - G.g(x, y) * G.xi() + G.beta * (s * G.eta(y) * G.phi(x) - G.g(x, G.phi(y)) * G.xi()));
  });
}

// R'(xi, Y)xi = (alpha + 1)(Y - eta(Y) xi - beta phi Y).
inline Tensor11 predict_R_xi_y_xi(const Geometry& G) {
  const Expr a1 = G.alpha + Expr(1);
  return field11(G, [&](const FrameVec& y) { return a1 * (y - G.eta(y) * G.xi() - G.beta * G.phi(y)); });
}

// eta(R'(X, Y)Z) = (alpha + 1)(eta(Y) g(X, Z) - eta(X) g(Y, Z)
//                 + beta (eta(Y) g(X, phi Z) - eta(X) g(Y, phi Z))).
inline Tensor03 predict_eta_R(const Geometry& G) {
  const Expr a1 = G.alpha + Expr(1);
  return form03(G, [&](const FrameVec& x, const FrameVec& y, const FrameVec& z) {
    return a1 * (G.eta(y) * G.g(x, z) - G.eta(x) * G.g(y, z) +
                 G.beta * (G.eta(y) * G.g(x, G.phi(z)) - G.eta(x) * G.g(y, G.phi(z))));
  });
}

// S'(Y, Z) = S(Y, Z) + ((2-n) alpha^2 + (3-2n) alpha) g(Y, Z)
//          + (n-2)(alpha^2 + alpha) eta(Y) eta(Z) - (beta + alpha beta) g(Y, phi Z).
inline Tensor02 predict_ricci_gsmc(const Geometry& G) {
  const Expr& a = G.alpha;
  const Expr n = G.n();
  const Expr cg = (Expr(2) - n) * a * a + (Expr(3) - Expr(2) * n) * a;
  const Expr ce = (n - Expr(2)) * (a * a + a);
  const Expr cp = G.beta + a * G.beta;
  return form02(G, [&](const FrameVec& y, const FrameVec& z) {
    return apply(G.S, y, z) + cg * G.g(y, z) + ce * G.eta(y) * G.eta(z) - cp * G.g(y, G.phi(z));
  });
}

// S'(Y, Z) - S'(Z, Y) = -2(beta + alpha beta) g(Y, phi Z).
inline Tensor02 predict_ricci_antisymmetric(const Geometry& G) {
  const Expr c = Expr(-2) * (G.beta + G.alpha * G.beta);
  return form02(G, [&](const FrameVec& y, const FrameVec& z) { return c * G.g(y, G.phi(z)); });
}

// r' = r + (n-2)(1-n) alpha^2 - 2(n-1)^2 alpha.
inline Expr predict_scalar_gsmc(const Geometry& G) {
  const Expr n = G.n();
  const Expr& a = G.alpha;
  return G.r + (n - Expr(2)) * (Expr(1) - n) * a * a - Expr(2) * (n - Expr(1)).pow(2) * a;
}

// S'(Y, xi) = (1-n)(alpha + 1) eta(Y).
inline CoVec predict_S_xi(const Geometry& G) {
  const Expr c = (Expr(1) - G.n()) * (G.alpha + Expr(1));
  return form01(G, [&](const FrameVec& y) { return c * G.eta(y); });
}

// S'(phi Y, phi Z) - S'(Y, Z) - rhs, where rhs is (n-1)(1+alpha) as printed
// or (n-1)(1+alpha) eta(Y) eta(Z) rederived.
inline Tensor02 phi_ricci_defect(const Geometry& G, Variant v) {
  const Expr c = (G.n() - Expr(1)) * (G.alpha + Expr(1));
  return form02(G, [&](const FrameVec& y, const FrameVec& z) {
    const Expr rhs = v == Variant::printed ? c : c * G.eta(y) * G.eta(z);
    return apply(G.Sb, G.phi(y), G.phi(z)) - apply(G.Sb, y, z) - rhs;
  });
}

// ---------------------------------------------------------------------------
// Projective and concircular curvature.

// P(X, Y)Z = R(X, Y)Z - (S(Y, Z) X - S(X, Z) Y) / (n - 1).
inline Tensor13 projective(const Tensor13& r, const Tensor02& s) {
  const std::size_t n = r.dim();
  if (n < 2) throw std::invalid_argument("projective curvature needs n >= 2");
  const Expr k = Expr(1) / Expr(static_cast<long>(n - 1));
  Tensor13 p = r;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        p(i, j, l, i) -= k * s(j, l);
        p(i, j, l, j) += k * s(i, l);
      }
    }
  }
  return p;
}

// C(X, Y)Z = R(X, Y)Z - r / (n(n-1)) (g(Y, Z) X - g(X, Z) Y).
inline Tensor13 concircular(const Tensor13& r, const Expr& rs, const ManifoldSpec& m) {
  const std::size_t n = r.dim();
  if (n < 2) throw std::invalid_argument("concircular curvature needs n >= 2");
  const Expr k = rs / Expr(static_cast<long>(n * (n - 1)));
  const Tensor02& g = m.metric();
  Tensor13 c = r;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        c(i, j, l, i) -= k * g(j, l);
        c(i, j, l, j) += k * g(i, l);
      }
    }
  }
  return c;
}

// P'(X, Y)xi = (alpha + 1) beta (eta(Y) phi X - eta(X) phi Y).
inline Tensor12 predict_P_xi(const Geometry& G) {
  const Expr c = (G.alpha + Expr(1)) * G.beta;
  return field12(G, [&](const FrameVec& x, const FrameVec& y) {
    return c * (G.eta(y) * G.phi(x) - G.eta(x) * G.phi(y));
  });
}

// P(X, Y)xi in components (i, j, l).
inline Tensor12 contract_xi(const Tensor13& t, const Geometry& G) {
  return field12(G, [&](const FrameVec& x, const FrameVec& y) { return apply(t, x, y, G.xi()); });
}

// g(T(X, Y)Z, xi) in components (i, j, k).
inline Tensor03 xi_component(const Tensor13& t, const Geometry& G) {
  return form03(G, [&](const FrameVec& x, const FrameVec& y, const FrameVec& z) {
    return G.g(apply(t, x, y, z), G.xi());
  });
}

// g(C'(X,Y)Z, xi) - g(C(X,Y)Z, xi)
//   = k (g(Y, Z) eta(X) - g(X, Z) eta(Y)) + (beta + alpha beta)(g(X, phi Z) eta(Y) - g(Y, phi Z) eta(X))
// with k = (n-2)(alpha^2 + alpha)/n rederived, or (n-2) alpha^2 + (2n-3) alpha as printed.
inline Expr concircular_xi_coefficient(const Geometry& G, Variant v) {
  const Expr n = G.n();
  const Expr& a = G.alpha;
  if (v == Variant::printed) return (n - Expr(2)) * a * a + (Expr(2) * n - Expr(3)) * a;
  return (n - Expr(2)) * (a * a + a) / n;
}

inline Tensor03 predict_concircular_xi(const Geometry& G, Variant v) {
  const Expr k = concircular_xi_coefficient(G, v);
  const Expr ab = G.beta + G.alpha * G.beta;
  return form03(G, [&](const FrameVec& x, const FrameVec& y, const FrameVec& z) {
    return k * (G.g(y, z) * G.eta(x) - G.g(x, z) * G.eta(y)) +
           ab * (G.g(x, G.phi(z)) * G.eta(y) - G.g(y, G.phi(z)) * G.eta(x));
  });
}

// ---------------------------------------------------------------------------
// Vanishing loci.

namespace detail {

inline Polynomial numerator_in(const Expr& e, const SymbolTablePtr& table) { return e.with_table(table).numerator(); }

inline bool depends_on_coordinates(const Polynomial& p, const SymbolTablePtr& table) {
  for (std::size_t k = 0; k < table->num_coordinates(); ++k) {
    if (p.depends_on(k)) return true;
  }
  return false;
}

}  // namespace detail

// gcd of the numerators of all components; zero iff the defect vanishes.
inline Polynomial content_gcd(const Defect& d, const SymbolTablePtr& table) {
  Polynomial g(table->size());
  for (const auto& v : d.values) {
    if (v.is_zero()) continue;
    g = g.is_zero() ? detail::numerator_in(v, table).monic() : poly::gcd(g, detail::numerator_in(v, table));
  }
  return g;
}

// Non-constant factors of p that involve parameters only.
inline std::vector<Polynomial> parameter_factors(const Polynomial& p, const SymbolTablePtr& table) {
  std::vector<Polynomial> out;
  if (p.is_zero()) return out;
  for (const auto& [f, mult] : factor(p).factors) {
    if (!detail::depends_on_coordinates(f, table)) out.push_back(f);
  }
  return out;
}

inline std::string factors_string(const std::vector<Polynomial>& fs, const SymbolTablePtr& table) {
  if (fs.empty()) return "1";
  Polynomial prod(table->size(), Rational(1));
  for (const auto& f : fs) prod *= f;
  return to_string(Expr(table, prod, Polynomial(table->size(), Rational(1))));
}

// A parameter value that makes one factor vanish, e.g. {alpha -> -1}.
struct Branch {
  Bindings bindings;
  std::string label;
};

// Branches on which a nonzero defect vanishes: one per factor of the
// component gcd that is linear in some parameter with a constant
// coefficient. A vanishing defect gives the single empty branch.
inline std::vector<Branch> vanishing_branches(const Defect& d, const SymbolTablePtr& table) {
  if (d.is_zero()) return {Branch{{}, "identically"}};
  std::vector<Branch> out;
  for (const Polynomial& f : parameter_factors(content_gcd(d, table), table)) {
    for (std::size_t v = table->num_coordinates(); v < table->size(); ++v) {
      if (f.degree_in(v) != 1) continue;
      const Polynomial lead = f.coefficient_in(v, 1);
      if (!lead.is_constant()) continue;
      const Polynomial rest = f.coefficient_in(v, 0);
      const Expr root = Expr(table, -rest, Polynomial(table->size(), Rational(1))) / Expr(lead.constant_term());
      const std::string& name = table->name(v);
      out.push_back({Bindings{{name, root}}, name + " = " + to_string(root)});
      break;
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Theorem checks.

enum class Hypothesis { holds, fails, conditional };
enum class Conclusion { verified, refuted, not_applicable };

inline std::string hypothesis_name(Hypothesis h) {
  switch (h) {
    case Hypothesis::holds: return "holds";
    case Hypothesis::fails: return "fails";
    case Hypothesis::conditional: return "conditional";
  }
  return "?";
}

struct TheoremVerdict {
  std::string id;
  std::string anchor;
  Hypothesis hypothesis = Hypothesis::fails;
  std::vector<std::string> conditions;  // branch labels when conditional
  Conclusion conclusion = Conclusion::not_applicable;
  Outcome expected = Outcome::not_applicable;
  Defect residual;  // first failing branch, or the hypothesis defect
  std::string notes;

  CheckRecord record() const {
    CheckRecord r{id, anchor};
    switch (conclusion) {
      case Conclusion::verified: r.observed = Outcome::holds; break;
      case Conclusion::refuted: r.observed = Outcome::fails; break;
      case Conclusion::not_applicable: r.observed = Outcome::not_applicable; break;
    }
    r.expected = expected;
    if (auto bad = residual.first_nonzero()) {
      r.residual = to_string(residual.values[*bad]);
      r.index = residual.index(*bad);
    }
    r.notes = notes;
    return r;
  }
};

// What a conclusion produces on one branch: its defect (nullopt when the
// conclusion is undefined there) and whether it is expected to vanish.
struct BranchOutcome {
  std::optional<Defect> defect;
  Outcome expected = Outcome::holds;
  std::string note;
};

// Tests the hypothesis, then the conclusion on every branch where the
// hypothesis holds. The conclusion is verified iff it holds on every such
// branch.
inline TheoremVerdict check_theorem(std::string id, std::string anchor, const std::string& hypothesis_text,
                                    const Geometry& G, const Defect& hypothesis,
                                    const std::function<BranchOutcome(const Geometry&)>& conclusion) {
  TheoremVerdict v;
  v.id = std::move(id);
  v.anchor = std::move(anchor);
  const SymbolTablePtr& table = G.m->symbols();
  const std::vector<Branch> branches = vanishing_branches(hypothesis, table);
  if (branches.empty()) {
    v.hypothesis = Hypothesis::fails;
    v.residual = hypothesis;
    v.notes = "hypothesis " + hypothesis_text + " fails";
    return v;
  }
  v.hypothesis = hypothesis.is_zero() ? Hypothesis::holds : Hypothesis::conditional;

  bool any_defined = false, all_hold = true, all_expected = true;
  std::vector<std::string> notes;
  for (const Branch& b : branches) {
    if (v.hypothesis == Hypothesis::conditional) v.conditions.push_back(b.label);
    const BranchOutcome out = conclusion(b.bindings.empty() ? G : G.substitute(b.bindings));
    std::string where = v.hypothesis == Hypothesis::conditional ? " on " + b.label : "";
    if (!out.note.empty()) notes.push_back(out.note + where);
    if (!out.defect) continue;
    any_defined = true;
    if (out.expected != Outcome::holds) all_expected = false;
    if (!out.defect->is_zero()) {
      if (all_hold) v.residual = *out.defect;
      all_hold = false;
      notes.push_back("conclusion fails" + where);
    }
  }
  std::string head = "hypothesis " + hypothesis_text + " holds";
  if (v.hypothesis == Hypothesis::conditional) {
    head += " only on";
    for (std::size_t k = 0; k < v.conditions.size(); ++k) head += (k ? " or " : " ") + v.conditions[k];
  }
  notes.insert(notes.begin(), head);
  if (!any_defined) {
    v.conclusion = Conclusion::not_applicable;
    v.expected = Outcome::not_applicable;
  } else {
    v.conclusion = all_hold ? Conclusion::verified : Conclusion::refuted;
    v.expected = all_expected ? Outcome::holds : Outcome::fails;
  }
  for (std::size_t k = 0; k < notes.size(); ++k) v.notes += (k ? "; " : "") + notes[k];
  return v;
}

// Whether two formula tensors agree identically.
inline Outcome agreement(const Defect& a, const Defect& b) { return (a - b).is_zero() ? Outcome::holds : Outcome::fails; }

// Ricci semi-symmetry R'.S' = 0.
//   reduction:     S'(Y,U) - beta S'(phi Y,U) = k (g(Y,U) + beta g(Y, phi U))
//   phi_reduction: S'(phi Y,U) + beta S'(Y,U) = k (g(phi Y,U) + beta g(Y,U)) [+ (1-n)(alpha-beta+1) eta eta]
//   einstein:      S' = (1-n)(1+alpha) g, printed as
//                  S' = (1-n)/(1-beta^2) ((1+beta^2) g + (alpha-beta+1) eta(x)eta)
// with k = (1-n) printed and (1-n)(1+alpha) rederived.
inline std::vector<TheoremVerdict> ricci_semisym_check(const Geometry& G) {
  const Defect hyp = curvature_acts_on_ricci(G.Rb, G.Sb);
  const std::string htext = "R'.S' = 0";

  auto reduction_rhs = [](const Geometry& H, Variant v) {
    const Expr k = (Expr(1) - H.n()) * (v == Variant::printed ? Expr(1) : H.alpha + Expr(1));
    return form02(H, [&](const FrameVec& y, const FrameVec& u) { return k * (H.g(y, u) + H.beta * H.g(y, H.phi(u))); });
  };
  auto phi_reduction_rhs = [](const Geometry& H, Variant v) {
    const Expr n1 = Expr(1) - H.n();
    const Expr k = n1 * (v == Variant::printed ? Expr(1) : H.alpha + Expr(1));
    return form02(H, [&](const FrameVec& y, const FrameVec& u) {
      Expr s = k * (H.g(H.phi(y), u) + H.beta * H.g(y, u));
      if (v == Variant::printed) s += n1 * (H.alpha - H.beta + Expr(1)) * H.eta(y) * H.eta(u);
      return s;
    });
  };
  auto einstein_rhs = [](const Geometry& H, Variant v) -> std::optional<Tensor02> {
    const Expr n1 = Expr(1) - H.n();
    if (v == Variant::rederived) {
      const Expr k = n1 * (H.alpha + Expr(1));
      return form02(H, [&](const FrameVec& y, const FrameVec& u) { return k * H.g(y, u); });
    }
    const Expr den = Expr(1) - H.beta * H.beta;
    if (den.is_zero()) return std::nullopt;
    const Expr k = n1 / den;
    return form02(H, [&](const FrameVec& y, const FrameVec& u) {
      return k * ((Expr(1) + H.beta * H.beta) * H.g(y, u) + (H.alpha - H.beta + Expr(1)) * H.eta(y) * H.eta(u));
    });
  };

  std::vector<TheoremVerdict> out;
  for (Variant v : {Variant::printed, Variant::rederived}) {
    const std::string sfx = "." + variant_name(v);
    const std::string k = v == Variant::printed ? "(1-n)" : "(1-n)(1+alpha)";

    out.push_back(check_theorem(
        "ricci_semisymmetric.reduction" + sfx, "S'(Y,U) - beta S'(phi Y,U) = " + k + "{g(Y,U) + beta g(Y,phi U)}",
        htext, G, hyp, [&](const Geometry& H) {
          const Tensor02 lhs = form02(H, [&](const FrameVec& y, const FrameVec& u) {
            return apply(H.Sb, y, u) - H.beta * apply(H.Sb, H.phi(y), u);
          });
          return BranchOutcome{Defect(lhs - reduction_rhs(H, v)),
                               agreement(reduction_rhs(H, v), reduction_rhs(H, Variant::rederived))};
        }));

    out.push_back(check_theorem(
        "ricci_semisymmetric.phi_reduction" + sfx,
        "S'(phi Y,U) + beta S'(Y,U) = " + k + "{g(phi Y,U) + beta g(Y,U)" +
            (v == Variant::printed ? " + (alpha-beta+1) eta(Y)eta(U)}" : "}"),
        htext, G, hyp, [&](const Geometry& H) {
          const Tensor02 lhs = form02(H, [&](const FrameVec& y, const FrameVec& u) {
            return apply(H.Sb, H.phi(y), u) + H.beta * apply(H.Sb, y, u);
          });
          return BranchOutcome{Defect(lhs - phi_reduction_rhs(H, v)),
                               agreement(phi_reduction_rhs(H, v), phi_reduction_rhs(H, Variant::rederived))};
        }));

    out.push_back(check_theorem(
        "ricci_semisymmetric.einstein" + sfx,
        v == Variant::printed ? "S' = (1-n)/(1-beta^2){(1+beta^2) g + (alpha-beta+1) eta(x)eta}"
                              : "S' = (1-n)(1+alpha) g",
        htext, G, hyp, [&](const Geometry& H) {
          const auto rhs = einstein_rhs(H, v);
          if (!rhs) return BranchOutcome{std::nullopt, Outcome::not_applicable, "printed form undefined at beta^2 = 1"};
          const EtaEinsteinFit fit = eta_einstein_fit(H.Sb, *H.m, *H.c);
          return BranchOutcome{Defect(H.Sb - *rhs), agreement(*rhs, *einstein_rhs(H, Variant::rederived)),
                               "S' is " + ricci_class_name(fit.kind)};
        }));
  }
  return out;
}

// phi-projective flatness g(P'(phi X, phi Y) phi Z, phi U) = 0 and the Ricci
// form it forces:
//   printed:   S' = (1-n)(alpha+1){g - eta(x)eta + beta g(phi ., .)}
//   rederived: S' = (1-n)(alpha+1){g - beta g(phi ., .)}
inline Tensor04 phi_projective_defect(const Geometry& G) {
  const Tensor13 P = projective(G.Rb, G.Sb);
  return Tensor04::generate(G.dim(), [&](const auto& idx) {
    const FrameVec v = apply(P, G.phi(G.e(idx[0])), G.phi(G.e(idx[1])), G.phi(G.e(idx[2])));
    return G.g(v, G.phi(G.e(idx[3])));
  });
}

inline Tensor02 phi_projective_ricci(const Geometry& G, Variant v) {
  const Expr k = (Expr(1) - G.n()) * (G.alpha + Expr(1));
  return form02(G, [&](const FrameVec& y, const FrameVec& z) {
    if (v == Variant::printed) return k * (G.g(y, z) - G.eta(y) * G.eta(z) + G.beta * G.g(G.phi(y), z));
    return k * (G.g(y, z) - G.beta * G.g(G.phi(y), z));
  });
}

inline std::vector<TheoremVerdict> phi_projective_check(const Geometry& G) {
  const Defect hyp = phi_projective_defect(G);
  std::vector<TheoremVerdict> out;
  for (Variant v : {Variant::printed, Variant::rederived}) {
    out.push_back(check_theorem(
        "phi_projective.ricci." + variant_name(v),
        v == Variant::printed ? "S'(Y,Z) = (1-n)(alpha+1){g(Y,Z) - eta(Y)eta(Z) + beta g(phi Y,Z)}"
                              : "S'(Y,Z) = (1-n)(alpha+1){g(Y,Z) - beta g(phi Y,Z)}",
        "g(P'(phi X,phi Y)phi Z,phi U) = 0", G, hyp, [&](const Geometry& H) {
          const Tensor02 rhs = phi_projective_ricci(H, v);
          const EtaEinsteinFit fit = eta_einstein_fit(H.Sb, *H.m, *H.c);
          return BranchOutcome{Defect(H.Sb - rhs), agreement(rhs, phi_projective_ricci(H, Variant::rederived)),
                               "S' is " + ricci_class_name(fit.kind)};
        }));
  }
  // With alpha = -1 the forced Ricci form is zero.
  out.push_back(check_theorem("phi_projective.ricci_flat_at_alpha_minus_one", "alpha = -1 => S' = 0",
                              "g(P'(phi X,phi Y)phi Z,phi U) = 0", G, hyp, [&](const Geometry& H) {
                                if (!(H.alpha + Expr(1)).is_zero()) {
                                  return BranchOutcome{std::nullopt, Outcome::not_applicable, "alpha != -1"};
                                }
                                return BranchOutcome{Defect(H.Sb), Outcome::holds, {}};
                              }));
  return out;
}

// Invariance of the concircular curvature C' = C.
//   eta_relation: k {g(Y,Z) - eta(Y)eta(Z)} = (beta + alpha beta) g(Y, phi Z)
//   ricci:        S' = S + (r' - r)/n g rederived, printed as
//                 S' = S - ((2n-4) alpha^2 + (4n-6) alpha) g + ((2n-4) alpha^2 + (3n-5) alpha) eta(x)eta
inline Tensor02 concircular_ricci(const Geometry& G, Variant v) {
  const Expr n = G.n();
  const Expr& a = G.alpha;
  if (v == Variant::rederived) {
    const Expr k = (predict_scalar_gsmc(G) - G.r) / n;
    return form02(G, [&](const FrameVec& y, const FrameVec& z) { return apply(G.S, y, z) + k * G.g(y, z); });
  }
  const Expr cg = (Expr(2) * n - Expr(4)) * a * a + (Expr(4) * n - Expr(6)) * a;
  const Expr ce = (Expr(2) * n - Expr(4)) * a * a + (Expr(3) * n - Expr(5)) * a;
  return form02(G, [&](const FrameVec& y, const FrameVec& z) {
    return apply(G.S, y, z) - cg * G.g(y, z) + ce * G.eta(y) * G.eta(z);
  });
}

inline Tensor02 concircular_eta_relation(const Geometry& G, Variant v) {
  const Expr k = concircular_xi_coefficient(G, v);
  const Expr ab = G.beta + G.alpha * G.beta;
  return form02(G, [&](const FrameVec& y, const FrameVec& z) {
    return k * (G.g(y, z) - G.eta(y) * G.eta(z)) - ab * G.g(y, G.phi(z));
  });
}

inline Tensor13 concircular_difference(const Geometry& G) {
  return concircular(G.Rb, G.rb, *G.m) - concircular(G.R, G.r, *G.m);
}

inline std::vector<TheoremVerdict> concircular_invariance_check(const Geometry& G) {
  const Defect hyp = concircular_difference(G);
  const std::string htext = "C' = C";
  std::vector<TheoremVerdict> out;
  for (Variant v : {Variant::printed, Variant::rederived}) {
    const std::string k = v == Variant::printed ? "{(n-2)alpha^2 + (2n-3)alpha}" : "(n-2)(alpha^2+alpha)/n";
    out.push_back(check_theorem(
        "concircular_invariant.eta_relation." + variant_name(v),
        k + "{g(Y,Z) - eta(Y)eta(Z)} = (beta+alpha beta) g(Y,phi Z)", htext, G, hyp, [&](const Geometry& H) {
          const Tensor02 d = concircular_eta_relation(H, v);
          return BranchOutcome{Defect(d), agreement(d, concircular_eta_relation(H, Variant::rederived))};
        }));
    out.push_back(check_theorem(
        "concircular_invariant.ricci." + variant_name(v),
        v == Variant::printed
            ? "S' = S - {(2n-4)alpha^2 + (4n-6)alpha} g + {(2n-4)alpha^2 + (3n-5)alpha} eta(x)eta"
            : "S' = S + (r'-r)/n g",
        htext, G, hyp, [&](const Geometry& H) {
          const Tensor02 rhs = concircular_ricci(H, v);
          return BranchOutcome{Defect(H.Sb - rhs), agreement(rhs, concircular_ricci(H, Variant::rederived))};
        }));
  }
  return out;
}

}  // namespace kenmotsu
