#pragma once

// The full verification suite: contact and Kenmotsu axioms, connection and
// curvature identities, reductions, vanishing loci and theorem checks.

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "kenmotsu/analysis.hpp"
#include "kenmotsu/kenmotsu_check.hpp"
#include "kenmotsu/spec_file.hpp"

namespace kenmotsu {

enum class VariantFilter { printed, rederived, both };

struct VerifyOptions {
  std::optional<Expr> alpha;  // nullopt: symbolic
  std::optional<Expr> beta;
  VariantFilter variant = VariantFilter::both;
};

namespace detail {

inline std::set<std::string> factor_keys(const std::vector<Polynomial>& fs, const SymbolTablePtr& table) {
  std::set<std::string> out;
  for (const auto& f : fs) out.insert(expanded_string(f.monic(), table));
  return out;
}

inline bool keep(const std::string& id, VariantFilter f) {
  auto ends = [&](const std::string& s) { return id.size() >= s.size() && id.compare(id.size() - s.size(), s.size(), s) == 0; };
  if (f == VariantFilter::printed) return !ends(".rederived");
  if (f == VariantFilter::rederived) return !ends(".printed");
  return true;
}

inline std::string pair_label(const Expr& a, const Expr& b) { return "(" + to_string(a) + "," + to_string(b) + ")"; }

}  // namespace detail

// Compares the parameter conditions under which a defect vanishes with a
// claimed product of factors, e.g. (alpha+1) beta.
inline CheckRecord locus_record(std::string id, std::string anchor, const Defect& d, const Expr& claimed,
                                const SymbolTablePtr& table) {
  CheckRecord r{std::move(id), std::move(anchor)};
  const std::vector<Polynomial> observed = parameter_factors(content_gcd(d, table), table);
  const Expr cl = claimed.with_table(table);
  const std::vector<Polynomial> expected = parameter_factors(cl.numerator(), table);
  const bool zero_ok = d.is_zero() == cl.is_zero();
  const bool same = d.is_zero() || detail::factor_keys(observed, table) == detail::factor_keys(expected, table);
  r.observed = zero_ok && same ? Outcome::holds : Outcome::fails;
  if (d.is_zero()) {
    r.notes = "defect vanishes identically";
  } else {
    r.notes = "defect vanishes iff " + factors_string(observed, table) + " = 0";
    if (auto bad = d.first_nonzero()) {
      r.residual = to_string(d.values[*bad]);
      r.index = d.index(*bad);
    }
  }
  return r;
}

// A claim that a defect vanishes (or, with vanishes = false, that it does
// not). The record holds iff the claim is true.
inline CheckRecord claim_record(std::string id, std::string anchor, const Defect& d, bool vanishes) {
  CheckRecord r{std::move(id), std::move(anchor)};
  r.observed = d.is_zero() == vanishes ? Outcome::holds : Outcome::fails;
  if (auto bad = d.first_nonzero()) {
    r.residual = to_string(d.values[*bad]);
    r.index = d.index(*bad);
  }
  return r;
}

inline Tensor02 antisymmetric_part(const Tensor02& s) {
  return Tensor02::generate(s.dim(), [&](const auto& idx) { return s(idx[0], idx[1]) - s(idx[1], idx[0]); });
}

inline Tensor13 antisymmetry_defect(const Tensor13& r) {
  return Tensor13::generate(r.dim(), [&](const auto& idx) { return r(idx[0], idx[1], idx[2], idx[3]) + r(idx[1], idx[0], idx[2], idx[3]); });
}

inline VerificationReport verify_spec(const SpecDocument& doc, const VerifyOptions& opt = {}) {
  const ManifoldSpec& m = doc.manifold;
  const ContactStructure& c = doc.contact;
  const SymbolTablePtr& table = m.symbols();

  VerificationReport all(m.name());
  all.set_parameter("alpha", opt.alpha ? to_string(*opt.alpha) : "symbolic");
  all.set_parameter("beta", opt.beta ? to_string(*opt.beta) : "symbolic");

  const Geometry sym = make_geometry(m, c);
  Bindings current;
  if (opt.alpha) current["alpha"] = opt.alpha->with_table(table);
  if (opt.beta) current["beta"] = opt.beta->with_table(table);
  const Geometry G = current.empty() ? sym : sym.substitute(current);

  all.merge(check_almost_contact(m, c));
  all.merge(check_kenmotsu(m, c, G.lc));

  auto add = [&](CheckRecord r) { all.add(std::move(r)); };

  // Connection.
  add(defect_record("connection.levi_civita.torsion", "T(X,Y) = 0 for the Levi-Civita connection", torsion(G.lc, m)));
  add(defect_record("connection.levi_civita.metric", "nabla g = 0", metric_compat_defect(G.lc, m)));
  add(defect_record("connection.torsion",
                    "T'(X,Y) = alpha{eta(Y)X - eta(X)Y} + beta{eta(Y)phi X - eta(X)phi Y}",
                    torsion(G.gsmc, m) - predict_torsion(G)));
  add(defect_record("connection.metric", "nabla' g = 0", metric_compat_defect(G.gsmc, m)));
  add(defect_record("connection.nabla_phi", "(nabla'_X phi)Y = (alpha+1){g(phi X,Y)xi - eta(Y)phi X}",
                    covariant_derivative_tensor(G.gsmc, m, c.phi) - predict_nabla_phi(G)));
  add(defect_record("connection.nabla_xi", "nabla'_X xi = (alpha+1){X - eta(X)xi}",
                    covariant_derivative_tensor(G.gsmc, m, c.xi) - predict_nabla_xi(G)));
  add(defect_record("connection.nabla_eta", "(nabla'_X eta)Y = (alpha+1){g(X,Y) - eta(X)eta(Y)}",
                    covariant_derivative_tensor(G.gsmc, m, c.eta) - predict_nabla_eta(G)));
  if (doc.connection) {
    add(defect_record("connection.custom.metric", "nabla g = 0 for the custom connection",
                      metric_compat_defect(*doc.connection, m)));
  }

  // Reductions, always at fixed parameter values.
  {
    const Geometry lc0 = sym.substitute({{"alpha", Expr(0)}, {"beta", Expr(0)}});
    add(defect_record("reduction.levi_civita.connection", "(alpha,beta) = (0,0): nabla' = nabla",
                      lc0.gsmc.gamma - lc0.lc.gamma));
    add(defect_record("reduction.levi_civita.riemann", "(alpha,beta) = (0,0): R' = R", lc0.Rb - lc0.R));
    add(defect_record("reduction.levi_civita.ricci", "(alpha,beta) = (0,0): S' = S", lc0.Sb - lc0.S));
    add(defect_record("reduction.levi_civita.scalar", "(alpha,beta) = (0,0): r' = r", lc0.rb - lc0.r));

    const Geometry g10 = make_geometry(m, c, Expr(1), Expr(0));
    add(defect_record("reduction.semi_symmetric", "(alpha,beta) = (1,0): nabla'_X Y = nabla_X Y + eta(Y)X - g(X,Y)xi",
                      g10.gsmc.gamma - semi_symmetric_connection(g10).gamma));
    const Geometry g01 = make_geometry(m, c, Expr(0), Expr(1));
    add(defect_record("reduction.quarter_symmetric", "(alpha,beta) = (0,1): nabla'_X Y = nabla_X Y - eta(X)phi Y",
                      g01.gsmc.gamma - quarter_symmetric_connection(g01).gamma));
  }

  // Curvature.
  add(defect_record("curvature.antisymmetry", "R'(X,Y)Z = -R'(Y,X)Z", antisymmetry_defect(G.Rb)));
  add(defect_record("curvature.prediction",
                    "R'(X,Y)Z = R(X,Y)Z + {(-alpha^2-2alpha)g(Y,Z) + (alpha^2+alpha)eta(Y)eta(Z)}X + ...",
                    G.Rb - predict_curvature_gsmc(G)));
  add(defect_record("curvature.xy_xi", "R'(X,Y)xi = (alpha+1){eta(X)Y - eta(Y)X + beta(eta(Y)phi X - eta(X)phi Y)}",
                    contract_xi(G.Rb, G) - predict_R_xy_xi(G)));
  {
    const Tensor12 direct =
        field12(G, [&](const FrameVec& x, const FrameVec& y) { return apply(G.Rb, G.xi(), x, y); });
    for (Variant v : {Variant::printed, Variant::rederived}) {
      add(defect_record("curvature.xi_xy." + variant_name(v),
                        v == Variant::printed
                            ? "R'(xi,X)Y = (alpha+1){eta(Y)X - g(X,Y)xi + beta(eta(Y)phi X - g(X,phi Y)xi)}"
                            : "R'(xi,X)Y = (alpha+1){eta(Y)X - g(X,Y)xi - beta(eta(Y)phi X + g(X,phi Y)xi)}",
                        direct - predict_R_xi_xy(G, v),
                        agreement(predict_R_xi_xy(G, v), predict_R_xi_xy(G, Variant::rederived))));
    }
  }
  add(defect_record("curvature.xi_y_xi", "R'(xi,Y)xi = (alpha+1){Y - eta(Y)xi - beta phi Y}",
                    field11(G, [&](const FrameVec& y) { return apply(G.Rb, G.xi(), y, G.xi()); }) -
                        predict_R_xi_y_xi(G)));
  add(defect_record("curvature.eta",
                    "eta(R'(X,Y)Z) = (alpha+1){eta(Y)g(X,Z) - eta(X)g(Y,Z) + beta(eta(Y)g(X,phi Z) - eta(X)g(Y,phi Z))}",
                    form03(G, [&](const FrameVec& x, const FrameVec& y, const FrameVec& z) {
                      return G.eta(apply(G.Rb, x, y, z));
                    }) - predict_eta_R(G)));

  const Tensor13 bianchi = bianchi_defect(G.Rb);
  add(defect_record("bianchi.formula",
                    "R'(X,Y)Z + R'(Y,Z)X + R'(Z,X)Y = 2(beta+alpha beta){eta(X)g(phi Y,Z) + eta(Y)g(X,phi Z) + eta(Z)g(Y,phi X)}xi",
                    bianchi - predict_bianchi(G)));
  add(locus_record("bianchi.locus", "first Bianchi identity for nabla' holds iff (alpha+1) beta = 0", bianchi,
                   (G.alpha + Expr(1)) * G.beta, table));

  // Ricci and scalar curvature.
  add(defect_record("ricci.prediction",
                    "S'(Y,Z) = S(Y,Z) + {(2-n)alpha^2 + (3-2n)alpha}g(Y,Z) + (n-2)(alpha^2+alpha)eta(Y)eta(Z) - (beta+alpha beta)g(Y,phi Z)",
                    G.Sb - predict_ricci_gsmc(G)));
  const Tensor02 skew = antisymmetric_part(G.Sb);
  add(defect_record("ricci.antisymmetric_part", "S'(Y,Z) - S'(Z,Y) = -2(beta+alpha beta)g(Y,phi Z)",
                    skew - predict_ricci_antisymmetric(G)));
  add(locus_record("ricci.symmetric_locus", "S' is symmetric iff (alpha+1) beta = 0", skew,
                   (G.alpha + Expr(1)) * G.beta, table));
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{-1, 2}, {2, 0}, {0, 1}}) {
    const Geometry p = sym.substitute({{"alpha", Expr(a)}, {"beta", Expr(b)}});
    const bool claim = a == -1 || b == 0;
    add(claim_record("ricci.symmetric_at" + detail::pair_label(a, b),
                     std::string("S' is ") + (claim ? "" : "not ") + "symmetric at (alpha,beta) = " +
                         detail::pair_label(a, b),
                     antisymmetric_part(p.Sb), claim));
  }
  add(defect_record("ricci.xi", "S'(Y,xi) = (1-n)(alpha+1)eta(Y)",
                    form01(G, [&](const FrameVec& y) { return apply(G.Sb, y, G.xi()); }) - predict_S_xi(G)));
  add(defect_record("scalar.prediction", "r' = r + (n-2)(1-n)alpha^2 - 2(n-1)^2 alpha", G.rb - predict_scalar_gsmc(G)));
  {
    CheckRecord r{"scalar.beta_free", "r' does not depend on beta"};
    r.observed = G.rb.depends_on("beta") ? Outcome::fails : Outcome::holds;
    if (r.observed == Outcome::fails) r.residual = to_string(G.rb);
    add(r);
  }
  for (Variant v : {Variant::printed, Variant::rederived}) {
    add(defect_record("phi_ricci." + variant_name(v),
                      v == Variant::printed ? "S'(phi Y,phi Z) = S'(Y,Z) + (n-1)(1+alpha)"
                                            : "S'(phi Y,phi Z) = S'(Y,Z) + (n-1)(1+alpha)eta(Y)eta(Z)",
                      phi_ricci_defect(G, v),
                      agreement(phi_ricci_defect(G, v), phi_ricci_defect(G, Variant::rederived))));
  }

  // Projective curvature.
  const Tensor13 Pb = projective(G.Rb, G.Sb);
  const Tensor12 Pxi = contract_xi(Pb, G);
  add(defect_record("xi_projective.formula", "P'(X,Y)xi = (alpha+1)beta{eta(Y)phi X - eta(X)phi Y}",
                    Pxi - predict_P_xi(G)));
  add(locus_record("xi_projective.locus", "xi-projectively flat iff (alpha+1) beta = 0", Pxi,
                   (G.alpha + Expr(1)) * G.beta, table));
  for (const auto& [a, b] : std::vector<std::pair<int, int>>{{-1, 2}, {2, 0}, {0, 1}}) {
    const Geometry p = sym.substitute({{"alpha", Expr(a)}, {"beta", Expr(b)}});
    const bool claim = a == -1 || b == 0;
    add(claim_record("xi_projective.flat_at" + detail::pair_label(a, b),
                     std::string(claim ? "" : "not ") + "xi-projectively flat at (alpha,beta) = " +
                         detail::pair_label(a, b),
                     contract_xi(projective(p.Rb, p.Sb), p), claim));
  }
  {
    const Geometry p = sym.substitute({{"alpha", Expr(1)}, {"beta", Expr(0)}});
    add(defect_record("xi_projective.semi_symmetric", "xi-projectively flat for the semi-symmetric connection",
                      contract_xi(projective(p.Rb, p.Sb), p)));
  }
  {
    const Geometry p = sym.substitute({{"beta", Expr(0)}});
    const Tensor13 P0 = projective(p.Rb, p.Sb);
    add(defect_record("projective.trace", "sum_i P'(E_i,Y)Z component E_i = 0 at beta = 0",
                      Tensor02::generate(m.dimension(), [&](const auto& idx) {
                        Expr s;
                        for (std::size_t a = 0; a < m.dimension(); ++a) s += P0(a, idx[0], idx[1], a);
                        return s;
                      })));
  }

  // Concircular curvature.
  const Tensor13 Cdiff = concircular_difference(G);
  for (Variant v : {Variant::printed, Variant::rederived}) {
    add(defect_record("concircular.xi_component." + variant_name(v),
                      "g(C'(X,Y)Z,xi) - g(C(X,Y)Z,xi) = " +
                          std::string(v == Variant::printed ? "{(n-2)alpha^2 + (2n-3)alpha}" : "(n-2)(alpha^2+alpha)/n") +
                          "{g(Y,Z)eta(X) - g(X,Z)eta(Y)} + (beta+alpha beta){g(X,phi Z)eta(Y) - g(Y,phi Z)eta(X)}",
                      xi_component(Cdiff, G) - predict_concircular_xi(G, v),
                      agreement(predict_concircular_xi(G, v), predict_concircular_xi(G, Variant::rederived))));
  }

  // Theorems.
  std::vector<TheoremVerdict> verdicts = ricci_semisym_check(G);
  for (auto&& v : phi_projective_check(G)) verdicts.push_back(std::move(v));
  for (auto&& v : concircular_invariance_check(G)) verdicts.push_back(std::move(v));
  {
    // Only meaningful at alpha = 0, whatever alpha the run uses.
    Bindings at0{{"alpha", Expr(0)}};
    if (opt.beta) at0["beta"] = current.at("beta");
    const Geometry q = sym.substitute(at0);
    verdicts.push_back(check_theorem("concircular_invariant.quarter_symmetric_ricci",
                                     "C' = C at alpha = 0 => S' = S", "C' = C", q, concircular_difference(q),
                                     [](const Geometry& H) { return BranchOutcome{Defect(H.Sb - H.S)}; }));
  }
  for (const auto& v : verdicts) add(v.record());

  VerificationReport out(all.subject());
  for (const auto& [k, v] : all.parameters()) out.set_parameter(k, v);
  for (const auto& r : all.records()) {
    if (detail::keep(r.id, opt.variant)) out.add(r);
  }
  return out;
}

}  // namespace kenmotsu
