#include <gtest/gtest.h>

#include "kenmotsu/analysis.hpp"
#include "kenmotsu/contact.hpp"
#include "kenmotsu/kenmotsu_check.hpp"
#include "spec_support.hpp"
#include "test_support.hpp"

namespace kenmotsu {
namespace {

using testing::bundled;
using testing::e;

constexpr int kIterations = 100;

Status status_of(const VerificationReport& r, const std::string& id) {
  const CheckRecord* rec = r.find(id);
  EXPECT_NE(rec, nullptr) << id;
  return rec ? rec->status() : Status::fail;
}

TEST(ContactTest, BundledStructurePassesAllAxioms) {
  const SpecDocument doc = bundled();
  const VerificationReport r = check_almost_contact(doc.manifold, doc.contact);
  EXPECT_EQ(r.records().size(), 6u);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.summary().pass, 6u);
  EXPECT_EQ(apply(doc.contact.phi, e(3, 1)), e(3, 2));
  EXPECT_EQ(apply(doc.contact.phi, e(3, 2)), -e(3, 1));
  EXPECT_TRUE(apply(doc.contact.phi, e(3, 3)).is_zero());
}

TEST(ContactTest, MismatchedEtaFailsEtaOfXi) {
  const SpecDocument doc = bundled();
  const ContactStructure c =
      make_contact(doc.manifold, doc.contact.phi, e(3, 1), CoVec::generate(3, [](const auto& idx) {
                     return Expr(idx[0] == 2 ? 1 : 0);
                   }));
  const VerificationReport r = check_almost_contact(doc.manifold, c);
  const CheckRecord* rec = r.find("contact.eta_xi");
  ASSERT_NE(rec, nullptr);
  EXPECT_EQ(rec->status(), Status::fail);
  EXPECT_EQ(rec->residual, "-1");
  EXPECT_EQ(status_of(r, "contact.eta_dual"), Status::fail);
}

TEST(ContactTest, ZeroPhiFailsPhiSquared) {
  const SpecDocument doc = bundled();
  const ContactStructure c = make_contact(doc.manifold, Tensor11(3), e(3, 3));
  const VerificationReport r = check_almost_contact(doc.manifold, c);
  EXPECT_EQ(status_of(r, "contact.phi_squared"), Status::fail);
  EXPECT_EQ(status_of(r, "contact.eta_xi"), Status::pass);
  EXPECT_FALSE(r.ok());
}

TEST(ContactTest, FundamentalFormIsAntisymmetric) {
  for (const char* name : {"kenmotsu3d.json", "flat3d.json"}) {
    const SpecDocument doc = bundled(name);
    const Tensor02 f = fundamental_form(doc.manifold, doc.contact);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(f(i, j), -f(j, i)) << name;
    }
    EXPECT_FALSE(f.is_zero());
  }
}

TEST(KenmotsuCheckTest, BundledSpecIsKenmotsu) {
  const SpecDocument doc = bundled();
  const ConnectionTable lc = levi_civita(doc.manifold);
  const VerificationReport r = check_kenmotsu(doc.manifold, doc.contact, lc);
  EXPECT_EQ(r.records().size(), 9u);
  EXPECT_TRUE(r.ok()) << to_text(r);
  const Tensor02 S = ricci(riemann(lc, doc.manifold));
  for (std::size_t i = 0; i < 3; ++i) EXPECT_EQ(S(i, i), Expr(-2));
  // R(E1,E3)xi = eta(E1)E3 - eta(E3)E1 = -E1.
  EXPECT_EQ(apply(riemann(lc, doc.manifold), e(3, 1), e(3, 3), doc.contact.xi), -e(3, 1));
}

TEST(KenmotsuCheckTest, FlatControlFails) {
  const SpecDocument doc = bundled("flat3d.json");
  EXPECT_TRUE(check_almost_contact(doc.manifold, doc.contact).ok());
  const VerificationReport r = check_kenmotsu(doc.manifold, doc.contact, levi_civita(doc.manifold));
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(status_of(r, "kenmotsu.nabla_phi"), Status::fail);
  EXPECT_EQ(status_of(r, "kenmotsu.nabla_xi"), Status::fail);
}

TEST(EtaEinsteinFitTest, MetricIsEinstein) {
  const SpecDocument doc = bundled();
  const EtaEinsteinFit fit = eta_einstein_fit(doc.manifold.metric(), doc.manifold, doc.contact);
  ASSERT_TRUE(fit.found());
  EXPECT_EQ(fit.a, Expr(1));
  EXPECT_TRUE(fit.b.is_zero());
  EXPECT_TRUE(fit.c.is_zero());
  EXPECT_EQ(fit.kind, RicciClass::einstein);
}

TEST(EtaEinsteinFitTest, BundledGsmcRicci) {
  const SpecDocument doc = bundled();
  const ManifoldSpec& m = doc.manifold;
  const Geometry G = make_geometry(m, doc.contact);
  const EtaEinsteinFit fit = eta_einstein_fit(G.Sb, m, doc.contact);
  ASSERT_TRUE(fit.found()) << fit.reason;
  EXPECT_EQ(fit.a, m.parse("-(1+alpha)*(2+alpha)"));
  EXPECT_EQ(fit.b, m.parse("alpha*(1+alpha)"));
  EXPECT_EQ(fit.c, m.parse("(1+alpha)*beta"));
  EXPECT_EQ(fit.kind, RicciClass::generalized_eta_einstein);

  // c vanishes exactly on alpha = -1 or beta = 0.
  const auto factors = parameter_factors(fit.c.numerator(), m.symbols());
  EXPECT_EQ(factors.size(), 2u);
}

TEST(EtaEinsteinFitTest, PhiProjectiveRicciIsGeneralizedEtaEinstein) {
  const SpecDocument doc = bundled();
  const ManifoldSpec& m = doc.manifold;
  const Geometry G = make_geometry(m, doc.contact);
  const EtaEinsteinFit fit = eta_einstein_fit(phi_projective_ricci(G, Variant::printed), m, doc.contact);
  ASSERT_TRUE(fit.found());
  EXPECT_EQ(fit.a, m.parse("-2*(alpha+1)"));
  EXPECT_EQ(fit.b, m.parse("2*(alpha+1)"));
  EXPECT_EQ(fit.c, m.parse("-2*(alpha+1)*beta"));
  EXPECT_EQ(fit.kind, RicciClass::generalized_eta_einstein);
}

TEST(EtaEinsteinFitTest, ReportsNoFit) {
  const SpecDocument doc = bundled();
  Tensor02 s(3);
  s(0, 0) = Expr(1);
  const EtaEinsteinFit fit = eta_einstein_fit(s, doc.manifold, doc.contact);
  EXPECT_FALSE(fit.found());
  EXPECT_NE(fit.reason.find("does not fit"), std::string::npos);
}

TEST(EtaEinsteinFitTest, RandomCoefficientsAreRecovered) {
  for (const char* name : {"kenmotsu3d.json", "flat3d.json"}) {
    const SpecDocument doc = bundled(name);
    const ManifoldSpec& m = doc.manifold;
    const auto g = [&](const FrameVec& x, const FrameVec& y) { return m.inner(x, y); };
    testing::ExprGenerator gen(m.symbols(), 77);
    for (int it = 0; it < kIterations; ++it) {
      Expr coef[3];
      for (auto& k : coef) k = gen.small_int(0, 3) == 0 ? Expr() : gen.expr();
      const Tensor02 s = Tensor02::generate(3, [&](const auto& idx) {
        const FrameVec x = basis_vector(3, idx[0]), y = basis_vector(3, idx[1]);
        return coef[0] * g(x, y) + coef[1] * pair(doc.contact.eta, x) * pair(doc.contact.eta, y) +
               coef[2] * g(apply(doc.contact.phi, x), y);
      });
      const EtaEinsteinFit fit = eta_einstein_fit(s, m, doc.contact);
      ASSERT_TRUE(fit.found()) << name << " iteration " << it;
      ASSERT_EQ(fit.a, coef[0]);
      ASSERT_EQ(fit.b, coef[1]);
      ASSERT_EQ(fit.c, coef[2]);
      EXPECT_EQ(fit.kind, classify_fit(coef[0], coef[1], coef[2]));
    }
  }
}

TEST(EtaEinsteinFitTest, Classification) {
  EXPECT_EQ(classify_fit(Expr(), Expr(), Expr()), RicciClass::ricci_flat);
  EXPECT_EQ(classify_fit(Expr(2), Expr(), Expr()), RicciClass::einstein);
  EXPECT_EQ(classify_fit(Expr(2), Expr(1), Expr()), RicciClass::eta_einstein);
  EXPECT_EQ(classify_fit(Expr(2), Expr(), Expr(1)), RicciClass::phi_einstein);
  EXPECT_EQ(classify_fit(Expr(), Expr(1), Expr(1)), RicciClass::generalized_eta_einstein);
}

}  // namespace
}  // namespace kenmotsu
