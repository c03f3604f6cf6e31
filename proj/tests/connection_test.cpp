#include <gtest/gtest.h>

#include "kenmotsu/analysis.hpp"
#include "kenmotsu/connection.hpp"
#include "spec_support.hpp"
#include "test_support.hpp"

namespace kenmotsu {
namespace {

using testing::bundled;
using testing::e;

constexpr int kIterations = 100;

class BundledConnectionTest : public ::testing::Test {
 protected:
  SpecDocument doc = bundled();
  const ManifoldSpec& m = doc.manifold;
  Expr alpha = m.symbol("alpha");
  Expr beta = m.symbol("beta");
  ConnectionTable lc = levi_civita(m);
  ConnectionTable gsmc = build_gsmc(lc, m, doc.contact, alpha, beta);

  FrameVec nabla(const ConnectionTable& t, std::size_t i, std::size_t j) const {
    return covariant_derivative(t, m, e(3, i), e(3, j));
  }
};

TEST_F(BundledConnectionTest, LeviCivitaTable) {
  EXPECT_EQ(nabla(lc, 1, 1), -e(3, 3));
  EXPECT_TRUE(nabla(lc, 1, 2).is_zero());
  EXPECT_EQ(nabla(lc, 1, 3), e(3, 1));
  EXPECT_TRUE(nabla(lc, 2, 1).is_zero());
  EXPECT_EQ(nabla(lc, 2, 2), -e(3, 3));
  EXPECT_TRUE(nabla(lc, 3, 1).is_zero());
  EXPECT_TRUE(nabla(lc, 3, 2).is_zero());
  EXPECT_TRUE(nabla(lc, 3, 3).is_zero());
}

// The Koszul value in the (E2, E3) slot is E2, not 0.
TEST_F(BundledConnectionTest, LeviCivitaErratumSlot) {
  EXPECT_EQ(nabla(lc, 2, 3), e(3, 2));
  const FrameVec xi = doc.contact.xi;
  // nabla_X xi = X - eta(X) xi at X = E2 forces E2.
  EXPECT_EQ(nabla(lc, 2, 3), e(3, 2) - pair(doc.contact.eta, e(3, 2)) * xi);
  EXPECT_NE(FrameVec(3), e(3, 2) - pair(doc.contact.eta, e(3, 2)) * xi);
}

TEST_F(BundledConnectionTest, GsmcTable) {
  const Expr a1 = alpha + Expr(1);
  EXPECT_EQ(nabla(gsmc, 1, 1), -a1 * e(3, 3));
  EXPECT_TRUE(nabla(gsmc, 1, 2).is_zero());
  EXPECT_EQ(nabla(gsmc, 1, 3), a1 * e(3, 1));
  EXPECT_TRUE(nabla(gsmc, 2, 1).is_zero());
  EXPECT_EQ(nabla(gsmc, 2, 2), -a1 * e(3, 3));
  EXPECT_EQ(nabla(gsmc, 3, 1), -beta * e(3, 2));
  EXPECT_EQ(nabla(gsmc, 3, 2), beta * e(3, 1));
  EXPECT_TRUE(nabla(gsmc, 3, 3).is_zero());
}

TEST_F(BundledConnectionTest, GsmcErratumSlot) {
  const Expr a1 = alpha + Expr(1);
  EXPECT_EQ(nabla(gsmc, 2, 3), a1 * e(3, 2));
  EXPECT_NE(nabla(gsmc, 2, 3), alpha * e(3, 2));
  // The printed alpha E2 would break nabla'_X xi = (alpha+1){X - eta(X)xi}.
  const Geometry G = make_geometry(m, doc.contact);
  const Tensor11 predicted = predict_nabla_xi(G);
  EXPECT_EQ(predicted(1, 1), a1);
  EXPECT_NE(predicted(1, 1), alpha);
}

TEST_F(BundledConnectionTest, TorsionMatchesClosedForm) {
  const Geometry G = make_geometry(m, doc.contact);
  EXPECT_EQ(torsion(gsmc, m), predict_torsion(G));
  EXPECT_TRUE(torsion(lc, m).is_zero());
}

TEST_F(BundledConnectionTest, GsmcIsMetric) {
  EXPECT_TRUE(metric_compat_defect(gsmc, m).is_zero());
  EXPECT_TRUE(metric_compat_defect(lc, m).is_zero());
}

TEST_F(BundledConnectionTest, CovariantDerivativeIdentities) {
  const Geometry G = make_geometry(m, doc.contact);
  EXPECT_EQ(covariant_derivative_tensor(gsmc, m, doc.contact.phi), predict_nabla_phi(G));
  EXPECT_EQ(covariant_derivative_tensor(gsmc, m, doc.contact.xi), predict_nabla_xi(G));
  EXPECT_EQ(covariant_derivative_tensor(gsmc, m, doc.contact.eta), predict_nabla_eta(G));

  const Expr a1 = alpha + Expr(1);
  EXPECT_EQ(covariant_derivative(gsmc, m, e(3, 1), doc.contact.xi), a1 * e(3, 1));
  EXPECT_TRUE(covariant_derivative(gsmc, m, e(3, 3), doc.contact.xi).is_zero());
  EXPECT_EQ(covariant_derivative(gsmc, m, e(3, 1), doc.contact.phi, e(3, 2)), a1 * e(3, 3));
}

TEST_F(BundledConnectionTest, CovariantDerivativeOfNonConstantField) {
  // nabla_{E3}(x E1) = E3(x) E1 + x nabla_{E3}E1 = -x E1 for Levi-Civita.
  const Expr x = m.symbol("x");
  EXPECT_EQ(covariant_derivative(lc, m, e(3, 3), x * e(3, 1)), -x * e(3, 1));
}

TEST_F(BundledConnectionTest, Reductions) {
  const ConnectionTable g00 = build_gsmc(lc, m, doc.contact, Expr(0), Expr(0));
  EXPECT_EQ(g00.gamma, lc.gamma);
  const Geometry G10 = make_geometry(m, doc.contact, Expr(1), Expr(0));
  EXPECT_EQ(G10.gsmc.gamma, semi_symmetric_connection(G10).gamma);
  const Geometry G01 = make_geometry(m, doc.contact, Expr(0), Expr(1));
  EXPECT_EQ(G01.gsmc.gamma, quarter_symmetric_connection(G01).gamma);
}

TEST_F(BundledConnectionTest, SpecializationCommutes) {
  testing::ExprGenerator gen(m.symbols(), 11);
  for (int it = 0; it < kIterations; ++it) {
    const Expr a(gen.rational()), b(gen.rational());
    const ConnectionTable direct = build_gsmc(lc, m, doc.contact, a, b);
    const ConnectionTable later = gsmc.substitute({{"alpha", a}, {"beta", b}});
    ASSERT_EQ(direct.gamma, later.gamma) << "alpha = " << a << ", beta = " << b;
  }
}

TEST(ConnectionTest, PerturbedConnectionIsNotMetric) {
  const SpecDocument doc = bundled("perturbed3d.json");
  ASSERT_TRUE(doc.connection.has_value());
  EXPECT_EQ(doc.connection->label, "custom");
  const Tensor03 d = metric_compat_defect(*doc.connection, doc.manifold);
  EXPECT_FALSE(d.is_zero());
  // The perturbed slot is diagonal, so torsion is untouched.
  EXPECT_TRUE(torsion(*doc.connection, doc.manifold).is_zero());
  EXPECT_EQ(d(0, 0, 0), Expr(-2));
}

TEST(ConnectionTest, GeneralMetricKoszul) {
  // Non-orthonormal, non-constant frame metric: Levi-Civita is still metric
  // and torsion free.
  const SpecDocument doc = load_spec_text(R"({
    "name": "g", "dimension": 3, "coordinates": ["x", "y", "z"],
    "frame": [["1", "0", "0"], ["0", "x", "0"], ["0", "y", "1"]],
    "metric": [["1", "0", "0"], ["0", "1+x^2", "x"], ["0", "x", "2"]],
    "contact": {"phi": [["0", "-1", "0"], ["1", "0", "0"], ["0", "0", "0"]], "xi": ["0", "0", "1"]}
  })");
  const ConnectionTable lc = levi_civita(doc.manifold);
  EXPECT_TRUE(metric_compat_defect(lc, doc.manifold).is_zero());
  EXPECT_TRUE(torsion(lc, doc.manifold).is_zero());
}

// Torsion of an arbitrary connection is antisymmetric.
TEST(ConnectionTest, RandomTorsionIsAntisymmetric) {
  const SpecDocument doc = bundled();
  const ManifoldSpec& m = doc.manifold;
  testing::ExprGenerator gen(m.symbols(), 23);
  for (int it = 0; it < kIterations; ++it) {
    Tensor12 gamma(3);
    for (int k = 0; k < 4; ++k) {
      gamma(gen.small_int(0, 2), gen.small_int(0, 2), gen.small_int(0, 2)) = gen.expr();
    }
    const Tensor12 t = torsion(ConnectionTable{gamma, "random"}, m);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        for (std::size_t k = 0; k < 3; ++k) ASSERT_EQ(t(i, j, k), -t(j, i, k));
      }
    }
  }
}

}  // namespace
}  // namespace kenmotsu
