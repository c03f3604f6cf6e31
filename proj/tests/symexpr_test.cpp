#include <gtest/gtest.h>

#include <map>
#include <string>

#include "kenmotsu/parser.hpp"
#include "kenmotsu/printer.hpp"
#include "test_support.hpp"

namespace kenmotsu {
namespace {

constexpr int kIterations = 200;

class SymexprTest : public ::testing::Test {
 protected:
  SymbolTablePtr table = make_symbols({"x", "y", "z"}, {"alpha", "beta"});
  Expr p(const std::string& s) const { return parse(s, table); }
};

TEST_F(SymexprTest, ParsesAtomsAndNegation) {
  EXPECT_TRUE(equals(p("x"), Expr::symbol(table, "x")));
  EXPECT_TRUE(equals(p("-x"), -Expr::symbol(table, "x")));
  EXPECT_EQ(to_string(p("-x")), "-x");
}

TEST_F(SymexprTest, ExpandsBinomialPower) {
  Expr e = p("(1+alpha)^2");
  EXPECT_EQ(to_expanded_string(e), "1+2*alpha+alpha^2");
  EXPECT_TRUE(equals(e, p("alpha^2+2*alpha+1")));
}

TEST_F(SymexprTest, RationalLiteralsAndPrecedence) {
  EXPECT_EQ(*p("3/4").constant_value(), Rational(3, 4));
  EXPECT_TRUE(equals(p("-x^2"), -(p("x") * p("x"))));
  EXPECT_TRUE(equals(p("2*x/4"), p("x/2")));
  EXPECT_TRUE(equals(p("x^-2"), p("1/(x*x)")));
  EXPECT_TRUE(equals(p(" ( x + y ) * z "), p("x*z+y*z")));
}

TEST_F(SymexprTest, ParseErrorsCarryPosition) {
  try {
    p("x + * y");
    FAIL() << "expected a parse error";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 4U);
  }
  EXPECT_THROW(p("x + w"), ParseError);
  EXPECT_THROW(p("x/0"), ParseError);
  EXPECT_THROW(p("x/(y-y)"), ParseError);
  EXPECT_THROW(p("x^y"), ParseError);
  EXPECT_THROW(p("x^(2)"), ParseError);
  EXPECT_THROW(p("x^1.5"), ParseError);
  EXPECT_THROW(p("(x+1"), ParseError);
  EXPECT_THROW(p(""), ParseError);
  EXPECT_THROW(p("0^-1"), ParseError);
}

TEST_F(SymexprTest, FieldArithmeticExamples) {
  EXPECT_TRUE((p("x") + p("-x")).is_zero());
  EXPECT_TRUE(equals(p("(1+alpha)") * p("(3+alpha)"), p("alpha^2+4*alpha+3")));
  EXPECT_THROW(p("x") / Expr(), SymbolicError);
}

TEST_F(SymexprTest, QuotientCancelsCommonFactor) {
  Expr q = p("x^2-1") / p("x-1");
  // Oracle: multiplying back by the divisor restores the dividend.
  EXPECT_TRUE(equals(q * p("x-1"), p("x^2-1")));
  EXPECT_TRUE(equals(q, p("x+1")));
  EXPECT_TRUE(q.denominator().is_constant());
  EXPECT_EQ(to_expanded_string(q), "1+x");
}

TEST_F(SymexprTest, DerivativeExamples) {
  EXPECT_TRUE(equals(p("x^2").diff("x"), p("2*x")));
  EXPECT_TRUE(equals(p("alpha*x").diff("x"), p("alpha")));
  EXPECT_TRUE(p("alpha").diff("x").is_zero());
  EXPECT_THROW(p("alpha*x").diff("alpha"), SymbolicError);
  EXPECT_THROW(p("x").diff("w"), SymbolicError);
}

TEST_F(SymexprTest, DerivativeOfReciprocalMatchesDifferenceQuotient) {
  const Expr f = p("1/x");
  const Expr df = f.diff("x");
  EXPECT_TRUE(equals(df, p("-1/x^2")));
  // Oracle: forward difference quotient at rational points, error O(h).
  const Rational h(1, 1000000);
  for (int k : {1, 2, 3, 5, -7}) {
    const Rational x0(k, 3);
    const Rational fx = f.evaluate({{"x", x0}});
    const Rational fxh = f.evaluate({{"x", x0 + h}});
    const Rational quotient = (fxh - fx) / h;
    const Rational exact = df.evaluate({{"x", x0}});
    EXPECT_LT(abs(quotient - exact), Rational(1, 1000)) << "x0=" << x0;
  }
}

TEST_F(SymexprTest, EqualsExamples) {
  EXPECT_TRUE(equals(p("(x+1)*(x-1)"), p("x^2-1")));
  EXPECT_TRUE(equals(p("-2*alpha^2-8*alpha-6"), p("-2*(1+alpha)*(3+alpha)")));
  EXPECT_TRUE(equals(p("x/y"), p("x*z/(y*z)")));
  EXPECT_FALSE(equals(p("x/y"), p("y/x")));
}

TEST_F(SymexprTest, SubstituteExamples) {
  EXPECT_TRUE(p("alpha^2+alpha").substitute({{"alpha", 0}}).is_zero());
  EXPECT_TRUE(p("(1+alpha)*beta").substitute({{"alpha", 1}, {"beta", 0}}).is_zero());
  const Expr factored = p("-2*(1+alpha)*(3+alpha)");
  const Expr expanded = p("-2*alpha^2-8*alpha-6");
  // Oracle: evaluate both forms numerically at alpha = -1.
  EXPECT_EQ(factored.evaluate({{"alpha", -1}}), 0);
  EXPECT_EQ(expanded.evaluate({{"alpha", -1}}), 0);
  EXPECT_TRUE(factored.substitute({{"alpha", -1}}).is_zero());
  EXPECT_THROW(p("1/(alpha+1)").substitute({{"alpha", -1}}), SymbolicError);
  // Substitution is simultaneous.
  EXPECT_TRUE(equals(p("x-y").substitute({{"x", p("y")}, {"y", p("x")}}), p("y-x")));
}

TEST_F(SymexprTest, CanonicalForm) {
  const Expr a = p("(2*x+2)/(4*y)");
  EXPECT_EQ(a.denominator(), p("y").numerator());
  const Expr b = p("x/(-y)");
  EXPECT_GT(b.denominator().leading_coefficient(), 0);
  EXPECT_TRUE(Expr().denominator().is_constant());
  EXPECT_TRUE((p("x/y") - p("x/y")).denominator().is_constant());
  // Re-normalizing a canonical Expr is a no-op.
  const Expr c = p("(x^2*y-y)/(x*y+y)");
  const Expr again(c.table(), c.numerator(), c.denominator());
  EXPECT_EQ(again.numerator(), c.numerator());
  EXPECT_EQ(again.denominator(), c.denominator());
}

TEST_F(SymexprTest, FactoredPrinting) {
  EXPECT_EQ(to_string(p("-2*alpha^2-8*alpha-6")), "-2*(1+alpha)*(3+alpha)");
  EXPECT_EQ(to_string(p("-(1+alpha)*beta")), "-(1+alpha)*beta");
  EXPECT_EQ(to_string(p("alpha^2+2*alpha+1")), "(1+alpha)^2");
  EXPECT_EQ(to_string(p("1+alpha")), "1+alpha");
  EXPECT_EQ(to_string(p("-1/x^2")), "-1/x^2");
  EXPECT_EQ(to_string(p("(1+x)/(x*y)")), "(1+x)/(x*y)");
  EXPECT_EQ(to_string(p("x/2")), "1/2*x");
  EXPECT_EQ(to_string(p("0")), "0");
  EXPECT_EQ(to_string(p("1+beta^2")), "1+beta^2");
}

TEST_F(SymexprTest, GcdOfMultivariatePolynomials) {
  const Polynomial a = p("(x+y)*(alpha-1)*(x^2+beta)").numerator();
  const Polynomial b = p("(x+y)*(alpha-1)*(y+3)").numerator();
  const Polynomial g = poly::gcd(a, b);
  EXPECT_TRUE(poly::divide_exact(g, p("(x+y)*(alpha-1)").numerator().monic()).has_value());
  EXPECT_EQ(g, p("(x+y)*(alpha-1)").numerator().monic());
}

// Properties on random rational functions.

class SymexprPropertyTest : public SymexprTest {
 protected:
  testing::ExprGenerator gen{table, 20261015U};
};

TEST_F(SymexprPropertyTest, FieldAxioms) {
  for (int i = 0; i < kIterations; ++i) {
    const Expr a = gen.expr();
    const Expr b = gen.expr();
    const Expr c = gen.expr();
    EXPECT_TRUE(equals(a + b, b + a));
    EXPECT_TRUE(equals(a * b, b * a));
    EXPECT_TRUE(equals((a + b) + c, a + (b + c)));
    EXPECT_TRUE(equals((a * b) * c, a * (b * c)));
    EXPECT_TRUE(equals(a * (b + c), a * b + a * c));
    EXPECT_TRUE((a + (-a)).is_zero());
    if (!a.is_zero()) EXPECT_TRUE(equals(a * (Expr(1) / a), Expr(1)));
  }
}

TEST_F(SymexprPropertyTest, LeibnizRule) {
  for (int i = 0; i < kIterations; ++i) {
    const Expr a = gen.expr();
    const Expr b = gen.expr();
    for (const char* v : {"x", "y"}) {
      EXPECT_TRUE(equals((a * b).diff(v), a.diff(v) * b + a * b.diff(v)));
    }
  }
}

TEST_F(SymexprPropertyTest, SubstitutionIsAHomomorphism) {
  for (int i = 0; i < kIterations; ++i) {
    const Expr a = gen.expr();
    const Expr b = gen.expr();
    const Expr image(table, gen.nonzero_polynomial(), Polynomial(table->size(), 1));
    const std::map<std::string, Expr> s{{"alpha", Expr(gen.rational())}, {"x", image}};
    try {
      const Expr sa = a.substitute(s);
      const Expr sb = b.substitute(s);
      EXPECT_TRUE(equals((a + b).substitute(s), sa + sb));
      EXPECT_TRUE(equals((a * b).substitute(s), sa * sb));
    } catch (const SymbolicError&) {
      // Substitution hit a pole; nothing to compare.
    }
  }
}

TEST_F(SymexprPropertyTest, NormalizationPreservesValues) {
  for (int i = 0; i < kIterations; ++i) {
    const Polynomial n = gen.polynomial();
    const Polynomial d = gen.nonzero_polynomial();
    const Expr e(table, n, d);
    std::vector<Rational> point;
    std::map<std::string, Rational> named;
    for (const auto& name : table->names()) {
      point.push_back(gen.rational());
      named[name] = point.back();
    }
    const Rational dv = d.evaluate(point);
    if (dv == 0) continue;
    EXPECT_EQ(e.evaluate(named), n.evaluate(point) / dv);
  }
}

TEST_F(SymexprPropertyTest, NormalizeIsIdempotent) {
  for (int i = 0; i < kIterations; ++i) {
    const Expr e = gen.expr();
    const Expr again(e.table(), e.numerator(), e.denominator());
    EXPECT_EQ(again.numerator(), e.numerator());
    EXPECT_EQ(again.denominator(), e.denominator());
  }
}

TEST_F(SymexprPropertyTest, PrintParseRoundTrip) {
  for (int i = 0; i < kIterations; ++i) {
    const Expr e = gen.expr();
    EXPECT_TRUE(equals(parse(to_string(e), table), e)) << to_string(e);
    EXPECT_TRUE(equals(parse(to_expanded_string(e), table), e)) << to_expanded_string(e);
  }
}

}  // namespace
}  // namespace kenmotsu

namespace kenmotsu {
namespace {

TEST_F(SymexprPropertyTest, CommonFactorsCancelToTheSameCanonicalForm) {
  for (int i = 0; i < kIterations; ++i) {
    const Polynomial n = gen.polynomial();
    const Polynomial d = gen.nonzero_polynomial();
    const Polynomial r = gen.nonzero_polynomial();
    const Expr plain(table, n, d);
    const Expr padded(table, n * r, d * r);
    EXPECT_EQ(padded.numerator(), plain.numerator());
    EXPECT_EQ(padded.denominator(), plain.denominator());
    EXPECT_TRUE(poly::divide_exact(poly::gcd(n * r, d * r), r.monic()).has_value());
  }
}

}  // namespace
}  // namespace kenmotsu
