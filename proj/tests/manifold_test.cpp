#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "kenmotsu/manifold.hpp"
#include "kenmotsu/spec_file.hpp"
#include "spec_support.hpp"
#include "test_support.hpp"

namespace kenmotsu {
namespace {

using testing::bundled;
using testing::e;

constexpr int kIterations = 100;

nlohmann::json minimal_spec() {
  return nlohmann::json::parse(R"({
    "name": "t",
    "dimension": 3,
    "coordinates": ["x", "y", "z"],
    "frame": [["1", "0", "0"], ["0", "1", "0"], ["0", "0", "1"]],
    "contact": {"phi": [["0", "-1", "0"], ["1", "0", "0"], ["0", "0", "0"]], "xi": ["0", "0", "1"]}
  })");
}

std::string load_error(const nlohmann::json& doc) {
  try {
    load_spec(doc);
  } catch (const SpecError& err) {
    return err.what();
  }
  return "";
}

TEST(ManifoldTest, LoadsBundledSpec) {
  const SpecDocument doc = bundled();
  const ManifoldSpec& m = doc.manifold;
  EXPECT_EQ(m.name(), "kenmotsu3d");
  EXPECT_EQ(m.dimension(), 3u);
  ASSERT_TRUE(m.frame().has_value());
  const Expr x = m.symbol("x");
  EXPECT_EQ((*m.frame())(0, 2), x);
  EXPECT_EQ((*m.frame())(1, 1), x);
  EXPECT_EQ((*m.frame())(2, 0), -x);
  EXPECT_TRUE((*m.frame())(0, 0).is_zero());
  EXPECT_EQ(m.parameters(), (std::vector<std::string>{"alpha", "beta"}));
}

TEST(ManifoldTest, LieBracketsOfTheBundledFrame) {
  const ManifoldSpec m = bundled().manifold;
  EXPECT_EQ(m.lie_bracket(0, 2), e(3, 1));
  EXPECT_EQ(m.lie_bracket(1, 2), e(3, 2));
  EXPECT_TRUE(m.lie_bracket(0, 1).is_zero());
  for (std::size_t i = 0; i < 3; ++i) EXPECT_TRUE(m.lie_bracket(i, i).is_zero());
  EXPECT_EQ(m.lie_bracket(2, 0), -e(3, 1));
}

TEST(ManifoldTest, DirectionalDerivatives) {
  const ManifoldSpec m = bundled().manifold;
  const Expr x = m.symbol("x");
  EXPECT_EQ(m.directional_derivative(e(3, 3), x), -x);
  EXPECT_TRUE(m.directional_derivative(e(3, 1), x).is_zero());
  EXPECT_TRUE(m.directional_derivative(e(3, 2), Expr(Rational(7, 3))).is_zero());
  EXPECT_TRUE(m.directional_derivative(e(3, 3), m.symbol("alpha")).is_zero());
  // E1 + E3 applied to x z.
  EXPECT_EQ(m.directional_derivative(e(3, 1) + e(3, 3), m.parse("x*z")), m.parse("x^2 - x*z"));
}

TEST(ManifoldTest, MetricDefaultsToIdentity) {
  const ManifoldSpec m = bundled().manifold;
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(m.metric()(i, j), Expr(i == j ? 1 : 0));
  }
  EXPECT_EQ(m.inner(e(3, 1) + e(3, 2), e(3, 2)), Expr(1));
}

TEST(ManifoldTest, ExplicitMetricAndInverse) {
  auto doc = minimal_spec();
  doc["metric"] = {{"2", "1", "0"}, {"1", "1", "0"}, {"0", "0", "x^2"}};
  const ManifoldSpec m = load_spec(doc).manifold;
  EXPECT_EQ(m.inverse_metric()(0, 0), Expr(1));
  EXPECT_EQ(m.inverse_metric()(0, 1), Expr(-1));
  EXPECT_EQ(m.inverse_metric()(1, 1), Expr(2));
  EXPECT_EQ(m.inverse_metric()(2, 2), m.parse("1/x^2"));
}

TEST(ManifoldTest, ValidationErrors) {
  auto expect_error = [](nlohmann::json doc, const std::string& fragment) {
    const std::string msg = load_error(doc);
    EXPECT_NE(msg.find(fragment), std::string::npos) << "got: '" << msg << "'";
  };
  auto doc = minimal_spec();
  doc["frame"][1] = {"0", "1"};
  expect_error(doc, "frame row 2 has 2 entries, expected 3");

  doc = minimal_spec();
  doc["metric"] = {{"1", "2", "0"}, {"0", "1", "0"}, {"0", "0", "1"}};
  expect_error(doc, "metric is not symmetric");

  doc = minimal_spec();
  doc["metric"] = {{"1", "1", "0"}, {"1", "1", "0"}, {"0", "0", "1"}};
  expect_error(doc, "metric is not invertible");

  doc = minimal_spec();
  doc["frame"][0] = {"x", "y", "w"};
  expect_error(doc, "unknown identifier 'w'");

  doc = minimal_spec();
  doc["frame"][2] = {"0", "0", "1/(x-x)"};
  expect_error(doc, "division by zero");

  doc = minimal_spec();
  doc["frame"][2] = {"0", "0", "0"};
  expect_error(doc, "frame matrix is not invertible");

  doc = minimal_spec();
  doc["dimension"] = 2;
  expect_error(doc, "dimension is 2 but 3 coordinates");

  doc = minimal_spec();
  doc["torsion"] = "yes";
  expect_error(doc, "unknown key 'torsion'");

  doc = minimal_spec();
  doc.erase("frame");
  expect_error(doc, "either 'frame' or 'structure_functions' is required");

  doc = minimal_spec();
  doc["structure_functions"] = {{"1,2", {"0", "0", "1"}}};
  expect_error(doc, "disagrees with the frame");

  doc = minimal_spec();
  doc["structure_functions"] = {{"1,4", {"0", "0", "1"}}};
  expect_error(doc, "key '1,4'");

  doc = minimal_spec();
  doc.erase("frame");
  doc["structure_functions"] = {{"1,3", {"x", "0", "0"}}};
  expect_error(doc, "structure functions depend on coordinates");

  doc = minimal_spec();
  doc.erase("frame");
  doc["structure_functions"] = {{"1,3", {"1", "0", "0"}}, {"3,1", {"1", "0", "0"}}};
  expect_error(doc, "not antisymmetric");

  doc = minimal_spec();
  doc["coordinates"] = {"x", "y", "alpha"};
  expect_error(doc, "symbol 'alpha' is declared twice");

  EXPECT_THROW(load_spec_file("/nonexistent/spec.json"), SpecError);
  EXPECT_THROW(load_spec_text("{\"name\": "), SpecError);
}

TEST(ManifoldTest, StructureFunctionsOnlyMode) {
  auto doc = minimal_spec();
  doc.erase("frame");
  doc.erase("coordinates");
  doc["structure_functions"] = {{"1,3", {"alpha", "0", "0"}}, {"2,3", {"0", "alpha", "0"}}};
  const ManifoldSpec m = load_spec(doc).manifold;
  EXPECT_FALSE(m.frame().has_value());
  EXPECT_EQ(m.lie_bracket(0, 2), m.symbol("alpha") * e(3, 1));
  EXPECT_EQ(m.lie_bracket(2, 1), -m.symbol("alpha") * e(3, 2));
  EXPECT_TRUE(jacobi_defect(m).is_zero());
}

TEST(ManifoldTest, JacobiHoldsOnBundledSpecs) {
  for (const char* name : {"kenmotsu3d.json", "flat3d.json", "perturbed3d.json"}) {
    EXPECT_TRUE(jacobi_defect(bundled(name).manifold).is_zero()) << name;
  }
}

// Random upper-triangular coordinate frames on R^3 with polynomial entries
// and nonvanishing diagonal.
class RandomFrameTest : public ::testing::Test {
 protected:
  ManifoldSpec random_frame(unsigned seed) {
    const auto table = make_symbols({"x", "y", "z"}, {"alpha", "beta"});
    testing::ExprGenerator gen(table, seed);
    const std::vector<std::string> atoms{"1", "2", "x", "y", "z", "alpha", "x*y", "1+z"};
    ExprMatrix f(3);
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t a = i; a < 3; ++a) {
        if (a == i) {
          f(i, a) = parse(atoms[gen.small_int(0, 4)], table) * Expr(gen.small_int(1, 3));
        } else if (gen.small_int(0, 2) > 0) {
          f(i, a) = parse(atoms[gen.small_int(0, 7)], table) * Expr(gen.small_int(-2, 2));
        }
      }
    }
    return ManifoldSpec("random", {"x", "y", "z"}, {"alpha", "beta"}, f, std::nullopt, std::nullopt, "",
                        table);
  }
};

TEST_F(RandomFrameTest, BracketsAgreeWithCommutatorsOfDerivations) {
  for (int it = 0; it < kIterations; ++it) {
    const ManifoldSpec m = random_frame(1000 + it);
    const std::vector<Expr> probes{m.parse("x"), m.parse("y"), m.parse("z"), m.parse("x*y + z^2")};
    for (std::size_t i = 0; i < 3; ++i) {
      for (std::size_t j = 0; j < 3; ++j) {
        const FrameVec b = m.lie_bracket(i, j);
        EXPECT_EQ(b, -m.lie_bracket(j, i));
        for (const Expr& f : probes) {
          const Expr lhs = m.frame_derivative(i, m.frame_derivative(j, f)) -
                           m.frame_derivative(j, m.frame_derivative(i, f));
          ASSERT_EQ(lhs, m.directional_derivative(b, f)) << "seed " << 1000 + it;
        }
      }
    }
  }
}

TEST_F(RandomFrameTest, JacobiIdentity) {
  for (int it = 0; it < kIterations; ++it) {
    const ManifoldSpec m = random_frame(5000 + it);
    ASSERT_TRUE(jacobi_defect(m).is_zero()) << "seed " << 5000 + it;
  }
}

}  // namespace
}  // namespace kenmotsu
