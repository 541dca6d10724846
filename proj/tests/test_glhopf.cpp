#include <gtest/gtest.h>

#include "printers.hpp"

#include <memory>

#include "goldens.hpp"
#include "postlie/glhopf.hpp"
#include "postlie/io.hpp"

using namespace postlie;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }

}  // namespace

TEST(GlpAri, ExampleAsComputed) {
  TriangleEngine e(Structure::ari());
  EXPECT_EQ(glp(e, P("v2.v3"), P("v1.v0")), golden::glp_ari_v2v3_v1v0_computed());
  EXPECT_EQ(glp_ari_fast(P("v2.v3"), {1, 0}), golden::glp_ari_v2v3_v1v0_computed());
}

// The reference expansion differs in the coefficients of v3.v1.v2.v0 and v3.v2.v1.v0.
TEST(GlpAri, ReferenceExampleDiffersInTwoCoefficients) {
  Poly d = golden::glp_ari_v2v3_v1v0_computed() - golden::glp_ari_v2v3_v1v0();
  EXPECT_EQ(d, P("4*v3.v1.v2.v0 - 4*v3.v2.v1.v0"));
}

// The dual coproduct pins the two disputed coefficients independently of the product.
TEST(GlpAri, DisputedCoefficientsFromCoproduct) {
  EXPECT_EQ(coprod_a(P("v3.v1.v2.v0")).coeff({2, 3}, {1, 0}), 2);
  EXPECT_EQ(coprod_a(P("v3.v2.v1.v0")).coeff({2, 3}, {1, 0}), 1);
}

TEST(GlpIhara, FastFormAgrees) {
  TriangleEngine e(Structure::ihara({0, 2}));
  for (const Word& w : words_up_to(3))
    for (const Word& a : words_up_to(3))
      EXPECT_EQ(glp(e, Poly::word(a), Poly::word(w)), glp_ihara_fast(Poly::word(a), w, {0, 2}));
}

TEST(Glp, UnitAndAssociativity) {
  TriangleEngine e(Structure::uri());
  Poly a = P("v2 + v1.v0"), b = P("v3"), c = P("v1.v1");
  EXPECT_EQ(glp(e, P("1"), a), a);
  EXPECT_EQ(glp(e, a, P("1")), a);
  EXPECT_EQ(glp(e, glp(e, a, b), c), glp(e, a, glp(e, b, c)));
}

TEST(CoprodIhara, Example) {
  Tensor2 t = coprod_I(P("v1.v2.v3.v0"), {0});
  EXPECT_EQ(t, golden::coprod_ihara_v1v2v3v0());
  EXPECT_EQ(coprod_I_gon(P("v1.v2.v3.v0"), {0}), t);
}

TEST(CoprodAri, ExampleWithBoundaryTerms) {
  Word w = {2, 2, 1, 3};
  Tensor2 full = coprod_a(Poly::word(w));
  Tensor2 boundary;
  boundary.add({}, w, 1);
  boundary.add(w, {}, 1);
  EXPECT_EQ(full - boundary, golden::coprod_ari_v2v2v1v3());
  auto e = std::make_shared<TriangleEngine>(Structure::ari());
  EXPECT_EQ(Dualizer(e, 8).coproduct(Poly::word(w)), full);
}

TEST(Dualizer, WeightBound) {
  auto e = std::make_shared<TriangleEngine>(Structure::uri());
  Dualizer d(e, 4);
  EXPECT_NO_THROW(d.coproduct(P("v2.v2")));
  EXPECT_THROW(d.coproduct(P("v3.v2")), WeightBoundError);
}

TEST(Dualizer, UriDualToProduct) {
  auto e = std::make_shared<TriangleEngine>(Structure::uri());
  Dualizer d(e, 5);
  for (const Word& a : words_up_to(3))
    for (const Word& b : words_up_to(5 - weight(a))) {
      Poly p = glp(*e, Poly::word(a), Poly::word(b));
      for (const auto& [c, k] : p.terms()) EXPECT_EQ(d.coproduct(Poly::word(c)).coeff(a, b), k);
    }
}

TEST(Filtration, IndMaxAndKLevel) {
  EXPECT_EQ(ind_max({1, 3, 2}), 3);
  EXPECT_EQ(ind_max({}), 0);
  EXPECT_EQ(k_level({1, 3, 3, 2}, 3), 2);
  Word w = {3, 1, 2};
  EXPECT_TRUE(filtration_check(w, glp_ari_fast(P("v2"), w), FiltrationMode::IndMaxLower));
  EXPECT_TRUE(filtration_check(w, coprod_a(Poly::word(w)), FiltrationMode::IndMaxUpper));
  EXPECT_TRUE(filtration_check(w, coprod_a(Poly::word(w)), FiltrationMode::KLevel));
}
