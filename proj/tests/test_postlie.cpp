#include <gtest/gtest.h>

#include "printers.hpp"

#include "goldens.hpp"
#include "postlie/io.hpp"
#include "postlie/postlie.hpp"

using namespace postlie;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }

}  // namespace

TEST(TriangleAri, WordOnLetterExample) {
  TriangleEngine e(Structure::ari());
  EXPECT_EQ(extend_tr(e, P("v2.v3"), P("v3")), golden::tr_ari_v2v3_v3());
}

TEST(TriangleAri, LetterOnLetter) {
  TriangleEngine e(Structure::ari());
  EXPECT_EQ(extend_tr(e, P("v2"), P("v1")), P("2*v1.v2 - 2*v2.v1"));
  EXPECT_EQ(tr_letter_ari(P("v2"), 1), P("2*v1.v2 - 2*v2.v1"));
}

TEST(TriangleIhara, DiffersFromNaiveDerivation) {
  TriangleEngine e(Structure::ihara());
  EXPECT_EQ(extend_tr(e, P("v0.v1"), P("v1")), golden::tr_ihara_v0v1_v1());
}

TEST(TriangleIhara, RestrictedToTwoLetters) {
  TriangleEngine e(Structure::ihara());
  Poly a = bracket(P("v0"), P("v1"));
  EXPECT_TRUE(extend_tr(e, a, P("v0")).is_zero());
  EXPECT_EQ(extend_tr(e, a, P("v1")), bracket(P("v1"), a));
}

TEST(TriangleIhara, LargerV0) {
  TriangleEngine e(Structure::ihara({0, 2}));
  EXPECT_TRUE(extend_tr(e, P("v1"), P("v2")).is_zero());
  EXPECT_EQ(extend_tr(e, P("v1"), P("v3")), bracket(P("v3"), P("v1")));
}

TEST(ExtensionRules, UnitAndConstants) {
  TriangleEngine e(Structure::ari());
  EXPECT_EQ(extend_tr(e, P("1"), P("v2.v1")), P("v2.v1"));
  EXPECT_TRUE(extend_tr(e, P("v2"), P("1")).is_zero());
}

TEST(ExtensionRules, LieActsAsDerivation) {
  TriangleEngine e(Structure::ari());
  Poly t = bracket(P("v1"), P("v2")), x = P("v3"), y = P("v1.v0");
  EXPECT_EQ(e.lie_on_poly(t, conc(x, y)), conc(e.lie_on_poly(t, x), y) + conc(x, e.lie_on_poly(t, y)));
}

TEST(PostLieBracket, RejectsNonLie) {
  TriangleEngine e(Structure::ari());
  EXPECT_THROW(post_lie_bracket(e, P("v1.v2"), P("v3")), std::invalid_argument);
}

TEST(PostLieBracket, PeriodRelation) {
  TriangleEngine e(Structure::ari());
  auto b = [&](Letter x, Letter y) { return post_lie_bracket(e, Poly::letter(x), Poly::letter(y)); };
  EXPECT_TRUE((b(5, 7) - Q(1, 3) * b(3, 9)).is_zero());
  EXPECT_FALSE(b(3, 9).is_zero());
}

TEST(PostLieAxioms, AllStructuresSmallTriples) {
  for (auto s : {Structure::ihara(), Structure::ari(), Structure::uri()}) {
    TriangleEngine e(s);
    std::vector<Poly> xs = {P("v1"), P("v2"), P("v0"), bracket(P("v1"), P("v0")), bracket(P("v2"), P("v1"))};
    for (const auto& x : xs)
      for (const auto& y : xs)
        for (const auto& z : xs) {
          EXPECT_EQ(e.lie_on_poly(x, bracket(y, z)),
                    bracket(e.lie_on_poly(x, y), z) + bracket(y, e.lie_on_poly(x, z)))
              << s.name();
          Poly rhs = e.lie_on_poly(x, e.lie_on_poly(y, z)) - e.lie_on_poly(e.lie_on_poly(x, y), z) -
                     e.lie_on_poly(y, e.lie_on_poly(x, z)) + e.lie_on_poly(e.lie_on_poly(y, x), z);
          EXPECT_EQ(e.lie_on_poly(bracket(x, y), z), rhs) << s.name();
        }
  }
}

TEST(TriangleUri, DepthGradedPartIsAri) {
  TriangleEngine u(Structure::uri()), a(Structure::ari());
  for (const Word& w : words_up_to(4)) {
    if (w.empty()) continue;
    for (Letter v = 0; v <= 3; ++v) {
      Poly r = u.word_on_letter(w, v), lowest;
      for (const auto& [x, c] : r.terms()) {
        ASSERT_GE(depth(x), depth(w) + 1);
        if (depth(x) == depth(w) + 1) lowest.add(x, c);
      }
      EXPECT_EQ(lowest, a.word_on_letter(w, v)) << word_to_string(w) << " " << v;
    }
  }
}

TEST(TriangleUri, ConjecturalFormulaMatchesRecursion) {
  TriangleEngine u(Structure::uri());
  for (const Word& w : words_up_to(5))
    for (Letter v = 1; v <= 3; ++v)
      if (!w.empty()) EXPECT_EQ(tr_uri_conjectural(w, v), u.word_on_letter(w, v)) << word_to_string(w);
}
