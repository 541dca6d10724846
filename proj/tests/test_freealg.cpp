#include <gtest/gtest.h>

#include "printers.hpp"

#include "postlie/freealg.hpp"
#include "postlie/io.hpp"

using namespace postlie;

namespace {

Poly P(const std::string& s) { return parse_poly(s); }

}  // namespace

TEST(Shuffle, TwoLetters) {
  EXPECT_EQ(shuffle(P("v1"), P("v2")), P("v1.v2 + v2.v1"));
  EXPECT_EQ(shuffle(P("v1"), P("v1")), P("2*v1.v1"));
  EXPECT_EQ(shuffle(P("1"), P("v3.v4")), P("v3.v4"));
}

TEST(Shuffle, CountsBinomial) {
  Poly s = shuffle_words({1, 2, 3}, {4, 5});
  EXPECT_EQ(s.size(), 10u);
  for (const auto& [w, c] : s.terms()) EXPECT_EQ(c, 1);
}

TEST(Conc, Associative) {
  Poly a = P("v1 + 2*v2.v3"), b = P("v0 - v4"), c = P("1/2*v5.v5 + 1");
  EXPECT_EQ(conc(conc(a, b), c), conc(a, conc(b, c)));
}

TEST(Coproduct, DeshuffleOfWord) {
  Tensor2 t = coproduct_sh(P("v1.v2"));
  EXPECT_EQ(t.size(), 4u);
  EXPECT_EQ(t.coeff({1}, {2}), 1);
  EXPECT_EQ(t.coeff({2}, {1}), 1);
  EXPECT_EQ(t.coeff({}, {1, 2}), 1);
  EXPECT_EQ(t.coeff({1, 2}, {}), 1);
}

TEST(Coproduct, IsAlgebraMorphismForConc) {
  Poly a = P("v1.v0"), b = P("v2 + v3.v1");
  EXPECT_EQ(coproduct_sh(conc(a, b)), coproduct_sh_conc(coproduct_sh(a), coproduct_sh(b)));
}

TEST(Antipode, Word) {
  EXPECT_EQ(antipode(P("v1.v2.v3")), P("-v3.v2.v1"));
  EXPECT_EQ(antipode(P("v1.v2")), P("v2.v1"));
  EXPECT_EQ(antipode(P("1")), P("1"));
}

TEST(Antipode, ConvolutionIsCounit) {
  for (const Word& w : words_up_to(4)) {
    if (w.empty()) continue;
    Poly acc;
    Tensor2 t = coproduct_sh(Poly::word(w));
    for (const auto& [k, c] : t.terms())
      acc.add_scaled(conc(antipode(Poly::word(k.first)), Poly::word(k.second)), c);
    EXPECT_TRUE(acc.is_zero()) << word_to_string(w);
  }
}

TEST(Lie, BracketsArePrimitive) {
  Poly x = bracket(P("v1"), bracket(P("v0"), P("v2")));
  EXPECT_TRUE(is_lie_element(x));
  EXPECT_TRUE(is_lie_element(P("v3")));
  EXPECT_FALSE(is_lie_element(P("v1.v2")));
  EXPECT_FALSE(is_lie_element(P("v1.v1")));
}

TEST(Lie, NestedBracketMatchesDirect) {
  Poly direct = bracket(bracket(P("v1"), P("v2")), P("v0"));
  EXPECT_EQ(nested_bracket(1, {P("v2"), P("v0")}), direct);
}

TEST(Pairing, DualBases) {
  EXPECT_EQ(pairing(P("2*v1.v2 + v3"), P("v1.v2 - v3")), 1);
}

TEST(Basis, WordCountsFollowLetterWeights) {
  // v0 and v1 weigh 1, v_k weighs k for k >= 2
  std::vector<std::size_t> a{1};
  for (int n = 1; n <= 7; ++n) {
    std::size_t c = 2 * a[n - 1];
    for (int k = 2; k <= n; ++k) c += a[n - k];
    a.push_back(c);
    EXPECT_EQ(basis_words(n).size(), c) << n;
    for (const Word& w : basis_words(n)) EXPECT_EQ(weight(w), n);
  }
}
