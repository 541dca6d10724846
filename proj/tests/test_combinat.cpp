#include <gtest/gtest.h>

#include "printers.hpp"

#include "goldens.hpp"
#include "postlie/combinat.hpp"

using namespace postlie;

TEST(Bernoulli, FirstValues) {
  EXPECT_EQ(bernoulli(0), 1);
  EXPECT_EQ(bernoulli(1), Q(-1, 2));
  EXPECT_EQ(bernoulli(2), Q(1, 6));
  EXPECT_EQ(bernoulli(3), 0);
  EXPECT_EQ(bernoulli(4), Q(-1, 30));
  EXPECT_EQ(bernoulli(12), Q(-691, 2730));
}

TEST(B1, ReferenceTable) {
  auto table = golden::b1_table();
  for (int m = 1; m <= 10; ++m)
    for (int n = 1; n <= m; ++n) EXPECT_EQ(b1(m, n), table[m - 1][n - 1]) << "B1(" << m << "," << n << ")";
}

TEST(B1, ClosedFacts) {
  for (int r = 1; r <= 12; ++r) EXPECT_EQ(b1(r, 1), 1 / factorial(r));
  for (int r = 2; r <= 12; ++r) EXPECT_EQ(b1(r, r), 0);
  for (int m = 2; m <= 12; ++m)
    for (int n = 1; n <= m; ++n) {
      Q s = 0;
      for (int k = n; k < m; ++k) s -= bernoulli(k) / (factorial(k) * factorial(m - k));
      EXPECT_EQ(b1(m, n), s);
    }
}

TEST(BT, ScalesByPower) {
  for (int m = 1; m <= 6; ++m)
    for (int n = 1; n <= m; ++n) {
      EXPECT_EQ(b_t(m, n, Q(1)), b1(m, n));
      EXPECT_EQ(b_t(m, n, Q(2)), b1(m, n) * Q(1 << (m - 1)));
    }
}

TEST(Threshold, Definition) {
  EXPECT_EQ(threshold(3, {1, 2, 4}), 2);
  EXPECT_EQ(threshold(4, {1, 2, 4}), 3);
  EXPECT_EQ(threshold(1, {1, 2, 4}), 1);
  EXPECT_EQ(threshold(8, {1, 2, 4}), 0);
  EXPECT_EQ(threshold(1, {}), 0);
}

TEST(UriMult, MatchesB1) {
  EXPECT_EQ(uri_mult(3, {1, 2, 4}), b1(3, 2));
  EXPECT_EQ(uri_mult(1, {5}), 1);
}

TEST(FamilyMult, ZeroOutsideCompositions) {
  auto B = uri_family();
  EXPECT_EQ(family_mult(B, 2, {1, 0, 3}), 0);
  EXPECT_EQ(family_mult(B, 0, {1, 3}), 0);
  EXPECT_EQ(family_mult(B, 9, {1, 3}), 0);
  EXPECT_EQ(family_mult(B, 2, {1, 3}), b1(2, 2));
}

TEST(Compositions, Counts) {
  EXPECT_EQ(compositions(5).size(), 16u);
  EXPECT_EQ(compositions(6, 3).size(), 10u);
  EXPECT_EQ(weak_compositions(3, 2).size(), 4u);
  auto all = compositions(4);
  EXPECT_EQ(all.front(), Composition({4}));
  EXPECT_EQ(all.back(), Composition({1, 1, 1, 1}));
}

TEST(AriMult, SmallValues) {
  EXPECT_EQ(ari_mult({}, {}), 1);
  EXPECT_EQ(ari_mult({3}, {3}), 1);
  EXPECT_EQ(ari_mult({3}, {-1}), 0);
  EXPECT_THROW(ari_mult({1, 2}, {1}), std::invalid_argument);
}

// With a = 0 the multiplicity identity needs b >= |k|; a = 0, b = 0, k = (1) breaks it.
TEST(AriMult, IdentityFailsAtAZero) {
  auto m1 = [](int a, int b) { return ari_mult({a}, {b}); };
  int a = 0, b = 0;
  Q lhs = 0;
  for (int r = 0; r <= 1; ++r) lhs += ((1 + r) % 2 ? Q(-1) : Q(1)) * ari_mult({2}, {r + 1}) * m1(a + 1 - r, b);
  EXPECT_EQ(lhs, 1);
  EXPECT_EQ(m1(a, b - 1), 0);
}

TEST(IndexShuffle, Basic) {
  auto s = index_shuffle(Index{1}, Index{2});
  EXPECT_EQ(s.size(), 2u);
  EXPECT_EQ(s.at({1, 2}), 1);
  EXPECT_EQ(s.at({2, 1}), 1);
}

TEST(IndexReverse, Signed) {
  auto s = index_reverse_signed({1, 2, 3});
  ASSERT_EQ(s.size(), 1u);
  EXPECT_EQ(s.at({3, 2, 1}), -1);
}
