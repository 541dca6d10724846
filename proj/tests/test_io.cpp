#include <gtest/gtest.h>

#include "printers.hpp"

#include <random>

#include "postlie/io.hpp"

using namespace postlie;

TEST(Parse, Terms) {
  Poly p = parse_poly("3/2*v1.v2 - v0 + 2");
  EXPECT_EQ(p.coeff({1, 2}), Q(3, 2));
  EXPECT_EQ(p.coeff({0}), -1);
  EXPECT_EQ(p.coeff({}), 2);
  EXPECT_EQ(parse_poly("1"), Poly::one());
  EXPECT_EQ(parse_poly("-1*1"), -Poly::one());
  EXPECT_EQ(parse_poly("v1 - v1"), Poly());
  EXPECT_EQ(parse_poly("  v12 "), Poly::letter(12));
}

TEST(Parse, ErrorPositions) {
  auto pos = [](const std::string& s) {
    try {
      parse_poly(s);
    } catch (const ParseError& e) {
      return static_cast<long>(e.pos());
    }
    return -1L;
  };
  EXPECT_EQ(pos("v1.x2"), 3);
  EXPECT_EQ(pos("v1 v2"), 3);
  EXPECT_EQ(pos("2/0*v1"), 0);
  EXPECT_EQ(pos(""), 0);
  EXPECT_EQ(pos("v"), 1);
}

TEST(Parse, BiLetters) {
  BiPoly p = parse_bipoly("C3_0.C2_1 - 1/4*C1_0");
  EXPECT_EQ(p.coeff({c_code({3, 0}), c_code({2, 1})}), 1);
  EXPECT_EQ(p.coeff({c_code({1, 0})}), Q(-1, 4));
  EXPECT_THROW(parse_bipoly("C0_1"), ParseError);
  EXPECT_THROW(parse_bipoly("C3"), ParseError);
}

TEST(Parse, LetterSet) {
  EXPECT_EQ(parse_letter_set("0,2"), (std::set<Letter>{0, 2}));
  EXPECT_EQ(parse_letter_set("v0, v3"), (std::set<Letter>{0, 3}));
  EXPECT_THROW(parse_letter_set(""), ParseError);
}

TEST(Format, Canonical) {
  EXPECT_EQ(format_poly(Poly()), "0");
  EXPECT_EQ(format_poly(parse_poly("v2 - 1/3*v1.v1 + 1")), "1 + v2 - 1/3*v1.v1");
  Tensor2 t;
  t.add({1}, {}, -2);
  EXPECT_EQ(format_tensor(t), "-2*v1 (x) 1");
}

TEST(Format, RandomRoundTrip) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 300; ++trial) {
    Poly p;
    int terms = rng() % 6;
    for (int t = 0; t < terms; ++t) {
      Word w(rng() % 4);
      for (auto& l : w) l = rng() % 12;
      Q c(static_cast<long>(rng() % 21) - 10, static_cast<long>(rng() % 7) + 1);
      c.canonicalize();
      p.add(w, c);
    }
    EXPECT_EQ(parse_poly(format_poly(p)), p) << format_poly(p);
    EXPECT_EQ(poly_from_json(poly_to_json(p)), p);
  }
}

TEST(Format, BiPolyRoundTrip) {
  BiPoly p = parse_bipoly("C10_2.C1_0 - 7/3*C2_1 + C1_0.C1_0.C1_1");
  EXPECT_EQ(parse_bipoly(format_bipoly(p)), p);
}
