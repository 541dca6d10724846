#include <gtest/gtest.h>

#include "printers.hpp"

#include "goldens.hpp"
#include "postlie/verifier.hpp"

using namespace postlie;

TEST(ThresholdRelation, FirstExample) {
  EXPECT_EQ(threshold_relation_i({1, 2}, {4, 3}, 2, 4), golden::threshold_example_i());
}

TEST(ThresholdRelation, SecondExample) {
  BRelation r = threshold_relation_ii({2, 1}, {4, 3}, {5, 6}, 1, 2);
  // the degree-one term comes out as B(1,1) B(6,6)
  BRelation expected;
  expected.add(3, 2, 4, 4, 6);
  expected.add(3, 3, 4, 3, 9);
  expected.add(3, 3, 4, 4, 21);
  expected.add(1, 1, 6, 6, -15);
  EXPECT_EQ(r, expected);
  for (auto f : {uri_family(), bt_family(Q(2)), bt_family(Q(-1)), constant_family(Q(1))})
    EXPECT_EQ(r.evaluate(f), golden::threshold_example_ii().evaluate(f));
}

TEST(ThresholdRelation, HoldsForUriFamily) {
  EXPECT_EQ(golden::threshold_example_i().evaluate(uri_family()), 0);
  EXPECT_EQ(golden::threshold_example_ii().evaluate(uri_family()), 0);
  EXPECT_TRUE(verify_threshold_shuffle_i({1, 2}, {4, 3}, 2, 4, bt_family(Q(1, 3))));
  EXPECT_TRUE(verify_threshold_shuffle_ii({2, 1}, {4, 3}, {5, 6}, 1, 2, bt_family(Q(-1))));
}

TEST(ThresholdRelation, NegativeControlFails) {
  auto r = verify_threshold_conjecture(5, "constant");
  EXPECT_FALSE(r.pass());
  EXPECT_EQ(r.kind, SuiteKind::Conjecture);
  EXPECT_FALSE(verify_threshold_shuffle_ii({2, 1}, {4, 3}, {5, 6}, 1, 2, constant_family(Q(1))));
}

TEST(ThresholdConjecture, FamiliesPassAtSmallBound) {
  for (std::string f : {"uri", "bt:2", "bt:-1", "bt:1/3"}) {
    auto r = verify_threshold_conjecture(6, f);
    EXPECT_TRUE(r.pass()) << f;
    EXPECT_GT(r.count, 0);
  }
}

TEST(FamilyByName, RejectsUnknown) {
  EXPECT_THROW(family_by_name("nope"), std::invalid_argument);
  EXPECT_EQ(family_by_name("bt:1")(4, 2), b1(4, 2));
}

TEST(Report, JsonRoundTrip) {
  VerificationReport r;
  r.suite = "demo";
  r.params = {{"max_weight", 3}};
  r.count = 12;
  r.seed = 7;
  r.kind = SuiteKind::Conjecture;
  r.failures.push_back({{{"word", {1, 2}}}, "v1", "v2"});
  VerificationReport back = VerificationReport::from_json(r.to_json());
  EXPECT_EQ(back.to_json(), r.to_json());
  EXPECT_FALSE(back.pass());
  EXPECT_EQ(r.to_json()["status"], "conjecture-instances");
  EXPECT_EQ(r.to_json()["result"], "fail");
  EXPECT_TRUE(r.to_json()["elapsed_ms"].is_null());
}

TEST(Report, MergeKeepsConjectureKind) {
  VerificationReport a, b;
  a.suite = "a";
  a.count = 2;
  b.suite = "b";
  b.count = 3;
  b.kind = SuiteKind::Conjecture;
  auto m = merge_reports("all", {a, b});
  EXPECT_EQ(m.count, 5);
  EXPECT_EQ(m.kind, SuiteKind::Conjecture);
  EXPECT_TRUE(m.pass());
}

TEST(Suites, SmallBoundsPass) {
  for (auto s : {Structure::ihara(), Structure::ari(), Structure::uri()}) {
    EXPECT_TRUE(verify_axioms(s, 5).pass()) << s.name();
    EXPECT_TRUE(verify_hopf(s, 5).pass()) << s.name();
    EXPECT_TRUE(verify_duality(s, 5).pass()) << s.name();
  }
  EXPECT_TRUE(verify_depth_graded(5).pass());
  EXPECT_TRUE(verify_oracles(4, 5, 20, 3).pass());
  EXPECT_TRUE(verify_filtration(6, 50, 3).pass());
  EXPECT_TRUE(verify_k_level(6, 50, 3).pass());
  EXPECT_TRUE(verify_bimould_iso(5, 3).pass());
  EXPECT_TRUE(verify_bimould_iso_conjecture(5, 3).pass());
}

TEST(Suites, IndependentOfWorkerCount) {
  auto one = verify_oracles(4, 5, 30, 11, 1).to_json();
  auto four = verify_oracles(4, 5, 30, 11, 4).to_json();
  EXPECT_EQ(one.dump(), four.dump());
  EXPECT_EQ(verify_axioms(Structure::ari(), 5, 1).to_json().dump(),
            verify_axioms(Structure::ari(), 5, 3).to_json().dump());
}

TEST(Suites, SeedIsRecorded) {
  EXPECT_EQ(verify_filtration(5, 10, 99).seed, 99u);
}
