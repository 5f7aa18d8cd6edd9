#include <gtest/gtest.h>

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "mobius/chains.hpp"
#include "mobius/oracle.hpp"

namespace mobius {
namespace {

Field m31() { return Field::make(31, 1, std::nullopt, std::vector<std::int64_t>{30}); }

TEST(Pencil, TangentPairM7) {
  const Field f = Field::make(7, 1);
  const auto [bm, bp] = standard_tangent_pair(f);
  const TangentPencil pencil = common_tangents_bruteforce(f, bm, bp);
  EXPECT_EQ(pencil.circles.size(), 7u);
  EXPECT_EQ(pencil.excluded, 5u);
  for (const Circle& c : pencil.circles) {
    EXPECT_TRUE(classify(c, bm).is_tangent());
    EXPECT_TRUE(classify(c, bp).is_tangent());
  }
}

TEST(Pencil, ExamplePairM31) {
  const Field f = m31();
  const Circle c1 = parse_circle(f, "B1(c=8+3*w,r=14)"), c2 = parse_circle(f, "B2(c=12+5*w,r=17)");
  const TangentPencil pencil = common_tangents_bruteforce(f, c1, c2);
  EXPECT_EQ(pencil.circles.size(), 60u);
  EXPECT_EQ(pencil.excluded, 0u);
}

TEST(Pencil, IdenticalCarriersRejected) {
  const Field f = Field::make(5, 1);
  const Circle c = Circle::type1(f.zero2(), f.one());
  EXPECT_THROW(common_tangents_bruteforce(f, c, c), Error);
  EXPECT_THROW(chain_census_bruteforce(f, c, c), Error);
}

TEST(Census, TangentPairs) {
  const Field f7 = Field::make(7, 1);
  const auto [bm, bp] = standard_tangent_pair(f7);
  const ChainCensus c7 = chain_census_bruteforce(f7, bm, bp);
  EXPECT_EQ(c7.histogram, (std::map<std::uint64_t, std::uint64_t>{{7, 1}}));
  EXPECT_EQ(c7.circles_covered, 7u);

  const Field f5 = Field::make(5, 1);
  const auto [am, ap] = standard_tangent_pair(f5);
  EXPECT_TRUE(chain_census_bruteforce(f5, am, ap).chains.empty());
}

TEST(Census, ExamplePairM31) {
  const Field f = m31();
  const Circle c1 = parse_circle(f, "B1(c=8+3*w,r=14)"), c2 = parse_circle(f, "B2(c=12+5*w,r=17)");
  const ChainCensus census = chain_census_bruteforce(f, c1, c2);
  EXPECT_EQ(census.histogram, (std::map<std::uint64_t, std::uint64_t>{{5, 6}, {15, 2}}));
  EXPECT_EQ(census.circles_covered, 60u);
  for (const auto& ch : census.chains) EXPECT_TRUE(validate_chain(ch.circles, c1, c2).ok());
}

// Every legal-edge graph seen so far is 2-regular: the chains partition the pencil.
TEST(Census, ChainsPartitionThePencil) {
  for (int p : {5, 7, 11}) {
    const Field f = Field::make(p, 1);
    const Circle c1 = Circle::type2(f.one2(), f.zero());
    for (const Circle& c2 : all_circles(f)) {
      if (!c2.is_second() || !c2.r().is_zero() || c2 == c1) continue;
      const ChainCensus census = chain_census_bruteforce(f, c1, c2);
      if (census.chains.empty()) continue;
      std::set<Circle> seen;
      std::size_t total = 0;
      for (const auto& ch : census.chains) {
        total += ch.length();
        seen.insert(ch.circles.begin(), ch.circles.end());
      }
      EXPECT_EQ(seen.size(), total) << to_string(c2);
      EXPECT_EQ(census.legal_edges, total) << to_string(c2);
    }
  }
}

TEST(Census, StepBudget) {
  const Field f = m31();
  const Circle c1 = parse_circle(f, "B1(c=8+3*w,r=14)"), c2 = parse_circle(f, "B2(c=12+5*w,r=17)");
  try {
    chain_census_bruteforce(f, c1, c2, 10);
    ADD_FAILURE() << "expected BoundExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::BoundExceeded);
  }
}

TEST(Compare, DetectsCorruptedPrediction) {
  const Field f = m31();
  const Circle c1 = parse_circle(f, "B1(c=8+3*w,r=14)"), c2 = parse_circle(f, "B2(c=12+5*w,r=17)");
  const ChainCensus census = chain_census_bruteforce(f, c1, c2);
  ChainPrediction pred = predict(f, c1, c2);
  EXPECT_TRUE(compare(pred, census).agree);

  ChainPrediction wrong_count = pred;
  wrong_count.families[0].count = *wrong_count.families[0].count + 1;
  EXPECT_FALSE(compare(wrong_count, census).agree);

  ChainPrediction wrong_length = pred;
  wrong_length.families[0].length = 3;
  EXPECT_FALSE(compare(wrong_length, census).agree);

  ChainPrediction none;
  none.case_tag = "none";
  const CompareReport rep = compare(none, census);
  EXPECT_FALSE(rep.agree);
  EXPECT_FALSE(rep.mismatches.empty());
}

TEST(Compare, UncountedFamiliesCompareLengths) {
  ChainPrediction pred;
  pred.exists = true;
  pred.families.push_back({6, std::nullopt, "xi"});
  ChainCensus census;
  census.histogram = {{6, 2}};
  EXPECT_TRUE(compare(pred, census).agree);
  census.histogram = {{6, 2}, {3, 1}};
  EXPECT_FALSE(compare(pred, census).agree);
}

}  // namespace
}  // namespace mobius
