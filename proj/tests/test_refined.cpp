#include <gtest/gtest.h>

#include "oracle.hpp"
#include "permstat/bijections.hpp"
#include "permstat/refined.hpp"

using namespace permstat;

namespace {

// Row of a per-value statistic read in the order of the letters of p.
template <class Fn>
std::vector<int> by_letter(const Permutation& p, Fn&& fn) {
  std::vector<int> out;
  for (int k = 1; k <= p.size(); ++k) out.push_back(fn(p(k)));
  return out;
}

}  // namespace

TEST(Patterns, ExampleRows) {
  const Permutation s = parse("4 7 1 8 6 3 2 5");
  const auto a = pattern_31_2(s), b = pattern_2_31(s);
  EXPECT_EQ(by_letter(s, [&](int v) { return a[v - 1]; }), (std::vector<int>{0, 0, 0, 0, 1, 1, 1, 2}));
  EXPECT_EQ(by_letter(s, [&](int v) { return b[v - 1]; }), (std::vector<int>{2, 1, 0, 0, 0, 0, 0, 0}));
}

TEST(Patterns, VariantFromOneDisagreesWithExample) {
  const Permutation s = parse("4 7 1 8 6 3 2 5");
  const auto a = pattern_31_2_from_one(s);
  EXPECT_NE(by_letter(s, [&](int v) { return a[v - 1]; }), (std::vector<int>{0, 0, 0, 0, 1, 1, 1, 2}));
}

TEST(Patterns, MatchDefinitions) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : oracle::all(n)) {
      const auto a = pattern_31_2(p), b = pattern_2_31(p);
      for (int v = 1; v <= n; ++v) {
        ASSERT_EQ(a[v - 1], oracle::p31_2(p, v)) << p.to_string() << " v=" << v;
        ASSERT_EQ(b[v - 1], oracle::p2_31(p, v)) << p.to_string() << " v=" << v;
      }
    }
}

TEST(Refined, PhiOneExampleRows) {
  const Permutation t = parse("8 3 6 1 5 7 2 4");
  const RefinedProfile prof = refined_profile(t);
  EXPECT_EQ(by_letter(t, [&](int v) { return prof[v].nest; }), (std::vector<int>{0, 1, 1, 0, 2, 0, 1, 0}));
  EXPECT_EQ(by_letter(t, [&](int v) { return prof[v].icross; }), (std::vector<int>{0, 0, 0, 0, 0, 1, 0, 2}));
}

TEST(Refined, PhiSzExampleRows) {
  const Permutation t = parse("5 7 1 4 8 2 6 3");
  const RefinedProfile prof = refined_profile(t);
  EXPECT_EQ(by_letter(t, [&](int v) { return prof[v].cross; }), (std::vector<int>{2, 0, 0, 0, 0, 1, 1, 1}));
  EXPECT_EQ(by_letter(t, [&](int v) { return prof[v].nest; }), (std::vector<int>{0, 1, 0, 2, 0, 0, 0, 0}));
}

TEST(Refined, IdentityAllZero) {
  const RefinedProfile prof = refined_profile(Permutation::identity(6));
  for (int i = 1; i <= 6; ++i) EXPECT_EQ(prof[i], VertexStats{});
  for (int v : pattern_31_2(Permutation::identity(6))) EXPECT_EQ(v, 0);
  for (int v : pattern_2_31(Permutation::identity(6))) EXPECT_EQ(v, 0);
}

TEST(Refined, FastMatchesReference) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : oracle::all(n)) ASSERT_EQ(refined_profile(p), refined_profile_reference(p)) << p.to_string();
}

TEST(Refined, PureCounts) {
  EXPECT_EQ(pval_ppeak(Permutation::identity(5)).pval, 0);
  EXPECT_EQ(pval_ppeak(Permutation::identity(5)).ppeak, 0);
  const PureCounts pc = pval_ppeak(parse("2 1"));
  EXPECT_EQ(pc.pval, 1);
  EXPECT_EQ(pc.ppeak, 1);
}

TEST(Refined, PseudoNestingsAgree) {
  for (int n = 1; n <= 6; ++n)
    for (const auto& p : oracle::all(n)) {
      const ArcTotals a = arc_totals(p);
      ASSERT_EQ(a.upsnest, a.lpsnest) << p.to_string();
    }
}

TEST(Refined, LevelSumsToPseudoNestings) {
  for (const auto& p : oracle::all(6)) {
    const RefinedProfile prof = refined_profile(p);
    long lev = 0;
    for (int i = 1; i <= 6; ++i)
      if (p(i) == i) lev += prof[i].lev;
    ASSERT_EQ(lev, arc_totals(p).upsnest) << p.to_string();
  }
}
