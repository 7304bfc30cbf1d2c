#include <gtest/gtest.h>

#include "oracle.hpp"
#include "permstat/stats.hpp"

using namespace permstat;

TEST(Stats, SectionOneExample) {
  const Permutation p = parse("2 3 1 4 6 8 7 5");
  EXPECT_EQ(des2_set(p), (IndexSet{2, 6}));
  EXPECT_EQ(pex_set(p), (IndexSet{1, 5}));
  EXPECT_EQ(pdrop_set(p), (IndexSet{3, 8}));
  const StatVector s = stat_vector(p);
  EXPECT_EQ(s[Stat::des2], 2);
  EXPECT_EQ(s[Stat::pex], 2);
  EXPECT_EQ(s[Stat::pdrop], 2);
  EXPECT_EQ(s[Stat::cyc], 4);
  EXPECT_EQ(s[Stat::fix], 2);
  EXPECT_EQ(s[Stat::pcyc], 2);
}

TEST(Stats, EarExample) {
  const Permutation p = parse("2 3 1 4 7 8 6 5");
  EXPECT_EQ(cycle_classify(p).cpeak, (IndexSet{3, 7, 8}));
  EXPECT_EQ(records(p).earec, (IndexSet{3, 8}));
  EXPECT_EQ(ear_set(p), (IndexSet{3, 8}));
  EXPECT_EQ(stat_vector(p)[Stat::ear], 2);
}

TEST(Stats, SmallCases) {
  EXPECT_TRUE(des2_set(Permutation::identity(5)).empty());
  EXPECT_EQ(des2_set(parse("5 4 3 2 1")), (IndexSet{1}));
  EXPECT_EQ(pex_set(parse("2 1")), (IndexSet{1}));
  EXPECT_EQ(pdrop_set(parse("2 1")), (IndexSet{2}));
  EXPECT_EQ(ear_set(parse("2 1")), (IndexSet{2}));
  const CycleSets two = cycle_classify(parse("2 1"));
  EXPECT_EQ(two.cval, (IndexSet{1}));
  EXPECT_EQ(two.cpeak, (IndexSet{2}));
  const CycleSets id = cycle_classify(Permutation::identity(4));
  EXPECT_EQ(id.fix, (IndexSet{1, 2, 3, 4}));
  EXPECT_TRUE(id.cval.empty() && id.cpeak.empty() && id.cdrise.empty() && id.cdfall.empty());
}

TEST(Stats, Records) {
  const RecordSets id = records(Permutation::identity(4));
  EXPECT_EQ(id.rec, (IndexSet{1, 2, 3, 4}));
  EXPECT_EQ(id.arec, (IndexSet{1, 2, 3, 4}));
  EXPECT_TRUE(id.erec.empty() && id.earec.empty());
  const RecordSets r = records(parse("3 1 2"));
  EXPECT_EQ(r.rec, (IndexSet{1}));
  EXPECT_EQ(r.arec, (IndexSet{2, 3}));
  EXPECT_EQ(r.earec, (IndexSet{2, 3}));
}

TEST(Stats, LinearExample) {
  const Permutation p = parse("3 4 2 1 5 8 7 6");
  const LinearSets ls = linear_classify(p, Boundary::ZeroInf);
  EXPECT_EQ(ls.dasc.size(), 2u);
  EXPECT_EQ(ls.ddes.size(), 2u);
  EXPECT_EQ(ls.peak.size(), 2u);
  EXPECT_EQ(ls.val.size(), 2u);
  EXPECT_EQ(ls.fmax(), (IndexSet{3, 5}));
  const LinearSets id = linear_classify(Permutation::identity(5), Boundary::ZeroInf);
  EXPECT_EQ(id.dasc.size(), 5u);
  EXPECT_EQ(id.fmax().size(), 5u);
  EXPECT_EQ(linear_classify(parse("4 7 2 5 8 9 3 1 6"), Boundary::ZeroNPlus1).fmax(), (IndexSet{4, 8}));
}

TEST(Stats, BoundaryGuards) {
  const Permutation p = parse("2 1 3");
  EXPECT_THROW(linear_classify(p, Boundary::InfZero).fmax(), BoundaryMismatch);
  EXPECT_THROW(linear_classify(p, Boundary::ZeroInf).fmin(), BoundaryMismatch);
}

TEST(Stats, VectorSmall) {
  const StatVector id = stat_vector(Permutation::identity(4));
  EXPECT_EQ(id[Stat::exc], 0);
  EXPECT_EQ(id[Stat::des], 0);
  EXPECT_EQ(id[Stat::cyc], 4);
  EXPECT_EQ(id[Stat::fix], 4);
  EXPECT_EQ(id[Stat::pcyc], 0);
  const StatVector s = stat_vector(parse("2 1 4 3"));
  EXPECT_EQ(s[Stat::exc], 2);
  EXPECT_EQ(s[Stat::cyc], 2);
  EXPECT_EQ(s[Stat::fix], 0);
  EXPECT_EQ(s[Stat::pcyc], 2);
  EXPECT_EQ(s[Stat::pex], 2);
}

TEST(Stats, Json) {
  const std::string j = stat_vector(parse("2 3 1 4 6 8 7 5")).to_json();
  EXPECT_NE(j.find("\"des2\":2"), std::string::npos);
  EXPECT_NE(j.find("\"pcyc\":2"), std::string::npos);
  EXPECT_EQ(j.front(), '{');
}

TEST(Stats, NamesRoundTrip) {
  for (Stat s : all_stats()) EXPECT_EQ(parse_stat(stat_name(s)), s);
  EXPECT_THROW(parse_stat("nope"), std::invalid_argument);
}

// Every coarse statistic against its literal definition.
TEST(Stats, MatchOracleExhaustively) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : oracle::all(n)) {
      const StatVector s = stat_vector(p);
      ASSERT_EQ(s[Stat::des], oracle::des(p)) << p.to_string();
      ASSERT_EQ(s[Stat::exc], oracle::exc(p)) << p.to_string();
      ASSERT_EQ(s[Stat::fix], oracle::fix(p)) << p.to_string();
      ASSERT_EQ(s[Stat::cyc], oracle::cyc(p)) << p.to_string();
      ASSERT_EQ(s[Stat::pcyc], oracle::cyc(p) - oracle::fix(p));
      ASSERT_EQ(des2_set(p), oracle::des2_set(p)) << p.to_string();
      ASSERT_EQ(pex_set(p), oracle::pex_set(p)) << p.to_string();
      ASSERT_EQ(pdrop_set(p), oracle::pdrop_set(p)) << p.to_string();
      ASSERT_EQ(ear_set(p), oracle::ear_set(p)) << p.to_string();
      ASSERT_EQ(ear_set_by_records(p), oracle::ear_set(p)) << p.to_string();
      ASSERT_EQ(s[Stat::fmax], oracle::fmax(p)) << p.to_string();
    }
}

TEST(Stats, StructuralIdentities) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : oracle::all(n)) {
      const StatVector s = stat_vector(p);
      const StatVector t = stat_vector(inverse(p));
      ASSERT_EQ(s[Stat::exc], t[Stat::drop]);
      ASSERT_EQ(s[Stat::cval] + s[Stat::cpeak] + s[Stat::cdrise] + s[Stat::cdfall] + s[Stat::fix], n);
      ASSERT_EQ(s[Stat::des2], s[Stat::rec] - s[Stat::fmax]) << p.to_string();
      ASSERT_EQ(s[Stat::peak] + s[Stat::ddes], s[Stat::des]);
      ASSERT_EQ(s[Stat::asc_padded], s[Stat::val] + s[Stat::dasc]);
      ASSERT_EQ(s[Stat::asc_padded], s[Stat::asc] + 1);
    }
}
