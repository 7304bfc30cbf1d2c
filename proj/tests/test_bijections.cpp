#include <gtest/gtest.h>

#include <set>

#include "oracle.hpp"
#include "permstat/bijections.hpp"
#include "permstat/stats.hpp"

using namespace permstat;

TEST(Foata, Examples) {
  const Permutation s = parse("2 3 1 4 6 8 7 5");
  EXPECT_EQ(foata_phi(s), parse("7 5 6 8 4 1 2 3"));
  EXPECT_EQ(foata_varphi(s), parse("2 4 3 1 5 8 7 6"));
  EXPECT_EQ(foata_phi(Permutation::identity(5)), parse("5 4 3 2 1"));
}

TEST(Foata, Bijective) {
  for (int n = 1; n <= 6; ++n) {
    std::set<Permutation> a, b;
    for (const auto& p : oracle::all(n)) {
      a.insert(foata_phi(p));
      b.insert(foata_varphi(p));
      ASSERT_EQ(foata_varphi(p), complement(foata_phi(p)));
    }
    EXPECT_EQ(a.size(), oracle::all(n).size());
    EXPECT_EQ(b.size(), a.size());
  }
}

TEST(PhiOne, Example) {
  const Permutation s = parse("4 7 1 8 6 3 2 5");
  BiwordTrace tr;
  EXPECT_EQ(phi1(s, &tr), parse("8 3 6 1 5 7 2 4"));
  EXPECT_EQ(tr.F, (std::vector<int>{1, 2, 3, 6}));
  EXPECT_EQ(tr.Fp, (std::vector<int>{3, 6, 7, 8}));
  EXPECT_EQ(tr.G, (std::vector<int>{4, 5, 7, 8}));
  EXPECT_EQ(tr.Gp, (std::vector<int>{1, 2, 4, 5}));
  EXPECT_EQ(phi1(parse("1")), parse("1"));
}

TEST(PhiOne, InverseExampleTrace) {
  std::vector<std::string> trace;
  EXPECT_EQ(phi1_inverse(parse("8 3 6 1 5 7 2 4"), &trace), parse("4 7 1 8 6 3 2 5"));
  ASSERT_FALSE(trace.empty());
  EXPECT_EQ(trace.front(), "(∞,1)");
  EXPECT_EQ(trace.back(), "(4)(7,1)(8,6,3,2)(5)");
  EXPECT_NE(std::find(trace.begin(), trace.end(), "(4)(∞,1)(∞,3,2)"), trace.end());
}

TEST(PhiOne, RoundTripAndTransport) {
  for (int n = 1; n <= 7; ++n)
    for (const auto& p : oracle::all(n)) {
      const Permutation q = phi1(p);
      ASSERT_EQ(phi1_inverse(q), p) << p.to_string();
      ASSERT_EQ(oracle::des(p), oracle::exc(q));
      ASSERT_EQ(oracle::des2_set(p).size(), oracle::ear_set(q).size()) << p.to_string();
    }
}

TEST(PhiSz, Example) {
  const Permutation s = parse("4 7 1 8 6 3 2 5");
  EXPECT_EQ(phi_sz(s), parse("5 7 1 4 8 2 6 3"));
  EXPECT_EQ(phi2(s), parse("6 3 7 1 5 8 2 4"));
}

TEST(PhiSz, Bijective) {
  for (int n = 1; n <= 7; ++n) {
    std::set<Permutation> img;
    for (const auto& p : oracle::all(n)) img.insert(phi_sz(p));
    EXPECT_EQ(img.size(), oracle::all(n).size());
  }
}

TEST(ValleyHop, Example) {
  EXPECT_EQ(valley_hop_set(parse("4 7 2 5 8 9 3 1 6"), {3, 4, 5}), parse("4 7 5 2 8 9 1 3 6"));
}

TEST(ValleyHop, InvolutionsThatCommute) {
  for (const auto& p : oracle::all(6))
    for (int x = 1; x <= 6; ++x) {
      ASSERT_EQ(valley_hop(valley_hop(p, x), x), p);
      for (int y = x + 1; y <= 6; ++y) ASSERT_EQ(valley_hop(valley_hop(p, x), y), valley_hop(valley_hop(p, y), x));
    }
}

TEST(Orbit, Identity) {
  const Orbit o = orbit_of(Permutation::identity(5));
  EXPECT_EQ(o.members.size(), 1u);
  EXPECT_EQ(o.representative, Permutation::identity(5));
}

TEST(Orbit, PartitionAndSize) {
  for (int n = 1; n <= 6; ++n) {
    std::set<Permutation> seen;
    std::size_t total = 0;
    for (const auto& p : oracle::all(n)) {
      if (seen.count(p)) continue;
      const Orbit o = orbit_of(p);
      for (const auto& q : o.members) ASSERT_TRUE(seen.insert(q).second);
      total += o.members.size();
      const StatVector r = stat_vector(o.representative);
      ASSERT_EQ(r[Stat::ddes], 0);
      ASSERT_EQ(o.members.size(), std::size_t{1} << (r[Stat::dasc] - r[Stat::fmax]));
    }
    EXPECT_EQ(total, oracle::all(n).size());
  }
}
