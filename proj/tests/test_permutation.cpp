#include <gtest/gtest.h>

#include "oracle.hpp"
#include "permstat/permutation.hpp"

using namespace permstat;

TEST(Parse, SpacesAndCommas) {
  EXPECT_EQ(parse("2 3 1 4 6 8 7 5"), Permutation({2, 3, 1, 4, 6, 8, 7, 5}));
  EXPECT_EQ(parse("2,3,1"), Permutation({2, 3, 1}));
  EXPECT_EQ(parse(" 2 , 3,1 "), Permutation({2, 3, 1}));
  EXPECT_EQ(parse("1"), Permutation({1}));
  EXPECT_TRUE(parse("").empty());
}

TEST(Parse, Errors) {
  auto kind = [](const char* s) {
    try {
      parse(s);
    } catch (const ParseError& e) {
      return e.kind();
    }
    ADD_FAILURE() << "no error for " << s;
    return ParseError::Kind::BadToken;
  };
  EXPECT_EQ(kind("2 2 1"), ParseError::Kind::DuplicateValue);
  EXPECT_EQ(kind("1 4"), ParseError::Kind::OutOfRange);
  EXPECT_EQ(kind("0 1"), ParseError::Kind::OutOfRange);
  EXPECT_EQ(kind("1,,2"), ParseError::Kind::EmptyToken);
  EXPECT_EQ(kind("1 x"), ParseError::Kind::BadToken);
  try {
    parse("2 2 1");
  } catch (const ParseError& e) {
    EXPECT_EQ(e.token(), "2");
  }
}

TEST(Permutation, ConstructorValidates) {
  EXPECT_THROW(Permutation({1, 1}), std::invalid_argument);
  EXPECT_THROW(Permutation({0}), std::invalid_argument);
}

TEST(Permutation, RoundTripText) {
  for (const auto& p : oracle::all(5)) EXPECT_EQ(parse(p.to_string()), p);
}

TEST(Inverse, Examples) {
  EXPECT_EQ(inverse(parse("2 3 1")), parse("3 1 2"));
  EXPECT_EQ(inverse(Permutation::identity(5)), Permutation::identity(5));
  const Permutation p = parse("4 7 1 8 6 3 2 5");
  const Permutation q = inverse(p);
  EXPECT_EQ(q, parse("3 7 6 1 8 5 2 4"));
  for (int i = 1; i <= 8; ++i) EXPECT_EQ(q(p(i)), i);
}

TEST(Symmetries, Examples) {
  EXPECT_EQ(zeta(parse("5 7 1 4 8 2 6 3")), parse("6 3 7 1 5 8 2 4"));
  EXPECT_EQ(zeta(Permutation::identity(6)), Permutation::identity(6));
  EXPECT_EQ(complement(parse("2 3 1 4")), parse("3 2 4 1"));
  EXPECT_EQ(reversal(parse("2 3 1 4")), parse("4 1 3 2"));
}

TEST(Symmetries, Involutions) {
  for (const auto& p : oracle::all(6)) {
    EXPECT_EQ(inverse(inverse(p)), p);
    EXPECT_EQ(complement(complement(p)), p);
    EXPECT_EQ(zeta(zeta(p)), p);
  }
}

TEST(Cycles, Decompositions) {
  const Permutation p = parse("2 3 1 4 6 8 7 5");
  EXPECT_EQ(cycle_decompose(p, false).to_string(), "(1 2 3)(4)(5 6 8)(7)");
  EXPECT_EQ(cycle_decompose(p, true).to_string(), "(7)(5 6 8)(4)(1 2 3)");
  EXPECT_EQ(cycle_decompose(Permutation::identity(3), false).to_string(), "(1)(2)(3)");
}

TEST(Cycles, FromCyclesInvertsDecompose) {
  for (const auto& p : oracle::all(6))
    for (bool standard : {false, true}) EXPECT_EQ(from_cycles(cycle_decompose(p, standard), 6), p);
}

TEST(Enumerate, Counts) {
  EXPECT_EQ(enumerate(3).size(), 6u);
  EXPECT_EQ(enumerate(4, Filter::Derangement).size(), 9u);
  EXPECT_EQ(enumerate(0).size(), 1u);
  EXPECT_TRUE(enumerate(0)[0].empty());
  EXPECT_EQ(enumerate(6, Filter::Derangement).size(), 265u);
}

TEST(Enumerate, LexicographicAndMatchesOracle) {
  const auto a = enumerate(5);
  EXPECT_EQ(a, oracle::all(5));
}

TEST(Enumerate, BlocksPartitionInOrder) {
  std::vector<Permutation> seen;
  for (int first = 1; first <= 5; ++first)
    for_each_with_first(5, first, Filter::All, [&](const Permutation& p) { seen.push_back(p); });
  EXPECT_EQ(seen, oracle::all(5));
}

TEST(Enumerate, Ceiling) {
  EXPECT_THROW(enumerate(10), NTooLarge);
  EXPECT_THROW(check_n(13, kHardNCeiling), NTooLarge);
  EXPECT_NO_THROW(check_n(12, kHardNCeiling));
}

TEST(Filter, DerangementNoCdrise) {
  int count = 0;
  for (const auto& p : oracle::all(6)) {
    bool ok = oracle::fix(p) == 0;
    for (int i = 1; i <= 6; ++i) ok = ok && !(oracle::inv_at(p, i) < i && i < p(i));
    count += ok;
    EXPECT_EQ(passes(p, Filter::DerangementNoCdrise), ok) << p.to_string();
  }
  EXPECT_EQ(static_cast<std::size_t>(count), enumerate(6, Filter::DerangementNoCdrise).size());
}
