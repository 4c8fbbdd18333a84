#include <gtest/gtest.h>

#include "nsdelta/factorizations.hpp"
#include "oracles.hpp"

using namespace nsdelta;

namespace {

std::vector<std::vector<Int>> as_vectors(const std::vector<Factorization>& zs) {
  std::vector<std::vector<Int>> out;
  for (const auto& z : zs) out.push_back(z.exponents);
  return out;
}

}  // namespace

TEST(Enumerate, Examples) {
  NumericalSemigroup s{3, 10, 11};
  EXPECT_EQ(as_vectors(enumerate_factorizations(s, 21)),
            (std::vector<std::vector<Int>>{{0, 1, 1}, {7, 0, 0}}));
  EXPECT_EQ(as_vectors(enumerate_factorizations(s, 26)),
            (std::vector<std::vector<Int>>{{2, 2, 0}, {5, 0, 1}}));
  EXPECT_EQ(as_vectors(enumerate_factorizations(s, 0)),
            (std::vector<std::vector<Int>>{{0, 0, 0}}));
  EXPECT_TRUE(enumerate_factorizations(s, 8).empty());
}

TEST(Enumerate, MatchesBoxOracle) {
  const std::vector<std::vector<Int>> cases{
      {2, 3}, {4, 6, 9}, {3, 10, 11}, {6, 9, 20}, {5, 13, 16}, {7, 9, 11, 13}, {8, 12, 14, 17}};
  for (const auto& g : cases) {
    NumericalSemigroup s(g);
    const Int n = g.size() > 3 ? 600 : 2000;
    const auto all = oracle::all_factorizations_upto(g, n);
    Factorizer f(s);
    for (Int x = 0; x <= n; ++x) {
      ASSERT_EQ(as_vectors(f.enumerate(x)), all[static_cast<std::size_t>(x)]) << x;
    }
  }
}

TEST(Enumerate, CapExceeded) {
  NumericalSemigroup s{2, 3};
  try {
    enumerate_factorizations(s, 1000, 10);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::cap_exceeded);
  }
}

TEST(Enumerate, MonotoneUnderMultiplicityShift) {
  for (const auto& g : std::vector<std::vector<Int>>{{4, 6, 9}, {3, 10, 11}, {5, 6, 7}}) {
    NumericalSemigroup s(g);
    Factorizer f(s);
    for (Int x = 0; x <= 800; ++x) {
      if (!s.contains(x)) continue;
      EXPECT_GE(f.enumerate(x + s.multiplicity()).size(), f.enumerate(x).size());
    }
  }
}

TEST(PLength, Examples) {
  const std::vector<Int> z{7, 0, 0};
  EXPECT_EQ(p_length(z, Norm::infinity), 7);
  EXPECT_EQ(p_length(z, Norm::zero), 1);
  EXPECT_EQ(p_length(z, Norm::one), 7);
  EXPECT_EQ(p_length(std::vector<Int>{1, 1, 1}, Norm::zero), 3);
  EXPECT_EQ(p_length(std::vector<Int>{0, 0}, Norm::infinity), 0);
}

TEST(MakeFactorization, ChecksValue) {
  NumericalSemigroup s{3, 10, 11};
  EXPECT_NO_THROW(make_factorization(s, 21, {0, 1, 1}));
  EXPECT_THROW(make_factorization(s, 22, {0, 1, 1}), Error);
  EXPECT_THROW(make_factorization(s, 21, {0, 1}), Error);
}

TEST(LengthSet, Examples) {
  NumericalSemigroup s{3, 10, 11};
  EXPECT_EQ(length_set(s, 21, Norm::infinity).values, (std::vector<Int>{1, 7}));
  EXPECT_EQ(length_set(s, 24, Norm::zero).values, (std::vector<Int>{1, 3}));
  for (Norm p : {Norm::zero, Norm::one, Norm::infinity}) {
    EXPECT_EQ(length_set(s, 3, p).values, (std::vector<Int>{1}));
  }
  EXPECT_THROW(length_set(s, 8, Norm::one), Error);
}

TEST(LengthSet, MatchesOracleForEveryNorm) {
  for (const auto& g : std::vector<std::vector<Int>>{{4, 6, 9}, {3, 10, 11}, {7, 9, 11, 13}}) {
    NumericalSemigroup s(g);
    const Int n = 500;
    const auto all = oracle::all_factorizations_upto(g, n);
    Factorizer f(s);
    for (Int x = 0; x <= n; ++x) {
      const auto& zs = all[static_cast<std::size_t>(x)];
      if (zs.empty()) continue;
      EXPECT_EQ(length_set(f, x, Norm::zero).values, oracle::length_values(zs, oracle::l0));
      EXPECT_EQ(length_set(f, x, Norm::one).values, oracle::length_values(zs, oracle::l1));
      EXPECT_EQ(length_set(f, x, Norm::infinity).values, oracle::length_values(zs, oracle::linf));
    }
  }
}

TEST(LengthSet, OneNormOfTwoThreeIsInterval) {
  NumericalSemigroup s{2, 3};
  for (Int x = 0; x <= 200; ++x) {
    if (!s.contains(x)) continue;
    const auto l = length_set(s, x, Norm::one).values;
    for (std::size_t i = 1; i < l.size(); ++i) EXPECT_EQ(l[i] - l[i - 1], 1);
    EXPECT_EQ(l, oracle::length_values(oracle::box_factorizations({2, 3}, x), oracle::l1));
  }
}

TEST(DeltaOfElement, Examples) {
  NumericalSemigroup s{3, 10, 11};
  EXPECT_EQ(delta_set_of_element(s, 21, Norm::infinity).values, (std::vector<Int>{6}));
  EXPECT_EQ(delta_set_of_element(s, 24, Norm::infinity).values, (std::vector<Int>{7}));
  EXPECT_EQ(delta_set_of_element(NumericalSemigroup{4, 6, 9}, 20, Norm::infinity).values,
            (std::vector<Int>{3}));
  EXPECT_TRUE(delta_set_of_element(s, 3, Norm::infinity).empty());
}

TEST(DeltaOfSortedSet, Examples) {
  EXPECT_EQ(delta_of_sorted_set(std::vector<Int>{1, 7}).values, (std::vector<Int>{6}));
  EXPECT_TRUE(delta_of_sorted_set(std::vector<Int>{5}).empty());
  EXPECT_EQ(delta_of_sorted_set(std::vector<Int>{0, 2, 3, 7}).values,
            (std::vector<Int>{1, 2, 4}));
  EXPECT_THROW(delta_of_sorted_set(std::vector<Int>{3, 3}), Error);
  EXPECT_THROW(delta_of_sorted_set(std::vector<Int>{4, 1}), Error);
}

TEST(DeltaSet, MergeKeepsSortedUnique) {
  DeltaSet a = make_delta_set({3, 1, 3});
  EXPECT_EQ(a.values, (std::vector<Int>{1, 3}));
  a.merge(make_delta_set({2, 3, 5}));
  EXPECT_EQ(a.values, (std::vector<Int>{1, 2, 3, 5}));
  EXPECT_TRUE(a.contains(5));
  EXPECT_FALSE(a.contains(4));
}

TEST(Dominant, Examples) {
  NumericalSemigroup s{3, 10, 11};
  auto d1 = dominant_factorizations(s, 21, 0);
  ASSERT_EQ(d1.factorizations.size(), 1u);
  EXPECT_EQ(d1.factorizations[0].exponents, (std::vector<Int>{7, 0, 0}));
  EXPECT_EQ(d1.lengths.values, (std::vector<Int>{7}));
  auto d2 = dominant_factorizations(s, 21, 1);
  ASSERT_EQ(d2.factorizations.size(), 1u);
  EXPECT_EQ(d2.factorizations[0].exponents, (std::vector<Int>{0, 1, 1}));
  EXPECT_EQ(d2.lengths.values, (std::vector<Int>{1}));
  auto d3 = dominant_factorizations(s, 21, 2);
  EXPECT_EQ(d3.lengths.values, (std::vector<Int>{1}));
  auto d0 = dominant_factorizations(s, 0, 1);
  EXPECT_EQ(d0.lengths.values, (std::vector<Int>{0}));
  EXPECT_THROW(dominant_factorizations(s, 8, 0), Error);
}

TEST(Dominant, UnionIsWholeFactorizationSet) {
  for (const auto& g : std::vector<std::vector<Int>>{{4, 6, 9}, {5, 13, 16}, {7, 9, 11, 13}}) {
    NumericalSemigroup s(g);
    for (Int x = 0; x <= 400; ++x) {
      if (!s.contains(x)) continue;
      std::set<std::vector<Int>> joined;
      for (std::size_t i = 0; i < g.size(); ++i) {
        for (const auto& z : dominant_factorizations(s, x, i).factorizations) {
          EXPECT_EQ(z.exponents[i], oracle::linf(z.exponents));
          joined.insert(z.exponents);
        }
      }
      std::set<std::vector<Int>> all;
      for (const auto& z : oracle::box_factorizations(g, x)) all.insert(z);
      EXPECT_EQ(joined, all) << x;
    }
  }
}
