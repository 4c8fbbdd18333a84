#include <gtest/gtest.h>

#include "nsdelta/zero_structure.hpp"
#include "oracles.hpp"

using namespace nsdelta;

namespace {

const std::vector<std::vector<Int>>& suite() {
  static const std::vector<std::vector<Int>> s{{4, 6, 9}, {3, 10, 11}, {6, 9, 20}, {5, 13, 16}};
  return s;
}

}  // namespace

TEST(SupportProfiles, TwoThree) {
  NumericalSemigroup s{2, 3};
  auto p = support_profiles(s);
  ASSERT_EQ(p.size(), 3u);
  std::map<std::uint32_t, Int> by_mask;
  for (const auto& q : p) by_mask[q.support] = q.threshold;
  EXPECT_EQ(by_mask[1], 2);
  EXPECT_EQ(by_mask[2], 3);
  EXPECT_EQ(by_mask[3], 7);
  EXPECT_EQ(delta0_stability_bound(s), 7);
}

TEST(SupportProfiles, SingletonsAreGenerators) {
  for (const auto& g : suite()) {
    NumericalSemigroup s(g);
    for (const auto& q : support_profiles(s)) {
      if (std::popcount(q.support) == 1) {
        const auto i = static_cast<std::size_t>(std::countr_zero(q.support));
        EXPECT_EQ(q.threshold, g[i]);
        EXPECT_EQ(q.divisor, g[i]);
      }
    }
  }
}

TEST(SupportProfiles, ThresholdGuaranteesSupport) {
  for (const auto& g : std::vector<std::vector<Int>>{{4, 6, 9}, {3, 10, 11}, {5, 6, 7}}) {
    NumericalSemigroup s(g);
    const auto profiles = support_profiles(s);
    const Int n = delta0_stability_bound(s) + 60;
    const auto all = oracle::all_factorizations_upto(g, n);
    for (const auto& q : profiles) {
      for (Int x = q.threshold; x <= n; ++x) {
        if (x % q.divisor != 0) continue;
        bool found = false;
        for (const auto& z : all[static_cast<std::size_t>(x)]) {
          std::uint32_t mask = 0;
          for (std::size_t i = 0; i < z.size(); ++i) {
            if (z[i]) mask |= 1u << i;
          }
          found = found || mask == q.support;
        }
        EXPECT_TRUE(found) << "support " << q.support << " x=" << x;
      }
    }
  }
}

TEST(SupportProfiles, DimensionCap) {
  std::vector<Int> g;
  for (Int v = 26; v < 26 + 26; ++v) g.push_back(v);
  NumericalSemigroup s(g);
  ASSERT_GT(s.embedding_dim(), kMaxSupportScanDim);
  EXPECT_THROW(support_profiles(s), Error);
}

TEST(ZeroLengths, MatchOracle) {
  for (const auto& g : std::vector<std::vector<Int>>{{4, 6, 9}, {3, 10, 11}, {8, 12, 14, 17}}) {
    NumericalSemigroup s(g);
    const Int n = 700;
    SupportScanner scan(s, n);
    const auto all = oracle::all_factorizations_upto(g, n);
    for (Int x = 0; x <= n; ++x) {
      const auto& zs = all[static_cast<std::size_t>(x)];
      if (zs.empty()) {
        EXPECT_EQ(scan.zero_length_mask(x), 0u);
        continue;
      }
      EXPECT_EQ(scan.zero_lengths(x).values, oracle::length_values(zs, oracle::l0)) << x;
    }
  }
}

TEST(CheckL0Interval, Examples) {
  EXPECT_TRUE(check_L0_interval(NumericalSemigroup{2, 3}, 8));
  EXPECT_FALSE(check_L0_interval(NumericalSemigroup{3, 10, 11}, 24));
  EXPECT_TRUE(check_L0_interval(NumericalSemigroup{3, 10, 11}, 10));
  EXPECT_THROW(check_L0_interval(NumericalSemigroup{3, 10, 11}, 8), Error);
}

TEST(CheckL0Interval, BeyondStabilityBound) {
  for (const auto& g : suite()) {
    NumericalSemigroup s(g);
    const Int x0 = delta0_stability_bound(s);
    for (Int x = x0 + 1; x <= x0 + 3 * s.largest_generator(); ++x) {
      if (!s.contains(x)) continue;
      EXPECT_TRUE(check_L0_interval(s, x)) << x;
    }
  }
}

TEST(Delta0, Examples) {
  EXPECT_EQ(delta0_semigroup(NumericalSemigroup{4, 6, 9}).values, (std::vector<Int>{1}));
  EXPECT_EQ(delta0_semigroup(NumericalSemigroup{3, 10, 11}).values, (std::vector<Int>{1, 2}));
  EXPECT_EQ(delta0_semigroup(NumericalSemigroup{5, 13, 16}).values, (std::vector<Int>{1, 2}));
  EXPECT_EQ(delta0_semigroup(NumericalSemigroup{2, 3}).values, (std::vector<Int>{1}));
}

TEST(Delta0, MatchesBruteForceToTwiceBound) {
  int checked = 0;
  for (const auto& g : std::vector<std::vector<Int>>{{2, 3}, {3, 5}, {4, 6, 9}, {3, 10, 11},
                                                     {6, 9, 20}, {5, 13, 16}, {5, 6, 7},
                                                     {3, 5, 7}, {4, 5, 6, 7}, {6, 10, 15}}) {
    NumericalSemigroup s(g);
    auto r = delta0_semigroup_report(s);
    if (r.stability_bound > 5000) continue;
    auto brute = oracle::delta0_upto(g, 2 * r.stability_bound);
    brute.insert(std::lower_bound(brute.begin(), brute.end(), 1), 1);
    brute.erase(std::unique(brute.begin(), brute.end()), brute.end());
    EXPECT_EQ(r.delta.values, brute);
    ++checked;
  }
  EXPECT_GE(checked, 8);
}

TEST(Delta0, ValuesBelowEmbeddingDimension) {
  for (Int c = 5; c <= 25; ++c) {
    for (Int b = 4; b < c; ++b) {
      for (Int a = 3; a < b; ++a) {
        std::vector<Int> g{a, b, c, c + 1};
        if (minimal_generating_set(g).size() != 4) continue;
        NumericalSemigroup s(g);
        for (Int d : delta0_semigroup(s).values) EXPECT_LE(d, 3);
      }
    }
  }
}

TEST(Delta0, ThreadsAndBudget) {
  NumericalSemigroup s{5, 13, 16};
  ZeroDeltaOptions par;
  par.threads = 3;
  EXPECT_EQ(delta0_semigroup(s), delta0_semigroup(s, par));
  ZeroDeltaOptions tiny;
  tiny.max_elements = 10;
  try {
    delta0_semigroup(s, tiny);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::budget_exceeded);
  }
}

TEST(Delta0, LengthMask) {
  EXPECT_EQ(delta_of_length_mask(0b1010).values, (std::vector<Int>{2}));
  EXPECT_EQ(delta_of_length_mask(0b1011).values, (std::vector<Int>{1, 2}));
  EXPECT_TRUE(delta_of_length_mask(0b100).empty());
}
