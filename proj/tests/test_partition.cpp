#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace splitblock;

TEST(Partition, RejectsIncreasingOrNonPositiveParts) {
  EXPECT_THROW(Partition({3, 4}), parse_error);
  EXPECT_THROW(Partition({3, 0}), parse_error);
  EXPECT_THROW(Partition({-1}), parse_error);
  try {
    Partition({5, 2, 3});
    FAIL();
  } catch (const parse_error& e) {
    EXPECT_EQ(e.index(), 2u);
  }
}

TEST(Partition, EmptyIsLegal) {
  Partition p;
  EXPECT_TRUE(p.empty());
  EXPECT_EQ(p.sum(), 0);
  EXPECT_EQ(to_label(p), "()");
}

TEST(Partition, DerivedFields) {
  Partition p{6, 5, 2, 2, 2, 1, 1, 1};
  EXPECT_EQ(p.sum(), 20);
  EXPECT_EQ(p.length(), 8u);
  EXPECT_EQ(p.prefix_sum(3), 13);
  EXPECT_EQ(p.prefix_sum(20), 20);
  EXPECT_FALSE(p.has_distinct_parts());
  EXPECT_TRUE(Partition({7, 4, 1}).has_distinct_parts());
}

TEST(Partition, ParseAndPrint) {
  EXPECT_EQ(parse_partition("6,5,2"), Partition({6, 5, 2}));
  EXPECT_EQ(parse_partition(" (6, 5, 2) "), Partition({6, 5, 2}));
  EXPECT_EQ(parse_partition(""), Partition{});
  EXPECT_EQ(to_string(Partition({6, 5, 2})), "6,5,2");
  EXPECT_EQ(to_label(Partition({6, 5, 2})), "(6,5,2)");
  EXPECT_THROW(parse_partition("6,,2"), parse_error);
  EXPECT_THROW(parse_partition("6,x"), parse_error);
  EXPECT_THROW(parse_partition("2,5"), parse_error);
}

TEST(Majorization, Examples) {
  EXPECT_TRUE(majorizes({7, 4, 1}, {6, 3, 2, 1}));
  EXPECT_TRUE(majorizes({5, 3, 2}, {5, 3, 2}));
  EXPECT_FALSE(majorizes({6, 4}, {7, 2, 1}));
  EXPECT_FALSE(majorizes({7, 2, 1}, {6, 4}));
  EXPECT_FALSE(majorizes({7, 4, 1}, {5, 3, 2, 1}));  // sums differ
}

TEST(Majorization, WeakExamples) {
  EXPECT_TRUE(weakly_majorizes({7, 4, 1}, {5, 3, 2, 1}));
  EXPECT_TRUE(weakly_majorizes({10}, {10}));
  EXPECT_FALSE(weakly_majorizes({5, 4, 3}, {7, 4, 3}));
}

TEST(Majorization, AgreesWithPrefixSumsOnAllPairsUpToTwelve) {
  auto prefix_ok = [](const Partition& a, const Partition& b) {
    int sa = 0;
    int sb = 0;
    const auto len = std::max(a.length(), b.length());
    for (std::size_t i = 0; i < len; ++i) {
      sa += i < a.length() ? a[i] : 0;
      sb += i < b.length() ? b[i] : 0;
      if (sa < sb) return false;
    }
    return true;
  };
  for (int n = 1; n <= 12; ++n) {
    std::vector<Partition> all;
    for_each_partition(n, [&](const Partition& p) { all.push_back(p); });
    for (const auto& a : all)
      for (const auto& b : all) ASSERT_EQ(majorizes(a, b), prefix_ok(a, b)) << a << " vs " << b;
  }
}

TEST(Mark, Examples) {
  EXPECT_EQ(mark({6, 5, 2, 2, 2, 1, 1, 1}), 3);
  EXPECT_EQ(mark({6, 4, 3, 2, 2, 1, 1, 1}), 3);
  EXPECT_EQ(mark({1}), 1);
  EXPECT_EQ(mark({5, 4, 4, 3, 2, 1, 1}), 4);
  EXPECT_EQ(mark({7, 6, 4, 4, 4, 4, 4, 1}), 5);
  EXPECT_THROW(mark(Partition{}), domain_error);
}

TEST(Decompose, FerrersExamples) {
  EXPECT_EQ(decompose({6, 5, 2, 2, 2, 1, 1, 1}), (AlphaBeta{{6, 4}, {7, 3}, 3}));
  EXPECT_EQ(decompose({6, 4, 3, 2, 2, 1, 1, 1}), (AlphaBeta{{6, 3, 1}, {7, 3}, 3}));
  EXPECT_EQ(decompose({7, 6, 4, 4, 4, 4, 4, 1}), (AlphaBeta{{7, 5, 2, 1}, {7, 5, 4, 3}, 5}));
}

TEST(Decompose, RenderMatchesAlphaBeta) {
  const auto rows = render_ferrers({6, 5, 2, 2, 2, 1, 1, 1});
  ASSERT_EQ(rows.size(), 8u);
  EXPECT_EQ(rows[0], "aaaaaa");
  EXPECT_EQ(rows[1], "baaaa");
  EXPECT_EQ(rows[2], "bb");
  EXPECT_EQ(rows[7], "b");
}

TEST(Decompose, StructuralInvariantsForAllPartitionsUpToEighteen) {
  for (int n = 1; n <= 18; ++n) {
    for_each_partition(n, [&](const Partition& pi) {
      const auto ab = decompose(pi);
      ASSERT_EQ(ab.beta.length(), static_cast<std::size_t>(ab.mark - 1)) << pi;
      ASSERT_TRUE(ab.alpha.length() + 1 == static_cast<std::size_t>(ab.mark) ||
                  ab.alpha.length() == static_cast<std::size_t>(ab.mark))
          << pi;
      ASSERT_TRUE(ab.alpha.has_distinct_parts()) << pi;
      ASSERT_TRUE(ab.beta.has_distinct_parts()) << pi;
      ASSERT_EQ(ab.alpha.sum() + ab.beta.sum(), pi.sum()) << pi;
    });
  }
}

TEST(Extremal, Examples) {
  EXPECT_EQ(tau_prime(10, 3), Partition({7, 2, 1}));
  EXPECT_EQ(tau_prime(12, 3), Partition({9, 2, 1}));
  EXPECT_EQ(tau(20, 3), Partition({8, 7, 5}));
  EXPECT_EQ(tau(10, 3), Partition({5, 3, 2}));
  for (int k = 1; k <= 6; ++k) {
    std::vector<int> stair;
    for (int p = k; p >= 1; --p) stair.push_back(p);
    EXPECT_EQ(tau(triangular(k), k), Partition(stair));
    EXPECT_EQ(tau_prime(triangular(k), k), Partition(stair));
  }
  EXPECT_THROW(tau(9, 4), domain_error);
  EXPECT_THROW(tau_prime(9, 4), domain_error);
  EXPECT_EQ(tau_hat(11, 3), Partition({4, 4, 3}));
  EXPECT_EQ(tau_hat(2, 3), Partition({1, 1}));
}

TEST(Extremal, AreMinimumAndMaximumOfDisK) {
  for (int n = 1; n <= 24; ++n) {
    for (int k = 1; triangular(k) <= n; ++k) {
      const auto lo = tau(n, k);
      const auto hi = tau_prime(n, k);
      int seen = 0;
      for (const auto& g : distinct_partitions(n)) {
        if (g.length() != static_cast<std::size_t>(k)) continue;
        ++seen;
        ASSERT_TRUE(majorizes(g, lo)) << g << " vs tau " << lo;
        ASSERT_TRUE(majorizes(hi, g)) << g << " vs tau' " << hi;
      }
      ASSERT_GT(seen, 0);
    }
  }
}

TEST(Enumeration, DistinctPartitionCounts) {
  // number of partitions of n into distinct parts
  const int expected[] = {1, 1, 1, 2, 2, 3, 4, 5, 6, 8, 10, 12, 15, 18, 22, 27, 32};
  for (int n = 1; n <= 16; ++n) EXPECT_EQ(distinct_partitions(n).size(), static_cast<std::size_t>(expected[n])) << n;
  EXPECT_TRUE(distinct_partitions(0).empty());
}

TEST(Enumeration, PartitionCountsWithLengthBound) {
  int count = 0;
  for_each_partition(10, [&](const Partition&) { ++count; });
  EXPECT_EQ(count, 42);
  count = 0;
  for_each_partition(10, [&](const Partition&) { ++count; }, 2);
  EXPECT_EQ(count, 6);
}

TEST(Helpers, CanonicalOrderAndTails) {
  EXPECT_TRUE(canonical_less({10}, {9, 1}));
  EXPECT_TRUE(canonical_less({9, 1}, {8, 2}));
  EXPECT_FALSE(canonical_less({8, 2}, {9, 1}));
  EXPECT_EQ(drop_smallest({7, 5, 2, 1}, 2), Partition({7, 5}));
  EXPECT_EQ(shift_parts({7, 5}, -4), Partition({3, 1}));
  EXPECT_EQ(append_parts({12, 8}, {2, 1}), Partition({12, 8, 2, 1}));
}
