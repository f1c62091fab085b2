#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace splitblock;
using splitblock::test::cover_lines;
using splitblock::test::read_lines;

namespace {

auto label = [](const Partition& p) { return to_label(p); };

}  // namespace

TEST(Dis, TenHasTheTenFigureElements) {
  const auto p = enumerate_dis(10);
  const std::vector<Partition> expected{{10},      {9, 1},    {8, 2},    {7, 3},    {6, 4},
                                        {7, 2, 1}, {6, 3, 1}, {5, 4, 1}, {5, 3, 2}, {4, 3, 2, 1}};
  EXPECT_EQ(p.elements(), expected);
}

TEST(Dis, TenCoversMatchGolden) {
  EXPECT_EQ(cover_lines(enumerate_dis(10), label), read_lines("dis10_covers.txt"));
}

TEST(Dis, SizesMatchGolden) {
  for (const auto& line : read_lines("dis_counts.txt")) {
    std::istringstream is(line);
    int n = 0;
    std::size_t size = 0;
    is >> n >> size;
    EXPECT_EQ(enumerate_dis(n).size(), size) << "n=" << n;
  }
  EXPECT_EQ(enumerate_dis(12).size(), 15u);
  EXPECT_EQ(enumerate_dis(1).elements(), std::vector<Partition>{Partition{1}});
  EXPECT_THROW(enumerate_dis(0), domain_error);
}

TEST(Dis, FixedLengthSlices) {
  const auto d3 = enumerate_dis_k(10, 3);
  const std::vector<Partition> expected{{7, 2, 1}, {6, 3, 1}, {5, 4, 1}, {5, 3, 2}};
  EXPECT_EQ(d3.elements(), expected);
  EXPECT_EQ(d3.minimal(d3.all_indices()), std::vector<std::size_t>{d3.require_index({5, 3, 2})});
  EXPECT_EQ(d3.maximal(d3.all_indices()), std::vector<std::size_t>{d3.require_index({7, 2, 1})});
  EXPECT_EQ(enumerate_dis_k(10, 4).elements(), std::vector<Partition>{Partition({4, 3, 2, 1})});
  EXPECT_TRUE(enumerate_dis_k(9, 4).empty());
}

TEST(Dis, MeetAndJoinExamples) {
  const auto d10 = enumerate_dis(10);
  EXPECT_EQ(meet(d10, {6, 4}, {7, 2, 1}), Partition({6, 3, 1}));
  EXPECT_EQ(join(d10, {6, 4}, {7, 2, 1}), Partition({7, 3}));
  EXPECT_EQ(meet(d10, {5, 4, 1}, {5, 4, 1}), Partition({5, 4, 1}));
  EXPECT_EQ(join(d10, {5, 4, 1}, {5, 4, 1}), Partition({5, 4, 1}));
  const auto d14 = enumerate_dis(14);
  // pentagon (7,4,2,1) < (8,3,2,1), (7,4,3) < (7,5,2) < (8,4,2)
  EXPECT_EQ(join(d14, {8, 3, 2, 1}, {7, 4, 3}), Partition({8, 4, 2}));
  EXPECT_EQ(join(d14, {8, 3, 2, 1}, {7, 5, 2}), Partition({8, 4, 2}));
  EXPECT_EQ(meet(d14, {8, 3, 2, 1}, {7, 5, 2}), Partition({7, 4, 2, 1}));
  EXPECT_FALSE(majorizes({7, 5, 2}, {8, 3, 2, 1}));
  EXPECT_THROW(meet(d10, {6, 4}, {11}), domain_error);
}

TEST(Dis, IsALatticeWithMaximumAndMinimum) {
  for (int n = 1; n <= 22; ++n) {
    const auto p = enumerate_dis(n);
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) {
        ASSERT_TRUE(p.meet(a, b)) << n;
        ASSERT_TRUE(p.join(a, b)) << n;
      }
    EXPECT_EQ(p.maximal(p.all_indices()), std::vector<std::size_t>{0});
  }
}

TEST(Dis, CoversAreTransitivelyIrreducibleAndGenerateTheOrder) {
  for (int n = 1; n <= 20; ++n) {
    const auto p = enumerate_dis(n);
    const std::size_t m = p.size();
    // reachability closure of covers
    std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
    for (std::size_t i = 0; i < m; ++i) reach[i][i] = true;
    for (auto [hi, lo] : p.covers()) reach[lo][hi] = true;
    for (std::size_t k = 0; k < m; ++k)
      for (std::size_t i = 0; i < m; ++i)
        if (reach[i][k])
          for (std::size_t j = 0; j < m; ++j)
            if (reach[k][j]) reach[i][j] = true;
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j) ASSERT_EQ(reach[i][j], majorizes(p[j], p[i])) << n;
    for (auto [hi, lo] : p.covers())
      for (std::size_t mid = 0; mid < m; ++mid) ASSERT_FALSE(p.less(lo, mid) && p.less(mid, hi)) << n;
  }
}

TEST(Dis, CoverTestWithoutEnumeration) {
  for (int n = 1; n <= 18; ++n) {
    const auto p = enumerate_dis(n);
    for (std::size_t a = 0; a < p.size(); ++a)
      for (std::size_t b = 0; b < p.size(); ++b) ASSERT_EQ(dis_covers(p[a], p[b]), p.covers_pair(a, b)) << p[a] << " " << p[b];
  }
  EXPECT_TRUE(dis_covers({6, 4}, {6, 3, 1}));
  EXPECT_FALSE(dis_covers({7, 2, 1}, {5, 3, 2}));
  EXPECT_FALSE(dis_covers({5, 3, 2}, {5, 3, 2}));
}

TEST(Dis, FixedLengthSliceIsClosedUnderMeetAndJoin) {
  for (int n = 1; n <= 20; ++n) {
    const auto all = enumerate_dis(n);
    for (int k = 1; triangular(k) <= n; ++k) {
      const auto slice = enumerate_dis_k(n, k);
      for (const auto& a : slice.elements())
        for (const auto& b : slice.elements()) {
          ASSERT_EQ(meet(all, a, b).length(), static_cast<std::size_t>(k));
          ASSERT_EQ(join(all, a, b).length(), static_cast<std::size_t>(k));
        }
    }
  }
}
