#include <gtest/gtest.h>

#include "test_support.hpp"

using namespace splitblock;
using namespace splitblock::test;

TEST(Graph, BasicsAndLimits) {
  Graph g = path(4);
  EXPECT_EQ(g.edge_count(), 3);
  EXPECT_EQ(g.degree_sequence(), (std::vector<int>{2, 2, 1, 1}));
  EXPECT_EQ(g.complement().edge_count(), 3);
  EXPECT_THROW(g.add_edge(1, 1), domain_error);
  EXPECT_THROW(g.add_edge(0, 4), domain_error);
  EXPECT_THROW(Graph(65), size_limit_error);
  EXPECT_NO_THROW(Graph(64).complement());
}

TEST(Graph, TextRoundTrip) {
  const Graph g = cycle(5);
  EXPECT_EQ(to_text(g), "5\n0 1\n0 4\n1 2\n2 3\n3 4\n");
  EXPECT_EQ(parse_graph(to_text(g)), g);
  EXPECT_EQ(parse_graph("3\n").edge_count(), 0);
  EXPECT_THROW(parse_graph(""), parse_error);
  EXPECT_THROW(parse_graph("3\n0 1\n2\n"), parse_error);
  EXPECT_THROW(parse_graph("3\n0 x\n"), parse_error);
  EXPECT_THROW(parse_graph("2\n0 5\n"), domain_error);
}

TEST(ErdosGallai, Examples) {
  EXPECT_TRUE(erdos_gallai(Partition{6, 5, 2, 2, 2, 1, 1, 1}));
  EXPECT_FALSE(erdos_gallai(Partition{3, 1}));
  EXPECT_TRUE(erdos_gallai(Partition{2, 2, 2}));
  EXPECT_FALSE(erdos_gallai(Partition{1}));
  EXPECT_THROW(erdos_gallai(Partition{}), domain_error);
  EXPECT_THROW(erdos_gallai(std::vector<int>{1, 2}), domain_error);
}

TEST(ErdosGallai, AgreesWithBlockCriterionAndHavelHakimiUpToThirty) {
  for (int s = 1; s <= 30; ++s) {
    for_each_partition(s, [&](const Partition& pi) {
      const auto ab = decompose(pi);
      const bool criterion = s % 2 == 0 && weakly_majorizes(ab.beta, ab.alpha);
      const bool eg = erdos_gallai(pi);
      ASSERT_EQ(eg, criterion) << pi;
      if (s <= 22) { ASSERT_EQ(eg, havel_hakimi(pi.vector())) << pi; }
    });
  }
}

TEST(RealizeSplit, Examples) {
  const Partition pi{6, 5, 2, 2, 2, 1, 1, 1};
  for (auto tie : {TieBreak::LowIndex, TieBreak::HighIndex}) {
    const auto g = realize_split(pi, tie);
    EXPECT_EQ(g.vertex_count(), 8);
    EXPECT_EQ(g.degrees(), pi.vector());
    EXPECT_TRUE(is_split(g));
    EXPECT_GE(clique_number(g), 3);
  }
  const auto p3 = realize_split(Partition{2, 1, 1});
  EXPECT_EQ(p3.edge_count(), 2);
  EXPECT_TRUE(p3.adjacent(0, 1) && p3.adjacent(0, 2));
  const auto k2 = realize_split(Partition{1, 1});
  EXPECT_EQ(k2.edge_count(), 1);
  EXPECT_THROW(realize_split(Partition{2, 2, 2, 2}), realization_error);
  EXPECT_THROW(realize_split(Partition{}), realization_error);
  EXPECT_EQ(realize_split(std::vector<int>{1, 1, 0}).vertex_count(), 3);
}

TEST(RealizeSplit, EverySplitSequenceUpToTwentyTwo) {
  for (int s = 2; s <= 22; s += 2) {
    for_each_partition(s, [&](const Partition& pi) {
      if (!sequence_to_block(pi).is_sblock()) return;
      const auto g = realize_split(pi);
      ASSERT_EQ(g.degrees(), pi.vector()) << pi;
      ASSERT_TRUE(is_split(g)) << pi;
    });
  }
}

TEST(Balance, Examples) {
  EXPECT_TRUE(balance_status(path(4)).balanced);
  const auto k13 = balance_status(star(3));
  EXPECT_FALSE(k13.balanced);
  EXPECT_TRUE(k13.swing.has_value());
  const auto k3 = balance_status(complete(3));
  EXPECT_FALSE(k3.balanced);
  EXPECT_EQ(k3.omega, 3);
  EXPECT_EQ(k3.alpha, 1);
  EXPECT_THROW(balance_status(cycle(4)), domain_error);
}

TEST(Balance, WitnessIsAPartition) {
  const auto st = balance_status(realize_split(Partition{5, 3, 2, 2, 1, 1}));
  EXPECT_EQ(st.clique | st.stable, (VertexSet{1} << 6) - 1);
  EXPECT_EQ(st.clique & st.stable, 0u);
}

TEST(Forbidden, Examples) {
  EXPECT_EQ(names(forbidden_subgraphs(cycle(5))), (std::vector<std::string>{"C5", "P4"}));
  EXPECT_EQ(names(forbidden_subgraphs(cycle(4))), std::vector<std::string>{"C4"});
  EXPECT_EQ(names(forbidden_subgraphs(path(4))), std::vector<std::string>{"P4"});
  EXPECT_EQ(names(forbidden_subgraphs(make_graph(4, {{0, 1}, {2, 3}}))), std::vector<std::string>{"2K2"});
  EXPECT_TRUE(names(forbidden_subgraphs(complete(5))).empty());
}

TEST(Forbidden, ThresholdExactlyWhenAlphaEqualsBeta) {
  for (int s = 2; s <= 20; s += 2) {
    for_each_partition(s, [&](const Partition& pi) {
      const auto r = sequence_to_block(pi);
      if (!r.is_sblock()) return;
      const auto f = forbidden_subgraphs(realize_split(pi, TieBreak::HighIndex));
      ASSERT_TRUE(is_split(f)) << pi;
      ASSERT_EQ(is_threshold(f), r.alpha == r.beta) << pi;
    });
  }
}

TEST(Chromatic, Examples) {
  EXPECT_EQ(chromatic_number(cycle(5)), 3);
  EXPECT_EQ(chromatic_number(complete(4)), 4);
  EXPECT_EQ(chromatic_number(Graph(3)), 1);
  EXPECT_EQ(chromatic_number(Graph(0)), 0);
  EXPECT_EQ(chromatic_number(cycle(7)), 3);
  EXPECT_EQ(chromatic_number(path(6)), 2);
  EXPECT_THROW(chromatic_number(Graph(13)), size_limit_error);
  EXPECT_EQ(chromatic_number(Graph(13), 13), 1);
}

TEST(Chromatic, AgreesWithBruteForceOnSmallGraphs) {
  // every labelled graph on 5 vertices
  const int n = 5;
  std::vector<std::pair<int, int>> pairs;
  for (int u = 0; u < n; ++u)
    for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
  for (unsigned mask = 0; mask < (1u << pairs.size()); ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1u) g.add_edge(pairs[i].first, pairs[i].second);
    int brute = n;
    for (int k = 1; k <= n && brute == n; ++k) {
      // try every assignment of k colours
      int total = 1;
      for (int i = 0; i < n; ++i) total *= k;
      for (int code = 0; code < total; ++code) {
        int c[5];
        int x = code;
        for (int i = 0; i < n; ++i) {
          c[i] = x % k;
          x /= k;
        }
        bool proper = true;
        for (auto [u, v] : pairs)
          if (g.adjacent(u, v) && c[u] == c[v]) proper = false;
        if (proper) {
          brute = k;
          break;
        }
      }
    }
    ASSERT_EQ(chromatic_number(g), brute) << to_text(g);
  }
}

TEST(NgStatus, Examples) {
  const auto g = realize_split(Partition{5, 4, 4, 3, 2, 1, 1});
  EXPECT_EQ(ng_status(g), NgStatus::NG1And2);
  EXPECT_TRUE(is_ng_by_definition(g));

  const auto ng3 = realize_ng3(Partition{7, 6, 4, 4, 4, 4, 4, 1});
  EXPECT_EQ(ng3.degrees(), (std::vector<int>{7, 6, 4, 4, 4, 4, 4, 1}));
  EXPECT_EQ(ng_status(ng3), NgStatus::NG3);
  EXPECT_TRUE(is_ng_by_definition(ng3));
  const auto f = forbidden_subgraphs(ng3);
  EXPECT_TRUE(f.c5);
  EXPECT_TRUE(is_pseudo_split(f));
  EXPECT_FALSE(is_split(f));

  EXPECT_EQ(ng_status(path(4)), NgStatus::NotNG);
  EXPECT_FALSE(is_ng_by_definition(path(4)));
  EXPECT_EQ(ng_status(cycle(5)), NgStatus::NG3);
  EXPECT_THROW(realize_ng3(Partition{6, 5, 2, 2, 2, 1, 1, 1}), realization_error);
}

TEST(NgStatus, ChromaticNumberOfNgRealizationsIsTheMark) {
  for (int s = 2; s <= 20; s += 2) {
    for_each_partition(s, [&](const Partition& pi) {
      const auto r = sequence_to_block(pi);
      if (!r.is_sblock()) return;
      const auto c = classify(r.block());
      if (!c.is_ng1 && !c.is_ng2) return;
      ASSERT_EQ(chromatic_number(realize_split(pi), Graph::max_vertices), r.mark) << pi;
    });
  }
}

TEST(NgStatus, BlockAndGraphClassificationAgreeUpToTwenty) {
  for (int s = 2; s <= 20; s += 2) {
    for_each_partition(s, [&](const Partition& pi) {
      const auto c = classify_sequence(pi);
      if (c.is_sblock) {
        for (auto tie : {TieBreak::LowIndex, TieBreak::HighIndex}) {
          const auto g = realize_split(pi, tie);
          ASSERT_EQ(comparable_part(classify_graph(g, Graph::max_vertices)), comparable_part(c)) << pi;
        }
      } else if (c.is_ng3) {
        ASSERT_EQ(comparable_part(classify_graph(realize_ng3(pi), Graph::max_vertices)), comparable_part(c)) << pi;
      }
    });
  }
}

TEST(VerifyTheorems, VacuousAndSmall) {
  const auto one = verify_theorems(1);
  EXPECT_TRUE(one.ok());
  EXPECT_EQ(one.graphs, 1);
  const auto five = verify_theorems(5);
  EXPECT_TRUE(five.ok());
  EXPECT_EQ(five.graphs, 1 + 2 + 8 + 64 + 1024);
  for (const auto& t : five.theorems) EXPECT_TRUE(t.counterexamples.empty()) << t.name;
  EXPECT_THROW(verify_theorems(9), size_limit_error);
}

TEST(VerifyTheorems, SixVerticesThreaded) {
  const auto r = verify_theorems(6, 2);
  EXPECT_TRUE(r.ok());
  EXPECT_EQ(r.graphs, 1 + 2 + 8 + 64 + 1024 + 32768);
  const auto single = verify_theorems(6, 1);
  ASSERT_EQ(r.theorems.size(), single.theorems.size());
  for (std::size_t i = 0; i < r.theorems.size(); ++i) EXPECT_EQ(r.theorems[i].checked, single.theorems[i].checked);
}
