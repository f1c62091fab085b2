#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <mutex>
#include <numeric>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "splitblock/block.hpp"
#include "splitblock/graph.hpp"
#include "splitblock/partition.hpp"

namespace splitblock {

// ---------------------------------------------------------------------------
// Realization

/// How ties are broken in the bipartite step of realize_split.
enum class TieBreak { LowIndex, HighIndex };

namespace detail {

inline int mark_with_zeros(const std::vector<int>& d) {
  int m = 0;
  for (std::size_t i = 0; i < d.size(); ++i) {
    if (d[i] >= static_cast<int>(i)) m = static_cast<int>(i) + 1;
    else break;
  }
  return m;
}

inline std::string sequence_text(const std::vector<int>& d) {
  std::string s;
  for (std::size_t i = 0; i < d.size(); ++i) s += (i ? "," : "") + std::to_string(d[i]);
  return s;
}

}  // namespace detail

/// Split realization of a non-increasing sequence that may contain zeros.
/// Vertex i receives degree d[i]; the first m vertices form the clique.
inline Graph realize_split(const std::vector<int>& d, TieBreak tie = TieBreak::LowIndex) {
  if (d.empty()) throw realization_error("realize_split: empty sequence");
  if (!std::is_sorted(d.begin(), d.end(), std::greater<>()) || d.back() < 0)
    throw realization_error("realize_split: sequence must be non-increasing and non-negative");
  const int n = static_cast<int>(d.size());
  const int m = detail::mark_with_zeros(d);
  Graph g(n);
  for (int u = 0; u < m; ++u)
    for (int v = u + 1; v < m; ++v) g.add_edge(u, v);

  std::vector<int> capacity;
  for (int u = 0; u < m; ++u) {
    capacity.push_back(d[u] - (m - 1));
    if (capacity.back() < 0)
      throw realization_error("realize_split: (" + detail::sequence_text(d) + ") is not split");
  }
  std::vector<int> order(static_cast<std::size_t>(n - m));
  std::iota(order.begin(), order.end(), m);
  if (tie == TieBreak::HighIndex) std::reverse(order.begin(), order.end());
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return d[a] > d[b]; });

  std::vector<int> partners(static_cast<std::size_t>(m));
  for (int s : order) {
    std::iota(partners.begin(), partners.end(), 0);
    if (tie == TieBreak::HighIndex) std::reverse(partners.begin(), partners.end());
    std::stable_sort(partners.begin(), partners.end(),
                     [&](int a, int b) { return capacity[a] > capacity[b]; });
    if (d[s] > m)
      throw realization_error("realize_split: (" + detail::sequence_text(d) + ") is not split");
    for (int i = 0; i < d[s]; ++i) {
      const int k = partners[i];
      if (capacity[k] == 0)
        throw realization_error("realize_split: (" + detail::sequence_text(d) + ") is not split");
      --capacity[k];
      g.add_edge(k, s);
    }
  }
  if (std::any_of(capacity.begin(), capacity.end(), [](int c) { return c != 0; }))
    throw realization_error("realize_split: (" + detail::sequence_text(d) + ") is not split");
  return g;
}

inline Graph realize_split(const Partition& pi, TieBreak tie = TieBreak::LowIndex) {
  if (pi.empty()) throw realization_error("realize_split: empty sequence");
  return realize_split(pi.vector(), tie);
}

/// NG-3 realization: lower the five degrees at positions k-1..k+3 (k the
/// length of alpha) by two, realize the result as a split graph, then join
/// those five vertices in a 5-cycle.
inline Graph realize_ng3(const Partition& pi) {
  if (pi.empty()) throw realization_error("realize_ng3: empty sequence");
  const auto ab = decompose(pi);
  if (!is_ng3_pair(ab.alpha, ab.beta))
    throw realization_error("realize_ng3: (" + to_string(pi) + ") does not have the NG-3 shape");
  const int k = static_cast<int>(ab.alpha.length());
  std::vector<int> d = pi.vector();
  if (static_cast<int>(d.size()) < k + 3 || k < 2)
    throw realization_error("realize_ng3: (" + to_string(pi) + ") is too short");
  const int first = k - 2;  // 0-based index of v_{k-1}
  for (int i = first; i < first + 5; ++i) d[i] -= 2;
  Graph g = realize_split(d);
  for (int i = 0; i < 5; ++i) {
    const int u = first + i;
    const int v = first + (i + 1) % 5;
    if (g.adjacent(u, v)) throw realization_error("realize_ng3: cycle vertices are not stable");
    g.add_edge(u, v);
  }
  if (g.degrees() != pi.vector())
    throw realization_error("realize_ng3: degrees of the result differ from (" + to_string(pi) + ")");
  return g;
}

// ---------------------------------------------------------------------------
// Balance

struct BalanceStatus {
  bool balanced = false;
  int omega = 0;
  int alpha = 0;
  VertexSet clique = 0;  // K of a K-max partition
  VertexSet stable = 0;  // its complement S
  std::optional<int> swing;  // for unbalanced graphs: a vertex of K that S can absorb
};

/// Balanced iff some maximum clique K leaves a maximum stable set V - K.
inline BalanceStatus balance_status(const Graph& g) {
  if (!is_split(g)) throw domain_error("balance_status: graph is not split");
  BalanceStatus st;
  st.omega = clique_number(g);
  st.alpha = stability_number(g);
  const auto cliques = maximum_cliques(g);
  for (auto k : cliques) {
    const VertexSet s = g.all() & ~k;
    if (!g.is_stable(s)) continue;
    if (!st.clique) {
      st.clique = k;
      st.stable = s;
    }
    if (std::popcount(s) == st.alpha) {
      st.balanced = true;
      st.clique = k;
      st.stable = s;
      return st;
    }
  }
  if (!st.clique && g.vertex_count() > 0) throw domain_error("balance_status: no K-max partition");
  for (int v : members(st.clique)) {
    if (!(g.neighbors(v) & st.stable)) {
      st.swing = v;
      break;
    }
  }
  return st;
}

// ---------------------------------------------------------------------------
// NG status

struct ABCPartition {
  int chi = 0;
  VertexSet a = 0;
  VertexSet b = 0;
  VertexSet c = 0;
};

/// ABC-partition for a known chromatic number.
inline ABCPartition abc_partition_for(const Graph& g, int chi) {
  ABCPartition p;
  p.chi = chi;
  for (int v = 0; v < g.vertex_count(); ++v) {
    const auto bit = VertexSet{1} << v;
    const int d = g.degree(v);
    if (d == chi - 1) p.a |= bit;
    else if (d > chi - 1) p.b |= bit;
    else p.c |= bit;
  }
  return p;
}

inline ABCPartition abc_partition(const Graph& g, int limit = 12) {
  return abc_partition_for(g, chromatic_number(g, limit));
}

enum class NgStatus { NotNG, NG1, NG2, NG3, NG1And2 };

inline std::string ng_status_name(NgStatus s) {
  switch (s) {
    case NgStatus::NotNG: return "not-NG";
    case NgStatus::NG1: return "NG-1";
    case NgStatus::NG2: return "NG-2";
    case NgStatus::NG3: return "NG-3";
    case NgStatus::NG1And2: return "NG-1-and-2";
  }
  return "?";
}

inline bool is_ng1(NgStatus s) { return s == NgStatus::NG1 || s == NgStatus::NG1And2; }
inline bool is_ng2(NgStatus s) { return s == NgStatus::NG2 || s == NgStatus::NG1And2; }

/// Induced 5-cycle test on a 5-vertex set.
inline bool is_five_cycle(const Graph& g, VertexSet s) {
  if (std::popcount(s) != 5) return false;
  for (int v : members(s))
    if (std::popcount(g.neighbors(v) & s) != 2) return false;
  return true;
}

/// Conditions (i)-(v) on the ABC-partition, then the shape of G[A].
inline NgStatus ng_status(const Graph& g, const ABCPartition& p) {
  if (!p.a) return NgStatus::NotNG;
  if (!g.is_clique(p.b) || !g.is_stable(p.c)) return NgStatus::NotNG;
  for (int u : members(p.a)) {
    if ((g.neighbors(u) & p.b) != p.b) return NgStatus::NotNG;
    if (g.neighbors(u) & p.c) return NgStatus::NotNG;
  }
  const bool clique = g.is_clique(p.a);
  const bool stable = g.is_stable(p.a);
  if (clique && stable) return NgStatus::NG1And2;
  if (clique) return NgStatus::NG1;
  if (stable) return NgStatus::NG2;
  if (is_five_cycle(g, p.a)) return NgStatus::NG3;
  return NgStatus::NotNG;
}

inline NgStatus ng_status(const Graph& g, int limit = 12) { return ng_status(g, abc_partition(g, limit)); }

/// chi(G) + chi(complement) = |V| + 1.
inline bool is_ng_by_definition(const Graph& g, int limit = 12) {
  return chromatic_number(g, limit) + chromatic_number(g.complement(), limit) == g.vertex_count() + 1;
}

// ---------------------------------------------------------------------------
// Graph-level classification, comparable with block-level classify

/// Classification of a graph computed from its structure only.
inline Classification classify_graph(const Graph& g, int limit = 12) {
  Classification c;
  const auto f = forbidden_subgraphs(g);
  c.is_sblock = is_split(f);
  c.is_threshold = is_threshold(f);
  c.is_pseudo_split = is_pseudo_split(f);
  if (c.is_sblock) {
    const auto bal = balance_status(g);
    c.is_balanced = bal.balanced;
    c.is_unbalanced = !bal.balanced;
  }
  const auto st = ng_status(g, limit);
  c.is_ng1 = is_ng1(st);
  c.is_ng2 = is_ng2(st);
  c.is_ng3 = st == NgStatus::NG3;
  return c;
}

/// The flags both sides can determine; threshold-covered has no graph-level
/// counterpart and is cleared.
inline Classification comparable_part(Classification c) {
  c.is_threshold_covered = false;
  return c;
}

// ---------------------------------------------------------------------------
// Exhaustive theorem verification

struct TheoremResult {
  std::string name;
  long long checked = 0;
  long long violations = 0;
  std::vector<std::string> counterexamples;  // graph text, first few only
};

struct TheoremReport {
  int n_limit = 0;
  long long graphs = 0;
  std::vector<TheoremResult> theorems;

  bool ok() const {
    return std::all_of(theorems.begin(), theorems.end(), [](const auto& t) { return t.violations == 0; });
  }
};

namespace detail {

enum TheoremIndex {
  kBalancedP4,
  kThresholdUnbalanced,
  kUnbalancedNg12,
  kPseudoNgBalanced,
  kPseudoSplitNg3,
  kAbcCharacterization,
  kBlockClassification,
  kTheoremCount
};

inline const char* theorem_name(int i) {
  static const char* names[] = {
      "balanced split graphs contain an induced P4",
      "threshold graphs are unbalanced split graphs",
      "unbalanced split = NG-1 union NG-2",
      "pseudo-split = NG disjoint-union balanced split",
      "pseudo-split = split disjoint-union NG-3",
      "NG by chromatic sum = NG by ABC-partition",
      "block classification = graph classification",
  };
  return names[i];
}

struct TheoremTally {
  long long checked[kTheoremCount] = {};
  long long violations[kTheoremCount] = {};
  std::vector<std::string> examples[kTheoremCount];
  long long graphs = 0;

  void record(int t, bool holds, const Graph& g, std::size_t keep) {
    ++checked[t];
    if (holds) return;
    ++violations[t];
    if (examples[t].size() < keep) examples[t].push_back(to_text(g));
  }
};

inline void check_graph(const Graph& g, TheoremTally& tally, std::size_t keep) {
  const auto f = forbidden_subgraphs(g);
  const bool split = is_split(f);
  const bool threshold = is_threshold(f);
  const bool pseudo = is_pseudo_split(f);
  bool balanced = false;
  if (split) balanced = balance_status(g).balanced;
  const int n = g.vertex_count();
  const auto abc = abc_partition_for(g, chromatic_number(g, n));
  const auto st = ng_status(g, abc);
  const bool ng = abc.chi + chromatic_number(g.complement(), n) == n + 1;
  const bool ng3 = st == NgStatus::NG3;
  const bool ng12 = is_ng1(st) || is_ng2(st);

  if (split && balanced) tally.record(kBalancedP4, f.p4, g, keep);
  if (threshold) tally.record(kThresholdUnbalanced, split && !balanced, g, keep);
  tally.record(kUnbalancedNg12, (split && !balanced) == ng12, g, keep);
  tally.record(kPseudoNgBalanced, pseudo == (ng || (split && balanced)) && !(ng && split && balanced), g,
               keep);
  tally.record(kPseudoSplitNg3, pseudo == (split || ng3) && !(split && ng3), g, keep);
  tally.record(kAbcCharacterization, ng == (st != NgStatus::NotNG), g, keep);

  if (g.edge_count() > 0) {
    std::vector<int> d = g.degree_sequence();
    std::erase(d, 0);
    Classification graph_side;
    graph_side.is_sblock = split;
    graph_side.is_threshold = threshold;
    graph_side.is_pseudo_split = pseudo;
    graph_side.is_balanced = split && balanced;
    graph_side.is_unbalanced = split && !balanced;
    graph_side.is_ng1 = is_ng1(st);
    graph_side.is_ng2 = is_ng2(st);
    graph_side.is_ng3 = ng3;
    const auto block_side = comparable_part(classify_sequence(Partition(std::move(d))));
    tally.record(kBlockClassification, block_side == graph_side, g, keep);
  }
  ++tally.graphs;
}

}  // namespace detail

/// Every labeled graph on 1..n_limit vertices, checked against the class
/// identities. `threads` = 0 uses the hardware concurrency.
inline TheoremReport verify_theorems(int n_limit, unsigned threads = 1, std::size_t keep = 5) {
  if (n_limit > 8) throw size_limit_error("verify_theorems: n_limit above 8 is not supported");
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  detail::TheoremTally total;
  std::mutex merge;
  for (int n = 1; n <= n_limit; ++n) {
    std::vector<std::pair<int, int>> slots;
    for (int u = 0; u < n; ++u)
      for (int v = u + 1; v < n; ++v) slots.emplace_back(u, v);
    const std::uint64_t count = std::uint64_t{1} << slots.size();
    std::atomic<std::uint64_t> next{0};
    constexpr std::uint64_t chunk = 4096;
    auto work = [&]() {
      detail::TheoremTally local;
      for (;;) {
        const std::uint64_t begin = next.fetch_add(chunk);
        if (begin >= count) break;
        const std::uint64_t end = std::min(count, begin + chunk);
        for (std::uint64_t mask = begin; mask < end; ++mask) {
          Graph g(n);
          for (std::size_t e = 0; e < slots.size(); ++e)
            if ((mask >> e) & 1u) g.add_edge(slots[e].first, slots[e].second);
          detail::check_graph(g, local, keep);
        }
      }
      std::lock_guard lock(merge);
      total.graphs += local.graphs;
      for (int t = 0; t < detail::kTheoremCount; ++t) {
        total.checked[t] += local.checked[t];
        total.violations[t] += local.violations[t];
        for (auto& ex : local.examples[t])
          if (total.examples[t].size() < keep) total.examples[t].push_back(std::move(ex));
      }
    };
    const unsigned workers = count < chunk ? 1u : threads;
    std::vector<std::thread> pool;
    for (unsigned i = 1; i < workers; ++i) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
  }
  TheoremReport report;
  report.n_limit = n_limit;
  report.graphs = total.graphs;
  for (int t = 0; t < detail::kTheoremCount; ++t) {
    report.theorems.push_back({detail::theorem_name(t), total.checked[t], total.violations[t],
                               std::move(total.examples[t])});
  }
  return report;
}

}  // namespace splitblock
