#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "splitblock/error.hpp"
#include "splitblock/partition.hpp"

namespace splitblock {

using VertexSet = std::uint64_t;

/// Simple undirected graph on at most 64 vertices, adjacency as bit rows.
class Graph {
 public:
  static constexpr int max_vertices = 64;

  Graph() = default;
  explicit Graph(int n) : adj_(static_cast<std::size_t>(check_size(n)), 0) {}

  int vertex_count() const noexcept { return static_cast<int>(adj_.size()); }
  VertexSet all() const noexcept {
    return adj_.size() == 64 ? ~VertexSet{0} : (VertexSet{1} << adj_.size()) - 1;
  }

  void add_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] |= VertexSet{1} << v;
    adj_[v] |= VertexSet{1} << u;
  }
  void remove_edge(int u, int v) {
    check_pair(u, v);
    adj_[u] &= ~(VertexSet{1} << v);
    adj_[v] &= ~(VertexSet{1} << u);
  }
  bool adjacent(int u, int v) const { return (adj_[u] >> v) & 1u; }
  VertexSet neighbors(int v) const { return adj_[v]; }
  int degree(int v) const { return std::popcount(adj_[v]); }

  int edge_count() const {
    int twice = 0;
    for (auto row : adj_) twice += std::popcount(row);
    return twice / 2;
  }

  /// Degrees indexed by vertex.
  std::vector<int> degrees() const {
    std::vector<int> d;
    for (int v = 0; v < vertex_count(); ++v) d.push_back(degree(v));
    return d;
  }

  /// Degrees sorted non-increasing, zeros included.
  std::vector<int> degree_sequence() const {
    auto d = degrees();
    std::sort(d.begin(), d.end(), std::greater<>());
    return d;
  }

  Graph complement() const {
    Graph g(vertex_count());
    for (int v = 0; v < vertex_count(); ++v) g.adj_[v] = ~adj_[v] & all() & ~(VertexSet{1} << v);
    return g;
  }

  bool is_clique(VertexSet s) const {
    for (VertexSet r = s; r; r &= r - 1) {
      const int v = std::countr_zero(r);
      if ((s & ~(VertexSet{1} << v)) & ~adj_[v]) return false;
    }
    return true;
  }
  bool is_stable(VertexSet s) const {
    for (VertexSet r = s; r; r &= r - 1)
      if (adj_[std::countr_zero(r)] & s) return false;
    return true;
  }
  /// Edges with both ends in s.
  int edges_within(VertexSet s) const {
    int twice = 0;
    for (VertexSet r = s; r; r &= r - 1) twice += std::popcount(adj_[std::countr_zero(r)] & s);
    return twice / 2;
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  static int check_size(int n) {
    if (n < 0 || n > max_vertices)
      throw size_limit_error("graph must have between 0 and 64 vertices, got " + std::to_string(n));
    return n;
  }
  void check_pair(int u, int v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count() || u == v)
      throw domain_error("invalid edge " + std::to_string(u) + " " + std::to_string(v));
  }

  std::vector<VertexSet> adj_;
};

inline std::vector<int> members(VertexSet s) {
  std::vector<int> out;
  for (; s; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

/// Text format: vertex count on the first line, then one "u v" pair per edge.
inline std::string to_text(const Graph& g) {
  std::ostringstream os;
  os << g.vertex_count() << '\n';
  for (int u = 0; u < g.vertex_count(); ++u)
    for (int v = u + 1; v < g.vertex_count(); ++v)
      if (g.adjacent(u, v)) os << u << ' ' << v << '\n';
  return os.str();
}

inline Graph parse_graph(std::string_view text) {
  std::istringstream is{std::string(text)};
  int n = 0;
  if (!(is >> n)) throw parse_error("graph text must start with the vertex count", 0);
  Graph g(n);
  int u = 0;
  int v = 0;
  std::size_t line = 1;
  while (is >> u) {
    ++line;
    if (!(is >> v)) throw parse_error("edge line is missing its second vertex", line);
    g.add_edge(u, v);
  }
  if (!is.eof()) throw parse_error("unexpected token in edge list", line);
  return g;
}

// ---------------------------------------------------------------------------

/// Classical test: even sum and, for every k, the first k degrees are at
/// most k(k-1) + sum_{i>k} min(d_i, k). Zeros are allowed.
inline bool erdos_gallai(const std::vector<int>& d) {
  if (!std::is_sorted(d.begin(), d.end(), std::greater<>()))
    throw domain_error("erdos_gallai: degrees must be non-increasing");
  if (!d.empty() && d.back() < 0) throw domain_error("erdos_gallai: negative degree");
  long total = 0;
  for (int x : d) total += x;
  if (total % 2 != 0) return false;
  const long n = static_cast<long>(d.size());
  long left = 0;
  for (long k = 1; k <= n; ++k) {
    left += d[k - 1];
    long right = k * (k - 1);
    for (long i = k; i < n; ++i) right += std::min<long>(d[i], k);
    if (left > right) return false;
  }
  return true;
}

inline bool erdos_gallai(const Partition& pi) {
  if (pi.empty()) throw domain_error("erdos_gallai: empty sequence");
  return erdos_gallai(pi.vector());
}

// ---------------------------------------------------------------------------
// Cliques

/// Every maximal clique inside `candidates` (Bron-Kerbosch with pivoting).
inline std::vector<VertexSet> maximal_cliques(const Graph& g, VertexSet candidates) {
  std::vector<VertexSet> out;
  auto rec = [&](auto&& self, VertexSet r, VertexSet p, VertexSet x) -> void {
    if (!p && !x) {
      out.push_back(r);
      return;
    }
    const VertexSet px = p | x;
    int pivot = std::countr_zero(px);
    int best = -1;
    for (VertexSet s = px; s; s &= s - 1) {
      const int u = std::countr_zero(s);
      const int c = std::popcount(p & g.neighbors(u));
      if (c > best) {
        best = c;
        pivot = u;
      }
    }
    for (VertexSet s = p & ~g.neighbors(pivot); s; s &= s - 1) {
      const int v = std::countr_zero(s);
      const VertexSet bit = VertexSet{1} << v;
      self(self, r | bit, p & g.neighbors(v), x & g.neighbors(v));
      p &= ~bit;
      x |= bit;
    }
  };
  rec(rec, 0, candidates, 0);
  return out;
}

inline std::vector<VertexSet> maximal_cliques(const Graph& g) { return maximal_cliques(g, g.all()); }

inline std::vector<VertexSet> maximum_cliques(const Graph& g) {
  auto all = maximal_cliques(g);
  int best = 0;
  for (auto c : all) best = std::max(best, std::popcount(c));
  std::erase_if(all, [best](VertexSet c) { return std::popcount(c) != best; });
  return all;
}

inline int clique_number(const Graph& g) {
  int best = 0;
  for (auto c : maximal_cliques(g)) best = std::max(best, std::popcount(c));
  return best;
}

inline int stability_number(const Graph& g) { return clique_number(g.complement()); }

// ---------------------------------------------------------------------------
// Induced subgraphs on four and five vertices

struct ForbiddenSubgraphs {
  bool two_k2 = false;
  bool c4 = false;
  bool c5 = false;
  bool p4 = false;

  bool any() const noexcept { return two_k2 || c4 || c5 || p4; }
  friend bool operator==(const ForbiddenSubgraphs&, const ForbiddenSubgraphs&) = default;
};

inline std::vector<std::string> names(const ForbiddenSubgraphs& f) {
  std::vector<std::string> out;
  if (f.two_k2) out.emplace_back("2K2");
  if (f.c4) out.emplace_back("C4");
  if (f.c5) out.emplace_back("C5");
  if (f.p4) out.emplace_back("P4");
  return out;
}

/// Exhaustive scan of all 4- and 5-vertex subsets.
inline ForbiddenSubgraphs forbidden_subgraphs(const Graph& g) {
  ForbiddenSubgraphs f;
  const int n = g.vertex_count();
  auto bit = [](int v) { return VertexSet{1} << v; };
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d) {
          const VertexSet s = bit(a) | bit(b) | bit(c) | bit(d);
          int deg[4];
          int i = 0;
          for (int v : {a, b, c, d}) deg[i++] = std::popcount(g.neighbors(v) & s);
          std::sort(deg, deg + 4);
          const int e = (deg[0] + deg[1] + deg[2] + deg[3]) / 2;
          if (e == 2 && deg[0] == 1) f.two_k2 = true;
          if (e == 4 && deg[0] == 2 && deg[3] == 2) f.c4 = true;
          if (e == 3 && deg[0] == 1 && deg[1] == 1 && deg[2] == 2) f.p4 = true;
          for (int x = d + 1; x < n && !f.c5; ++x) {
            const VertexSet t = s | bit(x);
            bool two_regular = true;
            for (int v : {a, b, c, d, x})
              if (std::popcount(g.neighbors(v) & t) != 2) two_regular = false;
            if (two_regular) f.c5 = true;  // the only 2-regular graph on 5 vertices
          }
          if (f.two_k2 && f.c4 && f.c5 && f.p4) return f;
        }
  return f;
}

inline bool is_split(const ForbiddenSubgraphs& f) { return !f.two_k2 && !f.c4 && !f.c5; }
inline bool is_threshold(const ForbiddenSubgraphs& f) { return !f.two_k2 && !f.c4 && !f.p4; }
inline bool is_pseudo_split(const ForbiddenSubgraphs& f) { return !f.two_k2 && !f.c4; }

inline bool is_split(const Graph& g) { return is_split(forbidden_subgraphs(g)); }

// ---------------------------------------------------------------------------
// Coloring

/// Exact chromatic number by DSATUR branch and bound, pruned by the clique
/// number. Graphs above `limit` vertices raise size_limit_error.
inline int chromatic_number(const Graph& g, int limit = 12) {
  const int n = g.vertex_count();
  if (n > limit)
    throw size_limit_error("chromatic_number: " + std::to_string(n) + " vertices exceeds the limit of " +
                           std::to_string(limit));
  if (n == 0) return 0;
  const int lower = clique_number(g);
  int best = n;
  std::vector<int> color(static_cast<std::size_t>(n), -1);

  auto pick = [&]() {
    int chosen = -1;
    int chosen_sat = -1;
    int chosen_deg = -1;
    for (int v = 0; v < n; ++v) {
      if (color[v] >= 0) continue;
      std::uint64_t used = 0;
      for (VertexSet s = g.neighbors(v); s; s &= s - 1) {
        const int c = color[std::countr_zero(s)];
        if (c >= 0) used |= std::uint64_t{1} << c;
      }
      const int sat = std::popcount(used);
      if (sat > chosen_sat || (sat == chosen_sat && g.degree(v) > chosen_deg)) {
        chosen = v;
        chosen_sat = sat;
        chosen_deg = g.degree(v);
      }
    }
    return chosen;
  };

  auto rec = [&](auto&& self, int colored, int used) -> void {
    if (best == lower) return;
    if (colored == n) {
      best = std::min(best, used);
      return;
    }
    const int v = pick();
    for (int c = 0; c <= used && c < best - 1; ++c) {
      bool clash = false;
      for (VertexSet s = g.neighbors(v); s; s &= s - 1)
        if (color[std::countr_zero(s)] == c) clash = true;
      if (clash) continue;
      color[v] = c;
      self(self, colored + 1, std::max(used, c + 1));
      color[v] = -1;
      if (best == lower) return;
    }
  };
  rec(rec, 0, 0);
  return best;
}

}  // namespace splitblock
