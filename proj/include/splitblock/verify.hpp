#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "splitblock/block.hpp"
#include "splitblock/dis_lattice.hpp"
#include "splitblock/graph_oracle.hpp"
#include "splitblock/sblock_poset.hpp"

namespace splitblock {

/// Outcome of one invariant suite: how many cases were checked and the
/// first few failures (all failures are counted).
struct SuiteResult {
  SuiteResult() = default;
  explicit SuiteResult(std::string suite) : name(std::move(suite)) {}

  std::string name;
  long long checked = 0;
  long long failed = 0;
  std::vector<std::string> failures;

  bool ok() const noexcept { return failed == 0; }
  void expect(bool cond, const std::function<std::string()>& describe) {
    ++checked;
    if (cond) return;
    ++failed;
    if (failures.size() < 10) failures.push_back(describe());
  }
};

inline void merge_into(SuiteResult& into, const SuiteResult& from) {
  into.checked += from.checked;
  into.failed += from.failed;
  for (const auto& f : from.failures)
    if (into.failures.size() < 10) into.failures.push_back(f);
}

namespace detail {

inline std::string at_n(int n) { return "n=" + std::to_string(n) + ": "; }

inline std::vector<std::size_t> union_members(const SBlockPoset& p, std::initializer_list<AmphoraId> ids) {
  std::vector<std::size_t> out;
  for (auto id : ids) {
    auto m = p.members(id);
    out.insert(out.end(), m.begin(), m.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline std::vector<std::size_t> indices_of(const SBlockPoset& p, const std::vector<Block>& blocks) {
  std::vector<std::size_t> out;
  for (const auto& b : blocks) out.push_back(p.index_of(b));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Dis(n)

/// Dis(n) is a lattice, Dis_k(n) a sublattice, and the last-part lemmas hold
/// for meets and joins inside Dis_k(n).
inline SuiteResult check_dis(int n) {
  SuiteResult r{"Dis(n) lattice and last-part lemmas"};
  const auto dis = enumerate_dis(n);
  for (std::size_t i = 0; i < dis.size(); ++i) {
    for (std::size_t j = i; j < dis.size(); ++j) {
      const auto& g1 = dis[i];
      const auto& g2 = dis[j];
      Partition m;
      Partition jn;
      try {
        m = meet(dis, g1, g2);
        jn = join(dis, g1, g2);
      } catch (const lattice_error& e) {
        r.expect(false, [&] { return detail::at_n(n) + to_label(g1) + "," + to_label(g2) + ": " + e.what(); });
        continue;
      }
      r.expect(true, [] { return std::string(); });
      if (g1.length() != g2.length()) continue;
      r.expect(m.length() == g1.length() && jn.length() == g1.length(), [&] {
        return detail::at_n(n) + "meet/join of " + to_label(g1) + "," + to_label(g2) + " leaves Dis_k";
      });
      if (g1.last() == 1 && g2.last() == 1)
        r.expect(m.last() == 1 && jn.last() == 1, [&] {
          return detail::at_n(n) + to_label(g1) + "," + to_label(g2) + " end in 1, meet/join do not";
        });
      if (g1.last() >= 2 && g2.last() >= 2)
        r.expect(m.last() >= 2 && jn.last() >= 2, [&] {
          return detail::at_n(n) + to_label(g1) + "," + to_label(g2) + " end in >=2, meet/join do not";
        });
    }
  }
  return r;
}

// ---------------------------------------------------------------------------
// S-Block(n) structure

/// Labels, amphora shapes (bottoms, tops, unions), cover steps, TC(n),
/// W(n) compatibility, and the up/down closure properties.
inline std::vector<SuiteResult> check_structure(const SBlockPoset& p) {
  const int n = p.n();
  const auto& P = p.poset();
  const auto& E = p.elements();
  SuiteResult labels{"amphora labels partition S-Block(n)"};
  SuiteResult shapes{"amphora bottoms and tops"};
  SuiteResult unions{"amphora unions along W(n)"};
  SuiteResult cover{"cover steps change one component by a Dis(n) cover"};
  SuiteResult tc{"TC(n) antichain"};
  SuiteResult wcompat{"block order refines W(n)"};
  SuiteResult closure{"balanced down-closed, unbalanced up-closed, NG-1/NG-2 down-closed"};
  SuiteResult ngshape{"NG sub-amphoras"};

  // labels
  std::size_t labelled = 0;
  for (std::size_t i = 0; i < E.size(); ++i) {
    const auto& b = E[i];
    const auto id = p.label(i).amphora;
    const auto la = b.alpha().length();
    const auto lb = b.beta().length();
    labels.expect(static_cast<int>(la) == id.k && (id.balanced ? la == lb + 1 : la == lb),
                  [&] { return detail::at_n(n) + to_label(b) + " mislabelled"; });
  }
  for (auto id : p.amphoras()) labelled += p.members(id).size();
  labels.expect(labelled == E.size(), [&] { return detail::at_n(n) + "labels do not cover S-Block(n)"; });
  for (int k = 1; triangular(k) <= n + k + 1; ++k) {
    const bool want = triangular(k) <= n;
    labels.expect(!p.members({k, false}).empty() == want,
                  [&] { return detail::at_n(n) + amphora_name(n, {k, false}) + " emptiness"; });
    if (k >= 2)
      labels.expect(!p.members({k, true}).empty() == want,
                    [&] { return detail::at_n(n) + amphora_name(n, {k, true}) + " emptiness"; });
  }

  // shapes
  for (auto id : p.amphoras()) {
    const auto members = p.members(id);
    const auto bottom = p.index_of(amphora_bottom(n, id));
    const auto tops = detail::indices_of(p, amphora_tops(p, id));
    const auto claimed = verify_amphora(P, members, bottom, tops);
    shapes.expect(claimed.ok, [&] { return detail::at_n(n) + amphora_name(n, id) + ": " + claimed.reason; });
    const auto derived = verify_amphora(P, members);
    shapes.expect(derived.ok && derived.bottom == bottom && derived.tops == tops,
                  [&] { return detail::at_n(n) + amphora_name(n, id) + " derived shape differs"; });
  }
  for (int k = 2; triangular(k) <= n; ++k) {
    const auto bottom = p.index_of(amphora_bottom(n, {k, true}));
    const AmphoraId up{k, false};
    const AmphoraId mid{k, true};
    const AmphoraId low{k - 1, false};
    for (const auto& set : {detail::union_members(p, {up, mid}), detail::union_members(p, {mid, low}),
                            detail::union_members(p, {up, mid, low})}) {
      const auto res = verify_amphora(P, set);
      unions.expect(res.ok && res.bottom == bottom, [&] {
        return detail::at_n(n) + "union around " + amphora_name(n, mid) + ": " +
               (res.ok ? "wrong bottom" : res.reason);
      });
    }
  }

  // covers
  const auto& dis = p.dis();
  for (auto [hi, lo] : P.covers()) {
    const auto& x = E[hi];
    const auto& y = E[lo];
    const bool beta_step = x.alpha() == y.alpha() &&
                           dis.covers_pair(dis.require_index(y.beta()), dis.require_index(x.beta()));
    const bool alpha_step = x.beta() == y.beta() &&
                            dis.covers_pair(dis.require_index(x.alpha()), dis.require_index(y.alpha()));
    cover.expect(beta_step != alpha_step,
                 [&] { return detail::at_n(n) + to_label(x) + " > " + to_label(y) + " is not a single step"; });
  }

  // TC(n)
  std::vector<std::size_t> tc_members;
  for (std::size_t i = 0; i < E.size(); ++i)
    if (p.label(i).in_tc) tc_members.push_back(i);
  tc.expect(P.is_antichain(tc_members), [&] { return detail::at_n(n) + "TC(n) is not an antichain"; });
  for (auto i : tc_members) {
    std::vector<std::size_t> above;
    for (std::size_t j = 0; j < E.size(); ++j)
      if (P.less(i, j)) above.push_back(j);
    const auto a = p.index_of(make_block(E[i].alpha(), E[i].alpha()));
    const auto b = p.index_of(make_block(E[i].beta(), E[i].beta()));
    std::vector<std::size_t> want{std::min(a, b), std::max(a, b)};
    tc.expect(above == want,
              [&] { return detail::at_n(n) + to_label(E[i]) + " is not below exactly two threshold blocks"; });
  }

  // W(n) and closure
  const auto w = build_w(p);
  std::vector<std::vector<bool>> realised(w.size(), std::vector<bool>(w.size(), false));
  for (std::size_t i = 0; i < E.size(); ++i) {
    for (std::size_t j = 0; j < E.size(); ++j) {
      const auto ai = w.require_index(p.label(i).amphora);
      const auto aj = w.require_index(p.label(j).amphora);
      const bool less = P.less(i, j);
      if (less) realised[ai][aj] = true;
      wcompat.expect(!less || w.leq(ai, aj), [&] {
        return detail::at_n(n) + to_label(E[i]) + " < " + to_label(E[j]) + " across W-incomparable amphoras";
      });
      if (!P.leq(i, j)) continue;
      const auto& lo = p.label(i);
      const auto& hi = p.label(j);
      closure.expect(!hi.amphora.balanced || lo.amphora.balanced,
                     [&] { return detail::at_n(n) + "balanced " + to_label(E[j]) + " above unbalanced " + to_label(E[i]); });
      if (!lo.amphora.balanced && !hi.amphora.balanced) {
        closure.expect((!hi.ng1 || lo.ng1) && (!hi.ng2 || lo.ng2), [&] {
          return detail::at_n(n) + "NG flag of " + to_label(E[j]) + " not inherited by " + to_label(E[i]);
        });
      }
    }
  }
  for (std::size_t a = 0; a < w.size(); ++a)
    for (std::size_t b = 0; b < w.size(); ++b)
      if (w.less(a, b))
        wcompat.expect(realised[a][b], [&] {
          return detail::at_n(n) + amphora_name(n, w[a]) + " < " + amphora_name(n, w[b]) + " has no witness";
        });

  // NG sub-amphoras
  for (int k = 1; triangular(k) <= n; ++k) {
    const auto bottom = p.index_of(amphora_bottom(n, {k, false}));
    for (auto s : {NgSet::NG1, NgSet::NG2, NgSet::NG1AndNG2}) {
      const auto members = ng_members(p, k, s);
      if (members.empty()) continue;
      const auto tops = ng_claimed_tops(p, k, s);
      const auto res = verify_amphora(P, members, bottom, tops);
      ngshape.expect(res.ok, [&] {
        return detail::at_n(n) + ng_set_name(s) + "(" + std::to_string(k) + "): " + res.reason;
      });
    }
    for (auto s : {NgSet::NG1Star, NgSet::NG2Star}) {
      const auto members = ng_members(p, k, s);
      if (members.empty()) continue;
      const auto res = verify_amphora(P, members);
      ngshape.expect(res.ok, [&] {
        return detail::at_n(n) + ng_set_name(s) + "(" + std::to_string(k) + "): " + res.reason;
      });
    }
    // emptiness pattern
    const bool small = n <= triangular(k + 1) - 2;
    const bool has1 = !ng_members(p, k, NgSet::NG1Star).empty();
    const bool has2 = !ng_members(p, k, NgSet::NG2Star).empty();
    const bool has12 = !ng_members(p, k, NgSet::NG1AndNG2).empty();
    if (k == 1 && n == 1) {
      // [1|1] ends in 1 on both sides: NG-1 only
      ngshape.expect(has1 && !has2 && !has12, [&] { return detail::at_n(n) + "[1|1] is not NG-1 only"; });
    } else if (k == 1) {
      ngshape.expect(!has1 && !has12 && has2, [&] { return detail::at_n(n) + "A(n,1) is not a single NG-2 block"; });
    } else if (small) {
      ngshape.expect(ng_members(p, k, NgSet::NG1).size() == p.members({k, false}).size(),
                     [&] { return detail::at_n(n) + "A(n," + std::to_string(k) + ") not all NG-1"; });
    } else {
      ngshape.expect(has1 && has2 && has12,
                     [&] { return detail::at_n(n) + "some NG part of A(n," + std::to_string(k) + ") is empty"; });
    }
  }

  return {labels, shapes, unions, cover, tc, wcompat, closure, ngshape};
}

// ---------------------------------------------------------------------------
// Lattice completion

/// Formula meet/join against search, and the case tables against both.
inline std::vector<SuiteResult> check_lattice(const SBlockPoset& p) {
  const int n = p.n();
  SuiteResult formula{"meet/join formula equals greatest lower / least upper bound"};
  SuiteResult table{"case tables predict where meet and join land"};
  const auto& E = p.elements();
  for (std::size_t i = 0; i < E.size(); ++i) {
    for (std::size_t j = i; j < E.size(); ++j) {
      const ExtendedElement x = E[i];
      const ExtendedElement y = E[j];
      const auto fm = lattice_meet(p, x, y);
      const auto fj = lattice_join(p, x, y);
      const auto sm = search_meet(p, x, y);
      const auto sj = search_join(p, x, y);
      formula.expect(fm == sm && fj == sj, [&] {
        return detail::at_n(n) + to_label(E[i]) + "," + to_label(E[j]) + ": formula " + to_string(fm) + "/" +
               to_string(fj) + " vs search " + to_string(sm) + "/" + to_string(sj);
      });
      const auto tc = table_case(p, E[i], E[j]);
      table.expect(lands_in(p, sm, tc.meet) && lands_in(p, sj, tc.join), [&] {
        return detail::at_n(n) + "row " + tc.row + " for " + to_label(E[i]) + "," + to_label(E[j]) +
               " predicts " + to_string(tc.meet, n) + "/" + to_string(tc.join, n);
      });
      for (const auto& row : tc.ng_rows) {
        const int k = amphora_of(E[i]).k;
        table.expect(lands_in(p, sm, k, NgLocation{row.meet}) && lands_in(p, sj, k, row.join), [&] {
          return detail::at_n(n) + "NG row " + row.row + " for " + to_label(E[i]) + "," + to_label(E[j]);
        });
      }
    }
  }
  // the absorbing elements
  if (!E.empty()) {
    const ExtendedElement x = E.front();
    formula.expect(std::holds_alternative<Bottom>(lattice_meet(p, x, Bottom{})) &&
                       lattice_join(p, x, Bottom{}) == x && lattice_meet(p, x, Top{}) == x &&
                       std::holds_alternative<Top>(lattice_join(p, x, Top{})),
                   [&] { return detail::at_n(n) + "bottom/top do not absorb"; });
  }
  return {formula, table};
}

// ---------------------------------------------------------------------------
// Bijections

/// NG1*(n,k) onto A(n-k,k-1) and NG2*(n,k) onto A(n-k,k), as order and
/// cover isomorphisms.
inline SuiteResult check_ng_bijections(const SBlockPoset& p, const std::function<const SBlockPoset&(int)>& poset_of) {
  const int n = p.n();
  SuiteResult r{"NG1*/NG2* bijections"};
  for (int k = 1; triangular(k) <= n; ++k) {
    for (auto which : {NgStar::NG1Star, NgStar::NG2Star}) {
      const int tk = which == NgStar::NG1Star ? k - 1 : k;
      const int tn = n - k;
      const auto set = which == NgStar::NG1Star ? NgSet::NG1Star : NgSet::NG2Star;
      const auto src_blocks = detail::blocks_at(p, ng_members(p, k, set));
      const bool target_exists = tk >= 1 && tn >= 1 && tn >= triangular(tk);
      const std::string tag = detail::at_n(n) + ng_set_name(set) + "(" + std::to_string(k) + ")";
      if (!target_exists) {
        if (n == 1) continue;  // NG1*(1,1) = {[1|1]} has no target
        r.expect(src_blocks.empty(), [&] { return tag + " nonempty but target amphora is empty"; });
        continue;
      }
      const auto& target_poset = poset_of(tn);
      const auto target = make_block_poset(amphora(target_poset, tk));
      const auto src = make_block_poset(src_blocks);
      std::vector<std::size_t> f;
      bool mapped = true;
      for (const auto& b : src.elements()) {
        auto i = target.index_of(ng_star_image(b, which));
        if (!i) {
          mapped = false;
          break;
        }
        f.push_back(*i);
      }
      r.expect(mapped && is_order_isomorphism(src, target, f) && is_cover_isomorphism(src, target, f),
               [&] {
                 return tag + " is not order-isomorphic to its target (" + std::to_string(src.size()) + " vs " +
                        std::to_string(target.size()) + ")";
               });
    }
  }
  return r;
}

/// NG_3(n,k): NG-3 shape of every element, emptiness threshold, and the
/// order isomorphism onto A(n-4k,k).
inline SuiteResult check_ng3(int n, int k) {
  SuiteResult r{"NG_3(n,k) structure"};
  const auto q = build_ng3_poset(n, k);
  const std::string tag = "NG_3(" + std::to_string(n) + "," + std::to_string(k) + ")";
  r.expect(q.poset.empty() == (n < 4 * k + triangular(k)), [&] { return tag + " emptiness"; });
  for (const auto& b : q.poset.elements()) {
    const auto c = classify(b);
    r.expect(c.is_ng3 && c.is_pseudo_split && !c.is_sblock, [&] { return tag + ": " + to_label(b) + " not NG-3"; });
  }
  r.expect(is_order_isomorphism(q.poset, q.image, q.mapping) &&
               is_cover_isomorphism(q.poset, q.image, q.mapping),
           [&] { return tag + " is not isomorphic to A(n-4k,k)"; });
  return r;
}

// ---------------------------------------------------------------------------
// Degree sequences against graphs

/// Erdos-Gallai against the block criterion for every partition with sum at
/// most max_sum.
inline SuiteResult check_graphic_criterion(int max_sum) {
  SuiteResult r{"Erdos-Gallai equals the block criterion"};
  for (int s = 1; s <= max_sum; ++s) {
    for_each_partition(s, [&](const Partition& pi) {
      const auto ab = decompose(pi);
      const bool criterion = s % 2 == 0 && weakly_majorizes(ab.beta, ab.alpha);
      r.expect(erdos_gallai(pi) == criterion, [&] { return "(" + to_string(pi) + ")"; });
    });
  }
  return r;
}

/// Every split sequence (and every NG-3 sequence) with sum at most max_sum:
/// realize it, then compare graph-level and block-level classification.
inline SuiteResult check_realizations(int max_sum) {
  SuiteResult r{"graph classification equals block classification"};
  for (int s = 2; s <= max_sum; s += 2) {
    for_each_partition(s, [&](const Partition& pi) {
      const auto reading = sequence_to_block(pi);
      if (!reading.is_block()) return;
      const auto block_side = comparable_part(classify(reading.block()));
      const auto tag = "(" + to_string(pi) + ")";
      if (block_side.is_sblock) {
        for (auto tie : {TieBreak::LowIndex, TieBreak::HighIndex}) {
          const auto g = realize_split(pi, tie);
          r.expect(g.degrees() == pi.vector(), [&] { return tag + " realized with wrong degrees"; });
          r.expect(classify_graph(g, Graph::max_vertices) == block_side,
                   [&] { return tag + " graph and block classification differ"; });
          r.expect(chromatic_number(g, Graph::max_vertices) == clique_number(g),
                   [&] { return tag + " split realization with chi != omega"; });
        }
      } else if (block_side.is_ng3) {
        const auto g = realize_ng3(pi);
        r.expect(classify_graph(g, Graph::max_vertices) == block_side,
                 [&] { return tag + " NG-3 realization misclassified"; });
      }
    });
  }
  return r;
}

/// Graph-scale theorem report folded into suite results.
inline std::vector<SuiteResult> check_graph_theorems(int max_vertices, unsigned threads = 0) {
  std::vector<SuiteResult> out;
  const auto report = verify_theorems(max_vertices, threads);
  for (const auto& t : report.theorems) {
    SuiteResult r{t.name};
    r.checked = t.checked;
    r.failed = t.violations;
    for (const auto& ex : t.counterexamples) r.failures.push_back(ex);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace splitblock
