#pragma once

#include <algorithm>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "splitblock/block.hpp"
#include "splitblock/dis_lattice.hpp"
#include "splitblock/graph_oracle.hpp"
#include "splitblock/sblock_poset.hpp"
#include "splitblock/verify.hpp"

namespace splitblock {

using json = nlohmann::ordered_json;

// ---------------------------------------------------------------------------
// JSON

inline json to_json(const Partition& p) { return {{"parts", p.vector()}, {"label", to_label(p)}}; }

inline json to_json(const Block& b) {
  return {{"alpha", b.alpha().vector()}, {"beta", b.beta().vector()}, {"label", to_label(b)}};
}

inline json to_json(const ExtendedElement& x) {
  if (std::holds_alternative<Block>(x)) return to_json(std::get<Block>(x));
  return {{"label", to_string(x)}};
}

inline json to_json(const Classification& c) {
  return {{"split", c.is_sblock},
          {"threshold", c.is_threshold},
          {"balanced", c.is_balanced},
          {"unbalanced", c.is_unbalanced},
          {"ng1", c.is_ng1},
          {"ng2", c.is_ng2},
          {"ng3", c.is_ng3},
          {"pseudo_split", c.is_pseudo_split},
          {"threshold_covered", c.is_threshold_covered}};
}

template <class T, class Label>
json covers_json(const PosetIndex<T>& p, Label label) {
  auto edges = p.covers();
  std::sort(edges.begin(), edges.end(), [](auto a, auto b) { return std::pair(a.second, a.first) < std::pair(b.second, b.first); });
  json out = json::array();
  for (auto [hi, lo] : edges) out.push_back({{"lower", label(p[lo])}, {"upper", label(p[hi])}});
  return out;
}

inline json to_json(const DisPoset& p) {
  json elems = json::array();
  for (const auto& g : p.elements()) elems.push_back(to_json(g));
  return {{"size", p.size()},
          {"elements", elems},
          {"covers", covers_json(p, [](const Partition& g) { return to_label(g); })}};
}

inline json to_json(int n, const AmphoraId& id) {
  return {{"name", amphora_name(n, id)}, {"k", id.k}, {"balanced", id.balanced}};
}

inline json to_json(const SBlockPoset& p, bool with_labels) {
  json elems = json::array();
  for (std::size_t i = 0; i < p.size(); ++i) {
    json e = to_json(p.elements()[i]);
    if (with_labels) {
      const auto& l = p.label(i);
      e["amphora"] = amphora_name(p.n(), l.amphora);
      e["ng1"] = l.ng1;
      e["ng2"] = l.ng2;
      e["threshold_covered"] = l.in_tc;
    }
    elems.push_back(std::move(e));
  }
  return {{"n", p.n()},
          {"size", p.size()},
          {"elements", elems},
          {"covers", covers_json(p.poset(), [](const Block& b) { return to_label(b); })}};
}

inline json amphoras_json(const SBlockPoset& p) {
  const int n = p.n();
  json nodes = json::array();
  for (auto id : p.amphoras()) {
    json node = to_json(n, id);
    node["size"] = p.members(id).size();
    node["bottom"] = to_label(amphora_bottom(n, id));
    json tops = json::array();
    for (const auto& b : amphora_tops(p, id)) tops.push_back(to_label(b));
    node["tops"] = tops;
    if (!id.balanced) {
      auto sub = ng_subsets(p, id.k);
      node["ng"] = {{"NG1", sub.ng1.size()},
                    {"NG2", sub.ng2.size()},
                    {"NG1&NG2", sub.ng1_and_ng2.size()},
                    {"NG1*", sub.ng1_star.size()},
                    {"NG2*", sub.ng2_star.size()}};
    }
    nodes.push_back(std::move(node));
  }
  const auto w = build_w(p);
  return {{"n", n},
          {"nodes", nodes},
          {"covers", covers_json(w, [n](const AmphoraId& id) { return amphora_name(n, id); })}};
}

inline json to_json(const TableCase& tc, int n) {
  json rows = json::array();
  for (const auto& r : tc.ng_rows) {
    rows.push_back({{"row", r.row},
                    {"meet", ng_set_name(r.meet)},
                    {"join", to_string(r.join)},
                    {"join_or_top", r.join_alternative}});
  }
  return {{"row", tc.row},
          {"meet", to_string(tc.meet, n)},
          {"join", to_string(tc.join, n)},
          {"join_or_top", tc.join_alternative},
          {"ng_rows", rows}};
}

inline json to_json(const Ng3Poset& q) {
  json elems = json::array();
  for (std::size_t i = 0; i < q.poset.size(); ++i) {
    json e = to_json(q.poset[i]);
    e["core"] = to_label(drop_smallest(q.poset[i].alpha(), 2));
    e["image"] = to_label(q.image[q.mapping[i]]);
    elems.push_back(std::move(e));
  }
  return {{"n", q.n},
          {"k", q.k},
          {"size", q.poset.size()},
          {"elements", elems},
          {"covers", covers_json(q.poset, [](const Block& b) { return to_label(b); })},
          {"image_amphora", "A(" + std::to_string(q.n - 4 * q.k) + "," + std::to_string(q.k) + ")"},
          {"image_covers", covers_json(q.image, [](const Block& b) { return to_label(b); })}};
}

inline json to_json(const SuiteResult& r) {
  return {{"suite", r.name}, {"ok", r.ok()}, {"checked", r.checked}, {"failed", r.failed}, {"failures", r.failures}};
}

// ---------------------------------------------------------------------------
// DOT

namespace detail {

inline std::string dot_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

template <class T>
void dot_edges(std::ostream& os, const PosetIndex<T>& p) {
  auto edges = p.covers();
  std::sort(edges.begin(), edges.end(), [](auto a, auto b) { return std::pair(a.second, a.first) < std::pair(b.second, b.first); });
  for (auto [hi, lo] : edges) os << "  n" << lo << " -> n" << hi << ";\n";
}

}  // namespace detail

/// Hasse diagram, lower elements at the bottom, edges lower -> upper.
inline std::string dis_dot(const DisPoset& p, const std::string& title) {
  std::ostringstream os;
  os << "digraph " << detail::dot_quote(title) << " {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < p.size(); ++i) os << "  n" << i << " [label=" << detail::dot_quote(to_label(p[i])) << "];\n";
  detail::dot_edges(os, p);
  os << "}\n";
  return os.str();
}

/// S-Block(n) with one cluster per amphora (solid for A(n,k), dashed for
/// A(n,k,k-1)); threshold blocks are boxes.
inline std::string sblock_dot(const SBlockPoset& p) {
  const int n = p.n();
  std::ostringstream os;
  os << "digraph " << detail::dot_quote("S-Block(" + std::to_string(n) + ")")
     << " {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  int cluster = 0;
  for (auto id : p.amphoras()) {
    os << "  subgraph cluster_" << cluster++ << " {\n";
    os << "    label=" << detail::dot_quote(amphora_name(n, id)) << ";\n";
    os << "    style=" << (id.balanced ? "dashed" : "solid") << ";\n";
    for (auto i : p.members(id)) {
      const auto& b = p.elements()[i];
      const auto& l = p.label(i);
      os << "    n" << i << " [label=" << detail::dot_quote(to_label(b));
      if (b.alpha() == b.beta()) os << ", shape=box";
      os << ", ng1=" << (l.ng1 ? "true" : "false") << ", ng2=" << (l.ng2 ? "true" : "false")
         << ", tc=" << (l.in_tc ? "true" : "false") << "];\n";
    }
    os << "  }\n";
  }
  detail::dot_edges(os, p.poset());
  os << "}\n";
  return os.str();
}

inline std::string ng3_dot(const Ng3Poset& q) {
  std::ostringstream os;
  os << "digraph " << detail::dot_quote("NG_3(" + std::to_string(q.n) + "," + std::to_string(q.k) + ")")
     << " {\n  rankdir=BT;\n  node [shape=ellipse];\n";
  for (std::size_t i = 0; i < q.poset.size(); ++i)
    os << "  n" << i << " [label=" << detail::dot_quote(to_label(q.poset[i])) << ", ng3=true];\n";
  detail::dot_edges(os, q.poset);
  os << "}\n";
  return os.str();
}

}  // namespace splitblock
