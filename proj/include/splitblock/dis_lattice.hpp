#pragma once

#include <algorithm>
#include <vector>

#include "splitblock/partition.hpp"
#include "splitblock/poset.hpp"

namespace splitblock {

using DisPoset = PosetIndex<Partition>;

namespace detail {

inline DisPoset make_dis_poset(std::vector<Partition> elems) {
  std::sort(elems.begin(), elems.end(), canonical_less);
  return DisPoset(std::move(elems),
                  [](const Partition& a, const Partition& b) { return majorizes(b, a); });
}

}  // namespace detail

/// Dis(n): partitions of n into distinct parts under majorization.
inline DisPoset enumerate_dis(int n) {
  if (n < 1) throw domain_error("enumerate_dis: n must be positive");
  return detail::make_dis_poset(distinct_partitions(n));
}

/// Dis_k(n): the elements of Dis(n) with exactly k parts. Empty when
/// n < k(k+1)/2.
inline DisPoset enumerate_dis_k(int n, int k) {
  if (n < 1 || k < 1) throw domain_error("enumerate_dis_k: n and k must be positive");
  auto all = distinct_partitions(n);
  std::erase_if(all, [k](const Partition& p) { return p.length() != static_cast<std::size_t>(k); });
  return detail::make_dis_poset(std::move(all));
}

/// Meet in a lattice built by enumerate_dis. Throws lattice_error when the
/// greatest lower bound is missing or not unique.
inline Partition meet(const DisPoset& p, const Partition& gamma1, const Partition& gamma2) {
  auto m = p.meet(p.require_index(gamma1), p.require_index(gamma2));
  if (!m) throw lattice_error("no common lower bound for " + to_label(gamma1) + " and " + to_label(gamma2));
  return p[*m];
}

inline Partition join(const DisPoset& p, const Partition& gamma1, const Partition& gamma2) {
  auto j = p.join(p.require_index(gamma1), p.require_index(gamma2));
  if (!j) throw lattice_error("no common upper bound for " + to_label(gamma1) + " and " + to_label(gamma2));
  return p[*j];
}

/// beta covers alpha in Dis(n), decided without enumerating Dis(n): no
/// distinct-part partition sits strictly between them. The search only
/// follows prefixes whose partial sums stay inside the band alpha..beta.
inline bool dis_covers(const Partition& beta, const Partition& alpha) {
  if (beta == alpha || !majorizes(beta, alpha)) return false;
  if (!beta.has_distinct_parts() || !alpha.has_distinct_parts()) return false;
  const int n = beta.sum();
  std::vector<int> prefix;
  bool found = false;
  // DFS over distinct-part sequences with alpha-prefix <= partial <= beta-prefix
  auto rec = [&](auto&& self, int partial, int max_part) -> void {
    if (found) return;
    if (partial == n) {
      Partition gamma(prefix);
      if (gamma != alpha && gamma != beta) found = true;
      return;
    }
    const std::size_t k = prefix.size() + 1;
    const int lo = alpha.prefix_sum(k) - partial;
    const int hi = beta.prefix_sum(k) - partial;
    for (int part = std::min(hi, max_part); part >= std::max(lo, 1); --part) {
      prefix.push_back(part);
      self(self, partial + part, part - 1);
      prefix.pop_back();
      if (found) return;
    }
  };
  rec(rec, 0, n);
  return !found;
}

}  // namespace splitblock
