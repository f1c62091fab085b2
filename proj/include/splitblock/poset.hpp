#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "splitblock/error.hpp"

namespace splitblock {

namespace detail {

/// Fixed-size bitset sized at runtime; enough for relation matrices.
class Bits {
 public:
  Bits() = default;
  explicit Bits(std::size_t n) : size_(n), words_((n + 63) / 64, 0) {}

  std::size_t size() const noexcept { return size_; }
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  bool test(std::size_t i) const { return (words_[i / 64] >> (i % 64)) & 1u; }

  Bits& operator&=(const Bits& o) {
    for (std::size_t w = 0; w < words_.size(); ++w) words_[w] &= o.words_[w];
    return *this;
  }
  friend Bits operator&(Bits a, const Bits& b) { return a &= b; }

  bool any() const {
    return std::any_of(words_.begin(), words_.end(), [](auto w) { return w != 0; });
  }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  /// this is a subset of o
  bool subset_of(const Bits& o) const {
    for (std::size_t w = 0; w < words_.size(); ++w)
      if (words_[w] & ~o.words_[w]) return false;
    return true;
  }
  std::vector<std::size_t> indices() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < size_; ++i)
      if (test(i)) out.push_back(i);
    return out;
  }

 private:
  std::size_t size_ = 0;
  std::vector<std::uint64_t> words_;
};

}  // namespace detail

/// A finite poset over an explicit element list.
///
/// The order is evaluated once for every ordered pair and kept as down-set
/// and up-set bitsets; the covering relation is the transitive reduction of
/// that matrix. Element indices are positions in `elements()`.
template <class T>
class PosetIndex {
 public:
  using Cover = std::pair<std::size_t, std::size_t>;  // (upper, lower)

  PosetIndex() = default;

  /// `leq(a, b)` must be a partial order on `elements` (a below b).
  template <class Leq>
  PosetIndex(std::vector<T> elements, Leq leq) : elements_(std::move(elements)) {
    const std::size_t n = elements_.size();
    down_.assign(n, detail::Bits(n));
    up_.assign(n, detail::Bits(n));
    for (std::size_t i = 0; i < n; ++i) {
      index_.emplace(elements_[i], i);
      for (std::size_t j = 0; j < n; ++j) {
        if (leq(elements_[j], elements_[i])) {
          down_[i].set(j);
          up_[j].set(i);
        }
      }
    }
    for (std::size_t hi = 0; hi < n; ++hi) {
      for (std::size_t lo = 0; lo < n; ++lo) {
        if (hi == lo || !down_[hi].test(lo)) continue;
        // strictly between: in down(hi) and up(lo), other than the endpoints
        const auto between = down_[hi] & up_[lo];
        if (between.count() == 2) covers_.emplace_back(hi, lo);
      }
    }
  }

  const std::vector<T>& elements() const noexcept { return elements_; }
  std::size_t size() const noexcept { return elements_.size(); }
  bool empty() const noexcept { return elements_.empty(); }
  const T& operator[](std::size_t i) const { return elements_[i]; }

  std::optional<std::size_t> index_of(const T& x) const {
    auto it = index_.find(x);
    if (it == index_.end()) return std::nullopt;
    return it->second;
  }
  std::size_t require_index(const T& x) const {
    auto i = index_of(x);
    if (!i) throw domain_error("element is not in the poset");
    return *i;
  }

  /// elements()[a] is below or equal to elements()[b]
  bool leq(std::size_t a, std::size_t b) const { return down_[b].test(a); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }

  const std::vector<Cover>& covers() const noexcept { return covers_; }
  bool covers_pair(std::size_t hi, std::size_t lo) const {
    return less(lo, hi) && (down_[hi] & up_[lo]).count() == 2;
  }

  /// Greatest lower bound; nullopt when there is no common lower bound.
  /// Throws lattice_error when lower bounds exist but have no greatest one.
  std::optional<std::size_t> meet(std::size_t a, std::size_t b) const {
    const auto lower = down_[a] & down_[b];
    if (!lower.any()) return std::nullopt;
    std::optional<std::size_t> found;
    for (auto g : lower.indices()) {
      if (lower.subset_of(down_[g])) {
        if (found) throw lattice_error("two greatest lower bounds");
        found = g;
      }
    }
    if (!found) throw lattice_error("lower bounds without a greatest element");
    return found;
  }

  /// Least upper bound; mirrors meet().
  std::optional<std::size_t> join(std::size_t a, std::size_t b) const {
    const auto upper = up_[a] & up_[b];
    if (!upper.any()) return std::nullopt;
    std::optional<std::size_t> found;
    for (auto g : upper.indices()) {
      if (upper.subset_of(up_[g])) {
        if (found) throw lattice_error("two least upper bounds");
        found = g;
      }
    }
    if (!found) throw lattice_error("upper bounds without a least element");
    return found;
  }

  std::vector<std::size_t> minimal(const std::vector<std::size_t>& subset) const {
    std::vector<std::size_t> out;
    for (auto x : subset) {
      bool is_min = std::none_of(subset.begin(), subset.end(),
                                 [&](auto y) { return less(y, x); });
      if (is_min) out.push_back(x);
    }
    return out;
  }
  std::vector<std::size_t> maximal(const std::vector<std::size_t>& subset) const {
    std::vector<std::size_t> out;
    for (auto x : subset) {
      bool is_max = std::none_of(subset.begin(), subset.end(),
                                 [&](auto y) { return less(x, y); });
      if (is_max) out.push_back(x);
    }
    return out;
  }
  bool is_antichain(const std::vector<std::size_t>& subset) const {
    for (auto x : subset)
      for (auto y : subset)
        if (less(x, y)) return false;
    return true;
  }

  std::vector<std::size_t> all_indices() const {
    std::vector<std::size_t> out(size());
    for (std::size_t i = 0; i < size(); ++i) out[i] = i;
    return out;
  }

 private:
  std::vector<T> elements_;
  std::map<T, std::size_t> index_;
  std::vector<detail::Bits> down_;
  std::vector<detail::Bits> up_;
  std::vector<Cover> covers_;
};

/// Outcome of checking that a subset forms an amphora: a bottom element b
/// and an antichain M with subset = { x : b <= x and x <= m for some m in M }.
struct AmphoraCheck {
  bool ok = false;
  std::optional<std::size_t> bottom;
  std::vector<std::size_t> tops;
  std::string reason;
};

/// Checks the amphora property of `subset` inside `p`. The bottom and the top
/// antichain are derived from the subset unless given explicitly, in which
/// case they are checked as stated.
template <class T>
AmphoraCheck verify_amphora(const PosetIndex<T>& p, std::vector<std::size_t> subset,
                            std::optional<std::size_t> claimed_bottom = std::nullopt,
                            std::optional<std::vector<std::size_t>> claimed_tops = std::nullopt) {
  AmphoraCheck res;
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  if (subset.empty()) {
    res.reason = "empty set";
    return res;
  }
  if (claimed_bottom) {
    res.bottom = claimed_bottom;
  } else {
    auto mins = p.minimal(subset);
    if (mins.size() != 1) {
      res.reason = "no unique minimum (" + std::to_string(mins.size()) + " minimal elements)";
      return res;
    }
    res.bottom = mins.front();
  }
  res.tops = claimed_tops ? *claimed_tops : p.maximal(subset);
  std::sort(res.tops.begin(), res.tops.end());
  if (!p.is_antichain(res.tops)) {
    res.reason = "tops are not an antichain";
    return res;
  }
  for (auto t : res.tops) {
    if (!p.leq(*res.bottom, t)) {
      res.reason = "bottom is not below every top";
      return res;
    }
  }
  std::vector<std::size_t> spanned;
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (!p.leq(*res.bottom, x)) continue;
    if (std::any_of(res.tops.begin(), res.tops.end(), [&](auto m) { return p.leq(x, m); }))
      spanned.push_back(x);
  }
  if (spanned != subset) {
    res.reason = "interval union has " + std::to_string(spanned.size()) +
                 " elements, subset has " + std::to_string(subset.size());
    return res;
  }
  res.ok = true;
  return res;
}

/// Checks that `f` (index in `a` to index in `b`) is an order isomorphism:
/// bijective, and x <= y exactly when f(x) <= f(y).
template <class T, class U>
bool is_order_isomorphism(const PosetIndex<T>& a, const PosetIndex<U>& b,
                          const std::vector<std::size_t>& f) {
  if (a.size() != b.size() || f.size() != a.size()) return false;
  std::vector<bool> hit(b.size(), false);
  for (auto y : f) {
    if (y >= b.size() || hit[y]) return false;
    hit[y] = true;
  }
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.leq(x, y) != b.leq(f[x], f[y])) return false;
  return true;
}

/// Checks that `f` maps the Hasse diagram of `a` onto that of `b` edge for edge.
template <class T, class U>
bool is_cover_isomorphism(const PosetIndex<T>& a, const PosetIndex<U>& b,
                          const std::vector<std::size_t>& f) {
  if (a.covers().size() != b.covers().size()) return false;
  for (auto [hi, lo] : a.covers())
    if (!b.covers_pair(f[hi], f[lo])) return false;
  return true;
}

}  // namespace splitblock
