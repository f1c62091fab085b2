#pragma once

#include <algorithm>
#include <charconv>
#include <compare>
#include <cstddef>
#include <functional>
#include <numeric>
#include <ostream>
#include <span>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitblock/error.hpp"

namespace splitblock {

/// A non-increasing sequence of positive integers.
///
/// The empty partition is a legal value (sum 0, length 0); it shows up as
/// the beta part of single-row diagrams. Parts are validated on
/// construction and never change afterwards.
class Partition {
 public:
  Partition() = default;

  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] <= 0) {
        throw parse_error("part " + std::to_string(i) + " is not positive (" +
                              std::to_string(parts_[i]) + ")",
                          i);
      }
      if (i > 0 && parts_[i] > parts_[i - 1]) {
        throw parse_error("part " + std::to_string(i) + " (" +
                              std::to_string(parts_[i]) +
                              ") exceeds the preceding part (" +
                              std::to_string(parts_[i - 1]) + ")",
                          i);
      }
    }
  }

  Partition(std::initializer_list<int> parts)
      : Partition(std::vector<int>(parts)) {}

  std::span<const int> parts() const noexcept { return parts_; }
  const std::vector<int>& vector() const noexcept { return parts_; }
  std::size_t length() const noexcept { return parts_.size(); }
  bool empty() const noexcept { return parts_.empty(); }
  int sum() const noexcept {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
  }
  int operator[](std::size_t i) const { return parts_[i]; }
  int first() const { return parts_.front(); }
  int last() const { return parts_.back(); }

  bool has_distinct_parts() const noexcept {
    return std::adjacent_find(parts_.begin(), parts_.end()) == parts_.end();
  }

  /// Sum of the first k parts; parts beyond the length count as zero.
  int prefix_sum(std::size_t k) const noexcept {
    k = std::min(k, parts_.size());
    return std::accumulate(parts_.begin(), parts_.begin() + k, 0);
  }

  friend bool operator==(const Partition&, const Partition&) = default;
  friend auto operator<=>(const Partition&, const Partition&) = default;

 private:
  std::vector<int> parts_;
};

/// Comma separated parts, e.g. "6,5,2"; the empty partition prints as "".
inline std::string to_string(const Partition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.length(); ++i) {
    if (i) out += ',';
    out += std::to_string(p[i]);
  }
  return out;
}

/// Parenthesized form used in listings and DOT labels, e.g. "(6,5,2)".
inline std::string to_label(const Partition& p) {
  return "(" + to_string(p) + ")";
}

inline std::ostream& operator<<(std::ostream& os, const Partition& p) {
  return os << to_label(p);
}

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace detail

/// Parses "6,5,2,2,2,1,1,1". Surrounding parentheses are accepted. An empty
/// string yields the empty partition.
inline Partition parse_partition(std::string_view text) {
  text = detail::trim(text);
  if (!text.empty() && text.front() == '(' && text.back() == ')') {
    text = detail::trim(text.substr(1, text.size() - 2));
  }
  std::vector<int> parts;
  if (text.empty()) return Partition{};
  std::size_t index = 0;
  while (true) {
    auto comma = text.find(',');
    auto token = detail::trim(text.substr(0, comma));
    int value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw parse_error("part " + std::to_string(index) + " is not an integer: '" +
                            std::string(token) + "'",
                        index);
    }
    parts.push_back(value);
    ++index;
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Partition(std::move(parts));
}

/// gamma1 majorizes gamma2: equal sums and every prefix sum of gamma1 is at
/// least the corresponding prefix sum of gamma2.
inline bool majorizes(const Partition& gamma1, const Partition& gamma2) {
  if (gamma1.sum() != gamma2.sum()) return false;
  const std::size_t len = std::max(gamma1.length(), gamma2.length());
  for (std::size_t k = 1; k <= len; ++k) {
    if (gamma1.prefix_sum(k) < gamma2.prefix_sum(k)) return false;
  }
  return true;
}

/// gamma1 weakly majorizes gamma2: sum(gamma1) >= sum(gamma2) and the prefix
/// sums dominate for every k up to the shorter length.
inline bool weakly_majorizes(const Partition& gamma1, const Partition& gamma2) {
  if (gamma1.sum() < gamma2.sum()) return false;
  const std::size_t len = std::min(gamma1.length(), gamma2.length());
  for (std::size_t k = 1; k <= len; ++k) {
    if (gamma1.prefix_sum(k) < gamma2.prefix_sum(k)) return false;
  }
  return true;
}

/// Modified Durfee number: the largest (1-based) i with d_i >= i - 1.
inline int mark(const Partition& pi) {
  if (pi.empty()) throw domain_error("mark of the empty partition");
  int m = 0;
  for (std::size_t i = 0; i < pi.length(); ++i) {
    if (pi[i] >= static_cast<int>(i)) m = static_cast<int>(i) + 1;
    else break;
  }
  return m;
}

/// The two distinct-part partitions read off a Ferrers diagram: alpha counts
/// the boxes of each row from the diagonal rightwards, beta counts the boxes
/// of each column strictly below the diagonal.
struct AlphaBeta {
  Partition alpha;
  Partition beta;
  int mark = 0;

  friend bool operator==(const AlphaBeta&, const AlphaBeta&) = default;
};

inline AlphaBeta decompose(const Partition& pi) {
  const int m = mark(pi);
  std::vector<int> alpha;
  for (std::size_t i = 0; i < pi.length(); ++i) {
    const int row = static_cast<int>(i) + 1;
    if (pi[i] < row) break;
    alpha.push_back(pi[i] - (row - 1));
  }
  std::vector<int> beta;
  for (int col = 1; col <= m - 1; ++col) {
    int count = 0;
    // rows strictly below the diagonal cell (col, col)
    for (std::size_t i = static_cast<std::size_t>(col); i < pi.length(); ++i) {
      if (pi[i] >= col) ++count;
      else break;
    }
    beta.push_back(count);
  }
  return {Partition(std::move(alpha)), Partition(std::move(beta)), m};
}

/// Cell-by-cell picture of F(pi): 'a' marks boxes of A(pi) (on or right of
/// the diagonal), 'b' boxes of B(pi) (strictly below it). Debug aid only.
inline std::vector<std::string> render_ferrers(const Partition& pi) {
  std::vector<std::string> rows;
  for (std::size_t i = 0; i < pi.length(); ++i) {
    std::string row;
    for (int c = 0; c < pi[i]; ++c) row += (c >= static_cast<int>(i)) ? 'a' : 'b';
    rows.push_back(std::move(row));
  }
  return rows;
}

inline constexpr int triangular(int k) noexcept { return k * (k + 1) / 2; }

/// Maximum of Dis_k(n): (n - C(k,2), k-1, k-2, ..., 1).
inline Partition tau_prime(int n, int k) {
  if (k < 1 || n < triangular(k)) {
    throw domain_error("tau_prime: Dis_" + std::to_string(k) + "(" +
                       std::to_string(n) + ") is empty");
  }
  std::vector<int> parts{n - triangular(k - 1)};
  for (int p = k - 1; p >= 1; --p) parts.push_back(p);
  return Partition(std::move(parts));
}

/// Most balanced partition of m into at most k parts (zeros dropped).
inline Partition tau_hat(int m, int k) {
  if (m < 0 || k < 1) throw domain_error("tau_hat: need m >= 0 and k >= 1");
  const int q = m / k;
  const int r = m % k;
  std::vector<int> parts;
  for (int i = 0; i < k; ++i) {
    const int part = q + (i < r ? 1 : 0);
    if (part > 0) parts.push_back(part);
  }
  return Partition(std::move(parts));
}

/// Minimum of Dis_k(n): the staircase (k, ..., 1) plus the most even split
/// of the remaining n - C(k+1,2), larger shares on the larger parts.
inline Partition tau(int n, int k) {
  if (k < 1 || n < triangular(k)) {
    throw domain_error("tau: Dis_" + std::to_string(k) + "(" +
                       std::to_string(n) + ") is empty");
  }
  const int rest = n - triangular(k);
  const int q = rest / k;
  const int r = rest % k;
  std::vector<int> parts;
  for (int i = 0; i < k; ++i) parts.push_back(q + (i < r ? 1 : 0) + (k - i));
  return Partition(std::move(parts));
}

namespace detail {

template <class F>
void distinct_partitions_rec(int remaining, int max_part, std::vector<int>& prefix,
                             F& emit) {
  if (remaining == 0) {
    emit(prefix);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    // parts below `part` are distinct and at most part-1: bound their total
    if (triangular(part) < remaining) break;
    prefix.push_back(part);
    distinct_partitions_rec(remaining - part, part - 1, prefix, emit);
    prefix.pop_back();
  }
}

template <class F>
void partitions_rec(int remaining, int max_part, std::size_t max_len,
                    std::vector<int>& prefix, F& emit) {
  if (remaining == 0) {
    emit(prefix);
    return;
  }
  if (prefix.size() == max_len) return;
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    prefix.push_back(part);
    partitions_rec(remaining - part, part, max_len, prefix, emit);
    prefix.pop_back();
  }
}

}  // namespace detail

/// Partitions of n into distinct positive parts, in reverse lexicographic
/// order ((n) first).
inline std::vector<Partition> distinct_partitions(int n) {
  std::vector<Partition> out;
  if (n < 1) return out;
  std::vector<int> prefix;
  auto emit = [&](const std::vector<int>& p) { out.emplace_back(p); };
  detail::distinct_partitions_rec(n, n, prefix, emit);
  return out;
}

/// Calls f(Partition) for every partition of n with at most max_len parts.
template <class F>
void for_each_partition(int n, F&& f,
                        std::size_t max_len = static_cast<std::size_t>(-1)) {
  if (n < 0) return;
  if (n == 0) {
    f(Partition{});
    return;
  }
  std::vector<int> prefix;
  auto emit = [&](const std::vector<int>& p) { f(Partition(p)); };
  detail::partitions_rec(n, n, max_len, prefix, emit);
}

/// Sort key for the canonical element order: shorter first, then
/// lexicographically larger first.
inline bool canonical_less(const Partition& a, const Partition& b) {
  if (a.length() != b.length()) return a.length() < b.length();
  return std::lexicographical_compare(b.parts().begin(), b.parts().end(),
                                      a.parts().begin(), a.parts().end());
}

/// Drops the last `count` parts.
inline Partition drop_smallest(const Partition& p, std::size_t count) {
  std::vector<int> parts = p.vector();
  parts.resize(parts.size() > count ? parts.size() - count : 0);
  return Partition(std::move(parts));
}

/// Adds `delta` (possibly negative) to every part.
inline Partition shift_parts(const Partition& p, int delta) {
  std::vector<int> parts = p.vector();
  for (int& x : parts) x += delta;
  return Partition(std::move(parts));
}

inline Partition append_parts(const Partition& p, std::initializer_list<int> tail) {
  std::vector<int> parts = p.vector();
  parts.insert(parts.end(), tail.begin(), tail.end());
  return Partition(std::move(parts));
}

}  // namespace splitblock

template <>
struct std::hash<splitblock::Partition> {
  std::size_t operator()(const splitblock::Partition& p) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int x : p.parts()) h = (h ^ static_cast<std::size_t>(x)) * 1099511628211ull;
    return h;
  }
};
