#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "splitblock/dis_lattice.hpp"
#include "splitblock/error.hpp"
#include "splitblock/partition.hpp"

namespace splitblock {

/// The block conditions, in the order they are checked.
enum class BlockClause {
  NotDistinct,       // alpha or beta has a repeated part
  EmptyPart,         // alpha or beta partitions 0
  Parity,            // clause (i): n1 and n2 differ in parity
  SumOrder,          // clause (i): n2 < n1
  WeakMajorization,  // clause (ii): beta does not weakly majorize alpha
  Length,            // clause (iii): len(alpha) - len(beta) not in {0, 1}
};

inline std::string_view clause_name(BlockClause c) {
  switch (c) {
    case BlockClause::NotDistinct: return "distinct-parts";
    case BlockClause::EmptyPart: return "positive-sums";
    case BlockClause::Parity: return "(i) parity";
    case BlockClause::SumOrder: return "(i) n2 >= n1";
    case BlockClause::WeakMajorization: return "(ii) weak majorization";
    case BlockClause::Length: return "(iii) length";
  }
  return "?";
}

inline std::string clause_message(BlockClause c, const Partition& alpha, const Partition& beta) {
  const std::string pair = "[" + to_string(alpha) + "|" + to_string(beta) + "]";
  switch (c) {
    case BlockClause::NotDistinct:
      return pair + " violates distinct-parts: alpha and beta must have distinct parts";
    case BlockClause::EmptyPart:
      return pair + " violates positive-sums: alpha and beta must be nonempty";
    case BlockClause::Parity:
      return pair + " violates clause (i): n1 = " + std::to_string(alpha.sum()) +
             " and n2 = " + std::to_string(beta.sum()) + " differ in parity";
    case BlockClause::SumOrder:
      return pair + " violates clause (i): n2 = " + std::to_string(beta.sum()) +
             " < n1 = " + std::to_string(alpha.sum());
    case BlockClause::WeakMajorization:
      return pair + " violates clause (ii): beta does not weakly majorize alpha";
    case BlockClause::Length:
      return pair + " violates clause (iii): len(alpha) = " + std::to_string(alpha.length()) +
             ", len(beta) = " + std::to_string(beta.length());
  }
  return pair;
}

class block_error : public error {
 public:
  block_error(BlockClause clause, const std::string& what) : error(what), clause_(clause) {}
  BlockClause clause() const noexcept { return clause_; }

 private:
  BlockClause clause_;
};

/// First violated block condition for the pair, or nullopt when it is a block.
inline std::optional<BlockClause> check_block(const Partition& alpha, const Partition& beta) {
  if (!alpha.has_distinct_parts() || !beta.has_distinct_parts()) return BlockClause::NotDistinct;
  if (alpha.empty() || beta.empty()) return BlockClause::EmptyPart;
  const int n1 = alpha.sum();
  const int n2 = beta.sum();
  if ((n1 - n2) % 2 != 0) return BlockClause::Parity;
  if (n2 < n1) return BlockClause::SumOrder;
  if (!weakly_majorizes(beta, alpha)) return BlockClause::WeakMajorization;
  const auto la = alpha.length();
  const auto lb = beta.length();
  if (la != lb && la != lb + 1) return BlockClause::Length;
  return std::nullopt;
}

class Block;
inline Block make_block(Partition alpha, Partition beta);

/// An ordered pair [alpha|beta] satisfying every block condition. Only
/// make_block (and the poset builders on top of it) produce values.
class Block {
 public:
  const Partition& alpha() const noexcept { return alpha_; }
  const Partition& beta() const noexcept { return beta_; }
  int n1() const noexcept { return alpha_.sum(); }
  int n2() const noexcept { return beta_.sum(); }
  bool is_sblock() const noexcept { return n1() == n2(); }

  friend bool operator==(const Block&, const Block&) = default;
  friend auto operator<=>(const Block&, const Block&) = default;

 private:
  Block(Partition alpha, Partition beta) : alpha_(std::move(alpha)), beta_(std::move(beta)) {}
  friend Block make_block(Partition alpha, Partition beta);

  Partition alpha_;
  Partition beta_;
};

/// Validates the pair and returns it as a Block; block_error names the
/// first clause that fails.
inline Block make_block(Partition alpha, Partition beta) {
  if (auto c = check_block(alpha, beta)) throw block_error(*c, clause_message(*c, alpha, beta));
  return Block(std::move(alpha), std::move(beta));
}

/// "5,3,2|7,2,1"
inline std::string to_string(const Block& b) {
  return to_string(b.alpha()) + "|" + to_string(b.beta());
}

inline std::string to_label(const Block& b) { return "[" + to_string(b) + "]"; }

inline std::ostream& operator<<(std::ostream& os, const Block& b) { return os << to_label(b); }

/// Splits "alpha|beta" into its two partitions without validating the pair.
inline std::pair<Partition, Partition> parse_block_parts(std::string_view text) {
  text = detail::trim(text);
  if (!text.empty() && text.front() == '[' && text.back() == ']')
    text = text.substr(1, text.size() - 2);
  const auto bar = text.find('|');
  if (bar == std::string_view::npos || text.find('|', bar + 1) != std::string_view::npos)
    throw parse_error("block must have the form alpha|beta", 0);
  return {parse_partition(text.substr(0, bar)), parse_partition(text.substr(bar + 1))};
}

inline Block parse_block(std::string_view text) {
  auto [a, b] = parse_block_parts(text);
  return make_block(std::move(a), std::move(b));
}

/// [alpha1|beta1] majorizes [alpha2|beta2]: alpha1 majorizes alpha2 and
/// beta2 majorizes beta1 (note the reversal on the second component).
inline bool block_majorizes(const Block& b1, const Block& b2) {
  if (b1.n1() != b2.n1() || b1.n2() != b2.n2())
    throw domain_error("block_majorizes: " + to_label(b1) + " and " + to_label(b2) +
                       " have different (n1, n2)");
  return majorizes(b1.alpha(), b2.alpha()) && majorizes(b2.beta(), b1.beta());
}

/// Result of reading a degree sequence as a block. The pair is always
/// returned; `violation` says why it is not a block, if it is not.
struct BlockReading {
  Partition alpha;
  Partition beta;
  int mark = 0;
  std::optional<BlockClause> violation;

  bool is_block() const noexcept { return !violation; }
  bool is_sblock() const noexcept { return is_block() && alpha.sum() == beta.sum(); }
  Block block() const { return make_block(alpha, beta); }
};

inline BlockReading sequence_to_block(const Partition& pi) {
  auto ab = decompose(pi);
  auto violation = check_block(ab.alpha, ab.beta);
  return {std::move(ab.alpha), std::move(ab.beta), ab.mark, violation};
}

/// Paints the rows of A (from the diagonal rightwards) and the columns of B
/// (below the diagonal) and reads the row lengths back. Throws
/// reconstruction_error when the cells do not form a Ferrers diagram or the
/// diagram does not decompose to the same pair.
inline Partition block_to_sequence(const Block& b) {
  const auto& alpha = b.alpha();
  const auto& beta = b.beta();
  const std::size_t la = alpha.length();
  const std::size_t lb = beta.length();
  // rows are 1-based below; columns too
  std::size_t rows = la;
  for (std::size_t j = 1; j <= lb; ++j) rows = std::max(rows, j + static_cast<std::size_t>(beta[j - 1]));
  std::vector<int> degrees;
  for (std::size_t i = 1; i <= rows; ++i) {
    std::vector<bool> cells;
    auto put = [&](std::size_t col) {
      if (cells.size() < col) cells.resize(col, false);
      cells[col - 1] = true;
    };
    if (i <= la) {
      for (int c = 0; c < alpha[i - 1]; ++c) put(i + static_cast<std::size_t>(c));
    }
    for (std::size_t j = 1; j <= lb && j < i; ++j) {
      if (static_cast<std::size_t>(beta[j - 1]) >= i - j) put(j);
    }
    const auto filled = static_cast<int>(std::count(cells.begin(), cells.end(), true));
    if (filled != static_cast<int>(cells.size()))
      throw reconstruction_error(to_label(b) + ": row " + std::to_string(i) + " has a gap");
    if (filled == 0) break;
    if (!degrees.empty() && filled > degrees.back())
      throw reconstruction_error(to_label(b) + ": row " + std::to_string(i) +
                                 " is longer than the row above");
    degrees.push_back(filled);
  }
  Partition pi(std::move(degrees));
  const auto back = decompose(pi);
  if (back.alpha != alpha || back.beta != beta)
    throw reconstruction_error(to_label(b) + ": diagram decomposes to [" + to_string(back.alpha) +
                               "|" + to_string(back.beta) + "]");
  return pi;
}

/// Degree-sequence class membership read off a block.
struct Classification {
  bool is_sblock = false;
  bool is_threshold = false;
  bool is_balanced = false;
  bool is_unbalanced = false;
  bool is_ng1 = false;
  bool is_ng2 = false;
  bool is_ng3 = false;
  bool is_pseudo_split = false;
  bool is_threshold_covered = false;

  friend bool operator==(const Classification&, const Classification&) = default;
};

/// The NG-3 shape: equal lengths, alpha ends in 2,1, beta ends in 4,3,
/// n2 = n1 + 4, and the cores left after dropping those tails satisfy
/// core(beta) majorizes core(alpha).
inline bool is_ng3_pair(const Partition& alpha, const Partition& beta) {
  const auto len = alpha.length();
  if (len < 2 || beta.length() != len) return false;
  if (alpha[len - 2] != 2 || alpha[len - 1] != 1) return false;
  if (beta[len - 2] != 4 || beta[len - 1] != 3) return false;
  if (beta.sum() != alpha.sum() + 4) return false;
  return majorizes(drop_smallest(beta, 2), drop_smallest(alpha, 2));
}

inline Classification classify(const Block& b) {
  Classification c;
  const auto& alpha = b.alpha();
  const auto& beta = b.beta();
  c.is_sblock = b.is_sblock();
  if (c.is_sblock) {
    c.is_threshold = alpha == beta;
    c.is_unbalanced = alpha.length() == beta.length();
    c.is_balanced = alpha.length() == beta.length() + 1;
    if (c.is_unbalanced) {
      c.is_ng1 = beta.last() == 1;
      c.is_ng2 = alpha.last() >= 2;
    }
    c.is_threshold_covered = dis_covers(beta, alpha);
  }
  c.is_ng3 = is_ng3_pair(alpha, beta);
  c.is_pseudo_split = c.is_sblock || c.is_ng3;
  return c;
}

/// Classification of a raw sequence: an empty record (all false) when the
/// sequence is not graphic.
inline Classification classify_sequence(const Partition& pi) {
  auto reading = sequence_to_block(pi);
  if (!reading.is_block()) return {};
  return classify(reading.block());
}

}  // namespace splitblock
