#pragma once

#include <algorithm>
#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "splitblock/block.hpp"
#include "splitblock/dis_lattice.hpp"
#include "splitblock/partition.hpp"
#include "splitblock/poset.hpp"

namespace splitblock {

// ---------------------------------------------------------------------------
// Amphora identifiers and labels

/// A(n,k) when !balanced, A(n,k,k-1) when balanced.
struct AmphoraId {
  int k = 0;
  bool balanced = false;

  friend bool operator==(const AmphoraId&, const AmphoraId&) = default;
  /// Zigzag order: larger k first; within k the unbalanced amphora first.
  friend auto operator<=>(const AmphoraId& a, const AmphoraId& b) {
    if (a.k != b.k) return b.k <=> a.k;
    return a.balanced <=> b.balanced;
  }
};

inline std::string amphora_name(int n, AmphoraId id) {
  std::string s = "A(" + std::to_string(n) + "," + std::to_string(id.k);
  if (id.balanced) s += "," + std::to_string(id.k - 1);
  return s + ")";
}

/// Amphora of an S-block, read from the lengths of its components.
inline AmphoraId amphora_of(const Block& b) {
  if (!b.is_sblock()) throw domain_error(to_label(b) + " is not an S-block");
  const int k = static_cast<int>(b.alpha().length());
  return {k, b.alpha().length() == b.beta().length() + 1};
}

struct AmphoraLabel {
  AmphoraId amphora;
  bool ng1 = false;
  bool ng2 = false;
  bool in_tc = false;

  friend bool operator==(const AmphoraLabel&, const AmphoraLabel&) = default;
};

// ---------------------------------------------------------------------------
// Extended elements of the completed lattice

struct Bottom {
  friend bool operator==(Bottom, Bottom) { return true; }
};
struct Top {
  friend bool operator==(Top, Top) { return true; }
};

using ExtendedElement = std::variant<Bottom, Block, Top>;

inline std::string to_string(const ExtendedElement& x) {
  if (std::holds_alternative<Bottom>(x)) return "bottom";
  if (std::holds_alternative<Top>(x)) return "top";
  return to_string(std::get<Block>(x));
}

// ---------------------------------------------------------------------------
// S-Block(n)

inline bool block_canonical_less(const Block& a, const Block& b) {
  if (a.alpha() != b.alpha()) return canonical_less(a.alpha(), b.alpha());
  return canonical_less(a.beta(), b.beta());
}

/// Builds the poset of the given blocks under block majorization.
inline PosetIndex<Block> make_block_poset(std::vector<Block> blocks) {
  std::sort(blocks.begin(), blocks.end(), block_canonical_less);
  return PosetIndex<Block>(std::move(blocks),
                           [](const Block& a, const Block& b) { return block_majorizes(b, a); });
}

/// S-Block(n), its Hasse diagram, and the amphora label of every element.
class SBlockPoset {
 public:
  explicit SBlockPoset(int n) : n_(n), dis_(enumerate_dis(n)) {
    std::vector<Block> blocks;
    for (const auto& a : dis_.elements()) {
      for (const auto& b : dis_.elements()) {
        if (!check_block(a, b)) blocks.push_back(make_block(a, b));
      }
    }
    poset_ = make_block_poset(std::move(blocks));
    labels_.reserve(poset_.size());
    for (const auto& b : poset_.elements()) {
      AmphoraLabel l;
      l.amphora = amphora_of(b);
      if (!l.amphora.balanced) {
        l.ng1 = b.beta().last() == 1;
        l.ng2 = b.alpha().last() >= 2;
      }
      l.in_tc = dis_.covers_pair(dis_.require_index(b.beta()), dis_.require_index(b.alpha()));
      labels_.push_back(l);
    }
  }

  int n() const noexcept { return n_; }
  const DisPoset& dis() const noexcept { return dis_; }
  const PosetIndex<Block>& poset() const noexcept { return poset_; }
  const std::vector<Block>& elements() const noexcept { return poset_.elements(); }
  std::size_t size() const noexcept { return poset_.size(); }
  const std::vector<AmphoraLabel>& labels() const noexcept { return labels_; }
  const AmphoraLabel& label(std::size_t i) const { return labels_[i]; }

  std::size_t index_of(const Block& b) const {
    auto i = poset_.index_of(b);
    if (!i) throw domain_error(to_label(b) + " is not in S-Block(" + std::to_string(n_) + ")");
    return *i;
  }

  /// Indices of the elements in the given amphora.
  std::vector<std::size_t> members(AmphoraId id) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < labels_.size(); ++i)
      if (labels_[i].amphora == id) out.push_back(i);
    return out;
  }

  /// Nonempty amphoras in zigzag order.
  std::vector<AmphoraId> amphoras() const {
    std::vector<AmphoraId> ids;
    for (const auto& l : labels_) ids.push_back(l.amphora);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    return ids;
  }

 private:
  int n_;
  DisPoset dis_;
  PosetIndex<Block> poset_;
  std::vector<AmphoraLabel> labels_;
};

inline SBlockPoset build_sblock_poset(int n) {
  if (n < 1) throw domain_error("build_sblock_poset: n must be positive");
  return SBlockPoset(n);
}

namespace detail {

inline std::vector<Block> blocks_at(const SBlockPoset& p, const std::vector<std::size_t>& idx) {
  std::vector<Block> out;
  for (auto i : idx) out.push_back(p.elements()[i]);
  return out;
}

}  // namespace detail

/// A(n,k): the unbalanced S-blocks with both components in Dis_k(n).
inline std::vector<Block> amphora(const SBlockPoset& p, int k) {
  return detail::blocks_at(p, p.members({k, false}));
}

/// A(n,k,k-1): the balanced S-blocks with alpha in Dis_k(n), beta in Dis_{k-1}(n).
inline std::vector<Block> amphora_balanced(const SBlockPoset& p, int k) {
  return detail::blocks_at(p, p.members({k, true}));
}

inline std::vector<Block> amphora(int n, int k) { return amphora(build_sblock_poset(n), k); }
inline std::vector<Block> amphora_balanced(int n, int k) {
  return amphora_balanced(build_sblock_poset(n), k);
}

/// Predicted minimum of an amphora: [tau_k | tau'_k] or [tau_k | tau'_{k-1}].
inline Block amphora_bottom(int n, AmphoraId id) {
  return make_block(tau(n, id.k), tau_prime(n, id.balanced ? id.k - 1 : id.k));
}

/// Predicted top antichain: the threshold blocks [g|g] with g in Dis_k(n) for
/// A(n,k); the threshold-covered blocks with the right lengths for A(n,k,k-1).
inline std::vector<Block> amphora_tops(const SBlockPoset& p, AmphoraId id) {
  std::vector<Block> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const auto& b = p.elements()[i];
    if (p.label(i).amphora != id) continue;
    if (id.balanced ? p.label(i).in_tc : b.alpha() == b.beta()) out.push_back(b);
  }
  return out;
}

/// W(n): amphoras ordered by A(n,k,k-1) < A(n,k) and A(n,k,k-1) < A(n,k-1).
inline PosetIndex<AmphoraId> build_w(const SBlockPoset& p) {
  return PosetIndex<AmphoraId>(p.amphoras(), [](const AmphoraId& a, const AmphoraId& b) {
    if (a == b) return true;
    return a.balanced && !b.balanced && (b.k == a.k || b.k == a.k - 1);
  });
}

inline PosetIndex<AmphoraId> build_w(int n) { return build_w(build_sblock_poset(n)); }

// ---------------------------------------------------------------------------
// NG-1 / NG-2 sub-amphoras

enum class NgSet { NG1, NG2, NG1Star, NG2Star, NG1AndNG2 };

inline std::string ng_set_name(NgSet s) {
  switch (s) {
    case NgSet::NG1: return "NG1";
    case NgSet::NG2: return "NG2";
    case NgSet::NG1Star: return "NG1*";
    case NgSet::NG2Star: return "NG2*";
    case NgSet::NG1AndNG2: return "NG1&NG2";
  }
  return "?";
}

inline bool in_ng_set(const AmphoraLabel& l, NgSet s) {
  if (l.amphora.balanced) return false;
  switch (s) {
    case NgSet::NG1: return l.ng1;
    case NgSet::NG2: return l.ng2;
    case NgSet::NG1Star: return l.ng1 && !l.ng2;
    case NgSet::NG2Star: return l.ng2 && !l.ng1;
    case NgSet::NG1AndNG2: return l.ng1 && l.ng2;
  }
  return false;
}

/// Indices (into p) of the members of NG set `s` within A(n,k).
inline std::vector<std::size_t> ng_members(const SBlockPoset& p, int k, NgSet s) {
  std::vector<std::size_t> out;
  for (auto i : p.members({k, false}))
    if (in_ng_set(p.label(i), s)) out.push_back(i);
  return out;
}

struct NgSubsets {
  std::vector<Block> ng1;
  std::vector<Block> ng2;
  std::vector<Block> ng1_and_ng2;
  std::vector<Block> ng1_star;
  std::vector<Block> ng2_star;
};

inline NgSubsets ng_subsets(const SBlockPoset& p, int k) {
  if (p.n() < triangular(k)) throw domain_error("ng_subsets: A(n,k) is empty");
  return {detail::blocks_at(p, ng_members(p, k, NgSet::NG1)),
          detail::blocks_at(p, ng_members(p, k, NgSet::NG2)),
          detail::blocks_at(p, ng_members(p, k, NgSet::NG1AndNG2)),
          detail::blocks_at(p, ng_members(p, k, NgSet::NG1Star)),
          detail::blocks_at(p, ng_members(p, k, NgSet::NG2Star))};
}

/// Claimed top antichain of an NG set inside A(n,k): NG-1 (resp. NG-2)
/// threshold blocks for NG1 (NG2); for the intersection, the blocks
/// [a|b] with b covering a, last(a) >= 2 and last(b) = 1.
inline std::vector<std::size_t> ng_claimed_tops(const SBlockPoset& p, int k, NgSet s) {
  std::vector<std::size_t> out;
  for (auto i : p.members({k, false})) {
    const auto& b = p.elements()[i];
    const auto& l = p.label(i);
    switch (s) {
      case NgSet::NG1:
        if (b.alpha() == b.beta() && l.ng1) out.push_back(i);
        break;
      case NgSet::NG2:
        if (b.alpha() == b.beta() && l.ng2) out.push_back(i);
        break;
      case NgSet::NG1AndNG2:
        if (l.in_tc && b.alpha().last() >= 2 && b.beta().last() == 1) out.push_back(i);
        break;
      default:
        break;
    }
  }
  return out;
}

enum class NgStar { NG1Star, NG2Star };

/// NG1*: drop the trailing 1 of both components and lower every other part
/// by one, landing in A(n-k, k-1). NG2*: lower every part by one, landing in
/// A(n-k, k).
inline Block ng_star_image(const Block& b, NgStar which) {
  if (which == NgStar::NG1Star) {
    if (b.alpha().last() != 1 || b.beta().last() != 1)
      throw domain_error(to_label(b) + " is not in NG1*");
    return make_block(shift_parts(drop_smallest(b.alpha(), 1), -1),
                      shift_parts(drop_smallest(b.beta(), 1), -1));
  }
  if (b.alpha().last() < 2 || b.beta().last() < 2) throw domain_error(to_label(b) + " is not in NG2*");
  return make_block(shift_parts(b.alpha(), -1), shift_parts(b.beta(), -1));
}

/// The NG*-to-amphora map on every element of NG1*(n,k) or NG2*(n,k).
/// Throws domain_error when the target amphora does not exist.
inline std::vector<std::pair<Block, Block>> ng_star_bijection(const SBlockPoset& p, int k,
                                                              NgStar which) {
  const int tn = p.n() - k;
  const int tk = which == NgStar::NG1Star ? k - 1 : k;
  if (tk < 1 || tn < 1 || tn < triangular(tk))
    throw domain_error("ng_star_bijection: target amphora A(" + std::to_string(tn) + "," +
                       std::to_string(tk) + ") is empty");
  const auto set = which == NgStar::NG1Star ? NgSet::NG1Star : NgSet::NG2Star;
  std::vector<std::pair<Block, Block>> out;
  for (auto i : ng_members(p, k, set)) out.emplace_back(p.elements()[i], ng_star_image(p.elements()[i], which));
  return out;
}

// ---------------------------------------------------------------------------
// Lattice completion S-Block(n) + {bottom, top}

namespace detail {

inline void require_same_n(const SBlockPoset& p, const Block& b) {
  if (!b.is_sblock() || b.n1() != p.n())
    throw domain_error(to_label(b) + " is not an S-block over n = " + std::to_string(p.n()));
}

}  // namespace detail

/// Meet from the component formula: with l = max(len a1 - len b2,
/// len a2 - len b1), the meet is [a1 ^ a2 | b1 v b2] when l is 0 or 1 and
/// the adjoined bottom otherwise.
inline ExtendedElement lattice_meet(const SBlockPoset& p, const ExtendedElement& x,
                                    const ExtendedElement& y) {
  if (std::holds_alternative<Bottom>(x) || std::holds_alternative<Bottom>(y)) return Bottom{};
  if (std::holds_alternative<Top>(x)) return y;
  if (std::holds_alternative<Top>(y)) return x;
  const auto& b1 = std::get<Block>(x);
  const auto& b2 = std::get<Block>(y);
  detail::require_same_n(p, b1);
  detail::require_same_n(p, b2);
  const long l = std::max(static_cast<long>(b1.alpha().length()) - static_cast<long>(b2.beta().length()),
                          static_cast<long>(b2.alpha().length()) - static_cast<long>(b1.beta().length()));
  if (l != 0 && l != 1) return Bottom{};
  return make_block(meet(p.dis(), b1.alpha(), b2.alpha()), join(p.dis(), b1.beta(), b2.beta()));
}

/// Join from the component formula: [a1 v a2 | b1 ^ b2] when b1 ^ b2
/// majorizes a1 v a2, the adjoined top otherwise.
inline ExtendedElement lattice_join(const SBlockPoset& p, const ExtendedElement& x,
                                    const ExtendedElement& y) {
  if (std::holds_alternative<Top>(x) || std::holds_alternative<Top>(y)) return Top{};
  if (std::holds_alternative<Bottom>(x)) return y;
  if (std::holds_alternative<Bottom>(y)) return x;
  const auto& b1 = std::get<Block>(x);
  const auto& b2 = std::get<Block>(y);
  detail::require_same_n(p, b1);
  detail::require_same_n(p, b2);
  auto alpha = join(p.dis(), b1.alpha(), b2.alpha());
  auto beta = meet(p.dis(), b1.beta(), b2.beta());
  if (!majorizes(beta, alpha)) return Top{};
  return make_block(std::move(alpha), std::move(beta));
}

/// Meet by search in the Hasse structure: greatest common lower bound in
/// S-Block(n), bottom when there is none.
inline ExtendedElement search_meet(const SBlockPoset& p, const ExtendedElement& x,
                                   const ExtendedElement& y) {
  if (std::holds_alternative<Bottom>(x) || std::holds_alternative<Bottom>(y)) return Bottom{};
  if (std::holds_alternative<Top>(x)) return y;
  if (std::holds_alternative<Top>(y)) return x;
  auto m = p.poset().meet(p.index_of(std::get<Block>(x)), p.index_of(std::get<Block>(y)));
  if (!m) return Bottom{};
  return p.elements()[*m];
}

inline ExtendedElement search_join(const SBlockPoset& p, const ExtendedElement& x,
                                   const ExtendedElement& y) {
  if (std::holds_alternative<Top>(x) || std::holds_alternative<Top>(y)) return Top{};
  if (std::holds_alternative<Bottom>(x)) return y;
  if (std::holds_alternative<Bottom>(y)) return x;
  auto j = p.poset().join(p.index_of(std::get<Block>(x)), p.index_of(std::get<Block>(y)));
  if (!j) return Top{};
  return p.elements()[*j];
}

// ---------------------------------------------------------------------------
// Meet/join case tables

/// Where a meet or join lands: an amphora or one of the adjoined elements.
using Location = std::variant<Bottom, AmphoraId, Top>;
using NgLocation = std::variant<NgSet, Top>;

inline std::string to_string(const Location& l, int n) {
  if (std::holds_alternative<Bottom>(l)) return "bottom";
  if (std::holds_alternative<Top>(l)) return "top";
  return amphora_name(n, std::get<AmphoraId>(l));
}

inline std::string to_string(const NgLocation& l) {
  if (std::holds_alternative<Top>(l)) return "top";
  return ng_set_name(std::get<NgSet>(l));
}

/// One applicable row of the NG refinement (both blocks in the same A(n,k)).
struct NgRow {
  std::string row;
  NgSet meet;
  NgLocation join;
  bool join_alternative = false;  // entry reads "X or top"
};

struct TableCase {
  std::string row;  // 1, 2, 3a, 3b, 4a, 4b, 5, 6
  Location meet;
  Location join;                  // resolved
  bool join_alternative = false;  // entry reads "X or top"
  std::vector<NgRow> ng_rows;
};

/// Row of the balanced/unbalanced table and the NG refinement rows that
/// apply to the pair, with the predicted location of meet and join. "X or
/// top" entries are resolved by whether b1 ^ b2 majorizes a1 v a2.
inline TableCase table_case(const SBlockPoset& p, const Block& b1, const Block& b2) {
  detail::require_same_n(p, b1);
  detail::require_same_n(p, b2);
  const auto alpha_join = join(p.dis(), b1.alpha(), b2.alpha());
  const auto beta_meet = meet(p.dis(), b1.beta(), b2.beta());
  const bool join_exists = majorizes(beta_meet, alpha_join);

  auto a1 = amphora_of(b1);
  auto a2 = amphora_of(b2);
  const int k = a1.k;
  const int j = a2.k;
  TableCase tc;
  auto alt = [&](AmphoraId id) -> Location {
    tc.join_alternative = true;
    if (join_exists) return id;
    return Top{};
  };
  if (!a1.balanced && !a2.balanced) {
    if (k == j) {
      tc.row = "1";
      tc.meet = AmphoraId{k, false};
      tc.join = alt({k, false});
    } else if (std::abs(k - j) == 1) {
      tc.row = "3b";
      tc.meet = AmphoraId{std::max(k, j), true};
      tc.join = Top{};
    } else {
      tc.row = "3a";
      tc.meet = Bottom{};
      tc.join = Top{};
    }
  } else if (a1.balanced && a2.balanced) {
    if (k == j) {
      tc.row = "2";
      tc.meet = AmphoraId{k, true};
      tc.join = alt({k, true});
    } else if (std::abs(k - j) == 1) {
      tc.row = "4b";
      tc.meet = Bottom{};
      tc.join = alt({std::min(k, j), false});
    } else {
      tc.row = "4a";
      tc.meet = Bottom{};
      tc.join = Top{};
    }
  } else {
    const int ku = a1.balanced ? j : k;  // unbalanced A(n,ku)
    const int jb = a1.balanced ? k : j;  // balanced A(n,jb,jb-1)
    if (ku == jb || ku == jb - 1) {
      tc.row = "5";
      tc.meet = AmphoraId{jb, true};
      tc.join = alt({ku, false});
    } else {
      tc.row = "6";
      tc.meet = Bottom{};
      tc.join = Top{};
    }
  }

  if (tc.row == "1") {
    const auto& l1 = p.label(p.index_of(b1));
    const auto& l2 = p.label(p.index_of(b2));
    auto resolved = [&](NgSet s) -> NgLocation {
      if (join_exists) return s;
      return Top{};
    };
    for (auto [s, name] : {std::pair{NgSet::NG1, "NG1 x NG1"}, std::pair{NgSet::NG2, "NG2 x NG2"},
                           std::pair{NgSet::NG1Star, "NG1* x NG1*"},
                           std::pair{NgSet::NG2Star, "NG2* x NG2*"}}) {
      if (in_ng_set(l1, s) && in_ng_set(l2, s)) tc.ng_rows.push_back({name, s, resolved(s), true});
    }
    for (auto [s, name] : {std::pair{NgSet::NG1Star, "NG1* x NG1&NG2"},
                           std::pair{NgSet::NG2Star, "NG2* x NG1&NG2"}}) {
      if ((in_ng_set(l1, s) && in_ng_set(l2, NgSet::NG1AndNG2)) ||
          (in_ng_set(l2, s) && in_ng_set(l1, NgSet::NG1AndNG2)))
        tc.ng_rows.push_back({name, NgSet::NG1AndNG2, resolved(s), true});
    }
    if ((in_ng_set(l1, NgSet::NG1Star) && in_ng_set(l2, NgSet::NG2Star)) ||
        (in_ng_set(l1, NgSet::NG2Star) && in_ng_set(l2, NgSet::NG1Star)))
      tc.ng_rows.push_back({"NG1* x NG2*", NgSet::NG1AndNG2, Top{}, false});
  }
  return tc;
}

/// Whether an extended element lands at the predicted location.
inline bool lands_in(const SBlockPoset& p, const ExtendedElement& x, const Location& where) {
  if (std::holds_alternative<Bottom>(where)) return std::holds_alternative<Bottom>(x);
  if (std::holds_alternative<Top>(where)) return std::holds_alternative<Top>(x);
  if (!std::holds_alternative<Block>(x)) return false;
  (void)p;
  return amphora_of(std::get<Block>(x)) == std::get<AmphoraId>(where);
}

inline bool lands_in(const SBlockPoset& p, const ExtendedElement& x, int k, const NgLocation& where) {
  if (std::holds_alternative<Top>(where)) return std::holds_alternative<Top>(x);
  if (!std::holds_alternative<Block>(x)) return false;
  const auto i = p.index_of(std::get<Block>(x));
  return p.label(i).amphora == AmphoraId{k, false} && in_ng_set(p.label(i), std::get<NgSet>(where));
}

// ---------------------------------------------------------------------------
// NG_3(n,k)

/// NG_3(n,k) together with its image in A(n-4k, k).
struct Ng3Poset {
  int n = 0;
  int k = 0;
  PosetIndex<Block> poset;
  PosetIndex<Block> image;          // A(n-4k, k); empty when NG_3(n,k) is
  std::vector<std::size_t> mapping;  // poset index -> image index
};

/// Strips the 2,1 / 4,3 tails and lowers every core part by 4.
inline Block ng3_to_split(const Block& b) {
  if (!is_ng3_pair(b.alpha(), b.beta())) throw domain_error(to_label(b) + " is not an NG-3 block");
  return make_block(shift_parts(drop_smallest(b.alpha(), 2), -4),
                    shift_parts(drop_smallest(b.beta(), 2), -4));
}

/// NG-3 blocks whose cores lie in Dis_k(n), the beta core having smallest
/// part at least 5.
inline Ng3Poset build_ng3_poset(int n, int k) {
  if (k < 1) throw domain_error("build_ng3_poset: k must be positive");
  Ng3Poset out;
  out.n = n;
  out.k = k;
  std::vector<Block> blocks;
  std::vector<Partition> cores;
  if (n >= triangular(k)) {
    for (auto& g : distinct_partitions(n))
      if (g.length() == static_cast<std::size_t>(k)) cores.push_back(std::move(g));
  }
  for (const auto& a : cores) {
    for (const auto& b : cores) {
      if (b.last() < 5 || !majorizes(b, a)) continue;
      blocks.push_back(make_block(append_parts(a, {2, 1}), append_parts(b, {4, 3})));
    }
  }
  out.poset = make_block_poset(std::move(blocks));
  const int tn = n - 4 * k;
  // A(tn,k) straight from Dis_k(tn); building all of S-Block(tn) is far too slow for small k
  std::vector<Block> image;
  if (tn >= triangular(k)) {
    const auto slice = enumerate_dis_k(tn, k);
    for (const auto& a : slice.elements())
      for (const auto& b : slice.elements())
        if (majorizes(b, a)) image.push_back(make_block(a, b));
  }
  out.image = make_block_poset(std::move(image));
  for (const auto& b : out.poset.elements()) {
    auto i = out.image.index_of(ng3_to_split(b));
    if (!i) throw domain_error("NG-3 image of " + to_label(b) + " is outside A(n-4k,k)");
    out.mapping.push_back(*i);
  }
  return out;
}

}  // namespace splitblock
