#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

namespace sigma {

/// Canonical mixed-radix index of a group element, in [0, |G|).
using Index = std::uint32_t;

/// Coordinates of an element of Z_{n_1} x ... x Z_{n_r}, each reduced.
struct GroupElement {
  std::vector<std::int64_t> coords;

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

/**
 * A finite abelian group in invariant-factor form Z_{n_1} x ... x Z_{n_r}
 * with n_1 >= 2 and n_i | n_{i+1}.
 *
 * Elements are addressed by a mixed-radix index whose most significant digit
 * is the first coordinate, so index order is lexicographic coordinate order.
 * Instances are immutable and cheap to copy.
 */
class Group {
 public:
  /// Throws InvalidArgument unless the list is a nonempty divisibility chain
  /// of integers >= 2 whose product is at most kMaxOrder.
  explicit Group(std::vector<std::int64_t> invariant_factors);

  /// Parses comma-separated invariant factors, e.g. "3,3" or "12".
  static Group parse(std::string_view text);
  static Group cyclic(std::int64_t n) { return Group({n}); }

  const std::vector<std::int64_t>& invariant_factors() const noexcept { return factors_; }
  std::int64_t order() const noexcept { return order_; }
  std::size_t rank() const noexcept { return factors_.size(); }
  std::int64_t exponent() const noexcept { return factors_.back(); }
  bool is_cyclic() const noexcept { return factors_.size() == 1; }

  /// "3,3" style notation, the inverse of parse().
  std::string to_string() const;

  GroupElement zero() const;
  GroupElement element(Index index) const;
  /// Throws InvalidArgument on rank mismatch or unreduced coordinates.
  Index index_of(const GroupElement& g) const;

  GroupElement add(const GroupElement& a, const GroupElement& b) const;
  GroupElement negate(const GroupElement& a) const;

  Index add(Index a, Index b) const noexcept;
  Index negate(Index a) const noexcept { return negation_[a]; }
  /// k * a for any integer k (negative k multiplies the inverse).
  Index multiple(Index a, std::int64_t k) const noexcept;

  friend bool operator==(const Group& x, const Group& y) noexcept { return x.factors_ == y.factors_; }

 private:
  std::vector<std::int64_t> factors_;
  std::vector<std::int64_t> strides_;
  std::int64_t order_ = 1;
  std::vector<Index> negation_;
  // Cayley table for small noncyclic groups; shared between copies.
  std::shared_ptr<const std::vector<Index>> table_;
};

/// All positive divisors of n, ascending. Throws for n < 1.
std::vector<std::int64_t> divisors(std::int64_t n);

/// Every abelian group of order n, one per isomorphism type, ordered by
/// rank and then lexicographically by invariant factors.
std::vector<Group> abelian_groups_of_order(std::int64_t n);

/// True when Z_p x Z_p embeds in G for some odd prime p.
bool has_odd_square_subgroup(const Group& g);

}  // namespace sigma
