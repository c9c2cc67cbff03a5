#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

#include "sigma/group.hpp"

namespace sigma {

/**
 * A subset of a group stored as a fixed-width bit array over canonical
 * element indices. The universe size equals the order of the owning group;
 * the group itself is passed alongside where arithmetic is needed.
 */
class ElementSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  ElementSet() = default;
  explicit ElementSet(std::size_t universe) : universe_(universe), words_((universe + kWordBits - 1) / kWordBits) {}
  ElementSet(std::size_t universe, std::span<const Index> members);
  ElementSet(std::size_t universe, std::initializer_list<Index> members)
      : ElementSet(universe, std::span<const Index>(members.begin(), members.size())) {}

  std::size_t universe() const noexcept { return universe_; }
  bool contains(Index x) const noexcept { return (words_[x / kWordBits] >> (x % kWordBits)) & 1U; }
  void insert(Index x) noexcept { words_[x / kWordBits] |= Word{1} << (x % kWordBits); }
  void erase(Index x) noexcept { words_[x / kWordBits] &= ~(Word{1} << (x % kWordBits)); }
  void clear() noexcept { std::fill(words_.begin(), words_.end(), Word{0}); }

  std::size_t size() const noexcept;
  bool empty() const noexcept;

  /// Members in ascending index order.
  std::vector<Index> members() const;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits) {
        f(static_cast<Index>(w * kWordBits + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
  }

  ElementSet& operator|=(const ElementSet& other) noexcept;
  ElementSet& operator&=(const ElementSet& other) noexcept;
  bool is_subset_of(const ElementSet& other) const noexcept;

  std::span<const Word> words() const noexcept { return words_; }
  std::span<Word> words() noexcept { return words_; }

  friend bool operator==(const ElementSet&, const ElementSet&) = default;

  /// Lexicographic comparison of the sorted member lists.
  friend bool lex_less(const ElementSet& a, const ElementSet& b);

 private:
  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

ElementSet operator|(ElementSet a, const ElementSet& b);
ElementSet operator&(ElementSet a, const ElementSet& b);

/// The whole group as a set.
ElementSet all_elements(const Group& g);

/// A subgroup of order d built as a product of cyclic subgroups of orders
/// d_i | n_i, assigned greedily from the largest invariant factor down.
/// Throws InvalidArgument when d does not divide |G|.
ElementSet subgroup_of_order(const Group& g, std::int64_t d);

/// The per-factor orders used by subgroup_of_order, in coordinate order.
std::vector<std::int64_t> subgroup_factor_orders(const Group& g, std::int64_t d);

}  // namespace sigma
