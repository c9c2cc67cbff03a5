#include "sigma/element_set.hpp"

#include <algorithm>
#include <numeric>

#include "sigma/error.hpp"

namespace sigma {

ElementSet::ElementSet(std::size_t universe, std::span<const Index> members) : ElementSet(universe) {
  for (const Index x : members) {
    if (x >= universe) throw InvalidArgument("element index outside the group");
    insert(x);
  }
}

std::size_t ElementSet::size() const noexcept {
  std::size_t n = 0;
  for (const Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

bool ElementSet::empty() const noexcept {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

std::vector<Index> ElementSet::members() const {
  std::vector<Index> out;
  out.reserve(size());
  for_each([&](Index x) { out.push_back(x); });
  return out;
}

ElementSet& ElementSet::operator|=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

ElementSet& ElementSet::operator&=(const ElementSet& other) noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

bool ElementSet::is_subset_of(const ElementSet& other) const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] & ~other.words_[i]) return false;
  return true;
}

bool lex_less(const ElementSet& a, const ElementSet& b) {
  const auto x = a.members();
  const auto y = b.members();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

ElementSet operator|(ElementSet a, const ElementSet& b) { return a |= b; }
ElementSet operator&(ElementSet a, const ElementSet& b) { return a &= b; }

ElementSet all_elements(const Group& g) {
  ElementSet s(static_cast<std::size_t>(g.order()));
  for (Index x = 0; x < static_cast<Index>(g.order()); ++x) s.insert(x);
  return s;
}

std::vector<std::int64_t> subgroup_factor_orders(const Group& g, std::int64_t d) {
  if (d < 1 || g.order() % d != 0) {
    throw InvalidArgument(std::to_string(d) + " does not divide the group order " + std::to_string(g.order()));
  }
  const auto& n = g.invariant_factors();
  std::vector<std::int64_t> parts(n.size(), 1);
  std::int64_t remaining = d;
  for (std::size_t i = n.size(); i-- > 0;) {
    parts[i] = std::gcd(remaining, n[i]);
    remaining /= parts[i];
  }
  if (remaining != 1) throw InvalidArgument("no subgroup factorization for order " + std::to_string(d));
  return parts;
}

ElementSet subgroup_of_order(const Group& g, std::int64_t d) {
  const auto parts = subgroup_factor_orders(g, d);
  const auto& n = g.invariant_factors();
  ElementSet h(static_cast<std::size_t>(g.order()));
  // Walk the product of cyclic subgroups <n_i/d_i> in Z_{n_i}.
  std::vector<std::int64_t> step(n.size());
  for (std::size_t i = 0; i < n.size(); ++i) step[i] = n[i] / parts[i];
  GroupElement e = g.zero();
  while (true) {
    h.insert(g.index_of(e));
    std::size_t i = n.size();
    while (i-- > 0) {
      e.coords[i] += step[i];
      if (e.coords[i] < n[i]) break;
      e.coords[i] = 0;
      if (i == 0) return h;
    }
  }
}

}  // namespace sigma
