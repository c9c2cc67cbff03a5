#include "sigma/group.hpp"

#include <algorithm>
#include <charconv>
#include <functional>
#include <numeric>
#include <sstream>

#include "sigma/error.hpp"

namespace sigma {

namespace {

constexpr std::int64_t kTableLimit = 256;

std::int64_t reduce(std::int64_t x, std::int64_t n) {
  x %= n;
  return x < 0 ? x + n : x;
}

}  // namespace

Group::Group(std::vector<std::int64_t> invariant_factors) : factors_(std::move(invariant_factors)) {
  if (factors_.empty()) throw InvalidArgument("group needs at least one invariant factor");
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (factors_[i] < 2) throw InvalidArgument("invariant factors must be >= 2");
    if (i + 1 < factors_.size() && factors_[i + 1] % factors_[i] != 0) {
      throw InvalidArgument("invariant factor " + std::to_string(factors_[i]) + " does not divide " +
                            std::to_string(factors_[i + 1]));
    }
    if (order_ > kMaxOrder / factors_[i]) throw InvalidArgument("group order exceeds 2^20");
    order_ *= factors_[i];
  }

  strides_.assign(factors_.size(), 1);
  for (std::size_t i = factors_.size() - 1; i > 0; --i) strides_[i - 1] = strides_[i] * factors_[i];

  negation_.resize(static_cast<std::size_t>(order_));
  for (std::int64_t x = 0; x < order_; ++x) {
    std::int64_t rest = x;
    std::int64_t neg = 0;
    for (std::size_t i = 0; i < factors_.size(); ++i) {
      const std::int64_t c = rest / strides_[i];
      rest %= strides_[i];
      neg += reduce(-c, factors_[i]) * strides_[i];
    }
    negation_[static_cast<std::size_t>(x)] = static_cast<Index>(neg);
  }

  if (!is_cyclic() && order_ <= kTableLimit) {
    auto table = std::make_shared<std::vector<Index>>(static_cast<std::size_t>(order_ * order_));
    for (std::int64_t a = 0; a < order_; ++a)
      for (std::int64_t b = 0; b < order_; ++b)
        (*table)[static_cast<std::size_t>(a * order_ + b)] = add(static_cast<Index>(a), static_cast<Index>(b));
    table_ = std::move(table);
  }
}

Group Group::parse(std::string_view text) {
  std::vector<std::int64_t> factors;
  while (true) {
    const auto comma = text.find(',');
    std::string_view token = text.substr(0, comma);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc{} || ptr != token.data() + token.size()) {
      throw InvalidArgument("malformed group '" + std::string(text) + "'");
    }
    factors.push_back(value);
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return Group(std::move(factors));
}

std::string Group::to_string() const {
  std::ostringstream out;
  for (std::size_t i = 0; i < factors_.size(); ++i) out << (i ? "," : "") << factors_[i];
  return out.str();
}

GroupElement Group::zero() const { return GroupElement{std::vector<std::int64_t>(rank(), 0)}; }

GroupElement Group::element(Index index) const {
  GroupElement g{std::vector<std::int64_t>(rank())};
  std::int64_t rest = index;
  for (std::size_t i = 0; i < rank(); ++i) {
    g.coords[i] = rest / strides_[i];
    rest %= strides_[i];
  }
  return g;
}

Index Group::index_of(const GroupElement& g) const {
  if (g.coords.size() != rank()) throw InvalidArgument("element rank does not match group rank");
  std::int64_t index = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    if (g.coords[i] < 0 || g.coords[i] >= factors_[i]) throw InvalidArgument("coordinate out of range");
    index += g.coords[i] * strides_[i];
  }
  return static_cast<Index>(index);
}

GroupElement Group::add(const GroupElement& a, const GroupElement& b) const {
  if (a.coords.size() != rank() || b.coords.size() != rank()) {
    throw InvalidArgument("element rank does not match group rank");
  }
  GroupElement sum{std::vector<std::int64_t>(rank())};
  for (std::size_t i = 0; i < rank(); ++i) sum.coords[i] = reduce(a.coords[i] + b.coords[i], factors_[i]);
  return sum;
}

GroupElement Group::negate(const GroupElement& a) const {
  if (a.coords.size() != rank()) throw InvalidArgument("element rank does not match group rank");
  GroupElement neg{std::vector<std::int64_t>(rank())};
  for (std::size_t i = 0; i < rank(); ++i) neg.coords[i] = reduce(-a.coords[i], factors_[i]);
  return neg;
}

Index Group::add(Index a, Index b) const noexcept {
  if (is_cyclic()) {
    const std::int64_t s = std::int64_t{a} + b;
    return static_cast<Index>(s >= order_ ? s - order_ : s);
  }
  if (table_) return (*table_)[static_cast<std::size_t>(a) * static_cast<std::size_t>(order_) + b];
  std::int64_t ra = a, rb = b, sum = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::int64_t ca = ra / strides_[i], cb = rb / strides_[i];
    ra %= strides_[i];
    rb %= strides_[i];
    std::int64_t c = ca + cb;
    if (c >= factors_[i]) c -= factors_[i];
    sum += c * strides_[i];
  }
  return static_cast<Index>(sum);
}

Index Group::multiple(Index a, std::int64_t k) const noexcept {
  if (is_cyclic()) return static_cast<Index>(reduce(static_cast<std::int64_t>(a % order_) * reduce(k, order_) % order_, order_));
  std::int64_t rest = a, out = 0;
  for (std::size_t i = 0; i < rank(); ++i) {
    const std::int64_t c = rest / strides_[i];
    rest %= strides_[i];
    out += reduce(c * reduce(k, factors_[i]), factors_[i]) * strides_[i];
  }
  return static_cast<Index>(out);
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw InvalidArgument("divisors() needs n >= 1");
  std::vector<std::int64_t> low, high;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    low.push_back(d);
    if (d != n / d) high.push_back(n / d);
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::vector<Group> abelian_groups_of_order(std::int64_t n) {
  if (n < 1) throw InvalidArgument("group order must be positive");
  std::vector<std::vector<std::int64_t>> chains;
  std::vector<std::int64_t> chain;
  // Build chains n_1 | n_2 | ... with product n; each next factor is a
  // multiple of the previous one and the remaining cofactor must be a
  // multiple of it as well (so a later n_r can exist).
  std::function<void(std::int64_t)> extend = [&](std::int64_t remaining) {
    if (remaining == 1) {
      if (!chain.empty()) chains.push_back(chain);
      return;
    }
    const std::int64_t prev = chain.empty() ? 1 : chain.back();
    for (const std::int64_t f : divisors(remaining)) {
      if (f < 2 || f % prev != 0) continue;
      if ((remaining / f) % f != 0 && remaining != f) continue;
      chain.push_back(f);
      extend(remaining / f);
      chain.pop_back();
    }
  };
  if (n == 1) return {};
  extend(n);
  std::sort(chains.begin(), chains.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  std::vector<Group> groups;
  groups.reserve(chains.size());
  for (auto& c : chains) groups.emplace_back(std::move(c));
  return groups;
}

bool has_odd_square_subgroup(const Group& g) {
  const auto& f = g.invariant_factors();
  if (f.size() < 2) return false;
  // Z_p^2 embeds iff p divides two invariant factors, i.e. p | n_{r-1}.
  std::int64_t x = f[f.size() - 2];
  while (x % 2 == 0) x /= 2;
  return x > 1;
}

}  // namespace sigma
