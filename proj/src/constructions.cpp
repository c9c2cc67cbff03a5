#include "sigma/constructions.hpp"

#include <algorithm>
#include <stdexcept>

#include "sigma/bounds.hpp"
#include "sigma/error.hpp"
#include "sigma/sumset.hpp"

namespace sigma {

namespace {

// Splits x = 2^k * odd and returns {k, odd}.
std::pair<std::int64_t, std::int64_t> split_two(std::int64_t x) {
  std::int64_t k = 0;
  while (x % 2 == 0) {
    x /= 2;
    ++k;
  }
  return {k, x};
}

std::int64_t mod(std::int64_t x, std::int64_t n) {
  x %= n;
  return x < 0 ? x + n : x;
}

// Inserts shift + H into r, H the subgroup of Z_n of the given order.
void insert_coset(ElementSet& r, std::int64_t n, std::int64_t order, std::int64_t shift) {
  const std::int64_t step = n / order;
  for (std::int64_t j = 0; j < order; ++j) r.insert(static_cast<Index>(mod(shift + j * step, n)));
}

}  // namespace

CyclicWitness cyclic_symmetric_witness(std::int64_t n, std::int64_t m, std::int64_t d, std::int64_t h) {
  if (n < 2) throw InvalidArgument("cyclic witness needs n >= 2");
  if (d < 1 || n % d != 0) throw InvalidArgument(std::to_string(d) + " does not divide " + std::to_string(n));
  if (m < 1 || m > n) throw InvalidArgument("cyclic witness needs 1 <= m <= n");
  if (h < 1) throw InvalidArgument("cyclic witness needs h >= 1");

  CyclicWitnessParams p;
  p.n = n;
  p.d = d;
  p.m = m;
  std::tie(p.a, p.n0) = split_two(n);
  std::tie(p.b, p.d0) = split_two(d);
  const std::int64_t blocks = (m + d - 1) / d;
  std::tie(p.c, p.m0) = split_two(blocks);

  ElementSet r(static_cast<std::size_t>(n));
  if (p.b + p.c <= p.a) {
    p.construction_case = 1;
    p.subgroup_order = (std::int64_t{1} << p.c) * d;
    const std::int64_t half = p.m0 / 2;
    for (std::int64_t i = -half; i <= half; ++i) insert_coset(r, n, p.subgroup_order, i);
  } else {
    p.construction_case = 2;
    p.subgroup_order = (std::int64_t{1} << p.a) * p.d0;
    p.e = p.n0 / p.d0;
    const std::int64_t reach = (std::int64_t{1} << (p.b + p.c - p.a - 1)) * p.m0;
    for (std::int64_t i = -reach + 1; i <= reach; ++i) insert_coset(r, n, p.subgroup_order, *p.e / 2 + i);
  }

  const Group zn = Group::cyclic(n);
  if (static_cast<std::int64_t>(r.size()) != d * blocks || negated(zn, r) != r) {
    throw std::logic_error("cyclic witness construction is not symmetric of size d*ceil(m/d)");
  }
  return {p, std::move(r)};
}

ProductWitness product_witness(const Group& g, std::span<const std::int64_t> part_sizes, std::int64_t h) {
  const auto& n = g.invariant_factors();
  if (part_sizes.size() != n.size()) throw InvalidArgument("one part size per invariant factor is required");
  ProductWitness out;
  for (std::size_t i = 0; i < n.size(); ++i) {
    if (part_sizes[i] < 1 || part_sizes[i] > n[i]) throw InvalidArgument("part size must lie in [1, n_i]");
    const auto best = min_divisor_bound(n[i], part_sizes[i], h);
    out.factors.push_back(cyclic_symmetric_witness(n[i], part_sizes[i], best.argmin, h));
    out.bound *= best.value;
  }

  std::vector<std::vector<Index>> parts;
  for (const auto& f : out.factors) parts.push_back(f.set.members());
  out.set = ElementSet(static_cast<std::size_t>(g.order()));
  GroupElement e = g.zero();
  std::vector<std::size_t> pos(n.size(), 0);
  while (true) {
    for (std::size_t i = 0; i < n.size(); ++i) e.coords[i] = parts[i][pos[i]];
    out.set.insert(g.index_of(e));
    std::size_t i = n.size();
    while (i-- > 0) {
      if (++pos[i] < parts[i].size()) break;
      pos[i] = 0;
      if (i == 0) return out;
    }
  }
}

ElementSet asymmetric_half_witness(const Group& g, std::int64_t m, std::int64_t d) {
  if (m < 1) throw InvalidArgument("m must be positive");
  if (d % 2 == 0) throw InvalidArgument("asymmetric half witness needs an odd subgroup order");
  if (d < 2 * m + 1) throw InvalidArgument("asymmetric half witness needs d >= 2m + 1");
  const ElementSet subgroup = subgroup_of_order(g, d);
  ElementSet a(static_cast<std::size_t>(g.order()));
  std::int64_t taken = 0;
  subgroup.for_each([&](Index x) {
    if (taken < m && x != 0 && x < g.negate(x)) {
      a.insert(x);
      ++taken;
    }
  });
  return a;
}

ElementSet trim_witness(const Group& g, const ElementSet& set, std::size_t m) {
  if (set.size() < m) throw InvalidArgument("witness has fewer than m elements");
  ElementSet out = set;
  auto members = out.members();
  std::size_t size = members.size();
  for (auto it = members.rbegin(); it != members.rend() && size >= m + 2; ++it) {
    const Index x = *it, y = g.negate(x);
    if (x != y && out.contains(x) && out.contains(y)) {
      out.erase(x);
      out.erase(y);
      size -= 2;
    }
  }
  for (auto it = members.rbegin(); it != members.rend() && size > m; ++it) {
    if (out.contains(*it) && g.negate(*it) == *it) {
      out.erase(*it);
      --size;
    }
  }
  for (auto it = members.rbegin(); it != members.rend() && size > m; ++it) {
    if (out.contains(*it)) {
      out.erase(*it);
      --size;
    }
  }
  return out;
}

}  // namespace sigma
