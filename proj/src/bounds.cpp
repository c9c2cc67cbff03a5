#include "sigma/bounds.hpp"

#include <algorithm>
#include <set>

#include "sigma/error.hpp"

namespace sigma {

namespace {

void require_size(const Group& g, std::int64_t m) {
  if (m < 1 || m > g.order()) {
    throw InvalidArgument("m = " + std::to_string(m) + " outside [1, " + std::to_string(g.order()) + "]");
  }
}

void require_fold(std::int64_t h) {
  if (h < 1) throw InvalidArgument("h must be positive");
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw InvalidArgument("bound arithmetic overflow");
  return out;
}

DivisorMinimum minimize(const std::vector<std::int64_t>& candidates, std::int64_t m, std::int64_t h) {
  DivisorMinimum best{-1, 0};
  for (const std::int64_t d : candidates) {  // ascending, so strict < keeps the smallest argmin
    const std::int64_t v = divisor_bound(m, h, d);
    if (best.value < 0 || v < best.value) best = {v, d};
  }
  return best;
}

}  // namespace

std::int64_t divisor_bound(std::int64_t m, std::int64_t h, std::int64_t d) {
  if (m < 1 || h < 1 || d < 1) throw InvalidArgument("divisor_bound needs positive m, h, d");
  return checked_mul(checked_mul(h, ceil_div(m, d)) - h + 1, d);
}

DivisorMinimum min_divisor_bound(std::int64_t n, std::int64_t m, std::int64_t h) {
  require_fold(h);
  if (m < 1 || m > n) throw InvalidArgument("need 1 <= m <= n");
  return minimize(divisors(n), m, h);
}

std::int64_t rho_formula(const Group& g, std::int64_t m, std::int64_t h) {
  require_size(g, m);
  return min_divisor_bound(g.order(), m, h).value;
}

std::vector<std::int64_t> constrained_divisors(const Group& g, std::int64_t m) {
  require_size(g, m);
  const auto& n = g.invariant_factors();
  std::vector<std::vector<std::int64_t>> options;
  for (const auto f : n) options.push_back(divisors(f));
  std::set<std::int64_t> found;
  // Depth-first over (d_1, ..., d_r); the last factor decides the constraint.
  auto descend = [&](auto&& self, std::size_t i, std::int64_t prefix) -> void {
    if (i + 1 == n.size()) {
      for (const auto dr : options[i]) {
        const std::int64_t d = prefix * dr;
        if (checked_mul(d, n.back()) >= checked_mul(dr, m)) found.insert(d);
      }
      return;
    }
    for (const auto di : options[i]) self(self, i + 1, prefix * di);
  };
  descend(descend, 0, 1);
  return {found.begin(), found.end()};
}

DivisorMinimum signed_upper_bound(const Group& g, std::int64_t m, std::int64_t h) {
  require_fold(h);
  return minimize(constrained_divisors(g, m), m, h);
}

FactorwiseMinimum signed_upper_bound_by_factors(const Group& g, std::int64_t m, std::int64_t h) {
  require_size(g, m);
  require_fold(h);
  const auto& n = g.invariant_factors();
  const std::size_t r = n.size();

  // Per-factor tables of min_divisor_bound(n_i, k, h) for k = 1..n_i.
  std::vector<std::vector<std::int64_t>> table(r);
  std::vector<std::int64_t> lower(r);
  for (std::size_t i = 0; i < r; ++i) {
    table[i].resize(static_cast<std::size_t>(n[i]) + 1);
    for (std::int64_t k = 1; k <= n[i]; ++k) table[i][static_cast<std::size_t>(k)] = min_divisor_bound(n[i], k, h).value;
    const std::int64_t others = g.order() / n[i];
    lower[i] = std::max<std::int64_t>(1, ceil_div(m, others));
  }

  FactorwiseMinimum best{-1, {}};
  std::vector<std::int64_t> parts(r);
  auto descend = [&](auto&& self, std::size_t i, std::int64_t size_product, std::int64_t bound_product) -> void {
    if (i == r) {
      if (size_product >= m && (best.value < 0 || bound_product < best.value)) best = {bound_product, parts};
      return;
    }
    for (std::int64_t k = lower[i]; k <= n[i]; ++k) {
      parts[i] = k;
      self(self, i + 1, checked_mul(size_product, k), checked_mul(bound_product, table[i][static_cast<std::size_t>(k)]));
    }
  };
  descend(descend, 0, 1, 1);
  return best;
}

std::optional<std::int64_t> odd_divisor_cutoff(const Group& g, std::int64_t m) {
  require_size(g, m);
  for (const auto d : divisors(g.order()))
    if (d % 2 == 1 && d >= 2 * m + 1) return d;
  return std::nullopt;
}

std::int64_t conjecture_value(const Group& g, std::int64_t m, std::int64_t h) {
  if (h < 2) throw InvalidArgument("the conjectured formula needs h >= 2");
  const std::int64_t bound = signed_upper_bound(g, m, h).value;
  if (h >= 3) return bound;
  const auto cutoff = odd_divisor_cutoff(g, m);
  return cutoff ? std::min(bound, *cutoff - 1) : bound;
}

BoundReport bound_report(const Group& g, std::int64_t m, std::int64_t h) {
  const auto plain = min_divisor_bound(g.order(), m, h);
  require_size(g, m);
  const auto signed_bound = signed_upper_bound(g, m, h);
  BoundReport report{g, m, h, plain.value, signed_bound.value, odd_divisor_cutoff(g, m), std::nullopt,
                     plain.argmin, signed_bound.argmin};
  if (h >= 2) report.conjecture = conjecture_value(g, m, h);
  return report;
}

}  // namespace sigma
