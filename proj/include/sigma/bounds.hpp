#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "sigma/group.hpp"

namespace sigma {

/// (h * ceil(m/d) - h + 1) * d. All arguments must be positive.
std::int64_t divisor_bound(std::int64_t m, std::int64_t h, std::int64_t d);

/// A minimum over divisors together with its smallest minimizing divisor.
struct DivisorMinimum {
  std::int64_t value = 0;
  std::int64_t argmin = 0;
};

/// This equals the minimum |hA| over m-subsets of any
/// By Plagne's theorem this is the minimum |hA| over m-subsets of any
/// abelian group of order n.
DivisorMinimum min_divisor_bound(std::int64_t n, std::int64_t m, std::int64_t h);

/// Minimum plain h-fold sumset size over m-subsets of G.
std::int64_t rho_formula(const Group& g, std::int64_t m, std::int64_t h);

/**
 * Divisors d of |G| that factor as d_1 ... d_r with d_i | n_i and
 * d * n_r >= d_r * m, ascending.
 */
std::vector<std::int64_t> constrained_divisors(const Group& g, std::int64_t m);

/// min of divisor_bound over constrained_divisors(g, m), smallest argmin.
DivisorMinimum signed_upper_bound(const Group& g, std::int64_t m, std::int64_t h);

struct FactorwiseMinimum {
  std::int64_t value = 0;
  std::vector<std::int64_t> part_sizes;  ///< the minimizing (m_1, ..., m_r)
};

/**
 * min over (m_1, ..., m_r) with 1 <= m_i <= n_i and prod m_i >= m of
 * prod min_divisor_bound(n_i, m_i, h). Equal to signed_upper_bound, computed
 * independently. The first minimizer in lexicographic order is reported.
 */
FactorwiseMinimum signed_upper_bound_by_factors(const Group& g, std::int64_t m, std::int64_t h);

/// Smallest odd divisor of |G| that is at least 2m + 1, if any.
std::optional<std::int64_t> odd_divisor_cutoff(const Group& g, std::int64_t m);

/// Conjectured exact signed minimum: the signed upper bound for h >= 3, and
/// for h = 2 additionally capped by odd_divisor_cutoff - 1. Requires h >= 2.
std::int64_t conjecture_value(const Group& g, std::int64_t m, std::int64_t h);

struct BoundReport {
  Group group;
  std::int64_t m = 0;
  std::int64_t h = 0;
  std::int64_t u_value = 0;
  std::int64_t u_pm_value = 0;
  std::optional<std::int64_t> d_m;
  std::optional<std::int64_t> conjecture;  ///< absent for h < 2
  std::int64_t argmin_d = 0;
  std::int64_t argmin_d_constrained = 0;
};

BoundReport bound_report(const Group& g, std::int64_t m, std::int64_t h);

}  // namespace sigma
