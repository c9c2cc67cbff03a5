#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "sigma/element_set.hpp"
#include "sigma/group.hpp"

namespace sigma {

/**
 * Parameters of the symmetric cyclic witness R ⊆ Z_n for a divisor d.
 *
 * With n = 2^a n0, d = 2^b d0 and ceil(m/d) = 2^c m0 (n0, d0, m0 odd):
 *  - case 1 (b + c <= a): R is the union of cosets i + H, |i| <= m0/2,
 *    where |H| = 2^c d;
 *  - case 2 (b + c > a): R is the union of cosets floor(e/2) + i + H for
 *    -2^(b+c-a-1) m0 < i <= 2^(b+c-a-1) m0, where |H| = 2^a d0 and e = n0/d0.
 */
struct CyclicWitnessParams {
  std::int64_t n = 0, d = 0, m = 0;
  std::int64_t a = 0, b = 0, c = 0;
  std::int64_t n0 = 0, d0 = 0, m0 = 0;
  std::optional<std::int64_t> e;  ///< case 2 only
  std::int64_t subgroup_order = 0;
  int construction_case = 1;
};

struct CyclicWitness {
  CyclicWitnessParams params;
  ElementSet set;
};

/// Symmetric R ⊆ Z_n with |R| = d * ceil(m/d) >= m and |hR| <= divisor_bound(m, h, d).
/// Throws InvalidArgument unless n >= 2, d | n, 1 <= m <= n and h >= 1.
CyclicWitness cyclic_symmetric_witness(std::int64_t n, std::int64_t m, std::int64_t d, std::int64_t h);

struct ProductWitness {
  ElementSet set;
  std::vector<CyclicWitness> factors;
  std::int64_t bound = 1;  ///< prod min_divisor_bound(n_i, m_i, h)
};

/// Product of per-factor cyclic witnesses built at each factor's minimizing
/// divisor. The result is symmetric with |h±A| <= bound.
ProductWitness product_witness(const Group& g, std::span<const std::int64_t> part_sizes, std::int64_t h);

/// m elements of a subgroup H of odd order d >= 2m + 1, one from each of the
/// first m inverse pairs of H \ {0} (the lower index of each pair). Then
/// 0 is not in 2±A and 2±A ⊆ H \ {0}.
ElementSet asymmetric_half_witness(const Group& g, std::int64_t m, std::int64_t d);

/// Shrinks a witness to exactly m elements: whole inverse pairs with the
/// largest indices go first, then single elements from the top, preferring
/// self-inverse ones so remaining pairs stay intact.
ElementSet trim_witness(const Group& g, const ElementSet& set, std::size_t m);

}  // namespace sigma
