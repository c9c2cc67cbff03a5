#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sigma/search.hpp"

namespace sigma {

struct VerifyConfig {
  std::int64_t max_order = 24;
  std::vector<std::int64_t> h_values{2, 3};
  /// Empty means the check's default m range.
  std::vector<std::int64_t> m_values;
  SearchOptions search;
};

struct VerifyReport {
  std::string check;
  bool passed = true;
  std::uint64_t instances = 0;
  std::uint64_t failure_count = 0;
  std::vector<std::string> failures;  ///< first few counterexamples
  std::vector<std::string> notes;

  void fail(std::string message);
};

/// Every abelian group of order 2..max_order.
std::vector<Group> groups_up_to(std::int64_t max_order);

/// Restricted search agrees with the all-subsets oracle (default m <= 5).
VerifyReport verify_symmetry(const VerifyConfig& config);
/// Signed minimum of Z_n equals the plain minimum for n <= max_order.
VerifyReport verify_cyclic(const VerifyConfig& config);
/// Divisor and factorwise forms of the signed upper bound agree.
VerifyReport verify_upm_equality(const VerifyConfig& config);
/// Restricted search equals the conjectured value (h >= 2 only).
VerifyReport verify_conjecture(const VerifyConfig& config);
/// Signed and plain minima agree for groups without an odd Z_p^2 subgroup.
VerifyReport verify_no_odd_square(const VerifyConfig& config);
/// Cyclic witnesses are symmetric of size d*ceil(m/d), beat divisor_bound,
/// and their best choice over d reaches the plain minimum. h_values are
/// ignored in favour of 1..max(h_values) so every fold is covered.
VerifyReport verify_constructions(const VerifyConfig& config);

/// Names accepted by run_check.
const std::vector<std::string_view>& check_names();

/// Dispatches by name; throws InvalidArgument for an unknown check.
VerifyReport run_check(std::string_view name, const VerifyConfig& config);

}  // namespace sigma
