#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sigma/element_set.hpp"
#include "sigma/error.hpp"
#include "sigma/group.hpp"
#include "sigma/sumset.hpp"

namespace sigma {

enum class SearchMode { Restricted, FullOracle, Formula };

std::string_view to_string(SearchMode mode) noexcept;

/// Sizes of the symmetric, near-symmetric and asymmetric m-subset families.
struct ClassCounts {
  std::uint64_t symmetric = 0;
  std::uint64_t near_symmetric = 0;
  std::uint64_t asymmetric = 0;

  /// Saturates at UINT64_MAX.
  std::uint64_t total() const noexcept;
};

struct SearchOutcome {
  Group group;
  std::int64_t m = 0;
  std::int64_t h = 0;
  std::int64_t value = 0;
  ElementSet witness;
  SymmetryClass witness_class = SymmetryClass::Other;
  SearchMode mode = SearchMode::Restricted;
  std::uint64_t explored = 0;
  std::optional<ClassCounts> classes;  ///< restricted searches only
};

struct SearchOptions {
  unsigned workers = 1;
  std::uint64_t budget = kDefaultBudget;
  /// Stop as soon as a set meets the proven lower bound u(n, m, h).
  bool stop_at_lower_bound = true;
};

/// C(n, k), saturating at UINT64_MAX.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept;

ClassCounts count_restricted_candidates(const Group& g, std::int64_t m);

/**
 * Minimum of |h±A| over the symmetric, near-symmetric and asymmetric
 * m-subsets of G, which equals the minimum over all m-subsets.
 *
 * Candidates are generated from the inverse-pair structure of G, never by
 * filtering raw subsets. The enumeration is split into ordered tasks; the
 * reported witness is the first minimizer in that order, and the explored
 * count is taken along the same order, so results do not depend on the
 * worker count. Throws BudgetExceeded when the candidate count is above the
 * budget and InvalidArgument when m lies outside [1, |G|].
 */
SearchOutcome rho_pm_restricted(const Group& g, std::int64_t m, std::int64_t h, const SearchOptions& options = {});

/// Same as rho_pm_restricted but over one family only. Throws InvalidArgument
/// when the family is empty or `family` is SymmetryClass::Other.
SearchOutcome rho_pm_over_class(const Group& g, std::int64_t m, std::int64_t h, SymmetryClass family,
                                const SearchOptions& options = {});

/// Minimum of |h±A| over every m-subset. Refuses when C(|G|, m) > budget.
SearchOutcome rho_pm_oracle(const Group& g, std::int64_t m, std::int64_t h, const SearchOptions& options = {});

/// Minimum of |hA| over every m-subset. Refuses when C(|G|, m) > budget.
SearchOutcome rho_oracle(const Group& g, std::int64_t m, std::int64_t h, const SearchOptions& options = {});

struct SurveyRow {
  Group group;
  std::int64_t m = 0;
  std::int64_t h = 0;
  std::int64_t rho = 0;
  std::optional<std::int64_t> rho_pm;  ///< absent when the search was refused
  std::int64_t u_pm = 0;
  std::optional<std::int64_t> d_m;
  std::optional<std::int64_t> conjecture;  ///< absent for h < 2
  bool match_rho = false;
  bool match_conjecture = false;
  std::string error;
};

/// One row per (G, m, h). An empty m_values means every m in [1, |G|];
/// values of m above |G| are skipped. Budget refusals become rows with an
/// error and no rho_pm; the sweep never aborts. Requires h >= 1.
std::vector<SurveyRow> survey(std::span<const Group> groups, std::span<const std::int64_t> m_values,
                              std::span<const std::int64_t> h_values, const SearchOptions& options = {});

/// Semicolon-separated survey format with a header line.
std::string survey_csv(std::span<const SurveyRow> rows);

}  // namespace sigma
