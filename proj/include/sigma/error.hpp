#pragma once

#include <cstdint>
#include <stdexcept>

namespace sigma {

/// Raised when an argument violates an operation's precondition.
class InvalidArgument : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an exhaustive search would exceed its evaluation budget.
/// Searches refuse up front; they never truncate silently.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kMaxFold = 64;
inline constexpr std::int64_t kMaxOrder = std::int64_t{1} << 20;
inline constexpr std::uint64_t kDefaultBudget = 10'000'000;

}  // namespace sigma
