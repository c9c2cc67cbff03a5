#include "sigma/verify.hpp"

#include <algorithm>
#include <sstream>

#include "sigma/bounds.hpp"
#include "sigma/constructions.hpp"

namespace sigma {

namespace {

constexpr std::size_t kKeptFailures = 20;

std::string instance(const Group& g, std::int64_t m, std::int64_t h) {
  std::ostringstream out;
  out << "G=(" << g.to_string() << ") m=" << m << " h=" << h;
  return out.str();
}

std::vector<std::int64_t> m_range(const VerifyConfig& c, std::int64_t n, std::int64_t default_max) {
  std::vector<std::int64_t> ms;
  if (c.m_values.empty()) {
    for (std::int64_t m = 1; m <= std::min(n, default_max); ++m) ms.push_back(m);
  } else {
    for (const auto m : c.m_values)
      if (m >= 1 && m <= n) ms.push_back(m);
  }
  return ms;
}

// Runs restricted search and compares with `expected`; budget refusals fail
// the check since a skipped instance proves nothing.
void compare_restricted(VerifyReport& report, const Group& g, std::int64_t m, std::int64_t h, std::int64_t expected,
                        std::string_view what, const SearchOptions& options) {
  ++report.instances;
  try {
    const auto outcome = rho_pm_restricted(g, m, h, options);
    if (outcome.value != expected) {
      std::ostringstream out;
      out << instance(g, m, h) << ": restricted search " << outcome.value << " != " << what << ' ' << expected;
      report.fail(out.str());
    }
  } catch (const BudgetExceeded& e) {
    report.fail(instance(g, m, h) + ": " + e.what());
  }
}

}  // namespace

void VerifyReport::fail(std::string message) {
  passed = false;
  ++failure_count;
  if (failures.size() < kKeptFailures) failures.push_back(std::move(message));
}

std::vector<Group> groups_up_to(std::int64_t max_order) {
  std::vector<Group> out;
  for (std::int64_t n = 2; n <= max_order; ++n)
    for (auto& g : abelian_groups_of_order(n)) out.push_back(std::move(g));
  return out;
}

VerifyReport verify_symmetry(const VerifyConfig& config) {
  VerifyReport report{"symmetry", true, 0, 0, {}, {}};
  for (const Group& g : groups_up_to(config.max_order)) {
    for (const auto m : m_range(config, g.order(), 5)) {
      for (const auto h : config.h_values) {
        ++report.instances;
        try {
          const auto oracle = rho_pm_oracle(g, m, h, config.search);
          const auto restricted = rho_pm_restricted(g, m, h, config.search);
          if (oracle.value != restricted.value) {
            std::ostringstream out;
            out << instance(g, m, h) << ": oracle " << oracle.value << " != restricted " << restricted.value;
            report.fail(out.str());
          }
        } catch (const BudgetExceeded& e) {
          report.fail(instance(g, m, h) + ": " + e.what());
        }
      }
    }
  }
  return report;
}

VerifyReport verify_cyclic(const VerifyConfig& config) {
  VerifyReport report{"cyclic", true, 0, 0, {}, {}};
  for (std::int64_t n = 2; n <= config.max_order; ++n) {
    const Group g = Group::cyclic(n);
    for (const auto m : m_range(config, n, n))
      for (const auto h : config.h_values)
        compare_restricted(report, g, m, h, min_divisor_bound(n, m, h).value, "plain minimum", config.search);
  }
  return report;
}

VerifyReport verify_upm_equality(const VerifyConfig& config) {
  VerifyReport report{"upm-equality", true, 0, 0, {}, {}};
  for (const Group& g : groups_up_to(config.max_order)) {
    for (const auto m : m_range(config, g.order(), g.order())) {
      for (const auto h : config.h_values) {
        ++report.instances;
        const auto by_divisors = signed_upper_bound(g, m, h).value;
        const auto by_factors = signed_upper_bound_by_factors(g, m, h).value;
        if (by_divisors != by_factors) {
          std::ostringstream out;
          out << instance(g, m, h) << ": divisor form " << by_divisors << " != factorwise form " << by_factors;
          report.fail(out.str());
        }
      }
    }
  }
  return report;
}

VerifyReport verify_conjecture(const VerifyConfig& config) {
  VerifyReport report{"conjecture", true, 0, 0, {}, {}};
  for (const Group& g : groups_up_to(config.max_order))
    for (const auto m : m_range(config, g.order(), g.order()))
      for (const auto h : config.h_values) {
        if (h < 2) continue;
        compare_restricted(report, g, m, h, conjecture_value(g, m, h), "conjectured value", config.search);
      }
  return report;
}

VerifyReport verify_no_odd_square(const VerifyConfig& config) {
  VerifyReport report{"no-p2-subgroup", true, 0, 0, {}, {}};
  for (const Group& g : groups_up_to(config.max_order)) {
    if (has_odd_square_subgroup(g)) continue;
    for (const auto m : m_range(config, g.order(), g.order()))
      for (const auto h : config.h_values)
        compare_restricted(report, g, m, h, rho_formula(g, m, h), "plain minimum", config.search);
  }
  return report;
}

VerifyReport verify_constructions(const VerifyConfig& config) {
  VerifyReport report{"constructions", true, 0, 0, {}, {}};
  const std::int64_t max_h = config.h_values.empty()
                                 ? 6
                                 : std::max<std::int64_t>(1, *std::max_element(config.h_values.begin(), config.h_values.end()));
  for (std::int64_t n = 2; n <= config.max_order; ++n) {
    const Group zn = Group::cyclic(n);
    const auto ds = divisors(n);
    // best[m][h]: smallest |hR| over all divisors, for the minimality check.
    std::vector<std::vector<std::int64_t>> best(static_cast<std::size_t>(n) + 1,
                                                std::vector<std::int64_t>(static_cast<std::size_t>(max_h) + 1, n + 1));
    for (const auto d : ds) {
      ElementSet cached;
      std::vector<std::int64_t> fold_sizes;
      for (std::int64_t m = 1; m <= n; ++m) {
        const auto witness = cyclic_symmetric_witness(n, m, d, 1);
        const ElementSet& r = witness.set;
        if (r != cached) {
          // The construction depends on m only through ceil(m/d); folds are
          // recomputed whenever the set changes.
          cached = r;
          fold_sizes.assign(static_cast<std::size_t>(max_h) + 1, 0);
          ElementSet folded = r;
          fold_sizes[1] = static_cast<std::int64_t>(folded.size());
          for (std::int64_t h = 2; h <= max_h; ++h) {
            folded = sumset(zn, folded, r);
            fold_sizes[static_cast<std::size_t>(h)] = static_cast<std::int64_t>(folded.size());
          }
        }
        const auto blocks = (m + d - 1) / d;
        for (std::int64_t h = 1; h <= max_h; ++h) {
          ++report.instances;
          const auto size = fold_sizes[static_cast<std::size_t>(h)];
          const bool ok = negated(zn, r) == r && static_cast<std::int64_t>(r.size()) == d * blocks &&
                          static_cast<std::int64_t>(r.size()) >= m && size <= divisor_bound(m, h, d);
          if (!ok) {
            std::ostringstream out;
            out << "n=" << n << " m=" << m << " d=" << d << " h=" << h << ": |R|=" << r.size() << " |hR|=" << size
                << " bound " << divisor_bound(m, h, d);
            report.fail(out.str());
          }
          auto& slot = best[static_cast<std::size_t>(m)][static_cast<std::size_t>(h)];
          slot = std::min(slot, size);
        }
      }
    }
    for (std::int64_t m = 1; m <= n; ++m)
      for (std::int64_t h = 1; h <= max_h; ++h) {
        const auto u = min_divisor_bound(n, m, h).value;
        if (best[static_cast<std::size_t>(m)][static_cast<std::size_t>(h)] != u) {
          std::ostringstream out;
          out << "n=" << n << " m=" << m << " h=" << h << ": best witness fold "
              << best[static_cast<std::size_t>(m)][static_cast<std::size_t>(h)] << " != plain minimum " << u;
          report.fail(out.str());
        }
      }
  }
  return report;
}

const std::vector<std::string_view>& check_names() {
  static const std::vector<std::string_view> names{"symmetry",    "cyclic",         "upm-equality",
                                                   "conjecture",  "no-p2-subgroup", "constructions"};
  return names;
}

VerifyReport run_check(std::string_view name, const VerifyConfig& config) {
  if (name == "symmetry") return verify_symmetry(config);
  if (name == "cyclic") return verify_cyclic(config);
  if (name == "upm-equality") return verify_upm_equality(config);
  if (name == "conjecture") return verify_conjecture(config);
  if (name == "no-p2-subgroup") return verify_no_odd_square(config);
  if (name == "constructions") return verify_constructions(config);
  throw InvalidArgument("unknown check '" + std::string(name) + "'");
}

}  // namespace sigma
