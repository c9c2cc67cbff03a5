#include "sigma/search.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

#include "sigma/bounds.hpp"

namespace sigma {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();
constexpr std::size_t kNoTask = std::numeric_limits<std::size_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  return __builtin_mul_overflow(a, b, &out) ? kSaturated : out;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  return __builtin_add_overflow(a, b, &out) ? kSaturated : out;
}

struct PairStructure {
  std::vector<Index> self_inverse;
  std::vector<std::array<Index, 2>> pairs;  // {x, -x} with x < -x
};

PairStructure pair_structure(const Group& g) {
  PairStructure ps;
  for (Index x = 0; x < static_cast<Index>(g.order()); ++x) {
    const Index y = g.negate(x);
    if (y == x) {
      ps.self_inverse.push_back(x);
    } else if (x < y) {
      ps.pairs.push_back({x, y});
    }
  }
  return ps;
}

// Calls f(indices) for every k-subset of [begin, end) in lexicographic order,
// stopping early when f returns false. Returns false iff stopped.
template <class F>
bool for_each_combination(std::size_t begin, std::size_t end, std::size_t k, F&& f) {
  std::vector<std::size_t> idx(k);
  if (k > end - std::min(begin, end)) return true;
  for (std::size_t i = 0; i < k; ++i) idx[i] = begin + i;
  while (true) {
    if (!f(std::span<const std::size_t>(idx))) return false;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == end - k + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// A visitor receives a candidate set and returns false to stop the task.
using Visitor = std::function<bool(std::span<const Index>)>;
// A task enumerates its slice of the candidate space in a fixed order and
// returns false when the visitor stopped it.
using Task = std::function<bool(const Visitor&)>;

void add_symmetric_tasks(std::vector<Task>& tasks, std::shared_ptr<const PairStructure> ps, std::size_t m,
                         bool with_extra) {
  const std::size_t q = ps->self_inverse.size(), p = ps->pairs.size();
  for (std::size_t k = 0; 2 * k <= m && k <= p; ++k) {
    const std::size_t s = m - 2 * k;
    if (s > q) continue;
    const std::size_t first_end = k == 0 ? 1 : p - k + 1;
    for (std::size_t f = 0; f < first_end; ++f) {
      tasks.push_back([ps, s, k, f, q, p, with_extra](const Visitor& visit) {
        std::vector<Index> set;
        std::vector<bool> used(p, false);
        auto with_pairs = [&](std::span<const std::size_t> rest) {
          std::vector<std::size_t> chosen;
          if (k > 0) chosen.push_back(f);
          chosen.insert(chosen.end(), rest.begin(), rest.end());
          return for_each_combination(0, q, s, [&](std::span<const std::size_t> selfs) {
            set.clear();
            for (const auto i : selfs) set.push_back(ps->self_inverse[i]);
            for (const auto j : chosen) {
              set.push_back(ps->pairs[j][0]);
              set.push_back(ps->pairs[j][1]);
            }
            if (!with_extra) return visit(set);
            for (const auto j : chosen) used[j] = true;
            bool go = true;
            for (std::size_t j = 0; go && j < p; ++j) {
              if (used[j]) continue;
              for (int o = 0; go && o < 2; ++o) {
                set.push_back(ps->pairs[j][static_cast<std::size_t>(o)]);
                go = visit(set);
                set.pop_back();
              }
            }
            for (const auto j : chosen) used[j] = false;
            return go;
          });
        };
        if (k == 0) return with_pairs({});
        return for_each_combination(f + 1, p, k - 1, with_pairs);
      });
    }
  }
}

void add_asymmetric_tasks(std::vector<Task>& tasks, std::shared_ptr<const PairStructure> ps, std::size_t m) {
  const std::size_t p = ps->pairs.size();
  if (m > p) return;
  for (std::size_t f = 0; f + m <= p; ++f) {
    tasks.push_back([ps, m, f, p](const Visitor& visit) {
      std::vector<Index> set(m);
      return for_each_combination(f + 1, p, m - 1, [&](std::span<const std::size_t> rest) {
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
          set[0] = ps->pairs[f][mask & 1U];
          for (std::size_t i = 0; i + 1 < m; ++i) set[i + 1] = ps->pairs[rest[i]][(mask >> (i + 1)) & 1U];
          if (!visit(set)) return false;
        }
        return true;
      });
    });
  }
}

struct TaskResult {
  std::uint64_t count = 0;
  std::size_t best = std::numeric_limits<std::size_t>::max();
  std::vector<Index> members;
  bool hit = false;
};

// Runs the ordered tasks over a worker pool and merges deterministically:
// the winner is the first task (in order) holding the smallest value; with
// early stopping, tasks after the first one to reach the bound are ignored.
template <class MakeEvaluator>
SearchOutcome run_tasks(const Group& g, std::int64_t m, std::int64_t h, const std::vector<Task>& tasks,
                        std::size_t lower_bound, const SearchOptions& options, MakeEvaluator make_evaluator) {
  std::vector<TaskResult> results(tasks.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{kNoTask};

  auto worker = [&] {
    auto evaluator = make_evaluator();
    while (true) {
      const std::size_t t = next.fetch_add(1);
      if (t >= tasks.size()) return;
      if (t > first_hit.load()) continue;
      TaskResult& r = results[t];
      tasks[t]([&](std::span<const Index> set) {
        if (t > first_hit.load(std::memory_order_relaxed)) return false;
        ++r.count;
        const std::size_t v = evaluator.size_of(set);
        if (v < r.best) {
          r.best = v;
          r.members.assign(set.begin(), set.end());
          std::sort(r.members.begin(), r.members.end());
        }
        if (options.stop_at_lower_bound && v <= lower_bound) {
          r.hit = true;
          std::size_t seen = first_hit.load();
          while (t < seen && !first_hit.compare_exchange_weak(seen, t)) {
          }
          return false;
        }
        return true;
      });
    }
  };

  const unsigned workers = std::max(1U, std::min<unsigned>(options.workers, static_cast<unsigned>(tasks.size())));
  if (workers == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned i = 0; i < workers; ++i) pool.emplace_back(worker);
  }

  SearchOutcome out{g, m, h, 0, {}, SymmetryClass::Other, SearchMode::Restricted, 0, std::nullopt};
  std::size_t winner = kNoTask;
  const std::size_t last = first_hit.load() == kNoTask ? tasks.size() : first_hit.load() + 1;
  for (std::size_t t = 0; t < last; ++t) {
    out.explored += results[t].count;
    if (winner == kNoTask || results[t].best < results[winner].best) winner = t;
  }
  if (winner == kNoTask || results[winner].best == std::numeric_limits<std::size_t>::max()) {
    throw InvalidArgument("no candidate sets to search");
  }
  out.value = static_cast<std::int64_t>(results[winner].best);
  out.witness = ElementSet(static_cast<std::size_t>(g.order()), results[winner].members);
  out.witness_class = classify_symmetry(g, out.witness);
  return out;
}

void require_size(const Group& g, std::int64_t m, std::int64_t h) {
  if (m < 1 || m > g.order()) throw InvalidArgument("m outside [1, |G|]");
  if (h < 0 || h > kMaxFold) throw InvalidArgument("h outside [0, 64]");
}

std::size_t lower_bound_for(const Group& g, std::int64_t m, std::int64_t h) {
  return h == 0 ? 1 : static_cast<std::size_t>(min_divisor_bound(g.order(), m, h).value);
}

SearchOutcome restricted(const Group& g, std::int64_t m, std::int64_t h, std::optional<SymmetryClass> family,
                         const SearchOptions& options) {
  require_size(g, m, h);
  const ClassCounts counts = count_restricted_candidates(g, m);
  std::uint64_t wanted = counts.total();
  if (family == SymmetryClass::Symmetric) wanted = counts.symmetric;
  if (family == SymmetryClass::NearSymmetric) wanted = counts.near_symmetric;
  if (family == SymmetryClass::Asymmetric) wanted = counts.asymmetric;
  if (wanted > options.budget) {
    throw BudgetExceeded("restricted search over " + g.to_string() + " with m = " + std::to_string(m) + " needs " +
                         (wanted == kSaturated ? std::string("more than 2^64") : std::to_string(wanted)) +
                         " evaluations, budget is " + std::to_string(options.budget));
  }

  auto ps = std::make_shared<const PairStructure>(pair_structure(g));
  const auto um = static_cast<std::size_t>(m);
  std::vector<Task> tasks;
  if (!family || family == SymmetryClass::Symmetric) add_symmetric_tasks(tasks, ps, um, false);
  // For m = 1 the near-symmetric and asymmetric families coincide; the
  // asymmetric enumeration covers them.
  if ((!family || family == SymmetryClass::NearSymmetric) && m >= 2) add_symmetric_tasks(tasks, ps, um - 1, true);
  if (!family || family == SymmetryClass::Asymmetric) add_asymmetric_tasks(tasks, ps, um);
  if (tasks.empty()) throw InvalidArgument("requested symmetry family has no " + std::to_string(m) + "-subsets");

  auto out = run_tasks(g, m, h, tasks, lower_bound_for(g, m, h), options,
                       [&] { return SignedSumsetEvaluator(g, static_cast<int>(h)); });
  out.mode = SearchMode::Restricted;
  out.classes = counts;
  return out;
}

std::vector<Task> all_subset_tasks(const Group& g, std::int64_t m, const SearchOptions& options) {
  const auto n = static_cast<std::size_t>(g.order());
  const auto um = static_cast<std::size_t>(m);
  const std::uint64_t total = binomial(n, um);
  if (total > options.budget) {
    throw BudgetExceeded("full search over " + g.to_string() + " with m = " + std::to_string(m) + " needs " +
                         (total == kSaturated ? std::string("more than 2^64") : std::to_string(total)) +
                         " evaluations, budget is " + std::to_string(options.budget));
  }
  std::vector<Task> tasks;
  for (std::size_t f = 0; f + um <= n; ++f) {
    tasks.push_back([n, um, f](const Visitor& visit) {
      std::vector<Index> set(um);
      set[0] = static_cast<Index>(f);
      return for_each_combination(f + 1, n, um - 1, [&](std::span<const std::size_t> rest) {
        for (std::size_t i = 0; i < rest.size(); ++i) set[i + 1] = static_cast<Index>(rest[i]);
        return visit(set);
      });
    });
  }
  return tasks;
}

}  // namespace

std::string_view to_string(SearchMode mode) noexcept {
  switch (mode) {
    case SearchMode::Restricted: return "restricted";
    case SearchMode::FullOracle: return "full-oracle";
    case SearchMode::Formula: return "formula";
  }
  return "restricted";
}

std::uint64_t ClassCounts::total() const noexcept { return sat_add(sat_add(symmetric, near_symmetric), asymmetric); }

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) noexcept {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > kSaturated) return kSaturated;
  }
  return static_cast<std::uint64_t>(r);
}

ClassCounts count_restricted_candidates(const Group& g, std::int64_t m) {
  if (m < 1 || m > g.order()) throw InvalidArgument("m outside [1, |G|]");
  const PairStructure ps = pair_structure(g);
  const std::uint64_t q = ps.self_inverse.size(), p = ps.pairs.size();
  const auto um = static_cast<std::uint64_t>(m);
  ClassCounts c;
  auto symmetric_sets = [&](std::uint64_t size, bool with_extra) {
    std::uint64_t total = 0;
    for (std::uint64_t k = 0; 2 * k <= size && k <= p; ++k) {
      const std::uint64_t s = size - 2 * k;
      if (s > q) continue;
      std::uint64_t ways = sat_mul(binomial(q, s), binomial(p, k));
      if (with_extra) ways = sat_mul(ways, 2 * (p - k));
      total = sat_add(total, ways);
    }
    return total;
  };
  c.symmetric = symmetric_sets(um, false);
  if (um >= 2) c.near_symmetric = symmetric_sets(um - 1, true);
  if (um <= p) c.asymmetric = um >= 64 ? kSaturated : sat_mul(binomial(p, um), std::uint64_t{1} << um);
  return c;
}

SearchOutcome rho_pm_restricted(const Group& g, std::int64_t m, std::int64_t h, const SearchOptions& options) {
  return restricted(g, m, h, std::nullopt, options);
}

SearchOutcome rho_pm_over_class(const Group& g, std::int64_t m, std::int64_t h, SymmetryClass family,
                                const SearchOptions& options) {
  if (family == SymmetryClass::Other) throw InvalidArgument("only the three restricted families can be searched");
  return restricted(g, m, h, family, options);
}

SearchOutcome rho_pm_oracle(const Group& g, std::int64_t m, std::int64_t h, const SearchOptions& options) {
  require_size(g, m, h);
  const auto tasks = all_subset_tasks(g, m, options);
  auto out = run_tasks(g, m, h, tasks, lower_bound_for(g, m, h), options,
                       [&] { return SignedSumsetEvaluator(g, static_cast<int>(h)); });
  out.mode = SearchMode::FullOracle;
  return out;
}

SearchOutcome rho_oracle(const Group& g, std::int64_t m, std::int64_t h, const SearchOptions& options) {
  require_size(g, m, h);
  const auto tasks = all_subset_tasks(g, m, options);
  auto out = run_tasks(g, m, h, tasks, lower_bound_for(g, m, h), options,
                       [&] { return SumsetEvaluator(g, static_cast<int>(h)); });
  out.mode = SearchMode::FullOracle;
  return out;
}

std::vector<SurveyRow> survey(std::span<const Group> groups, std::span<const std::int64_t> m_values,
                              std::span<const std::int64_t> h_values, const SearchOptions& options) {
  std::vector<SurveyRow> rows;
  for (const Group& g : groups) {
    std::vector<std::int64_t> ms(m_values.begin(), m_values.end());
    if (ms.empty())
      for (std::int64_t m = 1; m <= g.order(); ++m) ms.push_back(m);
    for (const std::int64_t m : ms) {
      if (m < 1 || m > g.order()) continue;
      for (const std::int64_t h : h_values) {
        SurveyRow row{g, m, h, 0, std::nullopt, 0, std::nullopt, std::nullopt, false, false, {}};
        row.rho = rho_formula(g, m, h);
        row.u_pm = signed_upper_bound(g, m, h).value;
        row.d_m = odd_divisor_cutoff(g, m);
        if (h >= 2) row.conjecture = conjecture_value(g, m, h);
        try {
          row.rho_pm = rho_pm_restricted(g, m, h, options).value;
          row.match_rho = *row.rho_pm == row.rho;
          row.match_conjecture = row.conjecture && *row.conjecture == *row.rho_pm;
        } catch (const BudgetExceeded& e) {
          row.error = e.what();
        }
        rows.push_back(std::move(row));
      }
    }
  }
  return rows;
}

std::string survey_csv(std::span<const SurveyRow> rows) {
  std::ostringstream out;
  out << "group;m;h;rho;rho_pm;u_pm;d_m;conjecture;match_rho;match_conjecture\n";
  auto opt = [](const std::optional<std::int64_t>& v, const char* missing) {
    return v ? std::to_string(*v) : std::string(missing);
  };
  for (const auto& r : rows) {
    out << r.group.to_string() << ';' << r.m << ';' << r.h << ';' << r.rho << ';'
        << opt(r.rho_pm, "budget") << ';' << r.u_pm << ';' << opt(r.d_m, "inf") << ';' << opt(r.conjecture, "")
        << ';' << (r.match_rho ? "true" : "false") << ';' << (r.match_conjecture ? "true" : "false") << '\n';
  }
  return out.str();
}

}  // namespace sigma
