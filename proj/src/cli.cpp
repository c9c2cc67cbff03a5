#include "sigma/cli.hpp"

#include <CLI11.hpp>
#include <charconv>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>

#include "sigma/bounds.hpp"
#include "sigma/constructions.hpp"
#include "sigma/search.hpp"
#include "sigma/serialize.hpp"
#include "sigma/verify.hpp"

namespace sigma::cli {

namespace {

using nlohmann::json;

constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::vector<std::string> groups;
  std::string m;
  std::string h = "2";
  std::string mode = "both";
  std::int64_t d = 0;
  std::string construction;
  std::string check;
  std::int64_t max_order = 0;
  std::uint64_t budget = kDefaultBudget;
  unsigned workers = 1;
  std::string format = "json";
  std::string out_path;
};

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
    throw InvalidArgument("expected an integer, got '" + std::string(text) + "'");
  }
  return v;
}

std::int64_t single(const std::string& text, const char* flag) {
  if (text.empty()) throw InvalidArgument(std::string("missing ") + flag);
  const auto values = parse_range(text);
  if (values.size() != 1) throw InvalidArgument(std::string(flag) + " takes a single value here");
  return values.front();
}

std::int64_t fold(const RunConfig& c) {
  const auto h = single(c.h, "--h");
  if (h < 0 || h > kMaxFold) throw InvalidArgument("--h must lie in [0, 64]");
  return h;
}

std::vector<std::int64_t> folds(const RunConfig& c) {
  auto hs = parse_range(c.h);
  for (const auto h : hs)
    if (h < 1 || h > kMaxFold) throw InvalidArgument("--h values must lie in [1, 64]");
  return hs;
}

Group one_group(const RunConfig& c) {
  if (c.groups.size() != 1) throw InvalidArgument("exactly one --group is required");
  return Group::parse(c.groups.front());
}

SearchOptions search_options(const RunConfig& c) {
  SearchOptions o;
  o.budget = c.budget;
  o.workers = c.workers;
  return o;
}

void require_json(const RunConfig& c) {
  if (c.format != "json") throw InvalidArgument("this command only emits json");
}

// Recomputes a witness's signed sumset; emitted values must reproduce.
std::int64_t achieved(const Group& g, const ElementSet& w, std::int64_t h) {
  return static_cast<std::int64_t>(fold_signed_sumset(g, w, static_cast<int>(h)).size());
}

int cmd_compute(const RunConfig& c, std::ostream& out) {
  require_json(c);
  const Group g = one_group(c);
  const auto m = single(c.m, "--m");
  const auto h = fold(c);
  if (c.mode != "formula" && c.mode != "search" && c.mode != "both") throw InvalidArgument("--mode must be formula, search or both");
  if (m < 1 || m > g.order()) throw InvalidArgument("--m must lie in [1, |G|]");

  json doc = {{"v", kSchemaVersion}, {"command", "compute"}, {"group", g.to_string()}, {"m", m}, {"h", h}, {"mode", c.mode}};
  std::optional<BoundReport> bounds;
  if (h >= 1) {
    bounds = bound_report(g, m, h);
    doc["rho"] = bounds->u_value;
  } else {
    doc["rho"] = 1;
  }
  if (c.mode != "search") {
    if (!bounds) throw InvalidArgument("formula bounds need h >= 1");
    doc["bounds"] = to_json(*bounds);
    doc["u"] = bounds->u_value;
    doc["u_pm"] = bounds->u_pm_value;
    doc["conjecture"] = bounds->conjecture ? json(*bounds->conjecture) : json();
  }
  if (c.mode != "formula") {
    const auto outcome = rho_pm_restricted(g, m, h, search_options(c));
    if (achieved(g, outcome.witness, h) != outcome.value) throw std::logic_error("witness does not reproduce its value");
    doc["search"] = to_json(outcome);
    doc["rho_pm"] = outcome.value;
    doc["match_rho"] = outcome.value == doc["rho"].get<std::int64_t>();
    if (bounds && bounds->conjecture) {
      doc["conjecture"] = *bounds->conjecture;
      doc["match"] = outcome.value == *bounds->conjecture;
    }
  }
  out << doc.dump(2) << '\n';
  return kPass;
}

int cmd_witness(const RunConfig& c, std::ostream& out) {
  require_json(c);
  const Group g = one_group(c);
  const auto h = fold(c);
  if (h < 1) throw InvalidArgument("witness constructions need h >= 1");
  json doc = {{"v", kSchemaVersion}, {"command", "witness"}, {"construction", c.construction}, {"group", g.to_string()}, {"h", h}};
  ElementSet set;
  if (c.construction == "cyclic-R") {
    if (!g.is_cyclic()) throw InvalidArgument("cyclic-R needs a cyclic group");
    const auto m = single(c.m, "--m");
    const auto w = cyclic_symmetric_witness(g.order(), m, c.d, h);
    doc["m"] = m;
    doc["params"] = to_json(w.params);
    doc["bound"] = divisor_bound(m, h, c.d);
    set = w.set;
  } else if (c.construction == "product") {
    const auto parts = parse_range(c.m);
    const auto w = product_witness(g, parts, h);
    doc["m"] = parts;
    auto factors = json::array();
    for (const auto& f : w.factors) factors.push_back(to_json(f.params));
    doc["factors"] = factors;
    doc["bound"] = w.bound;
    set = w.set;
  } else if (c.construction == "asymmetric-half") {
    const auto m = single(c.m, "--m");
    set = asymmetric_half_witness(g, m, c.d);
    doc["m"] = m;
    doc["d"] = c.d;
    doc["bound"] = c.d - 1;
  } else {
    throw InvalidArgument("--construction must be cyclic-R, product or asymmetric-half");
  }
  doc["witness"] = set_to_json(g, set);
  doc["size"] = set.size();
  doc["class"] = std::string(to_string(classify_symmetry(g, set)));
  doc["achieved"] = achieved(g, set, h);
  out << doc.dump(2) << '\n';
  return kPass;
}

int cmd_survey(const RunConfig& c, std::ostream& out) {
  std::vector<Group> groups;
  for (const auto& s : c.groups) groups.push_back(Group::parse(s));
  if (c.max_order > 0) {
    auto more = groups_up_to(c.max_order);
    groups.insert(groups.end(), more.begin(), more.end());
  }
  if (groups.empty()) throw InvalidArgument("survey needs --group or --max-order");
  const auto ms = c.m.empty() ? std::vector<std::int64_t>{} : parse_range(c.m);
  const auto rows = survey(groups, ms, folds(c), search_options(c));
  if (c.format == "csv") {
    out << survey_csv(rows);
  } else if (c.format == "json") {
    json doc = {{"v", kSchemaVersion}, {"command", "survey"}, {"rows", json::array()}};
    for (const auto& r : rows) doc["rows"].push_back(to_json(r));
    out << doc.dump(2) << '\n';
  } else {
    throw InvalidArgument("--format must be json or csv");
  }
  return kPass;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  require_json(c);
  if (c.max_order < 2) throw InvalidArgument("verify needs --max-order >= 2");
  VerifyConfig config;
  config.max_order = c.max_order;
  config.h_values = folds(c);
  if (!c.m.empty()) config.m_values = parse_range(c.m);
  config.search = search_options(c);
  const auto report = run_check(c.check, config);
  json doc = {{"v", kSchemaVersion},
              {"command", "verify"},
              {"check", report.check},
              {"max_order", c.max_order},
              {"passed", report.passed},
              {"instances", report.instances},
              {"failure_count", report.failure_count},
              {"failures", report.failures},
              {"notes", report.notes}};
  out << doc.dump(2) << '\n';
  return report.passed ? kPass : kVerificationFailed;
}

std::uint64_t default_budget() {
  if (const char* env = std::getenv("SIGMA_SUMSET_BUDGET"); env && *env) {
    const auto v = parse_int(env);
    if (v < 1) throw InvalidArgument("SIGMA_SUMSET_BUDGET must be positive");
    return static_cast<std::uint64_t>(v);
  }
  return kDefaultBudget;
}

}  // namespace

std::vector<std::int64_t> parse_range(std::string_view text) {
  std::vector<std::int64_t> values;
  while (true) {
    const auto comma = text.find(',');
    const std::string_view item = text.substr(0, comma);
    if (const auto dots = item.find(".."); dots != std::string_view::npos) {
      const auto lo = parse_int(item.substr(0, dots));
      const auto hi = parse_int(item.substr(dots + 2));
      if (hi < lo) throw InvalidArgument("empty range '" + std::string(item) + "'");
      if (hi - lo > kMaxOrder) throw InvalidArgument("range too long");
      for (auto v = lo; v <= hi; ++v) values.push_back(v);
    } else {
      values.push_back(parse_int(item));
    }
    if (comma == std::string_view::npos) break;
    text.remove_prefix(comma + 1);
  }
  return values;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sumsets and signed sumsets in finite abelian groups"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  RunConfig c;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--group", c.groups, "Invariant factors, e.g. 3,3 (repeatable for survey)");
    sub->add_option("--m", c.m, "Set size, list or range (a..b)");
    sub->add_option("--h", c.h, "Fold, list or range")->capture_default_str();
    sub->add_option("--budget", c.budget, "Maximum number of evaluated sets (default $SIGMA_SUMSET_BUDGET or 1e7)")
        ->check(CLI::PositiveNumber);
    sub->add_option("--workers", c.workers, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("--format", c.format, "json or csv");
    sub->add_option("--out", c.out_path, "Write output to this file");
  };

  auto* compute = app.add_subcommand("compute", "Bounds and exhaustive minimum for one instance");
  common(compute);
  compute->add_option("--mode", c.mode, "formula, search or both")->capture_default_str();

  auto* witness = app.add_subcommand("witness", "Build an explicit witness set");
  common(witness);
  witness->add_option("--construction", c.construction, "cyclic-R, product or asymmetric-half")->required();
  witness->add_option("--d", c.d, "Divisor used by the construction");

  auto* sweep = app.add_subcommand("survey", "Tabulate formulas and searches over many instances");
  common(sweep);
  sweep->add_option("--max-order", c.max_order, "Include every group of order up to this");

  auto* verify = app.add_subcommand("verify", "Run a named verification suite");
  common(verify);
  verify->add_option("--check", c.check, "symmetry, cyclic, upm-equality, conjecture, no-p2-subgroup, constructions")
      ->required();
  verify->add_option("--max-order", c.max_order, "Largest group order to cover")->required();

  std::vector<const char*> argv{"sigma-sumset"};
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    c.budget = default_budget();
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsageError;
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
  if (sweep->parsed() && sweep->get_option("--format")->count() == 0) c.format = "csv";

  std::ofstream file;
  std::ostream* sink = &out;
  if (!c.out_path.empty()) {
    file.open(c.out_path);
    if (!file) {
      err << "error: cannot open " << c.out_path << '\n';
      return kUsageError;
    }
    sink = &file;
  }

  try {
    if (compute->parsed()) return cmd_compute(c, *sink);
    if (witness->parsed()) return cmd_witness(c, *sink);
    if (sweep->parsed()) return cmd_survey(c, *sink);
    return cmd_verify(c, *sink);
  } catch (const InvalidArgument& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    err << "budget: " << e.what() << '\n';
    return kBudgetRefused;
  }
}

}  // namespace sigma::cli
