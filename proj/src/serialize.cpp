#include "sigma/serialize.hpp"

namespace sigma {

namespace {

nlohmann::json optional_int(const std::optional<std::int64_t>& v) { return v ? nlohmann::json(*v) : nlohmann::json(); }

}  // namespace

nlohmann::json set_to_json(const Group& g, const ElementSet& s) {
  auto out = nlohmann::json::array();
  s.for_each([&](Index x) { out.push_back(g.element(x).coords); });
  return out;
}

nlohmann::json to_json(const BoundReport& r) {
  return {
      {"group", r.group.to_string()},
      {"m", r.m},
      {"h", r.h},
      {"u_value", r.u_value},
      {"u_pm_value", r.u_pm_value},
      {"d_m", optional_int(r.d_m)},
      {"conjecture_value", optional_int(r.conjecture)},
      {"argmin_d", r.argmin_d},
      {"argmin_d_constrained", r.argmin_d_constrained},
  };
}

nlohmann::json to_json(const SearchOutcome& o) {
  nlohmann::json j = {
      {"group", o.group.to_string()},
      {"m", o.m},
      {"h", o.h},
      {"value", o.value},
      {"witness", set_to_json(o.group, o.witness)},
      {"witness_class", std::string(to_string(o.witness_class))},
      {"mode", std::string(to_string(o.mode))},
      {"explored", o.explored},
  };
  if (o.classes) {
    j["classes"] = {
        {"symmetric", o.classes->symmetric},
        {"near_symmetric", o.classes->near_symmetric},
        {"asymmetric", o.classes->asymmetric},
    };
  }
  return j;
}

nlohmann::json to_json(const CyclicWitnessParams& p) {
  return {
      {"n", p.n},   {"d", p.d},   {"m", p.m},   {"a", p.a},
      {"b", p.b},   {"c", p.c},   {"n0", p.n0}, {"d0", p.d0},
      {"m0", p.m0}, {"e", optional_int(p.e)}, {"H_order", p.subgroup_order}, {"case", p.construction_case},
  };
}

nlohmann::json to_json(const SurveyRow& r) {
  nlohmann::json j = {
      {"group", r.group.to_string()},
      {"m", r.m},
      {"h", r.h},
      {"rho", r.rho},
      {"rho_pm", optional_int(r.rho_pm)},
      {"u_pm", r.u_pm},
      {"d_m", optional_int(r.d_m)},
      {"conjecture", optional_int(r.conjecture)},
      {"match_rho", r.match_rho},
      {"match_conjecture", r.match_conjecture},
  };
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

}  // namespace sigma
