#pragma once

#include <json.hpp>

#include "sigma/bounds.hpp"
#include "sigma/constructions.hpp"
#include "sigma/search.hpp"

namespace sigma {

/// Sorted list of coordinate tuples.
nlohmann::json set_to_json(const Group& g, const ElementSet& s);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const SearchOutcome& o);
nlohmann::json to_json(const CyclicWitnessParams& p);
nlohmann::json to_json(const SurveyRow& r);

}  // namespace sigma
